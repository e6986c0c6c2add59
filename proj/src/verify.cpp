#include "skeinlab/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "skeinlab/fusion.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/tl.hpp"

namespace skeinlab {

namespace {

using nlohmann::json;

LaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(-3, 3), coeff(-5, 5);
    const std::string vars[] = {"a", "z"};
    LaurentPoly p;
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        Monomial m;
        for (const auto& v : vars)
            if (int e = expo(rng); e != 0) m[v] = e;
        p.add_term(m, GaussInt(coeff(rng), coeff(rng)));
    }
    return p;
}

BraidWord random_braid(std::mt19937& rng, int strands, int len) {
    std::uniform_int_distribution<int> gen(1, strands - 1), sign(0, 1);
    BraidWord b{strands, {}};
    for (int k = 0; k < len; ++k) b.word.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return b;
}

// Runs a per-index check for i in [0, count) across all hardware threads and
// returns the number of failures.  `make_fn` is invoked once per worker to
// build that worker's (stateful, thread-local) check function.
template <typename MakeFn>
std::size_t parallel_count_failures(std::size_t count, MakeFn make_fn) {
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0}, failures{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&]() {
            auto fn = make_fn();
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                if (!fn(i)) failures.fetch_add(1);
        });
    for (auto& th : pool) th.join();
    return failures.load();
}

void add_check(SuiteResult& s, const std::string& name, bool pass,
               const std::string& detail = "") {
    s.checks.push_back({name, pass, detail});
}

// ---------------------------------------------------------------------------
// laurent suite
// ---------------------------------------------------------------------------

SuiteResult suite_laurent() {
    SuiteResult s{"laurent", {}};
    std::mt19937 rng(101);

    bool ring_ok = true, text_ok = true, json_ok = true;
    for (int it = 0; it < 200 && ring_ok && text_ok && json_ok; ++it) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
        ring_ok = ring_ok && (p + q) * r == p * r + q * r && p * q == q * p &&
                  (p - p).is_zero() && (p * q) * r == p * (q * r);
        text_ok = text_ok && parse_poly(format_poly(p)) == p;
        json_ok = json_ok && poly_from_json(poly_to_json(p)) == p;
    }
    add_check(s, "ring axioms on random polynomials", ring_ok);
    add_check(s, "text format round-trip", text_ok);
    add_check(s, "json round-trip", json_ok);

    LaurentPoly m = LaurentPoly::monomial("a", -2, GaussInt(0, 1));
    add_check(s, "unit-monomial inversion",
              m.is_invertible() && m * m.inverse() == LaurentPoly(1));

    // Substitution a -> i a is a ring homomorphism.
    bool subst_ok = true;
    for (int it = 0; it < 50 && subst_ok; ++it) {
        LaurentPoly p = random_poly(rng), q = random_poly(rng);
        auto f = [](const LaurentPoly& x) {
            return substitute_scaled(x, "a", GaussInt(0, 1), "a", 1);
        };
        subst_ok = f(p * q) == f(p) * f(q) && f(p + q) == f(p) + f(q);
    }
    add_check(s, "substitution is a ring homomorphism", subst_ok);
    return s;
}

// ---------------------------------------------------------------------------
// tl suite
// ---------------------------------------------------------------------------

SuiteResult suite_tl() {
    SuiteResult s{"tl", {}};
    const LaurentPoly a = LaurentPoly::monomial("a", 1);
    const LaurentPoly b = LaurentPoly::monomial("b", 1);
    const LaurentPoly delta = tl_delta(a, b);

    bool tl_rel = true;
    for (int n = 2; n <= 5 && tl_rel; ++n)
        for (int i = 1; i < n && tl_rel; ++i) {
            TLElement U = TLElement::basis(PlanarPairing::generator(n, i));
            tl_rel = tl_mul(U, U, delta) == U.scaled(delta);
            if (i + 1 < n) {
                TLElement V = TLElement::basis(PlanarPairing::generator(n, i + 1));
                tl_rel = tl_rel && tl_mul(tl_mul(U, V, delta), U, delta) == U;
            }
        }
    add_check(s, "Temperley-Lieb relations (n <= 5)", tl_rel);

    bool rep_ok = true;
    for (int n = 2; n <= 5; ++n) rep_ok = rep_ok && braid_relation_check(n, a, b).all();
    add_check(s, "zeta: braid relations, inverses, Hecke quadratic (n <= 5)", rep_ok);

    std::mt19937 rng(77);
    bool hom_ok = true;
    for (int it = 0; it < 30 && hom_ok; ++it) {
        BraidWord u = random_braid(rng, 4, it % 5), v = random_braid(rng, 4, (it + 2) % 5);
        BraidWord uv{4, u.word};
        uv.word.insert(uv.word.end(), v.word.begin(), v.word.end());
        hom_ok = zeta(uv, a, b) == tl_mul(zeta(u, a, b), zeta(v, a, b), delta);
    }
    add_check(s, "zeta is multiplicative over concatenation", hom_ok);

    add_check(s, "Markov trace of the identity",
              trace_closure(TLElement::identity(3), delta) == delta.pow(3));
    return s;
}

// ---------------------------------------------------------------------------
// skein suite
// ---------------------------------------------------------------------------

// Compares P(a,z) at (a,z) = (-A^3, A + A^-1) with the bracket value by
// clearing denominators: both sides are multiplied by (A + A^-1)^N.
bool specialization_matches(const MorseDiagram& d) {
    const LaurentPoly p = kauffman_poly(d, KauffmanVariant::Kauffman);
    const LaurentPoly bracket = two_term_state_sum(d, BracketParams::bracket());

    long min_z = 0;
    for (const auto& [m, c] : p.terms()) {
        auto it = m.find("z");
        if (it != m.end()) min_z = std::min(min_z, it->second);
    }
    const long N = -min_z;
    const LaurentPoly zpow = LaurentPoly::monomial("z", 1);
    LaurentPoly cleared = p * zpow.pow(N);  // polynomial in z now
    // z -> A + A^-1 term by term, a -> -A^3.
    LaurentPoly image;
    const LaurentPoly zsub = LaurentPoly::monomial("A", 1) + LaurentPoly::monomial("A", -1);
    for (const auto& [m, c] : cleared.terms()) {
        LaurentPoly t(c);
        for (const auto& [var, e] : m) {
            if (var == "a")
                t *= LaurentPoly::monomial("A", 3 * e, GaussInt(e % 2 == 0 ? 1 : -1));
            else if (var == "z")
                t *= zsub.pow(e);
            else
                return false;
        }
        image += t;
    }
    return image == bracket * zsub.pow(N);
}

SuiteResult suite_skein() {
    SuiteResult s{"skein", {}};
    std::mt19937 rng(303);

    // Kink values under the twin bracket: vertical beta^3, horizontal -beta^3.
    const MorseDiagram vert = parse_morse("cup@1 cup@2 x+@1 cap@2 cap@1");
    const MorseDiagram horz = parse_morse("cup@1 x-@1 cap@1");
    const BracketParams twin = BracketParams::bracket_twin();
    const LaurentPoly delta_twin = loop_value(twin);
    const LaurentPoly b3 = LaurentPoly::monomial("A", 3);
    add_check(s, "twin bracket kink values (vertical +A^3, horizontal -A^3)",
              two_term_state_sum(vert, twin) == b3 * delta_twin &&
                  two_term_state_sum(horz, twin) == -b3 * delta_twin);

    bool spec_ok = true, markov_ok = true, tl_oracle_ok = true, det_ok = true;
    for (int it = 0; it < 25; ++it) {
        BraidWord b = random_braid(rng, 3, 1 + it % 5);
        MorseDiagram d = braid_closure(b);
        spec_ok = spec_ok && specialization_matches(d);

        // Conjugation invariance of the closure value.
        std::uniform_int_distribution<int> gen(1, 2), sign(0, 1);
        int g = gen(rng) * (sign(rng) ? 1 : -1);
        BraidWord conj{3, {g}};
        conj.word.insert(conj.word.end(), b.word.begin(), b.word.end());
        conj.word.push_back(-g);
        markov_ok = markov_ok && kauffman_poly(d, KauffmanVariant::Dubrovnik) ==
                                     kauffman_poly(braid_closure(conj),
                                                   KauffmanVariant::Dubrovnik);

        // trace_closure(zeta(b)) against the two-term state sum.
        const LaurentPoly pa = LaurentPoly::monomial("a", 1);
        const LaurentPoly pb = LaurentPoly::monomial("b", 1);
        tl_oracle_ok = tl_oracle_ok &&
                       trace_closure(zeta(b, pa, pb), tl_delta(pa, pb)) ==
                           two_term_state_sum(d, BracketParams::homfly_framed());

        SkeinOptions opts;
        opts.shuffle_seed = 1000 + it;
        det_ok = det_ok && kauffman_poly(d, KauffmanVariant::Kauffman, opts) ==
                               kauffman_poly(d, KauffmanVariant::Kauffman);
    }
    add_check(s, "bracket specialization oracle (a,z)=(-A^3, A+A^-1)", spec_ok);
    add_check(s, "Markov conjugation invariance", markov_ok);
    add_check(s, "Temperley-Lieb trace oracle", tl_oracle_ok);
    add_check(s, "crossing-order determinism", det_ok);

    // Hopf link values.
    const MorseDiagram hopf = braid_closure(parse_braid("B2: 1 1"));
    const LaurentPoly a = LaurentPoly::monomial("a", 1);
    const LaurentPoly z = LaurentPoly::monomial("z", 1);
    const LaurentPoly dd = variant_loop_value(KauffmanVariant::Dubrovnik);
    const LaurentPoly dk = variant_loop_value(KauffmanVariant::Kauffman);
    add_check(s, "Hopf link regression values",
              kauffman_poly(hopf, KauffmanVariant::Dubrovnik) ==
                      dd * dd + z * dd * (a - a.inverse()) &&
                  kauffman_poly(hopf, KauffmanVariant::Kauffman) ==
                      -(dk * dk) + z * dk * (a + a.inverse()));
    return s;
}

// ---------------------------------------------------------------------------
// fusion suite
// ---------------------------------------------------------------------------

SuiteResult suite_fusion() {
    SuiteResult s{"fusion", {}};
    std::mt19937 rng(909);
    std::uniform_real_distribution<double> dim(0.3, 9.0);

    bool battery = true, bases = true;
    for (int it = 0; it < 200 && battery; ++it) {
        const double dx = dim(rng), dy = dim(rng);
        QqqFMatrix F =
            it % 3 == 0
                ? f_matrix(std::sqrt(1.0 + dx), {dx}, it % 2 ? 1 : -1)
                : f_matrix(std::sqrt(1.0 + dx + dy), {dx, dy}, 1,
                           it % 2 ? FusionVariant::Dubrovnik : FusionVariant::Kauffman);
        battery = verify_f_identities(F).ok(1e-10);
        if (F.k() == 2) bases = bases && new_bases(F).ok();
    }
    add_check(s, "F-matrix identity battery (random dimensions)", battery);
    add_check(s, "new bases and rotation eigenspaces at two summands", bases);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    QqqFMatrix fib = f_matrix(phi, {phi}, 1);
    add_check(s, "Fibonacci F-matrix",
              std::abs(fib.M[0][0] - 1.0 / phi) < 1e-12 &&
                  std::abs(fib.M[0][1] - std::pow(phi, -0.5)) < 1e-12 &&
                  std::abs(fib.M[1][1] + 1.0 / phi) < 1e-12);
    QqqFMatrix dub = f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Dubrovnik);
    const double h = 0.5, r2 = std::sqrt(2.0) / 2.0;
    const double want[3][3] = {{h, r2, h}, {r2, 0, -r2}, {h, -r2, h}};
    bool dub_ok = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) dub_ok = dub_ok && std::abs(dub.M[i][j] - want[i][j]) < 1e-12;
    add_check(s, "(2,2,1) Dubrovnik F-matrix", dub_ok);

    QDimVector dfib = qdims(FusionRingData::fibonacci(), 1);
    QDimVector disi = qdims(FusionRingData::ising(), 1);
    add_check(s, "quantum dimensions of the built-in rings",
              std::abs(dfib.d[1] - phi) < 1e-10 &&
                  std::abs(disi.d[1] - std::sqrt(2.0)) < 1e-10 &&
                  std::abs(disi.d[2] - 1.0) < 1e-10);

    K1Report k1 = skein_consistency_k1(std::polar(1.0, 2.0 * M_PI / 5.0), 1);
    add_check(s, "k=1 skein consistency (Fibonacci-type)",
              std::abs(k1.d_q - phi) < 1e-10 && k1.twist_residual < 1e-10);
    return s;
}

// ---------------------------------------------------------------------------
// lickorish suite
// ---------------------------------------------------------------------------

SuiteResult suite_lickorish() {
    SuiteResult s{"lickorish", {}};
    std::vector<MorseDiagram> diagrams;
    for (int n = 2; n <= 3; ++n)
        for (const BraidWord& b : enumerate_braids(n, 7)) diagrams.push_back(braid_closure(b));
    const std::size_t failures = parallel_count_failures(diagrams.size(), [&diagrams]() {
        auto cache = std::make_shared<SkeinCache>();
        return [cache, &diagrams](std::size_t i) {
            SkeinOptions opts;
            opts.cache = cache.get();
            return lickorish_check(diagrams[i], opts).ok;
        };
    });
    std::ostringstream detail;
    detail << diagrams.size() << " braid closures, " << failures << " failures";
    add_check(s, "Dubrovnik = i^-w (-1)^c Kauffman(ia, -iz) on all closures (n<=3, len<=7)",
              failures == 0, detail.str());
    return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// public interface
// ---------------------------------------------------------------------------

bool SuiteResult::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string SuiteResult::to_json() const {
    json j;
    j["suite"] = suite;
    j["pass"] = all_pass();
    j["checks"] = json::array();
    for (const auto& c : checks) {
        json e = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    return j.dump();
}

std::string SuiteResult::to_text() const {
    std::ostringstream out;
    out << "suite " << suite << ": " << (all_pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    return out.str();
}

std::vector<SuiteResult> run_suites(const std::string& name) {
    if (name == "laurent") return {suite_laurent()};
    if (name == "tl") return {suite_tl()};
    if (name == "skein") return {suite_skein()};
    if (name == "fusion") return {suite_fusion()};
    if (name == "lickorish") return {suite_lickorish()};
    if (name == "all")
        return {suite_laurent(), suite_tl(), suite_skein(), suite_fusion(), suite_lickorish()};
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<BraidWord> enumerate_braids(int strands, int max_len) {
    std::vector<int> letters;
    for (int g = 1; g < strands; ++g) {
        letters.push_back(g);
        letters.push_back(-g);
    }
    std::vector<BraidWord> out;
    std::vector<BraidWord> frontier{BraidWord{strands, {}}};
    out.push_back(frontier[0]);
    for (int len = 1; len <= max_len; ++len) {
        std::vector<BraidWord> next;
        for (const BraidWord& b : frontier)
            for (int g : letters) {
                BraidWord e = b;
                e.word.push_back(g);
                next.push_back(e);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

}  // namespace skeinlab
