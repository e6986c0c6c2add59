// Acceptance gate: twelve structural criteria, one pass/fail line each.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <iostream>
#include <random>

#include "skeinlab/fusion.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/tl.hpp"
#include "skeinlab/verify.hpp"

using namespace skeinlab;

namespace {

const LaurentPoly A = LaurentPoly::monomial("A", 1);

bool report(int n, const std::string& name, bool pass, const std::string& extra = "") {
    std::cout << "criterion " << n << " (" << name << "): " << (pass ? "PASS" : "FAIL");
    if (!extra.empty()) std::cout << " [" << extra << "]";
    std::cout << std::endl;
    return pass;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream out;
    out.precision(2);
    out << std::fixed << s << "s";
    return out.str();
}

MorseDiagram closure(const std::string& braid) { return braid_closure(parse_braid(braid)); }

BraidWord random_braid(std::mt19937& rng, int max_strands, int max_len, int min_strands = 2,
                       int min_len = 1) {
    std::uniform_int_distribution<int> ns(min_strands, max_strands);
    BraidWord b;
    b.strands = ns(rng);
    std::uniform_int_distribution<int> len(min_len, max_len);
    std::uniform_int_distribution<int> gen(1, b.strands - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    int l = len(rng);
    for (int k = 0; k < l; ++k) b.word.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    return b;
}

// (a, z) -> (-A^3, A + A^-1) with (A + A^-1)^N denominators cleared; the
// framed Kauffman value equals Q(A) iff the substituted form is Q * (A+A^-1)^N.
std::pair<LaurentPoly, long> specialize_to_bracket(const LaurentPoly& p) {
    long min_z = 0;
    for (const auto& [m, c] : p.terms()) {
        auto it = m.find("z");
        if (it != m.end()) min_z = std::min(min_z, it->second);
    }
    const long N = -min_z;
    const LaurentPoly sub_a = -A.pow(3);
    const LaurentPoly sub_z = A + A.inverse();
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) {
        long ea = 0, ez = 0;
        for (const auto& [v, e] : m) {
            if (v == "a") ea = e;
            else if (v == "z") ez = e;
        }
        out += (sub_a.pow(ea) * sub_z.pow(ez + N)).scaled(c);
    }
    return {out, N};
}

QqqFMatrix random_k2(std::mt19937& rng, FusionVariant v, int kappa = 1) {
    std::uniform_real_distribution<double> dim(0.3, 9.0);
    const double dx = dim(rng), dy = dim(rng);
    return f_matrix(std::sqrt(1.0 + dx + dy), {dx, dy}, kappa, v);
}

}  // namespace

TEST_CASE("criterion 1: two-kink diagram under the twin bracket") {
    const auto t0 = std::chrono::steady_clock::now();
    const MorseDiagram d = parse_morse("cup@1 cup@2 x+@1 x+@1 cap@2 cap@1");
    const LaurentPoly dt = A.pow(2) + A.pow(-2);  // twin loop value
    const LaurentPoly expect = A.pow(2) * dt * dt - (dt + dt) + A.pow(-2) * dt * dt;
    const bool exact = two_term_state_sum(d, BracketParams::bracket_twin()) == expect;
    const double elapsed = seconds_since(t0);
    CHECK(report(1, "two-kink twin bracket value", exact && elapsed < 1.0,
                 fmt_seconds(elapsed)));
}

TEST_CASE("criterion 2: kink values under the twin bracket") {
    const MorseDiagram vert = parse_morse("cup@1 cup@2 x+@1 cap@2 cap@1");
    const MorseDiagram horiz = parse_morse("cup@1 x-@1 cap@1");
    const BracketParams twin = BracketParams::bracket_twin();
    const LaurentPoly dt = loop_value(twin);
    const bool pass = two_term_state_sum(vert, twin) == A.pow(3) * dt &&
                      two_term_state_sum(horiz, twin) == -A.pow(3) * dt;
    CHECK(report(2, "vertical kink +A^3, horizontal kink -A^3", pass));
}

TEST_CASE("criterion 3: Dubrovnik-Kauffman transform on all small closures") {
    const auto t0 = std::chrono::steady_clock::now();
    SkeinCache cache;
    SkeinOptions opts;
    opts.cache = &cache;
    std::size_t count = 0, failures = 0;
    for (int n = 2; n <= 3; ++n)
        for (const BraidWord& b : enumerate_braids(n, 7)) {
            ++count;
            if (!lickorish_check(braid_closure(b), opts).ok) ++failures;
        }
    const double elapsed = seconds_since(t0);
    std::ostringstream extra;
    extra << count << " closures, " << failures << " failures, " << fmt_seconds(elapsed);
    CHECK(report(3, "Dubrovnik = i^-w (-1)^c Kauffman(ia,-iz), n<=3 len<=7",
                 count >= 100 && failures == 0 && elapsed < 60.0, extra.str()));
}

TEST_CASE("criterion 4: Kauffman evaluator matches the bracket state sum") {
    const auto t0 = std::chrono::steady_clock::now();
    SkeinCache cache;
    SkeinOptions opts;
    opts.cache = &cache;
    std::size_t count = 0, failures = 0;
    for (int n = 2; n <= 3; ++n)
        for (const BraidWord& b : enumerate_braids(n, 7)) {
            ++count;
            const MorseDiagram d = braid_closure(b);
            auto [lhs, N] = specialize_to_bracket(kauffman_poly(d, KauffmanVariant::Kauffman, opts));
            const LaurentPoly rhs =
                two_term_state_sum(d, BracketParams::bracket()) * (A + A.inverse()).pow(N);
            if (lhs != rhs) ++failures;
        }
    const double elapsed = seconds_since(t0);
    std::ostringstream extra;
    extra << count << " closures, " << failures << " failures, " << fmt_seconds(elapsed);
    CHECK(report(4, "Kauffman at (a,z)=(-A^3, A+A^-1) equals the bracket",
                 failures == 0, extra.str()));
}

TEST_CASE("criterion 5: Markov trace oracle over all braids n<=4, len<=6") {
    const auto t0 = std::chrono::steady_clock::now();
    const LaurentPoly a = LaurentPoly::monomial("a", 1);
    const LaurentPoly b = LaurentPoly::monomial("b", 1);
    const LaurentPoly delta = tl_delta(a, b);
    const BracketParams params = BracketParams::homfly_framed();
    std::size_t count = 0, failures = 0;

    // Depth-first over the word tree so each extension costs one TL product.
    for (int n = 2; n <= 4; ++n) {
        std::vector<TLElement> gens, invs;
        for (int g = 1; g < n; ++g) {
            gens.push_back(zeta(BraidWord{n, {g}}, a, b));
            invs.push_back(zeta(BraidWord{n, {-g}}, a, b));
        }
        struct Walker {
            int n, max_len;
            const LaurentPoly &delta;
            const BracketParams &params;
            const std::vector<TLElement> &gens, &invs;
            std::size_t *count, *failures;
            std::vector<int> word;

            void visit(const TLElement& z) {
                ++*count;
                BraidWord b{n, word};
                if (trace_closure(z, delta) != two_term_state_sum(braid_closure(b), params))
                    ++*failures;
                if ((int)word.size() == max_len) return;
                for (int g = 1; g < n; ++g) {
                    word.push_back(g);
                    visit(tl_mul(z, gens[g - 1], delta));
                    word.back() = -g;
                    visit(tl_mul(z, invs[g - 1], delta));
                    word.pop_back();
                }
            }
        } w{n, 6, delta, params, gens, invs, &count, &failures, {}};
        w.visit(TLElement::identity(n));
    }
    const double elapsed = seconds_since(t0);
    std::ostringstream extra;
    extra << count << " braids, " << failures << " failures, " << fmt_seconds(elapsed);
    CHECK(report(5, "trace_closure(zeta(b)) = two-term state sum of the closure",
                 failures == 0, extra.str()));
}

TEST_CASE("criterion 6: zeta is a homomorphism exactly at the compatible delta") {
    const LaurentPoly a = LaurentPoly::monomial("a", 1);
    const LaurentPoly b = LaurentPoly::monomial("b", 1);
    bool rep_ok = true;
    for (int n = 2; n <= 5; ++n) {
        BraidRelationReport r = braid_relation_check(n, a, b);
        rep_ok = rep_ok && r.all();
    }
    // The inverse relation must fail for any other loop value.
    const TLElement x = zeta(BraidWord{2, {1}}, a, b);
    const TLElement y = zeta(BraidWord{2, {-1}}, a, b);
    const bool good = tl_mul(x, y, tl_delta(a, b)) == TLElement::identity(2);
    const bool bad = tl_mul(x, y, a * b) != TLElement::identity(2) &&
                     tl_mul(x, y, -(a * b.inverse())) != TLElement::identity(2);
    CHECK(report(6, "braid/inverse/Hecke relations hold iff delta = -(ab^-1 + a^-1 b)",
                 rep_ok && good && bad));
}

TEST_CASE("criterion 7: F-matrix identity battery") {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> dim(0.3, 9.0);
    bool pass = true;
    for (int it = 0; it < 1000 && pass; ++it) {
        FIdentityReport rep;
        int k;
        if (it % 3 == 0) {
            k = 1;
            const double dx = dim(rng);
            rep = verify_f_identities(f_matrix(std::sqrt(1.0 + dx), {dx}, it % 2 ? 1 : -1));
        } else {
            k = 2;
            const FusionVariant v =
                it % 2 ? FusionVariant::Dubrovnik : FusionVariant::Kauffman;
            rep = verify_f_identities(random_k2(rng, v));
            const double want_trace = v == FusionVariant::Dubrovnik ? 1.0 : -1.0;
            pass = pass && std::abs(rep.trace - want_trace) < 1e-10;
            pass = pass && (v == FusionVariant::Dubrovnik
                                ? rep.mult_plus == 2 && rep.mult_minus == 1
                                : rep.mult_plus == 1 && rep.mult_minus == 2);
        }
        pass = pass && rep.ok(1e-10) && rep.trace_bound && std::abs(rep.trace) < k + 1;
    }
    const double elapsed = seconds_since(t0);
    CHECK(report(7, "1000 random F-matrices: rows, sums, symmetry, involution, trace",
                 pass && elapsed < 5.0, fmt_seconds(elapsed)));
}

TEST_CASE("criterion 8: concrete F-matrices") {
    const double r2 = std::sqrt(2.0);
    const QqqFMatrix ising = f_matrix(r2, {1.0}, 1);
    bool pass = std::abs(ising.M[0][0] - 1.0 / r2) < 1e-12 &&
                std::abs(ising.M[0][1] - 1.0 / r2) < 1e-12 &&
                std::abs(ising.M[1][0] - 1.0 / r2) < 1e-12 &&
                std::abs(ising.M[1][1] + 1.0 / r2) < 1e-12;

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const QqqFMatrix fib = f_matrix(phi, {phi}, 1);
    pass = pass && std::abs(fib.M[0][0] - 1.0 / phi) < 1e-12 &&
           std::abs(fib.M[0][1] - std::pow(phi, -0.5)) < 1e-12 &&
           std::abs(fib.M[1][0] - std::pow(phi, -0.5)) < 1e-12 &&
           std::abs(fib.M[1][1] + 1.0 / phi) < 1e-12;

    const QqqFMatrix dub = f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Dubrovnik);
    const double h = 0.5, s = r2 / 2.0;
    const double want[3][3] = {{h, s, h}, {s, 0.0, -s}, {h, -s, h}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) pass = pass && std::abs(dub.M[i][j] - want[i][j]) < 1e-12;
    CHECK(report(8, "Ising, Fibonacci and (2,2,1) Dubrovnik matrices to 1e-12", pass));
}

TEST_CASE("criterion 9: rotated bases and rotation eigenspaces at two summands") {
    bool pass = true;
    const NewBasesReport rd = new_bases(f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Dubrovnik));
    pass = pass && rd.ok(1e-10) && rd.dim_v1 == 2 && rd.dim_vm1 == 1;
    const NewBasesReport rk = new_bases(f_matrix(2.0, {2.0, 1.0}, 1, FusionVariant::Kauffman));
    pass = pass && rk.ok(1e-10) && rk.dim_v1 == 1 && rk.dim_vm1 == 2;

    std::mt19937 rng(99);
    for (int it = 0; it < 50 && pass; ++it) {
        const FusionVariant v = it % 2 ? FusionVariant::Dubrovnik : FusionVariant::Kauffman;
        const NewBasesReport rep = new_bases(random_k2(rng, v));
        pass = pass && rep.ok(1e-10) && std::abs(rep.gram_det_normalized) > 1e-6 &&
               (v == FusionVariant::Dubrovnik ? rep.dim_v1 == 2 && rep.dim_vm1 == 1
                                              : rep.dim_v1 == 1 && rep.dim_vm1 == 2);
    }
    CHECK(report(9, "J+- independent, rotate(J+) = J-, eigenspace dims (2,1)/(1,2)", pass));
}

TEST_CASE("criterion 10: twin sign under framed-isotopic rewrites") {
    std::mt19937 rng(777);
    int checked = 0;
    bool pass = true;
    while (checked < 60 && pass) {
        const BraidWord b = random_braid(rng, 3, 5);
        MorseDiagram d = braid_closure(b);
        MorseDiagram d2 = d;
        switch (checked % 3) {
            case 0: {  // crossing rotation: local writhe jumps by 2, sign by -1
                std::uniform_int_distribution<std::size_t> pick(0, d.crossing_count() - 1);
                d2 = rotate_crossing(d, pick(rng));
                pass = pass && std::labs(local_writhe(d) - local_writhe(d2)) == 2;
                break;
            }
            case 1:  // cancelling pair: writhe and twin value unchanged
                // After the b.strands cup slices the width is 2 * strands.
                d2 = insert_r2_pair(d, b.strands, b.strands);
                pass = pass && local_writhe(d) == local_writhe(d2);
                break;
            default: {  // two rotations: writhe moves by 0 or 4, sign by (-1)^2
                std::uniform_int_distribution<std::size_t> pick(0, d.crossing_count() - 1);
                d2 = rotate_crossing(rotate_crossing(d, pick(rng)), pick(rng));
                break;
            }
        }
        pass = pass && twin_sign_check(d, d2);
        ++checked;
    }
    std::ostringstream extra;
    extra << checked << " pairs";
    CHECK(report(10, "twin bracket changes by exactly (-1)^k across rewrites", pass,
                 extra.str()));
}

TEST_CASE("criterion 11: braiding-eigenvalue consistency") {
    using C = std::complex<double>;
    bool pass = true;
    // One nontrivial summand: alpha = -beta^-3 and d_q = -kappa(beta^2 + beta^-2).
    for (const auto& [angle, kappa, want] :
         {std::tuple{2.0 * M_PI / 5.0, 1, (1.0 + std::sqrt(5.0)) / 2.0},
          std::tuple{3.0 * M_PI / 8.0, 1, std::sqrt(2.0)},
          std::tuple{M_PI / 8.0, -1, std::sqrt(2.0)}}) {
        const C beta = std::polar(1.0, angle);
        const K1Report rep = skein_consistency_k1(beta, kappa);
        pass = pass && std::abs(rep.alpha - (-std::pow(beta, -3))) < 1e-12;
        const C dq_formula = -double(kappa) * (beta * beta + 1.0 / (beta * beta));
        pass = pass && std::abs(C(rep.d_q) - dq_formula) < 1e-12 &&
               std::abs(rep.d_q - want) < 1e-12 && rep.twist_residual < 1e-10;
    }

    // Two nontrivial summands: the three d_q expressions agree on 100 tuples.
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    std::uniform_int_distribution<int> pick(0, 3);
    int accepted = 0;
    while (accepted < 100 && pass) {
        const int c = pick(rng);
        const bool dub = c == 0 || c == 2;
        const int kappa = c < 2 ? 1 : -1;
        const C alpha = std::polar(1.0, angle(rng));
        const C beta = std::polar(1.0, angle(rng));
        const C gamma = dub ? -1.0 / beta : 1.0 / beta;
        const C z = beta + gamma;
        if (std::abs(beta - gamma) < 1e-3 || std::abs(z) < 1e-3) continue;
        const C quot = dub ? (1.0 / alpha - alpha) / z : (1.0 / alpha + alpha) / z;
        const double expect = kappa * (quot.real() + (dub ? 1.0 : -1.0));
        if (expect < 0.1) continue;
        const K2Report rep = skein_consistency_k2(alpha, beta, gamma, kappa);
        pass = pass && !rep.degenerate && rep.residual < 1e-9 &&
               std::abs(rep.d_q - expect) < 1e-8;
        ++accepted;
    }
    CHECK(report(11, "alpha = -beta^-3, d_q formulas agree at one and two summands", pass));
}

TEST_CASE("criterion 12: crossing-selection order independence") {
    std::mt19937 rng(2718);
    std::vector<MorseDiagram> diagrams = {
        closure("B2: 1 1"), closure("B2: 1 1 1"), closure("B3: 1 -2 1 -2"),
        closure("B3: 1 1 2 2"), parse_morse("cup@1 cup@2 x+@1 x+@1 cap@2 cap@1"),
    };
    for (int it = 0; it < 5; ++it) diagrams.push_back(braid_closure(random_braid(rng, 3, 6)));
    bool pass = true;
    for (const auto& d : diagrams)
        for (auto v : {KauffmanVariant::Dubrovnik, KauffmanVariant::Kauffman}) {
            const LaurentPoly canonical = kauffman_poly(d, v);
            for (unsigned seed = 1; seed <= 20 && pass; ++seed) {
                SkeinOptions opts;
                opts.shuffle_seed = seed;
                pass = pass && kauffman_poly(d, v, opts) == canonical;
            }
        }
    CHECK(report(12, "identical values under 20 randomized resolution orders", pass));
}
