#include "skeinlab/skein.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <vector>

namespace skeinlab {

BracketParams BracketParams::bracket(const std::string& var) {
    LaurentPoly a = LaurentPoly::monomial(var, 1);
    return {a, a.inverse()};
}

BracketParams BracketParams::bracket_twin(const std::string& var) {
    LaurentPoly a = LaurentPoly::monomial(var, 1);
    return {a, a.inverse().scaled(GaussInt(-1))};
}

BracketParams BracketParams::homfly_framed(const std::string& va, const std::string& vb) {
    return {LaurentPoly::monomial(va, 1), LaurentPoly::monomial(vb, 1)};
}

LaurentPoly loop_value(const BracketParams& p) {
    if (!p.a.is_invertible() || !p.b.is_invertible())
        throw SkeinError("loop_value: parameters must be invertible monomials");
    return -(p.a * p.b.inverse() + p.a.inverse() * p.b);
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int make() {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int classes() {
        int c = 0;
        for (int x = 0; x < static_cast<int>(parent.size()); ++x)
            if (find(x) == x) ++c;
        return c;
    }
};

}  // namespace

LaurentPoly two_term_state_sum(const MorseDiagram& d, const BracketParams& p) {
    d.validate();
    if (!p.a.is_invertible() || !p.b.is_invertible())
        throw SkeinError("two_term_state_sum: parameters must be invertible monomials");
    const std::size_t k = d.crossing_count();
    if (k > 24) throw SkeinError("two_term_state_sum: too many crossings");
    const LaurentPoly delta = loop_value(p);
    const LaurentPoly a_inv = p.a.inverse(), b_inv = p.b.inverse();
    std::map<int, LaurentPoly> delta_pow;

    LaurentPoly total;
    for (std::size_t state = 0; state < (std::size_t{1} << k); ++state) {
        UnionFind uf;
        std::vector<int> cur;
        LaurentPoly weight(1);
        std::size_t ci = 0;
        for (const auto& s : d.slices) {
            const int pos = s.pos - 1;
            switch (s.kind) {
                case Slice::Cup: {
                    int a = uf.make(), b = uf.make();
                    uf.unite(a, b);
                    cur.insert(cur.begin() + pos, {a, b});
                    break;
                }
                case Slice::Cap:
                    uf.unite(cur[pos], cur[pos + 1]);
                    cur.erase(cur.begin() + pos, cur.begin() + pos + 2);
                    break;
                case Slice::Pos:
                case Slice::Neg: {
                    const bool cupcap = (state >> ci++) & 1;
                    if (s.kind == Slice::Pos) weight *= cupcap ? p.b : p.a;
                    else weight *= cupcap ? b_inv : a_inv;
                    if (cupcap) {
                        // cap then cup: join the strands and start a new pair.
                        uf.unite(cur[pos], cur[pos + 1]);
                        int a = uf.make(), b = uf.make();
                        uf.unite(a, b);
                        cur[pos] = a;
                        cur[pos + 1] = b;
                    }
                    // Identity smoothing leaves the strands in place.
                    break;
                }
            }
        }
        const int loops = uf.classes();
        auto it = delta_pow.find(loops);
        if (it == delta_pow.end()) it = delta_pow.emplace(loops, delta.pow(loops)).first;
        total += weight * it->second;
    }
    return total;
}

GaussInt trivial_eval(const MorseDiagram& d, const GaussInt& alpha) {
    d.validate();
    if (!alpha.is_unit()) throw SkeinError("trivial_eval: alpha must be a fourth root of unity");
    return alpha.pow(local_writhe(d));
}

// ---------------------------------------------------------------------------
// Four-term evaluators
// ---------------------------------------------------------------------------

KauffmanVariant variant_from_name(const std::string& name) {
    if (name == "dubrovnik") return KauffmanVariant::Dubrovnik;
    if (name == "kauffman") return KauffmanVariant::Kauffman;
    if (name == "dubrovnik-twin") return KauffmanVariant::DubrovnikTwin;
    if (name == "kauffman-twin") return KauffmanVariant::KauffmanTwin;
    throw SkeinError("unknown variant: " + name);
}

std::string variant_name(KauffmanVariant v) {
    switch (v) {
        case KauffmanVariant::Dubrovnik: return "dubrovnik";
        case KauffmanVariant::Kauffman: return "kauffman";
        case KauffmanVariant::DubrovnikTwin: return "dubrovnik-twin";
        case KauffmanVariant::KauffmanTwin: return "kauffman-twin";
    }
    return "?";
}

bool variant_is_twin(KauffmanVariant v) {
    return v == KauffmanVariant::DubrovnikTwin || v == KauffmanVariant::KauffmanTwin;
}

LaurentPoly variant_loop_value(KauffmanVariant v) {
    const LaurentPoly a = LaurentPoly::monomial("a", 1);
    const LaurentPoly zi = LaurentPoly::monomial("z", -1);
    const LaurentPoly one(1);
    switch (v) {
        case KauffmanVariant::Dubrovnik: return (a - a.inverse()) * zi + one;
        case KauffmanVariant::Kauffman: return (a + a.inverse()) * zi - one;
        case KauffmanVariant::DubrovnikTwin: return (a - a.inverse()) * zi - one;
        case KauffmanVariant::KauffmanTwin: return (a + a.inverse()) * zi + one;
    }
    throw SkeinError("bad variant");
}

SkeinOptions::SkeinOptions() : cap(16) {
    if (const char* env = std::getenv("SKEIN_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) cap = static_cast<std::size_t>(v);
    }
}

namespace {

// Strand-level graph of a Morse diagram.  Each edge is a monotone strand
// segment between two features (cup, cap or crossing); the walk that follows
// components through it recovers, per crossing, which pass is met first, the
// vertical direction of each pass, and the component each pass lies on.
struct TraceGraph {
    struct Feature {
        enum Kind { CupF, CapF, CrossF } kind;
        bool drawn_pos = false;     // CrossF only
        int crossing_index = -1;    // CrossF only, in slice order
        int edges[4] = {-1, -1, -1, -1};  // cross: TL,TR,BL,BR; cup/cap: 0,1
    };
    struct Edge {
        int top_feature = -1, top_slot = -1;
        int bottom_feature = -1, bottom_slot = -1;
    };
    std::vector<Feature> features;
    std::vector<Edge> edges;
    int crossings = 0;

    static TraceGraph build(const MorseDiagram& d) {
        TraceGraph g;
        std::vector<int> cur;
        for (const auto& s : d.slices) {
            const int p = s.pos - 1;
            switch (s.kind) {
                case Slice::Cup: {
                    int f = static_cast<int>(g.features.size());
                    g.features.push_back({Feature::CupF});
                    int e1 = g.new_edge_top(f, 0), e2 = g.new_edge_top(f, 1);
                    cur.insert(cur.begin() + p, {e1, e2});
                    break;
                }
                case Slice::Cap: {
                    int f = static_cast<int>(g.features.size());
                    g.features.push_back({Feature::CapF});
                    g.attach_bottom(cur[p], f, 0);
                    g.attach_bottom(cur[p + 1], f, 1);
                    cur.erase(cur.begin() + p, cur.begin() + p + 2);
                    break;
                }
                case Slice::Pos:
                case Slice::Neg: {
                    int f = static_cast<int>(g.features.size());
                    Feature feat{Feature::CrossF};
                    feat.drawn_pos = (s.kind == Slice::Pos);
                    feat.crossing_index = g.crossings++;
                    g.features.push_back(feat);
                    g.attach_bottom(cur[p], f, 0);      // TL
                    g.attach_bottom(cur[p + 1], f, 1);  // TR
                    cur[p] = g.new_edge_top(f, 2);      // BL
                    cur[p + 1] = g.new_edge_top(f, 3);  // BR
                    break;
                }
            }
        }
        return g;
    }

    int new_edge_top(int f, int slot) {
        int e = static_cast<int>(edges.size());
        edges.push_back({f, slot, -1, -1});
        features[f].edges[slot] = e;
        return e;
    }
    void attach_bottom(int e, int f, int slot) {
        edges[e].bottom_feature = f;
        edges[e].bottom_slot = slot;
        features[f].edges[slot] = e;
    }
};

struct CrossingWalkInfo {
    bool drawn_pos = false;
    int comp[2] = {-1, -1};      // component of pass A (TL-BR) and pass B (TR-BL)
    bool down[2] = {false, false};
    int visit_order[2] = {-1, -1};
    bool seen[2] = {false, false};

    bool self() const { return comp[0] == comp[1]; }
    // True if the first pass met along the walk is the understrand.
    bool bad() const {
        int first = (visit_order[0] < visit_order[1]) ? 0 : 1;
        int over = drawn_pos ? 0 : 1;
        return first != over;
    }
    int first_order() const { return std::min(visit_order[0], visit_order[1]); }
};

struct WalkData {
    int components = 0;
    std::vector<CrossingWalkInfo> crossings;
};

WalkData walk_diagram(const MorseDiagram& d, std::mt19937* rng) {
    TraceGraph g = TraceGraph::build(d);
    WalkData w;
    w.crossings.resize(g.crossings);
    for (auto& f : g.features)
        if (f.kind == TraceGraph::Feature::CrossF)
            w.crossings[f.crossing_index].drawn_pos = f.drawn_pos;

    std::vector<int> start_order(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) start_order[i] = static_cast<int>(i);
    if (rng) std::shuffle(start_order.begin(), start_order.end(), *rng);

    std::vector<bool> visited(g.edges.size(), false);
    int order = 0;
    for (int start : start_order) {
        if (visited[start]) continue;
        const int comp = w.components++;
        bool down = true;
        if (rng) down = ((*rng)() & 1) != 0;
        int e = start;
        const bool start_down = down;
        do {
            visited[e] = true;
            int f, slot;
            if (down) {
                f = g.edges[e].bottom_feature;
                slot = g.edges[e].bottom_slot;
            } else {
                f = g.edges[e].top_feature;
                slot = g.edges[e].top_slot;
            }
            const auto& feat = g.features[f];
            switch (feat.kind) {
                case TraceGraph::Feature::CupF:
                    e = feat.edges[1 - slot];
                    down = true;
                    break;
                case TraceGraph::Feature::CapF:
                    e = feat.edges[1 - slot];
                    down = false;
                    break;
                case TraceGraph::Feature::CrossF: {
                    // Pass A runs TL(0)<->BR(3); pass B runs TR(1)<->BL(2).
                    int pass = (slot == 0 || slot == 3) ? 0 : 1;
                    auto& info = w.crossings[feat.crossing_index];
                    info.comp[pass] = comp;
                    info.down[pass] = down;
                    info.visit_order[pass] = order++;
                    info.seen[pass] = true;
                    if (down) e = feat.edges[slot == 0 ? 3 : 2];
                    else e = feat.edges[slot == 3 ? 0 : 1];
                    break;
                }
            }
        } while (!(e == start && down == start_down));
    }
    return w;
}

struct Evaluator {
    KauffmanVariant variant;
    std::size_t cap;
    std::mt19937* rng;
    const LaurentPoly delta;
    const LaurentPoly a = LaurentPoly::monomial("a", 1);
    const LaurentPoly z = LaurentPoly::monomial("z", 1);
    std::map<std::string, LaurentPoly> own_memo;
    std::map<std::string, LaurentPoly>& memo;

    Evaluator(KauffmanVariant v, std::size_t cap_, std::mt19937* rng_,
              std::map<std::string, LaurentPoly>* shared = nullptr)
        : variant(v), cap(cap_), rng(rng_), delta(variant_loop_value(v)),
          memo(shared ? *shared : own_memo) {}

    // Value of a diagram that is descending with respect to the given walk:
    // delta per component times the framed twist contribution of every
    // self-crossing.  A self-crossing whose two passes run in opposite
    // vertical directions is a sideways kink; for the twin variants its twist
    // factor carries the extra kappa = -1.
    LaurentPoly descending_value(const WalkData& w, const std::vector<bool>& switched) {
        long sign_sum = 0;
        int sideways = 0;
        for (std::size_t i = 0; i < w.crossings.size(); ++i) {
            const auto& c = w.crossings[i];
            if (!c.self()) continue;
            bool pos = switched[i] ? !c.drawn_pos : c.drawn_pos;
            int parity = (c.down[0] == c.down[1]) ? 1 : -1;
            sign_sum += (pos ? 1 : -1) * parity;
            if (parity < 0) ++sideways;
        }
        LaurentPoly v = delta.pow(w.components) * a.pow(sign_sum);
        if (variant_is_twin(variant) && (sideways & 1)) v = -v;
        return v;
    }

    LaurentPoly eval(const MorseDiagram& d) {
        const std::string key = format_morse(d);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const std::size_t k = d.crossing_count();
        if (k > cap)
            throw SkeinError("kauffman_poly: crossing cap exceeded (" + std::to_string(k) + " > " +
                             std::to_string(cap) + "); set SKEIN_CAP to raise it");
        LaurentPoly v;
        if (k == 0) {
            v = delta.pow(component_count(d));
        } else {
            WalkData w = walk_diagram(d, rng);
            // Bad crossings in first-visit order; switching them in this
            // order yields a descending diagram under the same walk.
            std::vector<std::size_t> bad;
            for (std::size_t i = 0; i < w.crossings.size(); ++i)
                if (w.crossings[i].bad()) bad.push_back(i);
            std::sort(bad.begin(), bad.end(), [&](std::size_t x, std::size_t y) {
                return w.crossings[x].first_order() < w.crossings[y].first_order();
            });
            std::vector<bool> switched(w.crossings.size(), false);
            MorseDiagram work = d;
            GaussInt prefix(1);
            const bool twin = variant_is_twin(variant);
            const bool kauffman_family =
                (variant == KauffmanVariant::Kauffman || variant == KauffmanVariant::KauffmanTwin);
            for (std::size_t ci : bad) {
                const bool pos_now = w.crossings[ci].drawn_pos;  // not yet switched
                LaurentPoly v0 = eval(resolve_crossing(work, ci, Resolution::SmoothId));
                LaurentPoly vinf = eval(resolve_crossing(work, ci, Resolution::SmoothCupCap));
                LaurentPoly t;
                if (!kauffman_family) {
                    // L+ - L- = z (L0 -+ Linf): plain uses -, twin uses +.
                    LaurentPoly smo = twin ? v0 + vinf : v0 - vinf;
                    t = (z * smo).scaled(GaussInt(pos_now ? 1 : -1));
                } else {
                    // L+ + L- = z (L0 +- Linf): plain uses +, twin uses -.
                    LaurentPoly smo = twin ? v0 - vinf : v0 + vinf;
                    t = z * smo;
                }
                v += t.scaled(prefix);
                if (kauffman_family) prefix *= GaussInt(-1);
                work = resolve_crossing(work, ci, Resolution::Switch);
                switched[ci] = true;
            }
            v += descending_value(w, switched).scaled(prefix);
        }
        memo.emplace(key, v);
        return v;
    }
};

}  // namespace

long oriented_writhe(const MorseDiagram& d) {
    d.validate();
    WalkData w = walk_diagram(d, nullptr);
    long total = 0;
    for (const auto& c : w.crossings) {
        int parity = (c.down[0] == c.down[1]) ? 1 : -1;
        total += (c.drawn_pos ? 1 : -1) * parity;
    }
    return total;
}

LaurentPoly kauffman_poly(const MorseDiagram& d, KauffmanVariant v, const SkeinOptions& opts) {
    d.validate();
    std::mt19937 rng(opts.shuffle_seed.value_or(0));
    const bool randomize = opts.shuffle_seed.has_value() && !variant_is_twin(v);
    auto* shared = (opts.cache && !randomize)
                       ? &opts.cache->memo[static_cast<int>(v)]
                       : nullptr;
    Evaluator ev(v, opts.cap, randomize ? &rng : nullptr, shared);
    return ev.eval(d);
}

LaurentPoly normalize_writhe(const LaurentPoly& p, long writhe, const std::string& a_var) {
    return p * LaurentPoly::monomial(a_var, 1).pow(-writhe);
}

LickorishResult lickorish_check(const MorseDiagram& d, const SkeinOptions& opts) {
    LickorishResult r;
    r.lhs = kauffman_poly(d, KauffmanVariant::Dubrovnik, opts);
    LaurentPoly k = kauffman_poly(d, KauffmanVariant::Kauffman, opts);
    // (a, z) -> (i a, -i z), then the global factor i^-w (-1)^c.
    k = substitute_scaled(k, "a", GaussInt::i(), "a", 1);
    k = substitute_scaled(k, "z", GaussInt(0, -1), "z", 1);
    GaussInt factor = GaussInt::i().pow(-oriented_writhe(d));
    if (component_count(d) & 1) factor = -factor;
    r.rhs = k.scaled(factor);
    r.ok = (r.lhs == r.rhs);
    return r;
}

// ---------------------------------------------------------------------------
// Local moves
// ---------------------------------------------------------------------------

MorseDiagram rotate_crossing(const MorseDiagram& d, std::size_t index) {
    std::size_t seen = 0;
    for (std::size_t i = 0; i < d.slices.size(); ++i) {
        const Slice& s = d.slices[i];
        if (s.kind != Slice::Pos && s.kind != Slice::Neg) continue;
        if (seen++ != index) continue;
        MorseDiagram out = d;
        const int p = s.pos;
        // Quarter-turn: x+/x- at p becomes cup, opposite crossing, cap.
        out.slices[i] = {Slice::Cup, p + 2};
        out.slices.insert(out.slices.begin() + i + 1,
                          {{s.kind == Slice::Pos ? Slice::Neg : Slice::Pos, p + 1},
                           {Slice::Cap, p}});
        out.validate();
        return out;
    }
    throw DiagramError("rotate_crossing: crossing index out of range");
}

MorseDiagram insert_r2_pair(const MorseDiagram& d, std::size_t slice, int p) {
    if (slice > d.slices.size()) throw DiagramError("insert_r2_pair: slice index out of range");
    MorseDiagram out = d;
    out.slices.insert(out.slices.begin() + slice, {{Slice::Pos, p}, {Slice::Neg, p}});
    out.validate();
    return out;
}

bool twin_sign_check(const MorseDiagram& d1, const MorseDiagram& d2, const std::string& var) {
    const long w1 = local_writhe(d1), w2 = local_writhe(d2);
    if ((w1 - w2) % 2 != 0) return false;
    const long k = std::labs(w1 - w2) / 2;
    const BracketParams p = BracketParams::bracket_twin(var);
    LaurentPoly v1 = two_term_state_sum(d1, p);
    LaurentPoly v2 = two_term_state_sum(d2, p);
    if (k & 1) v2 = -v2;
    return v1 == v2;
}

}  // namespace skeinlab
