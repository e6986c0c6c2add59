#include "skeinlab/tl.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace skeinlab {

namespace {

// Position of a boundary point on the disk: top 1..n left to right, then the
// bottom edge traversed right to left, so noncrossing pairings are exactly
// the noncrossing chord diagrams of this cyclic sequence.
int disk_index(int n, int point) {
    if (point <= n) return point - 1;
    return 3 * n - point;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PlanarPairing::PlanarPairing(int n, std::vector<std::pair<int, int>> pairs)
    : n_(n), pairs_(std::move(pairs)) {
    if (n_ < 0) throw TLError("pairing: negative n");
    if (pairs_.size() != static_cast<std::size_t>(n_))
        throw TLError("pairing: expected n pairs on 2n points");
    std::vector<bool> used(2 * n_ + 1, false);
    for (auto& [a, b] : pairs_) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > 2 * n_ || a == b) throw TLError("pairing: point out of range");
        if (used[a] || used[b]) throw TLError("pairing: point matched twice");
        used[a] = used[b] = true;
    }
    std::sort(pairs_.begin(), pairs_.end());
    // Planarity: no two chords may interleave on the disk boundary.
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        int a = disk_index(n_, pairs_[i].first), b = disk_index(n_, pairs_[i].second);
        if (a > b) std::swap(a, b);
        for (std::size_t j = i + 1; j < pairs_.size(); ++j) {
            int c = disk_index(n_, pairs_[j].first), d = disk_index(n_, pairs_[j].second);
            if (c > d) std::swap(c, d);
            bool c_in = (a < c && c < b), d_in = (a < d && d < b);
            if (c_in != d_in) throw TLError("pairing: chords cross");
        }
    }
}

int PlanarPairing::partner(int point) const {
    for (const auto& [a, b] : pairs_) {
        if (a == point) return b;
        if (b == point) return a;
    }
    throw TLError("pairing: unknown point");
}

PlanarPairing PlanarPairing::identity(int n) {
    std::vector<std::pair<int, int>> p;
    for (int i = 1; i <= n; ++i) p.emplace_back(i, n + i);
    return PlanarPairing(n, std::move(p));
}

PlanarPairing PlanarPairing::generator(int n, int i) {
    if (i < 1 || i >= n) throw TLError("generator: index out of range");
    std::vector<std::pair<int, int>> p{{i, i + 1}, {n + i, n + i + 1}};
    for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1) p.emplace_back(j, n + j);
    return PlanarPairing(n, std::move(p));
}

TLElement TLElement::basis(const PlanarPairing& p, LaurentPoly c) {
    TLElement x{p.n(), {}};
    if (!c.is_zero()) x.terms.emplace(p, std::move(c));
    return x;
}

void TLElement::add(const PlanarPairing& p, const LaurentPoly& c) {
    if (p.n() != n) throw TLError("TLElement: mixed ranks");
    auto it = terms.find(p);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

TLElement TLElement::operator+(const TLElement& o) const {
    if (n != o.n) throw TLError("TLElement: mixed ranks");
    TLElement r = *this;
    for (const auto& [p, c] : o.terms) r.add(p, c);
    return r;
}

TLElement TLElement::operator-(const TLElement& o) const {
    if (n != o.n) throw TLError("TLElement: mixed ranks");
    TLElement r = *this;
    for (const auto& [p, c] : o.terms) r.add(p, -c);
    return r;
}

TLElement TLElement::scaled(const LaurentPoly& c) const {
    TLElement r{n, {}};
    for (const auto& [p, coeff] : terms) r.add(p, coeff * c);
    return r;
}

TLElement tl_mul(const TLElement& x, const TLElement& y, const LaurentPoly& delta) {
    if (x.n != y.n) throw TLError("tl_mul: mixed ranks");
    const int n = x.n;
    TLElement out = TLElement::zero(n);
    // Node layout: [0, n) result top (x top), [n, 2n) glued middle
    // (x bottom = y top), [2n, 3n) result bottom (y bottom).
    auto x_node = [n](int p) { return p <= n ? p - 1 : n + (p - n) - 1; };
    auto y_node = [n](int p) { return p <= n ? n + p - 1 : 2 * n + (p - n) - 1; };
    for (const auto& [px, cx] : x.terms) {
        for (const auto& [py, cy] : y.terms) {
            UnionFind uf(3 * n);
            for (const auto& [a, b] : px.pairs()) uf.unite(x_node(a), x_node(b));
            for (const auto& [a, b] : py.pairs()) uf.unite(y_node(a), y_node(b));
            // Read off the boundary pairing.
            std::map<int, std::vector<int>> classes;
            for (int i = 0; i < n; ++i) classes[uf.find(i)].push_back(i + 1);
            for (int i = 0; i < n; ++i) classes[uf.find(2 * n + i)].push_back(n + i + 1);
            std::vector<std::pair<int, int>> pairs;
            for (const auto& [root, pts] : classes) {
                if (pts.size() != 2) throw TLError("tl_mul: malformed diagram");
                pairs.emplace_back(pts[0], pts[1]);
            }
            // Middle classes that touch no boundary point are closed loops.
            int loops = 0;
            for (int i = n; i < 2 * n; ++i)
                if (uf.find(i) == i && !classes.count(i)) ++loops;
            out.add(PlanarPairing(n, std::move(pairs)), cx * cy * delta.pow(loops));
        }
    }
    return out;
}

std::vector<PlanarPairing> tl_basis(int n) {
    // Enumerate noncrossing matchings in the disk order, then translate disk
    // indices back to the top/bottom labels.  A chord from the first free
    // index of a region splits that region in two independent ones, so a
    // region stack enumerates exactly the Catalan-many matchings.
    std::vector<PlanarPairing> out;
    std::vector<std::pair<int, int>> chords;
    auto label_of = [n](int disk) { return disk < n ? disk + 1 : 3 * n - disk; };
    std::vector<std::vector<int>> regions;
    std::vector<int> init(2 * n);
    for (int i = 0; i < 2 * n; ++i) init[i] = i;
    regions.push_back(init);
    auto solve = [&](auto&& self) -> void {
        // Find first nonempty region.
        std::size_t ri = 0;
        while (ri < regions.size() && regions[ri].empty()) ++ri;
        if (ri == regions.size()) {
            std::vector<std::pair<int, int>> pairs;
            for (auto [a, b] : chords) pairs.emplace_back(label_of(a), label_of(b));
            out.emplace_back(n, std::move(pairs));
            return;
        }
        std::vector<int> region = regions[ri];
        for (std::size_t k = 1; k < region.size(); k += 2) {
            chords.emplace_back(region[0], region[k]);
            std::vector<std::vector<int>> saved = regions;
            regions[ri].assign(region.begin() + 1, region.begin() + k);
            regions.push_back(std::vector<int>(region.begin() + k + 1, region.end()));
            self(self);
            regions = saved;
            chords.pop_back();
        }
    };
    solve(solve);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t tl_dim(int n) { return tl_basis(n).size(); }

LaurentPoly tl_delta(const LaurentPoly& a, const LaurentPoly& b) {
    return -(a * b.inverse() + a.inverse() * b);
}

TLElement zeta(const BraidWord& br, const LaurentPoly& a, const LaurentPoly& bb) {
    br.validate();
    const LaurentPoly delta = tl_delta(a, bb);
    TLElement x = TLElement::identity(br.strands);
    for (int g : br.word) {
        int i = std::abs(g);
        TLElement gen = TLElement::identity(br.strands).scaled(g > 0 ? a : a.inverse()) +
                        TLElement::basis(PlanarPairing::generator(br.strands, i),
                                         g > 0 ? bb : bb.inverse());
        x = tl_mul(x, gen, delta);
    }
    return x;
}

LaurentPoly trace_closure(const TLElement& x, const LaurentPoly& delta) {
    const int n = x.n;
    LaurentPoly total;
    for (const auto& [p, c] : x.terms) {
        UnionFind uf(2 * n);
        for (const auto& [a, b] : p.pairs()) uf.unite(a - 1, b - 1);
        for (int i = 1; i <= n; ++i) uf.unite(i - 1, n + i - 1);
        int loops = 0;
        for (int i = 0; i < 2 * n; ++i)
            if (uf.find(i) == i) ++loops;
        total += c * delta.pow(loops);
    }
    return total;
}

BraidRelationReport braid_relation_check(int n, const LaurentPoly& a, const LaurentPoly& bb) {
    BraidRelationReport rep;
    const LaurentPoly delta = tl_delta(a, bb);
    auto word = [n](std::vector<int> w) { return BraidWord{n, std::move(w)}; };
    rep.braid_relations = true;
    rep.commuting_relations = true;
    rep.inverses = true;
    rep.hecke = true;
    for (int i = 1; i < n; ++i) {
        TLElement s = zeta(word({i}), a, bb);
        TLElement sinv = zeta(word({-i}), a, bb);
        if (tl_mul(s, sinv, delta) != TLElement::identity(n)) rep.inverses = false;
        // Hecke quadratic: (s + a^-1 b^2)(s - a) = 0.
        TLElement left = s + TLElement::identity(n).scaled(a.inverse() * bb * bb);
        TLElement right = s - TLElement::identity(n).scaled(a);
        if (!tl_mul(left, right, delta).is_zero()) rep.hecke = false;
        if (i + 1 < n) {
            if (zeta(word({i, i + 1, i}), a, bb) != zeta(word({i + 1, i, i + 1}), a, bb))
                rep.braid_relations = false;
        }
        for (int j = i + 2; j < n; ++j) {
            if (zeta(word({i, j}), a, bb) != zeta(word({j, i}), a, bb))
                rep.commuting_relations = false;
        }
    }
    return rep;
}

std::string tl_to_json(const TLElement& x) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [p, c] : x.terms) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& [u, v] : p.pairs()) jp.push_back(nlohmann::json::array({u, v}));
        arr.push_back({{"pairing", jp}, {"coeff", nlohmann::json::parse(poly_to_json(c))}});
    }
    nlohmann::json j{{"n", x.n}, {"terms", arr}};
    return j.dump();
}

TLElement tl_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw TLError(std::string("tl json: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("terms")) throw TLError("tl json: need n and terms");
    TLElement x = TLElement::zero(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : t.at("pairing"))
            pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        x.add(PlanarPairing(x.n, std::move(pairs)), poly_from_json(t.at("coeff").dump()));
    }
    return x;
}

}  // namespace skeinlab
