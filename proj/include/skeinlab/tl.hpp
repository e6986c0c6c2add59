#ifndef SKEINLAB_TL_HPP
#define SKEINLAB_TL_HPP

#include <map>
#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"

namespace skeinlab {

// A noncrossing perfect matching of 2n boundary points of a TL_n diagram.
// Points 1..n are the top boundary left to right; n+i is the i-th bottom
// point from the left.  Planarity is checked against the disk order
// 1, .., n, 2n, 2n-1, .., n+1.
class PlanarPairing {
public:
    PlanarPairing() = default;
    PlanarPairing(int n, std::vector<std::pair<int, int>> pairs);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
    int partner(int point) const;

    static PlanarPairing identity(int n);
    // The TL generator U_i: top i--i+1, bottom n+i--n+i+1, rest vertical.
    static PlanarPairing generator(int n, int i);

    auto operator<=>(const PlanarPairing&) const = default;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> pairs_;  // sorted, each (lo, hi)
};

// A formal linear combination of TL_n diagrams over Laurent polynomials.
struct TLElement {
    int n = 0;
    std::map<PlanarPairing, LaurentPoly> terms;

    static TLElement zero(int n) { return TLElement{n, {}}; }
    static TLElement basis(const PlanarPairing& p, LaurentPoly c = LaurentPoly(1));
    static TLElement identity(int n) { return basis(PlanarPairing::identity(n)); }

    void add(const PlanarPairing& p, const LaurentPoly& c);
    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement scaled(const LaurentPoly& c) const;
    bool is_zero() const { return terms.empty(); }
    bool operator==(const TLElement&) const = default;
};

// Product of basis diagrams: x stacked on top of y, each closed loop
// contributing a factor delta.
TLElement tl_mul(const TLElement& x, const TLElement& y, const LaurentPoly& delta);

// All noncrossing pairings of TL_n (the Catalan-many diagram basis).
std::vector<PlanarPairing> tl_basis(int n);
std::size_t tl_dim(int n);

// The two-parameter TL representation of B_n:
//   sigma_i   -> a + b U_i,    sigma_i^-1 -> a^-1 + b^-1 U_i,
// with the compatible loop value delta = -(a b^-1 + a^-1 b).
LaurentPoly tl_delta(const LaurentPoly& a, const LaurentPoly& b);

TLElement zeta(const BraidWord& b, const LaurentPoly& a, const LaurentPoly& bb);

// Markov trace closure: connect top i to bottom n+i and count loops.
LaurentPoly trace_closure(const TLElement& x, const LaurentPoly& delta);

// Structural checks of the representation in TL_n with symbolic a, b:
// braid relations, inverses, and the Hecke quadratic
// (zeta(s) + a^-1 b^2)(zeta(s) - a) = 0.
struct BraidRelationReport {
    bool braid_relations = false;
    bool commuting_relations = false;
    bool inverses = false;
    bool hecke = false;
    bool all() const { return braid_relations && commuting_relations && inverses && hecke; }
};
BraidRelationReport braid_relation_check(int n, const LaurentPoly& a, const LaurentPoly& bb);

// JSON: [{"pairing": [[1,4],[2,3]], "coeff": <poly terms>}, ...]
std::string tl_to_json(const TLElement& x);
TLElement tl_from_json(const std::string& json_text);

struct TLError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace skeinlab

#endif  // SKEINLAB_TL_HPP
