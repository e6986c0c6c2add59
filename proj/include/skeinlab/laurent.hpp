#ifndef SKEINLAB_LAURENT_HPP
#define SKEINLAB_LAURENT_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "skeinlab/gaussint.hpp"

namespace skeinlab {

// Exponent vector of a Laurent monomial; zero exponents are never stored.
using Monomial = std::map<std::string, long>;

// Display order: variables alphabetically, and within a variable higher powers
// first, so e.g. -A^2 - A^-2 prints with A^2 leading and constants last.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// A multivariate Laurent polynomial with Gaussian-integer coefficients.
// Terms are kept in a canonical ordered map; zero coefficients are dropped
// eagerly so that equality is plain container equality.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, GaussInt, MonomialOrder>;

    LaurentPoly() = default;
    explicit LaurentPoly(GaussInt c);
    explicit LaurentPoly(long c) : LaurentPoly(GaussInt(c)) {}

    // c * var^exp
    static LaurentPoly monomial(const std::string& var, long exp, GaussInt c = GaussInt(1));
    static LaurentPoly constant(GaussInt c) { return LaurentPoly(std::move(c)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    LaurentPoly scaled(const GaussInt& c) const;

    // A polynomial is invertible iff it is a single term with unit coefficient.
    bool is_invertible() const;
    LaurentPoly inverse() const;

    // Integer power; negative exponents require invertibility.
    LaurentPoly pow(long n) const;

    void add_term(const Monomial& m, const GaussInt& c);

    std::string str() const;

private:
    TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

// Substitute var -> scale * target^power, where scale is a unit of Z[i] and
// power is +1 or -1.  Used e.g. for the specialization (a, z) -> (i*a, -i*z).
LaurentPoly substitute_scaled(const LaurentPoly& p, const std::string& var,
                              const GaussInt& scale, const std::string& target, long power);

// Evaluate numerically.  Every variable occurring in p must be assigned a
// nonzero value (negative exponents are evaluated as complex powers).
std::complex<double> eval_complex(const LaurentPoly& p,
                                  const std::map<std::string, std::complex<double>>& assign);

// Canonical text form; parse_poly accepts anything format_poly produces
// (and general +,-,*,^ expressions over variables, integers and `i`).
std::string format_poly(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text);

// JSON round-trip per the documented term-array format.
std::string poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const std::string& json_text);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace skeinlab

#endif  // SKEINLAB_LAURENT_HPP
