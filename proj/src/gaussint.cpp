#include "skeinlab/gaussint.hpp"

#include <ostream>
#include <sstream>

namespace skeinlab {

bool GaussInt::is_unit() const {
    return (re_ == 0 && (im_ == 1 || im_ == -1)) || (im_ == 0 && (re_ == 1 || re_ == -1));
}

GaussInt GaussInt::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("GaussInt::unit_inverse: not a unit: " + str());
    // For a unit u, u^-1 equals its conjugate (|u|^2 = 1).
    return GaussInt(re_, -im_);
}

GaussInt GaussInt::pow(long n) const {
    GaussInt base = *this;
    if (n < 0) {
        base = unit_inverse();
        n = -n;
    }
    GaussInt acc(1);
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

std::string GaussInt::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussInt& g) {
    if (g.im() == 0) return os << g.re();
    if (g.re() == 0) {
        if (g.im() == 1) return os << "i";
        if (g.im() == -1) return os << "-i";
        return os << g.im() << "*i";
    }
    os << "(" << g.re();
    if (g.im() > 0) os << "+";
    if (g.im() == 1) os << "i";
    else if (g.im() == -1) os << "-i";
    else os << g.im() << "*i";
    return os << ")";
}

}  // namespace skeinlab
