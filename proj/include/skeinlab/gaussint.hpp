#ifndef SKEINLAB_GAUSSINT_HPP
#define SKEINLAB_GAUSSINT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace skeinlab {

// Exact Gaussian integer (re + im*i) backed by GMP, so coefficient growth in
// deep skein recursions can never overflow.
class GaussInt {
public:
    GaussInt() : re_(0), im_(0) {}
    GaussInt(long re) : re_(re), im_(0) {}
    GaussInt(long re, long im) : re_(re), im_(im) {}
    GaussInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussInt i() { return GaussInt(0, 1); }

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    // The units of Z[i] are exactly {1, -1, i, -i}.
    bool is_unit() const;

    GaussInt operator-() const { return GaussInt(-re_, -im_); }
    GaussInt operator+(const GaussInt& o) const { return GaussInt(re_ + o.re_, im_ + o.im_); }
    GaussInt operator-(const GaussInt& o) const { return GaussInt(re_ - o.re_, im_ - o.im_); }
    GaussInt operator*(const GaussInt& o) const {
        return GaussInt(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussInt& operator+=(const GaussInt& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussInt& operator-=(const GaussInt& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussInt& operator*=(const GaussInt& o) { *this = *this * o; return *this; }

    bool operator==(const GaussInt& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussInt& o) const { return !(*this == o); }
    // Arbitrary total order (re, then im) so GaussInt can key ordered containers.
    bool operator<(const GaussInt& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    // Multiplicative inverse; only defined for units.
    GaussInt unit_inverse() const;

    // this^n for integer n; negative n requires a unit base.
    GaussInt pow(long n) const;

    std::string str() const;

private:
    mpz_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussInt& g);

}  // namespace skeinlab

#endif  // SKEINLAB_GAUSSINT_HPP
