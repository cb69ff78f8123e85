#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace wpb {

/// Exact Gaussian rational re + i*im. Both parts are GMP rationals kept in
/// canonical form, so equality is structural and no rounding ever happens.
class Coefficient {
public:
    Coefficient() = default;
    Coefficient(long v) : re_(v) {} // NOLINT(google-explicit-constructor)
    Coefficient(mpq_class re, mpq_class im = 0);
    Coefficient(long num, long den);

    static Coefficient i() { return Coefficient(mpq_class(0), mpq_class(1)); }

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return is_real() && re_ == 1; }

    Coefficient conj() const { return Coefficient(re_, -im_); }
    /// Throws std::domain_error on zero.
    Coefficient inverse() const;
    Coefficient pow(long n) const;

    Coefficient &operator+=(const Coefficient &o);
    Coefficient &operator-=(const Coefficient &o);
    Coefficient &operator*=(const Coefficient &o);
    Coefficient &operator/=(const Coefficient &o) { return *this *= o.inverse(); }

    /// this += a * b without temporaries for the common real case.
    void add_product(const Coefficient &a, const Coefficient &b);
    void sub_product(const Coefficient &a, const Coefficient &b);

    friend Coefficient operator+(Coefficient a, const Coefficient &b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient &b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient &b) { return a *= b; }
    friend Coefficient operator/(Coefficient a, const Coefficient &b) { return a /= b; }
    Coefficient operator-() const { return Coefficient(-re_, -im_); }

    friend bool operator==(const Coefficient &a, const Coefficient &b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Coefficient &a, const Coefficient &b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
    /// |re| + |im| as a double, used for coefficient-mass bounds.
    double l1_norm() const;

    /// "p/q" for real values, "p/q+r/si" otherwise.
    std::string to_string() const;
    friend std::ostream &operator<<(std::ostream &os, const Coefficient &c)
    {
        return os << c.to_string();
    }

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

/// Rational written as "num/den" (canonical; den may be 1).
std::string rational_string(const mpq_class &q);

} // namespace wpb
