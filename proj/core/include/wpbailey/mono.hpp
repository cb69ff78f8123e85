#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

#include <wpbailey/coefficient.hpp>

namespace wpb {

using CPoint = std::complex<double>;

namespace scalar {

inline bool is_zero(const Coefficient &c) { return c.is_zero(); }
inline bool is_zero(const CPoint &c) { return c == CPoint(0.0, 0.0); }

inline Coefficient pow(const Coefficient &c, long n) { return c.pow(n); }
inline CPoint pow(const CPoint &c, long n)
{
    CPoint base = n < 0 ? 1.0 / c : c;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    CPoint r(1.0, 0.0);
    while (e != 0) {
        if (e & 1UL) {
            r *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return r;
}

inline CPoint to_complex(const Coefficient &c) { return c.to_complex(); }
inline CPoint to_complex(const CPoint &c) { return c; }

std::string to_string(const Coefficient &c);
std::string to_string(const CPoint &c);

} // namespace scalar

/// A parameter of the form coeff * q^expo. The coefficient is never zero, so
/// monomials form a group under multiplication.
template <class S>
class Mono {
public:
    Mono(S coeff, int expo = 0) : coeff_(std::move(coeff)), expo_(expo) // NOLINT
    {
        if (scalar::is_zero(coeff_)) {
            throw std::invalid_argument("monomial coefficient must be nonzero");
        }
    }

    static Mono q(int expo) { return Mono(S(1), expo); }

    const S &coeff() const { return coeff_; }
    int expo() const { return expo_; }

    Mono inverse() const { return Mono(S(1) / coeff_, -expo_); }
    Mono pow(int n) const { return Mono(scalar::pow(coeff_, n), expo_ * n); }
    Mono shifted(int by) const { return Mono(coeff_, expo_ + by); }
    Mono operator-() const { return Mono(-coeff_, expo_); }

    friend Mono operator*(const Mono &a, const Mono &b)
    {
        return Mono(a.coeff_ * b.coeff_, a.expo_ + b.expo_);
    }
    friend Mono operator/(const Mono &a, const Mono &b)
    {
        return Mono(a.coeff_ / b.coeff_, a.expo_ - b.expo_);
    }
    friend Mono operator*(const Mono &a, const S &s) { return Mono(a.coeff_ * s, a.expo_); }
    friend bool operator==(const Mono &a, const Mono &b)
    {
        return a.expo_ == b.expo_ && a.coeff_ == b.coeff_;
    }

    /// Numeric value at a concrete q.
    CPoint at(CPoint q0) const
    {
        return scalar::to_complex(coeff_) * scalar::pow(q0, expo_);
    }

    std::string to_string() const
    {
        return "(" + scalar::to_string(coeff_) + ")q^" + std::to_string(expo_);
    }

private:
    S coeff_;
    int expo_;
};

using QMonomial = Mono<Coefficient>;
using CMonomial = Mono<CPoint>;

inline CMonomial to_numeric(const QMonomial &m) { return CMonomial(m.coeff().to_complex(), m.expo()); }

} // namespace wpb
