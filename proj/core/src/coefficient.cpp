#include <wpbailey/coefficient.hpp>

#include <cmath>
#include <stdexcept>

namespace wpb {

Coefficient::Coefficient(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im))
{
    re_.canonicalize();
    im_.canonicalize();
}

Coefficient::Coefficient(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    re_ = mpq_class(num, den);
    re_.canonicalize();
}

Coefficient Coefficient::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("inverse of zero coefficient");
    }
    if (is_real()) {
        return Coefficient(1 / re_);
    }
    mpq_class norm = re_ * re_ + im_ * im_;
    return Coefficient(re_ / norm, -im_ / norm);
}

Coefficient Coefficient::pow(long n) const
{
    Coefficient base = n < 0 ? inverse() : *this;
    unsigned long e = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Coefficient result(1);
    while (e != 0) {
        if (e & 1UL) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

Coefficient &Coefficient::operator+=(const Coefficient &o)
{
    re_ += o.re_;
    if (!o.is_real()) {
        im_ += o.im_;
    }
    return *this;
}

Coefficient &Coefficient::operator-=(const Coefficient &o)
{
    re_ -= o.re_;
    if (!o.is_real()) {
        im_ -= o.im_;
    }
    return *this;
}

Coefficient &Coefficient::operator*=(const Coefficient &o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

void Coefficient::add_product(const Coefficient &a, const Coefficient &b)
{
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    if (a.is_real() && b.is_real()) {
        re_ += a.re_ * b.re_;
        return;
    }
    *this += a * b;
}

void Coefficient::sub_product(const Coefficient &a, const Coefficient &b)
{
    if (a.is_zero() || b.is_zero()) {
        return;
    }
    if (a.is_real() && b.is_real()) {
        re_ -= a.re_ * b.re_;
        return;
    }
    *this -= a * b;
}

double Coefficient::l1_norm() const
{
    return std::fabs(re_.get_d()) + std::fabs(im_.get_d());
}

std::string rational_string(const mpq_class &q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string Coefficient::to_string() const
{
    auto part = [](const mpq_class &q) {
        return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
    };
    if (is_real()) {
        return part(re_);
    }
    std::string s = sgn(re_) == 0 ? std::string() : part(re_);
    if (sgn(im_) > 0 && !s.empty()) {
        s += "+";
    }
    return s + part(im_) + "i";
}

} // namespace wpb

#include <sstream>

#include <wpbailey/mono.hpp>

namespace wpb::scalar {

std::string to_string(const Coefficient &c)
{
    return c.to_string();
}

std::string to_string(const CPoint &c)
{
    std::ostringstream os;
    os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    return os.str();
}

} // namespace wpb::scalar
