#pragma once

#include <optional>
#include <string>
#include <vector>

#include <wpbailey/mono.hpp>
#include <wpbailey/qseries.hpp>

namespace wpb {

/// (x; q^base)_len, or the infinite product when len < 0.
template <class S>
struct Poch {
    Mono<S> x;
    int base = 1;
    long len = 1;

    bool infinite() const { return len < 0; }
    std::string label() const
    {
        return "(" + x.to_string() + "; q^" + std::to_string(base) + ")_" +
               (infinite() ? std::string("inf") : std::to_string(len));
    }
};

/// Monomial times a ratio of q-Pochhammer symbols. Every summand and every
/// closed-form factor in the identity registry has this shape, which lets
/// both backends evaluate it without materializing intermediate series.
template <class S>
class Product {
public:
    explicit Product(Mono<S> scale = Mono<S>(S(1))) : scale_(std::move(scale)) {}

    /// Multiply by (x; q^base)_n.
    Product &num(const Mono<S> &x, int base, long n)
    {
        check_len(n);
        if (n > 0) {
            num_.push_back({x, base, n});
        }
        return *this;
    }
    /// Divide by (x; q^base)_n.
    Product &den(const Mono<S> &x, int base, long n)
    {
        check_len(n);
        if (n > 0) {
            den_.push_back({x, base, n});
        }
        return *this;
    }
    Product &num_inf(const Mono<S> &x, int base = 1)
    {
        num_.push_back({x, base, -1});
        return *this;
    }
    Product &den_inf(const Mono<S> &x, int base = 1)
    {
        den_.push_back({x, base, -1});
        return *this;
    }
    /// Multiply / divide by the single factor (1 - x).
    Product &num1(const Mono<S> &x) { return num(x, 1, 1); }
    Product &den1(const Mono<S> &x) { return den(x, 1, 1); }
    Product &scale(const Mono<S> &m)
    {
        scale_ = scale_ * m;
        return *this;
    }

    const Mono<S> &scale() const { return scale_; }
    const std::vector<Poch<S>> &numerator() const { return num_; }
    const std::vector<Poch<S>> &denominator() const { return den_; }

    Product operator-() const
    {
        Product p = *this;
        p.scale_ = -p.scale_;
        return p;
    }
    friend Product operator*(Product a, const Product &b)
    {
        a.scale_ = a.scale_ * b.scale_;
        a.num_.insert(a.num_.end(), b.num_.begin(), b.num_.end());
        a.den_.insert(a.den_.end(), b.den_.begin(), b.den_.end());
        return a;
    }

private:
    static void check_len(long n)
    {
        if (n < 0) {
            throw std::invalid_argument("finite pochhammer length must be >= 0");
        }
    }

    Mono<S> scale_;
    std::vector<Poch<S>> num_;
    std::vector<Poch<S>> den_;
};

/// Finite sum of products; the empty term is zero.
template <class S>
using Term = std::vector<Product<S>>;

template <class S>
Term<S> operator+(Term<S> a, const Term<S> &b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

template <class S>
Term<S> operator-(const Term<S> &a)
{
    Term<S> r;
    for (const auto &p : a) {
        r.push_back(-p);
    }
    return r;
}

template <class S>
Term<S> operator-(Term<S> a, const Term<S> &b)
{
    return a + (-b);
}

template <class S>
Term<S> operator*(const Term<S> &a, const Product<S> &p)
{
    Term<S> r;
    for (const auto &x : a) {
        r.push_back(x * p);
    }
    return r;
}

template <class S>
Term<S> operator*(const Term<S> &a, const Term<S> &b)
{
    Term<S> r;
    for (const auto &x : a) {
        for (const auto &y : b) {
            r.push_back(x * y);
        }
    }
    return r;
}

template <class S>
Term<S> single(Product<S> p)
{
    return Term<S>{std::move(p)};
}

// -- exact evaluation ---------------------------------------------------------

BinomialProduct to_binomial_product(const Product<Coefficient> &p);

/// Exact valuation of p from the factor exponents alone, without any
/// coefficient arithmetic. std::nullopt if a numerator factor vanishes.
/// Throws PoleDetected if a denominator factor vanishes.
std::optional<int> valuation(const Product<Coefficient> &p);
/// Lower bound on the valuation of a sum; nullopt if every product vanishes.
std::optional<int> valuation(const Term<Coefficient> &t);

QSeries evaluate(const Product<Coefficient> &p, int order);
QSeries evaluate(const Term<Coefficient> &t, int order);

} // namespace wpb
