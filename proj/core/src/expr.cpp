#include <wpbailey/expr.hpp>

#include <algorithm>

namespace wpb {

namespace {

struct PochShape {
    long valuation = 0;
    bool vanishes = false;
};

PochShape shape(const Poch<Coefficient> &p)
{
    PochShape s;
    const long m = p.x.expo();
    const long b = p.base;
    auto in_range = [&](long j) { return p.infinite() || j < p.len; };
    if (m < 0) {
        long t = (-m + b - 1) / b;
        if (!p.infinite()) {
            t = std::min(t, p.len);
        }
        s.valuation = t * m + b * t * (t - 1) / 2;
    }
    if (m <= 0 && (-m) % b == 0 && in_range((-m) / b) && p.x.coeff().is_one()) {
        s.vanishes = true;
    }
    return s;
}

} // namespace

BinomialProduct to_binomial_product(const Product<Coefficient> &p)
{
    BinomialProduct bp(p.scale());
    for (const auto &f : p.denominator()) {
        bp.add_pochhammer(f.x, f.base, f.len, true, f.label());
    }
    for (const auto &f : p.numerator()) {
        bp.add_pochhammer(f.x, f.base, f.len, false, f.label());
    }
    return bp;
}

std::optional<int> valuation(const Product<Coefficient> &p)
{
    long v = p.scale().expo();
    bool vanishes = false;
    for (const auto &f : p.denominator()) {
        PochShape s = shape(f);
        if (s.vanishes) {
            // Let BinomialProduct produce the diagnostic.
            to_binomial_product(p);
        }
        v -= s.valuation;
    }
    for (const auto &f : p.numerator()) {
        PochShape s = shape(f);
        vanishes = vanishes || s.vanishes;
        v += s.valuation;
    }
    if (vanishes) {
        return std::nullopt;
    }
    return static_cast<int>(v);
}

std::optional<int> valuation(const Term<Coefficient> &t)
{
    std::optional<int> best;
    for (const auto &p : t) {
        if (auto v = valuation(p)) {
            best = best ? std::min(*best, *v) : *v;
        }
    }
    return best;
}

QSeries evaluate(const Product<Coefficient> &p, int order)
{
    return to_binomial_product(p).evaluate(order);
}

QSeries evaluate(const Term<Coefficient> &t, int order)
{
    QSeries acc = QSeries::zero(order);
    for (const auto &p : t) {
        acc += evaluate(p, order);
    }
    return acc;
}

} // namespace wpb
