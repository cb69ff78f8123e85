#include <wpbailey/registry.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>

#include "forms.hpp"

namespace wpb {

namespace {

using forms::cst;
using forms::imag;
using forms::qp;

template <class B>
using Sides = std::pair<typename B::Value, typename B::Value>;

template <class S>
Mono<S> param(const ParamSet &ps, const std::string &name)
{
    auto it = ps.values.find(name);
    if (it == ps.values.end()) {
        throw ParameterError("missing parameter " + name);
    }
    return forms::lift<S>(it->second);
}

template <class S>
std::optional<Mono<S>> maybe(const ParamSet &ps, const std::string &name)
{
    auto it = ps.values.find(name);
    if (it == ps.values.end()) {
        return std::nullopt;
    }
    return forms::lift<S>(it->second);
}

template <class S>
PairArgs<S> pair_args(const ParamSet &ps, const Mono<S> &a, const Mono<S> &k)
{
    PairArgs<S> A{a, k};
    A.rho1 = maybe<S>(ps, "rho1");
    A.rho2 = maybe<S>(ps, "rho2");
    A.sqrt_k = maybe<S>(ps, "s");
    return A;
}

template <class S>
DerivedArgs<S> derived_args(const ParamSet &ps, const Mono<S> &a, int base)
{
    DerivedArgs<S> D{a, base};
    D.rho1 = maybe<S>(ps, "rho1");
    D.rho2 = maybe<S>(ps, "rho2");
    return D;
}

// -- q-Gauss sum --

template <class B>
Sides<B> qgauss(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto A = param<S>(ps, "A");
    const auto Bp = param<S>(ps, "B");
    const auto C = param<S>(ps, "C");
    const Mono<S> x = C / (A * Bp);
    auto lhs = be.sum(
        [&](int n) {
            Product<S> p(x.pow(n));
            p.num(A, 1, n).num(Bp, 1, n).den(C, 1, n).den(qp<S>(1), 1, n);
            return single(p);
        },
        0);
    Product<S> r;
    r.num_inf(C / A).num_inf(C / Bp).den_inf(C).den_inf(x);
    return {lhs, be.eval(r)};
}

// -- consequence of the second WP-Bailey chain --

template <class B>
Sides<B> chain_sum(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto &f = catalog_pair(ps.pair).template forms<S>();
    const auto a = param<S>(ps, "a");
    const auto k = param<S>(ps, "k");
    const PairArgs<S> args = pair_args(ps, a, k);
    const Mono<S> q = qp<S>(1);
    const Mono<S> x = q * a * a / (k * k);
    auto lhs = be.sum([&](int n) { return f.beta(n, args) * Product<S>(x.pow(n)); }, 0);
    Product<S> pre;
    pre.num_inf(q * a / k).num_inf(q * a * a / k).den_inf(q * a).den_inf(x);
    auto inner = be.sum(
        [&](int n) {
            Product<S> p(x.pow(n));
            p.num(k, 1, 2L * n).den(q * a * a / k, 1, 2L * n);
            return f.alpha(n, args) * p;
        },
        0);
    return {lhs, be.eval(pre) * inner};
}

// Shared right side of the first transformation and of f(a,k,z) - f(1/a,1/k,1/z).
template <class B>
typename B::Value abz_rhs(const B &be, const Mono<typename B::Scalar> &a,
                          const Mono<typename B::Scalar> &k, const Mono<typename B::Scalar> &z)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    // (a - k) = a (1 - k/a)
    Product<S> rat(a);
    rat.num1(k / a).num1(z.inverse()).num1(a * k / z);
    rat.den1(a).den1(k).den1(a / z).den1(k / z);
    Product<S> prod(z / k);
    prod.num_inf(z).num_inf(q / z).num_inf(k / a).num_inf(q * a / k).num_inf(a * k / z);
    prod.num_inf(q * z / (a * k)).num_inf(q).num_inf(q);
    prod.den_inf(z / k).den_inf(q * k / z).den_inf(z / a).den_inf(q * a / z).den_inf(a);
    prod.den_inf(q / a).den_inf(k).den_inf(q / k);
    return be.eval(Term<S>{rat, prod});
}

// -- first transformation --

template <class B>
Sides<B> transform1(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto &f = catalog_pair(ps.pair).template forms<S>();
    const auto a = param<S>(ps, "a");
    const auto k = param<S>(ps, "k");
    const auto z = param<S>(ps, "z");
    const Mono<S> q = qp<S>(1);
    const PairArgs<S> P = pair_args(ps, a, k);
    const PairArgs<S> R = P.reciprocal();
    const Mono<S> ai = a.inverse();
    const Mono<S> ki = k.inverse();
    const Mono<S> zi = z.inverse();

    auto lhs = be.sum([&](int n) {
        Product<S> s1((q * a / z).pow(n));
        s1.num1(k * q.pow(2 * n)).den1(k).num(z, 1, n).num(q, 1, n - 1);
        s1.den(q * k, 1, n).den(q * k / z, 1, n);
        Product<S> s2(-(q * z / a).pow(n));
        s2.num1(ki * q.pow(2 * n)).den1(ki).num(zi, 1, n).num(q, 1, n - 1);
        s2.den(q * ki, 1, n).den(q * z * ki, 1, n);
        Product<S> s3(-(q * a / z).pow(n));
        s3.num(z, 1, n).num(q, 1, n - 1).den(q * a, 1, n).den(q * a / z, 1, n);
        Product<S> s4((q * z / a).pow(n));
        s4.num(zi, 1, n).num(q, 1, n - 1).den(q * ai, 1, n).den(q * z * ai, 1, n);
        return f.beta(n, P) * s1 + f.beta(n, R) * s2 + f.alpha(n, P) * s3 + f.alpha(n, R) * s4;
    });
    return {lhs, abz_rhs(be, a, k, z)};
}

// -- second transformation --

template <class B>
Sides<B> transform2(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto &f = catalog_pair(ps.pair).template forms<S>();
    const auto a = param<S>(ps, "a");
    const auto k = param<S>(ps, "k");
    const auto z = param<S>(ps, "z");
    const Mono<S> q = qp<S>(1);
    const Mono<S> q2 = qp<S>(2);
    const PairArgs<S> P = pair_args(ps, a, k);
    const PairArgs<S> N = P.negated();
    const PairArgs<S> D = P.squared();

    auto lhs = be.sum([&](int n) {
        Product<S> t1((q * a / z).pow(n));
        t1.num1(k * q.pow(2 * n)).den1(k).num(z, 1, n).num(q, 1, n - 1);
        t1.den(q * k, 1, n).den(q * k / z, 1, n);
        Product<S> t2((-(q * a / z)).pow(n));
        t2.num1(-(k * q.pow(2 * n))).den1(-k).num(z, 1, n).num(q, 1, n - 1);
        t2.den(-(q * k), 1, n).den(-(q * k / z), 1, n);
        Product<S> t3(cst<S>(-2) * (q2 * a * a / (z * z)).pow(n));
        t3.num1(k * k * q.pow(4 * n)).den1(k * k).num(z * z, 2, n).num(q2, 2, n - 1);
        t3.den(q2 * k * k, 2, n).den(q2 * k * k / (z * z), 2, n);
        return f.beta(n, P) * t1 + f.beta(n, N) * t2 + f.beta(n, D) * t3;
    });
    auto rhs = be.sum([&](int n) {
        Product<S> u1((q * a / z).pow(n));
        u1.num(z, 1, n).num(q, 1, n - 1).den(q * a, 1, n).den(q * a / z, 1, n);
        Product<S> u2((-(q * a / z)).pow(n));
        u2.num(z, 1, n).num(q, 1, n - 1).den(-(q * a), 1, n).den(-(q * a / z), 1, n);
        Product<S> u3(cst<S>(-2) * (q2 * a * a / (z * z)).pow(n));
        u3.num(z * z, 2, n).num(q2, 2, n - 1).den(q2 * a * a, 2, n).den(q2 * a * a / (z * z), 2, n);
        return f.alpha(n, P) * u1 + f.alpha(n, N) * u2 + f.alpha(n, D) * u3;
    });
    return {lhs, rhs};
}

// 2(a-b)(1+ab)/((1-a^2)(1-b^2)) - 2a (b/a,qa/b,-ab,-q/ab;q)_inf (q^2,q^2;q^2)_inf
//   / (a^2,q^2/a^2,b^2,q^2/b^2;q^2)_inf, times c/2.
template <class B>
typename B::Value ab_rhs(const B &be, const Mono<typename B::Scalar> &a,
                         const Mono<typename B::Scalar> &b, long c)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    const Mono<S> q2 = qp<S>(2);
    Product<S> rat(cst<S>(c) * a);
    rat.num1(b / a).num1(-(a * b)).den1(a * a).den1(b * b);
    Product<S> prod(cst<S>(-c) * a);
    prod.num_inf(b / a).num_inf(q * a / b).num_inf(-(a * b)).num_inf(-(q / (a * b)));
    prod.num_inf(q2, 2).num_inf(q2, 2);
    prod.den_inf(a * a, 2).den_inf(q2 / (a * a), 2).den_inf(b * b, 2).den_inf(q2 / (b * b), 2);
    return be.eval(Term<S>{rat, prod});
}

// -- derived-pair summation, four f2 evaluations --

template <class B>
Sides<B> f2_quad(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const DerivedPairSpec &d = catalog_derived(ps.pair);
    const auto a = param<S>(ps, "a");
    const auto b = param<S>(ps, "b");
    auto f2 = [&](const Mono<S> &x) { return forms::f2_derived(be, d, derived_args(ps, x, 1)); };
    auto lhs = f2(a) - f2(b) - f2(a.inverse()) + f2(b.inverse());
    return {lhs, ab_rhs(be, a, b, 2)};
}

template <class B>
Sides<B> f_difference(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto a = param<S>(ps, "a");
    const auto k = param<S>(ps, "k");
    const auto z = param<S>(ps, "z");
    auto lhs = forms::f_abz(be, a, k, z) - forms::f_abz(be, a.inverse(), k.inverse(), z.inverse());
    return {lhs, abz_rhs(be, a, k, z)};
}

// -- f1 against the singh-rho-inf and sqrtk derived pairs, simplified --

template <class B>
Sides<B> f1_singh_inf(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto a = param<S>(ps, "a");
    const Mono<S> q = qp<S>(1);
    auto rhs = be.sum([&](int n) {
        const Mono<S> tri = q.pow(n * (n + 1) / 2);
        Product<S> p1((-a).pow(n) * tri);
        p1.den1(q.pow(n));
        Product<S> p2(-((-(a * a)).pow(n) * tri));
        p2.num1(a * q.pow(2 * n)).den1(a).num(a, 1, n).num(q, 1, 2L * n - 1);
        p2.den(q, 1, n).den(a * a * q, 1, 2L * n);
        return Term<S>{p1, p2};
    });
    return {forms::f1(be, F1Variant::lambert, a, 1), rhs};
}

template <class B>
Sides<B> f1_sqrtk(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto a = param<S>(ps, "a");
    const Mono<S> q = qp<S>(1);
    const Mono<S> q2 = qp<S>(2);
    auto rhs = be.sum([&](int n) {
        Product<S> p1(cst<S>(1, 2) * a.pow(2 * n) * q.pow(n));
        p1.num(a.pow(-2), 1, n).den(q, 1, n).den1(q.pow(n));
        Product<S> p2(-(a.pow(n) * q.pow(n)));
        p2.num1(a * q.pow(2 * n)).den1(a);
        p2.num(a, 1, n).num(a, 1, n).num(-(a * q), 1, n).num(a.inverse(), 1, n);
        p2.num(q2, 2, n - 1);
        p2.den(q, 1, n).den(q, 1, n).den(cst<S>(-1), 1, n).den(q * a * a, 1, n);
        p2.den(a * a * q2, 2, n);
        return Term<S>{p1, p2};
    });
    return {forms::f1(be, F1Variant::lambert, a, 1), rhs};
}

// -- separable a, b sums through the singh-rho-inf derived pair, simplified --

template <class B>
Sides<B> ab_singh_inf(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto a = param<S>(ps, "a");
    const auto b = param<S>(ps, "b");
    const Mono<S> q = qp<S>(1);
    auto first = be.sum(
        [&](int n) {
            const int m = 2 * n + 1;
            const Mono<S> w = q.pow(2 * n * n + 3 * n + 1);
            Term<S> t;
            const std::pair<Mono<S>, long> parts[] = {{b, 1}, {a, -1}, {a.inverse(), 1}, {b.inverse(), -1}};
            for (const auto &[x, sgn] : parts) {
                Product<S> p(cst<S>(sgn) * x.pow(m) * w);
                p.den1(q.pow(m));
                t.push_back(p);
            }
            return t;
        },
        0);
    auto g = [&](const Mono<S> &x, int n, long sgn) {
        Product<S> p(cst<S>(sgn) * x.pow(2 * n));
        p.num1(x * q.pow(2 * n)).den1(x).num(x, 1, n).den(q * x * x, 1, 2L * n);
        return p;
    };
    auto second = be.sum([&](int n) {
        Product<S> pre(cst<S>(-1, 2) * Mono<S>(n % 2 == 0 ? S(1) : S(-1)) * q.pow(n * (n + 1) / 2));
        pre.num(q, 1, 2L * n - 1).den(q, 1, n);
        const Mono<S> ai = a.inverse();
        const Mono<S> bi = b.inverse();
        Term<S> bracket{g(a, n, 1),   g(-a, n, -1), g(b, n, -1),  g(-b, n, 1),
                        g(ai, n, -1), g(-ai, n, 1), g(bi, n, 1), g(-bi, n, -1)};
        return bracket * pre;
    });
    return {first + second, ab_rhs(be, a, b, 1)};
}

// -- separable a, b sums through the trivial derived pair, simplified --

template <class B>
Sides<B> ab_trivial(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const auto a = param<S>(ps, "a");
    const auto b = param<S>(ps, "b");
    const Mono<S> q = qp<S>(1);
    auto h1 = [&](const Mono<S> &x, int n, long sgn) {
        const Mono<S> w = cst<S>(sgn) * x.pow(2 * n) * q.pow(n);
        Product<S> p(w);
        p.num(x.inverse(), 1, n).den(q * x, 1, n).den1(q.pow(n));
        Product<S> m(-w);
        m.num(-x.inverse(), 1, n).den(-(q * x), 1, n).den1(q.pow(n));
        return Term<S>{p, m};
    };
    auto h2 = [&](const Mono<S> &x, int n, long sgn) {
        const Mono<S> w = cst<S>(sgn) * x.pow(-2 * n) * q.pow(n);
        Product<S> p(w);
        p.num(x, 1, n).den(q / x, 1, n).den1(q.pow(n));
        Product<S> m(-w);
        m.num(-x, 1, n).den(-(q / x), 1, n).den1(q.pow(n));
        return Term<S>{p, m};
    };
    auto lhs = be.sum([&](int n) { return h1(a, n, 1) + h2(a, n, -1) + h1(b, n, -1) + h2(b, n, 1); });
    return {lhs, ab_rhs(be, a, b, 2)};
}

// -- cubic theta series a(q) --

template <class S>
Product<S> a_series_unit(int n)
{
    // (1 - q^{6n-1}) (1/q; q^3)_n ... / ((1 - 1/q) ...) shared by two forms.
    const Mono<S> q = qp<S>(1);
    Product<S> p;
    p.num1(q.pow(6 * n - 1)).den1(q.inverse()).num(q.inverse(), 3, n).num(qp<S>(3), 3, 2L * n - 1);
    p.den(qp<S>(3), 3, n).den(q, 3, 2L * n);
    return p;
}

template <class B>
Sides<B> a_qgauss(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    auto s = be.sum([&](int n) {
        Product<S> p(q.pow(n));
        p.num(q, 3, n).den(q.pow(2), 3, n).den1(q.pow(3 * n));
        return single(p);
    });
    return {forms::theta_a(be, AForm::lattice), be.constant(S(1)) + be.constant(S(6)) * s};
}

template <class B>
Sides<B> a_unitpair(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    auto s = be.sum([&](int n) {
        Product<S> p = a_series_unit<S>(n);
        p.num(q.inverse(), 3, n).den(qp<S>(3), 3, n);
        p.scale(cst<S>(-6) * q.pow(2 * n));
        return single(p);
    });
    return {forms::theta_a(be, AForm::lattice), be.constant(S(1)) + s};
}

template <class B>
Sides<B> a_singh(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    const auto r1 = param<S>(ps, "rho1");
    const auto r2 = param<S>(ps, "rho2");
    const Mono<S> q2 = q.pow(2);
    auto s = be.sum([&](int n) {
        Product<S> p1(cst<S>(6) * q.pow(n));
        p1.num(r1 * q, 3, n).num(r2 * q, 3, n).num(q2 / (r1 * r2), 3, n);
        p1.den(q2 / r1, 3, n).den(q2 / r2, 3, n).den(r1 * r2 * q, 3, n).den1(q.pow(3 * n));
        Product<S> p2 = a_series_unit<S>(n);
        p2.num(r1, 3, n).num(r2, 3, n).num(q / (r1 * r2), 3, n);
        p2.den(q2 / r1, 3, n).den(q2 / r2, 3, n).den(r1 * r2 * q, 3, n);
        p2.scale(cst<S>(-6) * q.pow(2 * n));
        return Term<S>{p1, p2};
    });
    return {forms::theta_a(be, AForm::lattice), be.constant(S(1)) + s};
}

template <class B>
Sides<B> a_singh_inf(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    auto s = be.sum([&](int n) {
        const Mono<S> sg(n % 2 == 0 ? S(1) : S(-1));
        Product<S> p1(cst<S>(6) * sg * q.pow((3 * n * n + n) / 2));
        p1.den1(q.pow(3 * n));
        Product<S> p2(cst<S>(-6) * sg * q.pow((3 * n * n - n) / 2));
        p2.num1(q.pow(6 * n - 1)).den1(q.inverse()).num(q.inverse(), 3, n).num(qp<S>(3), 3, 2L * n - 1);
        p2.den(qp<S>(3), 3, n).den(q, 3, 2L * n);
        return Term<S>{p1, p2};
    });
    return {forms::theta_a(be, AForm::lattice), be.constant(S(1)) + s};
}

// -- psi^2(q^4) --

template <class B>
typename B::Value psi_sq4(const B &be)
{
    auto p = forms::psi(be, 4, PsiForm::product);
    return p * p;
}

// (1 - x q^{4n-1}) (x/q; q^2)_n / (1 - x/q) with x = +-i; the recurring block.
template <class S>
Product<S> i_block(const Mono<S> &x, int n)
{
    const Mono<S> q = qp<S>(1);
    Product<S> p;
    p.num1(x * q.pow(4 * n - 1)).den1(x / q).num(x / q, 2, n).num(qp<S>(2), 2, 2L * n - 1);
    p.den(qp<S>(2), 2, n).den(cst<S>(-1), 2, 2L * n);
    return p;
}

template <class B>
Sides<B> psi_unitpair(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    const Mono<S> i = imag<S>();
    auto s = be.sum([&](int n) {
        Product<S> p1 = i_block(-i, n);
        p1.num(-i / q, 2, n).den(qp<S>(2), 2, n).scale((-(i * q)).pow(n));
        Product<S> p2 = i_block(i, n);
        p2.num(i / q, 2, n).den(qp<S>(2), 2, n).scale(-((i * q).pow(n)));
        return Term<S>{p1, p2};
    });
    return {psi_sq4(be), be.mono(cst<S>(1, 2) * i / q) * s};
}

template <class B>
Sides<B> psi_singh(const B &be, const ParamSet &ps)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    const Mono<S> i = imag<S>();
    const auto r = param<S>(ps, "rho1");
    auto s = be.sum([&](int n) {
        const Mono<S> w = Mono<S>(n % 2 == 0 ? S(1) : S(-1)) * r.pow(-n);
        Product<S> p1(w);
        p1.num(i * r * q, 2, n).den(-(i * q / r), 2, n).den1(q.pow(2 * n));
        Product<S> p2(-w);
        p2.num(-(i * r * q), 2, n).den(i * q / r, 2, n).den1(q.pow(2 * n));
        Product<S> p3 = i_block(i, n);
        p3.num(r, 2, n).den(i * q / r, 2, n).scale(w);
        Product<S> p4 = i_block(-i, n);
        p4.num(r, 2, n).den(-(i * q / r), 2, n).scale(-w);
        return Term<S>{p1, p2, p3, p4};
    });
    return {psi_sq4(be), be.mono((cst<S>(2) * i * q).inverse()) * s};
}

template <class B>
Sides<B> psi_singh_inf(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    const Mono<S> i = imag<S>();
    auto head = be.sum(
        [&](int n) {
            Product<S> p(Mono<S>(n % 2 == 0 ? S(1) : S(-1)) * q.pow(4 * n * n + 4 * n));
            p.den1(q.pow(4 * n + 2));
            return single(p);
        },
        0);
    auto s = be.sum([&](int n) {
        Product<S> p1 = i_block(i, n);
        p1.scale(q.pow(n * n - n));
        Product<S> p2 = i_block(-i, n);
        p2.scale(-q.pow(n * n - n));
        return Term<S>{p1, p2};
    });
    return {psi_sq4(be), head + be.mono((cst<S>(2) * i * q).inverse()) * s};
}

template <class B>
Sides<B> psi_lambert(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    const Mono<S> i = imag<S>();
    const Mono<S> x = (i * q).inverse();
    return {psi_sq4(be), be.mono((cst<S>(2) * i * q).inverse()) * forms::f2_closed(be, x, 2)};
}

// -- psi(q^2) psi(q^6) and psi^3(q^3) / psi(q) --

// sum q^{s n - c} / (1 - q^{2(s n - c)})
template <class B>
typename B::Value odd_lambert(const B &be, int s, int c)
{
    using S = typename B::Scalar;
    return be.sum([&](int n) {
        const Mono<S> x = qp<S>(static_cast<long>(s) * n - c);
        Product<S> p(x);
        p.den1(x * x);
        return single(p);
    });
}

template <class B>
typename B::Value q_psi2_psi6(const B &be)
{
    return be.mono(qp<typename B::Scalar>(1)) * forms::psi(be, 2, PsiForm::product) *
           forms::psi(be, 6, PsiForm::product);
}

template <class B>
Sides<B> psi26_lambert(const B &be, const ParamSet &)
{
    return {q_psi2_psi6(be), odd_lambert(be, 6, 5) - odd_lambert(be, 6, 1)};
}

template <class B>
Sides<B> psi26_unitpair(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    const Mono<S> q = qp<S>(1);
    const Mono<S> Q = qp<S>(6);
    // sign * (1 - x Q^{2n}) / (1 - x) (x, x; Q)_n (Q;Q)_{2n-1} w^n / ((Q,Q;Q)_n (d;Q)_{2n})
    auto block = [&](const Mono<S> &x, const Mono<S> &w, const Mono<S> &d, int n, long sgn) {
        Product<S> p(cst<S>(sgn) * w.pow(n));
        p.num1(x * Q.pow(2 * n)).den1(x).num(x, 6, n).num(x, 6, n).num(Q, 6, 2L * n - 1);
        p.den(Q, 6, n).den(Q, 6, n).den(d, 6, 2L * n);
        return p;
    };
    const Mono<S> mq(S(-1), 1);
    auto s = be.sum([&](int n) {
        return Term<S>{block(-q.inverse(), mq.pow(5), q.pow(4), n, 1),
                       block(q.inverse(), q.pow(5), q.pow(4), n, -1),
                       block(q.pow(-5), q, q.pow(-4), n, 1),
                       block(-q.pow(-5), mq, q.pow(-4), n, -1)};
    });
    return {be.constant(S(2)) * q_psi2_psi6(be), s};
}

template <class B>
Sides<B> psi3_lambert(const B &be, const ParamSet &)
{
    using S = typename B::Scalar;
    auto p3 = forms::psi(be, 3, PsiForm::product);
    auto lhs = be.mono(qp<S>(1)) * p3 * p3 * p3 / forms::psi(be, 1, PsiForm::product);
    return {lhs, odd_lambert(be, 3, 2) - odd_lambert(be, 3, 1)};
}

QMonomial mono(long c, int e)
{
    return QMonomial(Coefficient(c), e);
}

void require_sqrt_k(const ParamSet &ps)
{
    if (ps.pair.empty()) {
        return;
    }
    const auto &aux = catalog_pair(ps.pair).aux;
    if (std::find(aux.begin(), aux.end(), "sqrt_k") == aux.end()) {
        return;
    }
    auto s = ps.values.find("s");
    if (s == ps.values.end()) {
        throw ParameterError("pair " + ps.pair + " needs s with s^2 = k");
    }
    if (!(s->second * s->second == ps.values.at("k"))) {
        throw ParameterError("parameter s must satisfy s^2 = k");
    }
}

void require_rho1_outside(const ParamSet &ps)
{
    const QMonomial &r = ps.values.at("rho1");
    const bool outside = r.expo() < 0 || (r.expo() == 0 && std::abs(r.coeff().to_complex()) > 1.0);
    if (!outside) {
        throw ParameterError("rho1 must satisfy |rho1| > 1 near q = 0 "
                             "(negative exponent, or exponent 0 with |coefficient| > 1)");
    }
}

#define WPB_SIDES(fn)                                                                     \
    [](const ParamSet &ps, const ExactBackend &be) -> ExactSides { return fn(be, ps); }, \
        [](const ParamSet &ps, const NumericBackend &be) -> NumericSides { return fn(be, ps); }

std::vector<IdentityEntry> build_registry()
{
    const std::map<std::string, QMonomial> none;
    const std::map<std::string, QMonomial> akz_pair = {
        {"a", mono(2, 1)}, {"k", mono(3, 1)}, {"z", mono(5, 1)}, {"rho1", mono(5, 1)}, {"rho2", mono(7, 1)}};
    const std::vector<std::function<void(const ParamSet &)>> sqrt_check = {require_sqrt_k};

    std::vector<IdentityEntry> v = {
        {"qgauss", "q-Gauss summation", {{"A", mono(2, 1)}, {"B", mono(3, 2)}, {"C", mono(5, 5)}},
         {}, PairKind::none, "", 40, {}, WPB_SIDES(qgauss)},
        {"eq03", "summation from the second WP-Bailey chain",
         {{"a", mono(2, 1)}, {"k", mono(3, 1)}, {"rho1", mono(5, 1)}, {"rho2", mono(7, 1)}},
         {"s"}, PairKind::wp, "trivial", 40, sqrt_check, WPB_SIDES(chain_sum)},
        {"thm1", "transformation in a, k, z against (1/a, 1/k, 1/z)", akz_pair, {"s"},
         PairKind::wp, "trivial", 40, sqrt_check, WPB_SIDES(transform1)},
        {"thm2", "transformation with (-a, -k) and (a^2, k^2, q^2)", akz_pair, {"s"},
         PairKind::wp, "trivial", 40, sqrt_check, WPB_SIDES(transform2)},
        {"thm3", "f2(a) - f2(b) - f2(1/a) + f2(1/b) through a derived pair",
         {{"a", mono(2, 1)}, {"b", QMonomial(Coefficient(7, 3), 2)}, {"rho1", mono(5, 1)}, {"rho2", mono(7, 1)}},
         {}, PairKind::derived, "singh-rho-inf*", 40, {}, WPB_SIDES(f2_quad)},
        {"eq117", "f(a,k,z) - f(1/a,1/k,1/z) as rational function plus product",
         {{"a", mono(2, 1)}, {"k", QMonomial(Coefficient(7, 3), 2)}, {"z", mono(5, 3)}}, {},
         PairKind::none, "", 40,
         {}, WPB_SIDES(f_difference)},
        {"cor1.1", "f1 through the singh-rho-inf derived pair", {{"a", mono(2, 1)}}, {},
         PairKind::none, "", 40, {}, WPB_SIDES(f1_singh_inf)},
        {"cor1.2", "f1 through the sqrtk derived pair", {{"a", mono(2, 1)}}, {}, PairKind::none,
         "", 40, {}, WPB_SIDES(f1_sqrtk)},
        {"cor2", "separable a, b series from the singh-rho-inf derived pair",
         {{"a", QMonomial(Coefficient(3, 2), 1)}, {"b", QMonomial(Coefficient(5, 4), 2)}}, {},
         PairKind::none, "", 40, {}, WPB_SIDES(ab_singh_inf)},
        {"cor3", "separable a, b series from the trivial derived pair",
         {{"a", QMonomial(Coefficient(3, 2))}, {"b", QMonomial(Coefficient(5, 4))}}, {},
         PairKind::none, "", 40, {}, WPB_SIDES(ab_trivial)},
        {"cor4.1", "a(q) as a q-Gauss type series", none, {}, PairKind::none, "", 60, {},
         WPB_SIDES(a_qgauss)},
        {"cor4.2", "a(q) through the unit derived pair", none, {}, PairKind::none, "", 60, {},
         WPB_SIDES(a_unitpair)},
        {"cor4.3", "a(q) through Singh's derived pair",
         {{"rho1", mono(5, 3)}, {"rho2", mono(7, 3)}}, {}, PairKind::none, "", 60, {},
         WPB_SIDES(a_singh)},
        {"cor4.4", "a(q) through the singh-rho-inf derived pair", none, {}, PairKind::none, "",
         60, {}, WPB_SIDES(a_singh_inf)},
        {"cor5.1", "psi^2(q^4) through the unit derived pair", none, {}, PairKind::none, "", 60,
         {}, WPB_SIDES(psi_unitpair)},
        {"cor5.2", "psi^2(q^4) through Singh's derived pair with rho2 -> infinity",
         {{"rho1", mono(5, -1)}}, {}, PairKind::none, "", 60, {require_rho1_outside},
         WPB_SIDES(psi_singh)},
        {"cor5.3", "psi^2(q^4) through the singh-rho-inf derived pair", none, {},
         PairKind::none, "", 60, {}, WPB_SIDES(psi_singh_inf)},
        {"psi2lambert", "psi^2(q^4) as f2(1/(iq), q^2)/(2iq)", none, {}, PairKind::none, "", 60,
         {}, WPB_SIDES(psi_lambert)},
        {"eq25", "q psi(q^2) psi(q^6) as a Lambert series", none, {}, PairKind::none, "", 60, {},
         WPB_SIDES(psi26_lambert)},
        {"cor6", "2q psi(q^2) psi(q^6) through the unit derived pair", none, {},
         PairKind::none, "", 60, {}, WPB_SIDES(psi26_unitpair)},
        {"eq27", "q psi^3(q^3) / psi(q) as a Lambert series", none, {}, PairKind::none, "", 60,
         {}, WPB_SIDES(psi3_lambert)},
    };
    std::sort(v.begin(), v.end(), [](const auto &x, const auto &y) { return x.id < y.id; });
    return v;
}

#undef WPB_SIDES

} // namespace

const std::vector<IdentityEntry> &registry()
{
    static const std::vector<IdentityEntry> r = build_registry();
    return r;
}

const IdentityEntry &find_identity(std::string_view id)
{
    for (const auto &e : registry()) {
        if (e.id == id) {
            return e;
        }
    }
    throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
}

ParamSet resolve_params(const IdentityEntry &e, const ParamSet &overrides)
{
    ParamSet ps;
    ps.values = e.default_params;
    for (const auto &[name, value] : overrides.values) {
        const bool known =
            e.default_params.count(name) != 0 ||
            std::find(e.optional_params.begin(), e.optional_params.end(), name) != e.optional_params.end();
        if (!known) {
            throw ParameterError("identity " + e.id + " has no parameter '" + name + "'");
        }
        ps.values.insert_or_assign(name, value);
    }
    if (!overrides.pair.empty() && e.pair_kind == PairKind::none) {
        throw ParameterError("identity " + e.id + " does not take a pair");
    }
    ps.pair = overrides.pair.empty() ? e.default_pair : overrides.pair;
    if (e.pair_kind == PairKind::wp) {
        catalog_pair(ps.pair);
    } else if (e.pair_kind == PairKind::derived) {
        catalog_derived(ps.pair);
    }
    for (const auto &check : e.constraints) {
        check(ps);
    }
    return ps;
}

ExactSides identity_sides(const IdentityEntry &e, const ParamSet &resolved, const ExactBackend &be)
{
    return e.exact(resolved, be);
}

NumericSides identity_sides(const IdentityEntry &e, const ParamSet &resolved,
                            const NumericBackend &be)
{
    return e.numeric(resolved, be);
}

VerificationReport verify(const IdentityEntry &e, const ParamSet &overrides, const VerifyOptions &opt)
{
    const auto t0 = std::chrono::steady_clock::now();
    const ParamSet ps = resolve_params(e, overrides);
    VerificationReport rep;
    rep.id = e.id;
    rep.pair = ps.pair;
    rep.backend = opt.backend;

    if (opt.backend == BackendKind::exact) {
        const int n = opt.order > 0 ? opt.order : e.default_order;
        rep.order = n;
        // Negative valuations cost precision in products and quotients;
        // widen the working order until both sides cover [.., n).
        int work = n;
        ExactSides sides;
        for (int attempt = 0;; ++attempt) {
            sides = e.exact(ps, ExactBackend(work, opt.sum));
            const int have = std::min(sides.first.order(), sides.second.order());
            if (have >= n) {
                break;
            }
            if (attempt == 4) {
                throw WindowExceedsOrder(e.id + ": sides known only below q^" + std::to_string(have) +
                                         " at working order " + std::to_string(work));
            }
            work += n - have;
        }
        const auto &[lhs, rhs] = sides;
        rep.pass = true;
        for (int x = std::min(lhs.valuation(), rhs.valuation()); x < n; ++x) {
            Coefficient l = lhs.coeff(x);
            Coefficient r = rhs.coeff(x);
            if (l != r) {
                rep.pass = false;
                rep.mismatch = Mismatch{x, l, r, l.to_complex(), r.to_complex(),
                                        std::abs(l.to_complex() - r.to_complex())};
                break;
            }
        }
    } else {
        rep.q0 = opt.q0;
        const auto [lhs, rhs] = e.numeric(ps, NumericBackend(opt.q0, opt.numeric));
        const double diff = std::abs(lhs - rhs);
        const double tol = opt.abs_tol + opt.rel_tol * std::max(std::abs(lhs), std::abs(rhs));
        rep.pass = std::isfinite(diff) && diff <= tol;
        if (!rep.pass) {
            rep.mismatch = Mismatch{std::nullopt, {}, {}, lhs, rhs, diff};
        }
    }
    rep.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

VerificationReport verify(std::string_view id, const ParamSet &overrides, const VerifyOptions &opt)
{
    return verify(find_identity(id), overrides, opt);
}

} // namespace wpb
