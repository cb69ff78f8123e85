#pragma once

// Series builders written once against the backend interface
// (ExactBackend / NumericBackend) so both evaluate the same formulas.

#include <cmath>
#include <map>
#include <string>

#include <wpbailey/backend.hpp>
#include <wpbailey/errors.hpp>
#include <wpbailey/identities.hpp>
#include <wpbailey/wppairs.hpp>

namespace wpb::forms {

template <class S>
Mono<S> lift(const QMonomial &m)
{
    if constexpr (std::is_same_v<S, Coefficient>) {
        return m;
    } else {
        return to_numeric(m);
    }
}

template <class S>
Mono<S> qp(long e)
{
    return Mono<S>::q(static_cast<int>(e));
}

template <class S>
Mono<S> cst(long num, long den = 1)
{
    if constexpr (std::is_same_v<S, Coefficient>) {
        return Mono<S>(Coefficient(num, den));
    } else {
        return Mono<S>(CPoint(static_cast<double>(num) / static_cast<double>(den), 0.0));
    }
}

template <class S>
Mono<S> imag()
{
    return Mono<S>(scalar::imag_unit<S>());
}

// x Q^n / (1 - x Q^n), one Lambert block summand.
template <class S>
Term<S> lambert_term(const Mono<S> &x, int base, int n)
{
    const Mono<S> t = x * qp<S>(static_cast<long>(base) * n);
    Product<S> p(t);
    p.den1(t);
    return single(p);
}

/// sum_{n>=1} x Q^n / (1 - x Q^n) with Q = q^base.
template <class B>
typename B::Value lambert(const B &be, const Mono<typename B::Scalar> &x, int base)
{
    return be.sum([&](int n) { return lambert_term(x, base, n); });
}

template <class B>
typename B::Value f1(const B &be, F1Variant v, const Mono<typename B::Scalar> &a, int base)
{
    using S = typename B::Scalar;
    const Mono<S> Q = qp<S>(base);
    switch (v) {
    case F1Variant::lambert:
        return lambert(be, a * a, base) - lambert(be, a, base);
    case F1Variant::qgauss:
        return be.sum([&](int n) {
            Product<S> p(a.pow(2 * n) * Q.pow(n));
            p.num(a.inverse(), base, n).den(a * Q, base, n).den1(Q.pow(n));
            return single(p);
        });
    case F1Variant::unitpair:
        return be.sum([&](int n) {
            Product<S> p(-(a.pow(n) * Q.pow(n)));
            p.num1(a * Q.pow(2 * n)).den1(a);
            p.num(a, base, n).num(a, base, n).num(Q, base, 2L * n - 1);
            p.den(Q, base, n).den(Q, base, n).den(Q * a * a, base, 2L * n);
            return single(p);
        });
    }
    throw ParameterError("unknown f1 variant");
}

/// sum_n x^{2n} Q^n beta*_n(x) - sum_n (Q;Q)_{2n-1}/(Q x^2;Q)_{2n} x^{2n} Q^n alpha*_n(x)
template <class S>
Term<S> lemma_term(const DerivedForms<S> &d, const DerivedArgs<S> &args, int n)
{
    const int b = args.base;
    const Mono<S> &x = args.a;
    const Mono<S> Q = qp<S>(b);
    const Mono<S> w = x.pow(2 * n) * Q.pow(n);
    Product<S> cb(w);
    Product<S> ca(-w);
    ca.num(Q, b, 2L * n - 1).den(Q * x * x, b, 2L * n);
    return d.beta_star(n, args) * cb + d.alpha_star(n, args) * ca;
}

template <class B>
typename B::Value lemma_lhs(const B &be, const DerivedPairSpec &d,
                            const DerivedArgs<typename B::Scalar> &args)
{
    using S = typename B::Scalar;
    const auto &f = d.forms<S>();
    return be.sum([&](int n) { return lemma_term(f, args, n); });
}

/// f2 through an arbitrary derived pair: L(a) - L(-a).
template <class B>
typename B::Value f2_derived(const B &be, const DerivedPairSpec &d,
                             const DerivedArgs<typename B::Scalar> &args)
{
    using S = typename B::Scalar;
    const auto &f = d.forms<S>();
    const DerivedArgs<S> neg = args.with_a(-args.a);
    return be.sum([&](int n) { return lemma_term(f, args, n) - lemma_term(f, neg, n); });
}

/// -sum 2 a Q^n / (1 - a^2 Q^{2n}).
template <class B>
typename B::Value f2_closed(const B &be, const Mono<typename B::Scalar> &a, int base)
{
    using S = typename B::Scalar;
    const Mono<S> Q = qp<S>(base);
    return be.sum([&](int n) {
        Product<S> p(cst<S>(-2) * a * Q.pow(n));
        p.den1(a * a * Q.pow(2 * n));
        return single(p);
    });
}

template <class B>
typename B::Value f_abz(const B &be, const Mono<typename B::Scalar> &a,
                        const Mono<typename B::Scalar> &k, const Mono<typename B::Scalar> &z)
{
    return lambert(be, k, 1) + lambert(be, a / z, 1) - lambert(be, a, 1) - lambert(be, k / z, 1);
}

template <class B>
typename B::Value psi(const B &be, int base, PsiForm form)
{
    using S = typename B::Scalar;
    if (form == PsiForm::product) {
        Product<S> p;
        p.num_inf(qp<S>(2L * base), 2 * base).den_inf(qp<S>(base), 2 * base);
        return be.eval(p);
    }
    return be.sum([&](int n) { return single(Product<S>(qp<S>(static_cast<long>(base) * n * (n + 1) / 2))); },
                  0);
}

/// Cubic theta series by direct lattice summation.
QSeries theta_a_lattice(int order);
CPoint theta_a_lattice(CPoint q0);

template <class B>
typename B::Value theta_a(const B &be, AForm form)
{
    using S = typename B::Scalar;
    if (form == AForm::lambert) {
        return be.constant(S(1)) + be.constant(S(6)) * f1(be, F1Variant::lambert, qp<S>(-1), 3);
    }
    if constexpr (std::is_same_v<B, ExactBackend>) {
        return theta_a_lattice(be.order());
    } else {
        return theta_a_lattice(be.q());
    }
}

} // namespace wpb::forms
