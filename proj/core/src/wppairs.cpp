#include <wpbailey/wppairs.hpp>

#include <algorithm>
#include <cmath>

#include <wpbailey/errors.hpp>

namespace wpb {

namespace {

template <class S>
using M = Mono<S>;

template <class S>
M<S> qpow(long e)
{
    return M<S>::q(static_cast<int>(e));
}

template <class S>
const M<S> &need(const std::optional<M<S>> &v, const char *name, const char *pair)
{
    if (!v) {
        throw ParameterError(std::string("pair ") + pair + " needs parameter " + name);
    }
    return *v;
}

// (1 - a Q^{2n}) / (1 - a); the collapsed form of the sqrt(a) factors.
template <class S>
Product<S> well_poised(const M<S> &a, int b, int n)
{
    Product<S> p;
    if (n > 0) {
        p.num1(a * qpow<S>(2L * b * n)).den1(a);
    }
    return p;
}

template <class S>
Term<S> delta(int n)
{
    return n == 0 ? single(Product<S>()) : Term<S>{};
}

template <class S>
M<S> sign(int n)
{
    return M<S>(n % 2 == 0 ? S(1) : S(-1));
}

// -- unit pair: beta_n = delta_{n0} --

template <class S>
Term<S> unit_alpha(int n, const PairArgs<S> &A)
{
    const int b = A.base;
    const M<S> Q = qpow<S>(b);
    Product<S> p = well_poised(A.a, b, n);
    p.scale((A.k / A.a).pow(n));
    p.num(A.a, b, n).num(A.a / A.k, b, n).den(Q, b, n).den(A.k * Q, b, n);
    return single(p);
}

template <class S>
Term<S> unit_beta(int n, const PairArgs<S> &)
{
    return delta<S>(n);
}

// -- trivial pair: alpha_n = delta_{n0} --

template <class S>
Term<S> trivial_alpha(int n, const PairArgs<S> &)
{
    return delta<S>(n);
}

template <class S>
Term<S> trivial_beta(int n, const PairArgs<S> &A)
{
    const int b = A.base;
    const M<S> Q = qpow<S>(b);
    Product<S> p;
    p.num(A.k, b, n).num(A.k / A.a, b, n).den(Q, b, n).den(A.a * Q, b, n);
    return single(p);
}

// -- Singh's pair with parameters rho1, rho2 --

template <class S>
Term<S> singh_alpha(int n, const PairArgs<S> &A)
{
    const M<S> &r1 = need(A.rho1, "rho1", "singh");
    const M<S> &r2 = need(A.rho2, "rho2", "singh");
    const int b = A.base;
    const M<S> Q = qpow<S>(b);
    const M<S> &a = A.a;
    const M<S> &k = A.k;
    Product<S> p = well_poised(a, b, n);
    p.scale((k / a).pow(n));
    p.num(a, b, n).num(r1, b, n).num(r2, b, n).num(a * a * Q / (k * r1 * r2), b, n);
    p.den(Q, b, n).den(a * Q / r1, b, n).den(a * Q / r2, b, n).den(k * r1 * r2 / a, b, n);
    return single(p);
}

template <class S>
Term<S> singh_beta(int n, const PairArgs<S> &A)
{
    const M<S> &r1 = need(A.rho1, "rho1", "singh");
    const M<S> &r2 = need(A.rho2, "rho2", "singh");
    const int b = A.base;
    const M<S> Q = qpow<S>(b);
    const M<S> &a = A.a;
    const M<S> &k = A.k;
    Product<S> p;
    p.num(k * r1 / a, b, n).num(k * r2 / a, b, n).num(k, b, n).num(a * Q / (r1 * r2), b, n);
    p.den(a * Q / r1, b, n).den(a * Q / r2, b, n).den(k * r1 * r2 / a, b, n).den(Q, b, n);
    return single(p);
}

// -- Singh's pair in the limit rho1, rho2 -> infinity --

template <class S>
Term<S> singh_inf_alpha(int n, const PairArgs<S> &A)
{
    const int b = A.base;
    Product<S> p = well_poised(A.a, b, n);
    p.scale(sign<S>(n) * qpow<S>(static_cast<long>(b) * n * (n - 1) / 2));
    p.num(A.a, b, n).den(qpow<S>(b), b, n);
    return single(p);
}

template <class S>
Term<S> singh_inf_beta(int n, const PairArgs<S> &A)
{
    const int b = A.base;
    Product<S> p((-A.k / A.a).pow(n) * qpow<S>(static_cast<long>(b) * n * (n - 1) / 2));
    p.num(A.k, b, n).den(qpow<S>(b), b, n);
    return single(p);
}

// -- pair with beta in terms of sqrt(k) --

template <class S>
Term<S> sqrtk_alpha(int n, const PairArgs<S> &A)
{
    const M<S> &s = need(A.sqrt_k, "sqrt_k", "sqrtk");
    const int b = A.base;
    const M<S> Q = qpow<S>(b);
    const M<S> &a = A.a;
    const M<S> &k = A.k;
    Product<S> p = well_poised(a, b, n);
    p.scale((k / a).pow(n));
    p.num(a, b, n).num(a / s, b, n).num(-(a * Q / s), b, n).num(k / a, b, n);
    p.num(a * a * Q / k, 2 * b, n);
    p.den(Q, b, n).den(Q * s, b, n).den(-s, b, n).den(Q * a * a / k, b, n);
    p.den(k * Q, 2 * b, n);
    return single(p);
}

template <class S>
Term<S> sqrtk_beta(int n, const PairArgs<S> &A)
{
    const M<S> &s = need(A.sqrt_k, "sqrt_k", "sqrtk");
    const int b = A.base;
    const M<S> Q = qpow<S>(b);
    Product<S> p;
    p.num(s, b, n).num((A.k / A.a).pow(2), b, n).den(Q * s, b, n).den(Q, b, n);
    return single(p);
}

// -- derived pairs, n >= 1 --

template <class S>
Term<S> unit_alpha_star(int n, const DerivedArgs<S> &D)
{
    const int b = D.base;
    const M<S> Q = qpow<S>(b);
    Product<S> p = well_poised(D.a, b, n);
    p.scale(D.a.pow(-n));
    p.num(D.a, b, n).num(D.a, b, n).den(Q, b, n).den(Q, b, n);
    return single(p);
}

template <class S>
Term<S> zero_term(int, const DerivedArgs<S> &)
{
    return {};
}

template <class S>
Term<S> trivial_beta_star(int n, const DerivedArgs<S> &D)
{
    const int b = D.base;
    const M<S> Q = qpow<S>(b);
    Product<S> p;
    p.num(D.a.inverse(), b, n).den(D.a * Q, b, n).den1(qpow<S>(static_cast<long>(b) * n));
    return single(p);
}

template <class S>
Term<S> singh_alpha_star(int n, const DerivedArgs<S> &D)
{
    const M<S> &r1 = need(D.rho1, "rho1", "singh*");
    const M<S> &r2 = need(D.rho2, "rho2", "singh*");
    const int b = D.base;
    const M<S> Q = qpow<S>(b);
    const M<S> &a = D.a;
    Product<S> p = well_poised(a, b, n);
    p.scale(a.pow(-n));
    p.num(a, b, n).num(r1, b, n).num(r2, b, n).num(a * a * Q / (r1 * r2), b, n);
    p.den(Q, b, n).den(a * Q / r1, b, n).den(a * Q / r2, b, n).den(r1 * r2 / a, b, n);
    return single(p);
}

template <class S>
Term<S> singh_beta_star(int n, const DerivedArgs<S> &D)
{
    const M<S> &r1 = need(D.rho1, "rho1", "singh*");
    const M<S> &r2 = need(D.rho2, "rho2", "singh*");
    const int b = D.base;
    const M<S> Q = qpow<S>(b);
    const M<S> &a = D.a;
    Product<S> p;
    p.num(r1 / a, b, n).num(r2 / a, b, n).num(a * Q / (r1 * r2), b, n);
    p.den(a * Q / r1, b, n).den(a * Q / r2, b, n).den(r1 * r2 / a, b, n);
    p.den1(qpow<S>(static_cast<long>(b) * n));
    return single(p);
}

template <class S>
Term<S> singh_inf_alpha_star(int n, const DerivedArgs<S> &D)
{
    const int b = D.base;
    Product<S> p = well_poised(D.a, b, n);
    p.scale(sign<S>(n) * qpow<S>(static_cast<long>(b) * n * (n - 1) / 2));
    p.num(D.a, b, n).den(qpow<S>(b), b, n);
    return single(p);
}

template <class S>
Term<S> singh_inf_beta_star(int n, const DerivedArgs<S> &D)
{
    const int b = D.base;
    Product<S> p(sign<S>(n) * D.a.pow(-n) * qpow<S>(static_cast<long>(b) * n * (n - 1) / 2));
    p.den1(qpow<S>(static_cast<long>(b) * n));
    return single(p);
}

template <class S>
Term<S> sqrtk_alpha_star(int n, const DerivedArgs<S> &D)
{
    const int b = D.base;
    const M<S> Q = qpow<S>(b);
    const M<S> &a = D.a;
    Product<S> p = well_poised(a, b, n);
    p.scale(a.pow(-n));
    p.num(a, b, n).num(a, b, n).num(-(a * Q), b, n).num(a.inverse(), b, n);
    p.num(a * a * Q, 2 * b, n);
    p.den(Q, b, n).den(Q, b, n).den(M<S>(S(-1)), b, n).den(Q * a * a, b, n);
    p.den(Q, 2 * b, n);
    return single(p);
}

template <class S>
Term<S> sqrtk_beta_star(int n, const DerivedArgs<S> &D)
{
    const int b = D.base;
    const M<S> Q = qpow<S>(b);
    Product<S> p(M<S>(S(1) / S(2)));
    p.num(D.a.pow(-2), b, n).den(Q, b, n).den1(qpow<S>(static_cast<long>(b) * n));
    return single(p);
}

#define WPB_PAIR_FORMS(alpha, beta)                                                      \
    PairForms<Coefficient>{alpha<Coefficient>, beta<Coefficient>},                       \
        PairForms<CPoint> { alpha<CPoint>, beta<CPoint> }

#define WPB_DERIVED_FORMS(alpha, beta)                                                   \
    DerivedForms<Coefficient>{alpha<Coefficient>, beta<Coefficient>},                    \
        DerivedForms<CPoint> { alpha<CPoint>, beta<CPoint> }

const std::vector<PairSpec> &pairs()
{
    static const std::vector<PairSpec> v = {
        {"unit", "alpha_n closed form, beta_n = delta_{n0}", {},
         WPB_PAIR_FORMS(unit_alpha, unit_beta)},
        {"trivial", "alpha_n = delta_{n0}", {}, WPB_PAIR_FORMS(trivial_alpha, trivial_beta)},
        {"singh", "Singh's pair with parameters rho1, rho2", {"rho1", "rho2"},
         WPB_PAIR_FORMS(singh_alpha, singh_beta)},
        {"singh-rho-inf", "Singh's pair with rho1, rho2 -> infinity", {},
         WPB_PAIR_FORMS(singh_inf_alpha, singh_inf_beta)},
        {"sqrtk", "pair whose beta_n involves sqrt(k)", {"sqrt_k"},
         WPB_PAIR_FORMS(sqrtk_alpha, sqrtk_beta)},
    };
    return v;
}

const std::vector<DerivedPairSpec> &derived_pairs()
{
    static const std::vector<DerivedPairSpec> v = {
        {"unit*", "unit", "k -> 1 limit of the unit pair", {},
         WPB_DERIVED_FORMS(unit_alpha_star, zero_term)},
        {"trivial*", "trivial", "k -> 1 limit of the trivial pair", {},
         WPB_DERIVED_FORMS(zero_term, trivial_beta_star)},
        {"singh*", "singh", "k -> 1 limit of Singh's pair", {"rho1", "rho2"},
         WPB_DERIVED_FORMS(singh_alpha_star, singh_beta_star)},
        {"singh-rho-inf*", "singh-rho-inf", "k -> 1 limit of singh-rho-inf", {},
         WPB_DERIVED_FORMS(singh_inf_alpha_star, singh_inf_beta_star)},
        {"sqrtk*", "sqrtk", "k -> 1 limit of the sqrt(k) pair", {},
         WPB_DERIVED_FORMS(sqrtk_alpha_star, sqrtk_beta_star)},
    };
    return v;
}

#undef WPB_PAIR_FORMS
#undef WPB_DERIVED_FORMS

} // namespace

const PairSpec &catalog_pair(std::string_view id)
{
    for (const auto &p : pairs()) {
        if (p.id == id) {
            return p;
        }
    }
    throw UnknownPair("unknown WP-Bailey pair '" + std::string(id) + "'");
}

const DerivedPairSpec &catalog_derived(std::string_view id)
{
    for (const auto &p : derived_pairs()) {
        if (p.id == id) {
            return p;
        }
    }
    throw UnknownPair("unknown derived pair '" + std::string(id) + "'");
}

std::vector<std::string> catalog_pair_ids()
{
    std::vector<std::string> out;
    for (const auto &p : pairs()) {
        out.push_back(p.id);
    }
    return out;
}

std::vector<std::string> catalog_derived_ids()
{
    std::vector<std::string> out;
    for (const auto &p : derived_pairs()) {
        out.push_back(p.id);
    }
    return out;
}

namespace {

template <class S>
PairForms<S> chained(const PairForms<S> &src)
{
    // The source is evaluated at (a, q a^2 / k); with c = k^2 / (q a^2),
    //   alpha'_n = (q a^2/k)_{2n} / (k)_{2n} c^n alpha_n,
    //   beta'_n  = sum_j (c)_{n-j} / (q)_{n-j} c^j beta_j.
    auto inner = [](const PairArgs<S> &A) {
        PairArgs<S> r = A;
        r.k = qpow<S>(A.base) * A.a * A.a / A.k;
        return r;
    };
    PairForms<S> out;
    out.alpha = [src, inner](int n, const PairArgs<S> &A) {
        const int b = A.base;
        const M<S> c = A.k * A.k / (qpow<S>(b) * A.a * A.a);
        Product<S> p(c.pow(n));
        p.num(qpow<S>(b) * A.a * A.a / A.k, b, 2L * n).den(A.k, b, 2L * n);
        return src.alpha(n, inner(A)) * p;
    };
    out.beta = [src, inner](int n, const PairArgs<S> &A) {
        const int b = A.base;
        const M<S> c = A.k * A.k / (qpow<S>(b) * A.a * A.a);
        const PairArgs<S> in = inner(A);
        Term<S> acc;
        for (int j = 0; j <= n; ++j) {
            Product<S> p(c.pow(j));
            p.num(c, b, n - j).den(qpow<S>(b), b, n - j);
            acc = acc + src.beta(j, in) * p;
        }
        return acc;
    };
    return out;
}

} // namespace

PairSpec chain_step(const PairSpec &pair)
{
    if (std::find(pair.aux.begin(), pair.aux.end(), "sqrt_k") != pair.aux.end()) {
        throw ParameterError("pair " + pair.id +
                             " cannot be chained: sqrt(q a^2 / k) is not a monomial");
    }
    PairSpec out;
    out.id = pair.id + "+chain";
    out.description = "second WP-Bailey chain applied to " + pair.id;
    out.aux = pair.aux;
    out.exact = chained(pair.exact);
    out.numeric = chained(pair.numeric);
    return out;
}

WpCheckReport wp_check(const PairSpec &pair, const PairArgs<Coefficient> &args, int n_max,
                       int order)
{
    using S = Coefficient;
    const auto &f = pair.exact;
    const int b = args.base;
    const M<S> Q = qpow<S>(b);
    const M<S> &a = args.a;
    const M<S> &k = args.k;
    WpCheckReport rep;
    auto fail = [&](int n, const std::string &what) {
        rep.pass = false;
        rep.first_bad_n = n;
        rep.detail = what;
        return rep;
    };

    const QSeries one = QSeries::constant(Coefficient(1), order);
    if (!(evaluate(f.alpha(0, args), order) == one)) {
        return fail(0, "alpha_0 != 1");
    }
    if (!(evaluate(f.beta(0, args), order) == one)) {
        return fail(0, "beta_0 != 1");
    }
    std::vector<Term<S>> alphas;
    for (int j = 0; j <= n_max; ++j) {
        alphas.push_back(f.alpha(j, args));
    }
    for (int n = 0; n <= n_max; ++n) {
        Term<S> rhs;
        for (int j = 0; j <= n; ++j) {
            Product<S> kernel;
            kernel.num(k / a, b, n - j).num(k, b, n + j).den(Q, b, n - j).den(a * Q, b, n + j);
            rhs = rhs + alphas[static_cast<std::size_t>(j)] * kernel;
        }
        QSeries diff = evaluate(f.beta(n, args), order) - evaluate(rhs, order);
        if (!diff.is_zero()) {
            return fail(n, "beta_" + std::to_string(n) + " - sum = " + diff.to_string());
        }
    }
    return rep;
}

ProbeReport derived_limit_probe(const PairSpec &pair, const DerivedPairSpec &derived, CPoint a,
                                CPoint q, int n, double eps, std::optional<CPoint> rho1,
                                std::optional<CPoint> rho2, const NumericConfig &cfg)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw ParameterError("probe eps must lie in (0, 1)");
    }
    const CPoint k(1.0 - eps, 0.0);
    PairArgs<CPoint> A{CMonomial(a), CMonomial(k)};
    DerivedArgs<CPoint> D{CMonomial(a)};
    if (rho1) {
        A.rho1 = D.rho1 = CMonomial(*rho1);
    }
    if (rho2) {
        A.rho2 = D.rho2 = CMonomial(*rho2);
    }
    A.sqrt_k = CMonomial(std::sqrt(k));
    ProbeReport rep;
    rep.alpha_residual = std::abs(evaluate(pair.numeric.alpha(n, A), q, cfg) -
                                  evaluate(derived.numeric.alpha_star(n, D), q, cfg));
    rep.beta_residual = std::abs(evaluate(pair.numeric.beta(n, A), q, cfg) / eps -
                                 evaluate(derived.numeric.beta_star(n, D), q, cfg));
    return rep;
}

} // namespace wpb
