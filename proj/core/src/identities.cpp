#include <wpbailey/identities.hpp>

#include <cmath>

#include "forms.hpp"

namespace wpb {

namespace forms {

QSeries theta_a_lattice(int order)
{
    // m^2 + mn + n^2 >= max(|m|, |n|)^2 / 2 bounds the box.
    if (order <= 0) {
        return QSeries::zero(order);
    }
    const long box = static_cast<long>(std::ceil(std::sqrt(2.0 * order))) + 1;
    std::vector<Coefficient> c(static_cast<std::size_t>(order));
    for (long m = -box; m <= box; ++m) {
        for (long n = -box; n <= box; ++n) {
            const long e = m * m + m * n + n * n;
            if (e < order) {
                c[static_cast<std::size_t>(e)] += Coefficient(1);
            }
        }
    }
    return QSeries::from_coefficients(0, std::move(c), order);
}

CPoint theta_a_lattice(CPoint q0)
{
    const double r = std::abs(q0);
    if (r >= 1.0) {
        throw ParameterError("a(q) needs |q| < 1");
    }
    if (r == 0.0) {
        return {1.0, 0.0};
    }
    // Terms beyond the box are below |q|^{box^2/2} <= 1e-20.
    const long box = static_cast<long>(std::ceil(std::sqrt(2.0 * std::log(1e-20) / std::log(r)))) + 1;
    CPoint s(0.0, 0.0);
    for (long m = -box; m <= box; ++m) {
        for (long n = -box; n <= box; ++n) {
            s += std::pow(q0, static_cast<double>(m * m + m * n + n * n));
        }
    }
    return s;
}

} // namespace forms

QSeries f1_series(F1Variant variant, const QMonomial &a, int base, int order)
{
    return forms::f1(ExactBackend(order), variant, a, base);
}

QSeries f2_series(const QMonomial &a, int base, int order)
{
    return forms::f2_closed(ExactBackend(order), a, base);
}

QSeries f2_derived_series(const DerivedPairSpec &pair, const DerivedArgs<Coefficient> &args,
                          int order)
{
    return forms::f2_derived(ExactBackend(order), pair, args);
}

QSeries lemma_series(const DerivedPairSpec &pair, const DerivedArgs<Coefficient> &args,
                     int order)
{
    return forms::lemma_lhs(ExactBackend(order), pair, args);
}

QSeries f_series(const QMonomial &a, const QMonomial &k, const QMonomial &z, int order)
{
    return forms::f_abz(ExactBackend(order), a, k, z);
}

QSeries theta_psi(int base, int order, PsiForm form)
{
    if (base < 1) {
        throw ParameterError("psi needs base >= 1");
    }
    return forms::psi(ExactBackend(order), base, form);
}

QSeries theta_a(int order, AForm form)
{
    return forms::theta_a(ExactBackend(order), form);
}

} // namespace wpb
