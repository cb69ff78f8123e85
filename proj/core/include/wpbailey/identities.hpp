#pragma once

#include <wpbailey/qseries.hpp>
#include <wpbailey/wppairs.hpp>

namespace wpb {

/// The three closed representations of f1(a, q).
enum class F1Variant { lambert, qgauss, unitpair };
enum class PsiForm { sum, product };
enum class AForm { lattice, lambert };

/// f1(a, q^base) = sum a^2 Q^n/(1 - a^2 Q^n) - sum a Q^n/(1 - a Q^n), or one of
/// its two hypergeometric forms.
QSeries f1_series(F1Variant variant, const QMonomial &a, int base, int order);

/// f2(a, q^base) = -sum 2 a Q^n / (1 - a^2 Q^{2n}).
QSeries f2_series(const QMonomial &a, int base, int order);

/// f2 assembled from a derived pair:
///   L(a) - L(-a),  L(x) = sum x^{2n} Q^n beta*_n(x)
///                        - sum (Q;Q)_{2n-1}/(Q x^2;Q)_{2n} x^{2n} Q^n alpha*_n(x).
QSeries f2_derived_series(const DerivedPairSpec &pair, const DerivedArgs<Coefficient> &args,
                          int order);

/// Left side of the derived-pair summation, L(a) above; equals f1(a).
QSeries lemma_series(const DerivedPairSpec &pair, const DerivedArgs<Coefficient> &args,
                     int order);

/// f(a, k, z) = sum kq^n/(1-kq^n) + sum (a/z)q^n/(1-(a/z)q^n)
///            - sum aq^n/(1-aq^n) - sum (k/z)q^n/(1-(k/z)q^n).
QSeries f_series(const QMonomial &a, const QMonomial &k, const QMonomial &z, int order);

/// psi(q^base) = sum_{n>=0} q^{base n(n+1)/2} = (Q^2;Q^2)_inf / (Q;Q^2)_inf.
QSeries theta_psi(int base, int order, PsiForm form);

/// a(q) = sum_{m,n} q^{m^2+mn+n^2}, by lattice count or as 1 + 6 f1(1/q, q^3).
QSeries theta_a(int order, AForm form);

} // namespace wpb
