#pragma once

#include <functional>

#include <wpbailey/expr.hpp>
#include <wpbailey/mono.hpp>
#include <wpbailey/qseries.hpp>

namespace wpb {

/// Stopping and safety thresholds for double-precision evaluation.
struct NumericConfig {
    double term_tol = 1e-15; ///< relative tail threshold
    int streak = 3;
    int max_terms = 100000;
    double pole_tol = 1e-8; ///< smallest admissible |1 - x q^j| in a denominator

    /// Throws ParameterError unless 0 < term_tol < 1, streak >= 1, pole_tol > 0.
    void validate() const;
};

/// Marker for an infinite product length.
inline constexpr long kInfinite = -1;

/// (x; q)_n for n >= 0, or (x; q)_inf when n == kInfinite. Any factor with
/// |1 - x q^j| < pole_tol raises PoleProximity.
CPoint num_poch(CPoint x, CPoint q, long n, const NumericConfig &cfg = {});

/// sum_{n >= start} term(n), stopping once |term| <= term_tol * |partial sum|
/// holds for cfg.streak consecutive terms.
CPoint num_sum(const std::function<CPoint(int)> &term, const NumericConfig &cfg = {},
               int start = 1);

/// sum_e c_e q0^e over the stored window of x.
CPoint eval_series_at(const QSeries &x, CPoint q0);

/// Numeric value of a product at q0. Denominators are pole-checked;
/// numerators may vanish.
CPoint evaluate(const Product<CPoint> &p, CPoint q0, const NumericConfig &cfg = {});
CPoint evaluate(const Term<CPoint> &t, CPoint q0, const NumericConfig &cfg = {});

} // namespace wpb
