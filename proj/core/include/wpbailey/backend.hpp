#pragma once

#include <functional>

#include <wpbailey/expr.hpp>
#include <wpbailey/qnumeric.hpp>
#include <wpbailey/qseries.hpp>

namespace wpb {

enum class BackendKind { exact, numeric };

/// Evaluates expressions as truncated Laurent series with exact coefficients.
/// Products are expanded straight to order(); infinite sums use the
/// valuation-streak rule of adaptive_sum, decided from factor exponents
/// before any coefficient work is done.
class ExactBackend {
public:
    using Scalar = Coefficient;
    using Value = QSeries;
    static constexpr BackendKind kind = BackendKind::exact;

    explicit ExactBackend(int order, SumConfig cfg = {}) : order_(order), cfg_(cfg) {}

    int order() const { return order_; }
    const SumConfig &config() const { return cfg_; }

    Value zero() const { return QSeries::zero(order_); }
    Value constant(const Scalar &c) const { return QSeries::constant(c, order_); }
    Value mono(const Mono<Scalar> &m) const { return QSeries::monomial(m, order_); }
    Value eval(const Product<Scalar> &p) const { return evaluate(p, order_); }
    Value eval(const Term<Scalar> &t) const { return evaluate(t, order_); }
    /// sum_{n >= start} term(n).
    Value sum(const std::function<Term<Scalar>(int)> &term, int start = 1) const;

private:
    int order_;
    SumConfig cfg_;
};

/// Evaluates the same expressions in double precision at a point q0 with
/// |q0| < 1.
class NumericBackend {
public:
    using Scalar = CPoint;
    using Value = CPoint;
    static constexpr BackendKind kind = BackendKind::numeric;

    explicit NumericBackend(CPoint q0, NumericConfig cfg = {});

    CPoint q() const { return q_; }
    const NumericConfig &config() const { return cfg_; }

    Value zero() const { return {0.0, 0.0}; }
    Value constant(const Scalar &c) const { return c; }
    Value mono(const Mono<Scalar> &m) const { return m.at(q_); }
    Value eval(const Product<Scalar> &p) const { return evaluate(p, q_, cfg_); }
    Value eval(const Term<Scalar> &t) const { return evaluate(t, q_, cfg_); }
    Value sum(const std::function<Term<Scalar>(int)> &term, int start = 1) const;

private:
    CPoint q_;
    NumericConfig cfg_;
};

} // namespace wpb
