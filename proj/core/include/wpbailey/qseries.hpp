#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <wpbailey/coefficient.hpp>
#include <wpbailey/errors.hpp>
#include <wpbailey/mono.hpp>

namespace wpb {

/// Truncated Laurent series sum_{val <= e < order} c_e q^e.
///
/// Coefficients at exponents >= order are unknown, not zero. Every operation
/// returns the tightest order it can prove, so results never report digits
/// that the inputs did not determine. The zero series stores no coefficients
/// and reports valuation() == order().
class QSeries {
public:
    /// Zero series known to order 0.
    QSeries() = default;

    static QSeries zero(int order);
    static QSeries constant(const Coefficient &c, int order);
    static QSeries monomial(const QMonomial &m, int order);
    /// Coefficients for exponents lowest, lowest+1, ...; entries at or past
    /// `order` are dropped.
    static QSeries from_coefficients(int lowest, std::vector<Coefficient> coeffs, int order);

    int order() const { return order_; }
    int valuation() const { return val_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of q^e. Throws WindowExceedsOrder for e >= order().
    Coefficient coeff(int e) const;
    /// Coefficients for exponents lo..hi-1, zero-filled.
    std::vector<Coefficient> window(int lo, int hi) const;

    /// Drops everything at exponent >= order (no-op if already tighter).
    QSeries truncated(int order) const;

    QSeries operator-() const;
    QSeries &operator+=(const QSeries &o);
    QSeries &operator-=(const QSeries &o);
    friend QSeries operator+(QSeries a, const QSeries &b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries &b) { return a -= b; }
    friend QSeries operator*(const QSeries &a, const QSeries &b);
    friend QSeries operator*(const QSeries &a, const QMonomial &m);
    friend QSeries operator*(const QMonomial &m, const QSeries &a) { return a * m; }
    friend QSeries operator*(const QSeries &a, const Coefficient &c);
    /// a * inverse(b).
    friend QSeries operator/(const QSeries &a, const QSeries &b);

    /// Multiplicative inverse; valuation becomes -valuation(), order
    /// order - 2*valuation. Throws SingularSeries on the zero series.
    QSeries inverse() const;

    /// q -> q^k for k >= 1.
    QSeries substitute_power(int k) const;

    /// In-place multiply / divide by the exact factor (1 - d q^f), f >= 1.
    void mul_binomial(const Coefficient &d, int f);
    void div_binomial(const Coefficient &d, int f);

    /// Sum of |re| + |im| over stored coefficients.
    double l1_norm() const;

    std::string to_string() const;

    friend bool operator==(const QSeries &a, const QSeries &b)
    {
        return a.order_ == b.order_ && a.val_ == b.val_ && a.coeffs_ == b.coeffs_;
    }

private:
    QSeries(int order, int val, std::vector<Coefficient> coeffs);
    void normalize();

    int order_ = 0;
    int val_ = 0;
    // Dense coefficients for exponents val_ .. val_ + coeffs_.size() - 1;
    // always coeffs_.size() == order_ - val_ unless the series is zero.
    std::vector<Coefficient> coeffs_;
};

/// Exact product prod (1 - c_j q^{e_j})^{+-1} times a monomial, expanded to a
/// requested order only when evaluate() is called.
///
/// Factors with e <= 0 are folded into a leading monomial immediately, so the
/// valuation of the product is known before any expansion; each remaining
/// factor is (1 - d q^f) with f >= 1 and is applied in O(order) time.
class BinomialProduct {
public:
    explicit BinomialProduct(const QMonomial &scale = QMonomial(Coefficient(1)));

    /// (x; q^base)_len with x = c q^m; len < 0 means the infinite product.
    /// `label` names the factor in PoleDetected messages.
    void add_pochhammer(const QMonomial &x, int base, long len, bool denominator,
                        const std::string &label = {});
    void add_binomial(const QMonomial &x, bool denominator, const std::string &label = {})
    {
        add_pochhammer(x, 1, 1, denominator, label);
    }
    void scale_by(const QMonomial &m);

    bool is_zero() const { return zero_; }
    /// Exact valuation (meaningless when is_zero()).
    int valuation() const { return lead_expo_; }

    QSeries evaluate(int order) const;

private:
    struct Chain {
        Coefficient d;
        int first;  // exponent of the first factor, >= 1
        int step;   // > 0
        long count; // < 0: unbounded
        bool denominator;
    };

    Coefficient lead_coeff_{1};
    int lead_expo_ = 0;
    bool zero_ = false;
    std::vector<Chain> chains_;
};

/// (x; q^base)_n truncated at `order`.
QSeries poch_finite(const QMonomial &x, int base, int n, int order);
/// prod_{j<n} (1 - x q^{base j}) for a series-valued x.
QSeries poch_finite(const QSeries &x, int base, int n);
/// (x; q^base)_inf truncated at `order`; the zero series if some factor is
/// exactly zero.
QSeries poch_infinite(const QMonomial &x, int base, int order);

struct SumConfig {
    int stop_streak = 3;
    int max_terms = 100000;
};

/// sum_{n >= start} term(n) to `order`. Stops after cfg.stop_streak
/// consecutive terms with valuation >= order; throws NonConvergent after
/// cfg.max_terms terms.
QSeries adaptive_sum(const std::function<QSeries(int)> &term, int order,
                     const SumConfig &cfg = {}, int start = 1);

/// Coefficients of x for exponents lo..hi-1. Throws WindowExceedsOrder when
/// hi > x.order().
std::vector<Coefficient> coeff_window(const QSeries &x, int lo, int hi);

} // namespace wpb
