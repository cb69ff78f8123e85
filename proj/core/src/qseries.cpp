#include <wpbailey/qseries.hpp>

#include <algorithm>
#include <sstream>

namespace wpb {

namespace {

const Coefficient &zero_coefficient()
{
    static const Coefficient z;
    return z;
}

} // namespace

QSeries::QSeries(int order, int val, std::vector<Coefficient> coeffs)
    : order_(order), val_(val), coeffs_(std::move(coeffs))
{
    normalize();
}

void QSeries::normalize()
{
    if (static_cast<long>(val_) + static_cast<long>(coeffs_.size()) > order_) {
        coeffs_.resize(order_ > val_ ? static_cast<std::size_t>(order_ - val_) : 0);
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const Coefficient &c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        val_ = order_;
        return;
    }
    auto skip = first - coeffs_.begin();
    coeffs_.erase(coeffs_.begin(), first);
    val_ += static_cast<int>(skip);
    coeffs_.resize(static_cast<std::size_t>(order_ - val_));
}

QSeries QSeries::zero(int order)
{
    QSeries s;
    s.order_ = order;
    s.val_ = order;
    return s;
}

QSeries QSeries::constant(const Coefficient &c, int order)
{
    return QSeries(order, 0, {c});
}

QSeries QSeries::monomial(const QMonomial &m, int order)
{
    return QSeries(order, m.expo(), {m.coeff()});
}

QSeries QSeries::from_coefficients(int lowest, std::vector<Coefficient> coeffs, int order)
{
    if (lowest >= order) {
        return zero(order);
    }
    return QSeries(order, lowest, std::move(coeffs));
}

Coefficient QSeries::coeff(int e) const
{
    if (e >= order_) {
        throw WindowExceedsOrder("coefficient of q^" + std::to_string(e) +
                                 " requested from a series known to order " +
                                 std::to_string(order_));
    }
    if (e < val_) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(e - val_)];
}

std::vector<Coefficient> QSeries::window(int lo, int hi) const
{
    if (hi > order_) {
        throw WindowExceedsOrder("window [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                 ") exceeds truncation order " + std::to_string(order_));
    }
    std::vector<Coefficient> out;
    for (int e = lo; e < hi; ++e) {
        out.push_back(e < val_ ? zero_coefficient() : coeffs_[static_cast<std::size_t>(e - val_)]);
    }
    return out;
}

QSeries QSeries::truncated(int order) const
{
    if (order >= order_) {
        return *this;
    }
    return QSeries(order, val_, coeffs_);
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

QSeries &QSeries::operator+=(const QSeries &o)
{
    int order = std::min(order_, o.order_);
    int lo = std::min(val_, o.val_);
    if (lo >= order) {
        *this = zero(order);
        return *this;
    }
    std::vector<Coefficient> out(static_cast<std::size_t>(order - lo));
    for (std::size_t i = 0; i < coeffs_.size() && val_ + static_cast<int>(i) < order; ++i) {
        out[static_cast<std::size_t>(val_ - lo) + i] = coeffs_[i];
    }
    for (std::size_t i = 0; i < o.coeffs_.size() && o.val_ + static_cast<int>(i) < order; ++i) {
        out[static_cast<std::size_t>(o.val_ - lo) + i] += o.coeffs_[i];
    }
    *this = QSeries(order, lo, std::move(out));
    return *this;
}

QSeries &QSeries::operator-=(const QSeries &o)
{
    return *this += -o;
}

QSeries operator*(const QSeries &a, const QSeries &b)
{
    int order = std::min(a.order_ + b.val_, b.order_ + a.val_);
    if (a.is_zero() || b.is_zero()) {
        return QSeries::zero(order);
    }
    int val = a.val_ + b.val_;
    if (val >= order) {
        return QSeries::zero(order);
    }
    auto len = static_cast<std::size_t>(order - val);
    std::vector<Coefficient> out(len);
    for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size() && i + j < len; ++j) {
            out[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
        }
    }
    return QSeries(order, val, std::move(out));
}

QSeries operator*(const QSeries &a, const QMonomial &m)
{
    QSeries r = a;
    r.order_ += m.expo();
    r.val_ += m.expo();
    for (auto &c : r.coeffs_) {
        c *= m.coeff();
    }
    return r;
}

QSeries operator*(const QSeries &a, const Coefficient &c)
{
    if (c.is_zero()) {
        return QSeries::zero(a.order_);
    }
    QSeries r = a;
    for (auto &x : r.coeffs_) {
        x *= c;
    }
    return r;
}

QSeries operator/(const QSeries &a, const QSeries &b)
{
    return a * b.inverse();
}

QSeries QSeries::inverse() const
{
    if (is_zero()) {
        throw SingularSeries("cannot invert a series that is zero through order " +
                             std::to_string(order_));
    }
    // x = c q^v (1 + g); (1 + g)^{-1} has the same relative precision.
    const Coefficient lead_inv = coeffs_.front().inverse();
    const std::size_t rel = coeffs_.size();
    std::vector<Coefficient> g(rel);
    for (std::size_t i = 1; i < rel; ++i) {
        g[i] = coeffs_[i] * lead_inv;
    }
    std::vector<Coefficient> b(rel);
    b[0] = Coefficient(1);
    for (std::size_t n = 1; n < rel; ++n) {
        Coefficient acc;
        for (std::size_t i = 1; i <= n; ++i) {
            acc.sub_product(g[i], b[n - i]);
        }
        b[n] = std::move(acc);
    }
    for (auto &x : b) {
        x *= lead_inv;
    }
    return QSeries(order_ - 2 * val_, -val_, std::move(b));
}

QSeries QSeries::substitute_power(int k) const
{
    if (k < 1) {
        throw std::invalid_argument("substitute_power requires k >= 1");
    }
    if (is_zero()) {
        return zero(order_ * k);
    }
    // Exponents that are not multiples of k are exactly zero, so everything
    // below k * order is determined.
    std::vector<Coefficient> out(static_cast<std::size_t>((order_ - val_) * k));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out[i * static_cast<std::size_t>(k)] = coeffs_[i];
    }
    return QSeries(order_ * k, val_ * k, std::move(out));
}

void QSeries::mul_binomial(const Coefficient &d, int f)
{
    if (f < 1) {
        throw std::invalid_argument("mul_binomial requires f >= 1");
    }
    for (std::size_t i = coeffs_.size(); i-- > static_cast<std::size_t>(f);) {
        coeffs_[i].sub_product(d, coeffs_[i - static_cast<std::size_t>(f)]);
    }
}

void QSeries::div_binomial(const Coefficient &d, int f)
{
    if (f < 1) {
        throw std::invalid_argument("div_binomial requires f >= 1");
    }
    for (std::size_t i = static_cast<std::size_t>(f); i < coeffs_.size(); ++i) {
        coeffs_[i].add_product(d, coeffs_[i - static_cast<std::size_t>(f)]);
    }
}

double QSeries::l1_norm() const
{
    double s = 0.0;
    for (const auto &c : coeffs_) {
        s += c.l1_norm();
    }
    return s;
}

std::string QSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << coeffs_[i] << ")q^" << val_ + static_cast<int>(i);
    }
    if (!first) {
        os << " + ";
    }
    os << "O(q^" << order_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

BinomialProduct::BinomialProduct(const QMonomial &scale)
    : lead_coeff_(scale.coeff()), lead_expo_(scale.expo())
{
}

void BinomialProduct::scale_by(const QMonomial &m)
{
    lead_coeff_ *= m.coeff();
    lead_expo_ += m.expo();
}

void BinomialProduct::add_pochhammer(const QMonomial &x, int base, long len, bool denominator,
                                     const std::string &label)
{
    if (base < 1) {
        throw std::invalid_argument("pochhammer base power must be >= 1");
    }
    if (len == 0) {
        return;
    }
    const int m = x.expo();
    const Coefficient &c = x.coeff();
    const bool unbounded = len < 0;
    auto in_range = [&](long j) { return unbounded || j < len; };

    // Factors with negative exponent: 1 - c q^e = (-c q^e)(1 - c^{-1} q^{-e}).
    if (m < 0) {
        const Coefficient c_inv = c.inverse();
        for (long j = 0; m + base * j < 0 && in_range(j); ++j) {
            const int e = m + base * static_cast<int>(j);
            if (!zero_) {
                if (denominator) {
                    lead_coeff_ /= -c;
                } else {
                    lead_coeff_ *= -c;
                }
            }
            lead_expo_ += denominator ? -e : e;
            chains_.push_back({c_inv, -e, 1, 1, denominator});
        }
    }
    // Constant factor 1 - c.
    if (m <= 0 && (-m) % base == 0 && in_range((-m) / base)) {
        if (c.is_one()) {
            if (denominator) {
                std::string what = label.empty() ? "(" + x.to_string() + "; q^" +
                                                       std::to_string(base) + ")"
                                                 : label;
                throw PoleDetected("denominator factor 1 - " + x.shifted(base * ((-m) / base)).to_string() +
                                   " of " + what + " vanishes (j = " + std::to_string((-m) / base) + ")");
            }
            zero_ = true;
        } else if (!zero_) {
            Coefficient one_minus = Coefficient(1) - c;
            if (denominator) {
                lead_coeff_ /= one_minus;
            } else {
                lead_coeff_ *= one_minus;
            }
        }
    }
    // Factors 1 - c q^e with e >= 1 form an arithmetic progression.
    const long j1 = m > 0 ? 0 : (-m) / base + 1;
    if (!in_range(j1)) {
        return;
    }
    chains_.push_back({c, m + base * static_cast<int>(j1), base, unbounded ? -1 : len - j1, denominator});
}

QSeries BinomialProduct::evaluate(int order) const
{
    if (zero_) {
        return QSeries::zero(order);
    }
    const long rel = static_cast<long>(order) - lead_expo_;
    if (rel <= 0) {
        return QSeries::zero(order);
    }
    std::vector<Coefficient> body(static_cast<std::size_t>(rel));
    body[0] = lead_coeff_;
    QSeries s = QSeries::from_coefficients(lead_expo_, std::move(body), order);
    for (const auto &ch : chains_) {
        long k = 0;
        for (long f = ch.first; f < rel && (ch.count < 0 || k < ch.count); f += ch.step, ++k) {
            if (ch.denominator) {
                s.div_binomial(ch.d, static_cast<int>(f));
            } else {
                s.mul_binomial(ch.d, static_cast<int>(f));
            }
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

QSeries poch_finite(const QMonomial &x, int base, int n, int order)
{
    if (n < 0) {
        throw std::invalid_argument("poch_finite requires n >= 0");
    }
    BinomialProduct p;
    p.add_pochhammer(x, base, n, false);
    return p.evaluate(order);
}

QSeries poch_finite(const QSeries &x, int base, int n)
{
    if (n < 0) {
        throw std::invalid_argument("poch_finite requires n >= 0");
    }
    // Each factor 1 - x q^{bj} is known to order x.order() + b j.
    auto factor = [&](int j) {
        return QSeries::constant(Coefficient(1), x.order() + base * j) - x * QMonomial::q(base * j);
    };
    if (n == 0) {
        return QSeries::constant(Coefficient(1), x.order());
    }
    QSeries acc = factor(0);
    for (int j = 1; j < n; ++j) {
        acc = acc * factor(j);
    }
    return acc;
}

QSeries poch_infinite(const QMonomial &x, int base, int order)
{
    BinomialProduct p;
    p.add_pochhammer(x, base, -1, false);
    return p.evaluate(order);
}

QSeries adaptive_sum(const std::function<QSeries(int)> &term, int order, const SumConfig &cfg,
                     int start)
{
    QSeries acc = QSeries::zero(order);
    int streak = 0;
    for (int n = start; n < start + cfg.max_terms; ++n) {
        QSeries t = term(n);
        if (t.valuation() >= order && t.order() >= order) {
            if (++streak >= cfg.stop_streak) {
                return acc;
            }
            continue;
        }
        streak = 0;
        acc += t;
    }
    throw NonConvergent("series did not settle below order " + std::to_string(order) + " within " +
                        std::to_string(cfg.max_terms) + " terms");
}

std::vector<Coefficient> coeff_window(const QSeries &x, int lo, int hi)
{
    return x.window(lo, hi);
}

} // namespace wpb
