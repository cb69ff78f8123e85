#include <wpbailey/backend.hpp>

#include <cmath>

namespace wpb {

ExactBackend::Value ExactBackend::sum(const std::function<Term<Scalar>(int)> &term, int start) const
{
    // First pass decides the cutoff from valuations alone, so a divergent
    // parameter choice costs no series arithmetic.
    std::vector<Term<Scalar>> contributing;
    int streak = 0;
    for (int n = start;; ++n) {
        if (n - start >= cfg_.max_terms) {
            throw NonConvergent("series did not settle below order " + std::to_string(order_) +
                                " within " + std::to_string(cfg_.max_terms) +
                                " terms; parameters likely violate its convergence region");
        }
        Term<Scalar> t = term(n);
        std::optional<int> v = valuation(t);
        if (!v || *v >= order_) {
            if (++streak >= cfg_.stop_streak) {
                break;
            }
            continue;
        }
        streak = 0;
        contributing.push_back(std::move(t));
    }
    QSeries acc = zero();
    for (const auto &t : contributing) {
        acc += evaluate(t, order_);
    }
    return acc;
}

NumericBackend::NumericBackend(CPoint q0, NumericConfig cfg) : q_(q0), cfg_(cfg)
{
    cfg_.validate();
    if (!std::isfinite(q0.real()) || !std::isfinite(q0.imag()) || std::abs(q0) >= 1.0) {
        throw ParameterError("numeric backend needs a finite q with |q| < 1");
    }
}

NumericBackend::Value NumericBackend::sum(const std::function<Term<Scalar>(int)> &term,
                                          int start) const
{
    return num_sum([&](int n) { return evaluate(term(n), q_, cfg_); }, cfg_, start);
}

} // namespace wpb
