#include <wpbailey/qnumeric.hpp>

#include <cmath>
#include <sstream>

namespace wpb {

namespace {

void require_finite(CPoint z, const char *what)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ParameterError(std::string(what) + " is not finite");
    }
}

void require_unit_disk(CPoint q)
{
    require_finite(q, "q");
    if (std::abs(q) >= 1.0) {
        std::ostringstream os;
        os << "numeric evaluation needs |q| < 1, got |q| = " << std::abs(q);
        throw ParameterError(os.str());
    }
}

CPoint poch_impl(CPoint x, CPoint q, long n, const NumericConfig &cfg, bool check_poles,
                 const std::string &label)
{
    CPoint prod(1.0, 0.0);
    CPoint xq = x;
    int streak = 0;
    for (long j = 0; n == kInfinite || j < n; ++j) {
        if (n == kInfinite) {
            if (j >= cfg.max_terms) {
                throw NonConvergent("infinite product " + label + " did not settle within " +
                                    std::to_string(cfg.max_terms) + " factors");
            }
            if (std::abs(xq) < cfg.term_tol) {
                if (++streak >= cfg.streak) {
                    break;
                }
            } else {
                streak = 0;
            }
        }
        CPoint factor = 1.0 - xq;
        if (check_poles && std::abs(factor) < cfg.pole_tol) {
            std::ostringstream os;
            os << "factor 1 - x q^" << j << " of " << (label.empty() ? "(x; q)" : label)
               << " is within " << cfg.pole_tol << " of zero (|1 - x q^j| = " << std::abs(factor)
               << ")";
            throw PoleProximity(os.str());
        }
        prod *= factor;
        xq *= q;
    }
    return prod;
}

} // namespace

void NumericConfig::validate() const
{
    if (!(term_tol > 0.0 && term_tol < 1.0)) {
        throw ParameterError("term_tol must lie in (0, 1)");
    }
    if (streak < 1) {
        throw ParameterError("streak must be >= 1");
    }
    if (!(pole_tol > 0.0)) {
        throw ParameterError("pole_tol must be positive");
    }
    if (max_terms < 1) {
        throw ParameterError("max_terms must be >= 1");
    }
}

CPoint num_poch(CPoint x, CPoint q, long n, const NumericConfig &cfg)
{
    cfg.validate();
    require_unit_disk(q);
    require_finite(x, "x");
    if (n < 0 && n != kInfinite) {
        throw ParameterError("pochhammer length must be >= 0");
    }
    return poch_impl(x, q, n, cfg, true, "(x; q)");
}

CPoint num_sum(const std::function<CPoint(int)> &term, const NumericConfig &cfg, int start)
{
    CPoint sum(0.0, 0.0);
    int streak = 0;
    for (int n = start; n < start + cfg.max_terms; ++n) {
        CPoint t = term(n);
        require_finite(t, "series term");
        sum += t;
        if (std::abs(t) <= cfg.term_tol * std::abs(sum)) {
            if (++streak >= cfg.streak) {
                return sum;
            }
        } else {
            streak = 0;
        }
    }
    throw NonConvergent("numeric series did not converge within " + std::to_string(cfg.max_terms) +
                        " terms");
}

CPoint eval_series_at(const QSeries &x, CPoint q0)
{
    CPoint acc(0.0, 0.0);
    if (x.is_zero()) {
        return acc;
    }
    CPoint power = scalar::pow(q0, x.valuation());
    for (int e = x.valuation(); e < x.order(); ++e) {
        acc += x.coeff(e).to_complex() * power;
        power *= q0;
    }
    return acc;
}

CPoint evaluate(const Product<CPoint> &p, CPoint q0, const NumericConfig &cfg)
{
    require_unit_disk(q0);
    CPoint value = p.scale().at(q0);
    for (const auto &f : p.denominator()) {
        value /= poch_impl(f.x.at(q0), scalar::pow(q0, f.base), f.len, cfg, true, f.label());
    }
    for (const auto &f : p.numerator()) {
        value *= poch_impl(f.x.at(q0), scalar::pow(q0, f.base), f.len, cfg, false, f.label());
    }
    return value;
}

CPoint evaluate(const Term<CPoint> &t, CPoint q0, const NumericConfig &cfg)
{
    CPoint acc(0.0, 0.0);
    for (const auto &p : t) {
        acc += evaluate(p, q0, cfg);
    }
    return acc;
}

} // namespace wpb
