#include <doctest.h>

#include <cmath>

#include <wpbailey/backend.hpp>
#include <wpbailey/errors.hpp>
#include <wpbailey/identities.hpp>
#include <wpbailey/qnumeric.hpp>

using namespace wpb;

namespace {

CPoint direct_poch(CPoint x, CPoint q, int n)
{
    CPoint r(1.0, 0.0);
    CPoint t = x;
    for (int j = 0; j < n; ++j) {
        r *= 1.0 - t;
        t *= q;
    }
    return r;
}

} // namespace

TEST_CASE("finite and infinite pochhammer values")
{
    const CPoint x(0.4, -0.2);
    const CPoint q(0.3, 0.1);
    CHECK(std::abs(num_poch(x, q, 7) - direct_poch(x, q, 7)) < 1e-15);
    CHECK(std::abs(num_poch(x, q, 0) - 1.0) == 0.0);
    // (0.1; 0.1)_inf
    CHECK(std::abs(num_poch(0.1, 0.1, kInfinite) - direct_poch(0.1, 0.1, 400)) < 1e-15);
    CHECK(std::abs(num_poch(0.1, 0.1, kInfinite) - 0.8900100999) < 1e-10);
}

TEST_CASE("numeric evaluation refuses |q| >= 1 and near-poles")
{
    CHECK_THROWS_AS(num_poch(0.5, 1.0, 3), ParameterError);
    CHECK_THROWS_AS(NumericBackend(CPoint(0.0, 1.0)), ParameterError);
    Product<CPoint> p;
    p.den(CMonomial(CPoint(1.0, 0.0), 0), 1, 2);
    CHECK_THROWS_AS(evaluate(p, CPoint(0.3, 0.0)), PoleProximity);
    NumericConfig bad;
    bad.term_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), ParameterError);
}

TEST_CASE("numerator zeros are allowed")
{
    Product<CPoint> p;
    p.num(CMonomial(CPoint(1.0, 0.0), 0), 1, 2);
    CHECK(evaluate(p, CPoint(0.3, 0.0)) == CPoint(0.0, 0.0));
}

TEST_CASE("numeric sums of a geometric series")
{
    const CPoint q(0.5, 0.25);
    CPoint s = num_sum([&](int n) { return std::pow(q, n); });
    CHECK(std::abs(s - q / (1.0 - q)) < 1e-14);
}

TEST_CASE("psi at 0.1")
{
    NumericBackend be(CPoint(0.1, 0.0));
    CPoint s = be.sum([](int n) { return single(Product<CPoint>(CMonomial::q(n * (n + 1) / 2))); }, 0);
    CHECK(std::abs(s - 1.1010010001) < 1e-10);
}

TEST_CASE("series evaluated at a point matches direct evaluation")
{
    const CPoint q0(0.3, 0.0);
    QSeries e = poch_infinite(QMonomial::q(1), 1, 60);
    CHECK(std::abs(eval_series_at(e, q0) - num_poch(q0, q0, kInfinite)) < 1e-12);
    QSeries p = theta_psi(1, 60, PsiForm::product);
    CHECK(std::abs(eval_series_at(p, q0) - num_poch(q0 * q0, q0 * q0, kInfinite) /
                                               num_poch(q0, q0 * q0, kInfinite)) < 1e-12);
}
