#include <doctest.h>

#include <set>

#include <wpbailey/errors.hpp>
#include <wpbailey/registry.hpp>

#include "oracles.hpp"

using namespace wpb;

namespace {

QMonomial mono(long c, int e) { return QMonomial(Coefficient(c), e); }

ParamSet params(std::initializer_list<std::pair<const std::string, QMonomial>> v, std::string pair = {})
{
    ParamSet ps;
    ps.values = v;
    ps.pair = std::move(pair);
    return ps;
}

VerifyOptions exact_at(int order)
{
    VerifyOptions o;
    o.order = order;
    return o;
}

} // namespace

TEST_CASE("registry contents")
{
    const std::set<std::string> want = {"qgauss", "eq03",   "thm1",   "thm2",   "thm3",        "eq117",
                                        "cor1.1", "cor1.2", "cor2",   "cor3",   "cor4.1",      "cor4.2",
                                        "cor4.3", "cor4.4", "cor5.1", "cor5.2", "cor5.3",      "psi2lambert",
                                        "eq25",   "cor6",   "eq27"};
    std::set<std::string> have;
    std::string prev;
    for (const auto &e : registry()) {
        CHECK(prev < e.id);
        prev = e.id;
        have.insert(e.id);
        CHECK(e.exact);
        CHECK(e.numeric);
    }
    CHECK(have == want);
    CHECK_THROWS_AS(find_identity("thm9"), UnknownIdentity);
}

TEST_CASE("q-Gauss at A = q, B = q^2, C = q^5 sums to 1 + q^2")
{
    const auto &e = find_identity("qgauss");
    ParamSet ps = resolve_params(e, params({{"A", mono(1, 1)}, {"B", mono(1, 2)}, {"C", mono(1, 5)}}));
    auto [lhs, rhs] = identity_sides(e, ps, ExactBackend(30));
    oracle::Poly one_plus_q2(30);
    one_plus_q2[0] = 1;
    one_plus_q2[2] = 1;
    CHECK(oracle::matches(lhs, one_plus_q2));
    CHECK(oracle::matches(rhs, one_plus_q2));
}

TEST_CASE("thm3 with a = b has both sides zero")
{
    const auto &e = find_identity("thm3");
    ParamSet ps = resolve_params(e, params({{"a", mono(2, 1)}, {"b", mono(2, 1)}}));
    auto [lhs, rhs] = identity_sides(e, ps, ExactBackend(30));
    CHECK(lhs.is_zero());
    CHECK(rhs.is_zero());
    CHECK(verify(e, params({{"a", mono(2, 1)}, {"b", mono(2, 1)}})).pass);
}

TEST_CASE("cor6 left side against a theta oracle")
{
    const auto &e = find_identity("cor6");
    auto [lhs, rhs] = identity_sides(e, resolve_params(e, {}), ExactBackend(40));
    oracle::Poly p = oracle::mul(oracle::psi(2, 40), oracle::psi(6, 40));
    oracle::Poly want(40);
    for (int i = 0; i + 1 < 40; ++i) {
        want[static_cast<std::size_t>(i + 1)] = 2 * p[static_cast<std::size_t>(i)];
    }
    CHECK(oracle::matches(lhs, want));
    CHECK(oracle::matches(rhs, want));
}

TEST_CASE("a deliberately broken entry reports the first bad exponent")
{
    IdentityEntry bad = find_identity("qgauss");
    auto exact = bad.exact;
    bad.exact = [exact](const ParamSet &ps, const ExactBackend &be) {
        auto sides = exact(ps, be);
        sides.second = sides.second + QSeries::monomial(mono(1, 7), be.order());
        return sides;
    };
    VerificationReport r = verify(bad, {}, exact_at(30));
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatch.has_value());
    REQUIRE(r.mismatch->exponent.has_value());
    CHECK(*r.mismatch->exponent == 7);
    CHECK(r.mismatch->rhs_exact - r.mismatch->lhs_exact == Coefficient(1));
}

TEST_CASE("every entry passes exactly at its defaults")
{
    for (const auto &e : registry()) {
        CAPTURE(e.id);
        VerificationReport r = verify(e, {});
        CHECK(r.pass);
        CHECK(r.order == e.default_order);
    }
}

TEST_CASE("numeric backend at a complex point")
{
    VerifyOptions o;
    o.backend = BackendKind::numeric;
    o.q0 = CPoint(0.2, 0.1);
    for (const char *id : {"eq25", "cor6", "cor4.2", "thm1"}) {
        CAPTURE(id);
        VerificationReport r = verify(id, {}, o);
        CHECK(r.pass);
    }
}

TEST_CASE("parameter validation")
{
    const auto &thm1 = find_identity("thm1");
    CHECK_THROWS_AS(resolve_params(thm1, params({{"zz", mono(1, 1)}})), ParameterError);
    CHECK_THROWS_AS(resolve_params(thm1, params({}, "nope")), UnknownPair);
    CHECK_THROWS_AS(resolve_params(thm1, params({}, "sqrtk")), ParameterError);
    CHECK_THROWS_AS(resolve_params(find_identity("eq25"), params({}, "unit")), ParameterError);
    CHECK_THROWS_AS(resolve_params(find_identity("cor5.2"), params({{"rho1", mono(5, 1)}})), ParameterError);
    CHECK_THROWS_AS(resolve_params(find_identity("thm3"), params({}, "unit")), UnknownPair);
}

TEST_CASE("thm3 outside the convergence region of the trivial derived pair")
{
    VerifyOptions o = exact_at(20);
    o.sum = SumConfig{3, 300};
    CHECK_THROWS_AS(verify("thm3", params({{"a", mono(2, 1)}, {"b", mono(3, 2)}}, "trivial*"), o), NonConvergent);
    CHECK(verify("thm3", params({{"a", mono(2, 0)}, {"b", mono(3, 0)}}, "trivial*"), exact_at(30)).pass);
}

TEST_CASE("transformations and the chain sum with the sqrt(k) pair")
{
    const ParamSet ps = params({{"a", mono(2, 2)}, {"k", mono(9, 2)}, {"z", mono(5, 2)}, {"s", mono(3, 1)}}, "sqrtk");
    for (const char *id : {"thm1", "thm2"}) {
        CAPTURE(id);
        CHECK(verify(id, ps, exact_at(30)).pass);
    }
    CHECK(verify("eq03", params({{"a", mono(2, 2)}, {"k", mono(9, 2)}, {"s", mono(-3, 1)}}, "sqrtk"), exact_at(30))
              .pass);
}

TEST_CASE("other pairs through the transformations")
{
    for (const char *pair : {"unit", "singh", "singh-rho-inf"}) {
        CAPTURE(pair);
        for (const char *id : {"eq03", "thm1", "thm2"}) {
            CAPTURE(id);
            CHECK(verify(id, params({}, pair), exact_at(30)).pass);
        }
    }
}

TEST_CASE("exact verification at parameters whose expansions converge only for |q| < 1/3")
{
    CHECK(verify("eq117", params({{"a", mono(2, 1)}, {"k", mono(3, 2)}, {"z", mono(5, 3)}})).pass);
    CHECK(verify("cor2", params({{"a", mono(2, 1)}, {"b", mono(3, 2)}})).pass);
    CHECK(verify("thm3", params({{"a", mono(2, 1)}, {"b", mono(3, 2)}})).pass);
}
