#include <doctest.h>

#include <wpbailey/errors.hpp>
#include <wpbailey/wppairs.hpp>

using namespace wpb;

namespace {

QMonomial mono(long c, int e) { return QMonomial(Coefficient(c), e); }

PairArgs<Coefficient> sample(QMonomial a, QMonomial k)
{
    PairArgs<Coefficient> A{a, k};
    A.rho1 = mono(5, 1);
    A.rho2 = mono(7, 1);
    return A;
}

} // namespace

TEST_CASE("catalog lookups")
{
    CHECK(catalog_pair_ids().size() == 5);
    CHECK(catalog_derived_ids().size() == 5);
    for (const auto &id : catalog_derived_ids()) {
        CHECK_NOTHROW(catalog_pair(catalog_derived(id).source_pair));
    }
    CHECK_THROWS_AS(catalog_pair("nope"), UnknownPair);
    CHECK_THROWS_AS(catalog_derived("unit"), UnknownPair);
}

TEST_CASE("defining relation holds for the catalog pairs")
{
    const std::vector<std::pair<QMonomial, QMonomial>> samples = {
        {mono(2, 1), mono(3, 2)}, {mono(3, 2), mono(5, 1)}, {mono(-2, 0), mono(7, 3)}};
    for (const char *id : {"unit", "trivial", "singh", "singh-rho-inf"}) {
        for (const auto &[a, k] : samples) {
            CAPTURE(id);
            WpCheckReport r = wp_check(catalog_pair(id), sample(a, k), 8, 30);
            CHECK(r.pass);
        }
    }
}

TEST_CASE("sqrt(k) pair with s^2 = k, including a gaussian s")
{
    PairArgs<Coefficient> A{mono(2, 1), mono(9, 2)};
    A.sqrt_k = mono(3, 1);
    CHECK(wp_check(catalog_pair("sqrtk"), A, 8, 30).pass);
    const Coefficient s = Coefficient(1) + Coefficient::i();
    PairArgs<Coefficient> G{mono(3, 1), QMonomial(s * s, 2)};
    G.sqrt_k = QMonomial(s, 1);
    CHECK(wp_check(catalog_pair("sqrtk"), G, 6, 24).pass);
    PairArgs<Coefficient> missing{mono(2, 1), mono(9, 2)};
    CHECK_THROWS_AS(wp_check(catalog_pair("sqrtk"), missing, 3, 10), ParameterError);
}

TEST_CASE("a perturbed pair is rejected at the first wrong n")
{
    PairSpec bad = catalog_pair("unit");
    auto alpha = bad.exact.alpha;
    bad.exact.alpha = [alpha](int n, const PairArgs<Coefficient> &A) {
        Term<Coefficient> t = alpha(n, A);
        if (n == 3) {
            t = t * Product<Coefficient>(mono(2, 0));
        }
        return t;
    };
    WpCheckReport r = wp_check(bad, sample(mono(2, 1), mono(3, 2)), 6, 30);
    CHECK_FALSE(r.pass);
    CHECK(r.first_bad_n == 3);
}

TEST_CASE("second chain preserves the relation")
{
    for (const char *id : {"unit", "trivial", "singh", "singh-rho-inf"}) {
        CAPTURE(id);
        PairSpec chained = chain_step(catalog_pair(id));
        CHECK(wp_check(chained, sample(mono(2, 1), mono(3, 2)), 6, 30).pass);
    }
    CHECK(wp_check(chain_step(chain_step(catalog_pair("trivial"))), sample(mono(2, 1), mono(3, 2)), 5, 24)
              .pass);
    CHECK_THROWS_AS(chain_step(catalog_pair("sqrtk")), ParameterError);
}

TEST_CASE("argument transforms")
{
    PairArgs<Coefficient> A{mono(2, 1), mono(9, 2)};
    A.sqrt_k = mono(3, 1);
    auto r = A.reciprocal();
    CHECK(r.a == QMonomial(Coefficient(1, 2), -1));
    CHECK(*r.sqrt_k * *r.sqrt_k == r.k);
    auto n = A.negated();
    CHECK(n.k == mono(-9, 2));
    CHECK(*n.sqrt_k * *n.sqrt_k == n.k);
    auto s = A.squared();
    CHECK(s.base == 2);
    CHECK(*s.sqrt_k * *s.sqrt_k == s.k);
}

TEST_CASE("trivial derived pair at n = 1")
{
    // beta*_1 = (1 - 1/a) / ((1 - aq)(1 - q)) at a = 2
    const auto &d = catalog_derived("trivial*");
    DerivedArgs<Coefficient> D{mono(2, 0)};
    QSeries b = evaluate(d.exact.beta_star(1, D), 6);
    // (1/2) / ((1 - 2q)(1 - q)) = (1/2) sum (2^{j+1} - 1) q^j
    for (int e = 0; e < 6; ++e) {
        CHECK(b.coeff(e) == Coefficient((1L << (e + 1)) - 1, 2));
    }
    CHECK(evaluate(d.exact.alpha_star(1, D), 6).is_zero());
}

TEST_CASE("k -> 1 limits converge linearly")
{
    for (const auto &id : catalog_derived_ids()) {
        CAPTURE(id);
        const auto &d = catalog_derived(id);
        const auto &p = catalog_pair(d.source_pair);
        for (int n = 1; n <= 5; ++n) {
            auto r1 = derived_limit_probe(p, d, 0.4, 0.3, n, 1e-3, CPoint(5.0), CPoint(7.0));
            auto r2 = derived_limit_probe(p, d, 0.4, 0.3, n, 1e-4, CPoint(5.0), CPoint(7.0));
            for (auto [x, y] : {std::pair{r1.alpha_residual, r2.alpha_residual},
                                std::pair{r1.beta_residual, r2.beta_residual}}) {
                if (x < 1e-12) {
                    CHECK(y < 1e-11);
                } else {
                    CHECK(x / y >= 5.0);
                    CHECK(x / y <= 20.0);
                }
            }
        }
    }
    CHECK_THROWS_AS(derived_limit_probe(catalog_pair("unit"), catalog_derived("unit*"), 0.4, 0.3, 1, 0.0),
                    ParameterError);
}
