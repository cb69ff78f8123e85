#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <wpbailey/expr.hpp>
#include <wpbailey/qnumeric.hpp>

namespace wpb {

namespace scalar {
template <class S>
S imag_unit();
template <>
inline Coefficient imag_unit<Coefficient>() { return Coefficient::i(); }
template <>
inline CPoint imag_unit<CPoint>() { return {0.0, 1.0}; }
} // namespace scalar

/// Arguments of a WP-Bailey pair (alpha_n(a, k), beta_n(a, k)) in base q^base.
/// rho1/rho2 feed the Singh pair; sqrt_k is a square root of k chosen by the
/// caller for the pair whose beta involves sqrt(k).
template <class S>
struct PairArgs {
    Mono<S> a;
    Mono<S> k;
    int base = 1;
    std::optional<Mono<S>> rho1{};
    std::optional<Mono<S>> rho2{};
    std::optional<Mono<S>> sqrt_k{};

    /// (1/a, 1/k).
    PairArgs reciprocal() const
    {
        PairArgs r = *this;
        r.a = a.inverse();
        r.k = k.inverse();
        if (sqrt_k) {
            r.sqrt_k = sqrt_k->inverse();
        }
        return r;
    }
    /// (-a, -k); sqrt(-k) is taken as i*sqrt(k).
    PairArgs negated() const
    {
        PairArgs r = *this;
        r.a = -a;
        r.k = -k;
        if (sqrt_k) {
            r.sqrt_k = *sqrt_k * scalar::imag_unit<S>();
        }
        return r;
    }
    /// (a^2, k^2) in base q^{2 base}; sqrt(k^2) is taken as k.
    PairArgs squared() const
    {
        PairArgs r = *this;
        r.a = a.pow(2);
        r.k = k.pow(2);
        r.base = 2 * base;
        if (sqrt_k) {
            r.sqrt_k = k;
        }
        return r;
    }
};

/// Arguments of a derived pair (alpha*_n(a), beta*_n(a)), n >= 1.
template <class S>
struct DerivedArgs {
    Mono<S> a;
    int base = 1;
    std::optional<Mono<S>> rho1{};
    std::optional<Mono<S>> rho2{};

    DerivedArgs with_a(const Mono<S> &x) const
    {
        DerivedArgs r = *this;
        r.a = x;
        return r;
    }
};

template <class S>
struct PairForms {
    std::function<Term<S>(int, const PairArgs<S> &)> alpha;
    std::function<Term<S>(int, const PairArgs<S> &)> beta;
};

template <class S>
struct DerivedForms {
    std::function<Term<S>(int, const DerivedArgs<S> &)> alpha_star;
    std::function<Term<S>(int, const DerivedArgs<S> &)> beta_star;
};

/// Closed-form term generators of a WP-Bailey pair, for both backends.
struct PairSpec {
    std::string id;
    std::string description;
    std::vector<std::string> aux; ///< required optional arguments: rho1, rho2, sqrt_k
    PairForms<Coefficient> exact;
    PairForms<CPoint> numeric;

    template <class S>
    const PairForms<S> &forms() const
    {
        if constexpr (std::is_same_v<S, Coefficient>) {
            return exact;
        } else {
            return numeric;
        }
    }
};

struct DerivedPairSpec {
    std::string id;
    std::string source_pair;
    std::string description;
    std::vector<std::string> aux;
    DerivedForms<Coefficient> exact;
    DerivedForms<CPoint> numeric;

    template <class S>
    const DerivedForms<S> &forms() const
    {
        if constexpr (std::is_same_v<S, Coefficient>) {
            return exact;
        } else {
            return numeric;
        }
    }
};

/// Catalog lookups; throw UnknownPair.
const PairSpec &catalog_pair(std::string_view id);
const DerivedPairSpec &catalog_derived(std::string_view id);
std::vector<std::string> catalog_pair_ids();
std::vector<std::string> catalog_derived_ids();

/// The second WP-Bailey chain applied to `pair`: the returned pair
/// evaluates the source at (a, q^base a^2 / k). Pairs that need sqrt_k are
/// rejected with ParameterError because sqrt(q a^2 / k) leaves the monomial
/// lattice.
PairSpec chain_step(const PairSpec &pair);

struct WpCheckReport {
    bool pass = true;
    int first_bad_n = -1;
    std::string detail;
};

/// Checks the defining relation
///   beta_n = sum_{j<=n} (k/a)_{n-j} (k)_{n+j} / ((q)_{n-j} (aq)_{n+j}) alpha_j
/// coefficient-exactly below `order` for 0 <= n <= n_max, plus
/// alpha_0 = beta_0 = 1. Throws PoleDetected if a denominator vanishes.
WpCheckReport wp_check(const PairSpec &pair, const PairArgs<Coefficient> &args, int n_max,
                       int order);

struct ProbeReport {
    double alpha_residual = 0.0; ///< |alpha_n(a, 1-eps) - alpha*_n(a)|
    double beta_residual = 0.0;  ///< |beta_n(a, 1-eps)/eps - beta*_n(a)|
};

/// Numeric probe of the k -> 1 limit defining a derived pair. rho1/rho2 are
/// forwarded to pairs that need them; sqrt(k) is the principal root.
ProbeReport derived_limit_probe(const PairSpec &pair, const DerivedPairSpec &derived, CPoint a,
                                CPoint q, int n, double eps,
                                std::optional<CPoint> rho1 = std::nullopt,
                                std::optional<CPoint> rho2 = std::nullopt,
                                const NumericConfig &cfg = {});

} // namespace wpb
