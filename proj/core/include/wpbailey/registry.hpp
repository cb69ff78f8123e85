#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <wpbailey/backend.hpp>
#include <wpbailey/qseries.hpp>

namespace wpb {

/// Named monomial parameters plus an optional pair id. Entries fill in
/// anything left unset from their defaults.
struct ParamSet {
    std::map<std::string, QMonomial> values;
    std::string pair;
};

enum class PairKind { none, wp, derived };

using ExactSides = std::pair<QSeries, QSeries>;
using NumericSides = std::pair<CPoint, CPoint>;

struct IdentityEntry {
    std::string id;
    std::string description;
    std::map<std::string, QMonomial> default_params;
    /// Accepted but not defaulted (e.g. a square root of k for the sqrtk pair).
    std::vector<std::string> optional_params;
    PairKind pair_kind = PairKind::none;
    std::string default_pair;
    int default_order = 40;
    /// Each check throws ParameterError when the resolved parameters are unusable.
    std::vector<std::function<void(const ParamSet &)>> constraints;
    std::function<ExactSides(const ParamSet &, const ExactBackend &)> exact;
    std::function<NumericSides(const ParamSet &, const NumericBackend &)> numeric;
};

/// All entries, sorted by id.
const std::vector<IdentityEntry> &registry();
/// Throws UnknownIdentity.
const IdentityEntry &find_identity(std::string_view id);

/// Defaults overlaid with `overrides`; validates names, pair id and constraints.
ParamSet resolve_params(const IdentityEntry &e, const ParamSet &overrides);

ExactSides identity_sides(const IdentityEntry &e, const ParamSet &resolved, const ExactBackend &be);
NumericSides identity_sides(const IdentityEntry &e, const ParamSet &resolved,
                            const NumericBackend &be);

struct VerifyOptions {
    BackendKind backend = BackendKind::exact;
    int order = 0; ///< 0: the entry's default order
    CPoint q0{0.3, 0.0};
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;
    SumConfig sum{};
    NumericConfig numeric{};
};

struct Mismatch {
    std::optional<int> exponent; ///< exact backend only
    Coefficient lhs_exact;
    Coefficient rhs_exact;
    CPoint lhs{};
    CPoint rhs{};
    double abs_diff = 0.0;
};

struct VerificationReport {
    std::string id;
    std::string pair;
    BackendKind backend = BackendKind::exact;
    int order = 0;
    CPoint q0{};
    bool pass = false;
    std::optional<Mismatch> mismatch;
    double millis = 0.0;
};

/// Exact: compares every coefficient below the requested order, raising the
/// working order when negative valuations erode precision. Numeric: compares
/// within abs_tol + rel_tol * max(|lhs|, |rhs|).
VerificationReport verify(const IdentityEntry &e, const ParamSet &overrides,
                          const VerifyOptions &opt = {});
VerificationReport verify(std::string_view id, const ParamSet &overrides = {},
                          const VerifyOptions &opt = {});

} // namespace wpb
