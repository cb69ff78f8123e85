#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <wpbailey/mono.hpp>

namespace wpb::cli {

/// Exit codes: every selected check passed / some identity failed / the run
/// could not be carried out (bad flags, poles, divergence, unknown ids).
inline constexpr int kPass = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kOperational = 2;

inline constexpr int kMinOrder = 4;

/// Parses `name=[re_num/re_den,im_num/im_den]q^expo`. Throws ParameterError.
std::pair<std::string, QMonomial> parse_param(std::string_view text);

/// Parses "re" or "re,im". Throws ParameterError.
CPoint parse_point(std::string_view text);

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace wpb::cli
