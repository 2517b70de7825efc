#pragma once

#include "gspec/bounds.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace gspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Rounds to 2 decimals and drops trailing zeros: 0.50 -> "0.5", 1.00 -> "1".
std::string table_number(double x);

/// "(e_AL, e_LLrw, e_ALrw)" with table_number values and "·" for absent bounds.
std::string table_cell(const BoundSet& b);

}  // namespace gspec::cli
