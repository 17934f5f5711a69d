#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sbc/derive.hpp"
#include "sbc/properties.hpp"

namespace sbc::cli {

// Exit codes.
inline constexpr int kHolds = 0;
inline constexpr int kFails = 1;
inline constexpr int kUsageError = 2;

// Runs one command line (args excludes the program name). Never throws;
// every failure maps to an exit code and a one-line diagnostic on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Line-oriented `key: value` rendering of an analysis.
std::string format_report(const PropertyReport& report);

std::string format_collision(const Collision& c, std::size_t k);
std::string format_divergence(const DivergenceWitness& w, std::size_t k);

}  // namespace sbc::cli
