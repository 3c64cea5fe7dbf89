#pragma once

#include <string>
#include <vector>

#include "perron/bounds.hpp"

namespace perron {

/// Table layout with 5 significant digits, equality footnotes, and the
/// verification verdict.
std::string render_text(const BoundsReport& report, const std::vector<Violation>& violations);

/// One row per vertex, full precision.
std::string render_csv(const BoundsReport& report);

/// Full-precision JSON document including violations.
std::string render_json(const BoundsReport& report, const std::vector<Violation>& violations);

std::string winner_name(LowerBoundWinner winner);

}  // namespace perron
