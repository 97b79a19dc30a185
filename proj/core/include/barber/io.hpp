#pragma once

#include <string>

#include "barber/outcomes.hpp"

namespace barber {

/// {"shots": N, "counts": {"0101": 12, ...}}; keys render qubit n-1 first.
std::string counts_to_json(const OutcomeCounts& c);
/// Throws std::invalid_argument on ragged key widths or a shots/counts mismatch.
OutcomeCounts counts_from_json(const std::string& text);

/// {"distribution": {"0101": 0.25, ...}}
std::string distribution_to_json(const Distribution& d);
/// Accepts either the distribution or the counts layout.
Distribution distribution_from_json(const std::string& text);

}  // namespace barber
