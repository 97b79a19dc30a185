#pragma once

#include <string_view>
#include <vector>

#include "barber/outcomes.hpp"

namespace barber {

struct AnswerSet {
    int width = 0;
    std::vector<Outcome> answers;

    /// Parses a comma-separated list such as "0x0,0xfff".
    static AnswerSet parse(std::string_view list, int width);
};

/// Probability mass on the answer states.
double pst(const Distribution& d, const AnswerSet& a);
double pst(const OutcomeCounts& c, const AnswerSet& a);

/// (a - b) / b * 100 with a >= b the two answer probabilities. Needs exactly
/// two answers; throws std::domain_error when b == 0.
double probability_deviation(const Distribution& d, const AnswerSet& a);

/// sqrt(1/2 sum (sqrt p - sqrt q)^2) over the union of supports. Both inputs
/// must sum to 1 within 1e-6.
double hellinger(const Distribution& p, const Distribution& q);

}  // namespace barber
