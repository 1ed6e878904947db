#pragma once

#include "ratio_engine.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monoratio {

enum class Pattern { Increasing, Decreasing, IncThenDec, DecThenInc, Constant, Inconclusive, Other };

inline std::string_view to_string(Pattern p)
{
    switch (p) {
    case Pattern::Increasing: return "Increasing";
    case Pattern::Decreasing: return "Decreasing";
    case Pattern::IncThenDec: return "IncThenDec";
    case Pattern::DecThenInc: return "DecThenInc";
    case Pattern::Constant: return "Constant";
    case Pattern::Inconclusive: return "Inconclusive";
    case Pattern::Other: return "Other";
    }
    return "?";
}

inline std::optional<Pattern> parse_pattern(std::string_view s)
{
    for (Pattern p : {Pattern::Increasing, Pattern::Decreasing, Pattern::IncThenDec, Pattern::DecThenInc,
                      Pattern::Constant, Pattern::Inconclusive, Pattern::Other})
        if (to_string(p) == s)
            return p;
    return std::nullopt;
}

inline bool is_unimodal(Pattern p) { return p == Pattern::IncThenDec || p == Pattern::DecThenInc; }
inline bool is_monotone(Pattern p) { return p == Pattern::Increasing || p == Pattern::Decreasing; }

inline Pattern flipped(Pattern p)
{
    switch (p) {
    case Pattern::Increasing: return Pattern::Decreasing;
    case Pattern::Decreasing: return Pattern::Increasing;
    case Pattern::IncThenDec: return Pattern::DecThenInc;
    case Pattern::DecThenInc: return Pattern::IncThenDec;
    default: return p;
    }
}

/// First and second monotone pieces of a unimodal pattern.
inline Pattern leading_piece(Pattern p) { return p == Pattern::IncThenDec ? Pattern::Increasing : Pattern::Decreasing; }
inline Pattern trailing_piece(Pattern p) { return p == Pattern::IncThenDec ? Pattern::Decreasing : Pattern::Increasing; }

/// Predicted monotonicity pattern of a ratio, with the rule that produced it.
///
/// `provenance` names the rule that fired, or "numeric-only" when the
/// verdict comes from grid sampling rather than a rule.
struct MonotonicityVerdict {
    Pattern pattern = Pattern::Inconclusive;
    std::optional<double> turning_point;
    std::string provenance = "numeric-only";
    std::vector<LimitEstimate> endpoint_diagnostics;
    std::vector<std::string> notes;
    std::optional<Pattern> numeric_pattern; // grid pattern attached to numeric-only verdicts
};

} // namespace monoratio
