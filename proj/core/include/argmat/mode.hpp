#ifndef ARGMAT_MODE_HPP_
#define ARGMAT_MODE_HPP_

#include <optional>
#include <string_view>

namespace argmat {

/// Selects between the exact decision route and the literal original
/// formulation of the matrix criteria.
///
/// corrected      — power sums run far enough to witness every walk parity
///                  (odd through 2n+1, even through 2n) and acceptability is
///                  evaluated in the universal sense. Agrees with the
///                  brute-force oracle on every input.
/// paper_faithful — reproduces the original method verbatim: odd power sums
///                  truncated at the greatest odd number <= n, even sums at
///                  the greatest even number <= n, and the complete /
///                  complete_p criteria applied literally. Kept for
///                  reproduction and differential testing; known to diverge
///                  from the oracle on some inputs.
enum class DecisionMode { corrected, paper_faithful };

constexpr std::string_view to_string(DecisionMode mode) {
    return mode == DecisionMode::corrected ? "corrected" : "paper_faithful";
}

inline std::optional<DecisionMode> mode_from_string(std::string_view s) {
    if (s == "corrected") {
        return DecisionMode::corrected;
    }
    if (s == "paper_faithful" || s == "paper-faithful") {
        return DecisionMode::paper_faithful;
    }
    return std::nullopt;
}

}  // namespace argmat

#endif  // ARGMAT_MODE_HPP_
