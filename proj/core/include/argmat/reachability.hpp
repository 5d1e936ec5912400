#ifndef ARGMAT_REACHABILITY_HPP_
#define ARGMAT_REACHABILITY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "argmat/bool_matrix.hpp"
#include "argmat/framework.hpp"
#include "argmat/mode.hpp"
#include "argmat/parity.hpp"

namespace argmat {

/// Walk-parity reachability computed by breadth-first search over
/// (argument, parity) states — no matrix powers involved. Serves as the
/// independent check of the power-sum route.
struct ParityReach {
    BoolMatrix odd;   // odd-length walk (>= 1) exists
    BoolMatrix even;  // even-length walk (>= 2) exists
};

ParityReach parity_bfs(const Framework& f);

enum class WalkParity { odd, even };

/// A concrete walk i -> ... -> j with the requested parity and length >=
/// min_length (1 or 3 for odd, 2 for even), or nullopt when none exists.
/// Deterministic: BFS over (argument, parity, saturated length) states with
/// neighbors visited in increasing index order.
std::optional<std::vector<ArgId>> walk_witness(const Framework& f, ArgId from, ArgId to,
                                               WalkParity parity, int min_length);

/// True iff some length-2 walk i -> t -> j exists, i.e. i attacks at least
/// one attacker of j. This is the existential reading used by the matrix
/// criteria; set-based universal defense lives in the oracle module.
bool defends_len2(const Framework& f, ArgId i, ArgId j);

/// Odd-length reachability i -> j at the given minimum length. corrected
/// mode answers exactly; paper_faithful mode consults the truncated odd
/// power sum (which always starts at length 3 — min_length must be three).
bool indirectly_attacks(const Framework& f, ArgId i, ArgId j, OddMinLength min_length,
                        DecisionMode mode = DecisionMode::corrected);

/// Even-length (>= 2) reachability i -> j; paper_faithful truncates at n.
bool indirectly_defends(const Framework& f, ArgId i, ArgId j,
                        DecisionMode mode = DecisionMode::corrected);

/// corrected: odd reach (>= 1) AND even reach (>= 2), the definitional
/// reading. paper_faithful: both truncated power sums non-zero at (i, j),
/// with odd starting at length 3.
bool is_controversial(const Framework& f, ArgId i, ArgId j, DecisionMode mode);

struct ControversyReport {
    DecisionMode mode = DecisionMode::corrected;
    std::vector<std::pair<ArgId, ArgId>> pairs;  // lexicographic, duplicate-free

    friend bool operator==(const ControversyReport& a, const ControversyReport& b) = default;
};

/// Every ordered pair (i, j) — i == j permitted — with i controversial
/// w.r.t. j under the given mode.
ControversyReport controversial_pairs(const Framework& f, DecisionMode mode);

}  // namespace argmat

#endif  // ARGMAT_REACHABILITY_HPP_
