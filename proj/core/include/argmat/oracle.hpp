#ifndef ARGMAT_ORACLE_HPP_
#define ARGMAT_ORACLE_HPP_

#include <vector>

#include "argmat/framework.hpp"
#include "argmat/semantics.hpp"

namespace argmat {

/// Brute-force reference implementations of every semantics, written
/// directly against the set-based definitions. Deliberately matrix-free:
/// walk queries run breadth-first searches over (argument, parity) states on
/// the adjacency lists, so agreement with the block deciders is evidence,
/// not tautology. Clarity over speed throughout.

/// Walk-parity reachability tables computed from adjacency lists only.
struct OracleReach {
    int n = 0;
    std::vector<std::vector<char>> odd;    // odd walk of length >= 1
    std::vector<std::vector<char>> even;   // even walk of length >= 2
    std::vector<std::vector<char>> odd3;   // odd walk of length >= 3

    bool odd_walk(ArgId i, ArgId j) const { return odd[i - 1][j - 1] != 0; }
    bool even_walk(ArgId i, ArgId j) const { return even[i - 1][j - 1] != 0; }
    bool odd_walk_len3(ArgId i, ArgId j) const { return odd3[i - 1][j - 1] != 0; }
};

OracleReach oracle_reach(const Framework& f);

/// No attack between any two members of s (members may repeat a == b:
/// self-attackers are never conflict-free).
bool oracle_conflict_free(const Framework& f, const std::vector<ArgId>& s);

/// Universal defense: every attacker of a is attacked by some member of s;
/// vacuously true when a is unattacked.
bool oracle_defended_by_set(const Framework& f, const std::vector<ArgId>& s, ArgId a);

/// True iff an odd-length walk (>= 1) runs from a to some member of s or
/// from some member of s to a.
bool oracle_indirect_conflict(const Framework& f, const std::vector<ArgId>& s, ArgId a);

/// The grounded extension via least-fixed-point iteration of the
/// characteristic function (no enumeration).
std::vector<ArgId> oracle_grounded(const Framework& f);

/// Literal set-comprehension over all 2^n subsets using only the oracle
/// predicates; canonical order. grounded is additionally cross-checked
/// against the subset-minimal complete extension and throws Error on
/// disagreement. Throws EnumerationLimitError when f.size() > limit.
ExtensionSet oracle_extensions(const Framework& f, SemanticsKind kind,
                               int limit = kDefaultEnumerationLimit);

}  // namespace argmat

#endif  // ARGMAT_ORACLE_HPP_
