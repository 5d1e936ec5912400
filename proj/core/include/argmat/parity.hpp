#ifndef ARGMAT_PARITY_HPP_
#define ARGMAT_PARITY_HPP_

#include "argmat/bool_matrix.hpp"
#include "argmat/framework.hpp"
#include "argmat/mode.hpp"

namespace argmat {

/// Minimum walk length admitted by odd reachability. `one` treats a direct
/// attack as an odd walk; `three` starts at genuine multi-step walks.
enum class OddMinLength { one = 1, three = 3 };

/// Entry (i, j) set iff an odd-length walk i -> j with length >= min_length
/// exists. Exact: sums boolean powers through 2n+1, which covers the
/// shortest qualifying walk (removing a repeated (node, parity) state from a
/// longer walk excises an even-length cycle of length <= 2n, so a minimal
/// witness of length >= 3 never exceeds 2n+1).
BoolMatrix odd_reach_matrix(const Framework& f, OddMinLength min_length);

/// Entry (i, j) set iff an even-length walk i -> j with length >= 2 exists.
/// Exact: sums boolean powers through 2n.
BoolMatrix even_reach_matrix(const Framework& f);

/// The truncated odd power sum of the original formulation: boolean sum of
/// M^k over odd k from 3 through the greatest odd number <= n. Misses odd
/// walks whose shortest qualifying length exceeds n.
BoolMatrix paper_odd_reach_matrix(const Framework& f);

/// The truncated even power sum: boolean sum of M^k over even k from 2
/// through the greatest even number <= n.
BoolMatrix paper_even_reach_matrix(const Framework& f);

/// Odd reachability with length >= 3 under the truncation the given mode
/// prescribes; this is the source matrix of the p-, pca1- and pca2-blocks.
BoolMatrix odd_reach_for_mode(const Framework& f, DecisionMode mode);

}  // namespace argmat

#endif  // ARGMAT_PARITY_HPP_
