#ifndef ARGMAT_SEMANTICS_HPP_
#define ARGMAT_SEMANTICS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "argmat/framework.hpp"
#include "argmat/mode.hpp"

namespace argmat {

enum class SemanticsKind {
    conflict_free,
    admissible,
    stable,
    complete,
    preferred,
    grounded,
    p_admissible,
    stable_p,
    preferred_p,
    complete_p,
};

std::string_view to_string(SemanticsKind kind);
std::optional<SemanticsKind> semantics_from_string(std::string_view s);

/// True for the kinds the block criteria decide. conflict_free and grounded
/// have no block criterion and are served by the oracle module only.
bool block_decidable(SemanticsKind kind);

/// A deterministic collection of extensions, sorted by (cardinality,
/// lexicographic member order); members of each extension are strictly
/// increasing.
struct ExtensionSet {
    SemanticsKind kind = SemanticsKind::admissible;
    DecisionMode mode = DecisionMode::corrected;
    std::vector<std::vector<ArgId>> extensions;

    bool contains(const std::vector<ArgId>& subset) const;

    friend bool operator==(const ExtensionSet& a, const ExtensionSet& b) = default;
};

/// Exhaustive enumeration refuses frameworks larger than this unless the
/// caller raises the limit (hard ceiling 62: subsets are 64-bit masks).
inline constexpr int kDefaultEnumerationLimit = 24;
inline constexpr int kMaxEnumerationArguments = 62;

/// Single-subset deciders, phrased directly over the named blocks.
/// Subsets must be strictly increasing and in range.
///
/// stable: cf-block zero and every s-block column non-zero.
bool is_stable_block(const Framework& f, const std::vector<ArgId>& s);

/// stable plus a zero p-block (no odd walks >= 3 inside s; length-1 walks
/// are already excluded by the cf-block).
bool is_stable_p_block(const Framework& f, const std::vector<ArgId>& s,
                       DecisionMode mode = DecisionMode::corrected);

/// cf-block zero, and every outside argument whose a-block row is non-zero
/// (it attacks into s) has a non-zero s-block column (s strikes back).
bool is_admissible_block(const Framework& f, const std::vector<ArgId>& s);

/// admissible plus a zero p-block.
bool is_p_admissible_block(const Framework& f, const std::vector<ArgId>& s,
                           DecisionMode mode = DecisionMode::corrected);

/// corrected: admissible and no outside argument is acceptable w.r.t. s
/// (acceptable = every attacker is attacked by s). paper_faithful: the
/// literal block conditions — every outside argument with a non-zero
/// c-block row has a zero s-block column, and every outside argument with a
/// zero c-block column has a non-zero s-block column. Both modes require
/// admissibility first.
bool is_complete_block(const Framework& f, const std::vector<ArgId>& s,
                       DecisionMode mode = DecisionMode::corrected);

/// corrected: p-admissible and no outside argument is both acceptable
/// w.r.t. s and free of odd-walk conflicts (any length >= 1, either
/// direction) with members of s. paper_faithful: p-admissible and for every
/// outside argument at least one of — zero pcd-block column, non-zero
/// pca1-block column, non-zero pca2-block row.
bool is_complete_p_block(const Framework& f, const std::vector<ArgId>& s,
                         DecisionMode mode = DecisionMode::corrected);

/// Enumerates all subsets passing the kind's block decider in canonical
/// order; preferred / preferred_p are the maximal admissible / p-admissible
/// subsets. Throws UnsupportedKindError for conflict_free and grounded,
/// EnumerationLimitError when f.size() > limit.
ExtensionSet enumerate_block(const Framework& f, SemanticsKind kind,
                             DecisionMode mode = DecisionMode::corrected,
                             int limit = kDefaultEnumerationLimit);

}  // namespace argmat

#endif  // ARGMAT_SEMANTICS_HPP_
