#ifndef ARGMAT_DIFF_HPP_
#define ARGMAT_DIFF_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "argmat/framework.hpp"
#include "argmat/semantics.hpp"

namespace argmat {

/// One subset on which at least two of the three routes disagree.
struct DiffWitness {
    std::vector<ArgId> subset;
    bool oracle = false;
    bool corrected = false;
    bool paper = false;

    friend bool operator==(const DiffWitness& a, const DiffWitness& b) = default;
};

/// Result of running the brute-force oracle, the corrected block route, and
/// the literal block route over the same framework and semantics.
/// witnesses is empty iff the three extension sets are identical.
struct DiffReport {
    std::string framework_apx;  // canonical text form of the framework
    SemanticsKind kind = SemanticsKind::admissible;
    ExtensionSet oracle_result;
    ExtensionSet corrected_result;
    ExtensionSet paper_result;
    std::vector<DiffWitness> witnesses;

    /// A corrected-vs-oracle mismatch is an implementation bug by contract.
    bool oracle_matches_corrected() const;
    bool oracle_matches_paper() const;
};

DiffReport differential_check(const Framework& f, SemanticsKind kind,
                              int limit = kDefaultEnumerationLimit);

/// Pair-level differential over the walk relations feeding the prudent
/// criteria. The oracle verdict comes from the adjacency-list parity search;
/// corrected and paper verdicts from the respective power sums.
enum class ReachRelation { indirect_attack, indirect_defense, controversial };

std::string_view to_string(ReachRelation relation);

struct ReachDiffWitness {
    ReachRelation relation = ReachRelation::indirect_attack;
    ArgId attacker = 0;
    ArgId target = 0;
    bool oracle = false;
    bool corrected = false;
    bool paper = false;

    friend bool operator==(const ReachDiffWitness& a, const ReachDiffWitness& b) = default;
};

struct ReachDiffReport {
    std::string framework_apx;
    std::vector<ReachDiffWitness> witnesses;  // relation-major, then (i, j) lexicographic

    bool oracle_matches_corrected() const;
};

ReachDiffReport differential_reach_check(const Framework& f);

}  // namespace argmat

#endif  // ARGMAT_DIFF_HPP_
