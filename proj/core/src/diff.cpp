#include "argmat/diff.hpp"

#include <unordered_set>

#include "argmat/io.hpp"
#include "argmat/oracle.hpp"
#include "argmat/parity.hpp"
#include "argmat/subset.hpp"

namespace argmat {

bool DiffReport::oracle_matches_corrected() const {
    for (const auto& w : witnesses) {
        if (w.oracle != w.corrected) {
            return false;
        }
    }
    return true;
}

bool DiffReport::oracle_matches_paper() const {
    for (const auto& w : witnesses) {
        if (w.oracle != w.paper) {
            return false;
        }
    }
    return true;
}

DiffReport differential_check(const Framework& f, SemanticsKind kind, int limit) {
    DiffReport report;
    report.framework_apx = to_apx(f);
    report.kind = kind;
    report.oracle_result = oracle_extensions(f, kind, limit);
    report.corrected_result = enumerate_block(f, kind, DecisionMode::corrected, limit);
    report.paper_result = enumerate_block(f, kind, DecisionMode::paper_faithful, limit);

    auto mask_set = [](const ExtensionSet& set) {
        std::unordered_set<std::uint64_t> masks;
        masks.reserve(set.extensions.size());
        for (const auto& e : set.extensions) {
            masks.insert(subset_mask(e));
        }
        return masks;
    };
    const auto oracle_masks = mask_set(report.oracle_result);
    const auto corrected_masks = mask_set(report.corrected_result);
    const auto paper_masks = mask_set(report.paper_result);

    for_each_subset_canonical(f.size(), [&](const std::vector<ArgId>& subset) {
        const std::uint64_t mask = subset_mask(subset);
        const bool o = oracle_masks.contains(mask);
        const bool c = corrected_masks.contains(mask);
        const bool p = paper_masks.contains(mask);
        if (o != c || o != p) {
            report.witnesses.push_back(DiffWitness{subset, o, c, p});
        }
    });
    return report;
}

std::string_view to_string(ReachRelation relation) {
    switch (relation) {
        case ReachRelation::indirect_attack: return "indirect_attack";
        case ReachRelation::indirect_defense: return "indirect_defense";
        case ReachRelation::controversial: return "controversial";
    }
    return "?";
}

bool ReachDiffReport::oracle_matches_corrected() const {
    for (const auto& w : witnesses) {
        if (w.oracle != w.corrected) {
            return false;
        }
    }
    return true;
}

ReachDiffReport differential_reach_check(const Framework& f) {
    ReachDiffReport report;
    report.framework_apx = to_apx(f);
    const int n = f.size();

    const OracleReach walk = oracle_reach(f);
    const BoolMatrix odd_exact = odd_reach_matrix(f, OddMinLength::one);
    const BoolMatrix even_exact = even_reach_matrix(f);
    const BoolMatrix odd_paper = paper_odd_reach_matrix(f);
    const BoolMatrix even_paper = paper_even_reach_matrix(f);

    auto add = [&](ReachRelation rel, ArgId i, ArgId j, bool o, bool c, bool p) {
        if (o != c || o != p) {
            report.witnesses.push_back(ReachDiffWitness{rel, i, j, o, c, p});
        }
    };
    for (ArgId i = 1; i <= n; ++i) {
        for (ArgId j = 1; j <= n; ++j) {
            add(ReachRelation::indirect_attack, i, j, walk.odd_walk(i, j), odd_exact.test(i, j),
                odd_paper.test(i, j));
        }
    }
    for (ArgId i = 1; i <= n; ++i) {
        for (ArgId j = 1; j <= n; ++j) {
            add(ReachRelation::indirect_defense, i, j, walk.even_walk(i, j),
                even_exact.test(i, j), even_paper.test(i, j));
        }
    }
    for (ArgId i = 1; i <= n; ++i) {
        for (ArgId j = 1; j <= n; ++j) {
            add(ReachRelation::controversial, i, j, walk.odd_walk(i, j) && walk.even_walk(i, j),
                odd_exact.test(i, j) && even_exact.test(i, j),
                odd_paper.test(i, j) && even_paper.test(i, j));
        }
    }
    return report;
}

}  // namespace argmat
