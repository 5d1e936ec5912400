#include "argmat/semantics.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "argmat/blocks.hpp"
#include "argmat/errors.hpp"
#include "argmat/parity.hpp"
#include "argmat/subset.hpp"

namespace argmat {

std::string_view to_string(SemanticsKind kind) {
    switch (kind) {
        case SemanticsKind::conflict_free: return "conflict_free";
        case SemanticsKind::admissible: return "admissible";
        case SemanticsKind::stable: return "stable";
        case SemanticsKind::complete: return "complete";
        case SemanticsKind::preferred: return "preferred";
        case SemanticsKind::grounded: return "grounded";
        case SemanticsKind::p_admissible: return "p_admissible";
        case SemanticsKind::stable_p: return "stable_p";
        case SemanticsKind::preferred_p: return "preferred_p";
        case SemanticsKind::complete_p: return "complete_p";
    }
    return "?";
}

std::optional<SemanticsKind> semantics_from_string(std::string_view s) {
    if (s == "conflict_free" || s == "conflict-free") return SemanticsKind::conflict_free;
    if (s == "admissible") return SemanticsKind::admissible;
    if (s == "stable") return SemanticsKind::stable;
    if (s == "complete") return SemanticsKind::complete;
    if (s == "preferred") return SemanticsKind::preferred;
    if (s == "grounded") return SemanticsKind::grounded;
    if (s == "p_admissible" || s == "p-admissible") return SemanticsKind::p_admissible;
    if (s == "stable_p" || s == "stable-p") return SemanticsKind::stable_p;
    if (s == "preferred_p" || s == "preferred-p") return SemanticsKind::preferred_p;
    if (s == "complete_p" || s == "complete-p") return SemanticsKind::complete_p;
    return std::nullopt;
}

bool block_decidable(SemanticsKind kind) {
    return kind != SemanticsKind::conflict_free && kind != SemanticsKind::grounded;
}

bool ExtensionSet::contains(const std::vector<ArgId>& subset) const {
    return std::find(extensions.begin(), extensions.end(), subset) != extensions.end();
}

// ---------------------------------------------------------------------------
// Single-subset deciders over the named blocks.
// ---------------------------------------------------------------------------

namespace {

bool every_column_nonzero(const Block& b) {
    for (int c = 0; c < b.col_count(); ++c) {
        if (!b.col_nonzero(c)) {
            return false;
        }
    }
    return true;
}

// Acceptability of the outside argument at position jpos (within the
// complement), w.r.t. a conflict-free s: every attacker of j is attacked by
// s. Attackers inside s can never be counter-attacked (s is conflict-free),
// so any s-block hit on column jpos refutes acceptability; attackers outside
// s are the non-zero entries of the c-block column jpos, each of which needs
// a non-zero s-block column.
bool acceptable_via_blocks(const Block& sblk, const Block& cblk, int jpos) {
    if (sblk.col_nonzero(jpos)) {
        return false;  // attacked by s itself; the attacker is immune to s
    }
    for (int t = 0; t < cblk.row_count(); ++t) {
        if (cblk.entry(t, jpos) && !sblk.col_nonzero(t)) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool is_stable_block(const Framework& f, const std::vector<ArgId>& s) {
    if (!named_block(f, s, BlockKind::cf).all_zero()) {
        return false;
    }
    return every_column_nonzero(named_block(f, s, BlockKind::s));
}

bool is_stable_p_block(const Framework& f, const std::vector<ArgId>& s, DecisionMode mode) {
    return is_stable_block(f, s) && named_block(f, s, BlockKind::p, mode).all_zero();
}

bool is_admissible_block(const Framework& f, const std::vector<ArgId>& s) {
    if (!named_block(f, s, BlockKind::cf).all_zero()) {
        return false;
    }
    const Block sblk = named_block(f, s, BlockKind::s);
    const Block ablk = named_block(f, s, BlockKind::a);
    for (int r = 0; r < ablk.row_count(); ++r) {
        if (ablk.row_nonzero(r) && !sblk.col_nonzero(r)) {
            return false;
        }
    }
    return true;
}

bool is_p_admissible_block(const Framework& f, const std::vector<ArgId>& s, DecisionMode mode) {
    return is_admissible_block(f, s) && named_block(f, s, BlockKind::p, mode).all_zero();
}

bool is_complete_block(const Framework& f, const std::vector<ArgId>& s, DecisionMode mode) {
    if (!is_admissible_block(f, s)) {
        return false;
    }
    const Block sblk = named_block(f, s, BlockKind::s);
    const Block cblk = named_block(f, s, BlockKind::c);
    const int outside = cblk.row_count();
    if (mode == DecisionMode::paper_faithful) {
        for (int t = 0; t < outside; ++t) {
            if (cblk.row_nonzero(t) && sblk.col_nonzero(t)) {
                return false;
            }
            if (!cblk.col_nonzero(t) && !sblk.col_nonzero(t)) {
                return false;
            }
        }
        return true;
    }
    for (int t = 0; t < outside; ++t) {
        if (acceptable_via_blocks(sblk, cblk, t)) {
            return false;  // an acceptable argument is missing from s
        }
    }
    return true;
}

bool is_complete_p_block(const Framework& f, const std::vector<ArgId>& s, DecisionMode mode) {
    if (!is_p_admissible_block(f, s, mode)) {
        return false;
    }
    const std::vector<ArgId> rest = complement(f.size(), s);
    if (mode == DecisionMode::paper_faithful) {
        const Block pcd = named_block(f, s, BlockKind::pcd, mode);
        const Block pca1 = named_block(f, s, BlockKind::pca1, mode);
        const Block pca2 = named_block(f, s, BlockKind::pca2, mode);
        for (int t = 0; t < static_cast<int>(rest.size()); ++t) {
            if (!pcd.col_nonzero(t) || pca1.col_nonzero(t) || pca2.row_nonzero(t)) {
                continue;
            }
            return false;
        }
        return true;
    }
    const Block sblk = named_block(f, s, BlockKind::s);
    const Block cblk = named_block(f, s, BlockKind::c);
    const BoolMatrix odd_any = odd_reach_matrix(f, OddMinLength::one);
    for (int t = 0; t < static_cast<int>(rest.size()); ++t) {
        if (!acceptable_via_blocks(sblk, cblk, t)) {
            continue;
        }
        const ArgId j = rest[t];
        bool conflict = false;
        for (ArgId member : s) {
            if (odd_any.test(j, member) || odd_any.test(member, j)) {
                conflict = true;
                break;
            }
        }
        if (!conflict) {
            return false;  // acceptable, unconflicted, yet excluded
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration (mask fast path, cross-checked against the block
// deciders in the test suite).
// ---------------------------------------------------------------------------

namespace {

struct MaskContext {
    int n = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> row;      // targets of i
    std::vector<std::uint64_t> col;      // attackers of j
    std::vector<std::uint64_t> m2col;    // two-step walkers into j
    std::vector<std::uint64_t> odd3row;  // odd >= 3 walks out of i (mode truncation)
    std::vector<std::uint64_t> odd3col;
    std::vector<std::uint64_t> odd1row;  // odd >= 1 walks out of i (exact)
    std::vector<std::uint64_t> odd1col;

    static MaskContext build(const Framework& f, DecisionMode mode) {
        MaskContext ctx;
        const int n = f.size();
        ctx.n = n;
        ctx.all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        ctx.row.assign(n + 1, 0);
        ctx.col.assign(n + 1, 0);
        ctx.m2col.assign(n + 1, 0);
        ctx.odd3row.assign(n + 1, 0);
        ctx.odd3col.assign(n + 1, 0);
        ctx.odd1row.assign(n + 1, 0);
        ctx.odd1col.assign(n + 1, 0);
        const BoolMatrix m = attack_matrix(f);
        const BoolMatrix m2 = bool_product(m, m);
        const BoolMatrix odd3 = odd_reach_for_mode(f, mode);
        const BoolMatrix odd1 = odd_reach_matrix(f, OddMinLength::one);
        for (ArgId i = 1; i <= n; ++i) {
            for (ArgId j = 1; j <= n; ++j) {
                const std::uint64_t bi = std::uint64_t{1} << (i - 1);
                const std::uint64_t bj = std::uint64_t{1} << (j - 1);
                if (m.test(i, j)) {
                    ctx.row[i] |= bj;
                    ctx.col[j] |= bi;
                }
                if (m2.test(i, j)) {
                    ctx.m2col[j] |= bi;
                }
                if (odd3.test(i, j)) {
                    ctx.odd3row[i] |= bj;
                    ctx.odd3col[j] |= bi;
                }
                if (odd1.test(i, j)) {
                    ctx.odd1row[i] |= bj;
                    ctx.odd1col[j] |= bi;
                }
            }
        }
        return ctx;
    }

    std::uint64_t attacked_by(std::uint64_t s) const {
        std::uint64_t hit = 0;
        std::uint64_t rest = s;
        while (rest != 0) {
            const int i = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            hit |= row[i];
        }
        return hit;
    }

    bool conflict_free(std::uint64_t s) const {
        std::uint64_t rest = s;
        while (rest != 0) {
            const int i = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            if (row[i] & s) {
                return false;
            }
        }
        return true;
    }

    bool odd3_free(std::uint64_t s) const {
        std::uint64_t rest = s;
        while (rest != 0) {
            const int i = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            if (odd3row[i] & s) {
                return false;
            }
        }
        return true;
    }

    bool admissible(std::uint64_t s, std::uint64_t hit) const {
        if (!conflict_free(s)) {
            return false;
        }
        std::uint64_t outside = all & ~s;
        while (outside != 0) {
            const int j = std::countr_zero(outside) + 1;
            outside &= outside - 1;
            if ((row[j] & s) != 0 && (hit & (std::uint64_t{1} << (j - 1))) == 0) {
                return false;
            }
        }
        return true;
    }

    bool acceptable(int j, std::uint64_t hit) const { return (col[j] & ~hit) == 0; }
};

using MaskDecider = bool (*)(const MaskContext&, std::uint64_t);

bool mask_stable(const MaskContext& ctx, std::uint64_t s) {
    if (!ctx.conflict_free(s)) {
        return false;
    }
    return (ctx.all & ~s & ~ctx.attacked_by(s)) == 0;
}

bool mask_stable_p(const MaskContext& ctx, std::uint64_t s) {
    return mask_stable(ctx, s) && ctx.odd3_free(s);
}

bool mask_admissible(const MaskContext& ctx, std::uint64_t s) {
    return ctx.admissible(s, ctx.attacked_by(s));
}

bool mask_p_admissible(const MaskContext& ctx, std::uint64_t s) {
    return mask_admissible(ctx, s) && ctx.odd3_free(s);
}

bool mask_complete_corrected(const MaskContext& ctx, std::uint64_t s) {
    const std::uint64_t hit = ctx.attacked_by(s);
    if (!ctx.admissible(s, hit)) {
        return false;
    }
    std::uint64_t outside = ctx.all & ~s;
    while (outside != 0) {
        const int j = std::countr_zero(outside) + 1;
        outside &= outside - 1;
        if (ctx.acceptable(j, hit)) {
            return false;
        }
    }
    return true;
}

bool mask_complete_paper(const MaskContext& ctx, std::uint64_t s) {
    const std::uint64_t hit = ctx.attacked_by(s);
    if (!ctx.admissible(s, hit)) {
        return false;
    }
    const std::uint64_t outside_mask = ctx.all & ~s;
    std::uint64_t outside = outside_mask;
    while (outside != 0) {
        const int j = std::countr_zero(outside) + 1;
        outside &= outside - 1;
        const bool s_hits_j = (hit & (std::uint64_t{1} << (j - 1))) != 0;
        if ((ctx.row[j] & outside_mask) != 0 && s_hits_j) {
            return false;
        }
        if ((ctx.col[j] & outside_mask) == 0 && !s_hits_j) {
            return false;
        }
    }
    return true;
}

bool mask_complete_p_corrected(const MaskContext& ctx, std::uint64_t s) {
    const std::uint64_t hit = ctx.attacked_by(s);
    if (!ctx.admissible(s, hit) || !ctx.odd3_free(s)) {
        return false;
    }
    std::uint64_t outside = ctx.all & ~s;
    while (outside != 0) {
        const int j = std::countr_zero(outside) + 1;
        outside &= outside - 1;
        if (ctx.acceptable(j, hit) && (ctx.odd1row[j] & s) == 0 && (ctx.odd1col[j] & s) == 0) {
            return false;
        }
    }
    return true;
}

bool mask_complete_p_paper(const MaskContext& ctx, std::uint64_t s) {
    if (!mask_p_admissible(ctx, s)) {
        return false;
    }
    std::uint64_t outside = ctx.all & ~s;
    while (outside != 0) {
        const int j = std::countr_zero(outside) + 1;
        outside &= outside - 1;
        const bool no_two_step_from_s = (ctx.m2col[j] & s) == 0;
        const bool odd_from_s = (ctx.odd3col[j] & s) != 0;
        const bool odd_into_s = (ctx.odd3row[j] & s) != 0;
        if (!(no_two_step_from_s || odd_from_s || odd_into_s)) {
            return false;
        }
    }
    return true;
}

// Keeps only subsets that are maximal w.r.t. inclusion.
std::vector<std::uint64_t> maximal_masks(const std::vector<std::uint64_t>& masks) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s : masks) {
        bool dominated = false;
        for (std::uint64_t t : masks) {
            if (t != s && (s & ~t) == 0) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace

ExtensionSet enumerate_block(const Framework& f, SemanticsKind kind, DecisionMode mode,
                             int limit) {
    if (!block_decidable(kind)) {
        throw UnsupportedKindError(std::string(to_string(kind)) +
                                   " has no block criterion; use the oracle enumerator");
    }
    const int n = f.size();
    if (n > kMaxEnumerationArguments) {
        throw EnumerationLimitError("exhaustive enumeration supports at most " +
                                    std::to_string(kMaxEnumerationArguments) + " arguments");
    }
    if (n > limit) {
        throw EnumerationLimitError("framework has " + std::to_string(n) +
                                    " arguments, over the enumeration limit " +
                                    std::to_string(limit));
    }

    const MaskContext ctx = MaskContext::build(f, mode);
    MaskDecider decide = nullptr;
    bool maximal = false;
    switch (kind) {
        case SemanticsKind::stable: decide = mask_stable; break;
        case SemanticsKind::stable_p: decide = mask_stable_p; break;
        case SemanticsKind::admissible: decide = mask_admissible; break;
        case SemanticsKind::p_admissible: decide = mask_p_admissible; break;
        case SemanticsKind::preferred:
            decide = mask_admissible;
            maximal = true;
            break;
        case SemanticsKind::preferred_p:
            decide = mask_p_admissible;
            maximal = true;
            break;
        case SemanticsKind::complete:
            decide = mode == DecisionMode::paper_faithful ? mask_complete_paper
                                                          : mask_complete_corrected;
            break;
        case SemanticsKind::complete_p:
            decide = mode == DecisionMode::paper_faithful ? mask_complete_p_paper
                                                          : mask_complete_p_corrected;
            break;
        default: throw UnsupportedKindError("unsupported kind");
    }

    std::vector<std::uint64_t> found;
    for_each_subset_canonical(n, [&](const std::vector<ArgId>& subset) {
        const std::uint64_t s = subset_mask(subset);
        if (decide(ctx, s)) {
            found.push_back(s);
        }
    });
    if (maximal) {
        found = maximal_masks(found);
    }

    ExtensionSet result;
    result.kind = kind;
    result.mode = mode;
    result.extensions.reserve(found.size());
    for (std::uint64_t s : found) {
        result.extensions.push_back(mask_to_subset(s));
    }
    return result;
}

}  // namespace argmat
