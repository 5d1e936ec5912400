#include "argmat/blocks.hpp"

#include <numeric>
#include <sstream>

#include "argmat/errors.hpp"
#include "argmat/parity.hpp"
#include "argmat/subset.hpp"

namespace argmat {

namespace {

void require_increasing(const std::vector<ArgId>& ids, const char* what) {
    ArgId prev = 0;
    for (ArgId i : ids) {
        if (i < 1) {
            throw IndexOutOfRangeError(std::string(what) + " indices must be >= 1");
        }
        if (i <= prev) {
            throw IndexOutOfRangeError(std::string(what) + " indices must be strictly increasing");
        }
        prev = i;
    }
}

void require_in_range(const std::vector<ArgId>& ids, int n, const char* what) {
    if (!ids.empty() && ids.back() > n) {
        throw IndexOutOfRangeError(std::string(what) + " index " + std::to_string(ids.back()) +
                                   " exceeds matrix order " + std::to_string(n));
    }
}

std::string join_ids(const std::vector<ArgId>& ids) {
    std::string out;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        if (k > 0) {
            out.push_back(',');
        }
        out += std::to_string(ids[k]);
    }
    return out;
}

}  // namespace

BlockSpec::BlockSpec(std::vector<ArgId> rows_in, std::vector<ArgId> cols_in)
    : rows(std::move(rows_in)), cols(std::move(cols_in)) {
    require_increasing(rows, "row");
    require_increasing(cols, "column");
}

BlockSpec BlockSpec::full(int n) {
    std::vector<ArgId> rows(static_cast<std::size_t>(n));
    std::iota(rows.begin(), rows.end(), 1);
    std::vector<ArgId> cols = rows;
    return BlockSpec(std::move(rows), std::move(cols));
}

Block::Block(BlockSpec spec, std::vector<std::uint8_t> entries)
    : spec_(std::move(spec)), entries_(std::move(entries)) {}

bool Block::entry(int r, int c) const {
    if (r < 0 || r >= row_count() || c < 0 || c >= col_count()) {
        throw IndexOutOfRangeError("block entry out of range");
    }
    return entries_[static_cast<std::size_t>(r) * col_count() + c] != 0;
}

bool Block::all_zero() const {
    for (std::uint8_t e : entries_) {
        if (e) {
            return false;
        }
    }
    return true;
}

bool Block::row_nonzero(int r) const {
    for (int c = 0; c < col_count(); ++c) {
        if (entry(r, c)) {
            return true;
        }
    }
    return false;
}

bool Block::col_nonzero(int c) const {
    for (int r = 0; r < row_count(); ++r) {
        if (entry(r, c)) {
            return true;
        }
    }
    return false;
}

std::string Block::to_text() const {
    std::ostringstream out;
    out << "rows=" << join_ids(spec_.rows) << " cols=" << join_ids(spec_.cols) << "\n";
    for (int r = 0; r < row_count(); ++r) {
        for (int c = 0; c < col_count(); ++c) {
            out << (entry(r, c) ? '1' : '0');
        }
        out << "\n";
    }
    return out.str();
}

Block extract_block(const BoolMatrix& m, const BlockSpec& spec) {
    require_in_range(spec.rows, m.size(), "row");
    require_in_range(spec.cols, m.size(), "column");
    std::vector<std::uint8_t> entries;
    entries.reserve(spec.rows.size() * spec.cols.size());
    for (ArgId i : spec.rows) {
        for (ArgId j : spec.cols) {
            entries.push_back(m.test(i, j) ? 1 : 0);
        }
    }
    return Block(spec, std::move(entries));
}

Block complementary_block(const BoolMatrix& m, const BlockSpec& spec) {
    if (spec.rows.size() != spec.cols.size()) {
        throw NonPrincipalSpecError("complementary block requires |rows| == |cols|, got " +
                                    std::to_string(spec.rows.size()) + " x " +
                                    std::to_string(spec.cols.size()));
    }
    require_in_range(spec.rows, m.size(), "row");
    require_in_range(spec.cols, m.size(), "column");
    return extract_block(
        m, BlockSpec(complement(m.size(), spec.rows), complement(m.size(), spec.cols)));
}

std::string_view to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::cf: return "cf";
        case BlockKind::s: return "s";
        case BlockKind::a: return "a";
        case BlockKind::c: return "c";
        case BlockKind::p: return "p";
        case BlockKind::pcd: return "pcd";
        case BlockKind::pca1: return "pca1";
        case BlockKind::pca2: return "pca2";
    }
    return "?";
}

std::optional<BlockKind> block_kind_from_string(std::string_view s) {
    if (s == "cf") return BlockKind::cf;
    if (s == "s") return BlockKind::s;
    if (s == "a") return BlockKind::a;
    if (s == "c") return BlockKind::c;
    if (s == "p") return BlockKind::p;
    if (s == "pcd") return BlockKind::pcd;
    if (s == "pca1") return BlockKind::pca1;
    if (s == "pca2") return BlockKind::pca2;
    return std::nullopt;
}

Block named_block(const Framework& f, const std::vector<ArgId>& subset, BlockKind kind,
                  DecisionMode mode) {
    validate_subset(f, subset);
    const std::vector<ArgId> rest = complement(f.size(), subset);
    switch (kind) {
        case BlockKind::cf:
            return extract_block(attack_matrix(f), BlockSpec(subset, subset));
        case BlockKind::s:
            return extract_block(attack_matrix(f), BlockSpec(subset, rest));
        case BlockKind::a:
            return extract_block(attack_matrix(f), BlockSpec(rest, subset));
        case BlockKind::c:
            return extract_block(attack_matrix(f), BlockSpec(rest, rest));
        case BlockKind::p:
            return extract_block(odd_reach_for_mode(f, mode), BlockSpec(subset, subset));
        case BlockKind::pcd: {
            const BoolMatrix m = attack_matrix(f);
            return extract_block(bool_product(m, m), BlockSpec(subset, rest));
        }
        case BlockKind::pca1:
            return extract_block(odd_reach_for_mode(f, mode), BlockSpec(subset, rest));
        case BlockKind::pca2:
            return extract_block(odd_reach_for_mode(f, mode), BlockSpec(rest, subset));
    }
    throw UnsupportedKindError("unknown block kind");
}

}  // namespace argmat
