#ifndef ARGMAT_BLOCKS_HPP_
#define ARGMAT_BLOCKS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "argmat/bool_matrix.hpp"
#include "argmat/framework.hpp"
#include "argmat/mode.hpp"

namespace argmat {

/// A row-set x column-set selection from a square matrix. Both sequences are
/// strictly increasing and duplicate-free.
struct BlockSpec {
    std::vector<ArgId> rows;
    std::vector<ArgId> cols;

    BlockSpec(std::vector<ArgId> rows_in, std::vector<ArgId> cols_in);

    /// rows = cols = {1..n}.
    static BlockSpec full(int n);
};

/// Entries copied out of a source matrix at a BlockSpec's intersections.
/// Positions are 0-based within the block: entry(r, c) equals the source
/// entry (spec.rows[r], spec.cols[c]).
class Block {
public:
    Block(BlockSpec spec, std::vector<std::uint8_t> entries);

    const BlockSpec& spec() const { return spec_; }
    int row_count() const { return static_cast<int>(spec_.rows.size()); }
    int col_count() const { return static_cast<int>(spec_.cols.size()); }

    bool entry(int r, int c) const;

    /// True when no entry is set; vacuously true for empty blocks.
    bool all_zero() const;

    /// True when row r has at least one set entry. A row with no columns is
    /// zero, matching the convention that an empty vector is a zero vector.
    bool row_nonzero(int r) const;
    bool col_nonzero(int c) const;

    /// Header line `rows=<i1,...> cols=<j1,...>` followed by 0/1 rows.
    std::string to_text() const;

    friend bool operator==(const Block& a, const Block& b) = default;

private:
    BlockSpec spec_;
    std::vector<std::uint8_t> entries_;  // row-major
};

/// Copies the selected entries. Throws IndexOutOfRangeError if the spec
/// exceeds the matrix order.
Block extract_block(const BoolMatrix& m, const BlockSpec& spec);

/// The block over the complementary rows and columns. Defined only for
/// specs with |rows| == |cols| (throws NonPrincipalSpecError otherwise).
Block complementary_block(const BoolMatrix& m, const BlockSpec& spec);

/// The named selections driving the semantics criteria. With S a subset of
/// arguments and T = A \ S, the source matrix and selection per kind are:
///   cf   M(F)        rows S, cols S    — attacks inside S
///   s    M(F)        rows S, cols T    — attacks from S outward
///   a    M(F)        rows T, cols S    — attacks into S
///   c    M(F)        rows T, cols T    — attacks among the outside
///   p    odd-reach   rows S, cols S    — odd walks (>= 3) inside S
///   pcd  M^2(F)      rows S, cols T    — two-step walks from S outward
///   pca1 odd-reach   rows S, cols T    — odd walks (>= 3) from S outward
///   pca2 odd-reach   rows T, cols S    — odd walks (>= 3) into S
/// The odd-reach source honors `mode` (exact vs truncated power sums).
enum class BlockKind { cf, s, a, c, p, pcd, pca1, pca2 };

std::string_view to_string(BlockKind kind);
std::optional<BlockKind> block_kind_from_string(std::string_view s);

Block named_block(const Framework& f, const std::vector<ArgId>& subset, BlockKind kind,
                  DecisionMode mode = DecisionMode::corrected);

}  // namespace argmat

#endif  // ARGMAT_BLOCKS_HPP_
