#ifndef ARGMAT_BOOL_MATRIX_HPP_
#define ARGMAT_BOOL_MATRIX_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "argmat/framework.hpp"

namespace argmat {

/// Square boolean matrix over argument indices, stored as 64-bit packed rows.
/// Entries are addressed 1-based, matching ArgId.
class BoolMatrix {
public:
    BoolMatrix() = default;
    explicit BoolMatrix(int n);

    int size() const { return n_; }
    int words_per_row() const { return words_; }

    bool test(ArgId i, ArgId j) const;
    void set(ArgId i, ArgId j, bool value = true);

    /// ORs `other`'s entries into this matrix. Sizes must match.
    void accumulate(const BoolMatrix& other);

    bool any() const;

    /// n lines of n characters '0'/'1', row-major, each line '\n'-terminated.
    std::string to_text() const;

    /// Raw packed row access (0-based row). Bits beyond column n are zero.
    std::span<const std::uint64_t> row(int row0) const;
    std::span<std::uint64_t> row(int row0);

    friend bool operator==(const BoolMatrix& a, const BoolMatrix& b) = default;

private:
    void check(ArgId i, ArgId j) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// M(F): entry (i, j) set iff i attacks j.
BoolMatrix attack_matrix(const Framework& f);

/// Transpose; entry (i, j) of the result is entry (j, i) of m.
BoolMatrix transpose(const BoolMatrix& m);

/// Product over the boolean semiring (+ is OR, * is AND). Throws
/// DimensionMismatchError when sizes differ.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);

/// k-th boolean power, k >= 1; entry (i, j) set iff a walk of length exactly
/// k leads from i to j. k = 1 returns a copy.
BoolMatrix bool_power(const BoolMatrix& m, int k);

/// Exact non-negative integer matrix; counts(i, j) produced by
/// count_length2_walks is the number of distinct length-2 walks i -> j.
class CountMatrix {
public:
    CountMatrix() = default;
    explicit CountMatrix(int n) : n_(n), counts_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    std::int64_t at(ArgId i, ArgId j) const;
    std::int64_t& at(ArgId i, ArgId j);

    friend bool operator==(const CountMatrix& a, const CountMatrix& b) = default;

private:
    int n_ = 0;
    std::vector<std::int64_t> counts_;
};

CountMatrix count_length2_walks(const BoolMatrix& m);

}  // namespace argmat

#endif  // ARGMAT_BOOL_MATRIX_HPP_
