#include "argmat/bool_matrix.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "argmat/errors.hpp"

namespace argmat {

BoolMatrix::BoolMatrix(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) {
        throw IndexOutOfRangeError("matrix order must be non-negative");
    }
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void BoolMatrix::check(ArgId i, ArgId j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw IndexOutOfRangeError("matrix entry (" + std::to_string(i) + ", " +
                                   std::to_string(j) + ") out of range 1.." + std::to_string(n_));
    }
}

bool BoolMatrix::test(ArgId i, ArgId j) const {
    check(i, j);
    const int col = j - 1;
    return (bits_[static_cast<std::size_t>(i - 1) * words_ + col / 64] >> (col % 64)) & 1;
}

void BoolMatrix::set(ArgId i, ArgId j, bool value) {
    check(i, j);
    const int col = j - 1;
    std::uint64_t& word = bits_[static_cast<std::size_t>(i - 1) * words_ + col / 64];
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    if (value) {
        word |= bit;
    } else {
        word &= ~bit;
    }
}

void BoolMatrix::accumulate(const BoolMatrix& other) {
    if (other.n_ != n_) {
        throw DimensionMismatchError(n_, other.n_);
    }
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        bits_[w] |= other.bits_[w];
    }
}

bool BoolMatrix::any() const {
    for (std::uint64_t w : bits_) {
        if (w != 0) {
            return true;
        }
    }
    return false;
}

std::string BoolMatrix::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(n_) * (n_ + 1));
    for (ArgId i = 1; i <= n_; ++i) {
        for (ArgId j = 1; j <= n_; ++j) {
            out.push_back(test(i, j) ? '1' : '0');
        }
        out.push_back('\n');
    }
    return out;
}

std::span<const std::uint64_t> BoolMatrix::row(int row0) const {
    return {bits_.data() + static_cast<std::size_t>(row0) * words_, static_cast<std::size_t>(words_)};
}

std::span<std::uint64_t> BoolMatrix::row(int row0) {
    return {bits_.data() + static_cast<std::size_t>(row0) * words_, static_cast<std::size_t>(words_)};
}

BoolMatrix attack_matrix(const Framework& f) {
    BoolMatrix m(f.size());
    for (ArgId i = 1; i <= f.size(); ++i) {
        for (ArgId j : f.targets(i)) {
            m.set(i, j);
        }
    }
    return m;
}

BoolMatrix transpose(const BoolMatrix& m) {
    BoolMatrix t(m.size());
    for (ArgId i = 1; i <= m.size(); ++i) {
        for (ArgId j = 1; j <= m.size(); ++j) {
            if (m.test(i, j)) {
                t.set(j, i);
            }
        }
    }
    return t;
}

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatchError(a.size(), b.size());
    }
    const int n = a.size();
    BoolMatrix c(n);
    for (int i = 0; i < n; ++i) {
        auto arow = a.row(i);
        auto crow = c.row(i);
        for (int w = 0; w < a.words_per_row(); ++w) {
            std::uint64_t bitsw = arow[w];
            while (bitsw != 0) {
                const int t = w * 64 + std::countr_zero(bitsw);
                bitsw &= bitsw - 1;
                auto brow = b.row(t);
                for (int v = 0; v < a.words_per_row(); ++v) {
                    crow[v] |= brow[v];
                }
            }
        }
    }
    return c;
}

BoolMatrix bool_power(const BoolMatrix& m, int k) {
    if (k < 1) {
        throw IndexOutOfRangeError("matrix power exponent must be >= 1");
    }
    BoolMatrix acc = m;
    for (int step = 1; step < k; ++step) {
        acc = bool_product(acc, m);
    }
    return acc;
}

std::int64_t CountMatrix::at(ArgId i, ArgId j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw IndexOutOfRangeError("count entry out of range");
    }
    return counts_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

std::int64_t& CountMatrix::at(ArgId i, ArgId j) {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
        throw IndexOutOfRangeError("count entry out of range");
    }
    return counts_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

CountMatrix count_length2_walks(const BoolMatrix& m) {
    const int n = m.size();
    CountMatrix counts(n);
    const BoolMatrix t = transpose(m);
    // counts(i, j) = |row_i(M) AND row_j(M^T)|: the middle arguments of
    // i -> t -> j walks.
    for (int i = 0; i < n; ++i) {
        auto mrow = m.row(i);
        for (int j = 0; j < n; ++j) {
            auto trow = t.row(j);
            std::int64_t total = 0;
            for (int w = 0; w < m.words_per_row(); ++w) {
                total += std::popcount(mrow[w] & trow[w]);
            }
            counts.at(i + 1, j + 1) = total;
        }
    }
    return counts;
}

}  // namespace argmat
