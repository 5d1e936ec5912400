#ifndef ARGMAT_TESTS_WALK_ORACLE_HPP_
#define ARGMAT_TESTS_WALK_ORACLE_HPP_

#include <vector>

#include "argmat/framework.hpp"

namespace argmat::testing {

/// Test-side walk enumerator: memoized recursion over adjacency lists,
/// independent of both the bitset matrix algebra and the library's BFS
/// oracle. Used to freeze expected values.
class WalkOracle {
public:
    explicit WalkOracle(const Framework& f) : f_(f) {}

    /// Walk of length exactly `len` from i to j exists (len >= 0).
    bool exact(ArgId i, ArgId j, int len) const {
        memo_.assign(static_cast<std::size_t>(f_.size() + 1) * (len + 1), -1);
        len_ = len;
        target_ = j;
        return walk_from(i, len);
    }

    /// Number of distinct walks of length exactly 2 from i to j.
    long count_len2(ArgId i, ArgId j) const {
        long total = 0;
        for (ArgId t : f_.targets(i)) {
            if (f_.attacks(t, j)) {
                ++total;
            }
        }
        return total;
    }

    /// Odd-length walk with min_len <= length <= cap exists.
    bool odd_up_to(ArgId i, ArgId j, int min_len, int cap) const {
        for (int len = min_len; len <= cap; ++len) {
            if (len % 2 == 1 && exact(i, j, len)) {
                return true;
            }
        }
        return false;
    }

    /// Even-length walk with min_len <= length <= cap exists.
    bool even_up_to(ArgId i, ArgId j, int min_len, int cap) const {
        for (int len = min_len; len <= cap; ++len) {
            if (len % 2 == 0 && len > 0 && exact(i, j, len)) {
                return true;
            }
        }
        return false;
    }

private:
    bool walk_from(ArgId v, int remaining) const {
        if (remaining == 0) {
            return v == target_;
        }
        signed char& cell = memo_[static_cast<std::size_t>(v) * (len_ + 1) + remaining];
        if (cell >= 0) {
            return cell != 0;
        }
        cell = 0;
        for (ArgId w : f_.targets(v)) {
            if (walk_from(w, remaining - 1)) {
                cell = 1;
                break;
            }
        }
        return cell != 0;
    }

    const Framework& f_;
    mutable std::vector<signed char> memo_;
    mutable int len_ = 0;
    mutable ArgId target_ = 0;
};

}  // namespace argmat::testing

#endif  // ARGMAT_TESTS_WALK_ORACLE_HPP_
