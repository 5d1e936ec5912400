#ifndef ARGMAT_SUBSET_HPP_
#define ARGMAT_SUBSET_HPP_

#include <cstdint>
#include <vector>

#include "argmat/framework.hpp"

namespace argmat {

/// Argument subsets are represented as strictly increasing ArgId sequences;
/// the complement of S in {1..n} uses the same convention.

/// Throws IndexOutOfRangeError if `s` is not strictly increasing or contains
/// an index outside 1..f.size().
void validate_subset(const Framework& f, const std::vector<ArgId>& s);

/// {1..n} \ s, strictly increasing. `s` must be strictly increasing.
std::vector<ArgId> complement(int n, const std::vector<ArgId>& s);

/// Parses a strictly increasing subset from arbitrary-order ids (sorts,
/// rejects duplicates and out-of-range ids).
std::vector<ArgId> normalize_subset(const Framework& f, std::vector<ArgId> ids);

/// Bit i-1 set iff argument i is a member. Only valid for n <= 62.
std::uint64_t subset_mask(const std::vector<ArgId>& s);

std::vector<ArgId> mask_to_subset(std::uint64_t mask);

/// Visits every subset of {1..n} in the canonical enumeration order:
/// ascending cardinality, then lexicographic on the increasing member
/// sequence. fn receives the subset by const reference.
template <typename Fn>
void for_each_subset_canonical(int n, Fn&& fn) {
    std::vector<ArgId> subset;
    fn(static_cast<const std::vector<ArgId>&>(subset));  // k = 0
    for (int k = 1; k <= n; ++k) {
        subset.resize(k);
        for (int i = 0; i < k; ++i) {
            subset[i] = i + 1;
        }
        while (true) {
            fn(static_cast<const std::vector<ArgId>&>(subset));
            // Advance to the next k-combination in lexicographic order.
            int pos = k - 1;
            while (pos >= 0 && subset[pos] == n - (k - 1 - pos)) {
                --pos;
            }
            if (pos < 0) {
                break;
            }
            ++subset[pos];
            for (int i = pos + 1; i < k; ++i) {
                subset[i] = subset[i - 1] + 1;
            }
        }
    }
}

}  // namespace argmat

#endif  // ARGMAT_SUBSET_HPP_
