#include "argmat/subset.hpp"

#include <algorithm>
#include <string>

#include "argmat/errors.hpp"

namespace argmat {

void validate_subset(const Framework& f, const std::vector<ArgId>& s) {
    ArgId prev = 0;
    for (ArgId i : s) {
        if (!f.valid(i)) {
            throw IndexOutOfRangeError("subset member " + std::to_string(i) +
                                       " out of range 1.." + std::to_string(f.size()));
        }
        if (i <= prev) {
            throw IndexOutOfRangeError("subset members must be strictly increasing");
        }
        prev = i;
    }
}

std::vector<ArgId> complement(int n, const std::vector<ArgId>& s) {
    std::vector<ArgId> rest;
    rest.reserve(static_cast<std::size_t>(n) - s.size());
    std::size_t pos = 0;
    for (ArgId i = 1; i <= n; ++i) {
        if (pos < s.size() && s[pos] == i) {
            ++pos;
        } else {
            rest.push_back(i);
        }
    }
    return rest;
}

std::vector<ArgId> normalize_subset(const Framework& f, std::vector<ArgId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    validate_subset(f, ids);
    return ids;
}

std::uint64_t subset_mask(const std::vector<ArgId>& s) {
    std::uint64_t mask = 0;
    for (ArgId i : s) {
        mask |= std::uint64_t{1} << (i - 1);
    }
    return mask;
}

std::vector<ArgId> mask_to_subset(std::uint64_t mask) {
    std::vector<ArgId> s;
    for (ArgId i = 1; mask != 0; ++i, mask >>= 1) {
        if (mask & 1) {
            s.push_back(i);
        }
    }
    return s;
}

}  // namespace argmat
