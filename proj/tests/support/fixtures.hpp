#ifndef ARGMAT_TESTS_FIXTURES_HPP_
#define ARGMAT_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "argmat/framework.hpp"

namespace argmat::testing {

/// Framework over names "1".."n" with attacks given as index pairs.
inline Framework numbered(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i) {
        names.push_back(std::to_string(i));
    }
    std::vector<std::pair<std::string, std::string>> attacks;
    attacks.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        attacks.emplace_back(std::to_string(a), std::to_string(b));
    }
    return Framework::build(std::move(names), attacks);
}

/// Three-argument attack cycle 1 -> 2 -> 3 -> 1.
inline Framework cycle3() { return numbered(3, {{1, 2}, {2, 3}, {3, 1}}); }

/// Four arguments: mutual conflict between 1 and 2, both attacking 3, and
/// 3 attacking 4.
inline Framework mutual4() { return numbered(4, {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 4}}); }

/// Six arguments: 1 attacked by 2 and 3; 4 and 6 strike the attackers; 5
/// defends 1 twice over (5 -> 2, 5 -> 4).
inline Framework defense6() {
    return numbered(6, {{2, 1}, {3, 1}, {4, 3}, {5, 2}, {5, 4}, {6, 3}});
}

/// defense6 with letter names a..f (same digraph, arguments renamed).
inline Framework defense6_letters() {
    return Framework::build({"a", "b", "c", "d", "e", "f"},
                            {{"b", "a"}, {"c", "a"}, {"d", "c"}, {"e", "b"}, {"e", "d"}, {"f", "c"}});
}

/// Five arguments: a 3-cycle with a two-step tail. The shortest odd walk
/// 1 -> 5 has length 7 (one lap of the cycle plus the tail), which exceeds
/// n — the fixture exercising truncated power sums.
inline Framework tail5() { return numbered(5, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}}); }

/// Chain 1 -> 2 -> 3.
inline Framework chain3() { return numbered(3, {{1, 2}, {2, 3}}); }

/// Two length-2 walks from 1 to 4 (via 2 and via 3).
inline Framework diamond4() { return numbered(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}); }

/// The digraph on n arguments encoded by `mask`: bit (i-1)*n + (j-1) set
/// iff i attacks j. Enumerating masks 0 .. 2^(n*n)-1 walks every digraph,
/// self-attacks included.
inline Framework from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (mask >> ((i - 1) * n + (j - 1)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    return numbered(n, edges);
}

/// Random digraph with independent edge probability p (self-attacks
/// included), deterministic for a given generator state.
inline Framework random_framework(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (flip(rng)) {
                edges.emplace_back(i, j);
            }
        }
    }
    return numbered(n, edges);
}

}  // namespace argmat::testing

#endif  // ARGMAT_TESTS_FIXTURES_HPP_
