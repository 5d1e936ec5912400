#include "argmat/reachability.hpp"

#include <array>
#include <queue>
#include <stdexcept>

#include "argmat/errors.hpp"

namespace argmat {

namespace {

void check_pair(const Framework& f, ArgId i, ArgId j) {
    if (!f.valid(i) || !f.valid(j)) {
        throw IndexOutOfRangeError("argument index out of range 1.." + std::to_string(f.size()));
    }
}

}  // namespace

ParityReach parity_bfs(const Framework& f) {
    const int n = f.size();
    ParityReach reach{BoolMatrix(n), BoolMatrix(n)};
    // States are (argument, walk-parity); starting states are the source's
    // direct targets at odd parity, so the trivial length-0 walk never marks
    // even reachability.
    std::vector<std::array<bool, 2>> seen(static_cast<std::size_t>(n) + 1);
    std::queue<std::pair<ArgId, int>> queue;
    for (ArgId src = 1; src <= n; ++src) {
        for (auto& s : seen) {
            s = {false, false};
        }
        for (ArgId t : f.targets(src)) {
            if (!seen[t][1]) {
                seen[t][1] = true;
                queue.emplace(t, 1);
            }
        }
        while (!queue.empty()) {
            auto [v, parity] = queue.front();
            queue.pop();
            for (ArgId w : f.targets(v)) {
                const int next = parity ^ 1;
                if (!seen[w][next]) {
                    seen[w][next] = true;
                    queue.emplace(w, next);
                }
            }
        }
        for (ArgId v = 1; v <= n; ++v) {
            if (seen[v][1]) {
                reach.odd.set(src, v);
            }
            if (seen[v][0]) {
                reach.even.set(src, v);
            }
        }
    }
    return reach;
}

std::optional<std::vector<ArgId>> walk_witness(const Framework& f, ArgId from, ArgId to,
                                               WalkParity parity, int min_length) {
    check_pair(f, from, to);
    if (min_length < 1 || min_length > 3) {
        throw std::invalid_argument("walk witness min_length must be 1, 2 or 3");
    }
    const int want_parity = parity == WalkParity::odd ? 1 : 0;
    // States (argument, parity, len capped at 3); the cap distinguishes
    // "length >= min_length" without tracking exact distances.
    const int n = f.size();
    constexpr int kCap = 3;
    auto idx = [n](ArgId v, int p, int len) {
        return ((static_cast<std::size_t>(v) - 1) * 2 + p) * (kCap + 1) + len;
    };
    std::vector<int> parent(static_cast<std::size_t>(n) * 2 * (kCap + 1), -1);
    std::vector<bool> seen(parent.size(), false);
    std::queue<std::array<int, 3>> queue;
    for (ArgId t : f.targets(from)) {
        const auto s = idx(t, 1, 1);
        if (!seen[s]) {
            seen[s] = true;
            parent[s] = -2;  // root marker
            queue.push({t, 1, 1});
        }
    }
    std::optional<std::array<int, 3>> goal;
    while (!queue.empty() && !goal) {
        auto state = queue.front();
        queue.pop();
        auto [v, p, len] = state;
        if (v == to && p == want_parity && len >= min_length) {
            goal = state;
            break;
        }
        for (ArgId w : f.targets(v)) {
            const int np = p ^ 1;
            const int nlen = std::min(len + 1, kCap);
            const auto s = idx(w, np, nlen);
            if (!seen[s]) {
                seen[s] = true;
                parent[s] = static_cast<int>(idx(v, p, len));
                queue.push({w, np, nlen});
            }
        }
    }
    if (!goal) {
        return std::nullopt;
    }
    std::vector<ArgId> path;
    int cur = static_cast<int>(idx((*goal)[0], (*goal)[1], (*goal)[2]));
    while (cur >= 0) {
        path.push_back(static_cast<ArgId>(cur / (2 * (kCap + 1))) + 1);
        cur = parent[cur];
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

bool defends_len2(const Framework& f, ArgId i, ArgId j) {
    check_pair(f, i, j);
    for (ArgId t : f.targets(i)) {
        if (f.attacks(t, j)) {
            return true;
        }
    }
    return false;
}

bool indirectly_attacks(const Framework& f, ArgId i, ArgId j, OddMinLength min_length,
                        DecisionMode mode) {
    check_pair(f, i, j);
    if (mode == DecisionMode::paper_faithful) {
        if (min_length != OddMinLength::three) {
            throw std::invalid_argument(
                "the truncated odd power sum starts at length 3; paper_faithful queries "
                "require min_length three");
        }
        return paper_odd_reach_matrix(f).test(i, j);
    }
    return odd_reach_matrix(f, min_length).test(i, j);
}

bool indirectly_defends(const Framework& f, ArgId i, ArgId j, DecisionMode mode) {
    check_pair(f, i, j);
    return mode == DecisionMode::paper_faithful ? paper_even_reach_matrix(f).test(i, j)
                                                : even_reach_matrix(f).test(i, j);
}

bool is_controversial(const Framework& f, ArgId i, ArgId j, DecisionMode mode) {
    check_pair(f, i, j);
    if (mode == DecisionMode::paper_faithful) {
        return paper_odd_reach_matrix(f).test(i, j) && paper_even_reach_matrix(f).test(i, j);
    }
    return odd_reach_matrix(f, OddMinLength::one).test(i, j) && even_reach_matrix(f).test(i, j);
}

ControversyReport controversial_pairs(const Framework& f, DecisionMode mode) {
    ControversyReport report;
    report.mode = mode;
    const BoolMatrix odd = mode == DecisionMode::paper_faithful
                               ? paper_odd_reach_matrix(f)
                               : odd_reach_matrix(f, OddMinLength::one);
    const BoolMatrix even = mode == DecisionMode::paper_faithful ? paper_even_reach_matrix(f)
                                                                 : even_reach_matrix(f);
    for (ArgId i = 1; i <= f.size(); ++i) {
        for (ArgId j = 1; j <= f.size(); ++j) {
            if (odd.test(i, j) && even.test(i, j)) {
                report.pairs.emplace_back(i, j);
            }
        }
    }
    return report;
}

}  // namespace argmat
