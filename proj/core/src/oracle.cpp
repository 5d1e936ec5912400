#include "argmat/oracle.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>
#include <utility>

#include "argmat/errors.hpp"
#include "argmat/subset.hpp"

namespace argmat {

OracleReach oracle_reach(const Framework& f) {
    const int n = f.size();
    OracleReach reach;
    reach.n = n;
    reach.odd.assign(n, std::vector<char>(n, 0));
    reach.even.assign(n, std::vector<char>(n, 0));
    reach.odd3.assign(n, std::vector<char>(n, 0));
    std::vector<std::array<char, 2>> seen(static_cast<std::size_t>(n) + 1);
    std::queue<std::pair<ArgId, int>> queue;
    for (ArgId src = 1; src <= n; ++src) {
        for (auto& s : seen) {
            s = {0, 0};
        }
        for (ArgId t : f.targets(src)) {
            if (!seen[t][1]) {
                seen[t][1] = 1;
                queue.emplace(t, 1);
            }
        }
        while (!queue.empty()) {
            auto [v, parity] = queue.front();
            queue.pop();
            for (ArgId w : f.targets(v)) {
                const int next = parity ^ 1;
                if (!seen[w][next]) {
                    seen[w][next] = 1;
                    queue.emplace(w, next);
                }
            }
        }
        for (ArgId v = 1; v <= n; ++v) {
            reach.odd[src - 1][v - 1] = seen[v][1];
            reach.even[src - 1][v - 1] = seen[v][0];
        }
    }
    // An odd walk of length >= 3 is two steps followed by an odd walk, so
    // odd3(i, j) holds iff some two-step successor y of i has odd(y, j).
    for (ArgId i = 1; i <= n; ++i) {
        for (ArgId x : f.targets(i)) {
            for (ArgId y : f.targets(x)) {
                for (ArgId j = 1; j <= n; ++j) {
                    if (reach.odd[y - 1][j - 1]) {
                        reach.odd3[i - 1][j - 1] = 1;
                    }
                }
            }
        }
    }
    return reach;
}

bool oracle_conflict_free(const Framework& f, const std::vector<ArgId>& s) {
    validate_subset(f, s);
    for (ArgId a : s) {
        for (ArgId b : s) {
            if (f.attacks(a, b)) {
                return false;
            }
        }
    }
    return true;
}

bool oracle_defended_by_set(const Framework& f, const std::vector<ArgId>& s, ArgId a) {
    validate_subset(f, s);
    for (ArgId b : f.attackers(a)) {
        bool countered = false;
        for (ArgId c : s) {
            if (f.attacks(c, b)) {
                countered = true;
                break;
            }
        }
        if (!countered) {
            return false;
        }
    }
    return true;
}

bool oracle_indirect_conflict(const Framework& f, const std::vector<ArgId>& s, ArgId a) {
    validate_subset(f, s);
    const OracleReach reach = oracle_reach(f);
    for (ArgId member : s) {
        if (reach.odd_walk(a, member) || reach.odd_walk(member, a)) {
            return true;
        }
    }
    return false;
}

std::vector<ArgId> oracle_grounded(const Framework& f) {
    std::vector<char> in(static_cast<std::size_t>(f.size()) + 1, 0);
    std::vector<ArgId> members;
    bool grew = true;
    while (grew) {
        grew = false;
        for (ArgId a = 1; a <= f.size(); ++a) {
            if (in[a]) {
                continue;
            }
            if (oracle_defended_by_set(f, members, a)) {
                in[a] = 1;
                members.insert(std::lower_bound(members.begin(), members.end(), a), a);
                grew = true;
            }
        }
    }
    return members;
}

namespace {

struct OraclePredicates {
    const Framework& f;
    OracleReach reach;

    explicit OraclePredicates(const Framework& fw) : f(fw), reach(oracle_reach(fw)) {}

    bool conflict_free(const std::vector<ArgId>& s) const {
        for (ArgId a : s) {
            for (ArgId b : s) {
                if (f.attacks(a, b)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool defended(const std::vector<ArgId>& s, ArgId a) const {
        for (ArgId b : f.attackers(a)) {
            bool countered = false;
            for (ArgId c : s) {
                if (f.attacks(c, b)) {
                    countered = true;
                    break;
                }
            }
            if (!countered) {
                return false;
            }
        }
        return true;
    }

    bool defeated(const std::vector<ArgId>& s, ArgId a) const {
        for (ArgId b : s) {
            if (f.attacks(b, a)) {
                return true;
            }
        }
        return false;
    }

    bool member(const std::vector<ArgId>& s, ArgId a) const {
        return std::binary_search(s.begin(), s.end(), a);
    }

    bool admissible(const std::vector<ArgId>& s) const {
        if (!conflict_free(s)) {
            return false;
        }
        for (ArgId a : s) {
            if (!defended(s, a)) {
                return false;
            }
        }
        return true;
    }

    bool stable(const std::vector<ArgId>& s) const {
        if (!conflict_free(s)) {
            return false;
        }
        for (ArgId a = 1; a <= f.size(); ++a) {
            if (!member(s, a) && !defeated(s, a)) {
                return false;
            }
        }
        return true;
    }

    bool complete(const std::vector<ArgId>& s) const {
        if (!admissible(s)) {
            return false;
        }
        for (ArgId a = 1; a <= f.size(); ++a) {
            if (!member(s, a) && defended(s, a)) {
                return false;
            }
        }
        return true;
    }

    // No odd-length walk (any length >= 1) between any two members,
    // including a member and itself.
    bool odd_conflict_free(const std::vector<ArgId>& s) const {
        for (ArgId a : s) {
            for (ArgId b : s) {
                if (reach.odd_walk(a, b)) {
                    return false;
                }
            }
        }
        return true;
    }

    bool indirect_conflict_with(const std::vector<ArgId>& s, ArgId a) const {
        for (ArgId member : s) {
            if (reach.odd_walk(a, member) || reach.odd_walk(member, a)) {
                return true;
            }
        }
        return false;
    }

    bool p_admissible(const std::vector<ArgId>& s) const {
        if (!odd_conflict_free(s)) {
            return false;
        }
        for (ArgId a : s) {
            if (!defended(s, a)) {
                return false;
            }
        }
        return true;
    }

    bool stable_p(const std::vector<ArgId>& s) const {
        if (!odd_conflict_free(s)) {
            return false;
        }
        for (ArgId a = 1; a <= f.size(); ++a) {
            if (!member(s, a) && !defeated(s, a)) {
                return false;
            }
        }
        return true;
    }

    bool complete_p(const std::vector<ArgId>& s) const {
        if (!p_admissible(s)) {
            return false;
        }
        for (ArgId a = 1; a <= f.size(); ++a) {
            if (!member(s, a) && defended(s, a) && !indirect_conflict_with(s, a)) {
                return false;
            }
        }
        return true;
    }
};

std::vector<std::vector<ArgId>> keep_maximal(const std::vector<std::vector<ArgId>>& sets) {
    std::vector<std::vector<ArgId>> out;
    for (const auto& s : sets) {
        bool dominated = false;
        for (const auto& t : sets) {
            if (&t != &s && s.size() < t.size() &&
                std::includes(t.begin(), t.end(), s.begin(), s.end())) {
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

ExtensionSet oracle_extensions(const Framework& f, SemanticsKind kind, int limit) {
    const int n = f.size();
    if (n > limit) {
        throw EnumerationLimitError("framework has " + std::to_string(n) +
                                    " arguments, over the enumeration limit " +
                                    std::to_string(limit));
    }
    const OraclePredicates pred(f);

    auto collect = [&](auto&& keep) {
        std::vector<std::vector<ArgId>> sets;
        for_each_subset_canonical(n, [&](const std::vector<ArgId>& s) {
            if (keep(s)) {
                sets.push_back(s);
            }
        });
        return sets;
    };

    ExtensionSet result;
    result.kind = kind;
    result.mode = DecisionMode::corrected;
    switch (kind) {
        case SemanticsKind::conflict_free:
            result.extensions = collect([&](const auto& s) { return pred.conflict_free(s); });
            break;
        case SemanticsKind::admissible:
            result.extensions = collect([&](const auto& s) { return pred.admissible(s); });
            break;
        case SemanticsKind::stable:
            result.extensions = collect([&](const auto& s) { return pred.stable(s); });
            break;
        case SemanticsKind::complete:
            result.extensions = collect([&](const auto& s) { return pred.complete(s); });
            break;
        case SemanticsKind::preferred:
            result.extensions =
                keep_maximal(collect([&](const auto& s) { return pred.admissible(s); }));
            break;
        case SemanticsKind::grounded: {
            const std::vector<ArgId> fixpoint = oracle_grounded(f);
            const auto complete =
                collect([&](const auto& s) { return pred.complete(s); });
            // The grounded extension is the unique subset-minimal complete
            // extension; the fixed point must coincide with it.
            const std::vector<std::vector<ArgId>> minimal = [&] {
                std::vector<std::vector<ArgId>> mins;
                for (const auto& s : complete) {
                    bool has_proper_subset = false;
                    for (const auto& t : complete) {
                        if (&t != &s && t.size() < s.size() &&
                            std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                            has_proper_subset = true;
                            break;
                        }
                    }
                    if (!has_proper_subset) {
                        mins.push_back(s);
                    }
                }
                return mins;
            }();
            if (minimal.size() != 1 || minimal.front() != fixpoint) {
                throw Error("grounded fixed point disagrees with the minimal complete extension");
            }
            result.extensions = {fixpoint};
            break;
        }
        case SemanticsKind::p_admissible:
            result.extensions = collect([&](const auto& s) { return pred.p_admissible(s); });
            break;
        case SemanticsKind::stable_p:
            result.extensions = collect([&](const auto& s) { return pred.stable_p(s); });
            break;
        case SemanticsKind::preferred_p:
            result.extensions =
                keep_maximal(collect([&](const auto& s) { return pred.p_admissible(s); }));
            break;
        case SemanticsKind::complete_p:
            result.extensions = collect([&](const auto& s) { return pred.complete_p(s); });
            break;
    }
    return result;
}

}  // namespace argmat
