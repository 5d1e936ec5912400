#include "argmat/framework.hpp"

#include <algorithm>
#include <cctype>

#include "argmat/errors.hpp"

namespace argmat {

namespace {

// Names travel through the APX/TGF/DOT text formats, so they must be single
// tokens free of the formats' delimiter characters.
void validate_name(const std::string& name) {
    if (name.empty()) {
        throw InvalidNameError("argument name must be non-empty");
    }
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
            c == '%' || c == '#' || c == '"') {
            throw InvalidNameError("argument name contains a delimiter character: " + name);
        }
    }
}

}  // namespace

Framework Framework::build(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& attacks) {
    Framework f;
    f.names_ = std::move(names);
    f.index_.reserve(f.names_.size());
    for (std::size_t k = 0; k < f.names_.size(); ++k) {
        validate_name(f.names_[k]);
        auto [it, inserted] = f.index_.emplace(f.names_[k], static_cast<ArgId>(k + 1));
        if (!inserted) {
            throw DuplicateNameError(f.names_[k]);
        }
    }
    const int n = f.size();
    f.out_.assign(n, {});
    f.in_.assign(n, {});
    for (const auto& [from, to] : attacks) {
        const ArgId a = f.require_index(from);
        const ArgId b = f.require_index(to);
        f.out_[a - 1].push_back(b);
        f.in_[b - 1].push_back(a);
    }
    f.attack_count_ = 0;
    for (auto& row : f.out_) {
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        f.attack_count_ += row.size();
    }
    for (auto& col : f.in_) {
        std::sort(col.begin(), col.end());
        col.erase(std::unique(col.begin(), col.end()), col.end());
    }
    return f;
}

void Framework::check(ArgId i) const {
    if (!valid(i)) {
        throw IndexOutOfRangeError("argument index " + std::to_string(i) +
                                   " out of range 1.." + std::to_string(size()));
    }
}

const std::string& Framework::name(ArgId i) const {
    check(i);
    return names_[i - 1];
}

std::optional<ArgId> Framework::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

ArgId Framework::require_index(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) {
        throw UnknownArgumentError(std::string(name));
    }
    return *idx;
}

bool Framework::attacks(ArgId attacker, ArgId target) const {
    check(attacker);
    check(target);
    const auto& row = out_[attacker - 1];
    return std::binary_search(row.begin(), row.end(), target);
}

const std::vector<ArgId>& Framework::targets(ArgId attacker) const {
    check(attacker);
    return out_[attacker - 1];
}

const std::vector<ArgId>& Framework::attackers(ArgId target) const {
    check(target);
    return in_[target - 1];
}

std::vector<std::pair<ArgId, ArgId>> Framework::attack_pairs() const {
    std::vector<std::pair<ArgId, ArgId>> pairs;
    pairs.reserve(attack_count_);
    for (ArgId i = 1; i <= size(); ++i) {
        for (ArgId j : out_[i - 1]) {
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

}  // namespace argmat
