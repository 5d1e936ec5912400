#ifndef ARGMAT_FRAMEWORK_HPP_
#define ARGMAT_FRAMEWORK_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argmat {

/// 1-based argument index. Arguments of a framework with n arguments are
/// numbered 1..n in declaration order, so index k names the k-th declared
/// argument and doubles as the matrix row/column number.
using ArgId = int;

/// An argumentation framework: a finite set of named arguments plus a binary
/// attack relation over them. Immutable after construction; safe to share
/// read-only across threads.
class Framework {
public:
    Framework() = default;

    /// Builds a framework from distinct names and attacks given as name pairs.
    /// Indices are assigned by position in `names` (1-based). Duplicate attack
    /// pairs collapse; self-attacks are legal.
    ///
    /// Throws DuplicateNameError, UnknownArgumentError, InvalidNameError.
    static Framework build(std::vector<std::string> names,
                           const std::vector<std::pair<std::string, std::string>>& attacks);

    /// Number of arguments n (may be 0).
    int size() const { return static_cast<int>(names_.size()); }

    /// Number of distinct attack pairs |R|.
    std::size_t attack_count() const { return attack_count_; }

    bool valid(ArgId i) const { return i >= 1 && i <= size(); }

    /// Name of argument i. Throws IndexOutOfRangeError.
    const std::string& name(ArgId i) const;

    std::optional<ArgId> index_of(std::string_view name) const;

    /// Like index_of but throws UnknownArgumentError.
    ArgId require_index(std::string_view name) const;

    bool attacks(ArgId attacker, ArgId target) const;

    /// Arguments attacked by `attacker`, strictly increasing.
    const std::vector<ArgId>& targets(ArgId attacker) const;

    /// Arguments attacking `target`, strictly increasing.
    const std::vector<ArgId>& attackers(ArgId target) const;

    const std::vector<std::string>& names() const { return names_; }

    /// All attack pairs in lexicographic (attacker, target) order.
    std::vector<std::pair<ArgId, ArgId>> attack_pairs() const;

    friend bool operator==(const Framework& a, const Framework& b) {
        return a.names_ == b.names_ && a.out_ == b.out_;
    }

private:
    void check(ArgId i) const;

    std::vector<std::string> names_;
    std::unordered_map<std::string, ArgId> index_;
    std::vector<std::vector<ArgId>> out_;  // out_[i-1]: targets of i, sorted
    std::vector<std::vector<ArgId>> in_;   // in_[i-1]: attackers of i, sorted
    std::size_t attack_count_ = 0;
};

}  // namespace argmat

#endif  // ARGMAT_FRAMEWORK_HPP_
