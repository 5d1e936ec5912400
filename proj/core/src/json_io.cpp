#include "argmat/json_io.hpp"

#include <json.hpp>

#include "argmat/io.hpp"

namespace argmat {

namespace {

using nlohmann::json;

json names_of(const Framework& f, const std::vector<ArgId>& subset) {
    json names = json::array();
    for (ArgId i : subset) {
        names.push_back(f.name(i));
    }
    return names;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const Framework& f, const ExtensionSet& set) {
    json j;
    j["semantics"] = std::string(to_string(set.kind));
    j["mode"] = std::string(to_string(set.mode));
    j["extensions"] = json::array();
    j["extension_indices"] = json::array();
    for (const auto& e : set.extensions) {
        j["extensions"].push_back(names_of(f, e));
        j["extension_indices"].push_back(e);
    }
    return dump(j);
}

std::string to_json(const Framework& f, const ControversyReport& report) {
    json j;
    j["mode"] = std::string(to_string(report.mode));
    j["pairs"] = json::array();
    j["pair_names"] = json::array();
    for (const auto& [a, b] : report.pairs) {
        j["pairs"].push_back(json::array({a, b}));
        j["pair_names"].push_back(json::array({f.name(a), f.name(b)}));
    }
    return dump(j);
}

std::string to_json(const Framework& f, const DiffReport& report) {
    json j;
    j["framework"] = report.framework_apx;
    j["semantics"] = std::string(to_string(report.kind));
    j["witnesses"] = json::array();
    for (const auto& w : report.witnesses) {
        json item;
        item["set"] = names_of(f, w.subset);
        item["set_indices"] = w.subset;
        item["oracle"] = w.oracle;
        item["corrected"] = w.corrected;
        item["paper"] = w.paper;
        j["witnesses"].push_back(item);
    }
    return dump(j);
}

std::string to_json(const Framework& f, const ReachDiffReport& report) {
    json j;
    j["framework"] = report.framework_apx;
    j["witnesses"] = json::array();
    for (const auto& w : report.witnesses) {
        json item;
        item["relation"] = std::string(to_string(w.relation));
        item["pair"] = json::array({w.attacker, w.target});
        item["pair_names"] = json::array({f.name(w.attacker), f.name(w.target)});
        item["oracle"] = w.oracle;
        item["corrected"] = w.corrected;
        item["paper"] = w.paper;
        j["witnesses"].push_back(item);
    }
    return dump(j);
}

std::string matrix_to_json(const BoolMatrix& m) {
    json j;
    j["order"] = m.size();
    j["rows"] = json::array();
    std::string row;
    for (ArgId i = 1; i <= m.size(); ++i) {
        row.clear();
        for (ArgId k = 1; k <= m.size(); ++k) {
            row.push_back(m.test(i, k) ? '1' : '0');
        }
        j["rows"].push_back(row);
    }
    return dump(j);
}

std::string block_to_json(const Block& b) {
    json j;
    j["rows"] = b.spec().rows;
    j["cols"] = b.spec().cols;
    j["entries"] = json::array();
    std::string row;
    for (int r = 0; r < b.row_count(); ++r) {
        row.clear();
        for (int c = 0; c < b.col_count(); ++c) {
            row.push_back(b.entry(r, c) ? '1' : '0');
        }
        j["entries"].push_back(row);
    }
    return dump(j);
}

std::string framework_summary_to_json(const Framework& f) {
    json j;
    j["arguments"] = f.size();
    j["attacks"] = f.attack_count();
    j["names"] = f.names();
    return dump(j);
}

std::string verdict_to_json(const Framework& f, SemanticsKind kind, DecisionMode mode,
                            const std::vector<ArgId>& subset, bool verdict) {
    json j;
    j["semantics"] = std::string(to_string(kind));
    j["mode"] = std::string(to_string(mode));
    j["set"] = names_of(f, subset);
    j["set_indices"] = subset;
    j["verdict"] = verdict;
    return dump(j);
}

}  // namespace argmat
