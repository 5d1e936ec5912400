#ifndef ARGMAT_JSON_IO_HPP_
#define ARGMAT_JSON_IO_HPP_

#include <string>
#include <vector>

#include "argmat/blocks.hpp"
#include "argmat/bool_matrix.hpp"
#include "argmat/diff.hpp"
#include "argmat/framework.hpp"
#include "argmat/reachability.hpp"
#include "argmat/semantics.hpp"

namespace argmat {

/// JSON renderings of the report types. All output is deterministic (object
/// keys serialize in sorted order) and newline-terminated.

/// { "semantics": ..., "mode": ..., "extensions": [["a","e"], ...],
///   "extension_indices": [[1,5], ...] }
std::string to_json(const Framework& f, const ExtensionSet& set);

/// { "mode": ..., "pairs": [[i,j], ...], "pair_names": [["e","a"], ...] }
std::string to_json(const Framework& f, const ControversyReport& report);

/// { "framework": "<canonical apx>", "semantics": ...,
///   "witnesses": [ { "set": [...], "oracle": b, "corrected": b, "paper": b } ] }
std::string to_json(const Framework& f, const DiffReport& report);

/// { "framework": ..., "witnesses": [ { "relation": ..., "pair": [i,j],
///   "pair_names": [...], "oracle": b, "corrected": b, "paper": b } ] }
std::string to_json(const Framework& f, const ReachDiffReport& report);

/// { "order": n, "rows": ["010", ...] }
std::string matrix_to_json(const BoolMatrix& m);

/// { "rows": [...], "cols": [...], "entries": ["01", ...] }
std::string block_to_json(const Block& b);

/// { "arguments": n, "attacks": m, "names": [...] }
std::string framework_summary_to_json(const Framework& f);

/// Verdict of deciding one subset:
/// { "semantics": ..., "mode": ..., "set": [names], "set_indices": [...],
///   "verdict": b }
std::string verdict_to_json(const Framework& f, SemanticsKind kind, DecisionMode mode,
                            const std::vector<ArgId>& subset, bool verdict);

}  // namespace argmat

#endif  // ARGMAT_JSON_IO_HPP_
