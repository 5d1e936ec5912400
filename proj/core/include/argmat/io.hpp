#ifndef ARGMAT_IO_HPP_
#define ARGMAT_IO_HPP_

#include <string>
#include <string_view>

#include "argmat/framework.hpp"

namespace argmat {

/// ASPARTIX-style format: one fact per line, `arg(<name>).` or
/// `att(<from>,<to>).`; blank lines and `%`-prefixed comment lines are
/// ignored; whitespace around tokens is ignored. Every att endpoint must be
/// declared by an arg line. Throws SyntaxError (with line number),
/// UnknownArgumentError, DuplicateNameError.
Framework parse_apx(std::string_view text);

/// Trivial Graph Format: one node name per line, a literal `#` separator
/// line, then `<from> <to>` edge lines. Throws SyntaxError,
/// UnknownArgumentError, DuplicateNameError.
Framework parse_tgf(std::string_view text);

/// Canonical APX text: arg lines in index order, att lines in lexicographic
/// (attacker, target) index order. parse_apx(to_apx(f)) == f.
std::string to_apx(const Framework& f);

/// Canonical TGF text. parse_tgf(to_tgf(f)) == f.
std::string to_tgf(const Framework& f);

/// Deterministic DOT digraph: nodes in index order, edges in lexicographic
/// (attacker, target) index order, node labels are argument names.
std::string to_dot(const Framework& f);

enum class InputFormat { auto_detect, apx, tgf };

/// Reads a framework from a file, picking the parser by `format`
/// (auto_detect resolves .apx / .tgf by extension and rejects anything
/// else). Throws Error subtypes for parse failures and std::ios_base::failure
/// style errors are reported as argmat::Error with an "io:" prefix.
Framework read_framework_file(const std::string& path, InputFormat format);

}  // namespace argmat

#endif  // ARGMAT_IO_HPP_
