#include "argmat/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "argmat/errors.hpp"

namespace argmat {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

// Splits into lines; keeps empty lines so numbering matches the input.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) {
                lines.push_back(text.substr(start));
            }
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

// Parses `head(<args>).` and returns the comma-separated args, stripped.
// Returns false if the line does not have the functor/period shape at all.
bool parse_fact(std::string_view line, std::string_view head, std::vector<std::string>& out) {
    if (line.substr(0, head.size()) != head) {
        return false;
    }
    std::string_view rest = strip(line.substr(head.size()));
    if (rest.size() < 3 || rest.front() != '(' || rest.back() != '.') {
        return false;
    }
    rest.remove_prefix(1);
    rest.remove_suffix(1);
    rest = strip(rest);
    if (rest.empty() || rest.back() != ')') {
        return false;
    }
    rest.remove_suffix(1);
    out.clear();
    std::size_t start = 0;
    while (true) {
        std::size_t comma = rest.find(',', start);
        std::string_view tok =
            comma == std::string_view::npos ? rest.substr(start) : rest.substr(start, comma - start);
        out.emplace_back(strip(tok));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return true;
}

std::vector<std::string> split_tokens(std::string_view line) {
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            toks.emplace_back(line.substr(start, i - start));
        }
    }
    return toks;
}

}  // namespace

Framework parse_apx(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> attacks;
    std::vector<std::string> args;
    int lineno = 0;
    for (std::string_view raw : split_lines(text)) {
        ++lineno;
        std::string_view line = strip(raw);
        if (line.empty() || line.front() == '%') {
            continue;
        }
        if (parse_fact(line, "arg", args)) {
            if (args.size() != 1 || args[0].empty()) {
                throw SyntaxError("arg fact must declare exactly one name", lineno);
            }
            names.push_back(args[0]);
        } else if (parse_fact(line, "att", args)) {
            if (args.size() != 2 || args[0].empty() || args[1].empty()) {
                throw SyntaxError("att fact must name exactly two arguments", lineno);
            }
            attacks.emplace_back(args[0], args[1]);
        } else {
            throw SyntaxError("expected `arg(<name>).` or `att(<from>,<to>).`", lineno);
        }
    }
    return Framework::build(std::move(names), attacks);
}

Framework parse_tgf(std::string_view text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> attacks;
    bool seen_separator = false;
    int lineno = 0;
    for (std::string_view raw : split_lines(text)) {
        ++lineno;
        std::string_view line = strip(raw);
        if (line.empty()) {
            continue;
        }
        if (line == "#") {
            if (seen_separator) {
                throw SyntaxError("second `#` separator", lineno);
            }
            seen_separator = true;
            continue;
        }
        auto toks = split_tokens(line);
        if (!seen_separator) {
            if (toks.size() != 1) {
                throw SyntaxError("node line must be a single name", lineno);
            }
            names.push_back(toks[0]);
        } else {
            if (toks.size() != 2) {
                throw SyntaxError("edge line must be `<from> <to>`", lineno);
            }
            attacks.emplace_back(toks[0], toks[1]);
        }
    }
    // An empty file is an empty framework; any node content requires the
    // separator so that edge lines cannot be mistaken for nodes.
    if (!seen_separator && !names.empty()) {
        throw SyntaxError("missing `#` separator between nodes and edges", lineno);
    }
    return Framework::build(std::move(names), attacks);
}

std::string to_apx(const Framework& f) {
    std::ostringstream out;
    for (const auto& name : f.names()) {
        out << "arg(" << name << ").\n";
    }
    for (const auto& [a, b] : f.attack_pairs()) {
        out << "att(" << f.name(a) << "," << f.name(b) << ").\n";
    }
    return out.str();
}

std::string to_tgf(const Framework& f) {
    std::ostringstream out;
    for (const auto& name : f.names()) {
        out << name << "\n";
    }
    out << "#\n";
    for (const auto& [a, b] : f.attack_pairs()) {
        out << f.name(a) << " " << f.name(b) << "\n";
    }
    return out.str();
}

std::string to_dot(const Framework& f) {
    std::ostringstream out;
    out << "digraph af {\n";
    for (const auto& name : f.names()) {
        out << "  \"" << name << "\";\n";
    }
    for (const auto& [a, b] : f.attack_pairs()) {
        out << "  \"" << f.name(a) << "\" -> \"" << f.name(b) << "\";\n";
    }
    out << "}\n";
    return out.str();
}

Framework read_framework_file(const std::string& path, InputFormat format) {
    if (format == InputFormat::auto_detect) {
        if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".apx") == 0) {
            format = InputFormat::apx;
        } else if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".tgf") == 0) {
            format = InputFormat::tgf;
        } else {
            throw Error("cannot infer input format from extension (use .apx or .tgf, "
                        "or pass the format explicitly): " + path);
        }
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("io: cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("io: failed reading " + path);
    }
    const std::string text = buf.str();
    return format == InputFormat::apx ? parse_apx(text) : parse_tgf(text);
}

}  // namespace argmat
