#pragma once

#include <iosfwd>
#include <variant>

#include "ccode/constructions.hpp"

namespace ccode {

/// One parsed artifact file: a format header followed by code, convcode and
/// claim blocks. A convcode block carries its split provenance inline (the
/// source code block follows it and is absorbed into ConvCode::split).
struct CodeFileBlock {
    std::variant<BlockCode, ConvCode, ParamClaim> value;
    std::optional<std::vector<int>> split_hint;  // code blocks only
};

struct CodeFile {
    std::vector<CodeFileBlock> blocks;
};

CodeFile parse_code_file(std::istream& in);
void render_code_file(const CodeFile& f, std::ostream& out);

void render_code(const BlockCode& c, std::ostream& out,
                 const std::optional<std::vector<int>>& split_hint = std::nullopt);
void render_convcode(const ConvCode& v, std::ostream& out);
void render_claim(const ParamClaim& c, std::ostream& out);
std::string claim_to_line(const ParamClaim& c);
ParamClaim claim_from_line(const std::string& line);

/// Round-trip helpers used by tests and the CLI.
std::string render_to_string(const CodeFile& f);
CodeFile parse_from_string(const std::string& text);

}  // namespace ccode
