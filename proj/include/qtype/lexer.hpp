#pragma once

#include <string_view>
#include <vector>

#include "qtype/diagnostic.hpp"
#include "qtype/token.hpp"

namespace qtype {

struct LexResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> errors;
};

/// Breaks UTF-8 source text into tokens. Plain `//` comments are skipped;
/// `//$:` and `//!:` comments become annotation tokens carrying the raw
/// declaration text. Literal tokens carry their kind so constant types are
/// known as soon as they are read.
LexResult tokenize(std::string_view source, std::string file = "<input>");

} // namespace qtype
