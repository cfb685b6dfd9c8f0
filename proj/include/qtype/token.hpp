#pragma once

#include <string>
#include <vector>

#include "qtype/source.hpp"

namespace qtype {

enum class TokenKind {
    IntLit,
    LongLit,
    FloatLit,
    BoolLit,
    SymbolLit,
    CharLit,   // single char; longer quoted text becomes StringLit
    StringLit,
    Name,
    Operator,
    Punct,
    AnnotImperative,
    AnnotInterrogative,
    Separator, // ';' or newline
};

struct Token {
    TokenKind kind;
    std::string text; // exact source slice; annotation tokens keep the raw declaration in `payload`
    std::string payload;
    SourceSpan span;
};

const char* tokenKindName(TokenKind k);

} // namespace qtype
