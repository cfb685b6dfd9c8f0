#pragma once

#include <string>
#include <vector>

#include "qtype/source.hpp"

namespace qtype {

enum class Severity { Error, Warning, Info };

enum class DiagKind {
    LexError,
    ParseError,
    ScopeError,
    InferredConflict,
    DeclarationDisjoint,
    DeclarationOverlap,
    LabelingInconsistent,
    UnknownBuiltin,
    Internal,
};

const char* severityName(Severity s);
const char* diagKindName(DiagKind k);

struct Diagnostic {
    Severity severity;
    DiagKind kind;
    SourceSpan span;
    int nodeId = 0; // 0 when not tied to an expression
    std::string message;
    std::vector<std::string> justification;
};

/// Sort key: (file, start position, kind); keeps output byte-stable.
bool diagnosticLess(const Diagnostic& a, const Diagnostic& b);

} // namespace qtype
