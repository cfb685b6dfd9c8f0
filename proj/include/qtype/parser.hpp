#pragma once

#include <optional>
#include <vector>

#include "qtype/ast.hpp"
#include "qtype/diagnostic.hpp"
#include "qtype/token.hpp"

namespace qtype {

/// Annotation with its raw declaration text and the source position of the
/// last token before the comment; the target node is resolved during
/// post-processing.
struct PendingAnnotation {
    AnnotationKind kind;
    std::string rawDecl;
    SourceSpan span;
    bool hasAnchor = false;
    int anchorLine = 0;
    int anchorCol = 0;
};

struct ParseResult {
    std::optional<AstNode> root; // Seq node, numbered last; absent on error
    std::vector<PendingAnnotation> annotations;
    std::vector<Diagnostic> errors;
    bool ok() const { return root.has_value() && errors.empty(); }
};

/// Parses the token stream into an AST with dense pre-order node ids
/// (the root Seq takes the id after all expression nodes).
ParseResult parse(const std::vector<Token>& tokens, const std::string& file = "<input>");

} // namespace qtype
