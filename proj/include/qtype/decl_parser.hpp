#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "qtype/type_expr.hpp"

namespace qtype {

struct DeclParseError {
    int pos = 0; // 1-based character position inside the declaration text
    std::string message;
};

struct DeclParseResult {
    Domain domain;
    std::optional<DeclParseError> error;
    bool ok() const { return !error.has_value(); }
};

/// Parses one type declaration: `Decl := Alt ("|" Alt)*`, `Fn := Base ("->" Fn)?`
/// (right-associative), `Base := atomic | any | Var | list(Decl) | hlist |
/// tuple(Alt,...) | stuple(name,...) | dict(Alt,Alt) | (Decl)`.
/// Uppercase-initial names are type variables, scoped to the declaration;
/// `any` is a fresh unconstrained variable at each occurrence. Alternatives
/// nested inside parentheses distribute into the top-level list.
DeclParseResult parseTypeDecl(std::string_view text, TypeVarAllocator& vars);

} // namespace qtype
