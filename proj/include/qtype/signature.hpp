#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtype/type_expr.hpp"

namespace qtype {

enum class ExtDir { None, Left, Right, Both };
const char* extDirName(ExtDir d);

struct SignatureEntry {
    std::string name;
    Domain decl;          // alternatives, as curried function types
    int arity = 1;        // arrows along the right spine, same for all alternatives
    ExtDir ext = ExtDir::None;
    std::string rel;      // relation rule backing this builtin
    int line = 0;
};

struct SignatureError {
    int line = 0;
    std::string message;
};

struct SigAlternative {
    std::vector<TypePtr> args;
    TypePtr result;
};

class SignatureTable {
public:
    const SignatureEntry* lookup(const std::string& name) const;
    bool insert(SignatureEntry entry, std::string& err);
    const std::map<std::string, SignatureEntry>& entries() const { return entries_; }

    /// Uncurried (args, result) views of every alternative.
    static std::vector<SigAlternative> alternatives(const SignatureEntry& e);
    /// Canonical function-type domain at call arity k: func(arg, res) for
    /// k == 1, func(tuple([a1..ak]), res) otherwise. Empty when the entry's
    /// declared arity differs.
    static std::optional<Domain> funcDomainForArity(const SignatureEntry& e, int k);

private:
    std::map<std::string, SignatureEntry> entries_;
};

struct SignatureLoadResult {
    SignatureTable table;
    std::optional<SignatureError> error;
    bool ok() const { return !error.has_value(); }
};

/// Line-oriented signature format: `name ":" Decl ["ext" [dir]] ["rel" name]`,
/// `#` comments. Variable ids are drawn from `vars` so a table can share a
/// namespace with the analysis that instantiates it.
SignatureLoadResult parseSignatureText(const std::string& text, TypeVarAllocator& vars);
SignatureLoadResult loadSignatures(const std::string& path, TypeVarAllocator& vars);

} // namespace qtype
