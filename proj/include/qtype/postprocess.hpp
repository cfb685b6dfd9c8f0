#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qtype/ast.hpp"
#include "qtype/diagnostic.hpp"
#include "qtype/parser.hpp"

namespace qtype {

enum class VarKind { Param, Local, Global };

struct VarInfo {
    std::string name;
    int key = 0; // occurrences of the same binding share one key
    VarKind kind = VarKind::Global;
};

/// Post-processed program: implicit parameters filled in, every variable
/// occurrence resolved to its binding, annotations attached to the smallest
/// expression ending right before their comment.
struct Unit {
    AstNode root;
    std::vector<Annotation> annotations;
    std::map<NodeId, VarInfo> vars;
    std::set<std::string> assignedGlobals;
    std::vector<Diagnostic> errors;
    bool ok() const { return errors.empty(); }
};

Unit postprocess(AstNode root, std::vector<PendingAnnotation> pending, TypeVarAllocator& typeVars);

} // namespace qtype
