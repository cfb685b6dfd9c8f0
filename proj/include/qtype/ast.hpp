#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "qtype/source.hpp"
#include "qtype/type_expr.hpp"

namespace qtype {

using NodeId = int;

struct AstNode;
using AstPtr = std::unique_ptr<AstNode>;

struct Literal {
    AtomicType type;
    std::string lexeme;
};

struct Var {
    std::string name;
};

struct Lambda {
    std::vector<std::string> params;
    bool explicitParams = false;
    std::vector<AstNode> body;
};

/// Function application; `args` is the argument-list container node
/// (a ListLit) so every bracket group has its own identifier.
struct App {
    AstPtr fn;
    AstPtr args;
};

struct Assign {
    AstPtr target;
    AstPtr value;
};

struct IndexAssign {
    AstPtr base;
    AstPtr index;
    AstPtr value;
};

struct Cond {
    AstPtr test;
    AstPtr thenBranch;
    AstPtr elseBranch;
};

struct DoLoop {
    AstPtr count;
    std::vector<AstNode> body;
};

struct ListLit {
    std::vector<AstNode> items;
};

struct VectorLit {
    AtomicType elem;
    std::vector<AstNode> items;
};

struct DictLit {
    AstPtr domain;
    AstPtr range;
};

struct Seq {
    std::vector<AstNode> items;
};

struct AstNode {
    NodeId id = 0;
    SourceSpan span;
    std::variant<Literal, Var, Lambda, App, Assign, IndexAssign, Cond, DoLoop, ListLit, VectorLit, DictLit, Seq> form;

    template <typename T> bool is() const { return std::holds_alternative<T>(form); }
    template <typename T> const T& as() const { return std::get<T>(form); }
    template <typename T> T& as() { return std::get<T>(form); }
};

enum class AnnotationKind { Imperative, Interrogative };

struct Annotation {
    AnnotationKind kind;
    NodeId target = 0;
    Domain decl;
    std::string rawDecl;
    SourceSpan span;
};

/// Pre-order walk over a node and its children.
void visitAst(const AstNode& node, const std::function<void(const AstNode&)>& fn);
/// Direct children, in syntactic order.
std::vector<const AstNode*> astChildren(const AstNode& node);
const AstNode* findNode(const AstNode& root, NodeId id);

} // namespace qtype
