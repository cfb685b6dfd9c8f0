#include "qtype/postprocess.hpp"

#include <algorithm>

#include "qtype/decl_parser.hpp"

namespace qtype {

namespace {

const std::vector<std::string> kImplicits = {"x", "y", "z"};

/// Fills implicit parameter lists bottom-up: a lambda written without
/// `[...]` binds exactly the implicit names occurring free in its body.
class ImplicitFiller {
public:
    explicit ImplicitFiller(std::vector<Diagnostic>& errs) : errs_(errs) {}

    // returns the set of implicit names occurring free in the subtree
    std::set<std::string> fill(AstNode& n) {
        std::set<std::string> free;
        if (n.is<Var>()) {
            const std::string& name = n.as<Var>().name;
            if (std::find(kImplicits.begin(), kImplicits.end(), name) != kImplicits.end())
                free.insert(name);
            return free;
        }
        if (n.is<Lambda>()) {
            auto& lam = n.as<Lambda>();
            std::set<std::string> bodyFree;
            for (auto& b : lam.body) {
                auto f = fill(b);
                bodyFree.insert(f.begin(), f.end());
            }
            if (!lam.explicitParams) {
                bool hasX = bodyFree.count("x"), hasY = bodyFree.count("y"), hasZ = bodyFree.count("z");
                if ((hasZ && !hasY) || (hasY && !hasX)) {
                    errs_.push_back(Diagnostic{Severity::Error, DiagKind::ScopeError, n.span, n.id,
                                               "implicit parameters must be used in order: "
                                               "y requires x, z requires y",
                                               {}});
                }
                for (const auto& name : kImplicits)
                    if (bodyFree.count(name)) lam.params.push_back(name);
            }
            for (const auto& p : lam.params) bodyFree.erase(p);
            return bodyFree;
        }
        forEachChildMut(n, [&](AstNode& c) {
            auto f = fill(c);
            free.insert(f.begin(), f.end());
        });
        return free;
    }

private:
    std::vector<Diagnostic>& errs_;

    template <typename F> static void forEachChildMut(AstNode& n, F f) {
        std::visit(
            [&](auto& form) {
                using T = std::decay_t<decltype(form)>;
                if constexpr (std::is_same_v<T, Lambda>) {
                    for (auto& b : form.body) f(b);
                } else if constexpr (std::is_same_v<T, App>) {
                    f(*form.fn);
                    f(*form.args);
                } else if constexpr (std::is_same_v<T, Assign>) {
                    f(*form.target);
                    f(*form.value);
                } else if constexpr (std::is_same_v<T, IndexAssign>) {
                    f(*form.base);
                    f(*form.index);
                    f(*form.value);
                } else if constexpr (std::is_same_v<T, Cond>) {
                    f(*form.test);
                    f(*form.thenBranch);
                    f(*form.elseBranch);
                } else if constexpr (std::is_same_v<T, DoLoop>) {
                    f(*form.count);
                    for (auto& b : form.body) f(b);
                } else if constexpr (std::is_same_v<T, ListLit> || std::is_same_v<T, VectorLit> ||
                                     std::is_same_v<T, Seq>) {
                    for (auto& i : form.items) f(i);
                } else if constexpr (std::is_same_v<T, DictLit>) {
                    f(*form.domain);
                    f(*form.range);
                }
            },
            n.form);
    }
};

struct Scope {
    std::map<std::string, int> bindings; // name -> key
};

class Resolver {
public:
    Resolver(Unit& unit) : unit_(unit) {}

    void run(AstNode& root) {
        collectAssignedNames(root, /*topLevel=*/true);
        resolve(root);
    }

private:
    Unit& unit_;
    std::vector<Scope> scopes_; // innermost last; globals resolved by name
    std::map<std::string, int> globalKeys_;
    int nextKey_ = 1;

    void collectAssignedNames(const AstNode& n, bool topLevel) {
        if (n.is<Assign>() && n.as<Assign>().target->is<Var>()) {
            if (topLevel) unit_.assignedGlobals.insert(n.as<Assign>().target->as<Var>().name);
        }
        if (n.is<Lambda>()) topLevel = false;
        for (const AstNode* c : astChildren(n)) collectAssignedNames(*c, topLevel);
    }

    // names assigned directly in this lambda body (not inside nested lambdas)
    void localAssigns(const AstNode& n, std::set<std::string>& out) {
        if (n.is<Lambda>()) return;
        if (n.is<Assign>() && n.as<Assign>().target->is<Var>())
            out.insert(n.as<Assign>().target->as<Var>().name);
        for (const AstNode* c : astChildren(n)) localAssigns(*c, out);
    }

    void resolve(AstNode& n) {
        if (n.is<Var>()) {
            const std::string& name = n.as<Var>().name;
            for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
                auto f = it->bindings.find(name);
                if (f != it->bindings.end()) {
                    VarKind kind = f->second < 0 ? VarKind::Param : VarKind::Local;
                    unit_.vars[n.id] = VarInfo{name, std::abs(f->second), kind};
                    return;
                }
            }
            auto [g, fresh] = globalKeys_.emplace(name, 0);
            if (fresh) g->second = nextKey_++;
            unit_.vars[n.id] = VarInfo{name, g->second, VarKind::Global};
            return;
        }
        if (n.is<Lambda>()) {
            auto& lam = n.as<Lambda>();
            Scope scope;
            for (const auto& p : lam.params) scope.bindings[p] = -(nextKey_++); // negative marks params
            std::set<std::string> assigned;
            for (const auto& b : lam.body) localAssigns(b, assigned);
            for (const auto& name : assigned)
                if (!scope.bindings.count(name)) scope.bindings[name] = nextKey_++;
            scopes_.push_back(std::move(scope));
            for (auto& b : lam.body) resolve(b);
            scopes_.pop_back();
            return;
        }
        for (AstNode* c : childrenMut(n)) resolve(*c);
    }

    static std::vector<AstNode*> childrenMut(AstNode& n) {
        std::vector<AstNode*> out;
        for (const AstNode* c : astChildren(n)) out.push_back(const_cast<AstNode*>(c));
        return out;
    }
};

/// smallest expression whose span ends exactly at the annotation anchor
const AstNode* findTarget(const AstNode& root, int line, int col) {
    const AstNode* best = nullptr;
    visitAst(root, [&](const AstNode& n) {
        if (n.span.endLine != line || n.span.endCol != col) return;
        if (!best) {
            best = &n;
            return;
        }
        // prefer the latest start; deeper of equal spans wins (visited later)
        if (n.span.startLine > best->span.startLine ||
            (n.span.startLine == best->span.startLine && n.span.startCol >= best->span.startCol))
            best = &n;
    });
    return best;
}

} // namespace

Unit postprocess(AstNode root, std::vector<PendingAnnotation> pending, TypeVarAllocator& typeVars) {
    Unit unit{std::move(root), {}, {}, {}, {}};

    ImplicitFiller filler(unit.errors);
    filler.fill(unit.root);

    Resolver resolver(unit);
    resolver.run(unit.root);

    for (auto& p : pending) {
        Annotation a;
        a.kind = p.kind;
        a.rawDecl = p.rawDecl;
        a.span = p.span;
        if (!p.hasAnchor) {
            unit.errors.push_back(Diagnostic{Severity::Error, DiagKind::ScopeError, p.span, 0,
                                             "type declaration does not follow an expression", {}});
            continue;
        }
        const AstNode* target = findTarget(unit.root, p.anchorLine, p.anchorCol);
        if (!target) {
            unit.errors.push_back(Diagnostic{Severity::Error, DiagKind::ScopeError, p.span, 0,
                                             "type declaration does not follow an expression", {}});
            continue;
        }
        a.target = target->id;
        DeclParseResult decl = parseTypeDecl(p.rawDecl, typeVars);
        if (!decl.ok()) {
            SourceSpan at = p.span;
            unit.errors.push_back(Diagnostic{
                Severity::Error, DiagKind::ParseError, at, target->id,
                "bad type declaration (at offset " + std::to_string(decl.error->pos) + "): " + decl.error->message,
                {}});
            continue;
        }
        a.decl = std::move(decl.domain);
        unit.annotations.push_back(std::move(a));
    }
    return unit;
}

} // namespace qtype
