#include "qtype/type_expr.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace qtype {

namespace {
constexpr std::array<const char*, kAtomicCount> kAtomicNames = {
    "boolean", "byte", "short", "int", "long", "real", "float", "char", "symbol",
    "date", "datetime", "minute", "second", "time", "timespan", "timestamp",
};
}

const char* atomicName(AtomicType t) { return kAtomicNames[static_cast<size_t>(t)]; }

std::optional<AtomicType> atomicFromName(const std::string& name) {
    for (size_t i = 0; i < kAtomicNames.size(); i++)
        if (name == kAtomicNames[i]) return static_cast<AtomicType>(i);
    return std::nullopt;
}

int numericRank(AtomicType t) {
    int v = static_cast<int>(t);
    return v <= static_cast<int>(AtomicType::Float) ? v : -1;
}

bool isNumeric(AtomicType t) { return numericRank(t) >= 0; }

AtomicType promoteNumeric(AtomicType a, AtomicType b) {
    return numericRank(a) >= numericRank(b) ? a : b;
}

TypePtr tAtomic(AtomicType a) {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::Atomic;
    t->atom = a;
    return t;
}

TypePtr tVar(TypeVarId v) {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::Var;
    t->var = v;
    return t;
}

TypePtr tList(TypePtr elem) {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::List;
    t->args.push_back(std::move(elem));
    return t;
}

TypePtr tHList() {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::HList;
    return t;
}

TypePtr tTuple(std::vector<TypePtr> elems) {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::Tuple;
    t->args = std::move(elems);
    return t;
}

TypePtr tSTuple(std::vector<std::string> names) {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::STuple;
    t->names = std::move(names);
    return t;
}

TypePtr tDict(TypePtr dom, TypePtr rng) {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::Dict;
    t->args = {std::move(dom), std::move(rng)};
    return t;
}

TypePtr tFunc(TypePtr arg, TypePtr res) {
    auto t = std::make_shared<TypeExpr>();
    t->kind = TypeExpr::Kind::Func;
    t->args = {std::move(arg), std::move(res)};
    return t;
}

bool structuralEqual(const TypePtr& a, const TypePtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case TypeExpr::Kind::Atomic: return a->atom == b->atom;
    case TypeExpr::Kind::Var: return a->var == b->var;
    case TypeExpr::Kind::HList: return true;
    case TypeExpr::Kind::STuple: return a->names == b->names;
    default: break;
    }
    if (a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); i++)
        if (!structuralEqual(a->args[i], b->args[i])) return false;
    return true;
}

namespace {

bool alphaEqualRec(const TypePtr& a, const TypePtr& b,
                   std::map<TypeVarId, TypeVarId>& ab, std::map<TypeVarId, TypeVarId>& ba) {
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case TypeExpr::Kind::Atomic: return a->atom == b->atom;
    case TypeExpr::Kind::HList: return true;
    case TypeExpr::Kind::STuple: return a->names == b->names;
    case TypeExpr::Kind::Var: {
        auto fa = ab.find(a->var);
        auto fb = ba.find(b->var);
        if (fa == ab.end() && fb == ba.end()) {
            ab[a->var] = b->var;
            ba[b->var] = a->var;
            return true;
        }
        return fa != ab.end() && fb != ba.end() && fa->second == b->var && fb->second == a->var;
    }
    default: break;
    }
    if (a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); i++)
        if (!alphaEqualRec(a->args[i], b->args[i], ab, ba)) return false;
    return true;
}

} // namespace

bool alphaEqual(const TypePtr& a, const TypePtr& b) {
    std::map<TypeVarId, TypeVarId> ab, ba;
    return alphaEqualRec(a, b, ab, ba);
}

void collectVars(const TypePtr& t, std::vector<TypeVarId>& out) {
    if (t->kind == TypeExpr::Kind::Var) {
        out.push_back(t->var);
        return;
    }
    for (const auto& a : t->args) collectVars(a, out);
}

bool containsVar(const TypePtr& t, TypeVarId v) {
    if (t->kind == TypeExpr::Kind::Var) return t->var == v;
    for (const auto& a : t->args)
        if (containsVar(a, v)) return true;
    return false;
}

bool isGround(const TypePtr& t) {
    if (t->kind == TypeExpr::Kind::Var) return false;
    for (const auto& a : t->args)
        if (!isGround(a)) return false;
    return true;
}

bool Substitution::bind(TypeVarId v, TypePtr t) {
    TypePtr resolved = apply(t);
    if (resolved->kind == TypeExpr::Kind::Var && resolved->var == v) return true;
    if (containsVar(resolved, v)) return false;
    map_[v] = resolved;
    return true;
}

const TypePtr* Substitution::lookup(TypeVarId v) const {
    auto it = map_.find(v);
    return it == map_.end() ? nullptr : &it->second;
}

TypePtr Substitution::apply(const TypePtr& t) const {
    if (map_.empty()) return t;
    switch (t->kind) {
    case TypeExpr::Kind::Var: {
        auto it = map_.find(t->var);
        if (it == map_.end()) return t;
        return apply(it->second);
    }
    case TypeExpr::Kind::Atomic:
    case TypeExpr::Kind::HList:
    case TypeExpr::Kind::STuple:
        return t;
    default: {
        bool changed = false;
        std::vector<TypePtr> args;
        args.reserve(t->args.size());
        for (const auto& a : t->args) {
            args.push_back(apply(a));
            changed = changed || args.back().get() != a.get();
        }
        if (!changed) return t;
        auto copy = std::make_shared<TypeExpr>(*t);
        copy->args = std::move(args);
        return copy;
    }
    }
}

namespace {

void alphaKeyRec(const TypePtr& t, std::map<TypeVarId, int>& seen, std::string& out) {
    switch (t->kind) {
    case TypeExpr::Kind::Atomic:
        out += atomicName(t->atom);
        return;
    case TypeExpr::Kind::Var: {
        auto [it, inserted] = seen.emplace(t->var, static_cast<int>(seen.size()));
        out += '#';
        out += std::to_string(it->second);
        return;
    }
    case TypeExpr::Kind::HList:
        out += "hlist";
        return;
    case TypeExpr::Kind::List:
        out += "list(";
        alphaKeyRec(t->args[0], seen, out);
        out += ')';
        return;
    case TypeExpr::Kind::Tuple:
        out += "tuple(";
        for (size_t i = 0; i < t->args.size(); i++) {
            if (i) out += ',';
            alphaKeyRec(t->args[i], seen, out);
        }
        out += ')';
        return;
    case TypeExpr::Kind::STuple:
        out += "stuple(";
        for (size_t i = 0; i < t->names.size(); i++) {
            if (i) out += ',';
            out += t->names[i];
        }
        out += ')';
        return;
    case TypeExpr::Kind::Dict:
        out += "dict(";
        alphaKeyRec(t->args[0], seen, out);
        out += ',';
        alphaKeyRec(t->args[1], seen, out);
        out += ')';
        return;
    case TypeExpr::Kind::Func:
        out += "func(";
        alphaKeyRec(t->args[0], seen, out);
        out += ',';
        alphaKeyRec(t->args[1], seen, out);
        out += ')';
        return;
    }
}

} // namespace

std::string alphaKey(const TypePtr& t) {
    std::map<TypeVarId, int> seen;
    std::string out;
    alphaKeyRec(t, seen, out);
    return out;
}

Domain dedupAlpha(Domain d) {
    std::vector<TypePtr> kept;
    std::vector<std::string> keys;
    for (auto& e : d.exprs) {
        std::string k = alphaKey(e);
        if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
        keys.push_back(std::move(k));
        kept.push_back(std::move(e));
    }
    return Domain(std::move(kept));
}

bool alphaEqualDomains(const Domain& a, const Domain& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); i++)
        if (!alphaEqual(a.exprs[i], b.exprs[i])) return false;
    return true;
}

namespace {

std::string varName(TypeVarId v, std::map<TypeVarId, std::string>& names) {
    auto it = names.find(v);
    if (it != names.end()) return it->second;
    size_t n = names.size();
    std::string name;
    name += static_cast<char>('A' + n % 26);
    if (n >= 26) name += std::to_string(n / 26);
    names[v] = name;
    return name;
}

void showRec(const TypePtr& t, std::map<TypeVarId, std::string>& names, bool funcLeft, std::string& out) {
    switch (t->kind) {
    case TypeExpr::Kind::Atomic:
        out += atomicName(t->atom);
        return;
    case TypeExpr::Kind::Var:
        out += varName(t->var, names);
        return;
    case TypeExpr::Kind::HList:
        out += "hlist";
        return;
    case TypeExpr::Kind::List:
        out += "list(";
        showRec(t->args[0], names, false, out);
        out += ')';
        return;
    case TypeExpr::Kind::Tuple:
        out += "tuple(";
        for (size_t i = 0; i < t->args.size(); i++) {
            if (i) out += ", ";
            showRec(t->args[i], names, false, out);
        }
        out += ')';
        return;
    case TypeExpr::Kind::STuple:
        out += "stuple(";
        for (size_t i = 0; i < t->names.size(); i++) {
            if (i) out += ", ";
            out += t->names[i];
        }
        out += ')';
        return;
    case TypeExpr::Kind::Dict:
        out += "dict(";
        showRec(t->args[0], names, false, out);
        out += ", ";
        showRec(t->args[1], names, false, out);
        out += ')';
        return;
    case TypeExpr::Kind::Func: {
        bool paren = funcLeft;
        if (paren) out += '(';
        showRec(t->args[0], names, true, out);
        out += " -> ";
        showRec(t->args[1], names, false, out);
        if (paren) out += ')';
        return;
    }
    }
}

} // namespace

std::string show(const TypePtr& t, std::map<TypeVarId, std::string>& varNames) {
    std::string out;
    showRec(t, varNames, false, out);
    return out;
}

std::string show(const TypePtr& t) {
    std::map<TypeVarId, std::string> names;
    return show(t, names);
}

std::string show(const Domain& d, std::map<TypeVarId, std::string>& varNames) {
    std::string out = "[";
    for (size_t i = 0; i < d.exprs.size(); i++) {
        if (i) out += ", ";
        showRec(d.exprs[i], varNames, false, out);
    }
    out += ']';
    return out;
}

std::string show(const Domain& d) {
    std::map<TypeVarId, std::string> names;
    return show(d, names);
}

} // namespace qtype
