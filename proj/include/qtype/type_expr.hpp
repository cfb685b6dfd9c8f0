#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qtype {

enum class AtomicType : uint8_t {
    Boolean, Byte, Short, Int, Long, Real, Float, Char, Symbol,
    Date, Datetime, Minute, Second, Time, Timespan, Timestamp,
};
inline constexpr int kAtomicCount = 16;

const char* atomicName(AtomicType t);
std::optional<AtomicType> atomicFromName(const std::string& name);

/// boolean < byte < short < int < long < real < float; -1 for non-numeric.
int numericRank(AtomicType t);
bool isNumeric(AtomicType t);
AtomicType promoteNumeric(AtomicType a, AtomicType b);

using TypeVarId = uint32_t;

class TypeExpr;
using TypePtr = std::shared_ptr<const TypeExpr>;

/// Immutable symbolic type; a value denotes a (possibly infinite) set of Q types.
class TypeExpr {
public:
    enum class Kind { Atomic, Var, List, HList, Tuple, STuple, Dict, Func };

    Kind kind;
    AtomicType atom = AtomicType::Boolean; // Kind::Atomic
    TypeVarId var = 0;                     // Kind::Var
    std::vector<TypePtr> args;             // List(1), Tuple(k), Dict(2), Func(2)
    std::vector<std::string> names;        // STuple

    bool isListShaped() const {
        return kind == Kind::List || kind == Kind::HList || kind == Kind::Tuple || kind == Kind::STuple;
    }
};

TypePtr tAtomic(AtomicType a);
TypePtr tVar(TypeVarId v);
TypePtr tList(TypePtr elem);
TypePtr tHList();
TypePtr tTuple(std::vector<TypePtr> elems);
TypePtr tSTuple(std::vector<std::string> names);
TypePtr tDict(TypePtr dom, TypePtr rng);
TypePtr tFunc(TypePtr arg, TypePtr res);

bool structuralEqual(const TypePtr& a, const TypePtr& b);
bool alphaEqual(const TypePtr& a, const TypePtr& b);
void collectVars(const TypePtr& t, std::vector<TypeVarId>& out);
bool containsVar(const TypePtr& t, TypeVarId v);
bool isGround(const TypePtr& t);

struct TypeVarAllocator {
    TypeVarId next = 0;
    TypeVarId fresh() { return next++; }
};

/// Acyclic map TypeVarId -> TypeExpr; entries are kept fully resolved.
class Substitution {
public:
    bool bind(TypeVarId v, TypePtr t); // false on occurs-check failure
    const TypePtr* lookup(TypeVarId v) const;
    TypePtr apply(const TypePtr& t) const;
    bool empty() const { return map_.empty(); }
    size_t size() const { return map_.size(); }
    void clear() { map_.clear(); }
    void erase(TypeVarId v) { map_.erase(v); }
    const std::map<TypeVarId, TypePtr>& entries() const { return map_; }

private:
    std::map<TypeVarId, TypePtr> map_;
};

/// Finite list of type expressions; denotes the union of member denotations.
/// The empty list is the conflict signal.
struct Domain {
    std::vector<TypePtr> exprs;

    Domain() = default;
    explicit Domain(std::vector<TypePtr> e) : exprs(std::move(e)) {}
    static Domain of(std::initializer_list<TypePtr> e) { return Domain(std::vector<TypePtr>(e)); }

    bool empty() const { return exprs.empty(); }
    bool singleton() const { return exprs.size() == 1; }
    size_t size() const { return exprs.size(); }
};

Domain dedupAlpha(Domain d);
bool alphaEqualDomains(const Domain& a, const Domain& b);

/// Stable printer; variables are named A, B, ... in first-occurrence order
/// unless a shared naming map is supplied.
std::string show(const TypePtr& t);
std::string show(const TypePtr& t, std::map<TypeVarId, std::string>& varNames);
std::string show(const Domain& d);
std::string show(const Domain& d, std::map<TypeVarId, std::string>& varNames);

/// Structure-only canonical string with alpha-renamed variables (dedup/hash key).
std::string alphaKey(const TypePtr& t);

} // namespace qtype
