#pragma once

#include <optional>

#include "qtype/type_expr.hpp"

namespace qtype {

/// Result of intersecting two type expressions: an expression denoting
/// exactly the intersection, plus the variable bindings that make it so.
struct MeetResult {
    TypePtr type;
    Substitution subst;
};

/// Intersection-narrowing in place of unification: constructors overlap
/// (a tuple is a special list, an stuple a special tuple, hlist covers all
/// lists), so disjointness is a normal outcome, not an error.
std::optional<MeetResult> meet(const TypePtr& a, const TypePtr& b);

struct NarrowResult {
    Domain domain;
    Substitution binding; // emitted only when exactly one pair survived
    bool changed = false; // result differs structurally from the first input
};

/// Pairwise meets of two domains, alpha-deduplicated, order-preserving.
/// An empty result signals conflict.
NarrowResult narrow(const Domain& d1, const Domain& d2);

enum class SetRelation { Disjoint, Overlap, Subset };
const char* setRelationName(SetRelation r);

/// Relation of the inferred set to the declared set. Exact on ground
/// domains; domains with free variables are conservatively Overlap unless
/// every pairwise meet is empty.
SetRelation relation(const Domain& inferred, const Domain& declared);

/// True when every member of `d1` meets into some member of `d2` losslessly.
bool domainSubset(const Domain& d1, const Domain& d2);

} // namespace qtype
