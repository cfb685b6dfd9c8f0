#pragma once

#include <set>
#include <vector>

#include "qtype/type_expr.hpp"

namespace qtype {

/// Finite slice of the ground type-expression space, used as an
/// enumeration basis for exhaustive checks.
struct GroundUniverse {
    std::set<AtomicType> basis;
    int maxDepth = 1;
    int maxWidth = 2;
    /// stuple names range over this fixed alphabet; only generated when
    /// symbol is in the basis.
    std::vector<std::string> names = {"a", "b"};
};

/// All ground type expressions within the universe bounds, deterministically
/// ordered. Atomics have depth 0; every constructor (including hlist, stuple
/// and the empty tuple) adds one level.
std::vector<TypePtr> enumerateGround(const GroundUniverse& u);

} // namespace qtype
