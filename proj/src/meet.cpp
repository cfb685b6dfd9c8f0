#include "qtype/meet.hpp"

namespace qtype {

namespace {

TypePtr walk(TypePtr t, const Substitution& s) {
    while (t->kind == TypeExpr::Kind::Var) {
        const TypePtr* bound = s.lookup(t->var);
        if (!bound) return t;
        t = *bound;
    }
    return t;
}

std::optional<TypePtr> meetRec(const TypePtr& ta, const TypePtr& tb, Substitution& s);

std::optional<TypePtr> bindVar(const TypePtr& var, const TypePtr& other, Substitution& s) {
    if (other->kind == TypeExpr::Kind::Var && other->var == var->var) return other;
    if (!s.bind(var->var, other)) return std::nullopt; // occurs check
    return s.apply(other);
}

std::optional<TypePtr> meetRec(const TypePtr& ta, const TypePtr& tb, Substitution& s) {
    TypePtr a = walk(ta, s);
    TypePtr b = walk(tb, s);
    using K = TypeExpr::Kind;

    if (a->kind == K::Var) return bindVar(a, b, s);
    if (b->kind == K::Var) return bindVar(b, a, s);

    // hlist is the top of the list shapes
    if (a->kind == K::HList) return b->isListShaped() ? std::optional<TypePtr>(b) : std::nullopt;
    if (b->kind == K::HList) return a->isListShaped() ? std::optional<TypePtr>(a) : std::nullopt;

    if (a->kind == K::Atomic || b->kind == K::Atomic) {
        if (a->kind == K::Atomic && b->kind == K::Atomic && a->atom == b->atom) return a;
        return std::nullopt;
    }

    if (a->kind == K::List && b->kind == K::List) {
        auto e = meetRec(a->args[0], b->args[0], s);
        if (!e) return std::nullopt;
        if ((*e).get() == a->args[0].get()) return a;
        return tList(*e);
    }

    // a tuple is a special list: meet the element type into every position.
    // The zero-width tuple is the empty list's own type and no list(T)
    // member witnesses it, so that pair stays disjoint.
    auto listVsTuple = [&](const TypePtr& list, const TypePtr& tup) -> std::optional<TypePtr> {
        if (tup->args.empty()) return std::nullopt;
        std::vector<TypePtr> elems;
        elems.reserve(tup->args.size());
        for (const auto& m : tup->args) {
            auto e = meetRec(list->args[0], m, s);
            if (!e) return std::nullopt;
            elems.push_back(*e);
        }
        return tTuple(std::move(elems));
    };
    if (a->kind == K::List && b->kind == K::Tuple) return listVsTuple(a, b);
    if (a->kind == K::Tuple && b->kind == K::List) return listVsTuple(b, a);

    // an stuple is a special tuple of symbols
    auto listVsSTuple = [&](const TypePtr& list, const TypePtr& st) -> std::optional<TypePtr> {
        auto e = meetRec(list->args[0], tAtomic(AtomicType::Symbol), s);
        if (!e) return std::nullopt;
        return st;
    };
    if (a->kind == K::List && b->kind == K::STuple) return listVsSTuple(a, b);
    if (a->kind == K::STuple && b->kind == K::List) return listVsSTuple(b, a);

    auto tupleVsSTuple = [&](const TypePtr& tup, const TypePtr& st) -> std::optional<TypePtr> {
        if (tup->args.size() != st->names.size()) return std::nullopt;
        for (const auto& m : tup->args) {
            auto e = meetRec(m, tAtomic(AtomicType::Symbol), s);
            if (!e) return std::nullopt;
        }
        return st;
    };
    if (a->kind == K::Tuple && b->kind == K::STuple) return tupleVsSTuple(a, b);
    if (a->kind == K::STuple && b->kind == K::Tuple) return tupleVsSTuple(b, a);

    if (a->kind != b->kind) return std::nullopt;

    switch (a->kind) {
    case K::STuple:
        return a->names == b->names ? std::optional<TypePtr>(a) : std::nullopt;
    case K::Tuple: {
        if (a->args.size() != b->args.size()) return std::nullopt;
        std::vector<TypePtr> elems;
        elems.reserve(a->args.size());
        bool same = true;
        for (size_t i = 0; i < a->args.size(); i++) {
            auto e = meetRec(a->args[i], b->args[i], s);
            if (!e) return std::nullopt;
            same = same && (*e).get() == a->args[i].get();
            elems.push_back(*e);
        }
        return same ? a : tTuple(std::move(elems));
    }
    case K::Dict:
    case K::Func: {
        auto d = meetRec(a->args[0], b->args[0], s);
        if (!d) return std::nullopt;
        auto r = meetRec(a->args[1], b->args[1], s);
        if (!r) return std::nullopt;
        if ((*d).get() == a->args[0].get() && (*r).get() == a->args[1].get()) return a;
        return a->kind == K::Dict ? tDict(*d, *r) : tFunc(*d, *r);
    }
    default:
        return std::nullopt;
    }
}

} // namespace

std::optional<MeetResult> meet(const TypePtr& a, const TypePtr& b) {
    Substitution s;
    auto r = meetRec(a, b, s);
    if (!r) return std::nullopt;
    return MeetResult{s.apply(*r), std::move(s)};
}

NarrowResult narrow(const Domain& d1, const Domain& d2) {
    NarrowResult out;
    std::vector<TypePtr> survivors;
    std::optional<Substitution> onlySubst;
    int pairCount = 0;
    for (const auto& a : d1.exprs) {
        for (const auto& b : d2.exprs) {
            auto m = meet(a, b);
            if (!m) continue;
            pairCount++;
            if (pairCount == 1)
                onlySubst = m->subst;
            else
                onlySubst.reset();
            survivors.push_back(m->type);
        }
    }
    out.domain = dedupAlpha(Domain(std::move(survivors)));
    if (pairCount == 1 && onlySubst) out.binding = std::move(*onlySubst);
    out.changed = out.domain.size() != d1.size();
    if (!out.changed) {
        for (size_t i = 0; i < d1.size(); i++) {
            if (!structuralEqual(out.domain.exprs[i], d1.exprs[i])) {
                out.changed = true;
                break;
            }
        }
    }
    return out;
}

const char* setRelationName(SetRelation r) {
    switch (r) {
    case SetRelation::Disjoint: return "disjoint";
    case SetRelation::Overlap: return "overlap";
    case SetRelation::Subset: return "subset";
    }
    return "?";
}

bool domainSubset(const Domain& d1, const Domain& d2) {
    for (const auto& e : d1.exprs) {
        bool covered = false;
        for (const auto& d : d2.exprs) {
            auto m = meet(e, d);
            if (m && alphaEqual(m->type, e)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

SetRelation relation(const Domain& inferred, const Domain& declared) {
    bool anyMeet = false;
    for (const auto& a : inferred.exprs)
        for (const auto& b : declared.exprs)
            if (meet(a, b)) anyMeet = true;
    if (!anyMeet && !inferred.empty() && !declared.empty()) return SetRelation::Disjoint;
    if (domainSubset(inferred, declared)) return SetRelation::Subset;
    return SetRelation::Overlap;
}

} // namespace qtype
