#include "qtype/ground.hpp"

#include <set>

namespace qtype {

namespace {

void tuplesOfWidth(const std::vector<TypePtr>& pool, int width,
                   std::vector<TypePtr>& scratch, std::vector<std::vector<TypePtr>>& out) {
    if (width == 0) {
        out.push_back(scratch);
        return;
    }
    for (const auto& t : pool) {
        scratch.push_back(t);
        tuplesOfWidth(pool, width - 1, scratch, out);
        scratch.pop_back();
    }
}

void nameLists(const std::vector<std::string>& names, int width,
               std::vector<std::string>& scratch, std::vector<std::vector<std::string>>& out) {
    if (width == 0) {
        if (!scratch.empty()) out.push_back(scratch);
        return;
    }
    for (const auto& n : names) {
        scratch.push_back(n);
        nameLists(names, width - 1, scratch, out);
        scratch.pop_back();
    }
}

} // namespace

std::vector<TypePtr> enumerateGround(const GroundUniverse& u) {
    std::vector<TypePtr> all;
    std::set<std::string> seen;
    auto add = [&](TypePtr t) {
        if (seen.insert(alphaKey(t)).second) all.push_back(std::move(t));
    };

    for (AtomicType a : u.basis) add(tAtomic(a));
    bool hasSymbol = u.basis.count(AtomicType::Symbol) > 0;

    for (int depth = 1; depth <= u.maxDepth; depth++) {
        std::vector<TypePtr> pool = all; // everything with depth < current
        if (depth == 1) {
            add(tHList());
            if (hasSymbol) {
                for (int w = 1; w <= u.maxWidth; w++) {
                    std::vector<std::string> scratch;
                    std::vector<std::vector<std::string>> lists;
                    nameLists(u.names, w, scratch, lists);
                    for (auto& ns : lists) add(tSTuple(std::move(ns)));
                }
            }
            add(tTuple({}));
        }
        for (const auto& t : pool) add(tList(t));
        for (int w = 1; w <= u.maxWidth; w++) {
            std::vector<TypePtr> scratch;
            std::vector<std::vector<TypePtr>> combos;
            tuplesOfWidth(pool, w, scratch, combos);
            for (auto& c : combos) add(tTuple(std::move(c)));
        }
        for (const auto& d : pool)
            for (const auto& r : pool) add(tDict(d, r));
        for (const auto& d : pool)
            for (const auto& r : pool) add(tFunc(d, r));
    }
    return all;
}

} // namespace qtype
