#include "qtype/decl_parser.hpp"

#include <cctype>
#include <map>

namespace qtype {

namespace {

struct DeclCursor {
    std::string_view text;
    size_t pos = 0;
    TypeVarAllocator* vars;
    std::map<std::string, TypeVarId> named;
    std::optional<DeclParseError> error;

    void fail(std::string msg, size_t at) {
        if (!error) error = DeclParseError{static_cast<int>(at) + 1, std::move(msg)};
    }
    void skipWs() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) pos++;
    }
    bool eof() {
        skipWs();
        return pos >= text.size();
    }
    char peek() {
        skipWs();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool eat(char c) {
        skipWs();
        if (pos < text.size() && text[pos] == c) {
            pos++;
            return true;
        }
        return false;
    }
    bool eatArrow() {
        skipWs();
        if (pos + 1 < text.size() && text[pos] == '-' && text[pos + 1] == '>') {
            pos += 2;
            return true;
        }
        return false;
    }
    std::string name() {
        skipWs();
        size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) pos++;
        return std::string(text.substr(start, pos - start));
    }
};

using Alts = std::vector<TypePtr>;

Alts parseDecl(DeclCursor& c);
Alts parseFn(DeclCursor& c);

Alts parseBase(DeclCursor& c) {
    c.skipWs();
    size_t at = c.pos;
    if (c.eat('(')) {
        Alts inner = parseDecl(c);
        if (c.error) return {};
        if (!c.eat(')')) {
            c.fail("expected ')'", c.pos);
            return {};
        }
        return inner;
    }
    std::string n = c.name();
    if (n.empty()) {
        c.fail("expected a type", at);
        return {};
    }
    if (n == "any") return {tVar(c.vars->fresh())};
    if (n == "hlist") return {tHList()};
    if (n == "list") {
        if (!c.eat('(')) {
            c.fail("expected '(' after list", c.pos);
            return {};
        }
        Alts inner = parseDecl(c);
        if (c.error) return {};
        if (!c.eat(')')) {
            c.fail("expected ')'", c.pos);
            return {};
        }
        Alts out;
        for (auto& t : inner) out.push_back(tList(t));
        return out;
    }
    if (n == "tuple") {
        if (!c.eat('(')) {
            c.fail("expected '(' after tuple", c.pos);
            return {};
        }
        std::vector<Alts> members;
        if (!c.eat(')')) {
            while (true) {
                members.push_back(parseFn(c));
                if (c.error) return {};
                if (c.eat(',')) continue;
                if (c.eat(')')) break;
                c.fail("expected ',' or ')' in tuple", c.pos);
                return {};
            }
        }
        // distribute alternatives across positions
        Alts out = {tTuple({})};
        for (auto& m : members) {
            Alts next;
            for (auto& base : out)
                for (auto& opt : m) {
                    auto elems = base->args;
                    elems.push_back(opt);
                    next.push_back(tTuple(std::move(elems)));
                }
            out = std::move(next);
        }
        return out;
    }
    if (n == "stuple") {
        if (!c.eat('(')) {
            c.fail("expected '(' after stuple", c.pos);
            return {};
        }
        std::vector<std::string> names;
        while (true) {
            std::string m = c.name();
            if (m.empty()) {
                c.fail("expected a name in stuple", c.pos);
                return {};
            }
            names.push_back(std::move(m));
            if (c.eat(',')) continue;
            if (c.eat(')')) break;
            c.fail("expected ',' or ')' in stuple", c.pos);
            return {};
        }
        return {tSTuple(std::move(names))};
    }
    if (n == "dict") {
        if (!c.eat('(')) {
            c.fail("expected '(' after dict", c.pos);
            return {};
        }
        Alts dom = parseFn(c);
        if (c.error) return {};
        if (!c.eat(',')) {
            c.fail("expected ',' in dict", c.pos);
            return {};
        }
        Alts rng = parseFn(c);
        if (c.error) return {};
        if (!c.eat(')')) {
            c.fail("expected ')'", c.pos);
            return {};
        }
        Alts out;
        for (auto& d : dom)
            for (auto& r : rng) out.push_back(tDict(d, r));
        return out;
    }
    if (auto a = atomicFromName(n)) return {tAtomic(*a)};
    if (std::isupper(static_cast<unsigned char>(n[0]))) {
        auto [it, fresh] = c.named.emplace(n, 0);
        if (fresh) it->second = c.vars->fresh();
        return {tVar(it->second)};
    }
    c.fail("unknown type name '" + n + "'", at);
    return {};
}

Alts parseFn(DeclCursor& c) {
    Alts base = parseBase(c);
    if (c.error) return {};
    if (!c.eatArrow()) return base;
    Alts res = parseFn(c);
    if (c.error) return {};
    Alts out;
    for (auto& b : base)
        for (auto& r : res) out.push_back(tFunc(b, r));
    return out;
}

Alts parseDecl(DeclCursor& c) {
    Alts out = parseFn(c);
    if (c.error) return {};
    while (c.peek() == '|') {
        c.eat('|');
        Alts more = parseFn(c);
        if (c.error) return {};
        out.insert(out.end(), more.begin(), more.end());
    }
    return out;
}

} // namespace

DeclParseResult parseTypeDecl(std::string_view text, TypeVarAllocator& vars) {
    DeclParseResult out;
    DeclCursor c{text, 0, &vars};
    Alts alts = parseDecl(c);
    if (!c.error && !c.eof()) c.fail("unexpected trailing text", c.pos);
    if (c.error) {
        out.error = c.error;
        return out;
    }
    out.domain = dedupAlpha(Domain(std::move(alts)));
    return out;
}

} // namespace qtype
