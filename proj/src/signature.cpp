#include "qtype/signature.hpp"

#include <fstream>
#include <sstream>

#include "qtype/decl_parser.hpp"

namespace qtype {

const char* extDirName(ExtDir d) {
    switch (d) {
    case ExtDir::None: return "none";
    case ExtDir::Left: return "left";
    case ExtDir::Right: return "right";
    case ExtDir::Both: return "both";
    }
    return "?";
}

const SignatureEntry* SignatureTable::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : &it->second;
}

bool SignatureTable::insert(SignatureEntry entry, std::string& err) {
    if (entries_.count(entry.name)) {
        err = "duplicate signature for '" + entry.name + "'";
        return false;
    }
    entries_.emplace(entry.name, std::move(entry));
    return true;
}

std::vector<SigAlternative> SignatureTable::alternatives(const SignatureEntry& e) {
    std::vector<SigAlternative> out;
    for (const auto& alt : e.decl.exprs) {
        SigAlternative a;
        TypePtr cur = alt;
        for (int i = 0; i < e.arity; i++) {
            a.args.push_back(cur->args[0]);
            cur = cur->args[1];
        }
        a.result = cur;
        out.push_back(std::move(a));
    }
    return out;
}

std::optional<Domain> SignatureTable::funcDomainForArity(const SignatureEntry& e, int k) {
    if (k != e.arity || k < 1) return std::nullopt;
    Domain d;
    for (const auto& alt : alternatives(e)) {
        TypePtr arg = k == 1 ? alt.args[0] : tTuple(alt.args);
        d.exprs.push_back(tFunc(arg, alt.result));
    }
    return d;
}

namespace {

int currySpine(const TypePtr& t) {
    int depth = 0;
    TypePtr cur = t;
    while (cur->kind == TypeExpr::Kind::Func) {
        depth++;
        cur = cur->args[1];
    }
    return depth;
}

} // namespace

SignatureLoadResult parseSignatureText(const std::string& text, TypeVarAllocator& vars) {
    SignatureLoadResult out;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    auto fail = [&](std::string msg) {
        out.error = SignatureError{lineNo, std::move(msg)};
        return out;
    };

    while (std::getline(in, line)) {
        lineNo++;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        size_t i = 0;
        auto skipWs = [&] { while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) i++; };
        skipWs();
        if (i >= line.size()) continue;

        size_t nameStart = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ':') i++;
        std::string name = line.substr(nameStart, i - nameStart);
        if (name.empty()) return fail("expected a builtin name");
        skipWs();
        if (i >= line.size() || line[i] != ':') return fail("expected ':' after name");
        i++;

        // trailing keywords: [ext [dir]] [rel name]
        std::string rest = line.substr(i);
        ExtDir ext = ExtDir::None;
        std::string rel;
        auto chopKeyword = [&](const std::string& kw) -> std::optional<std::string> {
            // finds " kw" at word boundary scanning from the right
            size_t p = rest.rfind(kw);
            if (p == std::string::npos) return std::nullopt;
            bool leftOk = p == 0 || rest[p - 1] == ' ' || rest[p - 1] == '\t';
            size_t after = p + kw.size();
            bool rightOk = after == rest.size() || rest[after] == ' ' || rest[after] == '\t';
            if (!leftOk || !rightOk) return std::nullopt;
            std::string tail = rest.substr(after);
            rest.erase(p);
            // trim tail
            size_t b = tail.find_first_not_of(" \t");
            size_t e = tail.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : tail.substr(b, e - b + 1);
        };
        if (auto relTail = chopKeyword("rel")) {
            if (relTail->empty()) return fail("expected a relation name after 'rel'");
            rel = *relTail;
            if (rel.find(' ') != std::string::npos) return fail("malformed relation name");
        }
        if (auto extTail = chopKeyword("ext")) {
            if (extTail->empty() || *extTail == "both")
                ext = ExtDir::Both;
            else if (*extTail == "left")
                ext = ExtDir::Left;
            else if (*extTail == "right")
                ext = ExtDir::Right;
            else
                return fail("unknown extension direction '" + *extTail + "'");
        }

        DeclParseResult decl = parseTypeDecl(rest, vars);
        if (!decl.ok())
            return fail("bad declaration for '" + name + "': " + decl.error->message);
        if (decl.domain.empty()) return fail("empty declaration for '" + name + "'");

        int arity = currySpine(decl.domain.exprs[0]);
        if (arity < 1) return fail("'" + name + "' must declare a function type");
        for (const auto& alt : decl.domain.exprs)
            if (currySpine(alt) != arity)
                return fail("alternatives of '" + name + "' disagree on arity");

        SignatureEntry entry{name, std::move(decl.domain), arity, ext,
                             rel.empty() ? "sig:" + name : rel, lineNo};
        std::string err;
        if (!out.table.insert(std::move(entry), err)) return fail(err);
    }
    return out;
}

SignatureLoadResult loadSignatures(const std::string& path, TypeVarAllocator& vars) {
    std::ifstream in(path);
    if (!in) {
        SignatureLoadResult out;
        out.error = SignatureError{0, "cannot open signature file '" + path + "'"};
        return out;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parseSignatureText(buf.str(), vars);
}

} // namespace qtype
