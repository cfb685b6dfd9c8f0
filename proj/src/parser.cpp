#include "qtype/parser.hpp"

#include <algorithm>

namespace qtype {

namespace {

bool isNumericLit(TokenKind k) {
    return k == TokenKind::IntLit || k == TokenKind::LongLit || k == TokenKind::FloatLit;
}

AtomicType literalType(TokenKind k) {
    switch (k) {
    case TokenKind::IntLit: return AtomicType::Int;
    case TokenKind::LongLit: return AtomicType::Long;
    case TokenKind::FloatLit: return AtomicType::Float;
    case TokenKind::BoolLit: return AtomicType::Boolean;
    case TokenKind::SymbolLit: return AtomicType::Symbol;
    case TokenKind::CharLit: return AtomicType::Char;
    default: return AtomicType::Int;
    }
}

struct ParseError {
    SourceSpan span;
    std::string message;
};

class Parser {
public:
    Parser(const std::vector<Token>& tokens, std::string file)
        : toks_(tokens), file_(std::move(file)) {}

    ParseResult run() {
        ParseResult out;
        try {
            std::vector<AstNode> items = exprSeq(/*stopPunct=*/"");
            if (!eof()) fail(peek().span, "unexpected token '" + peek().text + "'");
            AstNode root;
            root.form = Seq{std::move(items)};
            root.span = rootSpan(root);
            numberIds(root);
            out.root = std::move(root);
            out.annotations = std::move(annots_);
        } catch (ParseError& e) {
            out.errors.push_back(
                Diagnostic{Severity::Error, DiagKind::ParseError, e.span, 0, e.message, {}});
        }
        return out;
    }

private:
    const std::vector<Token>& toks_;
    std::string file_;
    size_t pos_ = 0;
    std::vector<PendingAnnotation> annots_;
    bool haveLastEnd_ = false;
    int lastEndLine_ = 0, lastEndCol_ = 0;

    [[noreturn]] void fail(SourceSpan span, std::string msg) { throw ParseError{std::move(span), std::move(msg)}; }

    SourceSpan hereSpan() const {
        if (pos_ < toks_.size()) return toks_[pos_].span;
        SourceSpan s;
        s.file = file_;
        if (!toks_.empty()) {
            s = toks_.back().span;
            s.startLine = s.endLine;
            s.startCol = s.endCol;
        }
        return s;
    }

    // annotation tokens are collected transparently wherever they appear
    void collectAnnotations() {
        while (pos_ < toks_.size() &&
               (toks_[pos_].kind == TokenKind::AnnotImperative ||
                toks_[pos_].kind == TokenKind::AnnotInterrogative)) {
            const Token& t = toks_[pos_];
            PendingAnnotation a;
            a.kind = t.kind == TokenKind::AnnotImperative ? AnnotationKind::Imperative
                                                          : AnnotationKind::Interrogative;
            a.rawDecl = t.payload;
            a.span = t.span;
            a.hasAnchor = haveLastEnd_;
            a.anchorLine = lastEndLine_;
            a.anchorCol = lastEndCol_;
            annots_.push_back(std::move(a));
            pos_++;
        }
    }

    bool eof() {
        collectAnnotations();
        return pos_ >= toks_.size();
    }

    const Token& peek(size_t off = 0) {
        collectAnnotations();
        static const Token sentinel{TokenKind::Separator, "", "", {}};
        size_t idx = pos_;
        while (off > 0 && idx < toks_.size()) {
            idx++;
            while (idx < toks_.size() && (toks_[idx].kind == TokenKind::AnnotImperative ||
                                          toks_[idx].kind == TokenKind::AnnotInterrogative))
                idx++;
            off--;
        }
        return idx < toks_.size() ? toks_[idx] : sentinel;
    }

    Token advance() {
        collectAnnotations();
        const Token& t = toks_[pos_++];
        lastEndLine_ = t.span.endLine;
        lastEndCol_ = t.span.endCol;
        haveLastEnd_ = true;
        return t;
    }

    bool atPunct(const std::string& p) {
        return !eof() && peek().kind == TokenKind::Punct && peek().text == p;
    }
    bool atSeparator() { return !eof() && peek().kind == TokenKind::Separator; }

    void expectPunct(const std::string& p, const std::string& what) {
        if (!atPunct(p)) fail(hereSpan(), "expected '" + p + "' " + what);
        advance();
    }

    void skipSeparators() {
        while (atSeparator()) advance();
    }

    // expressions separated by ';'/newlines until the closing punct (or EOF)
    std::vector<AstNode> exprSeq(const std::string& stopPunct) {
        std::vector<AstNode> items;
        skipSeparators();
        while (!eof() && !(stopPunct.size() && atPunct(stopPunct))) {
            items.push_back(expr());
            skipSeparators();
        }
        return items;
    }

    AstNode expr() { return rightExpr(); }

    static bool isInfixName(const std::string& t) {
        return t == "+" || t == "-" || t == "*" || t == "%" || t == "<" || t == ">" ||
               t == "=" || t == "<>" || t == "&" || t == "|" || t == ",";
    }

    AstNode rightExpr() {
        AstNode lhs = postfixed();
        if (eof()) return lhs;
        const Token& t = peek();

        if (t.kind == TokenKind::Operator) {
            if (t.text == ":") {
                Token op = advance();
                AstNode value = rightExpr();
                return makeAssign(std::move(lhs), std::move(value), op.span);
            }
            if (t.text.size() == 2 && t.text[1] == ':' && t.text != "<>") {
                // compound assignment  x*:2  ==>  x: x*2
                if (!lhs.is<Var>()) fail(t.span, "compound assignment needs a variable target");
                Token op = advance();
                AstNode rhs = rightExpr();
                std::string opName(1, op.text[0]);
                AstNode operand;
                operand.span = lhs.span;
                operand.form = Var{lhs.as<Var>().name};
                AstNode call = makeInfixApp(std::move(operand), opName, op.span, std::move(rhs));
                AstNode assign;
                assign.span = joinSpans(lhs.span, call.span);
                assign.form = Assign{intoPtr(std::move(lhs)), intoPtr(std::move(call))};
                return assign;
            }
            if (t.text == "!") {
                Token op = advance();
                AstNode rng = rightExpr();
                AstNode node;
                node.span = joinSpans(lhs.span, rng.span);
                node.form = DictLit{intoPtr(std::move(lhs)), intoPtr(std::move(rng))};
                return node;
            }
            if (isInfixName(t.text)) {
                Token op = advance();
                AstNode rhs = rightExpr();
                return makeInfixApp(std::move(lhs), op.text, op.span, std::move(rhs));
            }
            fail(t.span, "unexpected operator '" + t.text + "'");
        }

        if (startsPrimary(t)) {
            // unary juxtaposition: f x
            AstNode arg = rightExpr();
            return makeApp(std::move(lhs), singleItem(std::move(arg)));
        }
        return lhs;
    }

    bool startsPrimary(const Token& t) {
        switch (t.kind) {
        case TokenKind::IntLit:
        case TokenKind::LongLit:
        case TokenKind::FloatLit:
        case TokenKind::BoolLit:
        case TokenKind::SymbolLit:
        case TokenKind::CharLit:
        case TokenKind::StringLit:
        case TokenKind::Name:
            return true;
        case TokenKind::Punct:
            return t.text == "(" || t.text == "{";
        case TokenKind::Operator:
            return t.text == "$" && peek(1).kind == TokenKind::Punct && peek(1).text == "[";
        default:
            return false;
        }
    }

    AstNode makeAssign(AstNode target, AstNode value, const SourceSpan& opSpan) {
        AstNode node;
        node.span = joinSpans(target.span, value.span);
        if (target.is<Var>()) {
            node.form = Assign{intoPtr(std::move(target)), intoPtr(std::move(value))};
            return node;
        }
        if (target.is<App>()) {
            // l[i]: v  becomes an indexed assignment
            App app = std::move(target.as<App>());
            auto& items = app.args->as<ListLit>().items;
            if (items.size() != 1) fail(opSpan, "indexed assignment takes exactly one index");
            AstNode index = std::move(items[0]);
            node.form = IndexAssign{std::move(app.fn),
                                    std::make_unique<AstNode>(std::move(index)),
                                    intoPtr(std::move(value))};
            return node;
        }
        fail(opSpan, "invalid assignment target");
    }

    AstNode makeInfixApp(AstNode lhs, const std::string& opName, const SourceSpan& opSpan, AstNode rhs) {
        AstNode fn;
        fn.span = opSpan;
        fn.form = Var{opName};
        std::vector<AstNode> items;
        items.push_back(std::move(lhs));
        items.push_back(std::move(rhs));
        return makeApp(std::move(fn), std::move(items));
    }

    std::vector<AstNode> singleItem(AstNode n) {
        std::vector<AstNode> v;
        v.push_back(std::move(n));
        return v;
    }

    AstNode makeApp(AstNode fn, std::vector<AstNode> args) {
        SourceSpan span = fn.span;
        for (const auto& a : args) span = joinSpans(span, a.span);
        AstNode container;
        container.span = args.empty() ? span : joinSpans(args.front().span, args.back().span);
        container.form = ListLit{std::move(args)};
        AstNode node;
        node.span = span;
        node.form = App{intoPtr(std::move(fn)), intoPtr(std::move(container))};
        return node;
    }

    static AstPtr intoPtr(AstNode n) { return std::make_unique<AstNode>(std::move(n)); }

    AstNode postfixed() {
        AstNode node = primary();
        while (atPunct("[")) {
            SourceSpan open = peek().span;
            advance();
            std::vector<AstNode> args = bracketArgs();
            SourceSpan close = hereSpan();
            expectPunct("]", "to close application");
            AstNode app = makeApp(std::move(node), std::move(args));
            app.span = joinSpans(app.span, close);
            (void)open;
            node = std::move(app);
        }
        return node;
    }

    std::vector<AstNode> bracketArgs() {
        std::vector<AstNode> args;
        skipSeparators();
        if (atPunct("]")) return args;
        while (true) {
            args.push_back(expr());
            if (atPunct("]")) return args;
            if (atSeparator()) {
                skipSeparators();
                if (atPunct("]")) return args;
                continue;
            }
            if (eof()) fail(hereSpan(), "unterminated '[' group");
            fail(peek().span, "expected ';' or ']'");
        }
    }

    AstNode primary() {
        if (eof()) fail(hereSpan(), "expected an expression");
        const Token& t = peek();

        if (isNumericLit(t.kind)) return numericRun();
        if (t.kind == TokenKind::SymbolLit) return symbolRun();

        if (t.kind == TokenKind::BoolLit || t.kind == TokenKind::CharLit) {
            Token lit = advance();
            AstNode n;
            n.span = lit.span;
            n.form = Literal{literalType(lit.kind), lit.text};
            return n;
        }
        if (t.kind == TokenKind::StringLit) {
            Token lit = advance();
            AstNode n;
            n.span = lit.span;
            n.form = VectorLit{AtomicType::Char, {}};
            return n;
        }
        if (t.kind == TokenKind::Name) {
            if (t.text == "do" && peek(1).kind == TokenKind::Punct && peek(1).text == "[")
                return doLoop();
            Token name = advance();
            AstNode n;
            n.span = name.span;
            n.form = Var{name.text};
            return n;
        }
        if (t.kind == TokenKind::Operator && t.text == "$") {
            return conditional();
        }
        if (t.kind == TokenKind::Punct && t.text == "(") {
            return parenGroup();
        }
        if (t.kind == TokenKind::Punct && t.text == "{") {
            return lambda();
        }
        fail(t.span, "unexpected token '" + t.text + "'");
    }

    AstNode numericRun() {
        std::vector<AstNode> items;
        AtomicType elem = AtomicType::Int;
        SourceSpan span = peek().span;
        while (!eof() && isNumericLit(peek().kind)) {
            Token lit = advance();
            AtomicType ty = literalType(lit.kind);
            if (numericRank(ty) > numericRank(elem)) elem = ty;
            AstNode n;
            n.span = lit.span;
            n.form = Literal{ty, lit.text};
            span = joinSpans(span, lit.span);
            items.push_back(std::move(n));
        }
        if (items.size() == 1) return std::move(items[0]);
        AstNode vec;
        vec.span = span;
        vec.form = VectorLit{elem, std::move(items)};
        return vec;
    }

    AstNode symbolRun() {
        std::vector<AstNode> items;
        SourceSpan span = peek().span;
        while (!eof() && peek().kind == TokenKind::SymbolLit) {
            Token lit = advance();
            AstNode n;
            n.span = lit.span;
            n.form = Literal{AtomicType::Symbol, lit.payload};
            span = joinSpans(span, lit.span);
            items.push_back(std::move(n));
        }
        if (items.size() == 1) return std::move(items[0]);
        AstNode vec;
        vec.span = span;
        vec.form = VectorLit{AtomicType::Symbol, std::move(items)};
        return vec;
    }

    AstNode conditional() {
        Token dollar = advance();
        expectPunct("[", "after '$'");
        std::vector<AstNode> parts = bracketArgs();
        SourceSpan close = hereSpan();
        expectPunct("]", "to close conditional");
        if (parts.size() != 3)
            fail(joinSpans(dollar.span, close), "conditional takes exactly three parts: $[test;then;else]");
        AstNode n;
        n.span = joinSpans(dollar.span, close);
        n.form = Cond{intoPtr(std::move(parts[0])), intoPtr(std::move(parts[1])), intoPtr(std::move(parts[2]))};
        return n;
    }

    AstNode doLoop() {
        Token kw = advance();
        expectPunct("[", "after 'do'");
        std::vector<AstNode> parts = bracketArgs();
        SourceSpan close = hereSpan();
        expectPunct("]", "to close do-loop");
        if (parts.empty()) fail(joinSpans(kw.span, close), "do-loop needs a count expression");
        AstNode n;
        n.span = joinSpans(kw.span, close);
        AstNode count = std::move(parts[0]);
        parts.erase(parts.begin());
        n.form = DoLoop{intoPtr(std::move(count)), std::move(parts)};
        return n;
    }

    AstNode parenGroup() {
        Token open = advance();
        skipSeparators();
        if (atPunct(")")) {
            Token close = advance();
            AstNode n;
            n.span = joinSpans(open.span, close.span);
            n.form = ListLit{{}};
            return n;
        }
        std::vector<AstNode> items;
        bool sawSeparator = false;
        while (true) {
            items.push_back(expr());
            if (atPunct(")")) break;
            if (atSeparator()) {
                sawSeparator = true;
                skipSeparators();
                if (atPunct(")")) break;
                continue;
            }
            if (eof()) fail(hereSpan(), "unterminated '(' group");
            fail(peek().span, "expected ';' or ')'");
        }
        Token close = advance();
        if (items.size() == 1 && !sawSeparator) {
            AstNode inner = std::move(items[0]);
            inner.span = joinSpans(joinSpans(open.span, inner.span), close.span);
            return inner;
        }
        AstNode n;
        n.span = joinSpans(open.span, close.span);
        n.form = ListLit{std::move(items)};
        return n;
    }

    AstNode lambda() {
        Token open = advance();
        Lambda lam;
        skipSeparators();
        if (atPunct("[")) {
            advance();
            lam.explicitParams = true;
            skipSeparators();
            while (!atPunct("]")) {
                if (eof() || peek().kind != TokenKind::Name)
                    fail(hereSpan(), "expected a parameter name");
                lam.params.push_back(advance().text);
                skipSeparators();
                if (atSeparator()) {
                    advance();
                    skipSeparators();
                }
            }
            expectPunct("]", "to close parameter list");
        }
        lam.body = exprSeq("}");
        SourceSpan close = hereSpan();
        expectPunct("}", "to close function body");
        AstNode n;
        n.span = joinSpans(open.span, close);
        n.form = Lambda{std::move(lam)};
        return n;
    }

    SourceSpan rootSpan(const AstNode& root) {
        const auto& items = root.as<Seq>().items;
        SourceSpan s;
        s.file = file_;
        if (items.empty()) return s;
        return joinSpans(items.front().span, items.back().span);
    }

    void numberIds(AstNode& root) {
        int next = 1;
        for (auto& item : root.as<Seq>().items) numberRec(item, next);
        root.id = next;
    }

    void numberRec(AstNode& n, int& next) {
        n.id = next++;
        forEachChild(n, [&](AstNode& c) { numberRec(c, next); });
    }

    template <typename F> static void forEachChild(AstNode& n, F f) {
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

} // namespace

ParseResult parse(const std::vector<Token>& tokens, const std::string& file) {
    return Parser(tokens, file).run();
}

void visitAst(const AstNode& node, const std::function<void(const AstNode&)>& fn) {
    fn(node);
    for (const AstNode* c : astChildren(node)) visitAst(*c, fn);
}

std::vector<const AstNode*> astChildren(const AstNode& n) {
    std::vector<const AstNode*> out;
    std::visit(
        [&](const auto& form) {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, Lambda>) {
                for (const auto& b : form.body) out.push_back(&b);
            } else if constexpr (std::is_same_v<T, App>) {
                out.push_back(form.fn.get());
                out.push_back(form.args.get());
            } else if constexpr (std::is_same_v<T, Assign>) {
                out.push_back(form.target.get());
                out.push_back(form.value.get());
            } else if constexpr (std::is_same_v<T, IndexAssign>) {
                out.push_back(form.base.get());
                out.push_back(form.index.get());
                out.push_back(form.value.get());
            } else if constexpr (std::is_same_v<T, Cond>) {
                out.push_back(form.test.get());
                out.push_back(form.thenBranch.get());
                out.push_back(form.elseBranch.get());
            } else if constexpr (std::is_same_v<T, DoLoop>) {
                out.push_back(form.count.get());
                for (const auto& b : form.body) out.push_back(&b);
            } else if constexpr (std::is_same_v<T, ListLit> || std::is_same_v<T, VectorLit> ||
                                 std::is_same_v<T, Seq>) {
                for (const auto& i : form.items) out.push_back(&i);
            } else if constexpr (std::is_same_v<T, DictLit>) {
                out.push_back(form.domain.get());
                out.push_back(form.range.get());
            }
        },
        n.form);
    return out;
}

const AstNode* findNode(const AstNode& root, NodeId id) {
    if (root.id == id) return &root;
    for (const AstNode* c : astChildren(root)) {
        if (const AstNode* r = findNode(*c, id)) return r;
    }
    return nullptr;
}

} // namespace qtype
