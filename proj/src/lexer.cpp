#include "qtype/lexer.hpp"

#include <cctype>

namespace qtype {

const char* tokenKindName(TokenKind k) {
    switch (k) {
    case TokenKind::IntLit: return "IntLit";
    case TokenKind::LongLit: return "LongLit";
    case TokenKind::FloatLit: return "FloatLit";
    case TokenKind::BoolLit: return "BoolLit";
    case TokenKind::SymbolLit: return "SymbolLit";
    case TokenKind::CharLit: return "CharLit";
    case TokenKind::StringLit: return "StringLit";
    case TokenKind::Name: return "Name";
    case TokenKind::Operator: return "Operator";
    case TokenKind::Punct: return "Punct";
    case TokenKind::AnnotImperative: return "AnnotImperative";
    case TokenKind::AnnotInterrogative: return "AnnotInterrogative";
    case TokenKind::Separator: return "Separator";
    }
    return "?";
}

namespace {

struct Cursor {
    std::string_view src;
    std::string file;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    bool eof() const { return pos >= src.size(); }
    char peek(size_t off = 0) const { return pos + off < src.size() ? src[pos + off] : '\0'; }

    void advance() {
        if (eof()) return;
        char c = src[pos];
        if (c == '\n') {
            line++;
            col = 1;
            pos++;
            return;
        }
        // columns count code points, so skip UTF-8 continuation bytes
        pos++;
        while (pos < src.size() && (static_cast<unsigned char>(src[pos]) & 0xC0) == 0x80) pos++;
        col++;
    }
};

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isNameChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

} // namespace

LexResult tokenize(std::string_view source, std::string file) {
    LexResult out;
    Cursor c{source, file};

    auto startSpan = [&]() {
        SourceSpan s;
        s.file = file;
        s.startLine = s.endLine = c.line;
        s.startCol = s.endCol = c.col;
        return s;
    };
    auto closeSpan = [&](SourceSpan& s, size_t startPos) {
        s.endLine = c.line;
        s.endCol = c.col - 1; // inclusive end of last consumed char
        if (s.endLine == s.startLine && s.endCol < s.startCol) s.endCol = s.startCol;
        return source.substr(startPos, c.pos - startPos);
    };
    auto push = [&](TokenKind k, SourceSpan s, std::string_view text, std::string payload = {}) {
        out.tokens.push_back(Token{k, std::string(text), std::move(payload), std::move(s)});
    };
    auto error = [&](SourceSpan s, std::string msg) {
        out.errors.push_back(Diagnostic{Severity::Error, DiagKind::LexError, std::move(s), 0, std::move(msg), {}});
    };

    while (!c.eof()) {
        char ch = c.peek();
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            c.advance();
            continue;
        }
        SourceSpan span = startSpan();
        size_t start = c.pos;

        if (ch == '\n') {
            c.advance();
            // collapse runs of newlines into one separator
            if (!out.tokens.empty() && out.tokens.back().kind != TokenKind::Separator)
                push(TokenKind::Separator, span, "\n");
            continue;
        }

        if (ch == '/' && c.peek(1) == '/') {
            c.advance();
            c.advance();
            TokenKind kind = TokenKind::Separator; // sentinel for "plain comment"
            if ((c.peek() == '$' || c.peek() == '!') && c.peek(1) == ':') {
                kind = c.peek() == '$' ? TokenKind::AnnotInterrogative : TokenKind::AnnotImperative;
                c.advance();
                c.advance();
            }
            size_t bodyStart = c.pos;
            while (!c.eof() && c.peek() != '\n') c.advance();
            if (kind != TokenKind::Separator) {
                std::string_view decl = source.substr(bodyStart, c.pos - bodyStart);
                while (!decl.empty() && (decl.front() == ' ' || decl.front() == '\t')) decl.remove_prefix(1);
                while (!decl.empty() && (decl.back() == ' ' || decl.back() == '\t' || decl.back() == '\r')) decl.remove_suffix(1);
                auto text = closeSpan(span, start);
                push(kind, span, text, std::string(decl));
            }
            continue;
        }

        if (isDigit(ch)) {
            while (isDigit(c.peek())) c.advance();
            TokenKind kind = TokenKind::IntLit;
            if (c.peek() == '.' && isDigit(c.peek(1))) {
                kind = TokenKind::FloatLit;
                c.advance();
                while (isDigit(c.peek())) c.advance();
            }
            if (c.peek() == 'f') {
                kind = TokenKind::FloatLit;
                c.advance();
            } else if (c.peek() == 'j') {
                if (kind == TokenKind::FloatLit) {
                    error(span, "long suffix 'j' on a float literal");
                } else {
                    kind = TokenKind::LongLit;
                }
                c.advance();
            } else if (c.peek() == 'b' && kind == TokenKind::IntLit) {
                std::string_view digits = source.substr(start, c.pos - start);
                if (digits == "0" || digits == "1") {
                    kind = TokenKind::BoolLit;
                    c.advance();
                } else {
                    error(span, "boolean literal must be 0b or 1b");
                    c.advance();
                }
            }
            if (isNameChar(c.peek())) {
                SourceSpan es = startSpan();
                error(es, "malformed numeric literal");
                while (isNameChar(c.peek())) c.advance();
            }
            auto text = closeSpan(span, start);
            push(kind, span, text);
            continue;
        }

        if (ch == '`') {
            c.advance();
            while (isNameChar(c.peek())) c.advance();
            auto text = closeSpan(span, start);
            push(TokenKind::SymbolLit, span, text, std::string(text.substr(1)));
            continue;
        }

        if (ch == '"') {
            c.advance();
            std::string value;
            bool closed = false;
            while (!c.eof()) {
                char q = c.peek();
                if (q == '"') {
                    c.advance();
                    closed = true;
                    break;
                }
                if (q == '\n') break;
                if (q == '\\' && (c.peek(1) == '"' || c.peek(1) == '\\' || c.peek(1) == 'n' || c.peek(1) == 't')) {
                    char esc = c.peek(1);
                    value += esc == 'n' ? '\n' : esc == 't' ? '\t' : esc;
                    c.advance();
                    c.advance();
                    continue;
                }
                value += q;
                c.advance();
            }
            auto text = closeSpan(span, start);
            if (!closed) {
                error(span, "unterminated char literal");
                continue;
            }
            push(value.size() == 1 ? TokenKind::CharLit : TokenKind::StringLit, span, text, value);
            continue;
        }

        if (isNameStart(ch)) {
            while (isNameChar(c.peek())) c.advance();
            // dotted names (namespace globals) stay one token
            while (c.peek() == '.' && isNameStart(c.peek(1))) {
                c.advance();
                while (isNameChar(c.peek())) c.advance();
            }
            auto text = closeSpan(span, start);
            push(TokenKind::Name, span, text);
            continue;
        }

        switch (ch) {
        case '(': case ')': case '[': case ']': case '{': case '}': {
            c.advance();
            auto text = closeSpan(span, start);
            push(TokenKind::Punct, span, text);
            continue;
        }
        case ';': {
            c.advance();
            auto text = closeSpan(span, start);
            push(TokenKind::Separator, span, text);
            continue;
        }
        case '<': {
            c.advance();
            if (c.peek() == '>') c.advance();
            auto text = closeSpan(span, start);
            push(TokenKind::Operator, span, text);
            continue;
        }
        case '+': case '-': case '*': case '%': case '>': case '=': case '&': case '|': case '!': case '$': case ',': {
            c.advance();
            // compound assignment: operator immediately followed by ':'
            if (c.peek() == ':' && ch != '$' && ch != ',' && ch != '!' && ch != '=') c.advance();
            auto text = closeSpan(span, start);
            push(TokenKind::Operator, span, text);
            continue;
        }
        case ':': {
            c.advance();
            auto text = closeSpan(span, start);
            push(TokenKind::Operator, span, text);
            continue;
        }
        default: {
            c.advance();
            closeSpan(span, start);
            error(span, std::string("unexpected character '") + ch + "'");
            continue;
        }
        }
    }

    // trailing separator is never significant
    while (!out.tokens.empty() && out.tokens.back().kind == TokenKind::Separator) out.tokens.pop_back();
    return out;
}

} // namespace qtype
