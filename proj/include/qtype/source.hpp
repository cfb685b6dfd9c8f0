#pragma once

#include <cstdint>
#include <string>

namespace qtype {

/// Half-open character positions, 1-based; columns count code points.
struct SourceSpan {
    std::string file;
    int startLine = 1;
    int startCol = 1;
    int endLine = 1;
    int endCol = 1;

    bool operator==(const SourceSpan&) const = default;
};

inline SourceSpan joinSpans(const SourceSpan& a, const SourceSpan& b) {
    SourceSpan s = a;
    if (b.endLine > s.endLine || (b.endLine == s.endLine && b.endCol > s.endCol)) {
        s.endLine = b.endLine;
        s.endCol = b.endCol;
    }
    return s;
}

} // namespace qtype
