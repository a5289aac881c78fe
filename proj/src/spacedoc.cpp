#include "finitop/spacedoc.hpp"

#include <algorithm>
#include <cctype>

#include "finitop/catalog.hpp"

namespace finitop::dsl {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_spaces() {
        while (!done() && (peek() == ' ' || peek() == '\t')) advance();
    }
    void skip_to_eol() {
        while (!done() && peek() != '\n') advance();
    }
};

std::string read_word(Cursor& c) {
    std::string w;
    while (!c.done() && !std::isspace(static_cast<unsigned char>(c.peek()))) {
        w += c.peek();
        c.advance();
    }
    return w;
}

int read_int(Cursor& c, const char* what) {
    c.skip_spaces();
    const int line = c.line, col = c.col;
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits += c.peek();
        c.advance();
    }
    if (digits.empty()) throw SyntaxError(line, col, std::string("expected ") + what);
    return std::stoi(digits);
}

PointSet read_set_literal(Cursor& c) {
    c.skip_spaces();
    if (c.done() || c.peek() != '{')
        throw SyntaxError(c.line, c.col, "expected '{' to open a set literal");
    c.advance();
    PointSet out;
    c.skip_spaces();
    if (!c.done() && c.peek() == '}') {
        c.advance();
        return out;
    }
    while (true) {
        const int p = read_int(c, "a point index");
        if (p >= kMaxPoints) throw SemanticError(c.line, c.col, "point index too large");
        out = out.with(p);
        c.skip_spaces();
        if (!c.done() && c.peek() == ',') {
            c.advance();
            continue;
        }
        if (!c.done() && c.peek() == '}') {
            c.advance();
            return out;
        }
        throw SyntaxError(c.line, c.col, "expected ',' or '}' in a set literal");
    }
}

void expect_eol(Cursor& c) {
    c.skip_spaces();
    if (!c.done() && c.peek() == '#') c.skip_to_eol();
    if (!c.done() && c.peek() != '\n')
        throw SyntaxError(c.line, c.col, "unexpected trailing input");
    if (!c.done()) c.advance();
}

}  // namespace

SpaceDoc parse_space(std::string_view text) {
    Cursor c{text};
    SpaceDoc doc;
    bool saw_points = false;
    bool saw_style = false;
    bool saw_name = false;

    const auto set_style = [&](SpaceDoc::Style style, int line, int col) {
        if (saw_style && doc.style != style)
            throw SemanticError(line, col, "construction styles cannot be mixed");
        doc.style = style;
        saw_style = true;
    };
    const auto require_points = [&](int line, int col) {
        if (!saw_points)
            throw SemanticError(line, col, "'points <n>' must come before construction lines");
    };
    const auto check_indices = [&](PointSet s, int line, int col) {
        for (int p : s.elements())
            if (p >= doc.points)
                throw SemanticError(line, col,
                                    "point index " + std::to_string(p) + " >= points " +
                                        std::to_string(doc.points));
    };

    while (!c.done()) {
        c.skip_spaces();
        if (c.done()) break;
        if (c.peek() == '\n') {
            c.advance();
            continue;
        }
        if (c.peek() == '#') {
            c.skip_to_eol();
            continue;
        }
        const int kw_line = c.line, kw_col = c.col;
        const std::string keyword = read_word(c);
        if (keyword == "space") {
            if (saw_name) throw SemanticError(kw_line, kw_col, "duplicate 'space' line");
            c.skip_spaces();
            const std::string name = read_word(c);
            if (name.empty()) throw SyntaxError(c.line, c.col, "expected a space name");
            doc.name = name;
            saw_name = true;
        } else if (keyword == "points") {
            if (saw_points) throw SemanticError(kw_line, kw_col, "duplicate 'points' line");
            const int n = read_int(c, "a point count");
            if (n > kMaxPoints)
                throw SemanticError(kw_line, kw_col,
                                    "point count exceeds the supported maximum of " +
                                        std::to_string(kMaxPoints));
            doc.points = n;
            saw_points = true;
        } else if (keyword == "open") {
            set_style(SpaceDoc::Style::Opens, kw_line, kw_col);
            require_points(kw_line, kw_col);
            const PointSet s = read_set_literal(c);
            check_indices(s, kw_line, kw_col);
            doc.sets.push_back(s);
        } else if (keyword == "subbase") {
            set_style(SpaceDoc::Style::Subbase, kw_line, kw_col);
            require_points(kw_line, kw_col);
            const PointSet s = read_set_literal(c);
            check_indices(s, kw_line, kw_col);
            doc.sets.push_back(s);
        } else if (keyword == "preorder") {
            set_style(SpaceDoc::Style::Preorder, kw_line, kw_col);
            require_points(kw_line, kw_col);
            c.skip_spaces();
            const int lo = read_int(c, "a point index");
            c.skip_spaces();
            if (c.done() || c.peek() != '<') throw SyntaxError(c.line, c.col, "expected '<='");
            c.advance();
            if (c.done() || c.peek() != '=') throw SyntaxError(c.line, c.col, "expected '<='");
            c.advance();
            const int hi = read_int(c, "a point index");
            for (int p : {lo, hi})
                if (p >= doc.points)
                    throw SemanticError(kw_line, kw_col,
                                        "point index " + std::to_string(p) + " >= points " +
                                            std::to_string(doc.points));
            doc.preorder.emplace_back(lo, hi);
        } else if (keyword == "catalog") {
            set_style(SpaceDoc::Style::Catalog, kw_line, kw_col);
            if (saw_points)
                throw SemanticError(kw_line, kw_col, "catalog documents take no 'points' line");
            c.skip_spaces();
            const std::string name = read_word(c);
            if (name.empty()) throw SyntaxError(c.line, c.col, "expected a catalog family name");
            if (!catalog::DescribedSpace::by_name(name))
                throw SemanticError(kw_line, kw_col, "unknown catalog family '" + name + "'");
            doc.catalog_name = name;
        } else {
            throw SyntaxError(kw_line, kw_col,
                              "unknown keyword '" + keyword +
                                  "' (expected space, points, open, subbase, preorder or "
                                  "catalog)");
        }
        expect_eol(c);
    }

    if (doc.is_catalog()) {
        if (saw_points)
            throw SemanticError(c.line, c.col, "catalog documents take no 'points' line");
        return doc;
    }
    if (!saw_points) throw SemanticError(c.line, c.col, "missing 'points <n>' line");

    // Canonical payload: sorted, duplicate-free.
    std::sort(doc.sets.begin(), doc.sets.end());
    doc.sets.erase(std::unique(doc.sets.begin(), doc.sets.end()), doc.sets.end());
    std::sort(doc.preorder.begin(), doc.preorder.end());
    doc.preorder.erase(std::unique(doc.preorder.begin(), doc.preorder.end()), doc.preorder.end());
    return doc;
}

std::string emit_space(const SpaceDoc& doc) {
    std::string out = "space " + doc.name + "\n";
    if (doc.is_catalog()) {
        out += "catalog " + doc.catalog_name + "\n";
        return out;
    }
    out += "points " + std::to_string(doc.points) + "\n";
    switch (doc.style) {
        case SpaceDoc::Style::Opens:
            for (PointSet s : doc.sets) out += "open " + s.to_string() + "\n";
            break;
        case SpaceDoc::Style::Subbase:
            for (PointSet s : doc.sets) out += "subbase " + s.to_string() + "\n";
            break;
        case SpaceDoc::Style::Preorder:
            for (auto [lo, hi] : doc.preorder)
                out += "preorder " + std::to_string(lo) + "<=" + std::to_string(hi) + "\n";
            break;
        case SpaceDoc::Style::Catalog:
            break;
    }
    return out;
}

FinSpace realize_finite(const SpaceDoc& doc) {
    if (doc.is_catalog())
        throw SemanticError(1, 1, "document refers to a catalog family, not a finite space");
    switch (doc.style) {
        case SpaceDoc::Style::Opens:
            return FinSpace::from_opens(doc.points, SetFamily(doc.sets));
        case SpaceDoc::Style::Subbase:
            return FinSpace::from_subbase(doc.points, SetFamily(doc.sets));
        case SpaceDoc::Style::Preorder:
            return FinSpace::from_preorder(doc.points, doc.preorder);
        case SpaceDoc::Style::Catalog:
            break;
    }
    throw SemanticError(1, 1, "unsupported document style");
}

SpaceDoc doc_for_space(const FinSpace& space, std::string name) {
    SpaceDoc doc;
    doc.name = std::move(name);
    doc.style = SpaceDoc::Style::Opens;
    doc.points = space.points();
    doc.sets.assign(space.opens().begin(), space.opens().end());
    return doc;
}

}  // namespace finitop::dsl
