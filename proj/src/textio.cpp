#include "fatpoints/textio.hpp"

#include <cctype>
#include <sstream>

#include "fatpoints/errors.hpp"

namespace fatpoints {

namespace {

// minimal cursor-based scanner with position-aware errors
struct Scanner {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c)
            throw Error(ErrorCode::Parse, std::string("expected '") + c + "' at position " +
                                              std::to_string(pos) + " in \"" + s + "\"");
        ++pos;
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw Error(ErrorCode::Parse, "expected integer at position " +
                                              std::to_string(start) + " in \"" + s + "\"");
        return std::stoll(s.substr(start, pos - start));
    }
};

} // namespace

Diagram parse_diagram(const std::string& text) {
    Scanner sc{text};
    if (sc.eof()) return Diagram{};
    if (sc.peek() == '[') {
        sc.expect('[');
        std::vector<LatticePoint> pts;
        if (sc.peek() != ']') {
            while (true) {
                sc.expect('(');
                std::int64_t x = sc.integer();
                sc.expect(',');
                std::int64_t y = sc.integer();
                sc.expect(')');
                pts.push_back({x, y});
                if (sc.peek() != ',') break;
                sc.expect(',');
            }
        }
        sc.expect(']');
        if (!sc.eof())
            throw Error(ErrorCode::Parse, "trailing characters at position " +
                                              std::to_string(sc.pos) + " in \"" + text + "\"");
        return Diagram(std::move(pts));
    }
    ColumnSpec spec;
    while (true) {
        std::int64_t count = sc.integer();
        std::int64_t offset = 0;
        if (sc.peek() == '^') {
            sc.expect('^');
            offset = sc.integer();
        }
        spec.columns.push_back({count, offset});
        if (sc.eof()) break;
        sc.expect(',');
    }
    return make_columns(spec);
}

std::string format_diagram(const Diagram& d) {
    if (auto cols = as_columns(d)) {
        if (cols->columns.empty()) return "[]";
        std::ostringstream out;
        for (std::size_t i = 0; i < cols->columns.size(); ++i) {
            if (i) out << ',';
            out << cols->columns[i].count << '^' << cols->columns[i].offset;
        }
        return out.str();
    }
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out << ',';
        out << '(' << d.points()[i].x << ',' << d.points()[i].y << ')';
    }
    out << ']';
    return out.str();
}

MultiplicityList parse_mults(const std::string& text) {
    Scanner sc{text};
    std::vector<std::int64_t> entries;
    if (sc.eof()) return MultiplicityList{};
    while (true) {
        std::int64_t m = sc.integer();
        std::int64_t k = 1;
        if (sc.peek() == 'x') {
            sc.expect('x');
            k = sc.integer();
        }
        if (m < 1 || k < 0)
            throw Error(ErrorCode::Parse, "invalid multiplicity term in \"" + text + "\"");
        for (std::int64_t i = 0; i < k; ++i) entries.push_back(m);
        if (sc.eof()) break;
        sc.expect(',');
    }
    return MultiplicityList(std::move(entries));
}

std::string format_mults(const MultiplicityList& m) {
    std::ostringstream out;
    const auto& e = m.entries();
    for (std::size_t i = 0; i < e.size();) {
        std::size_t j = i;
        while (j < e.size() && e[j] == e[i]) ++j;
        if (i) out << ',';
        out << e[i];
        if (j - i > 1) out << 'x' << (j - i);
        i = j;
    }
    return out.str();
}

} // namespace fatpoints
