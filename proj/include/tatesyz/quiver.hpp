#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tatesyz/field.hpp"

namespace tatesyz {

struct Arrow {
    std::string label;
    int source = 0;  // vertex index
    int target = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& name) const {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        return -1;
    }
    int arrow_index(const std::string& name) const {
        for (std::size_t i = 0; i < arrows.size(); ++i)
            if (arrows[i].label == name) return static_cast<int>(i);
        return -1;
    }
};

/// A path stored in application order: arrows[0] is applied first.
/// The written form a*b*a (composition order, rightmost applied first)
/// therefore corresponds to arrows = [a, b, a] reversed.
struct Path {
    std::vector<int> arrows;  // application order

    int length() const { return static_cast<int>(arrows.size()); }
};

inline int path_source(const Quiver& q, const Path& p) { return q.arrows[p.arrows.front()].source; }
inline int path_target(const Quiver& q, const Path& p) { return q.arrows[p.arrows.back()].target; }

inline bool path_composable(const Quiver& q, const Path& p) {
    for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i]].target != q.arrows[p.arrows[i + 1]].source) return false;
    return true;
}

/// Written form: labels in composition order (last applied first), '*'-joined.
inline std::string path_label(const Quiver& q, const Path& p) {
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += q.arrows[*it].label;
    }
    return s;
}

/// Coefficient kept as an exact integer fraction until a field is chosen.
struct Coeff {
    std::int64_t num = 1;
    std::int64_t den = 1;
};

struct RelationTerm {
    Coeff coeff;
    Path path;
};

/// A length-homogeneous linear combination of parallel paths, set to zero.
struct Relation {
    std::vector<RelationTerm> terms;

    int degree() const { return terms.front().path.length(); }
};

struct QuiverPresentation {
    Quiver quiver;
    std::vector<Relation> relations;
    FieldSpec field;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
    int line;
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

inline bool looks_numeric(const std::string& t) {
    return !t.empty() && (std::isdigit(static_cast<unsigned char>(t[0])) ||
                          ((t[0] == '-' || t[0] == '+') && t.size() > 1));
}

inline Coeff parse_coeff(const std::string& t, int line) {
    Coeff c;
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            c.num = std::stoll(t);
            c.den = 1;
        } else {
            c.num = std::stoll(t.substr(0, slash));
            c.den = std::stoll(t.substr(slash + 1));
        }
    } catch (...) {
        throw ParseError(line, "bad coefficient '" + t + "'");
    }
    if (c.den == 0) throw ParseError(line, "zero denominator in coefficient");
    return c;
}

// Parses one relation term: [coef *] arrow (* arrow)+, written in
// composition order; returns the path in application order.
inline RelationTerm parse_term(const Quiver& q, const std::string& text, int line) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : text) {
        if (ch == '*') {
            toks.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    if (toks.empty()) throw ParseError(line, "empty relation term");

    RelationTerm term;
    std::size_t start = 0;
    if (looks_numeric(toks[0])) {
        term.coeff = parse_coeff(toks[0], line);
        start = 1;
    }
    if (start == toks.size()) throw ParseError(line, "relation term has no path");
    std::vector<int> written;
    for (std::size_t i = start; i < toks.size(); ++i) {
        int a = q.arrow_index(toks[i]);
        if (a < 0) throw ParseError(line, "unknown arrow '" + toks[i] + "'");
        written.push_back(a);
    }
    term.path.arrows.assign(written.rbegin(), written.rend());
    return term;
}

inline Relation parse_relation(const Quiver& q, const std::string& rhs, int line) {
    Relation rel;
    // split on top-level + / - (a leading sign belongs to the first term)
    std::vector<std::pair<int, std::string>> pieces;  // sign, text
    int sign = 1;
    std::string cur;
    bool at_term_start = true;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        char ch = rhs[i];
        if ((ch == '+' || ch == '-') && !at_term_start) {
            pieces.emplace_back(sign, cur);
            cur.clear();
            sign = (ch == '-') ? -1 : 1;
            at_term_start = true;
        } else if ((ch == '+' || ch == '-') && at_term_start && cur.empty()) {
            sign *= (ch == '-') ? -1 : 1;
        } else {
            if (!std::isspace(static_cast<unsigned char>(ch))) at_term_start = false;
            cur.push_back(ch);
        }
    }
    pieces.emplace_back(sign, cur);

    for (auto& [sg, text] : pieces) {
        RelationTerm t = parse_term(q, text, line);
        t.coeff.num *= sg;
        if (!path_composable(q, t.path)) throw ParseError(line, "non-composable path in relation");
        rel.terms.push_back(std::move(t));
    }

    int deg = rel.terms.front().path.length();
    int src = path_source(q, rel.terms.front().path);
    int tgt = path_target(q, rel.terms.front().path);
    if (deg < 2) throw ParseError(line, "relation paths must have length >= 2");
    for (const auto& t : rel.terms) {
        if (t.path.length() != deg) throw ParseError(line, "relation is not length-homogeneous");
        if (path_source(q, t.path) != src || path_target(q, t.path) != tgt)
            throw ParseError(line, "relation paths are not parallel");
    }
    return rel;
}

}  // namespace detail

/// Parses the line-oriented .alg input grammar:
///   field Q | field F <p>
///   vertices v1 v2 ...
///   arrow <name> : <src> -> <tgt>
///   relation <linear combination of parallel equal-length paths>
/// '#' starts a comment; blank lines are ignored.
inline QuiverPresentation parse_presentation(const std::string& text) {
    QuiverPresentation pres;
    bool field_seen = false, vertices_seen = false;
    std::istringstream is(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        std::string line = (hash == std::string::npos) ? raw : raw.substr(0, hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "field") {
            if (toks.size() < 2) throw ParseError(line_no, "missing field");
            std::string spec = toks[1];
            for (std::size_t i = 2; i < toks.size(); ++i) spec += toks[i];
            try {
                pres.field = parse_field_spec(spec);
            } catch (const std::exception& e) {
                throw ParseError(line_no, e.what());
            }
            field_seen = true;
        } else if (kw == "vertices") {
            if (toks.size() < 2) throw ParseError(line_no, "no vertices given");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                if (pres.quiver.vertex_index(toks[i]) >= 0)
                    throw ParseError(line_no, "duplicate vertex '" + toks[i] + "'");
                pres.quiver.vertices.push_back(toks[i]);
            }
            vertices_seen = true;
        } else if (kw == "arrow") {
            std::string name, src, tgt;
            if (toks.size() == 6 && toks[2] == ":" && toks[4] == "->") {
                name = toks[1];
                src = toks[3];
                tgt = toks[5];
            } else if (toks.size() == 4 && toks[2] == ":" &&
                       toks[3].find("->") != std::string::npos) {
                name = toks[1];
                auto arr = toks[3].find("->");
                src = toks[3].substr(0, arr);
                tgt = toks[3].substr(arr + 2);
            } else {
                throw ParseError(line_no, "expected: arrow <name> : <src> -> <tgt>");
            }
            if (pres.quiver.arrow_index(name) >= 0 || pres.quiver.vertex_index(name) >= 0)
                throw ParseError(line_no, "duplicate label '" + name + "'");
            int s = pres.quiver.vertex_index(src);
            int t = pres.quiver.vertex_index(tgt);
            if (s < 0) throw ParseError(line_no, "unknown vertex '" + src + "'");
            if (t < 0) throw ParseError(line_no, "unknown vertex '" + tgt + "'");
            pres.quiver.arrows.push_back(Arrow{name, s, t});
        } else if (kw == "relation") {
            auto pos = line.find("relation");
            std::string rhs = line.substr(pos + 8);
            if (detail::split_ws(rhs).empty()) throw ParseError(line_no, "empty relation");
            pres.relations.push_back(detail::parse_relation(pres.quiver, rhs, line_no));
        } else {
            throw ParseError(line_no, "unknown directive '" + kw + "'");
        }
    }
    if (!field_seen) throw ParseError(line_no, "missing 'field' directive");
    if (!vertices_seen) throw ParseError(line_no, "missing 'vertices' directive");
    return pres;
}

inline bool is_monomial(const QuiverPresentation& p) {
    for (const auto& r : p.relations)
        if (r.terms.size() != 1) return false;
    return true;
}

/// Serializes a presentation back to the input grammar.
inline std::string presentation_to_string(const QuiverPresentation& p) {
    std::ostringstream os;
    if (p.field.kind == FieldSpec::Kind::Rationals)
        os << "field Q\n";
    else
        os << "field F " << p.field.p << "\n";
    os << "vertices";
    for (const auto& v : p.quiver.vertices) os << " " << v;
    os << "\n";
    for (const auto& a : p.quiver.arrows)
        os << "arrow " << a.label << " : " << p.quiver.vertices[a.source] << " -> "
           << p.quiver.vertices[a.target] << "\n";
    for (const auto& r : p.relations) {
        os << "relation ";
        bool first = true;
        for (const auto& t : r.terms) {
            std::int64_t num = t.coeff.num;
            if (!first) {
                os << (num < 0 ? " - " : " + ");
                if (num < 0) num = -num;
            } else if (num < 0) {
                os << "-";
                num = -num;
            }
            first = false;
            if (num != 1 || t.coeff.den != 1) {
                os << num;
                if (t.coeff.den != 1) os << "/" << t.coeff.den;
                os << "*";
            }
            os << path_label(p.quiver, t.path);
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace tatesyz
