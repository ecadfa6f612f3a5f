#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "json.hpp"

#include "bijections.hpp"
#include "cluster.hpp"
#include "exceptional_sequence.hpp"
#include "forest.hpp"
#include "genfun.hpp"
#include "interval_module.hpp"

// Canonical text and JSON forms of every object the tools exchange. The
// renderers are byte-deterministic; the parsers report the offset of the
// first offending character.

namespace excseq {

namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at offset " + std::to_string(pos));
    }
    bool done() const { return pos >= text.size(); }
    char peek() const { return done() ? '\0' : text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        if (peek() == '-') ++pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || (text[start] == '-' && pos == start + 1)) fail("expected integer");
        return std::stoi(text.substr(start, pos - start));
    }
};

}  // namespace detail

// ---- modules and sequences ----

inline std::string render_module(const IntervalModule& m) {
    return "M(" + std::to_string(m.a) + "," + std::to_string(m.b) + ")";
}

// Accepts M(a,b) and the simple shorthand S(a).
inline IntervalModule parse_module_at(detail::Cursor& cur, int n) {
    cur.skip_ws();
    const char kind = cur.peek();
    if (kind != 'M' && kind != 'S') cur.fail("expected 'M' or 'S'");
    ++cur.pos;
    cur.expect('(');
    const int a = cur.integer();
    int b = a;
    cur.skip_ws();
    if (kind == 'M') {
        cur.expect(',');
        b = cur.integer();
        cur.skip_ws();
    }
    cur.expect(')');
    return IntervalModule(a, b, n);
}

inline std::string render_ces(const ExceptionalSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.objects.size(); ++i) {
        if (i) out += ";";
        out += render_module(seq.objects[i]);
    }
    return out;
}

// The rank is the number of modules (complete sequences only).
inline ExceptionalSequence parse_ces(const std::string& text) {
    int count = 1;
    for (char c : text)
        if (c == ';') ++count;
    detail::Cursor cur{text};
    ExceptionalSequence seq(count);
    for (int i = 0; i < count; ++i) {
        seq.objects.push_back(parse_module_at(cur, count));
        cur.skip_ws();
        if (i + 1 < count) cur.expect(';');
    }
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing input");
    return seq;
}

// ---- integer lists ----

inline std::string render_int_list(const std::vector<int>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

inline std::vector<int> parse_int_list(const std::string& text, char sep) {
    detail::Cursor cur{text};
    std::vector<int> out;
    cur.skip_ws();
    if (cur.done()) return out;
    for (;;) {
        out.push_back(cur.integer());
        cur.skip_ws();
        if (cur.done()) break;
        cur.expect(sep);
    }
    return out;
}

inline std::string render_parking(const ParkingFunction& p) { return render_int_list(p, ','); }
inline std::string render_prufer(const PruferCode& c) { return render_int_list(c, ','); }
inline std::string render_braid_word(const BraidWord& w) { return render_int_list(w, ' '); }

inline ParkingFunction parse_parking(const std::string& text) {
    auto p = parse_int_list(text, ',');
    if (!is_parking_function(p))
        throw std::invalid_argument("payload violates the parking property");
    return p;
}

inline PruferCode parse_prufer(const std::string& text) {
    auto code = parse_int_list(text, ',');
    const int n = static_cast<int>(code.size()) + 1;
    for (int e : code)
        if (e < 0 || e > n)
            throw std::invalid_argument("prufer entry out of range 0..n");
    return code;
}

inline BraidWord parse_braid_word(const std::string& text) {
    detail::Cursor cur{text};
    BraidWord out;
    cur.skip_ws();
    while (!cur.done()) {
        out.push_back(cur.integer());
        cur.skip_ws();
    }
    return out;
}

// ---- factorizations ----

inline std::string render_factorization(const TranspositionFactorization& fac) {
    std::string out;
    for (std::size_t i = 0; i < fac.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(fac[i].first) + "-" + std::to_string(fac[i].second);
    }
    return out;
}

inline TranspositionFactorization parse_factorization(const std::string& text) {
    detail::Cursor cur{text};
    TranspositionFactorization fac;
    cur.skip_ws();
    while (!cur.done()) {
        const int x = cur.integer();
        cur.expect('-');
        const int y = cur.integer();
        fac.emplace_back(x, y);
        cur.skip_ws();
    }
    return fac;
}

// ---- signed objects and clusters ----

inline std::string render_signed(const SignedObject& s) {
    return render_module(s.module) + (s.shifted ? "[1]" : "");
}

inline SignedObject parse_signed_at(detail::Cursor& cur, int n) {
    SignedObject out;
    out.module = parse_module_at(cur, n);
    cur.skip_ws();
    if (cur.peek() == '[') {
        ++cur.pos;
        const int shift = cur.integer();
        if (shift != 1) cur.fail("only the shift [1] is supported");
        cur.expect(']');
        out.shifted = true;
    }
    return out;
}

inline std::string render_signed_list(const std::vector<SignedObject>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ";";
        out += render_signed(items[i]);
    }
    return out;
}

inline std::vector<SignedObject> parse_signed_list(const std::string& text) {
    int count = 1;
    for (char c : text)
        if (c == ';') ++count;
    detail::Cursor cur{text};
    std::vector<SignedObject> items;
    for (int i = 0; i < count; ++i) {
        items.push_back(parse_signed_at(cur, count));
        cur.skip_ws();
        if (i + 1 < count) cur.expect(';');
    }
    cur.skip_ws();
    if (!cur.done()) cur.fail("trailing input");
    return items;
}

// ---- JSON forms ----

inline nlohmann::json module_to_json(const IntervalModule& m) {
    return nlohmann::json{{"a", m.a}, {"b", m.b}};
}

inline std::string render_forest_json(const RootedLabeledForest& f) {
    nlohmann::json j;
    j["n"] = f.n;
    j["parent"] = f.parent;
    return j.dump();
}

inline RootedLabeledForest forest_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("parent"))
        throw std::invalid_argument("forest JSON must be {\"n\":int,\"parent\":[...]}");
    const int n = j.at("n").get<int>();
    const auto parent = j.at("parent").get<std::vector<int>>();
    return RootedLabeledForest(n, parent);
}

inline RootedLabeledForest parse_forest_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("forest JSON parse failure: ") + e.what());
    }
    return forest_from_json(j);
}

inline std::string render_ces_json(const ExceptionalSequence& seq) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : seq.objects) arr.push_back(module_to_json(m));
    return arr.dump();
}

inline std::string render_cluster_json(const std::vector<SignedObject>& items) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& it : items)
        arr.push_back(nlohmann::json{{"a", it.module.a}, {"b", it.module.b}, {"shifted", it.shifted}});
    return arr.dump();
}

inline std::string render_poly_json(const TrivariatePolynomial& poly) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [e, c] : poly.terms)
        arr.push_back(nlohmann::json::array({e[0], e[1], e[2], c}));
    return arr.dump();
}

// ---- polynomials, text form ----

// Terms sorted by exponents, every exponent written out: "2 a^1 b^0 c^2".
inline std::string render_poly_text(const TrivariatePolynomial& poly) {
    if (poly.terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : poly.terms) {
        if (!first) out += " + ";
        first = false;
        out += std::to_string(c) + " a^" + std::to_string(e[0]) + " b^" + std::to_string(e[1]) +
               " c^" + std::to_string(e[2]);
    }
    return out;
}

// ---- DOT (documentation output, forests only) ----

inline std::string forest_to_dot(const RootedLabeledForest& f) {
    std::string out = "digraph forest {\n  rankdir=BT;\n";
    for (int v = 1; v <= f.n; ++v) {
        out += "  " + std::to_string(v);
        if (f.is_root(v)) out += " [style=filled]";
        out += ";\n";
    }
    for (int v = 1; v <= f.n; ++v)
        if (!f.is_root(v))
            out += "  " + std::to_string(v) + " -> " + std::to_string(f.parent_of(v)) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace excseq
