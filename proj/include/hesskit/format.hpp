#ifndef HESSKIT_FORMAT_HPP
#define HESSKIT_FORMAT_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dimension_pairs.hpp"
#include "error.hpp"
#include "filling.hpp"
#include "hessenberg.hpp"
#include "monomial.hpp"
#include "polynomial.hpp"
#include "regnilp.hpp"
#include "shape.hpp"
#include "springer.hpp"
#include "tree.hpp"

// Text, JSON and DOT renderings shared by the CLI and the golden tests.
namespace hesskit::io {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

inline int parse_int(std::string_view s, std::string_view what)
{
    const std::string t = trim(s);
    if (t.empty())
        throw InvalidInput("empty " + std::string(what));
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw InvalidInput("bad " + std::string(what) + " '" + t + "'");
    }
    if (used != t.size() || v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw InvalidInput("bad " + std::string(what) + " '" + t + "'");
    return static_cast<int>(v);
}

} // namespace detail

/// "3,3,3,4" -> {3,3,3,4}.
inline std::vector<int> parse_int_list(std::string_view s)
{
    std::vector<int> out;
    for (const auto& part : detail::split(s, ','))
        out.push_back(detail::parse_int(part, "integer"));
    return out;
}

inline std::string join(const std::vector<int>& v, std::string_view sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

/// A partition when the rows allow it, a composition otherwise.
inline Shape shape_from_rows(std::vector<int> rows)
{
    const bool partition = !rows.empty() && std::all_of(rows.begin(), rows.end(), [](int r) { return r > 0; })
                           && std::is_sorted(rows.rbegin(), rows.rend());
    return partition ? Shape::partition(std::move(rows)) : Shape::composition(std::move(rows));
}

inline Shape parse_shape(std::string_view s) { return shape_from_rows(parse_int_list(s)); }

// ---- monomials ----------------------------------------------------------

/// "x2*x4^2"; the empty monomial is "1".
inline std::string to_string(const Monomial& m)
{
    std::string out;
    for (int i = 1; i <= m.nvars(); ++i) {
        const int e = m.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += 'x' + std::to_string(i);
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

/// Parses "1" or a '*'-separated product of "xK" / "xK^E" over nvars
/// variables. Repeated factors multiply.
inline Monomial parse_monomial(std::string_view text, int nvars)
{
    const std::string s = detail::trim(text);
    Monomial m(nvars);
    if (s == "1")
        return m;
    if (s.empty())
        throw InvalidInput("empty monomial");
    for (const auto& raw : detail::split(s, '*')) {
        const std::string f = detail::trim(raw);
        if (f.size() < 2 || f[0] != 'x')
            throw InvalidInput("bad monomial factor '" + f + "'");
        const auto caret = f.find('^');
        const int var = detail::parse_int(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1),
                                          "variable index");
        const int exp = caret == std::string::npos ? 1 : detail::parse_int(f.substr(caret + 1), "exponent");
        if (var < 1 || var > nvars)
            throw InvalidInput("variable x" + std::to_string(var) + " outside x1..x" + std::to_string(nvars));
        if (exp < 0)
            throw InvalidInput("negative exponent in '" + f + "'");
        m.set_exponent(var, m.exponent(var) + exp);
    }
    return m;
}

inline json to_json(const Monomial& m) { return json(std::vector<int>(m.exponents().begin(), m.exponents().end())); }

inline Monomial monomial_from_json(const json& j) { return Monomial(j.get<std::vector<int>>()); }

// ---- polynomials --------------------------------------------------------

/// Terms in descending lex: "x2^2 + x2*x3 - 3*x4"; zero is "0".
inline std::string to_string(const poly::Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool neg = c < 0;
        const poly::Integer mag = neg ? poly::Integer(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += mag.str();
        else if (mag == 1)
            out += to_string(m);
        else
            out += mag.str() + "*" + to_string(m);
    }
    return out;
}

/// Inverse of to_string(Polynomial). Accepts "+"/"-" separated terms, each
/// an optional integer coefficient, optionally followed by "*" and a
/// monomial.
inline poly::Polynomial parse_polynomial(std::string_view text, int nvars)
{
    const std::string s = detail::trim(text);
    if (s.empty())
        throw InvalidInput("empty polynomial");
    poly::Polynomial p(nvars);
    std::size_t i = 0;
    bool expect_term = true;
    int sign = 1;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -sign : sign;
            expect_term = true;
            ++i;
            continue;
        }
        if (!expect_term)
            throw InvalidInput("missing operator in polynomial '" + s + "'");
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-')
            ++j;
        const std::string term = detail::trim(std::string_view(s).substr(i, j - i));
        poly::Integer coef = 1;
        std::string mono = term;
        if (!term.empty() && std::isdigit(static_cast<unsigned char>(term[0]))) {
            std::size_t k = 0;
            while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k])))
                ++k;
            coef = poly::Integer(term.substr(0, k));
            std::string rest = detail::trim(std::string_view(term).substr(k));
            if (rest.empty())
                mono = "1";
            else if (rest[0] == '*')
                mono = rest.substr(1);
            else
                throw InvalidInput("bad polynomial term '" + term + "'");
        }
        p.add_term(parse_monomial(mono, nvars), sign * coef);
        sign = 1;
        expect_term = false;
        i = j;
    }
    if (expect_term)
        throw InvalidInput("polynomial ends with an operator");
    return p;
}

/// [{"exps": [...], "coef": c}, ...]; coefficients outside 64 bits are strings.
inline json to_json(const poly::Polynomial& p)
{
    json out = json::array();
    for (const auto& [m, c] : p.terms()) {
        json t;
        t["exps"] = std::vector<int>(m.exponents().begin(), m.exponents().end());
        if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
            t["coef"] = static_cast<std::int64_t>(c);
        else
            t["coef"] = c.str();
        out.push_back(std::move(t));
    }
    return out;
}

inline poly::Polynomial polynomial_from_json(const json& j, int nvars)
{
    poly::Polynomial p(nvars);
    for (const auto& t : j) {
        const json& c = t.at("coef");
        const poly::Integer coef = c.is_string() ? poly::Integer(c.get<std::string>()) : poly::Integer(c.get<std::int64_t>());
        p.add_term(Monomial(t.at("exps").get<std::vector<int>>()), coef);
    }
    return p;
}

// ---- fillings and pairs -------------------------------------------------

/// Entries written back to back when every value is a single digit, comma
/// separated otherwise.
inline std::string word_text(const std::vector<int>& w)
{
    const bool small = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v < 10; });
    if (!small)
        return join(w);
    std::string out;
    for (int v : w)
        out += static_cast<char>('0' + v);
    return out;
}

/// Rows joined by '/', e.g. "12/3"; a one-row filling is a bare word. Once
/// any value reaches 10, every row is comma separated.
inline std::string to_string(const Filling& t)
{
    bool small = true;
    for (const auto& row : t.rows())
        for (int v : row)
            small = small && v >= 0 && v < 10;
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0)
            out += '/';
        out += small ? word_text(t.rows()[r]) : join(t.rows()[r]);
    }
    return out;
}

/// Inverse of to_string(Filling). Without commas each digit is an entry,
/// unless that would give 10 or more entries: a filling that large holds
/// the value 10, so its rows must be single comma-free integers.
inline Filling parse_filling(std::string_view text)
{
    const std::string s = detail::trim(text);
    if (s.empty())
        throw InvalidInput("empty filling");
    const auto raw_rows = detail::split(s, '/');
    std::size_t digits = 0;
    for (char ch : s)
        if (std::isdigit(static_cast<unsigned char>(ch)))
            ++digits;
    const bool listed = s.find(',') != std::string::npos || digits >= 10;

    std::vector<std::vector<int>> rows;
    for (const auto& raw : raw_rows) {
        const std::string r = detail::trim(raw);
        std::vector<int> row;
        if (listed && !r.empty()) {
            row = parse_int_list(r);
        } else {
            for (char ch : r) {
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    throw InvalidInput("bad filling row '" + r + "'");
                row.push_back(ch - '0');
            }
        }
        rows.push_back(std::move(row));
    }
    std::vector<int> lengths;
    for (const auto& r : rows)
        lengths.push_back(static_cast<int>(r.size()));
    return Filling(shape_from_rows(std::move(lengths)), std::move(rows));
}

inline json to_json(const Filling& t)
{
    json j;
    j["shape"] = std::vector<int>(t.shape().rows().begin(), t.shape().rows().end());
    j["word"] = t.word();
    return j;
}

inline Filling filling_from_json(const json& j)
{
    const auto word = j.at("word").get<std::vector<int>>();
    return Filling::from_word(shape_from_rows(j.at("shape").get<std::vector<int>>()), word);
}

/// "(1,3),(2,3)"; the empty set is "-".
inline std::string to_string(const DimensionPairSet& d)
{
    if (d.size() == 0)
        return "-";
    std::string out;
    for (const auto& p : d.pairs()) {
        if (!out.empty())
            out += ',';
        out += '(' + std::to_string(p.a) + ',' + std::to_string(p.b) + ')';
    }
    return out;
}

inline json to_json(const DimensionPairSet& d)
{
    json out = json::array();
    for (const auto& p : d.pairs())
        out.push_back({p.a, p.b});
    return out;
}

/// One-line record for a filling: "word | pairs | monomial".
inline std::string filling_record(const HessenbergFunction& h, const Filling& t)
{
    const auto d = dimension_pairs(h, t);
    return to_string(t) + " | " + to_string(d) + " | " + to_string(monomial_of(d, h.n()));
}

inline json filling_record_json(const HessenbergFunction& h, const Filling& t)
{
    const auto d = dimension_pairs(h, t);
    json j = to_json(t);
    j["pairs"] = to_json(d);
    j["monomial"] = to_json(monomial_of(d, h.n()));
    return j;
}

// ---- trees --------------------------------------------------------------

inline std::string edge_text(const EdgeLabel& e, int nvars)
{
    if (e.var == 0 || e.exponent == 0)
        return "1";
    return to_string(Monomial::power(nvars, e.var, e.exponent));
}

inline std::string shape_text(const Shape& s) { return "(" + join({s.rows().begin(), s.rows().end()}) + ")"; }

/// Partial tableau rows joined by sep; empty boxes are '.'.
inline std::string partial_text(const springer::PartialTableau& p, std::string_view sep = "/")
{
    const bool small = p.shape().size() < 10;
    std::string out;
    for (std::size_t r = 0; r < p.cells().size(); ++r) {
        if (r > 0)
            out += sep;
        bool first = true;
        for (int v : p.cells()[r]) {
            if (!small && !first)
                out += ',';
            first = false;
            out += v == 0 ? "." : std::to_string(v);
        }
    }
    return out;
}

/// The word with a bullet at every h-permissible slot for the next value;
/// a complete word is printed bare.
inline std::string barless_text(const HessenbergFunction& h, const regnilp::BarlessTableau& w)
{
    const int len = static_cast<int>(w.word.size());
    if (len >= h.n())
        return word_text(w.word);
    const auto slots = regnilp::h_permissible_positions(h, w);
    const bool small = h.n() < 10;
    auto has_slot = [&](int p) { return std::find(slots.begin(), slots.end(), p) != slots.end(); };
    std::string out;
    for (int p = 0; p <= len; ++p) {
        if (has_slot(p))
            out += "•";
        else if (!small && p > 0)
            out += ',';
        if (p < len)
            out += std::to_string(w.word[static_cast<std::size_t>(p)]);
    }
    return out;
}

/// Renders trees; the label callback gives a vertex's text.
template <class Payload>
struct TreeView {
    const LabeledTree<Payload>& tree;
    std::string name;
    std::function<std::string(const typename LabeledTree<Payload>::Vertex&, std::string_view)> label;
};

namespace detail {

inline std::string dot_escape(std::string_view s)
{
    std::string out;
    for (char c : s) {
        if (c == '\n') {
            out += "\\n";
            continue;
        }
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace detail

template <class Payload>
std::string to_dot(const TreeView<Payload>& view)
{
    const auto& t = view.tree;
    std::ostringstream os;
    os << "digraph " << view.name << " {\n";
    os << "  node [shape=plaintext];\n";
    std::vector<std::string> levels;
    for (const auto& v : t.vertices())
        if (std::find(levels.begin(), levels.end(), v.level) == levels.end())
            levels.push_back(v.level);
    for (const auto& v : t.vertices())
        os << "  \"" << v.id << "\" [label=\"" << detail::dot_escape(view.label(v, "\n")) << "\"];\n";
    for (const auto& v : t.vertices())
        if (v.parent)
            os << "  \"" << t.vertex(*v.parent).id << "\" -> \"" << v.id << "\" [label=\""
               << edge_text(v.edge, t.nvars()) << "\"];\n";
    for (const auto& lv : levels) {
        os << "  { rank=same;";
        for (std::size_t i : t.level(lv))
            os << " \"" << t.vertex(i).id << "\";";
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

template <class Payload>
json to_json(const TreeView<Payload>& view)
{
    const auto& t = view.tree;
    json out;
    out["kind"] = view.name;
    json vs = json::array();
    for (const auto& v : t.vertices()) {
        json j;
        j["id"] = v.id;
        j["level"] = v.level;
        j["label"] = view.label(v, "/");
        j["parent"] = v.parent ? json(t.vertex(*v.parent).id) : json(nullptr);
        j["edge"] = v.parent ? json(edge_text(v.edge, t.nvars())) : json(nullptr);
        j["monomial"] = to_json(v.monomial);
        vs.push_back(std::move(j));
    }
    out["vertices"] = std::move(vs);
    return out;
}

/// Indented outline: one vertex per line, "edge: label" under its parent.
template <class Payload>
std::string to_plain(const TreeView<Payload>& view)
{
    const auto& t = view.tree;
    std::ostringstream os;
    for (const auto& v : t.vertices()) {
        os << std::string(static_cast<std::size_t>(2 * v.depth), ' ');
        os << "Level " << v.level << ": ";
        if (v.parent)
            os << "[" << edge_text(v.edge, t.nvars()) << "] ";
        os << view.label(v, "/") << "\n";
    }
    return os.str();
}

inline TreeView<Shape> gp_view(const LabeledTree<Shape>& t)
{
    return {t, "gp_tree", [](const LabeledTree<Shape>::Vertex& v, std::string_view) {
                return v.payload ? shape_text(*v.payload) : to_string(v.monomial);
            }};
}

inline TreeView<springer::PartialTableau> modified_gp_view(const LabeledTree<springer::PartialTableau>& t)
{
    return {t, "modified_gp_tree", [](const LabeledTree<springer::PartialTableau>::Vertex& v, std::string_view sep) {
                return v.payload ? partial_text(*v.payload, sep) : to_string(v.monomial);
            }};
}

inline TreeView<std::monostate> h_view(const LabeledTree<std::monostate>& t)
{
    return {t, "h_tree", [](const LabeledTree<std::monostate>::Vertex& v, std::string_view) {
                return v.is_leaf() ? to_string(v.monomial) : std::string("•");
            }};
}

inline TreeView<regnilp::BarlessTableau> h_tableau_view(const HessenbergFunction& h,
                                                         const LabeledTree<regnilp::BarlessTableau>& t)
{
    return {t, "h_tableau_tree", [h](const LabeledTree<regnilp::BarlessTableau>::Vertex& v, std::string_view) {
                return v.payload ? barless_text(h, *v.payload) : to_string(v.monomial);
            }};
}

} // namespace hesskit::io

#endif
