#include "stc/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "stc/errors.hpp"
#include "stc/gallai.hpp"

namespace stc {

namespace {

constexpr std::int64_t kIntMin = std::numeric_limits<int>::min();
constexpr std::int64_t kIntMax = std::numeric_limits<int>::max();

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

// Non-blank lines, split on whitespace; lines whose first token starts with
// `comment` are dropped.
std::vector<Line> tokenize(std::string_view text, char comment) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(pos, end - pos);
        ++number;
        pos = end + 1;
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
            }
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) {
                ++j;
            }
            if (j > i) {
                line.tokens.push_back(raw.substr(i, j - i));
            }
            i = j;
        }
        if (!line.tokens.empty() && line.tokens[0][0] != comment) {
            out.push_back(std::move(line));
        }
        if (end == text.size()) {
            break;
        }
    }
    return out;
}

std::int64_t to_int(std::string_view tok, int line, const char* what) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(tok) + "'");
    }
    return value;
}

int to_bounded(std::string_view tok, int line, const char* what, std::int64_t lo, std::int64_t hi) {
    const std::int64_t v = to_int(tok, line, what);
    if (v < lo || v > hi) {
        throw ParseError(line, std::string(what) + " " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                                   std::to_string(hi));
    }
    return static_cast<int>(v);
}

ColorSet parse_colors(std::string_view tok, int c, int line) {
    if (tok == "*") {
        return ColorSet::full(c);
    }
    if (tok == "-") {
        return {};
    }
    std::vector<Color> colors;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = tok.find(',', pos);
        const std::string_view item = tok.substr(pos, comma == std::string_view::npos ? tok.npos : comma - pos);
        colors.push_back(to_bounded(item, line, "color", 1, c));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return ColorSet(std::move(colors));
}

std::string colors_text(const ColorSet& s, int c) {
    if (s.empty()) {
        return "-";
    }
    if (s == ColorSet::full(c)) {
        return "*";
    }
    std::string out;
    for (const Color x : s) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(x);
    }
    return out;
}

std::string edge_text(const Graph& g, EdgeId e) {
    const Edge& ed = g.edge(e);
    return std::to_string(ed.u + 1) + " " + std::to_string(ed.v + 1);
}

void expect_arity(const Line& l, std::size_t lo, std::size_t hi, const char* what) {
    if (l.tokens.size() < lo || l.tokens.size() > hi) {
        throw ParseError(l.number, std::string("malformed ") + what + " line");
    }
}

} // namespace

AnyInstance parse_instance(std::string_view text) {
    const auto lines = tokenize(text, '#');
    if (lines.empty() || lines[0].tokens[0] != "p") {
        throw ParseError(lines.empty() ? 0 : lines[0].number, "expected header 'p <variant> <n> <m> <c> <k>'");
    }
    const Line& head = lines[0];
    expect_arity(head, 6, 6, "header");
    const std::string_view variant = head.tokens[1];
    if (variant != "mstc" && variant != "vlmstc" && variant != "elmstc") {
        throw ParseError(head.number, "unknown variant '" + std::string(variant) + "'");
    }
    const int n = to_bounded(head.tokens[2], head.number, "vertex count", 0, 1 << 24);
    const int m = to_bounded(head.tokens[3], head.number, "edge count", 0, 1 << 28);
    const int c = to_bounded(head.tokens[4], head.number, "color count", 1, 1 << 24);
    const int k = to_bounded(head.tokens[5], head.number, "budget", 0, 1 << 30);

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::map<std::pair<Vertex, Vertex>, ColorSet> lists;
    std::vector<ColorSet> lambda(static_cast<std::size_t>(n), ColorSet::full(c));
    std::vector<char> has_vl(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        const std::string_view tag = l.tokens[0];
        if (tag == "e") {
            expect_arity(l, 3, 4, "edge");
            const int u = to_bounded(l.tokens[1], l.number, "vertex", 1, n) - 1;
            const int v = to_bounded(l.tokens[2], l.number, "vertex", 1, n) - 1;
            if (u == v) {
                throw ParseError(l.number, "self-loop at vertex " + std::to_string(u + 1));
            }
            const auto key = std::minmax(u, v);
            if (lists.count(key)) {
                throw ParseError(l.number, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
            }
            ColorSet list = ColorSet::full(c);
            if (l.tokens.size() == 4) {
                if (variant != "elmstc" && l.tokens[3] != "*") {
                    throw ParseError(l.number, "edge lists are only allowed in elmstc");
                }
                list = parse_colors(l.tokens[3], c, l.number);
            }
            lists.emplace(key, list);
            pairs.emplace_back(u, v);
        } else if (tag == "vl") {
            if (variant != "vlmstc") {
                throw ParseError(l.number, "vertex lists are only allowed in vlmstc");
            }
            expect_arity(l, 3, 3, "vertex list");
            const int u = to_bounded(l.tokens[1], l.number, "vertex", 1, n) - 1;
            if (has_vl[u]) {
                throw ParseError(l.number, "second list for vertex " + std::to_string(u + 1));
            }
            has_vl[u] = 1;
            lambda[u] = parse_colors(l.tokens[2], c, l.number);
        } else if (tag == "p") {
            throw ParseError(l.number, "second header");
        } else {
            throw ParseError(l.number, "unknown line type '" + std::string(tag) + "'");
        }
    }
    if (static_cast<int>(pairs.size()) != m) {
        throw ParseError(head.number, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(pairs.size()));
    }
    Graph g = build_graph(n, pairs);
    if (variant == "mstc") {
        return MultiInstance{std::move(g), c, k};
    }
    if (variant == "vlmstc") {
        return VLInstance{std::move(g), c, k, std::move(lambda)};
    }
    std::vector<ColorSet> psi;
    for (const Edge& e : g.edges()) {
        psi.push_back(lists.at({e.u, e.v}));
    }
    return ELInstance{std::move(g), c, k, std::move(psi)};
}

std::string emit_instance(const AnyInstance& inst) {
    std::ostringstream out;
    const Graph& g = graph_of(inst);
    std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const char* tag = std::is_same_v<T, MultiInstance> ? "mstc" : std::is_same_v<T, VLInstance> ? "vlmstc" : "elmstc";
            out << "p " << tag << ' ' << g.num_vertices() << ' ' << g.num_edges() << ' ' << x.c << ' ' << x.k << '\n';
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
                out << "e " << edge_text(g, e);
                if constexpr (std::is_same_v<T, ELInstance>) {
                    out << ' ' << colors_text(x.psi[e], x.c);
                }
                out << '\n';
            }
            if constexpr (std::is_same_v<T, VLInstance>) {
                for (Vertex v = 0; v < g.num_vertices(); ++v) {
                    out << "vl " << v + 1 << ' ' << colors_text(x.lambda[v], x.c) << '\n';
                }
            }
        },
        inst);
    return out.str();
}

std::string emit_labeling(const Labeling& lab, const Graph& g) {
    std::ostringstream out;
    out << "s YES " << lab.weak_count() << '\n';
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        out << edge_text(g, e) << ' ' << lab.color_of[e] << '\n';
    }
    return out.str();
}

std::string emit_result(const SolveResult& r, const Graph& g) {
    return r.yes ? emit_labeling(*r.witness, g) : std::string("s NO\n");
}

std::optional<Labeling> parse_labeling(std::string_view text, const Graph& g) {
    const auto lines = tokenize(text, '#');
    if (lines.empty() || lines[0].tokens[0] != "s") {
        throw ParseError(lines.empty() ? 0 : lines[0].number, "expected 's YES <weak>' or 's NO'");
    }
    const Line& head = lines[0];
    if (head.tokens.size() == 2 && head.tokens[1] == "NO") {
        if (lines.size() > 1) {
            throw ParseError(lines[1].number, "no lines may follow 's NO'");
        }
        return std::nullopt;
    }
    if (head.tokens.size() != 3 || head.tokens[1] != "YES") {
        throw ParseError(head.number, "expected 's YES <weak>' or 's NO'");
    }
    const int weak = to_bounded(head.tokens[2], head.number, "weak count", 0, g.num_edges());
    Labeling lab{std::vector<Color>(static_cast<std::size_t>(g.num_edges()), 0)};
    std::vector<char> seen(static_cast<std::size_t>(g.num_edges()), 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        expect_arity(l, 3, 3, "labeling");
        const int u = to_bounded(l.tokens[0], l.number, "vertex", 1, g.num_vertices()) - 1;
        const int v = to_bounded(l.tokens[1], l.number, "vertex", 1, g.num_vertices()) - 1;
        const auto e = g.edge_id(u, v);
        if (!e) {
            throw ParseError(l.number, "no edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
        }
        if (seen[*e]) {
            throw ParseError(l.number, "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " labeled twice");
        }
        seen[*e] = 1;
        lab.color_of[*e] = to_bounded(l.tokens[2], l.number, "color", 0, 1 << 30);
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!seen[e]) {
            throw ParseError(lines.back().number, "edge " + edge_text(g, e) + " has no label");
        }
    }
    if (lab.weak_count() != weak) {
        throw ParseError(head.number, "header says " + std::to_string(weak) + " weak edges, labeling has " +
                                          std::to_string(lab.weak_count()));
    }
    return lab;
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
    const auto lines = tokenize(text, 'c');
    if (lines.empty() || lines[0].tokens[0] != "p") {
        throw ParseError(lines.empty() ? 0 : lines[0].number, "expected header 'p cnf <vars> <clauses>'");
    }
    const Line& head = lines[0];
    expect_arity(head, 4, 4, "header");
    if (head.tokens[1] != "cnf") {
        throw ParseError(head.number, "expected 'p cnf'");
    }
    CnfFormula f;
    f.num_vars = to_bounded(head.tokens[2], head.number, "variable count", 0, 1 << 24);
    const int m = to_bounded(head.tokens[3], head.number, "clause count", 0, 1 << 24);
    std::vector<Literal> pending;
    int last = head.number;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (l.tokens[0] == "%") {
            break;
        }
        last = l.number;
        for (const auto tok : l.tokens) {
            const int x = to_bounded(tok, l.number, "literal", -f.num_vars, f.num_vars);
            if (x != 0) {
                pending.push_back(Literal{std::abs(x) - 1, x > 0});
                continue;
            }
            if (pending.size() != 3) {
                throw ParseError(l.number, "clause has " + std::to_string(pending.size()) + " literals, expected 3");
            }
            const Clause cl{pending[0], pending[1], pending[2]};
            if (cl[0].var == cl[1].var || cl[0].var == cl[2].var || cl[1].var == cl[2].var) {
                throw ParseError(l.number, "clause repeats a variable");
            }
            f.clauses.push_back(cl);
            pending.clear();
        }
    }
    if (!pending.empty()) {
        throw ParseError(last, "last clause is not terminated by 0");
    }
    if (static_cast<int>(f.clauses.size()) != m) {
        throw ParseError(head.number, "header declares " + std::to_string(m) + " clauses, found " +
                                          std::to_string(f.clauses.size()));
    }
    return f;
}

std::string emit_dimacs_cnf(const CnfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const Clause& cl : f.clauses) {
        for (const Literal& lit : cl) {
            out << (lit.positive ? lit.var + 1 : -(lit.var + 1)) << ' ';
        }
        out << "0\n";
    }
    return out.str();
}

SetCoverInstance parse_setcover(std::string_view text) {
    const auto lines = tokenize(text, '#');
    SetCoverInstance sc;
    bool have_u = false;
    bool have_t = false;
    for (const Line& l : lines) {
        const std::string_view tag = l.tokens[0];
        if (tag == "u") {
            if (have_u) {
                throw ParseError(l.number, "second universe line");
            }
            have_u = true;
            std::set<int> seen;
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                const int x = to_bounded(l.tokens[i], l.number, "element", kIntMin, kIntMax);
                if (!seen.insert(x).second) {
                    throw ParseError(l.number, "universe repeats element " + std::to_string(x));
                }
                sc.universe.push_back(x);
            }
        } else if (tag == "f") {
            auto& set = sc.family.emplace_back();
            for (std::size_t i = 1; i < l.tokens.size(); ++i) {
                set.push_back(to_bounded(l.tokens[i], l.number, "element", kIntMin, kIntMax));
            }
        } else if (tag == "t") {
            if (have_t) {
                throw ParseError(l.number, "second t line");
            }
            expect_arity(l, 2, 2, "t");
            have_t = true;
            sc.t = to_bounded(l.tokens[1], l.number, "t", kIntMin, kIntMax);
        } else {
            throw ParseError(l.number, "unknown line type '" + std::string(tag) + "'");
        }
    }
    if (!have_u || !have_t) {
        throw ParseError(lines.empty() ? 0 : lines.back().number, "set cover input needs a 'u' line and a 't' line");
    }
    validate(sc);
    return sc;
}

std::string emit_setcover(const SetCoverInstance& sc) {
    std::ostringstream out;
    out << 'u';
    for (const int x : sc.universe) {
        out << ' ' << x;
    }
    out << '\n';
    for (const auto& set : sc.family) {
        out << 'f';
        for (const int x : set) {
            out << ' ' << x;
        }
        out << '\n';
    }
    out << "t " << sc.t << '\n';
    return out.str();
}

std::string emit_gallai(const Graph& g) {
    const GallaiGraph gal = gallai_graph(g);
    std::ostringstream out;
    out << "p gallai " << gal.base.num_vertices() << ' ' << gal.base.num_edges() << '\n';
    for (Vertex x = 0; x < gal.base.num_vertices(); ++x) {
        out << "v " << x + 1 << ' ' << edge_text(g, gal.to_edge[x]) << '\n';
    }
    for (const Edge& e : gal.base.edges()) {
        out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
    return out.str();
}

std::string emit_k1(const Graph& g) {
    const K1Result r = k1(g);
    std::ostringstream out;
    out << "k1 " << r.k1 << '\n';
    for (const Vertex e : r.cover) {
        out << "c " << edge_text(g, e) << '\n';
    }
    return out.str();
}

namespace {

std::string vertex_list(const std::vector<Vertex>& vs) {
    if (vs.empty()) {
        return "-";
    }
    std::string out;
    for (const Vertex v : vs) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(v + 1);
    }
    return out;
}

} // namespace

std::string emit_kernel_trace(const KernelResult& r, const Graph& input) {
    std::ostringstream out;
    const KernelTrace& t = r.trace;
    out << "# tau " << t.tau << '\n';
    if (!t.normalized_edges.empty()) {
        out << "# normalized";
        for (const EdgeId e : t.normalized_edges) {
            out << ' ' << input.edge(e).u + 1 << '-' << input.edge(e).v + 1;
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < t.applications.size(); ++i) {
        const RuleApplication& a = t.applications[i];
        out << "# rule " << i + 1 << " clique " << vertex_list(a.clique) << " tau " << a.tau << " boundary "
            << a.boundary_edges << " kept " << vertex_list(a.important) << " deleted "
            << vertex_list(a.deleted_vertices) << " k-" << a.budget_decrement << '\n';
    }
    if (t.trivially_no) {
        out << "# trivially-no\n";
    }
    out << "# reduced n " << r.reduced.g.num_vertices() << " tau " << r.reduced_tau << " k1 " << r.reduced_k1
        << " bound " << r.bound << (r.within_bound() ? " within" : " exceeded") << '\n';
    return out.str();
}

} // namespace stc
