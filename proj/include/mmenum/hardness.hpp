#pragma once

#include <array>
#include <cstdlib>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mmenum/graph.hpp"
#include "mmenum/matching.hpp"
#include "mmenum/oracle.hpp"

namespace mmenum {

/// CNF over variables 1..num_vars; literal +i is x_i, -i is ¬x_i.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    bool satisfied_by(const std::vector<bool>& assignment) const {
        for (const auto& clause : clauses) {
            bool any = false;
            for (int lit : clause) {
                bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
                any = any || (lit > 0 ? value : !value);
            }
            if (!any) {
                return false;
            }
        }
        return true;
    }
};

/// DIMACS CNF: 'c' comment lines, a "p cnf <vars> <clauses>" header, then
/// clauses as signed integers each terminated by 0 (free line breaks).
inline CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula phi;
    bool header = false;
    std::size_t expected = 0;
    std::vector<int> current;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = detail::trim(line);
        if (s.empty() || s.front() == 'c' || s.front() == '%') {
            continue;
        }
        auto toks = detail::split_ws(s);
        if (toks.front() == "p") {
            if (header) {
                throw parse_error("second problem line", lineno);
            }
            if (toks.size() != 4 || toks[1] != "cnf") {
                throw parse_error("expected \"p cnf <vars> <clauses>\"", lineno);
            }
            auto v = detail::parse_int<int>(toks[2]);
            auto c = detail::parse_int<long>(toks[3]);
            if (!v || !c || *v < 0 || *c < 0) {
                throw parse_error("malformed problem line", lineno);
            }
            phi.num_vars = *v;
            expected = static_cast<std::size_t>(*c);
            header = true;
            continue;
        }
        if (!header) {
            throw parse_error("clause before the problem line", lineno);
        }
        for (auto tok : toks) {
            auto lit = detail::parse_int<int>(tok);
            if (!lit) {
                throw parse_error("malformed literal \"" + std::string(tok) + "\"", lineno);
            }
            if (*lit == 0) {
                phi.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::abs(*lit) > phi.num_vars) {
                throw parse_error("literal " + std::to_string(*lit) + " exceeds the variable count", lineno);
            }
            current.push_back(*lit);
        }
    }
    if (!header) {
        throw parse_error("missing problem line", 0);
    }
    if (!current.empty()) {
        throw parse_error("last clause is not terminated by 0", lineno);
    }
    if (phi.clauses.size() != expected) {
        throw parse_error("header announces " + std::to_string(expected) + " clauses, found " +
                              std::to_string(phi.clauses.size()),
                          0);
    }
    return phi;
}

inline CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

inline void write_dimacs(std::ostream& out, const CnfFormula& phi) {
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (int lit : c) {
            out << lit << ' ';
        }
        out << "0\n";
    }
}

/// (graph, I, O) plus the gadget vertex map.
struct ExtensionInstance {
    Graph graph;
    std::vector<EdgeId> include;
    std::vector<EdgeId> exclude;
    std::vector<std::string> labels;                 // per vertex
    std::vector<std::array<Vertex, 3>> variables;    // x_i, x'_i, ¬x_i
    std::vector<std::vector<Vertex>> clause_paths;   // c1, d, c2[, d', c3]

    /// Vertex of the k-th literal (0-based) of clause j.
    Vertex literal_vertex(std::size_t j, std::size_t k) const { return clause_paths[j][2 * k]; }
};

/// Builds the extension instance for phi: a two-edge path per variable, a
/// path through the literal vertices per clause, and one forbidden cross
/// edge per literal occurrence joining x_i (or ¬x_i) to its clause vertex.
/// I is empty. Vertex ids are assigned gadget by gadget, so they survive
/// graph normalization unchanged.
inline ExtensionInstance build_extension_instance(const CnfFormula& phi) {
    ExtensionInstance inst;
    std::vector<std::pair<Label, Label>> pairs;
    Vertex next = 0;
    for (int i = 1; i <= phi.num_vars; ++i) {
        std::array<Vertex, 3> v{next, next + 1, next + 2};
        next += 3;
        inst.variables.push_back(v);
        inst.labels.push_back("x" + std::to_string(i));
        inst.labels.push_back("x" + std::to_string(i) + "'");
        inst.labels.push_back("~x" + std::to_string(i));
        pairs.emplace_back(v[0], v[1]);
        pairs.emplace_back(v[1], v[2]);
    }
    std::vector<std::pair<Label, Label>> cross;
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        const auto& clause = phi.clauses[j];
        if (clause.size() < 2 || clause.size() > 3) {
            throw usage_error("clause " + std::to_string(j + 1) + " has " + std::to_string(clause.size()) +
                              " literals; only 2 or 3 are supported");
        }
        for (std::size_t a = 0; a < clause.size(); ++a) {
            if (clause[a] == 0 || std::abs(clause[a]) > phi.num_vars) {
                throw usage_error("clause " + std::to_string(j + 1) + " has an invalid literal");
            }
            for (std::size_t b = a + 1; b < clause.size(); ++b) {
                if (std::abs(clause[a]) == std::abs(clause[b])) {
                    throw usage_error("clause " + std::to_string(j + 1) + " repeats a variable");
                }
            }
        }
        auto tag = std::to_string(j + 1);
        std::vector<Vertex> path;
        std::vector<std::string> names = {"c" + tag + ".1", "d" + tag, "c" + tag + ".2"};
        if (clause.size() == 3) {
            names.push_back("d" + tag + "'");
            names.push_back("c" + tag + ".3");
        }
        for (auto& name : names) {
            path.push_back(next++);
            inst.labels.push_back(std::move(name));
        }
        for (std::size_t p = 0; p + 1 < path.size(); ++p) {
            pairs.emplace_back(path[p], path[p + 1]);
        }
        for (std::size_t k = 0; k < clause.size(); ++k) {
            int lit = clause[k];
            const auto& var = inst.variables[static_cast<std::size_t>(std::abs(lit) - 1)];
            cross.emplace_back(lit > 0 ? var[0] : var[2], path[2 * k]);
        }
        inst.clause_paths.push_back(std::move(path));
    }
    pairs.insert(pairs.end(), cross.begin(), cross.end());
    inst.graph = Graph::from_edges(std::span<const std::pair<Label, Label>>(pairs));
    for (const auto& [a, b] : cross) {
        inst.exclude.push_back(*inst.graph.find_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
    }
    std::sort(inst.exclude.begin(), inst.exclude.end());
    return inst;
}

namespace detail {

// The unique maximum matching of a gadget path that leaves `avoid` free,
// found by trying every subset of the path's edges.
inline std::vector<EdgeId> gadget_matching_avoiding(const Graph& g, const std::vector<Vertex>& path, Vertex avoid) {
    std::vector<EdgeId> path_edges;
    for (std::size_t p = 0; p + 1 < path.size(); ++p) {
        path_edges.push_back(*g.find_edge(path[p], path[p + 1]));
    }
    std::vector<std::vector<EdgeId>> best;
    std::size_t best_size = 0;
    for (unsigned mask = 0; mask < (1u << path_edges.size()); ++mask) {
        std::vector<EdgeId> pick;
        for (std::size_t i = 0; i < path_edges.size(); ++i) {
            if (mask >> i & 1u) {
                pick.push_back(path_edges[i]);
            }
        }
        if (!is_matching(g, pick)) {
            continue;
        }
        bool touches = false;
        for (EdgeId e : pick) {
            touches = touches || g.edge(e).touches(avoid);
        }
        if (touches) {
            continue;
        }
        if (pick.size() > best_size) {
            best.clear();
            best_size = pick.size();
        }
        if (pick.size() == best_size) {
            best.push_back(std::move(pick));
        }
    }
    if (best.size() != 1) {
        throw std::logic_error("gadget matching avoiding a literal vertex is not unique");
    }
    return best.front();
}

}  // namespace detail

/// Matching read off a satisfying assignment: {x_i, x'_i} for true
/// variables, {¬x_i, x'_i} for false ones, and per clause the unique maximum
/// gadget matching that leaves its first true literal vertex free.
inline Matching assignment_to_matching(const ExtensionInstance& inst, const CnfFormula& phi,
                                       const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(phi.num_vars)) {
        throw usage_error("assignment size does not match the variable count");
    }
    if (!phi.satisfied_by(assignment)) {
        throw usage_error("assignment does not satisfy the formula");
    }
    const Graph& g = inst.graph;
    std::vector<EdgeId> picked;
    for (std::size_t i = 0; i < inst.variables.size(); ++i) {
        const auto& v = inst.variables[i];
        picked.push_back(*g.find_edge(assignment[i] ? v[0] : v[2], v[1]));
    }
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        const auto& clause = phi.clauses[j];
        std::size_t k = 0;
        while (true) {
            int lit = clause[k];
            bool value = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
            if (lit > 0 ? value : !value) {
                break;
            }
            ++k;
        }
        auto part = detail::gadget_matching_avoiding(g, inst.clause_paths[j], inst.literal_vertex(j, k));
        picked.insert(picked.end(), part.begin(), part.end());
    }
    Matching m = Matching::from_edges(g, std::span<const EdgeId>(picked));
    for (EdgeId e : inst.exclude) {
        if (m.contains(e)) {
            throw std::logic_error("constructed matching uses a forbidden edge");
        }
    }
    return m;
}

/// Maximal matchings with I ⊆ M and M ∩ O = ∅ exist. Branches on every edge
/// outside I ∪ O and tests maximality in g at the leaves; the size guard
/// applies to those free edges only.
inline bool brute_force_extension(const Graph& g, std::span<const EdgeId> include, std::span<const EdgeId> exclude,
                                  EdgeId edge_limit = kOracleEdgeLimit) {
    std::vector<char> fixed(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : exclude) {
        if (!g.valid_edge(e)) {
            throw usage_error("edge id " + std::to_string(e) + " out of range");
        }
        fixed[e] = 1;
    }
    for (EdgeId e : include) {
        if (!g.valid_edge(e)) {
            throw usage_error("edge id " + std::to_string(e) + " out of range");
        }
        if (fixed[e] == 1) {
            throw usage_error("include and exclude sets intersect");
        }
        fixed[e] = 2;
    }
    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!fixed[e]) {
            free_edges.push_back(e);
        }
    }
    if (free_edges.size() > static_cast<std::size_t>(edge_limit)) {
        throw usage_error("brute force limited to " + std::to_string(edge_limit) + " free edges, instance has " +
                          std::to_string(free_edges.size()));
    }
    if (!is_matching(g, include)) {
        return false;
    }
    Matching m = Matching::from_edges(g, include);
    auto search = [&](auto& self, std::size_t i) -> bool {
        if (i == free_edges.size()) {
            return is_maximal(g, m);
        }
        EdgeId e = free_edges[i];
        if (m.can_add(g, e)) {
            m.add(g, e);
            bool found = self(self, i + 1);
            m.remove(g, e);
            if (found) {
                return true;
            }
        }
        return self(self, i + 1);
    };
    return search(search, 0);
}

/// Satisfying assignment by trying all 2^n of them, lowest binary value first.
inline std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& phi) {
    if (phi.num_vars > 24) {
        throw usage_error("brute-force SAT limited to 24 variables");
    }
    auto n = static_cast<unsigned>(phi.num_vars);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<bool> a(n);
        for (unsigned i = 0; i < n; ++i) {
            a[i] = (mask >> i & 1u) != 0;
        }
        if (phi.satisfied_by(a)) {
            return a;
        }
    }
    return std::nullopt;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (side[s] != -1) {
            continue;
        }
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                Vertex w = g.edge(e).other(v);
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

/// Edge list, then "I:" and "O:" sections of "u v" lines. Vertex names go in
/// leading comments.
inline void write_instance(std::ostream& out, const ExtensionInstance& inst) {
    const Graph& g = inst.graph;
    out << "# maximal matching extension instance: " << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "# vertex " << g.label(v) << ' ' << inst.labels[static_cast<std::size_t>(v)] << '\n';
    }
    write_graph(out, g);
    out << "I:\n";
    for (EdgeId e : inst.include) {
        out << g.label(g.edge(e).u) << ' ' << g.label(g.edge(e).v) << '\n';
    }
    out << "O:\n";
    for (EdgeId e : inst.exclude) {
        out << g.label(g.edge(e).u) << ' ' << g.label(g.edge(e).v) << '\n';
    }
}

/// Reads write_instance() output back into (graph, I, O). Vertex names are
/// not restored; labels fall back to the numeric ids.
inline ExtensionInstance read_instance(std::istream& in) {
    std::ostringstream edges;
    std::vector<std::pair<std::string, std::size_t>> inc;
    std::vector<std::pair<std::string, std::size_t>> exc;
    int section = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto s = detail::trim(line);
        if (s == "I:") {
            section = 1;
            continue;
        }
        if (s == "O:") {
            section = 2;
            continue;
        }
        if (section == 0) {
            edges << line << '\n';
        } else if (!s.empty() && s.front() != '#') {
            (section == 1 ? inc : exc).emplace_back(std::string(s), lineno);
        }
    }
    ExtensionInstance inst;
    inst.graph = parse_graph(edges.str());
    auto lookup = [&](const std::string& s, std::size_t ln) {
        auto toks = detail::split_ws(s);
        if (toks.size() == 2) {
            auto a = detail::parse_int<Label>(toks[0]);
            auto b = detail::parse_int<Label>(toks[1]);
            if (a && b) {
                auto u = inst.graph.find_vertex(*a);
                auto v = inst.graph.find_vertex(*b);
                if (u && v) {
                    if (auto e = inst.graph.find_edge(*u, *v)) {
                        return *e;
                    }
                }
            }
        }
        throw parse_error("section entry is not an edge of the graph: \"" + s + "\"", ln);
    };
    for (const auto& [s, ln] : inc) {
        inst.include.push_back(lookup(s, ln));
    }
    for (const auto& [s, ln] : exc) {
        inst.exclude.push_back(lookup(s, ln));
    }
    for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
        inst.labels.push_back(std::to_string(inst.graph.label(v)));
    }
    return inst;
}

/// Random formula with 2- and 3-literal clauses over distinct variables in
/// which every variable occurs at most twice positively and at most once
/// negatively, which keeps the reduction graph at maximum degree three.
template <class Rng>
CnfFormula random_restricted_formula(Rng& rng, int max_vars, int max_clauses) {
    std::uniform_int_distribution<int> nv(1, max_vars);
    std::uniform_int_distribution<int> nc(1, max_clauses);
    CnfFormula phi;
    phi.num_vars = nv(rng);
    int clauses = nc(rng);
    std::vector<int> pos_left(static_cast<std::size_t>(phi.num_vars), 2);
    std::vector<int> neg_left(static_cast<std::size_t>(phi.num_vars), 1);
    for (int j = 0; j < clauses; ++j) {
        std::vector<int> open;
        for (int i = 0; i < phi.num_vars; ++i) {
            if (pos_left[i] + neg_left[i] > 0) {
                open.push_back(i);
            }
        }
        if (open.size() < 2) {
            break;
        }
        std::shuffle(open.begin(), open.end(), rng);
        std::size_t arity = std::min<std::size_t>(open.size(), std::bernoulli_distribution(0.5)(rng) ? 3 : 2);
        std::vector<int> clause;
        for (std::size_t k = 0; k < arity; ++k) {
            int i = open[k];
            bool negative;
            if (pos_left[i] == 0) {
                negative = true;
            } else if (neg_left[i] == 0) {
                negative = false;
            } else {
                negative = std::bernoulli_distribution(1.0 / 3.0)(rng);
            }
            (negative ? neg_left[i] : pos_left[i])--;
            clause.push_back(negative ? -(i + 1) : i + 1);
        }
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

/// Random formula with 2- and 3-literal clauses over distinct variables and
/// no occurrence limit. Variables may be unused.
template <class Rng>
CnfFormula random_formula(Rng& rng, int max_vars, int max_clauses) {
    std::uniform_int_distribution<int> nv(std::min(2, max_vars), max_vars);
    std::uniform_int_distribution<int> nc(1, max_clauses);
    CnfFormula phi;
    phi.num_vars = nv(rng);
    if (phi.num_vars < 2) {
        return phi;
    }
    int clauses = nc(rng);
    std::vector<int> vars(static_cast<std::size_t>(phi.num_vars));
    for (int i = 0; i < phi.num_vars; ++i) {
        vars[static_cast<std::size_t>(i)] = i + 1;
    }
    for (int j = 0; j < clauses; ++j) {
        std::shuffle(vars.begin(), vars.end(), rng);
        std::size_t arity = std::min<std::size_t>(vars.size(), std::bernoulli_distribution(0.5)(rng) ? 3 : 2);
        std::vector<int> clause;
        for (std::size_t k = 0; k < arity; ++k) {
            clause.push_back(std::bernoulli_distribution(0.5)(rng) ? -vars[k] : vars[k]);
        }
        phi.clauses.push_back(std::move(clause));
    }
    return phi;
}

}  // namespace mmenum
