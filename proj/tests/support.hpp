#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mmenum/mmenum.hpp"

namespace mmenum::testing {

inline constexpr std::uint32_t kCorpusSeed = 20240611;
inline constexpr int kRandomGraphs = 500;
inline constexpr int kMaxRandomVertices = 8;

struct NamedGraph {
    std::string name;
    Graph graph;
};

inline Graph triangle() { return Graph::from_edges({{0, 1}, {0, 2}, {1, 2}}); }
inline Graph triangle_with_pendant() { return Graph::from_edges({{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
inline Graph two_disjoint_edges() { return Graph::from_edges({{0, 1}, {2, 3}}); }
inline Graph bowtie() { return Graph::from_edges({{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

/// Hand-picked graphs plus kRandomGraphs G(n, p) samples with n <= 8 and
/// edge probability drawn from [0.15, 0.9]. Fixed seed.
inline std::vector<NamedGraph> corpus(int random_count = kRandomGraphs) {
    std::vector<NamedGraph> out = {
        {"empty", Graph{}},
        {"single_edge", path_graph(2)},
        {"path4", path_graph(4)},
        {"path7", path_graph(7)},
        {"triangle", triangle()},
        {"triangle_pendant", triangle_with_pendant()},
        {"two_edges", two_disjoint_edges()},
        {"c4", cycle_graph(4)},
        {"c5", cycle_graph(5)},
        {"c7", cycle_graph(7)},
        {"bowtie", bowtie()},
        {"star4", star_graph(4)},
        {"k4", complete_graph(4)},
        {"k5", complete_graph(5)},
        {"k6", complete_graph(6)},
        {"k4_pendants", complete_with_pendants(2)},
        {"petersen", petersen_graph()},
    };
    std::mt19937 rng(kCorpusSeed);
    std::uniform_int_distribution<int> nd(2, kMaxRandomVertices);
    std::uniform_real_distribution<double> pd(0.15, 0.9);
    for (int i = 0; i < random_count; ++i) {
        int n = nd(rng);
        double p = pd(rng);
        out.push_back({"random_" + std::to_string(i), random_graph(n, p, rng)});
    }
    return out;
}

/// Runs an enumerator and returns its outputs as canonical encodings in
/// emission order.
template <class Run>
std::vector<CanonicalEncoding> collect(const Graph& g, Run&& run) {
    std::vector<CanonicalEncoding> out;
    run([&](const Matching& m) { out.push_back(canonical_encode(g, m)); });
    return out;
}

inline std::set<CanonicalEncoding> as_set(const std::vector<CanonicalEncoding>& v) { return {v.begin(), v.end()}; }

inline bool has_duplicates(const std::vector<CanonicalEncoding>& v) { return as_set(v).size() != v.size(); }

inline std::set<CanonicalEncoding> oracle_at_least(const OracleReport& r, std::size_t t) {
    std::set<CanonicalEncoding> out;
    for (const auto& enc : r.matchings) {
        if (enc.size() / 2 >= t) {
            out.insert(enc);
        }
    }
    return out;
}

inline Matching decode(const Graph& g, const CanonicalEncoding& enc) {
    Matching m(g);
    for (std::size_t i = 0; i < enc.size(); i += 2) {
        m.add(g, *g.find_edge(enc[i], enc[i + 1]));
    }
    return m;
}

/// Random matching built by adding edges in a shuffled order with
/// probability keep.
template <class Rng>
Matching random_matching(const Graph& g, Rng& rng, double keep = 0.5) {
    std::vector<EdgeId> ids(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        ids[e] = e;
    }
    std::shuffle(ids.begin(), ids.end(), rng);
    std::bernoulli_distribution coin(keep);
    Matching m(g);
    for (EdgeId e : ids) {
        if (m.can_add(g, e) && coin(rng)) {
            m.add(g, e);
        }
    }
    return m;
}

}  // namespace mmenum::testing
