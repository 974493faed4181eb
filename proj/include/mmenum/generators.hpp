#pragma once

#include <random>
#include <vector>

#include "mmenum/graph.hpp"

namespace mmenum {

// Small named graph families for tests, benchmarks and examples.

inline Graph path_graph(int n) {
    std::vector<std::pair<Label, Label>> e;
    for (int i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(e));
}

inline Graph cycle_graph(int n) {
    std::vector<std::pair<Label, Label>> e;
    for (int i = 0; i < n; ++i) {
        e.emplace_back(i, (i + 1) % n);
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(e));
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<Label, Label>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            e.emplace_back(i, j);
        }
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(e));
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<Label, Label>> e;
    for (int i = 1; i <= leaves; ++i) {
        e.emplace_back(0, i);
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(e));
}

/// g plus one pendant vertex per vertex; vertex v gets pendant n + v.
inline Graph with_pendants(const Graph& g) {
    std::vector<std::pair<Label, Label>> e;
    for (const Edge& ed : g.edges()) {
        e.emplace_back(ed.u, ed.v);
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        e.emplace_back(v, g.vertex_count() + v);
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(e));
}

/// K_{2n} with a pendant on every vertex.
inline Graph complete_with_pendants(int n) { return with_pendants(complete_graph(2 * n)); }

inline Graph petersen_graph() {
    std::vector<std::pair<Label, Label>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);          // outer cycle
        e.emplace_back(i, i + 5);                // spokes
        e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(e));
}

/// G(n, p); vertices left isolated are dropped by normalization.
template <class Rng>
Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Label, Label>> e;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng)) {
                e.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edges(std::span<const std::pair<Label, Label>>(e));
}

}  // namespace mmenum
