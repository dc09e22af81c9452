#ifndef CWKIT_TESTS_HELPERS_HPP
#define CWKIT_TESTS_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "cwkit/graph.hpp"

namespace cwkit::testing {

inline Graph random_graph(int n, double p, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline Graph permuted_copy(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(perm[u - 1], perm[v - 1]);
    return h;
}

inline Graph complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(1, n);
    return g;
}

/// all non-isomorphic graphs on exactly n vertices
inline std::vector<Graph> graph_catalog(int n) {
    std::vector<Graph> out;
    std::vector<std::vector<uint8_t>> seen;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs.size()); ++mask) {
        Graph g(n);
        for (size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
        auto form = canonical_form(g);
        bool fresh = true;
        for (const auto& f : seen)
            if (f == form) {
                fresh = false;
                break;
            }
        if (fresh) {
            seen.push_back(std::move(form));
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace cwkit::testing

#endif
