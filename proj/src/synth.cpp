#include "cwkit/synth.hpp"

#include <algorithm>
#include <map>

#include "lcwd_engine.hpp"

namespace cwkit {

Ordering ordering_by_names(const Graph& g, const std::vector<std::string>& names) {
    Ordering o;
    for (const auto& nm : names) {
        int id = g.id_by_name(nm);
        if (!id) throw graph_error("ordering name '" + nm + "' not in graph");
        o.push_back(id);
    }
    return o;
}

CwExprPtr eager_expression(const Graph& g, const Ordering& order) {
    int n = g.n();
    if (static_cast<int>(order.size()) != n) throw graph_error("ordering must list every vertex once");
    std::vector<bool> seen(n + 1, false);
    for (int v : order) {
        if (v < 1 || v > n || seen[v]) throw graph_error("ordering must be a permutation of 1.." + std::to_string(n));
        seen[v] = true;
    }
    detail::DenseGraph d = detail::densify(g);
    struct Cls {
        uint64_t mask;
        int label;
    };
    std::vector<Cls> classes;
    uint64_t placed = 0;
    std::vector<bool> used_label(n + 2, false);
    auto alloc = [&]() {
        for (int l = 1; l <= n + 1; ++l)
            if (!used_label[l]) {
                used_label[l] = true;
                return l;
            }
        throw eval_error("internal: eager ran out of labels");
    };
    CwExprPtr expr;
    for (int idv : order) {
        int v = idv - 1;
        placed |= uint64_t(1) << v;
        int label = alloc();
        CwExprPtr mk = make_vertex(label, d.names[v]);
        expr = expr ? make_union(std::move(expr), std::move(mk)) : std::move(mk);
        // edges to each fully-adjacent class (classes are neighborhood-pure
        // by the merge rule, so adjacency to one member decides)
        for (auto& c : classes) {
            int c0 = __builtin_ctzll(c.mask);
            if ((d.adj[c0] >> v) & 1) expr = add_edges(label, c.label, std::move(expr));
        }
        classes.push_back({uint64_t(1) << v, label});
        // merge classes with equal future neighborhoods
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = i + 1; j < classes.size();) {
                uint64_t fi = d.adj[__builtin_ctzll(classes[i].mask)] & ~placed;
                uint64_t fj = d.adj[__builtin_ctzll(classes[j].mask)] & ~placed;
                if (fi == fj) {
                    expr = relabel(classes[j].label, classes[i].label, std::move(expr));
                    used_label[classes[j].label] = false;
                    classes[i].mask |= classes[j].mask;
                    classes.erase(classes.begin() + static_cast<long>(j));
                } else {
                    ++j;
                }
            }
    }
    return expr;
}

SynthResult search_certificate(const Graph& g, int w, Budget budget) {
    if (g.n() == 0) throw graph_error("empty graph");
    if (w < 1) throw graph_error("width must be >= 1");
    SynthResult res;
    detail::DenseGraph d = detail::densify(g);
    if (w >= g.n()) {
        Ordering natural(g.n());
        for (int i = 0; i < g.n(); ++i) natural[i] = i + 1;
        res.certificate = eager_expression(g, natural);
        res.found = true;
        return res;
    }
    if (w <= detail::kMaxClasses) {
        detail::LcwdEngine eng(d, w, budget, nullptr);
        Answer a = eng.run();
        res.nodes = eng.nodes();
        if (a == Answer::Yes) {
            res.certificate = detail::replay_moves(d, w, eng.moves());
            res.found = true;
            return res;
        }
        if (a == Answer::No) {
            res.exhausted = true;
            return res;
        }
    }
    // budget ran out (or width beyond the exact engine): beam fallback with
    // its own node allowance, the wall clock still binds
    Budget beam_budget = budget;
    beam_budget.max_nodes = std::max<long long>(budget.max_nodes, 10'000'000);
    detail::BeamResult beam = detail::beam_search(d, w, 1000, beam_budget);
    res.nodes += beam.nodes;
    if (beam.found) {
        res.certificate = detail::replay_moves(d, w, beam.moves);
        res.found = true;
    }
    return res;
}

}  // namespace cwkit
