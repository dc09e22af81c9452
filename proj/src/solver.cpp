#include "cwkit/solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "lcwd_engine.hpp"

namespace cwkit {

namespace detail {

void LcwdEngine::settle(LcwdState& st) const {
    int out = 0;
    for (int i = 0; i < st.nlive; ++i) {
        uint64_t cls = st.live[i];
        if (futn_of(cls, st.placed) == 0)
            st.dead |= cls;
        else
            st.live[out++] = cls;
    }
    st.nlive = out;
    st.sort_live();
}

bool LcwdEngine::apply_fresh(const LcwdState& s, int v, LcwdState& out) const {
    int momentary = s.nlive + (s.dead ? 1 : 0) + 1;
    if (momentary > w_) return false;
    out = s;
    out.placed |= uint64_t(1) << v;
    out.live[out.nlive++] = uint64_t(1) << v;
    settle(out);
    return true;
}

bool LcwdEngine::apply_direct(const LcwdState& s, int v, int class_idx, LcwdState& out) const {
    uint64_t A = s.live[class_idx];
    uint64_t vb = uint64_t(1) << v;
    if (g_.adj[v] & A) return false;  // intra-class edges can never be realized
    uint64_t placed2 = s.placed | vb;
    if ((g_.adj[v] & ~placed2) != (futn_of(A, placed2) & ~vb)) return false;  // class must stay uniform
    // v's edges to another class B are addable only via eta(A+v, B),
    // which re-adds A x B: legal only when that product is all edges
    for (int bi = 0; bi < s.nlive; ++bi) {
        if (bi == class_idx) continue;
        uint64_t B = s.live[bi];
        int b0 = __builtin_ctzll(B);
        if (!((g_.adj[b0] >> v) & 1)) continue;  // v not adjacent to B
        uint64_t rem = A;
        while (rem) {
            int a = __builtin_ctzll(rem);
            rem &= rem - 1;
            if (B & ~g_.adj[a]) return false;
        }
    }
    out = s;
    out.placed = placed2;
    out.live[class_idx] = A | vb;
    settle(out);
    return true;
}

bool LcwdEngine::apply_direct_dead(const LcwdState& s, int v, LcwdState& out) const {
    if (!s.dead) return false;
    uint64_t vb = uint64_t(1) << v;
    uint64_t placed2 = s.placed | vb;
    if (g_.adj[v] & ~placed2) return false;  // must arrive dead
    if (g_.adj[v] & s.dead) return false;
    // edges from v to class B go through eta(deadlabel, label B)
    uint64_t dead_all = ~uint64_t(0);
    uint64_t rem = s.dead;
    while (rem) {
        int d = __builtin_ctzll(rem);
        rem &= rem - 1;
        dead_all &= g_.adj[d];
    }
    for (int bi = 0; bi < s.nlive; ++bi) {
        uint64_t B = s.live[bi];
        int b0 = __builtin_ctzll(B);
        if (!((g_.adj[b0] >> v) & 1)) continue;
        if (B & ~dead_all) return false;
    }
    out = s;
    out.placed = placed2;
    out.dead |= vb;
    settle(out);
    return true;
}

bool LcwdEngine::apply_merge(const LcwdState& s, int i, int j, LcwdState& out) const {
    if (futn_of(s.live[i], s.placed) != futn_of(s.live[j], s.placed)) return false;
    out = s;
    out.live[i] |= out.live[j];
    out.live[j] = out.live[--out.nlive];
    out.sort_live();
    return true;
}

void LcwdEngine::successors(const LcwdState& s, std::vector<std::pair<Move, LcwdState>>& out) const {
    out.clear();
    uint64_t rest = full_ & ~s.placed;
    LcwdState nxt;
    uint64_t rem = rest;
    while (rem) {
        int v = __builtin_ctzll(rem);
        rem &= rem - 1;
        if (s.placed == 0 && orbits_) {
            // root symmetry: only the smallest vertex of each orbit starts
            bool rep = true;
            for (int u = 0; u < v; ++u)
                if ((*orbits_)[u] == (*orbits_)[v]) {
                    rep = false;
                    break;
                }
            if (!rep) continue;
        }
        if (apply_fresh(s, v, nxt)) out.push_back({{Move::Kind::Fresh, v, 0, 0}, nxt});
    }
    rem = rest;
    while (rem) {
        int v = __builtin_ctzll(rem);
        rem &= rem - 1;
        for (int ci = 0; ci < s.nlive; ++ci)
            if (apply_direct(s, v, ci, nxt)) out.push_back({{Move::Kind::Direct, v, s.live[ci], 0}, nxt});
        if (apply_direct_dead(s, v, nxt)) out.push_back({{Move::Kind::DirectDead, v, 0, 0}, nxt});
    }
    for (int i = 0; i < s.nlive; ++i)
        for (int j = i + 1; j < s.nlive; ++j)
            if (apply_merge(s, i, j, nxt)) out.push_back({{Move::Kind::Merge, -1, s.live[i], s.live[j]}, nxt});
}

bool LcwdEngine::over_budget() {
    if (nodes_ > budget_.max_nodes) return true;
    if ((nodes_ & 0xfff) == 0 && seconds() > budget_.seconds) return true;
    return false;
}

Answer LcwdEngine::run() {
    struct Frame {
        LcwdState st;
        std::vector<std::pair<Move, LcwdState>> succ;
        size_t next = 0;
    };
    std::unordered_set<LcwdState, LcwdStateHash> visited;
    std::vector<Frame> stack;
    LcwdState root;
    if (root.placed == full_) {
        moves_.clear();
        return Answer::Yes;  // empty graph
    }
    visited.insert(root);
    stack.push_back({root, {}, 0});
    successors(root, stack.back().succ);
    while (!stack.empty()) {
        ++nodes_;
        if (over_budget()) return Answer::Unknown;
        Frame& f = stack.back();
        if (f.next >= f.succ.size()) {
            stack.pop_back();
            continue;
        }
        auto& [mv, st] = f.succ[f.next++];
        if (!visited.insert(st).second) continue;
        if (st.placed == full_) {
            moves_.clear();
            for (size_t i = 0; i + 1 < stack.size(); ++i)
                moves_.push_back(stack[i].succ[stack[i].next - 1].first);
            moves_.push_back(mv);
            return Answer::Yes;
        }
        Frame nf;
        nf.st = st;
        successors(st, nf.succ);
        stack.push_back(std::move(nf));
    }
    return Answer::No;
}

CwExprPtr replay_moves(const DenseGraph& g, int w, const std::vector<Move>& moves) {
    struct LiveClass {
        uint64_t mask;
        int label;
    };
    std::vector<LiveClass> live;
    uint64_t placed = 0, dead = 0;
    int dead_label = 0;
    std::vector<bool> used(static_cast<size_t>(w) + 1, false);
    auto alloc = [&]() {
        for (int l = 1; l <= w; ++l)
            if (!used[l]) {
                used[l] = true;
                return l;
            }
        throw eval_error("internal: ran out of labels during replay");
    };
    CwExprPtr expr;
    auto insert_vertex = [&](int v, int label) {
        CwExprPtr mk = make_vertex(label, g.names[v]);
        expr = expr ? make_union(std::move(expr), std::move(mk)) : std::move(mk);
    };
    auto add_edges_to_neighbors = [&](int v, int vlabel, uint64_t vclass_mask) {
        for (auto& lc : live) {
            if (lc.mask == vclass_mask) continue;
            int b0 = __builtin_ctzll(lc.mask);
            if ((g.adj[b0] >> v) & 1) expr = add_edges(vlabel, lc.label, std::move(expr));
        }
    };
    auto settle_deaths = [&](uint64_t placed_now) {
        std::vector<LiveClass> keep;
        for (auto& lc : live) {
            int v0 = __builtin_ctzll(lc.mask);
            if ((g.adj[v0] & ~placed_now) != 0) {
                keep.push_back(lc);
                continue;
            }
            dead |= lc.mask;
            if (dead_label == 0) {
                dead_label = lc.label;  // this class becomes the dead pool
            } else {
                expr = relabel(lc.label, dead_label, std::move(expr));
                used[lc.label] = false;
            }
        }
        live = std::move(keep);
    };
    for (const Move& mv : moves) {
        switch (mv.kind) {
            case Move::Kind::Fresh: {
                int v = mv.v;
                int label = alloc();
                placed |= uint64_t(1) << v;
                insert_vertex(v, label);
                add_edges_to_neighbors(v, label, 0);
                live.push_back({uint64_t(1) << v, label});
                settle_deaths(placed);
                break;
            }
            case Move::Kind::Direct: {
                int v = mv.v;
                auto it = std::find_if(live.begin(), live.end(), [&](const LiveClass& lc) { return lc.mask == mv.a; });
                if (it == live.end()) throw eval_error("internal: replay lost a class");
                placed |= uint64_t(1) << v;
                insert_vertex(v, it->label);
                add_edges_to_neighbors(v, it->label, it->mask);
                it->mask |= uint64_t(1) << v;
                settle_deaths(placed);
                break;
            }
            case Move::Kind::DirectDead: {
                int v = mv.v;
                if (dead_label == 0) throw eval_error("internal: replay has no dead class");
                placed |= uint64_t(1) << v;
                insert_vertex(v, dead_label);
                add_edges_to_neighbors(v, dead_label, 0);
                dead |= uint64_t(1) << v;
                settle_deaths(placed);
                break;
            }
            case Move::Kind::Merge: {
                auto ia = std::find_if(live.begin(), live.end(), [&](const LiveClass& lc) { return lc.mask == mv.a; });
                auto ib = std::find_if(live.begin(), live.end(), [&](const LiveClass& lc) { return lc.mask == mv.b; });
                if (ia == live.end() || ib == live.end()) throw eval_error("internal: replay lost a merge class");
                expr = relabel(ib->label, ia->label, std::move(expr));
                used[ib->label] = false;
                ia->mask |= ib->mask;
                live.erase(ib);
                break;
            }
        }
    }
    if (!expr) throw eval_error("internal: empty move list");
    return expr;
}

BeamResult beam_search(const DenseGraph& g, int w, int beam_width, Budget budget) {
    LcwdEngine eng(g, w, budget, nullptr);
    struct Item {
        LcwdState st;
        std::vector<Move> moves;
    };
    BeamResult res;
    auto t0 = std::chrono::steady_clock::now();
    auto timed_out = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > budget.seconds;
    };
    std::vector<Item> layer{{LcwdState{}, {}}};
    uint64_t full = eng.full();
    for (int step = 0; step < g.n && !layer.empty(); ++step) {
        if (timed_out()) return res;
        // close each item under merges, then take every insert move
        std::vector<Item> next;
        std::unordered_set<LcwdState, LcwdStateHash> seen;
        std::vector<std::pair<Move, LcwdState>> succ;
        for (const Item& item : layer) {
            std::vector<Item> variants{item};
            std::unordered_set<LcwdState, LcwdStateHash> vseen{item.st};
            for (size_t qi = 0; qi < variants.size(); ++qi) {
                Item cur = variants[qi];
                LcwdState m;
                for (int i = 0; i < cur.st.nlive; ++i)
                    for (int j = i + 1; j < cur.st.nlive; ++j)
                        if (eng.apply_merge(cur.st, i, j, m) && vseen.insert(m).second) {
                            Item nx{m, cur.moves};
                            nx.moves.push_back({Move::Kind::Merge, -1, cur.st.live[i], cur.st.live[j]});
                            variants.push_back(std::move(nx));
                        }
            }
            for (const Item& var : variants) {
                eng.successors(var.st, succ);
                for (auto& [mv, st] : succ) {
                    if (mv.kind == Move::Kind::Merge) continue;
                    ++res.nodes;
                    if (res.nodes > budget.max_nodes) return res;
                    if (!seen.insert(st).second) continue;
                    Item nx{st, var.moves};
                    nx.moves.push_back(mv);
                    if (st.placed == full) {
                        res.found = true;
                        res.moves = std::move(nx.moves);
                        return res;
                    }
                    next.push_back(std::move(nx));
                }
            }
        }
        std::sort(next.begin(), next.end(), [](const Item& a, const Item& b) {
            if (a.st.nlive != b.st.nlive) return a.st.nlive < b.st.nlive;
            if (a.st.placed != b.st.placed) return a.st.placed < b.st.placed;
            return false;
        });
        if (static_cast<int>(next.size()) > beam_width) next.resize(beam_width);
        layer = std::move(next);
    }
    return res;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// public lcwd entry points

namespace {

std::vector<int> root_orbits_or_trivial(const Graph& g) {
    try {
        auto orb = vertex_orbits(g);  // 1-based
        std::vector<int> z(g.n());
        for (int v = 1; v <= g.n(); ++v) z[v - 1] = orb[v];
        return z;
    } catch (const budget_error&) {
        std::vector<int> z(g.n());
        for (int i = 0; i < g.n(); ++i) z[i] = i;  // distinct: no pruning
        return z;
    }
}

CwExprPtr trivial_linear_expression(const detail::DenseGraph& d) {
    // every vertex its own label: width n
    CwExprPtr expr;
    for (int v = 0; v < d.n; ++v) {
        CwExprPtr mk = make_vertex(v + 1, d.names[v]);
        expr = expr ? make_union(std::move(expr), std::move(mk)) : std::move(mk);
        for (int u = 0; u < v; ++u)
            if ((d.adj[v] >> u) & 1) expr = add_edges(v + 1, u + 1, std::move(expr));
    }
    return expr;
}

void self_check(const CwExprPtr& cert, const Graph& g, int w, bool linear) {
    CheckReport rep = check_certificate(*cert, g, w, linear);
    if (!rep.ok) throw eval_error("internal: produced certificate failed its check: " + rep.reason);
}

}  // namespace

DecideResult lcwd_decide(const Graph& g, int w, Budget budget) {
    if (g.n() == 0) throw graph_error("empty graph");
    if (w < 1) throw graph_error("width must be >= 1");
    detail::DenseGraph d = detail::densify(g);
    DecideResult res;
    if (w >= g.n()) {
        res.answer = Answer::Yes;
        res.certificate = trivial_linear_expression(d);
        self_check(res.certificate, g, w, true);
        res.stats.exhausted = false;
        return res;
    }
    if (w > detail::kMaxClasses) throw graph_error("lcwd_decide supports width <= 8");
    std::vector<int> orbits = root_orbits_or_trivial(g);
    detail::LcwdEngine eng(d, w, budget, &orbits);
    Answer a = eng.run();
    res.answer = a;
    res.stats.nodes = eng.nodes();
    res.stats.seconds = eng.seconds();
    res.stats.exhausted = (a == Answer::No);
    if (a == Answer::Yes) {
        res.certificate = detail::replay_moves(d, w, eng.moves());
        self_check(res.certificate, g, w, true);
    }
    return res;
}

// ---------------------------------------------------------------------------
// cwd: bottom-up DP over (subset, uniform partition), edges-complete states

namespace {

using detail::DenseGraph;

constexpr int kCwdMaxClasses = 64;

struct CwdEntry {
    std::vector<uint64_t> classes;  // sorted
    // provenance for certificate replay
    uint64_t s1 = 0;  // 0 for leaf
    int i1 = -1, i2 = -1;
    std::vector<std::pair<int8_t, int8_t>> matching;
    std::vector<int8_t> final_of;  // post-matching class index -> final class index
    int leaf_vertex = -1;
};

// post-matching class list: P1 classes in order (absorbing matched partners),
// then unmatched P2 classes in order
std::vector<uint64_t> post_match_classes(const std::vector<uint64_t>& p1, const std::vector<uint64_t>& p2,
                                         const std::vector<std::pair<int8_t, int8_t>>& matching) {
    std::vector<uint64_t> out(p1);
    std::vector<bool> used2(p2.size(), false);
    for (auto [i, j] : matching) {
        out[i] |= p2[j];
        used2[j] = true;
    }
    for (size_t j = 0; j < p2.size(); ++j)
        if (!used2[j]) out.push_back(p2[j]);
    return out;
}

class CwdSolver {
public:
    CwdSolver(const DenseGraph& g, int w, Budget budget) : g_(g), w_(w), budget_(budget) {
        full_ = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;
        t0_ = std::chrono::steady_clock::now();
    }

    Answer solve();
    CwExprPtr extract() const;
    long long nodes() const { return nodes_; }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    void combine(uint64_t S, uint64_t s1, uint64_t s2, int i1, int i2);

    uint64_t outn(uint64_t cls, uint64_t S) const { return g_.adj[__builtin_ctzll(cls)] & ~S; }

    // every required cross edge must sit between two classes whose full
    // product is edges (the post-union eta discharges it); a cross edge
    // inside one class is lost for good
    bool discharge_ok(const std::vector<uint64_t>& classes, uint64_t s1, uint64_t s2) const {
        std::array<int8_t, 64> cls{};
        for (size_t x = 0; x < classes.size(); ++x) {
            uint64_t rem = classes[x];
            while (rem) {
                int v = __builtin_ctzll(rem);
                rem &= rem - 1;
                cls[v] = static_cast<int8_t>(x);
            }
        }
        uint64_t needed[kCwdMaxClasses] = {};
        uint64_t rem = s1;
        while (rem) {
            int u = __builtin_ctzll(rem);
            rem &= rem - 1;
            uint64_t nb = g_.adj[u] & s2;
            while (nb) {
                int v = __builtin_ctzll(nb);
                nb &= nb - 1;
                if (cls[u] == cls[v]) return false;
                needed[cls[u]] |= uint64_t(1) << cls[v];
            }
        }
        for (size_t x = 0; x < classes.size(); ++x) {
            uint64_t ys = needed[x];
            while (ys) {
                int y = __builtin_ctzll(ys);
                ys &= ys - 1;
                uint64_t a_rem = classes[x];
                while (a_rem) {
                    int a = __builtin_ctzll(a_rem);
                    a_rem &= a_rem - 1;
                    if (classes[y] & ~g_.adj[a]) return false;
                }
            }
        }
        return true;
    }

    void add_state(uint64_t S, CwdEntry entry) {
        auto key = entry.classes;
        if (!dedup_[S].insert(std::move(key)).second) return;
        states_[S].push_back(std::move(entry));
    }

    CwExprPtr build(uint64_t S, int idx, const std::vector<int>& final_labels) const;

    const DenseGraph& g_;
    int w_;
    Budget budget_;
    uint64_t full_;
    long long nodes_ = 0;
    std::chrono::steady_clock::time_point t0_;
    std::unordered_map<uint64_t, std::vector<CwdEntry>> states_;
    std::unordered_map<uint64_t, std::set<std::vector<uint64_t>>> dedup_;
    bool budget_hit_ = false;

    friend CwExprPtr cwd_extract(const CwdSolver&);
};

Answer CwdSolver::solve() {
    int n = g_.n;
    for (int v = 0; v < n; ++v) {
        CwdEntry e;
        e.classes = {uint64_t(1) << v};
        e.leaf_vertex = v;
        add_state(uint64_t(1) << v, std::move(e));
    }
    // subsets by popcount, via Gosper
    for (int pc = 2; pc <= n; ++pc) {
        uint64_t S = (uint64_t(1) << pc) - 1;
        while (S <= full_) {
            uint64_t low = S & (~S + 1);
            uint64_t rest = S ^ low;
            // S1 ranges over submasks of rest, plus low
            uint64_t sub = rest;
            for (;;) {
                uint64_t s1 = low | sub;
                uint64_t s2 = S ^ s1;
                if (s2) {
                    auto it1 = states_.find(s1);
                    auto it2 = states_.find(s2);
                    if (it1 != states_.end() && it2 != states_.end()) {
                        for (int i1 = 0; i1 < static_cast<int>(it1->second.size()); ++i1) {
                            for (int i2 = 0; i2 < static_cast<int>(it2->second.size()); ++i2) {
                                combine(S, s1, s2, i1, i2);
                                if (budget_hit_) return Answer::Unknown;
                            }
                        }
                    }
                }
                if (sub == 0) break;
                sub = (sub - 1) & rest;
            }
            // next subset of same popcount
            if (S == full_) break;
            uint64_t c = S & (~S + 1);
            uint64_t r = S + c;
            uint64_t next = (((r ^ S) >> 2) / c) | r;
            if (next > full_) break;
            S = next;
        }
    }
    auto it = states_.find(full_);
    if (it != states_.end() && !it->second.empty()) return Answer::Yes;
    return budget_hit_ ? Answer::Unknown : Answer::No;
}

void CwdSolver::combine(uint64_t S, uint64_t s1, uint64_t s2, int i1, int i2) {
    const auto& p1 = states_[s1][i1].classes;
    const auto& p2 = states_[s2][i2].classes;
    // enumerate matchings between classes with equal outN wrt V \ S
    std::vector<uint64_t> o1(p1.size()), o2(p2.size());
    for (size_t i = 0; i < p1.size(); ++i) o1[i] = outn(p1[i], S);
    for (size_t j = 0; j < p2.size(); ++j) o2[j] = outn(p2[j], S);
    std::vector<std::pair<int8_t, int8_t>> cur;
    std::vector<bool> used2(p2.size(), false);

    auto consider = [&](const std::vector<std::pair<int8_t, int8_t>>& matching) {
        int count = static_cast<int>(p1.size() + p2.size() - matching.size());
        if (count > w_) return;
        std::vector<uint64_t> classes = post_match_classes(p1, p2, matching);
        if (!discharge_ok(classes, s1, s2)) return;
        // merge closure: group classes by outN, enumerate set partitions per group
        std::map<uint64_t, std::vector<int>> groups;
        for (size_t x = 0; x < classes.size(); ++x) groups[outn(classes[x], S)].push_back(static_cast<int>(x));
        // enumerate combined partitions via recursive assignment of each class
        std::vector<int8_t> final_of(classes.size(), -1);
        std::vector<uint64_t> final_outn;
        std::vector<uint64_t> final_mask;
        auto rec = [&](auto&& self, size_t x) -> void {
            if (++nodes_ > budget_.max_nodes ||
                ((nodes_ & 0xfff) == 0 && seconds() > budget_.seconds)) {
                budget_hit_ = true;
                return;
            }
            if (x == classes.size()) {
                CwdEntry e;
                e.classes = final_mask;
                // canonical order, remap final_of accordingly
                std::vector<int> perm(final_mask.size());
                for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
                std::sort(perm.begin(), perm.end(), [&](int a, int b) { return final_mask[a] < final_mask[b]; });
                std::vector<int> inv(perm.size());
                for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
                std::sort(e.classes.begin(), e.classes.end());
                e.s1 = s1;
                e.i1 = i1;
                e.i2 = i2;
                e.matching = matching;
                e.final_of.resize(classes.size());
                for (size_t i = 0; i < classes.size(); ++i) e.final_of[i] = static_cast<int8_t>(inv[final_of[i]]);
                add_state(S, std::move(e));
                return;
            }
            uint64_t ox = outn(classes[x], S);
            for (size_t f = 0; f < final_mask.size(); ++f) {
                if (final_outn[f] != ox) continue;
                final_of[x] = static_cast<int8_t>(f);
                uint64_t save = final_mask[f];
                final_mask[f] |= classes[x];
                self(self, x + 1);
                final_mask[f] = save;
                if (budget_hit_) return;
            }
            final_of[x] = static_cast<int8_t>(final_mask.size());
            final_outn.push_back(ox);
            final_mask.push_back(classes[x]);
            self(self, x + 1);
            final_outn.pop_back();
            final_mask.pop_back();
        };
        rec(rec, 0);
    };

    auto enumerate = [&](auto&& self, size_t i) -> void {
        consider(cur);
        if (budget_hit_) return;
        for (size_t ii = i; ii < p1.size(); ++ii)
            for (size_t j = 0; j < p2.size(); ++j) {
                if (used2[j] || o1[ii] != o2[j]) continue;
                used2[j] = true;
                cur.push_back({static_cast<int8_t>(ii), static_cast<int8_t>(j)});
                self(self, ii + 1);
                cur.pop_back();
                used2[j] = false;
                if (budget_hit_) return;
            }
    };
    enumerate(enumerate, 0);
}

CwExprPtr CwdSolver::build(uint64_t S, int idx, const std::vector<int>& final_labels) const {
    const CwdEntry& e = states_.at(S)[idx];
    if (e.leaf_vertex >= 0) return make_vertex(final_labels[0], g_.names[e.leaf_vertex]);
    const auto& p1 = states_.at(e.s1)[e.i1].classes;
    uint64_t s2 = S ^ e.s1;
    const auto& p2 = states_.at(s2)[e.i2].classes;
    std::vector<uint64_t> classes = post_match_classes(p1, p2, e.matching);
    // label each post-matching class: first member of a final class inherits
    // the final label, the rest take free temporaries (merged away below)
    std::vector<int> post_label(classes.size(), 0);
    std::vector<bool> used(static_cast<size_t>(w_) + 1, false);
    std::vector<int> first_of(final_labels.size(), -1);
    for (size_t x = 0; x < classes.size(); ++x) {
        int f = e.final_of[x];
        if (first_of[f] < 0) {
            first_of[f] = static_cast<int>(x);
            post_label[x] = final_labels[f];
            used[final_labels[f]] = true;
        }
    }
    for (size_t x = 0; x < classes.size(); ++x) {
        if (post_label[x]) continue;
        for (int l = 1; l <= w_; ++l)
            if (!used[l]) {
                used[l] = true;
                post_label[x] = l;
                break;
            }
        if (!post_label[x]) throw eval_error("internal: cwd replay ran out of labels");
    }
    // child labelings: P1 class i belongs to post class i; unmatched P2
    // classes follow P1's in order, matched ones share their partner's
    std::vector<int> labels1(p1.size()), labels2(p2.size());
    for (size_t i = 0; i < p1.size(); ++i) labels1[i] = post_label[i];
    std::vector<bool> used2(p2.size(), false);
    for (auto [i, j] : e.matching) {
        labels2[j] = post_label[i];
        used2[j] = true;
    }
    size_t nextpost = p1.size();
    for (size_t j = 0; j < p2.size(); ++j)
        if (!used2[j]) labels2[j] = post_label[nextpost++];
    CwExprPtr left = build(e.s1, e.i1, labels1);
    CwExprPtr right = build(s2, e.i2, labels2);
    CwExprPtr expr = make_union(std::move(left), std::move(right));
    // discharge: eta for every post class pair carrying required cross edges
    for (size_t x = 0; x < classes.size(); ++x)
        for (size_t y = x + 1; y < classes.size(); ++y) {
            bool need = false;
            uint64_t rem = classes[x] & e.s1;
            while (rem && !need) {
                int a = __builtin_ctzll(rem);
                rem &= rem - 1;
                if (g_.adj[a] & classes[y] & s2) need = true;
            }
            rem = classes[x] & s2;
            while (rem && !need) {
                int a = __builtin_ctzll(rem);
                rem &= rem - 1;
                if (g_.adj[a] & classes[y] & e.s1) need = true;
            }
            if (need) expr = add_edges(post_label[x], post_label[y], std::move(expr));
        }
    // merges
    for (size_t x = 0; x < classes.size(); ++x) {
        int f = e.final_of[x];
        if (static_cast<int>(x) != first_of[f]) expr = relabel(post_label[x], final_labels[f], std::move(expr));
    }
    return expr;
}

CwExprPtr cwd_extract(const CwdSolver& s) {
    uint64_t full = s.full_;
    const auto& entries = s.states_.at(full);
    std::vector<int> labels(entries[0].classes.size());
    for (size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i + 1);
    return s.build(full, 0, labels);
}

}  // namespace

DecideResult cwd_decide(const Graph& g, int w, Budget budget) {
    if (g.n() == 0) throw graph_error("empty graph");
    if (w < 1) throw graph_error("width must be >= 1");
    if (g.n() > 24) throw graph_error("cwd_decide supports at most 24 vertices");
    detail::DenseGraph d = detail::densify(g);
    DecideResult res;
    CwdSolver solver(d, w, budget);
    Answer a = solver.solve();
    res.answer = a;
    res.stats.nodes = solver.nodes();
    res.stats.seconds = solver.seconds();
    res.stats.exhausted = (a == Answer::No);
    if (a == Answer::Yes) {
        res.certificate = cwd_extract(solver);
        self_check(res.certificate, g, w, false);
    }
    return res;
}

// ---------------------------------------------------------------------------
// naive oracles: explicit realized-edge tracking, no normalization

namespace {

struct NaiveKey {
    uint32_t placed;
    uint64_t parts;      // sorted 8-bit class masks, packed
    uint32_t realized;   // bit per edge
    bool operator==(const NaiveKey&) const = default;
};

struct NaiveKeyHash {
    size_t operator()(const NaiveKey& k) const {
        uint64_t h = k.placed * 0x9e3779b97f4a7c15ull;
        h ^= k.parts + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= k.realized + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

struct NaiveGraph {
    int n;
    std::vector<uint32_t> adj;                 // 0-based masks
    std::vector<std::vector<int>> edge_index;  // pair -> bit
    int nedges;
};

NaiveGraph naive_graph(const Graph& g, int maxn) {
    if (g.n() > maxn) throw graph_error("naive oracle limited to " + std::to_string(maxn) + " vertices");
    NaiveGraph ng;
    ng.n = g.n();
    ng.adj.assign(ng.n, 0);
    ng.edge_index.assign(ng.n, std::vector<int>(ng.n, -1));
    ng.nedges = 0;
    for (auto [u, v] : g.edges()) {
        ng.adj[u - 1] |= uint32_t(1) << (v - 1);
        ng.adj[v - 1] |= uint32_t(1) << (u - 1);
        ng.edge_index[u - 1][v - 1] = ng.edge_index[v - 1][u - 1] = ng.nedges++;
    }
    return ng;
}

uint64_t pack_parts(std::vector<uint32_t>& parts) {
    std::sort(parts.begin(), parts.end());
    uint64_t out = 0;
    for (size_t i = 0; i < parts.size(); ++i) out |= uint64_t(parts[i] & 0xff) << (8 * i);
    return out;
}

std::vector<uint32_t> unpack_parts(uint64_t packed) {
    std::vector<uint32_t> out;
    while (packed) {
        out.push_back(static_cast<uint32_t>(packed & 0xff));
        packed >>= 8;
    }
    return out;
}

bool naive_doomed(const NaiveGraph& g, const std::vector<uint32_t>& parts, uint32_t realized) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int ei = g.edge_index[u][v];
            if (ei < 0 || ((realized >> ei) & 1)) continue;
            int cu = -1, cv = -1;
            for (size_t p = 0; p < parts.size(); ++p) {
                if ((parts[p] >> u) & 1) cu = static_cast<int>(p);
                if ((parts[p] >> v) & 1) cv = static_cast<int>(p);
            }
            if (cu < 0 || cv < 0) continue;  // not both placed yet
            if (cu == cv) return true;
            uint32_t A = parts[cu], B = parts[cv];
            uint32_t rem = A;
            while (rem) {
                int a = __builtin_ctz(rem);
                rem &= rem - 1;
                if (B & ~g.adj[a]) return true;
            }
        }
    return false;
}

}  // namespace

bool naive_lcwd_decide(const Graph& g, int w) {
    NaiveGraph ng = naive_graph(g, 7);
    uint32_t full = (uint32_t(1) << ng.n) - 1;
    uint32_t target = ng.nedges ? (uint32_t(1) << ng.nedges) - 1 : 0;
    std::unordered_set<NaiveKey, NaiveKeyHash> seen;
    std::vector<NaiveKey> stack;
    NaiveKey start{0, 0, 0};
    seen.insert(start);
    stack.push_back(start);
    while (!stack.empty()) {
        NaiveKey k = stack.back();
        stack.pop_back();
        if (k.placed == full && k.realized == target) return true;
        std::vector<uint32_t> parts = unpack_parts(k.parts);
        auto push = [&](uint32_t placed, std::vector<uint32_t> ps, uint32_t realized) {
            if (static_cast<int>(ps.size()) > w) return;
            if (naive_doomed(ng, ps, realized)) return;
            NaiveKey nk{placed, pack_parts(ps), realized};
            if (seen.insert(nk).second) stack.push_back(nk);
        };
        // inserts: fresh class or any existing class
        for (int v = 0; v < ng.n; ++v) {
            if ((k.placed >> v) & 1) continue;
            uint32_t placed2 = k.placed | (uint32_t(1) << v);
            {
                auto ps = parts;
                ps.push_back(uint32_t(1) << v);
                push(placed2, std::move(ps), k.realized);
            }
            for (size_t p = 0; p < parts.size(); ++p) {
                auto ps = parts;
                ps[p] |= uint32_t(1) << v;
                push(placed2, std::move(ps), k.realized);
            }
        }
        // eta between fully-required class pairs
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) {
                uint32_t A = parts[i], B = parts[j];
                bool all_edges = true;
                uint32_t r2 = k.realized;
                uint32_t rem = A;
                while (rem && all_edges) {
                    int a = __builtin_ctz(rem);
                    rem &= rem - 1;
                    uint32_t bb = B;
                    while (bb) {
                        int b = __builtin_ctz(bb);
                        bb &= bb - 1;
                        int ei = ng.edge_index[a][b];
                        if (ei < 0) {
                            all_edges = false;
                            break;
                        }
                        r2 |= uint32_t(1) << ei;
                    }
                }
                if (all_edges && r2 != k.realized) push(k.placed, parts, r2);
            }
        // rho: merge any two classes
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) {
                std::vector<uint32_t> ps;
                for (size_t t = 0; t < parts.size(); ++t)
                    if (t != i && t != j) ps.push_back(parts[t]);
                ps.push_back(parts[i] | parts[j]);
                push(k.placed, std::move(ps), k.realized);
            }
    }
    return false;
}

int naive_lcwd(const Graph& g) {
    if (g.n() == 0) throw graph_error("empty graph");
    for (int w = 1; w <= g.n(); ++w)
        if (naive_lcwd_decide(g, w)) return w;
    throw eval_error("internal: naive_lcwd found no expression");
}

namespace {

// general cwd enumerator: per-subset worklist of (partition, realized)
struct TinyState {
    uint64_t parts;
    uint32_t realized;
    bool operator==(const TinyState&) const = default;
};
struct TinyHash {
    size_t operator()(const TinyState& s) const {
        return static_cast<size_t>(s.parts * 0x9e3779b97f4a7c15ull ^ s.realized);
    }
};

}  // namespace

bool naive_cwd_decide(const Graph& g, int w) {
    NaiveGraph ng = naive_graph(g, 5);
    int n = ng.n;
    uint32_t full = (uint32_t(1) << n) - 1;
    uint32_t target = ng.nedges ? (uint32_t(1) << ng.nedges) - 1 : 0;
    std::vector<std::unordered_set<TinyState, TinyHash>> states(uint64_t(1) << n);
    // subsets ascending by popcount
    std::vector<uint32_t> order;
    for (uint32_t S = 1; S <= full; ++S) order.push_back(S);
    std::sort(order.begin(), order.end(),
              [](uint32_t a, uint32_t b) { return __builtin_popcount(a) != __builtin_popcount(b)
                                                      ? __builtin_popcount(a) < __builtin_popcount(b)
                                                      : a < b; });
    for (uint32_t S : order) {
        auto& res = states[S];
        std::vector<TinyState> work;
        if (__builtin_popcount(S) == 1) {
            std::vector<uint32_t> ps{S};
            TinyState t{pack_parts(ps), 0};
            res.insert(t);
            work.push_back(t);
        } else {
            uint32_t low = S & (~S + 1);
            uint32_t rest = S ^ low;
            uint32_t sub = rest;
            for (;;) {
                uint32_t s1 = low | sub;
                uint32_t s2 = S ^ s1;
                if (s2) {
                    for (const TinyState& t1 : states[s1])
                        for (const TinyState& t2 : states[s2]) {
                            std::vector<uint32_t> p1 = unpack_parts(t1.parts);
                            std::vector<uint32_t> p2 = unpack_parts(t2.parts);
                            // all matchings (unrestricted: relabeling is free)
                            std::vector<std::pair<int, int>> cur;
                            std::vector<bool> used2(p2.size(), false);
                            auto emit = [&]() {
                                if (static_cast<int>(p1.size() + p2.size() - cur.size()) > w) return;
                                std::vector<uint32_t> ps(p1);
                                std::vector<bool> u2(p2.size(), false);
                                for (auto [i, j] : cur) {
                                    ps[i] |= p2[j];
                                    u2[j] = true;
                                }
                                for (size_t j = 0; j < p2.size(); ++j)
                                    if (!u2[j]) ps.push_back(p2[j]);
                                TinyState t{pack_parts(ps), t1.realized | t2.realized};
                                if (res.insert(t).second) work.push_back(t);
                            };
                            auto rec = [&](auto&& self, size_t i) -> void {
                                emit();
                                for (size_t ii = i; ii < p1.size(); ++ii)
                                    for (size_t j = 0; j < p2.size(); ++j) {
                                        if (used2[j]) continue;
                                        used2[j] = true;
                                        cur.push_back({static_cast<int>(ii), static_cast<int>(j)});
                                        self(self, ii + 1);
                                        cur.pop_back();
                                        used2[j] = false;
                                    }
                            };
                            rec(rec, 0);
                        }
                }
                if (sub == 0) break;
                sub = (sub - 1) & rest;
            }
        }
        // closure under single eta / rho steps
        while (!work.empty()) {
            TinyState t = work.back();
            work.pop_back();
            std::vector<uint32_t> parts = unpack_parts(t.parts);
            for (size_t i = 0; i < parts.size(); ++i)
                for (size_t j = i + 1; j < parts.size(); ++j) {
                    uint32_t A = parts[i], B = parts[j];
                    bool all_edges = true;
                    uint32_t r2 = t.realized;
                    uint32_t rem = A;
                    while (rem && all_edges) {
                        int a = __builtin_ctz(rem);
                        rem &= rem - 1;
                        uint32_t bb = B;
                        while (bb) {
                            int b = __builtin_ctz(bb);
                            bb &= bb - 1;
                            int ei = ng.edge_index[a][b];
                            if (ei < 0) {
                                all_edges = false;
                                break;
                            }
                            r2 |= uint32_t(1) << ei;
                        }
                    }
                    if (all_edges && r2 != t.realized) {
                        TinyState nt{t.parts, r2};
                        if (res.insert(nt).second) work.push_back(nt);
                    }
                    std::vector<uint32_t> ps;
                    for (size_t x = 0; x < parts.size(); ++x)
                        if (x != i && x != j) ps.push_back(parts[x]);
                    ps.push_back(A | B);
                    TinyState nt{pack_parts(ps), t.realized};
                    if (res.insert(nt).second) work.push_back(nt);
                }
        }
    }
    for (const TinyState& t : states[full])
        if (t.realized == target) return true;
    return false;
}

int naive_cwd(const Graph& g) {
    if (g.n() == 0) throw graph_error("empty graph");
    for (int w = 1; w <= g.n(); ++w)
        if (naive_cwd_decide(g, w)) return w;
    throw eval_error("internal: naive_cwd found no expression");
}

// ---------------------------------------------------------------------------
// exact values by iterating the decision procedures

namespace {

WidthResult exact_by_iteration(const Graph& g, Budget budget,
                               DecideResult (*decide)(const Graph&, int, Budget)) {
    WidthResult res;
    res.lower = 1;
    for (int w = 1; w <= g.n(); ++w) {
        DecideResult d = decide(g, w, budget);
        res.stats.nodes += d.stats.nodes;
        res.stats.seconds += d.stats.seconds;
        if (d.answer == Answer::No) {
            res.lower = w + 1;
            continue;
        }
        if (d.answer == Answer::Yes) {
            res.upper = w;
            res.certificate = std::move(d.certificate);
            break;
        }
        break;  // unknown: budget ran out
    }
    if (res.upper && res.upper == res.lower) {
        res.kind = WidthResult::Kind::Exact;
        res.value = res.upper;
        res.stats.exhausted = true;
    } else if (res.upper) {
        res.kind = WidthResult::Kind::UpperBound;
        res.value = res.upper;
    } else if (res.lower > 1) {
        res.kind = WidthResult::Kind::LowerBound;
        res.value = res.lower;
    } else {
        res.kind = WidthResult::Kind::Unknown;
    }
    return res;
}

}  // namespace

WidthResult lcwd_exact(const Graph& g, Budget budget) { return exact_by_iteration(g, budget, &lcwd_decide); }
WidthResult cwd_exact(const Graph& g, Budget budget) { return exact_by_iteration(g, budget, &cwd_decide); }

}  // namespace cwkit
