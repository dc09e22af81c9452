// Internal search engine for linear-width decisions. Shared by the exact
// solver and the certificate search; not part of the public API.
#ifndef CWKIT_LCWD_ENGINE_HPP
#define CWKIT_LCWD_ENGINE_HPP

#include <array>
#include <chrono>
#include <cstring>
#include <unordered_set>
#include <vector>

#include "cwkit/cwexpr.hpp"
#include "cwkit/graph.hpp"
#include "cwkit/solver.hpp"

namespace cwkit::detail {

constexpr int kMaxClasses = 8;

struct DenseGraph {
    int n = 0;
    std::vector<uint64_t> adj;  // adj[v] bitmask, 0-based
    std::vector<std::string> names;
};

inline DenseGraph densify(const Graph& g) {
    if (g.n() > 64) throw graph_error("solver supports at most 64 vertices, got " + std::to_string(g.n()));
    DenseGraph d;
    d.n = g.n();
    d.adj.assign(g.n(), 0);
    d.names.resize(g.n());
    for (int v = 1; v <= g.n(); ++v) {
        d.names[v - 1] = g.name(v).empty() ? "u" + std::to_string(v) : g.name(v);
        for (int u : g.neighbors(v)) d.adj[v - 1] |= uint64_t(1) << (u - 1);
    }
    return d;
}

// Live classes are uniform: all members share the same future neighborhood,
// so futN(class) can be read off any one member. Dead vertices (no unplaced
// neighbors) share a single implicit class.
struct LcwdState {
    uint64_t placed = 0;
    uint64_t dead = 0;
    std::array<uint64_t, kMaxClasses> live{};
    int nlive = 0;

    void sort_live() { std::sort(live.begin(), live.begin() + nlive); }

    bool operator==(const LcwdState& o) const {
        return placed == o.placed && dead == o.dead && nlive == o.nlive &&
               std::memcmp(live.data(), o.live.data(), sizeof(uint64_t) * nlive) == 0;
    }
};

struct LcwdStateHash {
    size_t operator()(const LcwdState& s) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(s.placed);
        mix(s.dead);
        for (int i = 0; i < s.nlive; ++i) mix(s.live[i]);
        return static_cast<size_t>(h);
    }
};

struct Move {
    enum class Kind { Fresh, Direct, DirectDead, Merge } kind;
    int v = -1;        // inserted vertex (0-based), for inserts
    uint64_t a = 0;    // target class mask (Direct), or first merge class
    uint64_t b = 0;    // second merge class
};

class LcwdEngine {
public:
    LcwdEngine(const DenseGraph& g, int w, Budget budget, const std::vector<int>* root_orbits)
        : g_(g), w_(w), budget_(budget), orbits_(root_orbits) {
        full_ = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;
        t0_ = std::chrono::steady_clock::now();
    }

    // Yes: moves() holds the construction; No: exhausted; Unknown: budget.
    Answer run();

    const std::vector<Move>& moves() const { return moves_; }
    long long nodes() const { return nodes_; }
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

    // transition helpers, shared with certificate replay and the beam search
    uint64_t futn_of(uint64_t cls, uint64_t placed) const {
        int v0 = __builtin_ctzll(cls);
        return g_.adj[v0] & ~placed;
    }
    bool apply_fresh(const LcwdState& s, int v, LcwdState& out) const;
    bool apply_direct(const LcwdState& s, int v, int class_idx, LcwdState& out) const;
    bool apply_direct_dead(const LcwdState& s, int v, LcwdState& out) const;
    bool apply_merge(const LcwdState& s, int i, int j, LcwdState& out) const;
    void successors(const LcwdState& s, std::vector<std::pair<Move, LcwdState>>& out) const;

    uint64_t full() const { return full_; }

private:
    // moves v's class updates after placement; assigns newly dead classes to dead
    void settle(LcwdState& st) const;
    bool over_budget();

    const DenseGraph& g_;
    int w_;
    Budget budget_;
    const std::vector<int>* orbits_;
    uint64_t full_;
    long long nodes_ = 0;
    std::chrono::steady_clock::time_point t0_;
    std::vector<Move> moves_;
};

// Builds the expression realizing a move sequence; labels drawn from 1..w.
CwExprPtr replay_moves(const DenseGraph& g, int w, const std::vector<Move>& moves);

// Beam search over the same states; yes-or-unknown only.
struct BeamResult {
    bool found = false;
    std::vector<Move> moves;
    long long nodes = 0;
};
BeamResult beam_search(const DenseGraph& g, int w, int beam_width, Budget budget);

}  // namespace cwkit::detail

#endif
