#ifndef CWKIT_EMBED_HPP
#define CWKIT_EMBED_HPP

#include <optional>
#include <string>
#include <vector>

#include "cwkit/graph.hpp"
#include "cwkit/solver.hpp"

namespace cwkit {

/// Injective vertex map witnessing an induced-subgraph relation.
struct Embedding {
    Graph guest;
    Graph host;
    std::vector<int> map;  // map[guest_id - 1] = host_id
};

/// True iff map is injective and preserves both edges and non-edges.
bool check_embedding(const Embedding& e);

/// Shift embedding of Z_k - v_t into J_k - z_g (v_i -> z_{g-t+i}).
/// k >= 3, 1 <= t <= k(k+1)/2 + 1; throws on parameters outside that range.
Embedding phi_Z(int k, int t);

/// Extended shift embedding of S+_k - v_t into J_k - z_g, covering
/// w_1..w_4 and w^+. At (k,t) = (3,5) the target indices leave the host, and
/// no embedding exists: Unavailable is reported instead.
struct PhiSResult {
    bool unavailable = false;
    std::optional<Embedding> embedding;
};
PhiSResult phi_S(int k, int t, char variant);

/// S+_k - v_t for t above the lemma range is isomorphic to S+_k - v_{n-t+1}
/// with the reversed case; returns (t', case') under the index reversal.
std::pair<int, char> phi_S_reversal(int k, int t, char variant);

struct EmbedOutcome {
    std::optional<Embedding> embedding;
    bool exhausted = false;  // meaningful when no embedding was found
    long long nodes = 0;
};

/// Backtracking induced-subgraph search with degree pruning. A miss with
/// exhausted=true is a verified negative; without it, only "unknown".
EmbedOutcome find_embedding(const Graph& guest, const Graph& host, Budget budget = {});

std::string format_embedding(const Embedding& e);

/// Inverse of format_embedding: reads "guest -> host" name lines.
Embedding read_embedding(std::string_view text, Graph guest, Graph host);

}  // namespace cwkit

#endif
