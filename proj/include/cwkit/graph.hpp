#ifndef CWKIT_GRAPH_HPP
#define CWKIT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cwkit {

class graph_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple undirected graph. Vertex ids are 1..n; names are optional and
/// unique when present. Immutable in spirit: mutate only while building.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int m() const { return m_; }

    bool adjacent(int u, int v) const;
    void add_edge(int u, int v);  // rejects loops and out-of-range ids

    const std::string& name(int v) const;
    void set_name(int v, std::string name);
    // 0 if no vertex carries the name
    int id_by_name(std::string_view name) const;

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    // adjacency bit row of v, bit (u-1) set iff u ~ v
    const std::vector<uint64_t>& row(int v) const { return check(v), rows_[v - 1]; }
    int words() const { return static_cast<int>(rows_.empty() ? 0 : rows_[0].size()); }

    std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

    bool operator==(const Graph& o) const;

private:
    int check(int v) const;
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<std::string> names_;
};

/// Result of an id-changing operation: the graph plus the translation
/// old_id[new_id - 1] = id in the source graph.
struct Reindexed {
    Graph graph;
    std::vector<int> old_id;
};

Reindexed delete_vertex(const Graph& g, int v);
Reindexed induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph disjoint_union(const Graph& a, const Graph& b);

std::vector<std::vector<int>> connected_components(const Graph& g);

struct IsoBudget {
    long long max_nodes = 20'000'000;
};

/// Canonical form: byte string invariant under vertex relabeling (names
/// ignored). Exact; throws budget_error if the refinement/backtracking
/// budget runs out.
std::vector<uint8_t> canonical_form(const Graph& g, IsoBudget budget = {});
std::vector<uint8_t> canonical_form_colored(const Graph& g, const std::vector<int>& init_colors,
                                            IsoBudget budget = {});
bool is_isomorphic(const Graph& a, const Graph& b, IsoBudget budget = {});

/// orbit id per vertex (1-based index, orbit ids are arbitrary but equal
/// exactly for vertices related by an automorphism)
std::vector<int> vertex_orbits(const Graph& g, IsoBudget budget = {});

class parse_error : public std::runtime_error {
public:
    parse_error(int line, int col, const std::string& msg);
    int line;
    int col;
};

Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

}  // namespace cwkit

#endif
