#include "cwkit/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cwkit {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw graph_error("negative vertex count");
    int w = (n + 63) / 64;
    rows_.assign(n, std::vector<uint64_t>(std::max(w, 1), 0));
    names_.assign(n, "");
}

int Graph::check(int v) const {
    if (v < 1 || v > n_) throw graph_error("vertex id " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    return v;
}

bool Graph::adjacent(int u, int v) const {
    check(u);
    check(v);
    return (rows_[u - 1][(v - 1) / 64] >> ((v - 1) % 64)) & 1;
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw graph_error("loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) return;
    rows_[u - 1][(v - 1) / 64] |= uint64_t(1) << ((v - 1) % 64);
    rows_[v - 1][(u - 1) / 64] |= uint64_t(1) << ((u - 1) % 64);
    ++m_;
}

const std::string& Graph::name(int v) const {
    check(v);
    return names_[v - 1];
}

void Graph::set_name(int v, std::string name) {
    check(v);
    if (!name.empty()) {
        int other = id_by_name(name);
        if (other != 0 && other != v) throw graph_error("duplicate vertex name '" + name + "'");
    }
    names_[v - 1] = std::move(name);
}

int Graph::id_by_name(std::string_view name) const {
    if (name.empty()) return 0;
    for (int v = 1; v <= n_; ++v)
        if (names_[v - 1] == name) return v;
    return 0;
}

int Graph::degree(int v) const {
    check(v);
    int d = 0;
    for (uint64_t w : rows_[v - 1]) d += __builtin_popcountll(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    check(v);
    std::vector<int> out;
    const auto& r = rows_[v - 1];
    for (size_t wi = 0; wi < r.size(); ++wi) {
        uint64_t w = r[wi];
        while (w) {
            int b = __builtin_ctzll(w);
            w &= w - 1;
            out.push_back(static_cast<int>(wi * 64 + b + 1));
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 1; u <= n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& o) const {
    return n_ == o.n_ && m_ == o.m_ && rows_ == o.rows_ && names_ == o.names_;
}

Reindexed induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> s(keep);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
        if (v < 1 || v > g.n()) throw graph_error("vertex id " + std::to_string(v) + " out of range");
    Graph h(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) h.set_name(static_cast<int>(i + 1), g.name(s[i]));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j])) h.add_edge(static_cast<int>(i + 1), static_cast<int>(j + 1));
    return {std::move(h), std::move(s)};
}

Reindexed delete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.n()) throw graph_error("vertex id " + std::to_string(v) + " out of range");
    std::vector<int> keep;
    keep.reserve(g.n() - 1);
    for (int u = 1; u <= g.n(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (int v = 1; v <= a.n(); ++v)
        if (!a.name(v).empty()) g.set_name(v, a.name(v));
    for (int v = 1; v <= b.n(); ++v) {
        // colliding names are dropped on the right operand
        if (!b.name(v).empty() && g.id_by_name(b.name(v)) == 0) g.set_name(a.n() + v, b.name(v));
    }
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(a.n() + u, a.n() + v);
    return g;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(g.n() + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= g.n(); ++s) {
        if (comp[s]) continue;
        out.emplace_back();
        int id = static_cast<int>(out.size());
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            out.back().push_back(u);
            for (int v : g.neighbors(u))
                if (!comp[v]) {
                    comp[v] = id;
                    stack.push_back(v);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// canonical labeling: iterated neighborhood refinement + individualization

namespace {

// color[i] is 0-based vertex i's color; rewrites colors as ranks of
// (color, sorted neighbor-color multiset) signatures until stable
void refine(const Graph& g, std::vector<int>& color) {
    int n = g.n();
    for (;;) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<int> s;
            s.push_back(color[i]);
            for (int u : g.neighbors(i + 1)) s.push_back(color[u - 1]);
            std::sort(s.begin() + 1, s.end());
            sig[i] = {std::move(s), i};
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> next(n);
        int rank = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && sorted[i].first != sorted[i - 1].first) ++rank;
            next[sorted[i].second] = rank;
        }
        if (next == color) return;
        color = std::move(next);
    }
}

// upper-triangle adjacency bits of g under ordering ord (ord[pos] = 0-based vertex)
std::vector<uint8_t> form_bits(const Graph& g, const std::vector<int>& ord) {
    int n = g.n();
    std::vector<uint8_t> bits;
    bits.reserve(n * (n - 1) / 16 + 2);
    uint8_t cur = 0;
    int fill = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            cur = static_cast<uint8_t>(cur << 1 | (g.adjacent(ord[i] + 1, ord[j] + 1) ? 1 : 0));
            if (++fill == 8) {
                bits.push_back(cur);
                cur = 0;
                fill = 0;
            }
        }
    if (fill) bits.push_back(static_cast<uint8_t>(cur << (8 - fill)));
    return bits;
}

}  // namespace

std::vector<uint8_t> canonical_form_colored(const Graph& g, const std::vector<int>& init_colors,
                                            IsoBudget budget) {
    struct Ctx {
        const Graph& g;
        long long nodes = 0;
        long long max_nodes;
        std::vector<uint8_t> best;
        bool have_best = false;

        void search(std::vector<int> color) {
            if (++nodes > max_nodes) throw budget_error("isomorphism budget exceeded");
            refine(g, color);
            int n = g.n();
            std::vector<int> count(n, 0);
            for (int c : color) ++count[c];
            int target = -1;
            for (int c = 0; c < n; ++c)
                if (count[c] > 1) {
                    target = c;
                    break;
                }
            if (target < 0) {
                std::vector<int> ord(n);
                for (int i = 0; i < n; ++i) ord[color[i]] = i;
                auto bits = form_bits(g, ord);
                if (!have_best || bits < best) {
                    best = std::move(bits);
                    have_best = true;
                }
                return;
            }
            for (int v = 0; v < n; ++v) {
                if (color[v] != target) continue;
                std::vector<int> c2(color);
                for (int i = 0; i < n; ++i)
                    if (c2[i] >= target && i != v) c2[i] += 1;
                search(std::move(c2));
            }
        }
    };
    if (g.n() == 0) return {};
    std::vector<int> color(init_colors);
    if (static_cast<int>(color.size()) != g.n()) throw graph_error("color vector size mismatch");
    Ctx ctx{g, 0, budget.max_nodes, {}, false};
    ctx.search(std::move(color));
    // prepend the multiset of initial colors so differently-colored graphs differ
    std::vector<uint8_t> out;
    out.push_back(static_cast<uint8_t>(g.n()));
    std::vector<int> cs(init_colors);
    std::sort(cs.begin(), cs.end());
    for (int c : cs) {
        out.push_back(static_cast<uint8_t>(c & 0xff));
        out.push_back(static_cast<uint8_t>((c >> 8) & 0xff));
    }
    out.insert(out.end(), ctx.best.begin(), ctx.best.end());
    return out;
}

std::vector<uint8_t> canonical_form(const Graph& g, IsoBudget budget) {
    return canonical_form_colored(g, std::vector<int>(g.n(), 0), budget);
}

bool is_isomorphic(const Graph& a, const Graph& b, IsoBudget budget) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da, db;
    for (int v = 1; v <= a.n(); ++v) da.push_back(a.degree(v));
    for (int v = 1; v <= b.n(); ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a, budget) == canonical_form(b, budget);
}

std::vector<int> vertex_orbits(const Graph& g, IsoBudget budget) {
    int n = g.n();
    std::vector<int> orbit(n + 1, 0);
    std::map<std::vector<uint8_t>, int> seen;
    for (int v = 1; v <= n; ++v) {
        std::vector<int> colors(n, 0);
        colors[v - 1] = 1;
        auto form = canonical_form_colored(g, colors, budget);
        auto it = seen.find(form);
        if (it == seen.end()) {
            int id = static_cast<int>(seen.size()) + 1;
            seen.emplace(std::move(form), id);
            orbit[v] = id;
        } else {
            orbit[v] = it->second;
        }
    }
    return orbit;
}

// ---------------------------------------------------------------------------
// file format

parse_error::parse_error(int line_, int col_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
      line(line_),
      col(col_) {}

Graph read_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    bool have_header = false;
    int n = 0, m = 0, edges_seen = 0;
    Graph g;
    std::set<std::pair<int, int>> seen_edges;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "g") {
            if (have_header) throw parse_error(lineno, 1, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0) throw parse_error(lineno, 1, "malformed header, expected 'g <n> <m>'");
            g = Graph(n);
            have_header = true;
        } else if (tag == "v") {
            if (!have_header) throw parse_error(lineno, 1, "vertex line before header");
            int id;
            std::string name;
            if (!(ls >> id >> name)) throw parse_error(lineno, 1, "malformed vertex line, expected 'v <id> <name>'");
            if (id < 1 || id > n) throw parse_error(lineno, 1, "vertex id out of range");
            if (!g.name(id).empty()) throw parse_error(lineno, 1, "vertex " + std::to_string(id) + " named twice");
            try {
                g.set_name(id, name);
            } catch (const graph_error& e) {
                throw parse_error(lineno, 1, e.what());
            }
        } else if (tag == "e") {
            if (!have_header) throw parse_error(lineno, 1, "edge line before header");
            int u, v;
            if (!(ls >> u >> v)) throw parse_error(lineno, 1, "malformed edge line, expected 'e <u> <v>'");
            if (u < 1 || u > n || v < 1 || v > n) throw parse_error(lineno, 1, "edge endpoint out of range");
            if (u == v) throw parse_error(lineno, 1, "loop edge " + std::to_string(u) + "-" + std::to_string(v));
            if (u > v) std::swap(u, v);
            if (!seen_edges.emplace(u, v).second) throw parse_error(lineno, 1, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
            g.add_edge(u, v);
            ++edges_seen;
        } else {
            throw parse_error(lineno, 1, "unknown line tag '" + tag + "'");
        }
    }
    if (!have_header) throw parse_error(lineno ? lineno : 1, 1, "missing 'g <n> <m>' header");
    if (edges_seen != m) throw parse_error(lineno, 1, "header announced " + std::to_string(m) + " edges, file has " + std::to_string(edges_seen));
    return g;
}

std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "g " << g.n() << " " << g.m() << "\n";
    for (int v = 1; v <= g.n(); ++v)
        if (!g.name(v).empty()) out << "v " << v << " " << g.name(v) << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw graph_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_graph(buf.str());
}

void write_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw graph_error("cannot write " + path);
    out << write_graph(g);
}

}  // namespace cwkit
