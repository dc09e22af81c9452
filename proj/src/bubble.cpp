#include "cwkit/bubble.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cwkit {

namespace {

void validate(const BubbleModel& b) {
    std::set<int> seen;
    int count = 0;
    for (const auto& col : b.columns) {
        if (col.empty()) throw graph_error("bubble model has an empty column");
        for (const auto& bub : col)
            for (int v : bub) {
                if (v < 1 || v > b.n) throw graph_error("bubble vertex id out of range");
                if (!seen.insert(v).second) throw graph_error("bubble model: vertex " + std::to_string(v) + " appears twice");
                ++count;
            }
    }
    if (count != b.n) throw graph_error("bubbles do not partition the vertex set");
}

}  // namespace

Graph bubble_to_graph(const BubbleModel& b) { return bubble_to_graph(b, {}); }

Graph bubble_to_graph(const BubbleModel& b, const std::vector<std::string>& names) {
    validate(b);
    Graph g(b.n);
    for (size_t i = 0; i < names.size() && i < static_cast<size_t>(b.n); ++i)
        if (!names[i].empty()) g.set_name(static_cast<int>(i + 1), names[i]);
    int ncols = static_cast<int>(b.columns.size());
    for (int c = 0; c < ncols; ++c) {
        // same column: clique
        std::vector<int> colverts;
        for (const auto& bub : b.columns[c])
            for (int v : bub) colverts.push_back(v);
        for (size_t i = 0; i < colverts.size(); ++i)
            for (size_t j = i + 1; j < colverts.size(); ++j) g.add_edge(colverts[i], colverts[j]);
        // next column: u at row r ~ v at row r' iff r' <= r
        if (c + 1 >= ncols) continue;
        for (size_t r = 0; r < b.columns[c].size(); ++r)
            for (int u : b.columns[c][r])
                for (size_t r2 = 0; r2 <= r && r2 < b.columns[c + 1].size(); ++r2)
                    for (int v : b.columns[c + 1][r2]) g.add_edge(u, v);
    }
    return g;
}

BubbleModel path_power_bubbles(int k, int n) {
    if (k < 1) throw graph_error("path power bubbles need k >= 1");
    if (n < 1) throw graph_error("path power bubbles need n >= 1");
    BubbleModel b;
    b.n = n;
    int ncols = (n + k - 1) / k;
    b.columns.assign(ncols, {});
    for (int c = 0; c < ncols; ++c) {
        int rows = std::min(k, n - c * k);
        b.columns[c].assign(k, {});
        for (int r = 0; r < rows; ++r) b.columns[c][r] = {c * k + r + 1};
    }
    return b;
}

std::string render_bubbles(const BubbleModel& b, const Graph& g, const std::string& mark) {
    validate(b);
    size_t nrows = 0;
    for (const auto& col : b.columns) nrows = std::max(nrows, col.size());
    auto cell = [&](size_t c, size_t r) -> std::string {
        if (r >= b.columns[c].size()) return "";
        const auto& bub = b.columns[c][r];
        if (bub.empty()) return ".";
        std::ostringstream s;
        s << "[";
        for (size_t i = 0; i < bub.size(); ++i) {
            if (i) s << " ";
            std::string nm = g.name(bub[i]).empty() ? std::to_string(bub[i]) : g.name(bub[i]);
            if (!mark.empty() && nm == mark)
                s << "*" << nm << "*";
            else
                s << nm;
        }
        s << "]";
        return s.str();
    };
    // column widths
    std::vector<size_t> widths(b.columns.size(), 0);
    for (size_t c = 0; c < b.columns.size(); ++c)
        for (size_t r = 0; r < nrows; ++r) widths[c] = std::max(widths[c], cell(c, r).size());
    std::ostringstream out;
    for (size_t r = 0; r < nrows; ++r) {
        std::ostringstream line;
        line << "row " << (r + 1) << ": ";
        for (size_t c = 0; c < b.columns.size(); ++c) {
            std::string s = cell(c, r);
            line << s << std::string(widths[c] - s.size() + 2, ' ');
        }
        std::string l = line.str();
        while (!l.empty() && l.back() == ' ') l.pop_back();
        out << l << "\n";
    }
    return out.str();
}

}  // namespace cwkit
