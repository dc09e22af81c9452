#include "cwkit/embed.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "cwkit/families.hpp"

namespace cwkit {

bool check_embedding(const Embedding& e) {
    int nh = e.guest.n();
    if (static_cast<int>(e.map.size()) != nh) return false;
    std::set<int> targets;
    for (int v = 1; v <= nh; ++v) {
        int t = e.map[v - 1];
        if (t < 1 || t > e.host.n()) return false;
        if (!targets.insert(t).second) return false;
    }
    for (int u = 1; u <= nh; ++u)
        for (int v = u + 1; v <= nh; ++v)
            if (e.guest.adjacent(u, v) != e.host.adjacent(e.map[u - 1], e.map[v - 1])) return false;
    return true;
}

namespace {

int must_id(const Graph& g, const std::string& name) {
    int id = g.id_by_name(name);
    if (!id) throw graph_error("vertex '" + name + "' not found");
    return id;
}

}  // namespace

Embedding phi_Z(int k, int t) {
    if (k < 3) throw graph_error("phi_Z needs k >= 3");
    int n = k * (k + 1) + 2;
    int g = k * k - 1;
    int tmax = k * (k + 1) / 2 + 1;
    if (t < 1 || t > tmax)
        throw graph_error("phi_Z: t must lie in 1.." + std::to_string(tmax) +
                          " (apply the reversal reduction first)");
    Graph Z = make_Z(k);
    JGraph J = make_J(k);
    Embedding e;
    e.guest = delete_vertex(Z, t).graph;
    e.host = delete_vertex(J.graph, g).graph;
    e.map.assign(e.guest.n(), 0);
    for (int i = 1; i <= n; ++i) {
        if (i == t) continue;
        int gid = must_id(e.guest, "v" + std::to_string(i));
        int hid = must_id(e.host, "z" + std::to_string(g - t + i));
        e.map[gid - 1] = hid;
    }
    return e;
}

std::pair<int, char> phi_S_reversal(int k, int t, char variant) {
    int n = (k - 1) * (k + 1) + 2;
    char rev;
    switch (variant) {
        case 'a': rev = 'b'; break;
        case 'b': rev = 'a'; break;
        case 'c': rev = 'd'; break;
        case 'd': rev = 'c'; break;
        default: throw graph_error("S+ case must be one of a,b,c,d");
    }
    return {n - t + 1, rev};
}

PhiSResult phi_S(int k, int t, char variant) {
    if (k < 3) throw graph_error("phi_S needs k >= 3");
    if (variant < 'a' || variant > 'd') throw graph_error("S+ case must be one of a,b,c,d");
    int n = (k - 1) * (k + 1) + 2;
    int g = k * k - 1;
    int tmax = ((k - 1) * (k + 1) + 1) / 2 + 1;
    if (t < 1 || t > tmax)
        throw graph_error("phi_S: t must lie in 1.." + std::to_string(tmax) +
                          " (apply the reversal reduction first)");
    if (g - t - k < 1) {
        // left extension has no room; happens exactly at (k,t) = (3,5)
        return {true, std::nullopt};
    }
    Graph SP = make_S_plus(k, variant);
    JGraph J = make_J(k);
    Embedding e;
    e.guest = delete_vertex(SP, t).graph;  // v_t has id t
    e.host = delete_vertex(J.graph, g).graph;
    e.map.assign(e.guest.n(), 0);
    auto assign = [&](const std::string& gname, int hostindex) {
        e.map[must_id(e.guest, gname) - 1] = must_id(e.host, "z" + std::to_string(hostindex));
    };
    for (int i = 1; i <= n; ++i) {
        if (i == t) continue;
        assign("v" + std::to_string(i), g - t + i);
    }
    assign("w1", g - t - k);
    assign("w2", g - t - k + 1);
    assign("w3", g - t + n + k);
    assign("w4", g - t + n + k + 1);
    // w^+ goes to one of two shifted slots; adjacency picks the right one,
    // and when the distinguishing vertex is exactly v_t both fit -- take the
    // case's canonical slot first
    std::vector<int> candidates;
    switch (variant) {
        case 'a': candidates = {g - t, g - t - 1}; break;
        case 'c': candidates = {g - t - 1, g - t}; break;
        case 'b': candidates = {g - t + n + 1, g - t + n + 2}; break;
        case 'd': candidates = {g - t + n + 2, g - t + n + 1}; break;
    }
    int wp = must_id(e.guest, "w^+");
    for (int cand : candidates) {
        e.map[wp - 1] = must_id(e.host, "z" + std::to_string(cand));
        if (check_embedding(e)) return {false, std::move(e)};
    }
    throw graph_error("phi_S: neither w^+ candidate realizes the case-" + std::string(1, variant) +
                      " neighbourhood (k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
}

EmbedOutcome find_embedding(const Graph& guest, const Graph& host, Budget budget) {
    if (guest.n() > 64 || host.n() > 64) throw graph_error("find_embedding supports at most 64 vertices");
    EmbedOutcome out;
    int nh = guest.n(), ng = host.n();
    if (nh == 0) {
        out.embedding = Embedding{guest, host, {}};
        out.exhausted = true;
        return out;
    }
    if (nh > ng) {
        out.exhausted = true;
        return out;
    }
    std::vector<uint64_t> gadj(nh, 0), hadj(ng, 0);
    for (int v = 1; v <= nh; ++v)
        for (int u : guest.neighbors(v)) gadj[v - 1] |= uint64_t(1) << (u - 1);
    for (int v = 1; v <= ng; ++v)
        for (int u : host.neighbors(v)) hadj[v - 1] |= uint64_t(1) << (u - 1);
    // order guest vertices: most edges into the already-ordered part, then degree
    std::vector<int> order;
    uint64_t chosen = 0;
    for (int step = 0; step < nh; ++step) {
        int best = -1, bconn = -1, bdeg = -1;
        for (int v = 0; v < nh; ++v) {
            if ((chosen >> v) & 1) continue;
            int conn = __builtin_popcountll(gadj[v] & chosen);
            int deg = __builtin_popcountll(gadj[v]);
            if (conn > bconn || (conn == bconn && deg > bdeg)) {
                best = v;
                bconn = conn;
                bdeg = deg;
            }
        }
        order.push_back(best);
        chosen |= uint64_t(1) << best;
    }
    std::vector<int> assign(nh, -1);
    uint64_t used = 0;
    long long nodes = 0;
    bool hit_budget = false;
    auto t0 = std::chrono::steady_clock::now();
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == nh) return true;
        int v = order[i];
        if (++nodes > budget.max_nodes) {
            hit_budget = true;
            return false;
        }
        if ((nodes & 0xfff) == 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() > budget.seconds) {
            hit_budget = true;
            return false;
        }
        int vdeg = __builtin_popcountll(gadj[v]);
        for (int h = 0; h < ng; ++h) {
            if ((used >> h) & 1) continue;
            if (__builtin_popcountll(hadj[h]) < vdeg) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                int u = order[j];
                bool ge = (gadj[v] >> u) & 1;
                bool he = (hadj[h] >> assign[u]) & 1;
                if (ge != he) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assign[v] = h;
            used |= uint64_t(1) << h;
            if (self(self, i + 1)) return true;
            used &= ~(uint64_t(1) << h);
            assign[v] = -1;
            if (hit_budget) return false;
        }
        return false;
    };
    bool found = rec(rec, 0);
    out.nodes = nodes;
    if (found) {
        Embedding e{guest, host, {}};
        e.map.resize(nh);
        for (int v = 0; v < nh; ++v) e.map[v] = assign[v] + 1;
        out.embedding = std::move(e);
        return out;
    }
    out.exhausted = !hit_budget;
    return out;
}

std::string format_embedding(const Embedding& e) {
    std::ostringstream out;
    for (int v = 1; v <= e.guest.n(); ++v) {
        std::string gn = e.guest.name(v).empty() ? std::to_string(v) : e.guest.name(v);
        int h = e.map[v - 1];
        std::string hn = e.host.name(h).empty() ? std::to_string(h) : e.host.name(h);
        out << gn << " -> " << hn << "\n";
    }
    return out.str();
}

Embedding read_embedding(std::string_view text, Graph guest, Graph host) {
    Embedding e{std::move(guest), std::move(host), {}};
    e.map.assign(e.guest.n(), 0);
    std::istringstream in{std::string(text)};
    std::string gname, arrow, hname;
    int lineno = 0;
    while (in >> gname) {
        ++lineno;
        if (!(in >> arrow >> hname) || arrow != "->")
            throw parse_error(lineno, 1, "expected '<guest> -> <host>'");
        int gid = e.guest.id_by_name(gname);
        if (!gid && !gname.empty() && gname.find_first_not_of("0123456789") == std::string::npos)
            gid = std::stoi(gname);
        int hid = e.host.id_by_name(hname);
        if (!hid && !hname.empty() && hname.find_first_not_of("0123456789") == std::string::npos)
            hid = std::stoi(hname);
        if (gid < 1 || gid > e.guest.n()) throw parse_error(lineno, 1, "unknown guest vertex '" + gname + "'");
        if (hid < 1 || hid > e.host.n()) throw parse_error(lineno, 1, "unknown host vertex '" + hname + "'");
        e.map[gid - 1] = hid;
    }
    return e;
}

}  // namespace cwkit
