#include "cwkit/families.hpp"

namespace cwkit {

namespace {

Graph path_power_named(int k, int n, const std::string& prefix, const std::string& suffix = "") {
    if (k < 0) throw graph_error("path power needs k >= 0");
    if (n < 0) throw graph_error("path power needs n >= 0");
    Graph g(n);
    for (int i = 1; i <= n; ++i) g.set_name(i, prefix + std::to_string(i) + suffix);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n && j - i <= k; ++j) g.add_edge(i, j);
    return g;
}

}  // namespace

Graph path_power(int k, int n) {
    if (k < 1) throw graph_error("path power needs k >= 1");
    if (n < 1) throw graph_error("path power needs n >= 1");
    return path_power_named(k, n, "x");
}

JGraph make_J(int k) {
    if (k < 2) throw graph_error("J_k needs k >= 2");
    int m = (2 * k - 1) * (k + 1) + 1;
    int g = k * k - 1;
    return {path_power_named(k, m, "z"), m, g};
}

Graph make_Z(int k) {
    if (k < 0) throw graph_error("Z_k needs k >= 0");
    return path_power_named(k, k * (k + 1) + 2, "v");
}

Graph make_S(int k) {
    if (k < 2) throw graph_error("S_k needs k >= 2");
    int n = (k - 1) * (k + 1) + 2;
    Graph core = path_power_named(k, n, "v");
    Graph g(n + 4);
    for (int v = 1; v <= n; ++v) g.set_name(v, core.name(v));
    for (auto [u, v] : core.edges()) g.add_edge(u, v);
    int w1 = n + 1, w2 = n + 2, w3 = n + 3, w4 = n + 4;
    g.set_name(w1, "w1");
    g.set_name(w2, "w2");
    g.set_name(w3, "w3");
    g.set_name(w4, "w4");
    g.add_edge(w1, w2);
    g.add_edge(w2, 1);
    g.add_edge(n, w3);
    g.add_edge(w3, w4);
    return g;
}

Graph make_S_plus(int k, char variant) {
    if (k < 3) throw graph_error("S+_k needs k >= 3");
    if (variant < 'a' || variant > 'd') throw graph_error("S+ case must be one of a,b,c,d");
    int n = (k - 1) * (k + 1) + 2;
    Graph s = make_S(k);
    Graph g(s.n() + 1);
    for (int v = 1; v <= s.n(); ++v) g.set_name(v, s.name(v));
    for (auto [u, v] : s.edges()) g.add_edge(u, v);
    int wp = s.n() + 1;
    g.set_name(wp, "w^+");
    int w1 = n + 1, w2 = n + 2, w3 = n + 3, w4 = n + 4;
    switch (variant) {
        case 'a':
            g.add_edge(wp, w1);
            g.add_edge(wp, w2);
            for (int i = 1; i <= k; ++i) g.add_edge(wp, i);
            break;
        case 'b':
            for (int i = n - k + 1; i <= n; ++i) g.add_edge(wp, i);
            g.add_edge(wp, w3);
            g.add_edge(wp, w4);
            break;
        case 'c':
            g.add_edge(wp, w1);
            g.add_edge(wp, w2);
            for (int i = 1; i <= k - 1; ++i) g.add_edge(wp, i);
            break;
        case 'd':
            for (int i = n - k + 2; i <= n; ++i) g.add_edge(wp, i);
            g.add_edge(wp, w3);
            g.add_edge(wp, w4);
            break;
    }
    return g;
}

Graph make_F(int k) {
    if (k < 3) throw graph_error("F_k needs k >= 3");
    return path_power_named(k, k * k, "v");
}

Graph make_M(int k, int l) {
    if (k < 3) throw graph_error("M_{k,1,l} needs k >= 3");
    if (l < 0) throw graph_error("M_{k,1,l} needs l >= 0");
    int n = k * k;
    Graph f = path_power_named(k, n, "v");
    Graph fp = path_power_named(k, n, "v'");
    Graph g0 = disjoint_union(f, fp);
    Graph g(2 * n + l);
    for (int v = 1; v <= 2 * n; ++v) g.set_name(v, g0.name(v));
    for (int i = 1; i <= l; ++i) g.set_name(2 * n + i, "w" + std::to_string(i));
    for (auto [u, v] : g0.edges()) g.add_edge(u, v);
    // connector: v_n, w_1, ..., w_l, v'_n is an induced path
    int prev = n;
    for (int i = 1; i <= l; ++i) {
        g.add_edge(prev, 2 * n + i);
        prev = 2 * n + i;
    }
    g.add_edge(prev, 2 * n);
    return g;
}

Graph make_gem() { return path_power(2, 5); }

Graph make_M2(char sign) {
    if (sign != '+' && sign != '-') throw graph_error("M2 sign must be + or -");
    Graph a = path_power_named(2, 5, "x");
    Graph b = path_power_named(2, 5, "x'");
    Graph g = disjoint_union(a, b);
    if (sign == '+') g.add_edge(5, 10);  // x5 -- x'5, the layout-end join
    return g;
}

Graph make_family(const FamilySpec& spec) {
    const std::string& f = spec.family;
    auto need_k = [&](int lo) {
        if (spec.k < lo) throw graph_error(f + " needs --k >= " + std::to_string(lo));
        return spec.k;
    };
    if (f == "path-power") {
        if (spec.n < 1) throw graph_error("path-power needs --n >= 1");
        return path_power(need_k(1), spec.n);
    }
    if (f == "J") return make_J(need_k(2)).graph;
    if (f == "Z") return make_Z(need_k(0));
    if (f == "F") return make_F(need_k(3));
    if (f == "S") return make_S(need_k(2));
    if (f == "S+") {
        if (!spec.variant) throw graph_error("S+ needs --case a|b|c|d");
        return make_S_plus(need_k(3), spec.variant);
    }
    if (f == "M") {
        if (spec.l < 0) throw graph_error("M needs --l >= 0");
        return make_M(need_k(3), spec.l);
    }
    if (f == "M2+") return make_M2('+');
    if (f == "M2-") return make_M2('-');
    if (f == "gem") return make_gem();
    throw graph_error("unknown family '" + f + "'");
}

}  // namespace cwkit
