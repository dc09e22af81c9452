// Acceptance suite: one line per criterion, nonzero exit on any hard failure.
// Stretch sub-items may report "unknown" under tight budgets without failing
// the suite; with the default budgets they are expected to verify.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "cwkit/cwexpr.hpp"
#include "cwkit/embed.hpp"
#include "cwkit/families.hpp"
#include "cwkit/graph.hpp"
#include "cwkit/solver.hpp"
#include "cwkit/synth.hpp"

using namespace cwkit;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool pass = true;
    bool stretch_unknown = false;
    std::ostringstream detail;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }

    void finish() {
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS]" : "[FAIL]") << " " << name;
        if (stretch_unknown) std::cout << " (stretch sub-item unknown, allowed)";
        std::string d = detail.str();
        if (!d.empty()) std::cout << " --" << d;
        char buf[32];
        snprintf(buf, sizeof buf, "%.1fs", secs);
        std::cout << "  (" << buf << ")\n";
        std::cout.flush();
    }
};

Budget stretch_budget() {
    Budget b;
    b.seconds = 7200;
    b.max_nodes = 400'000'000;
    if (const char* env = std::getenv("CWKIT_STRETCH_SECONDS")) b.seconds = std::atof(env);
    return b;
}

Graph delete_named(const Graph& g, const std::string& name) {
    return delete_vertex(g, g.id_by_name(name)).graph;
}

void criterion1() {
    Criterion c("criterion 1: shift embeddings of Z_k deletions (k=3..6, every t)");
    int count = 0;
    for (int k : {3, 4, 5, 6}) {
        int tmax = k * (k + 1) / 2 + 1;
        for (int t = 1; t <= tmax; ++t) {
            Embedding e = phi_Z(k, t);
            c.require(check_embedding(e), "phi_Z k=" + std::to_string(k) + " t=" + std::to_string(t));
            ++count;
        }
    }
    c.detail << " " << count << " embeddings checked";
    c.finish();
}

void criterion2() {
    Criterion c("criterion 2: extended shift embeddings of S+_k deletions, exception at (3,5)");
    int embedded = 0;
    std::vector<std::string> unavailable;
    for (int k : {3, 4, 5}) {
        int tmax = ((k - 1) * (k + 1) + 1) / 2 + 1;
        for (int t = 1; t <= tmax; ++t)
            for (char v : {'a', 'b', 'c', 'd'}) {
                PhiSResult pr = phi_S(k, t, v);
                if (pr.unavailable) {
                    unavailable.push_back(std::to_string(k) + "," + std::to_string(t) + "," + v);
                    continue;
                }
                c.require(pr.embedding && check_embedding(*pr.embedding),
                          "phi_S k=" + std::to_string(k) + " t=" + std::to_string(t) + " case " + v);
                ++embedded;
            }
    }
    c.require(unavailable == std::vector<std::string>{"3,5,a", "3,5,b", "3,5,c", "3,5,d"},
              "unavailable set must be exactly (3,5) in all four cases");
    for (char v : {'a', 'c'}) {
        Graph sp = delete_named(make_S_plus(3, v), "v5");
        SynthResult sr = search_certificate(sp, 4);
        c.require(sr.found, std::string("certificate for S+_3(") + v + ")-v5");
        if (sr.found) c.require(check_certificate(*sr.certificate, sp, 4, true).ok, "certificate check");
    }
    c.detail << " " << embedded << " embeddings + searched certificates for the exception";
    c.finish();
}

void criterion3() {
    Criterion c("criterion 3: tree-width lower bounds for Z_1 and Z_2");
    DecideResult z1 = cwd_decide(make_Z(1), 2);
    c.require(z1.answer == Answer::No, "cwd_decide(Z_1,2) = no");
    DecideResult z2 = cwd_decide(make_Z(2), 3);
    c.require(z2.answer == Answer::No, "cwd_decide(Z_2,3) = no");
    c.detail << " cwd(Z_1)>=3, cwd(Z_2)>=4 verified; k>=3 out of desk scale";
    c.finish();
}

void criterion4() {
    Criterion c("criterion 4: cwd(S_2)>=4; stretch: lcwd(S_3)>=5 and cwd(S_3)<=4");
    DecideResult s2 = cwd_decide(make_S(2), 3);
    c.require(s2.answer == Answer::No, "cwd_decide(S_2,3) = no");
    Budget b = stretch_budget();
    Graph s3 = make_S(3);
    DecideResult lo = lcwd_decide(s3, 4, b);
    if (lo.answer == Answer::Unknown)
        c.stretch_unknown = true;
    else
        c.require(lo.answer == Answer::No, "lcwd_decide(S_3,4) = no");
    DecideResult hi = cwd_decide(s3, 4, b);
    if (hi.answer == Answer::Unknown)
        c.stretch_unknown = true;
    else {
        c.require(hi.answer == Answer::Yes, "cwd_decide(S_3,4) = yes");
        if (hi.certificate) c.require(check_certificate(*hi.certificate, s3, 4, false).ok, "S_3 certificate");
    }
    c.finish();
}

void criterion5() {
    Criterion c("criterion 5: linear-width lower bounds for both M2 graphs");
    for (char sign : {'+', '-'}) {
        DecideResult d = lcwd_decide(make_M2(sign), 3);
        c.require(d.answer == Answer::No, std::string("lcwd_decide(M2") + sign + ",3) = no");
    }
    c.detail << " lcwd(M2+/-)>=4 verified";
    c.finish();
}

void criterion6() {
    Criterion c("criterion 6: minimality of Z_2 and Z_3");
    Graph z2 = make_Z(2);
    for (int t = 1; t <= 8; ++t) {
        WidthResult wr = lcwd_exact(delete_vertex(z2, t).graph);
        c.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3,
                  "lcwd_exact(Z_2-v" + std::to_string(t) + ") <= 3");
    }
    Graph zd = delete_named(z2, "v4");
    CwExprPtr e = eager_expression(zd, ordering_by_names(zd, {"v8", "v7", "v6", "v5", "v3", "v2", "v1"}));
    c.require(width(*e) <= 3 && check_certificate(*e, zd, 3, true).ok,
              "eager ordering <v8..v1> width <= 3");
    Graph z3 = make_Z(3);
    for (int t = 1; t <= 14; ++t) {
        DecideResult d = lcwd_decide(delete_vertex(z3, t).graph, 4);
        c.require(d.answer == Answer::Yes, "lcwd_decide(Z_3-v" + std::to_string(t) + ",4) = yes");
    }
    c.detail << " all 8+14 deletions bounded, recorded ordering reproduced";
    c.finish();
}

void criterion7() {
    Criterion c("criterion 7: minimality around S+_3 and S_2");
    Graph sp = make_S_plus(3, 'c');
    for (int x = 1; x <= sp.n(); ++x) {
        if (sp.name(x) == "w^+") continue;
        DecideResult d = lcwd_decide(delete_vertex(sp, x).graph, 4);
        c.require(d.answer == Answer::Yes, "lcwd_decide(S+_3(c)-" + sp.name(x) + ",4) = yes");
    }
    Graph s2 = make_S(2);
    for (int x = 1; x <= s2.n(); ++x) {
        WidthResult wr = lcwd_exact(delete_vertex(s2, x).graph);
        c.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3,
                  "lcwd_exact(S_2-" + s2.name(x) + ") <= 3");
    }
    Graph guest = delete_named(make_S_plus(3, 'a'), "w4");
    Graph host = delete_vertex(make_J(3).graph, make_J(3).g).graph;
    EmbedOutcome eo = find_embedding(guest, host);
    c.require(!eo.embedding && eo.exhausted, "S+_3(a)-w4 does not embed into J_3-z_8 (exhaustive)");
    c.detail << " 14 searched deletions, 9 exact deletions, verified non-embedding ("
             << eo.nodes << " nodes)";
    c.finish();
}

void criterion8() {
    Criterion c("criterion 8: minimality of the M graphs");
    for (char sign : {'+', '-'}) {
        Graph m2 = make_M2(sign);
        for (int v = 1; v <= m2.n(); ++v) {
            WidthResult wr = lcwd_exact(delete_vertex(m2, v).graph);
            c.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3,
                      std::string("lcwd_exact(M2") + sign + "-" + m2.name(v) + ") <= 3");
        }
    }
    Budget b = stretch_budget();
    int found = 0;
    for (int l : {0, 1, 2}) {
        Graph m = make_M(3, l);
        for (int x = 1; x <= m.n(); ++x) {
            Graph mx = delete_vertex(m, x).graph;
            SynthResult sr = search_certificate(mx, 4, b);
            if (!sr.found && !sr.exhausted) {
                c.stretch_unknown = true;  // budget starved the search
                continue;
            }
            bool ok = sr.found && check_certificate(*sr.certificate, mx, 4, true).ok;
            c.require(ok, "certificate for M_{3,1," + std::to_string(l) + "}-" + m.name(x));
            found += ok;
        }
    }
    DecideResult d = lcwd_decide(make_M(3, 0), 4, b);
    if (d.answer == Answer::Unknown)
        c.stretch_unknown = true;
    else
        c.require(d.answer == Answer::No, "lcwd_decide(M_{3,1,0},4) = no");
    c.detail << " 20 exact deletions; " << found << " searched certificates; lower bound side "
             << (d.answer == Answer::No ? "verified" : "unknown");
    c.finish();
}

void criterion9() {
    Criterion c("criterion 9: the J hosts have small linear width");
    Graph j2 = delete_vertex(make_J(2).graph, make_J(2).g).graph;
    WidthResult wr = lcwd_exact(j2);
    c.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3, "lcwd_exact(J_2-z_3) <= 3");
    for (int k : {3, 4}) {
        JGraph j = make_J(k);
        Graph host = delete_vertex(j.graph, j.g).graph;
        SynthResult sr = search_certificate(host, k + 1);
        bool ok = sr.found && check_certificate(*sr.certificate, host, k + 1, true).ok;
        c.require(ok, "search_certificate(J_" + std::to_string(k) + "-z_g," + std::to_string(k + 1) + ")");
    }
    c.detail << " exact value 3 at k=2; checked certificates at k=3,4";
    c.finish();
}

void criterion10() {
    Criterion c("criterion 10: oracle gate over the full small-graph catalog");
    long lin_checked = 0, tree_checked = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
        std::vector<std::vector<uint8_t>> seen;
        for (uint32_t mask = 0; mask < (uint32_t(1) << pairs.size()); ++mask) {
            Graph g(n);
            for (size_t bit = 0; bit < pairs.size(); ++bit)
                if ((mask >> bit) & 1) g.add_edge(pairs[bit].first, pairs[bit].second);
            auto form = canonical_form(g);
            bool fresh = true;
            for (const auto& f : seen)
                if (f == form) {
                    fresh = false;
                    break;
                }
            if (!fresh) continue;
            seen.push_back(std::move(form));
            for (int w = 1; w <= n; ++w) {
                DecideResult lin = lcwd_decide(g, w);
                bool naive = naive_lcwd_decide(g, w);
                if (lin.answer == Answer::Unknown || (lin.answer == Answer::Yes) != naive) {
                    c.require(false, "lcwd mismatch at n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                                         " w=" + std::to_string(w));
                }
                ++lin_checked;
                if (n <= 5) {
                    DecideResult tree = cwd_decide(g, w);
                    bool tnaive = naive_cwd_decide(g, w);
                    if (tree.answer == Answer::Unknown || (tree.answer == Answer::Yes) != tnaive) {
                        c.require(false, "cwd mismatch at n=" + std::to_string(n) + " mask=" + std::to_string(mask) +
                                             " w=" + std::to_string(w));
                    }
                    ++tree_checked;
                }
            }
        }
        size_t expected[] = {0, 1, 2, 4, 11, 34, 156};
        c.require(seen.size() == expected[n],
                  "catalog size at n=" + std::to_string(n) + " is " + std::to_string(seen.size()));
    }
    c.detail << " " << lin_checked << " linear + " << tree_checked << " tree decisions agree with the oracles";
    c.finish();
}

void criterion11() {
    Criterion c("criterion 11: structural properties on 500 random graphs");
    std::mt19937 rng(20240711);
    int done = 0;
    while (done < 500) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g(n);
        std::bernoulli_distribution coin(0.2 + 0.08 * (rng() % 8));
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        for (int v = 1; v <= n; ++v) g.set_name(v, "a" + std::to_string(v));
        WidthResult lin = lcwd_exact(g);
        WidthResult tree = cwd_exact(g);
        c.require(lin.kind == WidthResult::Kind::Exact && tree.kind == WidthResult::Kind::Exact,
                  "exact values must resolve at n <= 7");
        c.require(tree.value <= lin.value, "cwd <= lcwd");
        if (n >= 2) {
            int v = 1 + static_cast<int>(rng() % n);
            Graph h = delete_vertex(g, v).graph;
            c.require(lcwd_exact(h).value <= lin.value, "lcwd monotone under deletion");
            c.require(cwd_exact(h).value <= tree.value, "cwd monotone under deletion");
        }
        Ordering o(n);
        for (int i = 0; i < n; ++i) o[i] = i + 1;
        std::shuffle(o.begin(), o.end(), rng);
        CwExprPtr e = eager_expression(g, o);
        c.require(check_certificate(*e, g, width(*e), true).ok, "eager certificate valid");
        ++done;
        if (!c.pass) break;
    }
    c.detail << " " << done << " graphs checked";
    c.finish();
}

}  // namespace

int main() {
    std::cout << "acceptance suite\n================\n";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    if (failures) {
        std::cout << failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
