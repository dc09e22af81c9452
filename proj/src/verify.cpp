#include "cwkit/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "cwkit/cwexpr.hpp"
#include "cwkit/embed.hpp"
#include "cwkit/families.hpp"
#include "cwkit/synth.hpp"

namespace cwkit {

namespace {

namespace fs = std::filesystem;

struct Recorder {
    ClaimCheck check;
    std::string dir;  // evidence dir, may be empty
    bool failed = false;
    bool unknown = false;
    bool out_of_scale = false;
    long checks_run = 0;

    void note(const std::string& s) { check.notes.push_back(s); }

    void require(bool ok, const std::string& what) {
        ++checks_run;
        if (!ok) {
            failed = true;
            note("FAILED: " + what);
        }
    }

    void save(const std::string& file, const std::string& content) {
        if (dir.empty()) return;
        fs::create_directories(dir);
        std::ofstream out(dir + "/" + file);
        out << content;
    }

    void finish() {
        if (failed)
            check.status = ClaimStatus::Refuted;
        else if (unknown)
            check.status = ClaimStatus::Unknown;
        else if (checks_run == 0 && out_of_scale)
            check.status = ClaimStatus::OutOfDeskScale;
        else
            check.status = ClaimStatus::Verified;
    }
};

Graph delete_named(const Graph& g, const std::string& name) {
    int id = g.id_by_name(name);
    if (!id) throw graph_error("no vertex named " + name);
    return delete_vertex(g, id).graph;
}

// composed reversal embedding: Z_k - v_t for t above the lemma range,
// v_i -> z_{g - (n+1-t) + (n+1-i)}
Embedding phi_Z_reversed(int k, int t) {
    int n = k * (k + 1) + 2;
    int g = k * k - 1;
    int tr = n + 1 - t;
    Graph Z = make_Z(k);
    JGraph J = make_J(k);
    Embedding e;
    e.guest = delete_vertex(Z, t).graph;
    e.host = delete_vertex(J.graph, g).graph;
    e.map.assign(e.guest.n(), 0);
    for (int i = 1; i <= n; ++i) {
        if (i == t) continue;
        int gid = e.guest.id_by_name("v" + std::to_string(i));
        int hid = e.host.id_by_name("z" + std::to_string(g - tr + (n + 1 - i)));
        e.map[gid - 1] = hid;
    }
    return e;
}

std::vector<int> pick_ks(Recorder& r, const VerifyOptions& opt, std::vector<int> defaults) {
    if (opt.ks.empty()) return defaults;
    std::vector<int> out;
    for (int k : opt.ks)
        for (int d : defaults)
            if (k == d) out.push_back(k);
    if (out.empty()) {
        r.out_of_scale = true;
        r.note("requested k values fall outside this check's desk range");
    }
    return out;
}

void check_lemma1(Recorder& r, const VerifyOptions& opt) {
    for (int k : pick_ks(r, opt, {2, 3, 4})) {
        JGraph J = make_J(k);
        Graph host = delete_vertex(J.graph, J.g).graph;
        if (k == 2) {
            WidthResult wr = lcwd_exact(host, opt.solver_budget);
            r.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3,
                      "lcwd_exact(J_2-z_3) <= 3");
            if (wr.certificate) {
                r.save("J2_minus_z3.cwe", print_expr(*wr.certificate));
                r.save("J2_minus_z3.g", write_graph(host));
            }
            r.note("lcwd_exact(J_2-z_3) = " + std::to_string(wr.value));
        } else {
            SynthResult sr = search_certificate(host, k + 1, opt.solver_budget);
            r.require(sr.found, "search_certificate(J_" + std::to_string(k) + "-z_g, " + std::to_string(k + 1) + ")");
            if (sr.found) {
                CheckReport rep = check_certificate(*sr.certificate, host, k + 1, true);
                r.require(rep.ok, "certificate check for J_" + std::to_string(k) + "-z_g: " + rep.reason);
                r.save("J" + std::to_string(k) + "_minus_zg.cwe", print_expr(*sr.certificate));
                r.save("J" + std::to_string(k) + "_minus_zg.g", write_graph(host));
                DecideResult below = lcwd_decide(host, k, opt.solver_budget);
                r.note("lcwd(J_" + std::to_string(k) + "-z_g) <= " + std::to_string(k + 1) + " certified" +
                       (below.answer == Answer::No ? ", and equal: width " + std::to_string(k) + " is refuted"
                                                   : ""));
            }
        }
    }
}

void check_lemma2(Recorder& r, const VerifyOptions& opt) {
    for (int k : pick_ks(r, opt, {3, 4, 5, 6})) {
        int n = k * (k + 1) + 2;
        int tmax = k * (k + 1) / 2 + 1;
        for (int t = 1; t <= tmax; ++t) {
            Embedding e = phi_Z(k, t);
            r.require(check_embedding(e), "phi_Z(k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
            if (t == 1) {
                std::string stem = "phiZ_k" + std::to_string(k) + "_t1";
                r.save(stem + ".map", format_embedding(e));
                r.save(stem + ".guest.g", write_graph(e.guest));
                r.save(stem + ".host.g", write_graph(e.host));
            }
        }
        // sample the instances the automorphism argument folds away
        for (int t : {n, n - 1}) {
            Embedding e = phi_Z_reversed(k, t);
            r.require(check_embedding(e), "reversed phi_Z(k=" + std::to_string(k) + ", t=" + std::to_string(t) + ")");
        }
        if (k == 3) {
            Graph guest = delete_named(make_Z(3), "v14");
            Graph host = delete_vertex(make_J(3).graph, make_J(3).g).graph;
            EmbedOutcome eo = find_embedding(guest, host, opt.solver_budget);
            r.require(eo.embedding.has_value() && check_embedding(*eo.embedding),
                      "direct search cross-check Z_3-v_14 into J_3-z_8");
        }
        r.note("k=" + std::to_string(k) + ": all t in 1.." + std::to_string(tmax) + " embedded, reversal samples checked");
    }
}

void check_prop3(Recorder& r, const VerifyOptions& opt) {
    std::vector<int> ks = pick_ks(r, opt, {2, 3});
    for (int k : ks) {
        Graph Z = make_Z(k);
        int n = Z.n();
        if (k == 2) {
            for (int t = 1; t <= n; ++t) {
                WidthResult wr = lcwd_exact(delete_vertex(Z, t).graph, opt.solver_budget);
                r.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3,
                          "lcwd_exact(Z_2-v_" + std::to_string(t) + ") <= 3");
            }
            // the fixed insertion order for the one case the shift map misses
            Graph zd = delete_named(Z, "v4");
            Ordering o = ordering_by_names(zd, {"v8", "v7", "v6", "v5", "v3", "v2", "v1"});
            CwExprPtr e = eager_expression(zd, o);
            r.require(width(*e) <= 3, "eager ordering <v8..v1> gives width <= 3 on Z_2-v_4");
            CheckReport rep = check_certificate(*e, zd, 3, true);
            r.require(rep.ok, "eager certificate for Z_2-v_4: " + rep.reason);
            r.save("Z2_minus_v4_eager.cwe", print_expr(*e));
            r.save("Z2_minus_v4.g", write_graph(zd));
            r.note("k=2: all eight deletions exact <= 3; fixed ordering width " + std::to_string(width(*e)));
        } else {
            for (int t = 1; t <= n; ++t) {
                DecideResult d = lcwd_decide(delete_vertex(Z, t).graph, k + 1, opt.solver_budget);
                r.require(d.answer == Answer::Yes,
                          "lcwd_decide(Z_3-v_" + std::to_string(t) + ", 4) = yes");
                if (t == 1 && d.certificate) {
                    r.save("Z3_minus_v1.cwe", print_expr(*d.certificate));
                    r.save("Z3_minus_v1.g", write_graph(delete_vertex(Z, t).graph));
                }
            }
            r.note("k=3: all " + std::to_string(n) + " deletions certified at width 4");
        }
    }
}

void check_lemma4(Recorder& r, const VerifyOptions& opt) {
    for (int k : pick_ks(r, opt, {3, 4, 5})) {
        int tmax = ((k - 1) * (k + 1) + 1) / 2 + 1;
        for (int t = 1; t <= tmax; ++t) {
            for (char c : {'a', 'b', 'c', 'd'}) {
                PhiSResult pr = phi_S(k, t, c);
                bool expect_unavailable = (k == 3 && t == 5);
                if (expect_unavailable) {
                    r.require(pr.unavailable, "phi_S(3,5," + std::string(1, c) + ") reports unavailable");
                } else {
                    r.require(!pr.unavailable && pr.embedding && check_embedding(*pr.embedding),
                              "phi_S(k=" + std::to_string(k) + ", t=" + std::to_string(t) + ", case " + c + ")");
                }
            }
        }
        r.note("k=" + std::to_string(k) + ": cases a-d, t=1.." + std::to_string(tmax) +
               (k == 3 ? " (t=5 unavailable as it must be)" : ""));
    }
    // the missing case is closed by a searched certificate
    for (char c : {'a', 'c'}) {
        Graph sp = delete_named(make_S_plus(3, c), "v5");
        SynthResult sr = search_certificate(sp, 4, opt.solver_budget);
        r.require(sr.found, std::string("search_certificate(S+_3(") + c + ")-v_5, 4)");
        if (sr.found) {
            CheckReport rep = check_certificate(*sr.certificate, sp, 4, true);
            r.require(rep.ok, "certificate for S+_3-v_5: " + rep.reason);
            r.save(std::string("Splus3") + c + "_minus_v5.cwe", print_expr(*sr.certificate));
            r.save(std::string("Splus3") + c + "_minus_v5.g", write_graph(sp));
        }
    }
}

void check_thm1(Recorder& r, const VerifyOptions& opt) {
    for (int k : pick_ks(r, opt, {1, 2})) {
        DecideResult d = cwd_decide(make_Z(k), k + 1, opt.solver_budget);
        if (d.answer == Answer::Unknown) {
            r.unknown = true;
            r.note("k=" + std::to_string(k) + ": budget ran out");
            continue;
        }
        r.require(d.answer == Answer::No,
                  "cwd_decide(Z_" + std::to_string(k) + ", " + std::to_string(k + 1) + ") = no");
        r.note("cwd(Z_" + std::to_string(k) + ") >= " + std::to_string(k + 2) + " verified");
    }
    r.note("k>=3: out of desk scale for exact cwd lower bounds, not re-proved here; k=0 left to convention");
}

void check_thm2_3(Recorder& r, const VerifyOptions& opt) {
    DecideResult d = cwd_decide(make_S(2), 3, opt.solver_budget);
    if (d.answer == Answer::Unknown) {
        r.unknown = true;
        return;
    }
    r.require(d.answer == Answer::No, "cwd_decide(S_2, 3) = no");
    r.note("cwd(S_2) >= 4 verified");
}

void check_thm2_2(Recorder& r, const VerifyOptions& opt) {
    Graph s3 = make_S(3);
    DecideResult lo = lcwd_decide(s3, 4, opt.stretch_budget);
    if (lo.answer == Answer::Unknown) {
        r.unknown = true;
        r.note("lcwd_decide(S_3, 4): budget ran out");
    } else {
        r.require(lo.answer == Answer::No, "lcwd_decide(S_3, 4) = no");
        r.note("lcwd(S_3) >= 5 verified");
    }
    DecideResult hi = cwd_decide(s3, 4, opt.stretch_budget);
    if (hi.answer == Answer::Unknown) {
        r.unknown = true;
        r.note("cwd_decide(S_3, 4): budget ran out");
    } else {
        r.require(hi.answer == Answer::Yes, "cwd_decide(S_3, 4) = yes");
        if (hi.certificate) {
            r.save("S3_cwd4.cwe", print_expr(*hi.certificate));
            r.save("S3.g", write_graph(s3));
            r.note("cwd(S_3) <= 4 certified; together: cwd(S_3) <= 4 < lcwd(S_3)");
        }
    }
}

void check_prop5_1(Recorder& r, const VerifyOptions& opt) {
    Graph sp = make_S_plus(3, 'c');
    for (int x = 1; x <= sp.n(); ++x) {
        if (sp.name(x) == "w^+") continue;
        DecideResult d = lcwd_decide(delete_vertex(sp, x).graph, 4, opt.solver_budget);
        r.require(d.answer == Answer::Yes, "lcwd_decide(S+_3(c)-" + sp.name(x) + ", 4) = yes");
    }
    r.note("deleting w^+ leaves S_3; that case is cwd(S_3) <= 4, see thm2.2");
}

void check_prop5_3(Recorder& r, const VerifyOptions& opt) {
    Graph s2 = make_S(2);
    for (int x = 1; x <= s2.n(); ++x) {
        WidthResult wr = lcwd_exact(delete_vertex(s2, x).graph, opt.solver_budget);
        r.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3,
                  "lcwd_exact(S_2-" + s2.name(x) + ") <= 3");
    }
    r.note("all nine one-vertex deletions of S_2 have lcwd <= 3, exactly");
}

void check_prop5_neg(Recorder& r, const VerifyOptions& opt) {
    Graph guest = delete_named(make_S_plus(3, 'a'), "w4");
    Graph host = delete_vertex(make_J(3).graph, make_J(3).g).graph;
    EmbedOutcome eo = find_embedding(guest, host, opt.solver_budget);
    if (!eo.embedding && !eo.exhausted) {
        r.unknown = true;
        r.note("search budget ran out before exhaustion");
        return;
    }
    r.require(!eo.embedding.has_value(), "S+_3(a)-w_4 must not embed into J_3-z_8");
    r.require(eo.exhausted, "non-embedding must be certified by exhaustion");
    r.note("exhaustive search: no embedding, " + std::to_string(eo.nodes) + " nodes");
}

void check_thm3_1(Recorder& r, const VerifyOptions& opt) {
    for (char sign : {'+', '-'}) {
        DecideResult d = lcwd_decide(make_M2(sign), 3, opt.solver_budget);
        if (d.answer == Answer::Unknown) {
            r.unknown = true;
            continue;
        }
        r.require(d.answer == Answer::No, std::string("lcwd_decide(M") + sign + "_2, 3) = no");
        r.note(std::string("lcwd(M") + sign + "_2) >= 4 verified");
    }
}

void check_prop6_1(Recorder& r, const VerifyOptions& opt) {
    for (char sign : {'+', '-'}) {
        Graph m2 = make_M2(sign);
        for (int v = 1; v <= m2.n(); ++v) {
            WidthResult wr = lcwd_exact(delete_vertex(m2, v).graph, opt.solver_budget);
            r.require(wr.kind == WidthResult::Kind::Exact && wr.value <= 3,
                      std::string("lcwd_exact(M") + sign + "_2-" + m2.name(v) + ") <= 3");
        }
    }
    r.note("with thm3.1 this is the consistency oracle for the chosen M+_2 structure");
}

void check_prop6_2(Recorder& r, const VerifyOptions& opt) {
    for (int l : {0, 1, 2}) {
        Graph m = make_M(3, l);
        for (int x = 1; x <= m.n(); ++x) {
            SynthResult sr = search_certificate(delete_vertex(m, x).graph, 4, opt.stretch_budget);
            r.require(sr.found, "search_certificate(M_{3,1," + std::to_string(l) + "}-" + m.name(x) + ", 4)");
            if (sr.found) {
                CheckReport rep = check_certificate(*sr.certificate, delete_vertex(m, x).graph, 4, true);
                r.require(rep.ok, "certificate check: " + rep.reason);
            }
        }
        r.note("l=" + std::to_string(l) + ": all deletions certified at width 4");
    }
    DecideResult d = lcwd_decide(make_M(3, 0), 4, opt.stretch_budget);
    if (d.answer == Answer::Unknown) {
        r.unknown = true;
        r.note("lcwd_decide(M_{3,1,0}, 4): budget ran out");
    } else {
        r.require(d.answer == Answer::No, "lcwd_decide(M_{3,1,0}, 4) = no");
        r.note("lcwd(M_{3,1,0}) >= 5 verified");
    }
}

void check_m2plus_scan(Recorder& r, const VerifyOptions& opt) {
    // all two-gems-plus-one-cross-edge candidates; report which satisfy the
    // minimality pair (lower bound 4, every deletion at most 3)
    int good = 0;
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            Graph g = make_M2('-');
            g.add_edge(a, 5 + b);
            DecideResult lo = lcwd_decide(g, 3, opt.solver_budget);
            bool minimal = (lo.answer == Answer::No);
            if (minimal) {
                for (int v = 1; v <= g.n() && minimal; ++v) {
                    DecideResult d = lcwd_decide(delete_vertex(g, v).graph, 3, opt.solver_budget);
                    minimal = (d.answer == Answer::Yes);
                }
            }
            if (minimal) {
                ++good;
                r.note("x" + std::to_string(a) + " -- x'" + std::to_string(b) + " satisfies both conditions");
            }
        }
    r.require(good >= 1, "at least one cross-edge variant passes the consistency oracle");
    // the chosen structure (layout ends) must be among them
    Graph chosen = make_M2('+');
    DecideResult lo = lcwd_decide(chosen, 3, opt.solver_budget);
    r.require(lo.answer == Answer::No, "chosen M+_2 has lcwd >= 4");
}

using CheckFn = std::function<void(Recorder&, const VerifyOptions&)>;

struct ClaimEntry {
    std::string id;
    std::string what;
    CheckFn fn;
};

const std::vector<ClaimEntry>& registry() {
    static const std::vector<ClaimEntry> reg = {
        {"lemma1", "the J hosts have linear width at most k+1 (k=2 exact, k=3,4 certified)", check_lemma1},
        {"lemma2", "every one-vertex deletion of Z_k embeds into J_k-z_g (k=3..6)", check_lemma2},
        {"prop3", "every one-vertex deletion of Z_k has linear width at most k+1 (k=2,3)", check_prop3},
        {"lemma4", "one-vertex-deleted S+_k embeds into the host, except exactly (k,t)=(3,5)", check_lemma4},
        {"thm1", "Z_k needs k+2 labels: refuted width k+1 at desk scale (k=1,2)", check_thm1},
        {"thm2.3", "S_2 needs 4 labels even for tree expressions", check_thm2_3},
        {"thm2.2", "S_3: tree width at most 4, linear width at least 5", check_thm2_2},
        {"prop5.1", "every one-vertex deletion of S+_3 (case c) has linear width at most 4", check_prop5_1},
        {"prop5.3", "every one-vertex deletion of S_2 has linear width at most 3", check_prop5_3},
        {"prop5.neg-remark", "S+_3(a)-w_4 provably does not embed into J_3-z_8", check_prop5_neg},
        {"thm3.1", "both M2 graphs need 4 labels in linear expressions", check_thm3_1},
        {"prop6.1", "every one-vertex deletion of M2+/- has linear width at most 3", check_prop6_1},
        {"prop6.2", "M_{3,1,l} deletions have width-4 certificates; M_{3,1,0} needs 5", check_prop6_2},
        {"m2plus-scan", "scan all two-gems-plus-one-edge joins against the minimality pair", check_m2plus_scan},
    };
    return reg;
}

std::string params_string(const VerifyOptions& opt) {
    if (opt.ks.empty()) return "defaults";
    std::string s = "k=";
    for (size_t i = 0; i < opt.ks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(opt.ks[i]);
    }
    return s;
}

}  // namespace

std::vector<std::string> known_claims() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
}

std::string claim_description(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e.what;
    throw graph_error("unknown claim id '" + id + "'");
}

ClaimCheck run_check(const std::string& id, const VerifyOptions& opt) {
    for (const auto& [cid, what, fn] : registry()) {
        if (cid != id) continue;
        Recorder r;
        r.check.id = id;
        r.check.params = params_string(opt);
        if (!opt.out_dir.empty()) {
            r.dir = opt.out_dir + "/" + id;
            r.check.evidence = r.dir;
        } else {
            r.check.evidence = "-";
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            fn(r, opt);
        } catch (const std::exception& e) {
            r.failed = true;
            r.note(std::string("exception: ") + e.what());
        }
        r.check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.finish();
        return r.check;
    }
    throw graph_error("unknown claim id '" + id + "'");
}

std::vector<ClaimCheck> run_all(VerifyLevel level, const VerifyOptions& opt) {
    std::vector<std::string> ids;
    switch (level) {
        case VerifyLevel::Smoke:
            ids = {"lemma2", "thm1", "thm3.1", "prop5.neg-remark"};
            break;
        case VerifyLevel::Desk:
            ids = {"lemma1", "lemma2", "prop3", "lemma4", "thm1", "thm2.3", "prop5.1",
                   "prop5.3", "prop5.neg-remark", "thm3.1", "prop6.1"};
            break;
        case VerifyLevel::Stretch:
            ids = {"lemma1", "lemma2", "prop3", "lemma4", "thm1", "thm2.3", "thm2.2",
                   "prop5.1", "prop5.3", "prop5.neg-remark", "thm3.1", "prop6.1",
                   "prop6.2", "m2plus-scan"};
            break;
    }
    VerifyOptions o = opt;
    if (level == VerifyLevel::Smoke && o.ks.empty()) o.ks = {1, 2, 3};
    std::vector<ClaimCheck> out;
    for (const std::string& id : ids) out.push_back(run_check(id, o));
    return out;
}

std::string status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Verified: return "verified";
        case ClaimStatus::Refuted: return "refuted";
        case ClaimStatus::Unknown: return "unknown";
        case ClaimStatus::OutOfDeskScale: return "out-of-desk-scale";
    }
    return "?";
}

std::string summary_line(const ClaimCheck& c) {
    std::ostringstream out;
    out << c.id << "\t" << c.params << "\t" << status_name(c.status) << "\t";
    char buf[32];
    snprintf(buf, sizeof buf, "%.3f", c.seconds);
    out << buf << "\t" << c.evidence;
    return out.str();
}

}  // namespace cwkit
