#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cwkit/bubble.hpp"
#include "cwkit/cwexpr.hpp"
#include "cwkit/embed.hpp"
#include "cwkit/families.hpp"
#include "cwkit/graph.hpp"
#include "cwkit/synth.hpp"
#include "cwkit/verify.hpp"

using namespace cwkit;

namespace {

int g_exit = 0;

void emit(const Graph& g, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << write_graph(g);
    else
        write_graph_file(g, out);
}

FamilySpec spec_from(const std::string& family, int k, int n, int l, const std::string& cs) {
    FamilySpec spec;
    spec.family = family;
    spec.k = k;
    spec.n = n;
    spec.l = l;
    if (!cs.empty()) spec.variant = cs[0];
    return spec;
}

Budget budget_from(double seconds) {
    Budget b;
    if (seconds > 0) b.seconds = seconds;
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-width toolkit: families, expressions, embeddings, exact solvers"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "construct a named family graph");
    std::string gen_family, gen_case, gen_out;
    int gen_k = -1, gen_n = -1, gen_l = -1;
    gen->add_option("--family", gen_family, "path-power|J|Z|F|S|S+|M|M2+|M2-|gem")->required();
    gen->add_option("--k", gen_k, "family parameter k");
    gen->add_option("--n", gen_n, "vertex count (path-power)");
    gen->add_option("--l", gen_l, "connector length (M)");
    gen->add_option("--case", gen_case, "S+ neighbourhood case a|b|c|d");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");
    gen->callback([&] {
        emit(make_family(spec_from(gen_family, gen_k, gen_n, gen_l, gen_case)), gen_out);
        if (gen_family == "J") {
            JGraph j = make_J(gen_k);
            std::cerr << "J_" << gen_k << ": " << j.m << " vertices, hole vertex z" << j.g << "\n";
        }
    });

    // bubbles
    auto* bub = app.add_subcommand("bubbles", "print the bubble model of a path-power family");
    std::string bub_family = "path-power", bub_mark;
    int bub_k = -1, bub_n = -1;
    bub->add_option("--family", bub_family, "path-power|J|Z|F");
    bub->add_option("--k", bub_k, "family parameter k")->required();
    bub->add_option("--n", bub_n, "vertex count (path-power)");
    bub->add_option("--mark", bub_mark, "highlight this vertex name (e.g. z8)");
    bub->callback([&] {
        Graph g;
        int k = bub_k, n = 0;
        if (bub_family == "path-power") {
            if (bub_n < 1) throw graph_error("bubbles: path-power needs --n");
            g = path_power(k, bub_n);
            n = bub_n;
        } else if (bub_family == "J") {
            JGraph j = make_J(k);
            g = j.graph;
            n = j.m;
        } else if (bub_family == "Z") {
            g = make_Z(k);
            n = g.n();
        } else if (bub_family == "F") {
            g = make_F(k);
            n = g.n();
        } else {
            throw graph_error("bubbles: family must be a path power (path-power|J|Z|F)");
        }
        BubbleModel b = path_power_bubbles(k, n);
        std::cout << render_bubbles(b, g, bub_mark);
    });

    // expr eval
    auto* expr = app.add_subcommand("expr", "expression operations");
    auto* eval = expr->add_subcommand("eval", "evaluate an expression file, optionally against a graph");
    std::string eval_file, eval_against;
    int eval_width = 0;
    bool eval_linear = false;
    eval->add_option("file", eval_file, "expression file")->required();
    eval->add_option("--against", eval_against, "graph file the expression must evaluate to");
    eval->add_option("--width-limit", eval_width, "maximum number of labels");
    eval->add_flag("--require-linear", eval_linear, "require a linear expression");
    eval->callback([&] {
        CwExprPtr e = parse_expr_file(eval_file);
        LabeledGraph val = evaluate(*e);
        std::cout << "vertices: " << val.graph.n() << "\nedges: " << val.graph.m()
                  << "\nwidth: " << width(*e) << "\nlinear: " << (is_linear(*e) ? "yes" : "no") << "\n";
        int limit = eval_width > 0 ? eval_width : width(*e);
        if (!eval_against.empty()) {
            Graph target = read_graph_file(eval_against);
            CheckReport rep = check_certificate(*e, target, limit, eval_linear);
            std::cout << "certificate: " << (rep.ok ? "accepted" : "rejected: " + rep.reason) << "\n";
            if (!rep.ok) g_exit = 1;
        } else if (eval_width > 0 && width(*e) > eval_width) {
            std::cout << "certificate: rejected: width over limit\n";
            g_exit = 1;
        } else if (eval_linear && !is_linear(*e)) {
            std::cout << "certificate: rejected: not linear\n";
            g_exit = 1;
        }
    });

    // embed
    auto* emb = app.add_subcommand("embed", "explicit or searched induced-subgraph embeddings");
    std::string emb_guest, emb_host, emb_map, emb_case = "c", emb_check;
    int emb_k = -1, emb_t = -1;
    double emb_budget = 0;
    emb->add_option("--guest", emb_guest, "guest graph file");
    emb->add_option("--host", emb_host, "host graph file");
    emb->add_option("--map", emb_map, "phi-z | phi-s: use the shift embedding");
    emb->add_option("--k", emb_k, "k for phi maps");
    emb->add_option("--t", emb_t, "deleted index for phi maps");
    emb->add_option("--case", emb_case, "S+ case for phi-s");
    emb->add_option("--check", emb_check, "verify a saved '<guest> -> <host>' map file");
    emb->add_option("--budget", emb_budget, "search budget in seconds");
    emb->callback([&] {
        if (!emb_check.empty()) {
            if (emb_guest.empty() || emb_host.empty())
                throw graph_error("embed --check needs --guest and --host");
            std::ifstream in(emb_check);
            if (!in) throw graph_error("cannot open " + emb_check);
            std::ostringstream buf;
            buf << in.rdbuf();
            Embedding e = read_embedding(buf.str(), read_graph_file(emb_guest), read_graph_file(emb_host));
            bool ok = check_embedding(e);
            std::cout << (ok ? "checked: ok\n" : "checked: FAILED\n");
            if (!ok) g_exit = 1;
            return;
        }
        if (emb_map == "phi-z") {
            Embedding e = phi_Z(emb_k, emb_t);
            bool ok = check_embedding(e);
            std::cout << format_embedding(e) << (ok ? "checked: ok\n" : "checked: FAILED\n");
            if (!ok) g_exit = 1;
            return;
        }
        if (emb_map == "phi-s") {
            PhiSResult pr = phi_S(emb_k, emb_t, emb_case.empty() ? 'c' : emb_case[0]);
            if (pr.unavailable) {
                std::cout << "unavailable: no shift embedding exists here (certificate route applies)\n";
                return;
            }
            bool ok = check_embedding(*pr.embedding);
            std::cout << format_embedding(*pr.embedding) << (ok ? "checked: ok\n" : "checked: FAILED\n");
            if (!ok) g_exit = 1;
            return;
        }
        if (emb_guest.empty() || emb_host.empty())
            throw graph_error("embed: need --guest and --host (or a --map)");
        Graph guest = read_graph_file(emb_guest);
        Graph host = read_graph_file(emb_host);
        EmbedOutcome out = find_embedding(guest, host, budget_from(emb_budget));
        if (out.embedding) {
            std::cout << format_embedding(*out.embedding) << "found (" << out.nodes << " nodes)\n";
        } else if (out.exhausted) {
            std::cout << "none: exhaustive search rules an embedding out (" << out.nodes << " nodes)\n";
        } else {
            std::cout << "unknown: budget ran out (" << out.nodes << " nodes)\n";
            g_exit = 2;
        }
    });

    // synth
    auto* syn = app.add_subcommand("synth", "search a linear certificate of bounded width");
    std::string syn_graph, syn_emit;
    int syn_width = 0;
    double syn_budget = 0;
    syn->add_option("--graph", syn_graph, "graph file")->required();
    syn->add_option("--width", syn_width, "target width")->required();
    syn->add_option("--budget", syn_budget, "budget in seconds");
    syn->add_option("--emit", syn_emit, "write the certificate here");
    syn->callback([&] {
        Graph g = read_graph_file(syn_graph);
        SynthResult sr = search_certificate(g, syn_width, budget_from(syn_budget));
        if (sr.found) {
            CheckReport rep = check_certificate(*sr.certificate, g, syn_width, true);
            std::cout << "found: width " << width(*sr.certificate) << ", check "
                      << (rep.ok ? "ok" : "FAILED: " + rep.reason) << " (" << sr.nodes << " nodes)\n";
            if (!syn_emit.empty()) {
                std::ofstream out(syn_emit);
                out << print_expr(*sr.certificate) << "\n";
            }
            if (!rep.ok) g_exit = 1;
        } else if (sr.exhausted) {
            std::cout << "none: search space exhausted, no certificate at this width "
                      << "(not a lower-bound claim; use 'solve lcwd --decide')\n";
            g_exit = 1;
        } else {
            std::cout << "unknown: budget ran out\n";
            g_exit = 2;
        }
    });

    // solve
    auto* sol = app.add_subcommand("solve", "exact width values and decisions");
    std::string sol_param, sol_graph, sol_cert;
    int sol_decide = 0;
    double sol_budget = 0;
    sol->add_option("param", sol_param, "lcwd | cwd")->required();
    sol->add_option("graph", sol_graph, "graph file")->required();
    sol->add_option("--decide", sol_decide, "decide width <= W instead of computing the value");
    sol->add_option("--budget", sol_budget, "budget in seconds");
    sol->add_option("--emit-cert", sol_cert, "write the certificate here");
    sol->callback([&] {
        Graph g = read_graph_file(sol_graph);
        bool linear = sol_param == "lcwd";
        if (!linear && sol_param != "cwd") throw graph_error("solve: parameter must be lcwd or cwd");
        Budget b = budget_from(sol_budget);
        auto decide = linear ? lcwd_decide : cwd_decide;
        if (sol_decide > 0) {
            DecideResult d = decide(g, sol_decide, b);
            switch (d.answer) {
                case Answer::Yes:
                    std::cout << "yes: " << sol_param << " <= " << sol_decide << " (checked certificate)\n";
                    if (!sol_cert.empty() && d.certificate) {
                        std::ofstream out(sol_cert);
                        out << print_expr(*d.certificate) << "\n";
                    }
                    break;
                case Answer::No:
                    std::cout << "no: " << sol_param << " >= " << (sol_decide + 1) << " (search exhausted)\n";
                    break;
                case Answer::Unknown:
                    std::cout << "unknown: budget ran out\n";
                    g_exit = 2;
                    break;
            }
            return;
        }
        WidthResult wr = linear ? lcwd_exact(g, b) : cwd_exact(g, b);
        switch (wr.kind) {
            case WidthResult::Kind::Exact:
                std::cout << sol_param << " = " << wr.value << " (exact)\n";
                break;
            case WidthResult::Kind::UpperBound:
                std::cout << sol_param << " <= " << wr.value << " (lower side unknown)\n";
                g_exit = 2;
                break;
            case WidthResult::Kind::LowerBound:
                std::cout << sol_param << " >= " << wr.value << " (upper side unknown)\n";
                g_exit = 2;
                break;
            case WidthResult::Kind::Unknown:
                std::cout << "unknown\n";
                g_exit = 2;
                break;
        }
        if (!sol_cert.empty() && wr.certificate) {
            std::ofstream out(sol_cert);
            out << print_expr(*wr.certificate) << "\n";
        }
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run claim checks and print a summary");
    std::string ver_claim = "all", ver_level = "desk", ver_out;
    std::vector<int> ver_ks;
    double ver_budget = 0;
    ver->add_option("claim", ver_claim, "claim id or 'all' (see --list)");
    ver->add_option("--k", ver_ks, "restrict parameter k");
    ver->add_option("--level", ver_level, "smoke | desk | stretch");
    ver->add_option("--out", ver_out, "evidence directory");
    ver->add_option("--budget", ver_budget, "stretch budget in seconds");
    bool ver_list = false;
    ver->add_flag("--list", ver_list, "list claim ids");
    ver->callback([&] {
        if (ver_list) {
            for (const auto& id : known_claims()) std::cout << id << "\t" << claim_description(id) << "\n";
            return;
        }
        VerifyOptions opt;
        opt.ks = ver_ks;
        opt.out_dir = ver_out;
        if (ver_budget > 0) {
            opt.stretch_budget.seconds = ver_budget;
            opt.solver_budget.seconds = ver_budget;
        }
        std::vector<ClaimCheck> checks;
        if (ver_claim == "all") {
            VerifyLevel level = ver_level == "smoke"   ? VerifyLevel::Smoke
                                : ver_level == "stretch" ? VerifyLevel::Stretch
                                                          : VerifyLevel::Desk;
            checks = run_all(level, opt);
        } else {
            checks.push_back(run_check(ver_claim, opt));
        }
        bool any_refuted = false, any_unknown = false;
        for (const auto& c : checks) {
            std::cout << summary_line(c) << "\n";
            for (const auto& n : c.notes) std::cout << "    " << n << "\n";
            any_refuted |= (c.status == ClaimStatus::Refuted);
            any_unknown |= (c.status == ClaimStatus::Unknown);
        }
        if (any_refuted)
            g_exit = 1;
        else if (any_unknown)
            g_exit = 2;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return g_exit;
}
