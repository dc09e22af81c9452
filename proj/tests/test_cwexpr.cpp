#include "doctest.h"

#include <random>

#include "cwkit/cwexpr.hpp"
#include "helpers.hpp"

using namespace cwkit;

namespace {

CwExprPtr k2_expr() {
    return add_edges(1, 2, make_union(make_vertex(1, "a"), make_vertex(2, "b")));
}

CwExprPtr random_expr(std::mt19937& rng, int next_name, int depth = 0) {
    int choice = static_cast<int>(rng() % ((depth > 4) ? 1 : 4));
    switch (choice) {
        case 1:
            return make_union(random_expr(rng, next_name * 2 + 100, depth + 1),
                              random_expr(rng, next_name * 2 + 101, depth + 1));
        case 2: {
            int i = 1 + static_cast<int>(rng() % 4);
            int j = 1 + static_cast<int>(rng() % 4);
            if (i == j) j = i % 4 + 1;
            return add_edges(i, j, random_expr(rng, next_name, depth + 1));
        }
        case 3: {
            int i = 1 + static_cast<int>(rng() % 4);
            int j = 1 + static_cast<int>(rng() % 4);
            if (i == j) j = i % 4 + 1;
            return relabel(i, j, random_expr(rng, next_name, depth + 1));
        }
        default:
            return make_vertex(1 + static_cast<int>(rng() % 4), "n" + std::to_string(next_name));
    }
}

void relabel_all(CwExpr& e, const std::vector<int>& sigma) {
    if (auto* m = std::get_if<CwExpr::Make>(&e.node)) {
        m->label = sigma[m->label];
    } else if (auto* u = std::get_if<CwExpr::Union>(&e.node)) {
        relabel_all(*u->left, sigma);
        relabel_all(*u->right, sigma);
    } else if (auto* a = std::get_if<CwExpr::AddEdges>(&e.node)) {
        a->i = sigma[a->i];
        a->j = sigma[a->j];
        relabel_all(*a->child, sigma);
    } else {
        auto& r = std::get<CwExpr::Relabel>(e.node);
        r.from = sigma[r.from];
        r.to = sigma[r.to];
        relabel_all(*r.child, sigma);
    }
}

}  // namespace

TEST_CASE("evaluate the smallest edge") {
    LabeledGraph lg = evaluate(*k2_expr());
    CHECK(lg.graph.n() == 2);
    CHECK(lg.graph.m() == 1);
    CHECK(lg.graph.name(1) == "a");
    CHECK(lg.graph.name(2) == "b");
    CHECK(lg.labels == std::vector<int>{1, 2});

    LabeledGraph lg2 = evaluate(*relabel(2, 1, k2_expr()));
    CHECK(lg2.labels == std::vector<int>{1, 1});
}

TEST_CASE("width counts distinct labels") {
    CHECK(width(*make_vertex(1, "a")) == 1);
    CHECK(width(*k2_expr()) == 2);
    CHECK(width(*make_vertex(7, "a")) == 1);
    // labels mentioned only by operations still count toward the alphabet
    CHECK(width(*relabel(3, 1, make_vertex(1, "a"))) == 2);
}

TEST_CASE("linearity") {
    CHECK(is_linear(*make_vertex(1, "a")));
    CHECK(is_linear(*k2_expr()));
    auto four = make_union(make_union(make_vertex(1, "a"), make_vertex(1, "b")),
                           make_union(make_vertex(1, "c"), make_vertex(1, "d")));
    CHECK_FALSE(is_linear(*four));
}

TEST_CASE("parse and print") {
    CwExprPtr e = parse_expr("eta(1,2){ (v(1,a) + v(2,b)) }");
    CHECK(expr_equal(*e, *k2_expr()));
    CHECK(print_expr(*e) == "eta(1,2){(v(1,a) + v(2,b))}");

    // printer output parses back to the same tree
    CHECK(expr_equal(*parse_expr(print_expr(*e)), *e));

    // names with the paper's decorations
    CwExprPtr wp = parse_expr("(v(1,w^+) + v(2,v'3))");
    LabeledGraph lg = evaluate(*wp);
    CHECK(lg.graph.name(1) == "w^+");
    CHECK(lg.graph.name(2) == "v'3");

    // comments and whitespace
    CwExprPtr c = parse_expr("# a comment\n eta(1,2){(v(1,a)\n + v(2,b))} # trailing\n");
    CHECK(expr_equal(*c, *e));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_expr("v(0,a)"), parse_error);
    CHECK_THROWS_AS(parse_expr("v(1,a) v(2,b)"), parse_error);
    CHECK_THROWS_AS(parse_expr("(v(1,a) + v(1,a))"), parse_error);  // duplicate name
    CHECK_THROWS_AS(parse_expr("eta(1,1){v(1,a)}"), parse_error);
    CHECK_THROWS_AS(parse_expr(""), parse_error);
    try {
        parse_expr("(v(1,a) +\n  v(2,)");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("print-parse round trip on random expressions") {
    std::mt19937 rng(5);
    for (int it = 0; it < 60; ++it) {
        CwExprPtr e = random_expr(rng, it * 1000);
        CwExprPtr back = parse_expr(print_expr(*e));
        CHECK(expr_equal(*e, *back));
    }
}

TEST_CASE("evaluation rejects duplicate names") {
    auto dup = make_union(make_vertex(1, "a"), make_vertex(2, "a"));
    CHECK_THROWS_AS(evaluate(*dup), eval_error);
}

TEST_CASE("adding edges twice changes nothing") {
    std::mt19937 rng(17);
    for (int it = 0; it < 30; ++it) {
        CwExprPtr e = random_expr(rng, it * 1000);
        CwExprPtr once = add_edges(1, 2, clone(*e));
        CwExprPtr twice = add_edges(1, 2, add_edges(1, 2, clone(*e)));
        CHECK(evaluate(*once).graph == evaluate(*twice).graph);
    }
}

TEST_CASE("evaluation is equivariant under label bijections") {
    std::mt19937 rng(29);
    std::vector<int> sigma{0, 3, 4, 2, 1};  // bijection on labels 1..4
    for (int it = 0; it < 30; ++it) {
        CwExprPtr e = random_expr(rng, it * 1000);
        LabeledGraph before = evaluate(*e);
        int w_before = width(*e);
        CwExprPtr f = clone(*e);
        relabel_all(*f, sigma);
        LabeledGraph after = evaluate(*f);
        CHECK(before.graph == after.graph);
        CHECK(width(*f) == w_before);
        for (size_t i = 0; i < before.labels.size(); ++i)
            CHECK(after.labels[i] == sigma[before.labels[i]]);
    }
}

TEST_CASE("check_certificate") {
    CwExprPtr e = k2_expr();
    LabeledGraph val = evaluate(*e);
    CHECK(check_certificate(*e, val.graph, 2, true).ok);
    CHECK_FALSE(check_certificate(*e, val.graph, 1, true).ok);  // width over limit

    Graph k2_renamed(2);
    k2_renamed.add_edge(1, 2);
    CHECK(check_certificate(*e, k2_renamed, 2, true).ok);  // falls back to isomorphism

    Graph p3(3);
    p3.add_edge(1, 2);
    p3.add_edge(2, 3);
    CheckReport rep = check_certificate(*e, p3, 2, true);
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason.find("vertex counts differ") != std::string::npos);

    // same name set but a different edge: rejected by the name-respecting path
    Graph g2(2);
    g2.set_name(1, "a");
    g2.set_name(2, "b");
    CHECK_FALSE(check_certificate(*e, g2, 2, true).ok);
}
