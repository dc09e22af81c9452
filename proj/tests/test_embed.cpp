#include "doctest.h"

#include "cwkit/embed.hpp"
#include "cwkit/families.hpp"
#include "helpers.hpp"

using namespace cwkit;
using namespace cwkit::testing;

namespace {

Graph delete_named(const Graph& g, const std::string& name) {
    return delete_vertex(g, g.id_by_name(name)).graph;
}

}  // namespace

TEST_CASE("check_embedding") {
    Graph g = path_power(2, 5);
    Embedding id{g, g, {1, 2, 3, 4, 5}};
    CHECK(check_embedding(id));
    Embedding notinj{g, g, {1, 1, 3, 4, 5}};
    CHECK_FALSE(check_embedding(notinj));
    // a non-induced map: path xi -> gem is injective but misses edges
    Graph p5 = path_power(1, 5);
    Embedding notind{p5, g, {1, 2, 3, 4, 5}};
    CHECK_FALSE(check_embedding(notind));
}

TEST_CASE("phi_Z shift embedding") {
    // k=3, t=1: v_i -> z_{7+i}
    Embedding e = phi_Z(3, 1);
    CHECK(check_embedding(e));
    for (int i = 2; i <= 14; ++i) {
        int gid = e.guest.id_by_name("v" + std::to_string(i));
        CHECK(e.host.name(e.map[gid - 1]) == "z" + std::to_string(7 + i));
    }
    for (int t = 1; t <= 11; ++t) CHECK(check_embedding(phi_Z(4, t)));
    CHECK_THROWS_AS(phi_Z(2, 1), graph_error);
    CHECK_THROWS_AS(phi_Z(3, 8), graph_error);  // above the reduction range
}

TEST_CASE("the naive skip-the-hole map is not an embedding") {
    // map v_i of Z_3 - v_14 onto z_1..z_7, z_9..: adjacency breaks at the seam
    Graph guest = delete_named(make_Z(3), "v14");
    Graph host = delete_vertex(make_J(3).graph, 8).graph;
    Embedding e{guest, host, {}};
    e.map.assign(guest.n(), 0);
    for (int i = 1; i <= 13; ++i) {
        int target = i < 8 ? i : i + 1;  // z_8 is gone
        e.map[guest.id_by_name("v" + std::to_string(i)) - 1] =
            host.id_by_name("z" + std::to_string(target));
    }
    CHECK_FALSE(check_embedding(e));  // v_5 ~ v_8 but z_5 and z_9 are too far apart
}

TEST_CASE("phi_Z target indices stay inside the host for k <= 8") {
    for (int k = 3; k <= 8; ++k) {
        int g = k * k - 1;
        int n = k * (k + 1) + 2;
        int m = (2 * k - 1) * (k + 1) + 1;
        int tmax = k * (k + 1) / 2 + 1;
        for (int t = 1; t <= tmax; ++t) {
            CHECK(g - t + 1 >= 1);
            CHECK(g - t + n <= m);
        }
    }
}

TEST_CASE("phi_S extended embedding and its single exception") {
    PhiSResult pr = phi_S(4, 1, 'c');
    REQUIRE_FALSE(pr.unavailable);
    REQUIRE(pr.embedding.has_value());
    CHECK(check_embedding(*pr.embedding));
    const Embedding& e = *pr.embedding;
    // w1 -> z_{g-t-k} = z_10 at g=15, t=1, k=4
    CHECK(e.host.name(e.map[e.guest.id_by_name("w1") - 1]) == "z10");
    CHECK(e.host.name(e.map[e.guest.id_by_name("w2") - 1]) == "z11");
    // case c puts w^+ one left of the shifted origin: z_{g-t-1}
    CHECK(e.host.name(e.map[e.guest.id_by_name("w^+") - 1]) == "z13");

    PhiSResult pa = phi_S(4, 1, 'a');
    CHECK(pa.embedding.has_value());
    // case a reaches one step further: w^+ -> z_{g-t}
    CHECK(pa.embedding->host.name(pa.embedding->map[pa.embedding->guest.id_by_name("w^+") - 1]) == "z14");

    for (char c : {'a', 'b', 'c', 'd'}) {
        PhiSResult px = phi_S(3, 5, c);
        CHECK(px.unavailable);
    }
    // every in-range instance embeds except (3,5)
    for (int k : {3, 4, 5}) {
        int tmax = ((k - 1) * (k + 1) + 1) / 2 + 1;
        for (int t = 1; t <= tmax; ++t)
            for (char c : {'a', 'b', 'c', 'd'}) {
                PhiSResult px = phi_S(k, t, c);
                if (k == 3 && t == 5) {
                    CHECK(px.unavailable);
                } else {
                    REQUIRE(px.embedding.has_value());
                    CHECK(check_embedding(*px.embedding));
                }
            }
    }
    CHECK_THROWS_AS(phi_S(3, 6, 'a'), graph_error);  // outside the lemma range
}

TEST_CASE("phi_S reversal reduction") {
    auto [t, c] = phi_S_reversal(3, 10, 'a');
    CHECK(t == 1);
    CHECK(c == 'b');
    auto [t2, c2] = phi_S_reversal(3, 6, 'c');
    CHECK(t2 == 5);
    CHECK(c2 == 'd');
}

TEST_CASE("find_embedding positives") {
    Graph k1(1);
    Graph g = make_gem();
    EmbedOutcome eo = find_embedding(k1, g);
    REQUIRE(eo.embedding.has_value());
    CHECK(check_embedding(*eo.embedding));

    Graph s2w4 = delete_named(make_S(2), "w4");
    Graph host = delete_vertex(make_J(2).graph, make_J(2).g).graph;
    EmbedOutcome eo2 = find_embedding(s2w4, host);
    REQUIRE(eo2.embedding.has_value());
    CHECK(check_embedding(*eo2.embedding));
}

TEST_CASE("find_embedding verified negative") {
    Graph guest = delete_named(make_S_plus(3, 'a'), "w4");
    Graph host = delete_vertex(make_J(3).graph, make_J(3).g).graph;
    EmbedOutcome eo = find_embedding(guest, host);
    CHECK_FALSE(eo.embedding.has_value());
    CHECK(eo.exhausted);

    // case c embeds fine, in line with the one-sided failure
    Graph guest_c = delete_named(make_S_plus(3, 'c'), "w4");
    EmbedOutcome ec = find_embedding(guest_c, host);
    REQUIRE(ec.embedding.has_value());
    CHECK(check_embedding(*ec.embedding));
}

TEST_CASE("find_embedding budget gives unknown, not a wrong answer") {
    Graph guest = delete_named(make_S_plus(3, 'a'), "w4");
    Graph host = delete_vertex(make_J(3).graph, make_J(3).g).graph;
    Budget tiny;
    tiny.max_nodes = 3;
    EmbedOutcome eo = find_embedding(guest, host, tiny);
    CHECK_FALSE(eo.embedding.has_value());
    CHECK_FALSE(eo.exhausted);
}

TEST_CASE("embedding success is monotone under guest deletion") {
    std::mt19937 rng(41);
    for (int it = 0; it < 15; ++it) {
        Graph host = random_graph(8, 0.5, rng);
        Graph guest = random_graph(4, 0.5, rng);
        EmbedOutcome eo = find_embedding(guest, host);
        if (!eo.embedding) continue;
        for (int v = 1; v <= guest.n(); ++v) {
            EmbedOutcome sub = find_embedding(delete_vertex(guest, v).graph, host);
            CHECK(sub.embedding.has_value());
        }
    }
}
