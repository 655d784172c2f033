#include <doctest.h>

#include <queue>

#include "test_support.hpp"

using namespace mdim;

namespace {

bool bipartite(const graph &g) {
    std::vector<int> color(g.vertex_count(), -1);
    std::queue<vertex> q;
    color[0] = 0;
    q.push(0);
    while (!q.empty()) {
        vertex u = q.front();
        q.pop();
        for (vertex w : g.neighbors(u)) {
            if (color[w] < 0) {
                color[w] = 1 - color[u];
                q.push(w);
            } else if (color[w] == color[u]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<vertex> bijection_by_label(const graph &from, const graph &to) {
    std::vector<vertex> map(from.vertex_count());
    for (vertex v = 0; v < from.vertex_count(); ++v) {
        auto img = to.find_label(from.label(v));
        REQUIRE(img.has_value());
        map[v] = *img;
    }
    return map;
}

} // namespace

TEST_CASE("cycles and paths") {
    graph c3 = build_cycle(3);
    CHECK(c3.edge_count() == 3);
    CHECK(all_pairs_distances(c3).diameter() == 1);
    CHECK(all_pairs_distances(build_cycle(4)).diameter() == 2);
    for (vertex v = 0; v < 5; ++v) CHECK(build_cycle(5).degree(v) == 2);

    graph p2 = build_path(2);
    CHECK(p2.edge_count() == 1);
    CHECK(all_pairs_distances(build_path(3)).diameter() == 2);

    CHECK_THROWS_AS(build_cycle(2), error);
    CHECK_THROWS_AS(build_path(1), error);
}

TEST_CASE("cartesian product") {
    graph c4p3 = cartesian_product(build_cycle(4), build_path(3));
    CHECK(c4p3.vertex_count() == 12);
    CHECK(c4p3.edge_count() == 20); // |V(G)||E(H)| + |V(H)||E(G)|

    int deg3 = 0, deg4 = 0;
    for (vertex v = 0; v < 12; ++v) {
        if (c4p3.degree(v) == 3) ++deg3;
        if (c4p3.degree(v) == 4) ++deg4;
    }
    CHECK(deg3 == 8);
    CHECK(deg4 == 4);

    graph k1(1, {});
    graph h = build_cycle(5);
    graph prod = cartesian_product(k1, h);
    std::vector<vertex> identity(5);
    for (vertex v = 0; v < 5; ++v) identity[v] = v;
    CHECK(verify_isomorphism(prod, h, identity));

    graph disco(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(cartesian_product(disco, h), error);
}

TEST_CASE("layered labeling of C_n x P_k") {
    layered_graph lp(4, 3, 1);
    CHECK(lp.g().vertex_count() == 12);
    // second layer holds x5..x8
    vertex_set v2 = lp.layer(2);
    CHECK(labels_of(lp.g(), v2) ==
          std::vector<std::string>{"x5", "x6", "x7", "x8"});
    CHECK(lp.layer_of(lp.at(5)) == 2);
    CHECK(lp.position_of(lp.at(5)) == 1);

    SUBCASE("compatibility is divisibility of the index difference") {
        CHECK(lp.compatible(lp.at(2), lp.at(6)));
        CHECK_FALSE(lp.compatible(lp.at(1), lp.at(2)));
        layered_graph big(5, 4, 1);
        CHECK(big.compatible(big.at(1), big.at(16)));
    }

    SUBCASE("bad parameters") {
        CHECK_THROWS_AS(layered_graph(2, 3, 1), error);
        CHECK_THROWS_AS(layered_graph(4, 2, 1), error);
        CHECK_THROWS_AS(layered_graph(4, 3, 0), error);
        CHECK_THROWS_AS(lp.at(13), error);
        CHECK_THROWS_AS(lp.at(1, 2), error);
    }
}

TEST_CASE("layered copies are stitched by equal indices") {
    layered_graph lp(4, 3, 2);
    CHECK(lp.g().vertex_count() == 24);
    for (std::size_t t = 1; t <= 12; ++t)
        CHECK(lp.g().adjacent(lp.at(t, 1), lp.at(t, 2)));
    CHECK(lp.g().label(lp.at(5, 2)) == "x5^2");
    CHECK(lp.copy_of(lp.at(5, 2)) == 2);

    SUBCASE("different copies cannot be compatibility-compared") {
        CHECK_THROWS_AS(lp.compatible(lp.at(1, 1), lp.at(5, 2)), error);
    }
}

TEST_CASE("explicit layering matches the cartesian product") {
    for (std::size_t n = 3; n <= 6; ++n)
        for (std::size_t k = 3; k <= 5; ++k) {
            layered_graph lp(n, k, 1);
            graph prod = cartesian_product(build_cycle(n), build_path(k));
            // x_{(p-1)n+q} -> (cycle vertex q, path vertex p)
            std::vector<vertex> map(n * k);
            for (std::size_t p = 1; p <= k; ++p)
                for (std::size_t q = 1; q <= n; ++q)
                    map[lp.at((p - 1) * n + q)] =
                        static_cast<vertex>((q - 1) * k + (p - 1));
            CHECK(verify_isomorphism(lp.g(), prod, map));
        }
}

TEST_CASE("stacked copies match the product with a path") {
    for (std::size_t m = 2; m <= 3; ++m) {
        layered_graph stacked(4, 3, m);
        graph prod =
            cartesian_product(layered_graph(4, 3, 1).g(), build_path(m));
        std::vector<vertex> map(12 * m);
        for (std::size_t t = 1; t <= 12; ++t)
            for (std::size_t r = 1; r <= m; ++r)
                map[stacked.at(t, r)] =
                    static_cast<vertex>((t - 1) * m + (r - 1));
        CHECK(verify_isomorphism(stacked.g(), prod, map));
    }
}

TEST_CASE("even cycle layers give a bipartite product") {
    CHECK(bipartite(layered_graph(4, 3, 1).g()));
    CHECK(bipartite(layered_graph(6, 4, 1).g()));
    CHECK_FALSE(bipartite(layered_graph(5, 3, 1).g()));
}

TEST_CASE("verify_isomorphism rejects non-bijections") {
    graph c4 = build_cycle(4);
    std::vector<vertex> identity{0, 1, 2, 3};
    CHECK(verify_isomorphism(c4, c4, identity));
    CHECK(verify_isomorphism(c4, c4, {1, 2, 3, 0}));
    // swapping two adjacent vertices into non-adjacent positions fails
    CHECK_FALSE(verify_isomorphism(c4, c4, {0, 2, 1, 3}));
    CHECK_THROWS_AS(verify_isomorphism(c4, c4, {0, 1, 2}), error);
    CHECK_THROWS_AS(verify_isomorphism(c4, c4, {0, 1, 2, 2}), error);
    CHECK_THROWS_AS(verify_isomorphism(c4, c4, {0, 1, 2, 9}), error);
    CHECK_THROWS_AS(verify_isomorphism(c4, build_cycle(5), {0, 1, 2, 3}),
                    error);
}

TEST_CASE("line graphs") {
    graph lp3 = line_graph(build_path(3));
    CHECK(lp3.vertex_count() == 2);
    CHECK(lp3.edge_count() == 1);

    graph lc5 = line_graph(build_cycle(5));
    graph c5 = build_cycle(5);
    CHECK(lc5.vertex_count() == 5);
    CHECK(lc5.edge_count() == 5);
    for (vertex v = 0; v < 5; ++v) CHECK(lc5.degree(v) == 2);
    CHECK(lc5.is_connected());

    graph lh5 = line_graph(h_graph(5).g());
    CHECK(lh5.vertex_count() == 20);
    for (vertex v = 0; v < 20; ++v) CHECK(lh5.degree(v) == 4);

    CHECK_THROWS_AS(line_graph(graph(1, {})), error);
}

TEST_CASE("H(n) structure") {
    h_graph h5(5);
    CHECK(h5.g().vertex_count() == 15);
    CHECK(h5.g().edge_count() == 20);
    CHECK(h5.g().label(h5.pair(1, 2)) == "v1v2");
    CHECK(h5.g().label(h5.point(3)) == "v3");
    for (std::size_t r = 1; r <= 5; ++r) CHECK(h5.g().degree(h5.point(r)) == 4);
    auto d5 = all_pairs_distances(h5.g());
    for (std::size_t i = 1; i < 5; ++i)
        for (std::size_t j = i + 1; j <= 5; ++j) {
            // distances inside the pair class are 2 or 4
            for (std::size_t p = 1; p < 5; ++p)
                for (std::size_t q = p + 1; q <= 5; ++q) {
                    vertex a = h5.pair(i, j), b = h5.pair(p, q);
                    if (a == b) continue;
                    int dist = d5(a, b);
                    CHECK((dist == 2 || dist == 4));
                }
        }

    h_graph h6(6);
    CHECK(h6.g().vertex_count() == 21);
    auto d6 = all_pairs_distances(h6.g());
    for (std::size_t r = 1; r < 6; ++r)
        for (std::size_t s = r + 1; s <= 6; ++s)
            CHECK(d6(h6.point(r), h6.point(s)) == 2);
    for (std::size_t i = 1; i < 6; ++i)
        for (std::size_t j = i + 1; j <= 6; ++j)
            CHECK(h6.g().degree(h6.pair(i, j)) == 2);

    CHECK(h5.pair_of(h5.pair(2, 4)) == std::pair<std::size_t, std::size_t>{2, 4});
    CHECK_THROWS_AS(h_graph(4), error);
    CHECK_THROWS_AS(h5.pair(2, 2), error);
    CHECK_THROWS_AS(h5.point(6), error);
}

TEST_CASE("L(n) structure") {
    l_graph l5(5);
    CHECK(l5.g().vertex_count() == 20);
    for (vertex v = 0; v < 20; ++v) CHECK(l5.g().degree(v) == 4);
    CHECK(all_pairs_distances(l5.g()).diameter() == 3);
    CHECK(l5.g().label(l5.at(2, 1, 2)) == "{v2,v1v2}");
    CHECK(l5.clique_of(l5.at(2, 1, 2)) == 2);
    CHECK(l5.hedge_of(l5.at(2, 1, 2)) ==
          std::pair<std::size_t, std::size_t>{1, 2});

    l_graph l6(6);
    CHECK(l6.g().vertex_count() == 30);
    for (std::size_t r = 1; r <= 6; ++r) {
        vertex_set w = l6.clique(r);
        CHECK(w.size() == 5);
        // a clique, and maximal: no outside vertex adjacent to all of it
        for (std::size_t a = 0; a < w.size(); ++a)
            for (std::size_t b = a + 1; b < w.size(); ++b)
                CHECK(l6.g().adjacent(w[a], w[b]));
        for (vertex v = 0; v < 30; ++v) {
            if (w.contains(v)) continue;
            bool all = true;
            for (vertex u : w.members()) all = all && l6.g().adjacent(v, u);
            CHECK_FALSE(all);
        }
    }

    SUBCASE("matches the generic line graph under the label bijection") {
        graph lh = line_graph(h_graph(5).g());
        CHECK(verify_isomorphism(l5.g(), lh, bijection_by_label(l5.g(), lh)));
    }

    CHECK_THROWS_AS(l_graph(3), error);
    CHECK_THROWS_AS(l5.at(3, 1, 2), error); // v3 is not an endpoint of v1v2
}

TEST_CASE("clique neighborhoods") {
    l_graph l5(5);
    vertex_set n1 = l5.clique_neighborhood(1);
    CHECK(labels_of(l5.g(), n1) ==
          std::vector<std::string>{"{v2,v1v2}", "{v3,v1v3}", "{v4,v1v4}",
                                   "{v5,v1v5}"});

    l_graph l6(6);
    auto d = all_pairs_distances(l6.g());
    vertex_set nb = l6.clique_neighborhood(1);
    CHECK(nb.size() == 5);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b)
            CHECK(d(nb[a], nb[b]) == 3);

    for (std::size_t r = 1; r <= 6; ++r) {
        vertex_set w = l6.clique(r);
        vertex_set nbr = l6.clique_neighborhood(r);
        for (vertex v : nbr.members()) {
            CHECK_FALSE(w.contains(v));
            int adjacent_count = 0;
            for (vertex u : w.members())
                adjacent_count += l6.g().adjacent(v, u) ? 1 : 0;
            CHECK(adjacent_count == 1);
        }
    }
    CHECK_THROWS_AS(l5.clique_neighborhood(0), error);
    CHECK_THROWS_AS(l5.clique_neighborhood(6), error);
}
