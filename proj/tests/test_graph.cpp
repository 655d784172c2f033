#include <doctest.h>

#include "test_support.hpp"

using namespace mdim;
namespace ts = mdim::testsupport;

TEST_CASE("graph construction canonicalizes and validates") {
    graph g(4, {{1, 0}, {2, 1}, {3, 2}, {3, 0}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.edges() == std::vector<edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.label(0) == "x1");
    CHECK(g.find_label("x4") == vertex{3});
    CHECK_FALSE(g.find_label("nope").has_value());

    CHECK_THROWS_WITH_AS(graph(3, {{0, 0}}), doctest::Contains("self-loop"),
                         error);
    CHECK_THROWS_AS(graph(3, {{0, 4}}), error);
    CHECK_THROWS_AS(graph(3, {{0, 1}, {1, 0}}), error);
    CHECK_THROWS_AS(graph(2, {{0, 1}}, {"a", "a"}), error);
    CHECK_THROWS_AS(graph(0, {}), error);
}

TEST_CASE("vertex_set validation") {
    graph g = build_cycle(4);
    CHECK_THROWS_AS(vertex_set({0, 0}), error);
    CHECK_THROWS_AS(vertex_set::checked({0, 9}, g), error);
    vertex_set q({2, 0});
    CHECK(q.size() == 2);
    CHECK(q.contains(0));
    CHECK(q[0] == 2); // order preserved
}

TEST_CASE("all_pairs_distances basics") {
    auto p3 = build_path(3);
    auto d3 = all_pairs_distances(p3);
    CHECK(d3(0, 2) == 2);

    auto c4 = build_cycle(4);
    auto d4 = all_pairs_distances(c4);
    CHECK(d4(0, 2) == 2);
    CHECK(d4.diameter() == 2);

    layered_graph big(5, 4, 4);
    auto d = all_pairs_distances(big.g());
    CHECK(d(big.at(1, 1), big.at(16, 4)) == 6);
}

TEST_CASE("all_pairs_distances rejects disconnected input") {
    graph two(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_WITH_AS(all_pairs_distances(two),
                         doctest::Contains("disconnected"), error);
}

TEST_CASE("distance matrix invariants across families") {
    std::vector<graph> graphs;
    for (auto &entry : ts::corpus()) graphs.push_back(entry.g);
    graphs.push_back(layered_graph(4, 3, 2).g());
    graphs.push_back(l_graph(5).g());
    for (const auto &g : graphs) {
        if (!g.is_connected()) continue;
        auto d = all_pairs_distances(g);
        const std::size_t n = g.vertex_count();
        for (vertex u = 0; u < n; ++u) {
            CHECK(d(u, u) == 0);
            for (vertex v = 0; v < n; ++v) {
                CHECK(d(u, v) == d(v, u));
                if (u != v) CHECK(d(u, v) >= 1);
                CHECK((d(u, v) == 1) == g.adjacent(u, v));
                for (vertex w = 0; w < n; ++w)
                    CHECK(d(u, w) <= d(u, v) + d(v, w));
            }
        }
    }
}

TEST_CASE("BFS agrees with the Floyd-Warshall oracle") {
    auto graphs = ts::corpus();
    graphs.push_back({"cpm(4,3,2)", layered_graph(4, 3, 2).g()});
    graphs.push_back({"l(5)", l_graph(5).g()});
    std::mt19937 rng(20240817);
    for (int i = 0; i < 5; ++i)
        graphs.push_back({"rnd", ts::random_connected_graph(rng, 10)});
    for (const auto &[name, g] : graphs) {
        CAPTURE(name);
        REQUIRE(g.vertex_count() <= 40);
        auto d = all_pairs_distances(g);
        auto ref = ts::floyd_warshall(g);
        for (vertex u = 0; u < g.vertex_count(); ++u)
            for (vertex v = 0; v < g.vertex_count(); ++v)
                CHECK(int(d(u, v)) == ref[u][v]);
    }
}

TEST_CASE("edge list reading") {
    graph p3 = read_edge_list("3 2\n0 1\n1 2");
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.label(0) == "x1");

    CHECK_THROWS_WITH_AS(read_edge_list("2 1\n0 0"),
                         doctest::Contains("self-loop"), error);
    CHECK_THROWS_AS(read_edge_list("2 1\n0 5"), error);
    CHECK_THROWS_AS(read_edge_list("2 2\n0 1\n1 0"), error);
    CHECK_THROWS_AS(read_edge_list("nonsense"), error);
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1"), error);
    CHECK_THROWS_AS(read_edge_list(""), error);
}

TEST_CASE("edge list writing is canonical") {
    CHECK(write_edge_list(build_cycle(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

TEST_CASE("read after write is the identity") {
    std::vector<graph> graphs = {build_cycle(6), build_path(4),
                                 layered_graph(4, 3, 2).g(), h_graph(5).g(),
                                 l_graph(5).g()};
    std::mt19937 rng(314159);
    for (int i = 0; i < 10; ++i)
        graphs.push_back(ts::random_connected_graph(rng, 3 + i));
    for (const auto &g : graphs) {
        graph back = read_edge_list(write_edge_list(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
        CHECK(back.labels() == g.labels());
    }
}

TEST_CASE("mangled edge lists raise typed errors instead of crashing") {
    std::string base = write_edge_list(build_cycle(5));
    std::mt19937 rng(271828);
    const std::string junk = "abc-;~ 019\n\t";
    for (int trial = 0; trial < 400; ++trial) {
        std::string text = base;
        int edits = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int e = 0; e < edits; ++e) {
            std::size_t at =
                std::uniform_int_distribution<std::size_t>(0, text.size())(rng);
            char c = junk[std::uniform_int_distribution<std::size_t>(
                0, junk.size() - 1)(rng)];
            if (at == text.size())
                text.push_back(c);
            else
                text[at] = c;
        }
        try {
            graph g = read_edge_list(text);
            CHECK(g.vertex_count() >= 1); // mutation happened to stay valid
        } catch (const error &) {
            // typed rejection is the expected outcome
        }
    }
}
