#include <doctest.h>

#include <array>

#include "test_support.hpp"

using namespace mdim;
namespace ts = mdim::testsupport;

namespace {

family_instance cpm544() { return build_family("cpm:n=5,k=4,m=4"); }

} // namespace

TEST_CASE("representations") {
    graph c4 = build_cycle(4);
    auto d = all_pairs_distances(c4);
    CHECK(representation_of(0, vertex_set({0}), d) == representation{0});

    family_instance e_graph = build_family("cpm:n=4,k=3,m=4");
    auto de = all_pairs_distances(e_graph.g);
    vertex_set e = parse_vertex_set(e_graph, "x1,x2,x3,x9,x9:4");
    vertex x5 = *e_graph.g.find_label("x5^1");
    CHECK(representation_of(x5, e, de) == representation{1, 2, 3, 1, 4});

    family_instance d_graph = cpm544();
    auto dd = all_pairs_distances(d_graph.g);
    vertex_set d1 = parse_vertex_set(d_graph, "x1,x3,x16:1,x16:4");
    vertex x20_4 = *d_graph.g.find_label("x20^4");
    CHECK(representation_of(x20_4, d1, dd) == representation{7, 8, 4, 1});

    CHECK_THROWS_AS(representation_of(0, vertex_set{}, d), error);
}

TEST_CASE("is_resolving") {
    graph c4 = build_cycle(4);
    auto d = all_pairs_distances(c4);
    CHECK_FALSE(is_resolving(vertex_set({0}), d));
    auto bad = find_resolving_violation(vertex_set({0}), d);
    REQUIRE(bad.has_value());
    CHECK(bad->u == 1);
    CHECK(bad->v == 3);
    CHECK(is_resolving(vertex_set({0, 1}), d));

    family_instance h12 = build_family("h:n=12");
    auto dh = all_pairs_distances(h12.g);
    vertex_set p = parse_vertex_set(
        h12, "v1v2,v1v3,v4v5,v4v6,v7v8,v7v9,v10v11,v10v12");
    CHECK(is_resolving(p, dh));

    CHECK_THROWS_AS(is_resolving(vertex_set{}, d), error);
}

TEST_CASE("is_doubly_resolving") {
    graph c4 = build_cycle(4);
    auto d = all_pairs_distances(c4);
    CHECK_FALSE(is_doubly_resolving(vertex_set({0, 2}), d));
    CHECK(is_doubly_resolving(vertex_set({0, 1, 2}), d));

    family_instance inst = cpm544();
    auto dd = all_pairs_distances(inst.g);
    CHECK(is_doubly_resolving(parse_vertex_set(inst, "x1,x3,x16:1,x16:4"), dd));

    CHECK_THROWS_AS(is_doubly_resolving(vertex_set({0}), d), error);
}

TEST_CASE("doubly violations carry the constant difference") {
    // a non-resolving pair collides, so the constant is 0
    graph c4 = build_cycle(4);
    auto d = all_pairs_distances(c4);
    auto bad = find_doubly_violation(vertex_set({0, 2}), d);
    REQUIRE(bad.has_value());
    CHECK(bad->u == 1);
    CHECK(bad->v == 3);
    CHECK(bad->lambda == 0);
}

TEST_CASE("strongly_resolves") {
    auto dp2 = all_pairs_distances(build_path(2));
    CHECK(strongly_resolves(0, 0, 1, dp2));

    auto dc4 = all_pairs_distances(build_cycle(4));
    CHECK(strongly_resolves(0, 2, 3, dc4));
    CHECK_FALSE(strongly_resolves(1, 0, 2, dc4));
}

TEST_CASE("is_strong_resolving") {
    auto dp2 = all_pairs_distances(build_path(2));
    CHECK(is_strong_resolving(vertex_set({0}), dp2));

    auto dc4 = all_pairs_distances(build_cycle(4));
    CHECK(is_strong_resolving(vertex_set({0, 1}), dc4));
    CHECK_FALSE(is_strong_resolving(vertex_set({0}), dc4));

    family_instance inst = build_family("cpm:n=3,k=3,m=2");
    auto d = all_pairs_distances(inst.g);
    vertex_set t = parse_vertex_set(inst, "x1,x2,x3,x1:2,x2:2,x3:2");
    CHECK(is_strong_resolving(t, d));

    CHECK_THROWS_AS(is_strong_resolving(vertex_set{}, dc4), error);
}

TEST_CASE("maximal distance and MMD pairs") {
    graph p3 = build_path(3);
    auto dp3 = all_pairs_distances(p3);
    CHECK(maximally_distant_from(0, 2, p3, dp3));
    CHECK(maximally_distant_from(2, 0, p3, dp3));
    CHECK_FALSE(maximally_distant_from(1, 0, p3, dp3));
    CHECK(mmd_pairs(p3, dp3) == std::vector<edge>{{0, 2}});

    graph c4 = build_cycle(4);
    auto dc4 = all_pairs_distances(c4);
    CHECK(maximally_distant_from(2, 0, c4, dc4));
    CHECK(mmd_pairs(c4, dc4) == std::vector<edge>{{0, 2}, {1, 3}});
}

TEST_CASE("every first-layer vertex of copy 1 is in an MMD pair with the far corner layer") {
    for (auto [n, k, m] : std::vector<std::array<std::size_t, 3>>{
             {3, 3, 2}, {4, 3, 2}, {3, 3, 3}}) {
        layered_graph lp(n, k, m);
        auto d = all_pairs_distances(lp.g());
        auto pairs = mmd_pairs(lp.g(), d);
        for (std::size_t q = 1; q <= n; ++q) {
            vertex a = lp.at(q, 1);
            bool hit = false;
            for (const auto &e : pairs) {
                vertex other = e.u == a ? e.v : e.v == a ? e.u : a;
                if (other == a) continue;
                if (lp.copy_of(other) == m && lp.layer_of(other) == k)
                    hit = true;
            }
            CHECK(hit);
        }
    }
}

TEST_CASE("kernel predicates agree with naive definitions on random sets") {
    std::mt19937 rng(7151623);
    for (const auto &[name, g] : ts::corpus()) {
        CAPTURE(name);
        if (!g.is_connected()) continue;
        auto d = all_pairs_distances(g);
        auto ref = ts::floyd_warshall(g);
        const std::size_t n = g.vertex_count();
        for (int trial = 0; trial < 30; ++trial) {
            std::size_t size =
                std::uniform_int_distribution<std::size_t>(2, std::min<std::size_t>(n, 5))(rng);
            std::vector<vertex> members;
            while (members.size() < size) {
                vertex v = static_cast<vertex>(
                    std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
                if (std::find(members.begin(), members.end(), v) ==
                    members.end())
                    members.push_back(v);
            }
            vertex_set q(members);
            CHECK(is_resolving(q, d) == ts::naive_resolving(members, g, ref));
            CHECK(is_doubly_resolving(q, d) == ts::naive_doubly(members, g, ref));
            CHECK(is_strong_resolving(q, d) == ts::naive_strong(members, g, ref));
        }
    }
}

TEST_CASE("kernel implications on sampled sets") {
    std::mt19937 rng(424242);
    for (const auto &[name, g] : ts::corpus()) {
        CAPTURE(name);
        auto d = all_pairs_distances(g);
        const std::size_t n = g.vertex_count();
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t size =
                std::uniform_int_distribution<std::size_t>(2, n)(rng);
            std::vector<vertex> members;
            while (members.size() < size) {
                vertex v = static_cast<vertex>(
                    std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
                if (std::find(members.begin(), members.end(), v) ==
                    members.end())
                    members.push_back(v);
            }
            vertex_set q(members);
            if (is_doubly_resolving(q, d)) CHECK(is_resolving(q, d));
            if (is_strong_resolving(q, d)) CHECK(is_resolving(q, d));

            // monotonicity: a superset stays valid
            if (size < n) {
                std::vector<vertex> super = members;
                for (vertex v = 0; v < n; ++v)
                    if (!q.contains(v)) {
                        super.push_back(v);
                        break;
                    }
                vertex_set sq(super);
                if (is_resolving(q, d)) CHECK(is_resolving(sq, d));
                if (is_doubly_resolving(q, d)) CHECK(is_doubly_resolving(sq, d));
                if (is_strong_resolving(q, d)) CHECK(is_strong_resolving(sq, d));
            }
        }
    }
}

TEST_CASE("resolving does not imply doubly resolving") {
    family_instance h5 = build_family("h:n=5");
    auto d = all_pairs_distances(h5.g);
    vertex_set r2 = parse_vertex_set(h5, "v1v2,v1v3,v1v4");
    CHECK(is_resolving(r2, d));
    CHECK_FALSE(is_doubly_resolving(r2, d));
}
