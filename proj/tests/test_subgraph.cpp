#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/subgraph.hpp"

using namespace spexlab;

TEST_SUITE("subgraph") {

TEST_CASE("generic containment") {
    auto w = contains_subgraph(make_K(3, 3), make_cycle(6));
    REQUIRE(w);
    CHECK(is_embedding(make_K(3, 3), make_cycle(6), *w));
    CHECK_FALSE(contains_subgraph(make_cycle(6), make_cycle(4)));
    CHECK(contains_subgraph(make_cycle(4), make_path(4)));
    CHECK_THROWS(contains_subgraph(make_path(3), make_path(4)));
    CHECK_FALSE(contains_subgraph(make_matching(4), make_path(3)));
    CHECK_FALSE(is_embedding(make_cycle(6), make_path(3), Embedding{0, 2, 4}));
}

TEST_CASE("generic containment matches brute force") {
    std::mt19937_64 rng(21);
    const std::vector<Graph> patterns = {make_cycle(4), make_cycle(5), make_path(5), make_S(5, 1),
                                         make_F(5, 1), make_K(2, 3), make_complete(4)};
    for (int rep = 0; rep < 150; ++rep) {
        const int n = 5 + rep % 4;
        Graph g = oracle::labeled(n, rng() & ((std::uint64_t{1} << (n * (n - 1) / 2)) - 1));
        for (const Graph& h : patterns) {
            CHECK(contains_subgraph(g, h).has_value() == oracle::brute_contains(g, h));
        }
    }
}

TEST_CASE("intersecting even cycles") {
    CHECK_FALSE(contains_intersecting_even_cycles(make_S_plus(9, 2), CycleSpec({3})));
    CycleSpec c44({2, 2});
    auto w = contains_intersecting_even_cycles(make_K(3, 4), c44);
    REQUIRE(w);
    CHECK(is_cycle_witness(make_K(3, 4), c44, *w));
    CHECK_FALSE(contains_intersecting_even_cycles(make_F(9, 2), c44));
    CHECK_FALSE(contains_subgraph(make_F(9, 2), make_intersecting_even_cycles(c44)));
    CHECK(contains_intersecting_even_cycles(make_intersecting_even_cycles(CycleSpec({2, 3, 3})),
                                            CycleSpec({3, 2, 3})));
    CHECK_FALSE(contains_intersecting_even_cycles(make_intersecting_even_cycles(CycleSpec({2, 3})),
                                                  CycleSpec({3, 3})));
}

TEST_CASE("cycle detector agrees with generic search on all graphs up to 6 vertices") {
    const std::vector<CycleSpec> specs = {CycleSpec({2}), CycleSpec({3}), CycleSpec({2, 2})};
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n, {})) {
            for (const auto& spec : specs) {
                const Graph h = make_intersecting_even_cycles(spec);
                const bool generic = h.order() <= n && contains_subgraph(g, h).has_value();
                auto w = contains_intersecting_even_cycles(g, spec);
                CHECK(w.has_value() == generic);
                if (w) CHECK(is_cycle_witness(g, spec, *w));
            }
        }
    }
}

TEST_CASE("paths") {
    CHECK(has_path_on(make_cycle(6), 6));
    Graph two_triangles = Graph::from_edges(6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(has_path_on(two_triangles, 4));
    auto p = has_path_on(make_K(3, 3), 6);
    REQUIRE(p);
    CHECK(p->size() == 6);
    for (std::size_t i = 0; i + 1 < p->size(); ++i) CHECK(make_K(3, 3).adjacent((*p)[i], (*p)[i + 1]));
    CHECK(has_path_on(make_path(1), 1));
    CHECK_FALSE(has_path_on(make_path(4), 5));
}

TEST_CASE("disjoint path systems") {
    // u1 w1 u2 w2 u3 as vertices 0 1 2 3 4
    Graph alt = make_path(5);
    std::vector<Vertex> u{0, 2, 4}, w{1, 3};
    auto ps = find_disjoint_path_system(alt, u, w, CycleSpec({3}));
    REQUIRE(ps);
    CHECK(is_path_system(alt, CycleSpec({3}), *ps));
    REQUIRE(ps->paths.size() == 1);
    CHECK(ps->paths[0].size() == 5);
    const Vertex a = ps->paths[0].front(), b = ps->paths[0].back();
    CHECK(std::min(a, b) == 0);
    CHECK(std::max(a, b) == 4);

    Graph inside_w = Graph::from_edges(5, std::vector<Edge>{{1, 3}});
    CHECK_FALSE(find_disjoint_path_system(inside_w, u, w, CycleSpec({2})));

    Graph g = restrict_to_u_edges(make_complete(5), w);
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("minors") {
    CHECK(contains_minor(make_cycle(6), make_complete(3)));
    CHECK(contains_minor(make_K(3, 3), make_cycle(6)));
    CHECK_FALSE(contains_minor(make_S_plus(10, 2), make_cycle(6)));
    CHECK_FALSE(contains_minor(make_F(10, 1), make_cycle(4)));
    CHECK(contains_minor(make_cycle(8), make_cycle(4)));
    CHECK_FALSE(contains_minor(make_path(8), make_cycle(3)));
    CHECK(contains_minor(make_K(3, 3), make_complete(4)));
    CHECK_THROWS(contains_minor(make_S_plus(10, 2), make_intersecting_even_cycles(CycleSpec({2, 3}))));
    CHECK_THROWS(contains_minor(make_cycle(13), make_cycle(3)));
}

}
