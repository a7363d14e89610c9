#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "spexlab/canonical.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/graph.hpp"
#include "spexlab/graph6.hpp"

using namespace spexlab;

TEST_SUITE("core") {

TEST_CASE("degrees") {
    CHECK(degree(make_complete(5), 3) == 4);
    CHECK(degree(make_cycle(4), 1) == 2);
    CHECK(degree(make_S(6, 2), 0) == 5);
    CHECK(degree(make_S(6, 2), 4) == 2);
    CHECK_THROWS_AS(degree(make_cycle(4), 4), std::out_of_range);
}

TEST_CASE("sparse storage matches dense storage") {
    std::mt19937_64 rng(7);
    std::vector<Edge> es;
    for (int i = 0; i < 400; ++i) {
        int u = static_cast<int>(rng() % 64), v = static_cast<int>(rng() % 64);
        if (u != v) es.emplace_back(u, v);
    }
    Graph dense = Graph::from_edges(64, es);
    Graph sparse = Graph::from_edges(65, es);
    CHECK(dense.is_dense());
    CHECK_FALSE(sparse.is_dense());
    CHECK(dense.size() == sparse.size());
    for (int v = 0; v < 64; ++v) {
        CHECK(dense.neighbors(v) == sparse.neighbors(v));
    }
    CHECK(sparse.degree(64) == 0);
}

TEST_CASE("edits") {
    Graph g = make_path(4);
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.add_edge(0, 3));
    CHECK(g == make_cycle(4));
    CHECK(g.remove_edge(3, 0));
    CHECK_FALSE(g.remove_edge(3, 0));
    CHECK_THROWS(g.add_edge(2, 2));
    Graph c = make_cycle(5).contracted(0, 1);
    CHECK(c == make_cycle(4));
    CHECK(make_cycle(5).without_vertex(2) == make_path(4).relabeled(std::vector<Vertex>{2, 3, 0, 1}));
}

TEST_CASE("neighborhood shells") {
    auto star = neighborhood_shells(make_S(5, 1), 0, 1);
    REQUIRE(star.size() == 2);
    CHECK(star[0] == std::vector<Vertex>{0});
    CHECK(star[1].size() == 4);

    auto path = neighborhood_shells(make_path(5), 0, 4);
    for (int i = 0; i < 5; ++i) CHECK(path[i] == std::vector<Vertex>{i});

    auto plus = neighborhood_shells(make_S_plus(6, 2), 5, 2);
    CHECK(plus[0].size() == 1);
    CHECK(plus[1].size() == 2);
    CHECK(plus[2].size() == 3);
}

TEST_CASE("edge counts between and within sets") {
    std::vector<Vertex> a{0, 1, 2}, b{3, 4, 5, 6};
    CHECK(count_edges_between(make_K(3, 4), a, b) == 12);
    CHECK(count_edges_within(make_K(3, 4), a) == 0);
    std::vector<Vertex> even{0, 2, 4}, odd{1, 3, 5};
    CHECK(count_edges_between(make_cycle(6), even, odd) == 6);
    std::vector<Vertex> pair{0, 1}, rest{2, 3, 4, 5, 6};
    CHECK(count_edges_between(make_F(7, 2), pair, rest) == 10);
    CHECK(count_edges_within(make_F(7, 2), rest) == 2);
    CHECK_THROWS(count_edges_between(make_cycle(6), even, even));
}

TEST_CASE("bipartition") {
    auto c6 = bipartition(make_cycle(6));
    REQUIRE(c6);
    CHECK(c6->smallest_class_size == 3);
    CHECK_FALSE(bipartition(make_cycle(5)));
    auto c46 = bipartition(make_intersecting_even_cycles(CycleSpec({2, 3})));
    REQUIRE(c46);
    CHECK(c46->smallest_class_size == 4);
    CHECK_THROWS(bipartition(make_matching(4)));
}

TEST_CASE("sum of squared degrees") {
    CHECK(sum_of_squared_degrees(make_S(6, 2)) == 2 * 25 + 4 * 4);
}

TEST_CASE("graph6 against an independent encoder") {
    CHECK(graph6_encode(make_complete(3)) == "Bw");
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(Graph(0)) == "?");
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 5, 6, 7, 12, 62, 63, 64, 100, 300}) {
        for (int rep = 0; rep < 4; ++rep) {
            Graph g(n);
            for (int e = 0; e < 3 * n; ++e) {
                int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                if (u != v) g.add_edge(u, v);
            }
            const std::string line = graph6_encode(g);
            CHECK(line == oracle::graph6(g));
            CHECK(graph6_decode(line) == g);
        }
    }
}

TEST_CASE("graph6 decoding errors and streams") {
    CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);
    CHECK_THROWS_AS(graph6_decode("Bw!"), Graph6Error);
    CHECK(graph6_decode("Bw\r\n") == make_complete(3));

    std::istringstream empty("");
    CHECK(stream_graph6(empty, [](Graph&&) {}) == 0);

    std::istringstream mixed(">>graph6<<Bw\n\nC~\n@\n");
    std::vector<int> orders;
    CHECK(stream_graph6(mixed, [&](Graph&& g) { orders.push_back(g.order()); }) == 3);
    CHECK(orders == std::vector<int>{3, 4, 1});

    std::istringstream bad("Bw\nzz\n");
    try {
        stream_graph6(bad, [](Graph&&) {});
        FAIL("expected an error");
    } catch (const Graph6Error& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("canonical form separates exactly the isomorphism classes") {
    for (int n = 1; n <= 5; ++n) {
        const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        std::set<std::string> ours, brute;
        for (std::uint64_t m = 0; m < total; ++m) {
            Graph g = oracle::labeled(n, m);
            ours.insert(canonical_form(g));
            brute.insert(oracle::brute_canonical(g));
        }
        CHECK(ours.size() == brute.size());
    }
    std::set<std::string> four;
    for (std::uint64_t m = 0; m < 64; ++m) four.insert(canonical_form(oracle::labeled(4, m)));
    CHECK(four.size() == 11);
    CHECK(canonical_form(make_S(4, 1)) != canonical_form(make_path(4)));
}

TEST_CASE("canonical form is label invariant on larger graphs") {
    std::mt19937_64 rng(3);
    std::vector<Graph> hosts = {make_K(4, 5), make_F(11, 2), make_S_plus(12, 3), make_cycle(10),
                                make_intersecting_even_cycles(CycleSpec({2, 3, 3}))};
    for (int rep = 0; rep < 8; ++rep) {
        Graph g(14);
        for (int e = 0; e < 30; ++e) {
            int u = static_cast<int>(rng() % 14), v = static_cast<int>(rng() % 14);
            if (u != v) g.add_edge(u, v);
        }
        hosts.push_back(g);
    }
    for (const Graph& g : hosts) {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        const std::string base = canonical_form(g);
        for (int rep = 0; rep < 5; ++rep) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_form(g.relabeled(perm)) == base);
        }
        auto lab = canonical_labeling(g);
        CHECK(lab.graph == g.relabeled([&] {
            std::vector<Vertex> inv(g.order());
            for (int i = 0; i < g.order(); ++i) inv[lab.order[i]] = i;
            return inv;
        }()));
    }
}

TEST_CASE("equitable refinement") {
    auto cells = equitable_refinement(make_S_plus(8, 2));
    CHECK(cells.size() == 3);
    auto path = equitable_refinement(make_path(5));
    CHECK(path.size() == 3);
}

TEST_CASE("constructions") {
    CHECK(oracle::brute_isomorphic(make_S(5, 1), make_K(1, 4)));
    CHECK(make_S(6, 2).size() == 9);
    CHECK(make_S(6, 6) == make_complete(6));
    CHECK(make_S_plus(4, 1).size() == 4);
    CHECK(make_S_plus(5, 2).size() == 8);
    Graph bowtie = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK(oracle::brute_isomorphic(make_F(5, 1), bowtie));
    Graph f61 = make_F(6, 1);
    CHECK(f61.size() == 7);
    CHECK(f61.degree(0) == 5);
    CHECK(f61.degree(5) == 1);

    CHECK(make_intersecting_even_cycles(CycleSpec({2})) == make_cycle(4));
    Graph c44 = make_intersecting_even_cycles(CycleSpec({2, 2}));
    CHECK(c44.order() == 7);
    CHECK(c44.size() == 8);
    CHECK(make_intersecting_even_cycles(CycleSpec({2, 3})).order() == 9);

    Graph spider = make_intersecting_cycles_paths(CyclePathSpec({}, {2, 2}));
    CHECK(spider.order() == 7);
    CHECK(spider.size() == 6);
    CHECK(oracle::brute_isomorphic(make_intersecting_cycles_paths(CyclePathSpec({3}, {})), make_cycle(6)));
    Graph tail = make_intersecting_cycles_paths(CyclePathSpec({2}, {2}));
    CHECK(tail.order() == 7);
    auto ds = tail.degree_sequence();
    std::sort(ds.begin(), ds.end());
    CHECK(ds == std::vector<int>{1, 2, 2, 2, 2, 2, 3});

    CHECK(make_K(3, 3).size() == 9);
    CHECK(make_Kp(2, 3).size() == 8);
    CHECK(make_Km(3, 4).size() == 14);
    CHECK_THROWS(make_Kp(2, 2));
    CHECK_THROWS(make_Km(2, 3));

    CHECK(make_matching(4).size() == 2);
    CHECK(make_matching(5).order() == 5);
    CHECK(make_matching(5).size() == 2);
    CHECK(make_matching(0).order() == 0);
    CHECK_THROWS(make_S(3, 4));
    CHECK_THROWS(make_S_plus(3, 2));
}

TEST_CASE("cycle spec parsing") {
    CycleSpec s = CycleSpec::parse("3, 2,2");
    CHECK(s.ks() == std::vector<int>{2, 2, 3});
    CHECK(s.kappa() == 4);
    CHECK(s.t() == 3);
    CHECK(s.to_string() == "2,2,3");
    CHECK_THROWS(CycleSpec::parse(""));
    CHECK_THROWS(CycleSpec::parse("2,,3"));
    CHECK_THROWS(CycleSpec::parse("1"));
    CHECK_THROWS(CycleSpec::parse("2x"));
}

}
