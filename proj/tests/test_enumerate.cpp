#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "spexlab/canonical.hpp"
#include "spexlab/constructions.hpp"
#include "spexlab/enumerate.hpp"
#include "spexlab/graph6.hpp"

using namespace spexlab;

namespace {

std::set<std::string> brute_classes(int n, bool connected) {
    std::set<std::string> out;
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t m = 0; m < total; ++m) {
        Graph g = oracle::labeled(n, m);
        if (connected && !g.is_connected()) continue;
        out.insert(oracle::brute_canonical(g));
    }
    return out;
}

} // namespace

TEST_SUITE("enumerate") {

TEST_CASE("class counts against brute-force canonicalization") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(enumerate_graphs(n, {}).size() == brute_classes(n, false).size());
        EnumFilter conn;
        conn.connected_only = true;
        CHECK(enumerate_graphs(n, conn).size() == brute_classes(n, true).size());
    }
    CHECK(enumerate_graphs(4, {}).size() == 11);
    EnumFilter conn;
    conn.connected_only = true;
    CHECK(enumerate_graphs(5, conn).size() == 21);
}

TEST_CASE("known counts up to 8 vertices") {
    const std::vector<std::size_t> all = {1, 2, 4, 11, 34, 156, 1044, 12346};
    const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853, 11117};
    for (int n = 1; n <= 8; ++n) {
        CHECK(enumerate_graphs(n, {}).size() == all[n - 1]);
        EnumFilter conn;
        conn.connected_only = true;
        CHECK(enumerate_graphs(n, conn).size() == connected[n - 1]);
    }
}

TEST_CASE("outputs are pairwise non-isomorphic and canonical") {
    auto gs = enumerate_graphs(6, {});
    std::set<std::string> seen;
    for (const Graph& g : gs) {
        CHECK(graph6_encode(g) == canonical_form(g));
        seen.insert(oracle::brute_canonical(g));
    }
    CHECK(seen.size() == gs.size());
}

TEST_CASE("edge filters") {
    EnumFilter f;
    f.min_edges = 3;
    f.max_edges = 3;
    CHECK(enumerate_graphs(4, f).size() == 3);
    std::map<std::size_t, int> by_edges;
    for (const Graph& g : enumerate_graphs(5, {})) by_edges[g.size()]++;
    EnumFilter band;
    band.min_edges = 4;
    band.max_edges = 6;
    CHECK(static_cast<int>(enumerate_graphs(5, band).size()) == by_edges[4] + by_edges[5] + by_edges[6]);
    EnumFilter bad;
    bad.min_edges = 5;
    bad.max_edges = 2;
    CHECK_THROWS(enumerate_graphs(5, bad));
    CHECK_THROWS(enumerate_graphs(0, {}));
    CHECK_THROWS(enumerate_graphs(kMaxEnumOrder + 1, {}));
}

TEST_CASE("pruned free enumeration equals filter after generate") {
    for (const Forbidden& f : {Forbidden(CycleSpec({2})), Forbidden(CycleSpec({3})), Forbidden(make_path(4)),
                               Forbidden(make_complete(3))}) {
        for (int n = 3; n <= 7; ++n) {
            EnumFilter pruned;
            pruned.freeness = f;
            std::set<std::string> a, b;
            for (const Graph& g : enumerate_graphs(n, pruned)) a.insert(graph6_encode(g));
            for (const Graph& g : enumerate_graphs(n, {})) {
                if (is_free(g, f)) b.insert(graph6_encode(g));
            }
            CHECK_MESSAGE(a == b, describe(f), " n=", n);
        }
    }
}

TEST_CASE("output order does not depend on worker count") {
    EnumFilter f;
    f.freeness = CycleSpec({2});
    std::vector<std::string> one, many;
    enumerate_graphs(8, f, [&](const Graph& g) { one.push_back(graph6_encode(g)); }, 1);
    enumerate_graphs(8, f, [&](const Graph& g) { many.push_back(graph6_encode(g)); }, 4);
    CHECK(one == many);
}

TEST_CASE("freeness helper") {
    CHECK(is_free(make_cycle(6), CycleSpec({2})));
    CHECK_FALSE(is_free(make_K(2, 2), CycleSpec({2})));
    CHECK(is_free(make_complete(5), CycleSpec({2, 2})));
    CHECK(forbidden_graph(CycleSpec({2})) == make_cycle(4));
}

}
