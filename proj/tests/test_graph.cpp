#include <doctest.h>

#include <functional>
#include <set>
#include <sstream>

#include "copbench/constructions.hpp"
#include "copbench/errors.hpp"
#include "copbench/generators.hpp"
#include "copbench/graph.hpp"
#include "copbench/isomorphism.hpp"
#include "copbench/metrics.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace copbench;

namespace {

Err kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return Err::FormatError;
}

} // namespace

TEST_CASE("edge list format round trip and rejections") {
    Graph g = petersen_graph();
    std::stringstream ss;
    save_edge_list(g, ss);
    Graph back = load_edge_list(ss);
    CHECK(back == g);

    auto load_str = [](const std::string& s) {
        std::stringstream in(s);
        return load_edge_list(in);
    };
    CHECK(kind_of([&] { load_str("2 1\n0 0\n"); }) == Err::FormatError);       // loop
    CHECK(kind_of([&] { load_str("2 2\n0 1\n0 1\n"); }) == Err::FormatError);  // dup
    CHECK(kind_of([&] { load_str("2 2\n0 1\n1 0\n"); }) == Err::FormatError);  // reversed dup
    CHECK(kind_of([&] { load_str("2 1\n0 2\n"); }) == Err::FormatError);       // range
    CHECK(kind_of([&] { load_str("3 2\n0 1\n"); }) == Err::FormatError);       // truncated
}

TEST_CASE("metrics on the named examples") {
    Metrics p = metrics(petersen_graph());
    CHECK(p.girth == 5);
    CHECK(p.diameter == 2);
    CHECK(p.min_degree == 3);
    CHECK(p.max_degree == 3);
    CHECK(p.connected);

    Metrics one = metrics(Graph::from_edges(1, {}));
    CHECK_FALSE(one.girth.has_value()); // acyclic: no girth
    CHECK(one.diameter == 0);
    CHECK(one.min_degree == 0);

    Metrics h = metrics(corpus::heawood());
    CHECK(h.girth == 6);
    CHECK(h.diameter == 3);
    CHECK(h.min_degree == 3);
    CHECK(h.max_degree == 3);

    Metrics disc = metrics(Graph::from_edges(4, {{0, 1}, {2, 3}}));
    CHECK_FALSE(disc.connected);
    CHECK_FALSE(disc.diameter.has_value());
}

TEST_CASE("metrics agree with the Floyd oracle on small graphs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 7), 40, seed);
        auto d = oracles::floyd_apsp(g);
        Metrics m = metrics(g);
        int diam = 0;
        bool conn = true;
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j) {
                if (d[i][j] >= oracles::kInf)
                    conn = false;
                else
                    diam = std::max(diam, d[i][j]);
            }
        CHECK(m.connected == conn);
        if (conn) {
            REQUIRE(m.diameter.has_value());
            CHECK(*m.diameter == diam);
        } else {
            CHECK_FALSE(m.diameter.has_value());
        }
        // girth against brute-force cycle search
        std::optional<int> girth;
        for (int len = 3; len <= g.order() && !girth; ++len)
            if (oracles::cycle_count(g, len) > 0) girth = len;
        CHECK(m.girth == girth);
    }
}

TEST_CASE("K_{2,t}-freeness") {
    CHECK(is_k2t_free(cycle_graph(5), 2));
    CHECK_FALSE(is_k2t_free(complete_bipartite(2, 3), 3));
    CHECK(is_k2t_free(complete_bipartite(2, 3), 4));
    CHECK(is_k2t_free(corpus::heawood(), 2));

    // girth >= 5 forbids two common neighbors
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(8, 25, seed);
        Metrics m = metrics(g);
        if (!m.girth.has_value() || *m.girth >= 5) CHECK(is_k2t_free(g, 2));
    }
}

TEST_CASE("cycle census on the named examples") {
    CHECK(cycle_census(complete_graph(3)) == CycleCensus{1, 0, 0});
    CHECK(cycle_census(cycle_graph(6)) == CycleCensus{0, 0, 1});
    CHECK(cycle_census(complete_graph(4)) == CycleCensus{4, 3, 0});
}

TEST_CASE("cycle census agrees with directed-traversal counting") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 7), 45, seed * 31 + 7);
        CycleCensus cc = cycle_census(g);
        CHECK(cc.c3 == oracles::cycle_count(g, 3));
        CHECK(cc.c4 == oracles::cycle_count(g, 4));
        CHECK(cc.c6 == oracles::cycle_count(g, 6));
    }
}

TEST_CASE("double cover cycle identities") {
    // c4 doubles for every graph
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 7), 40, seed * 13 + 1);
        CHECK(cycle_census(double_cover(g)).c4 == 2 * cycle_census(g).c4);
    }
    // the c6 identity needs pairwise vertex-disjoint triangles; two
    // triangles sharing a vertex already break it (see the bowtie below)
    auto holds = [](const Graph& g) {
        CycleCensus base = cycle_census(g);
        CycleCensus cover = cycle_census(double_cover(g));
        return cover.c6 == base.c3 + 2 * base.c6;
    };
    CHECK(holds(complete_graph(3)));
    CHECK(holds(cycle_graph(5)));
    CHECK(holds(cycle_graph(6)));
    CHECK(holds(petersen_graph()));
    CHECK(holds(corpus::heawood()));
    Graph two_tri_bridge = Graph::from_edges(
        6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
    CHECK(holds(two_tri_bridge));
    CHECK_FALSE(holds(corpus::bowtie()));   // vertex-sharing triangles
    CHECK_FALSE(holds(complete_graph(4))); // edge-sharing triangles
}

TEST_CASE("double cover identities hold on triangle-disjoint random graphs") {
    auto triangles_disjoint = [](const Graph& g) {
        auto ts = triangle_list(g);
        std::set<int> used;
        for (auto [x, y, z] : ts) {
            if (used.count(x) || used.count(y) || used.count(z)) return false;
            used.insert(x);
            used.insert(y);
            used.insert(z);
        }
        return true;
    };
    int tested = 0;
    for (std::uint64_t seed = 0; tested < 25 && seed < 4000; ++seed) {
        Graph g = random_graph(4 + static_cast<int>(seed % 7), 30, seed * 7 + 3);
        if (!triangles_disjoint(g)) continue;
        ++tested;
        CycleCensus base = cycle_census(g);
        CycleCensus cover = cycle_census(double_cover(g));
        CHECK(cover.c4 == 2 * base.c4);
        CHECK(cover.c6 == base.c3 + 2 * base.c6);
    }
    CHECK(tested == 25);
}

TEST_CASE("vertex orbits") {
    auto o7 = vertex_orbits(cycle_graph(7));
    REQUIRE(o7.size() == 1);
    CHECK(o7[0].size() == 7);

    auto op3 = vertex_orbits(path_graph(3));
    REQUIRE(op3.size() == 2);
    CHECK(op3[0] == std::vector<int>{0, 2});
    CHECK(op3[1] == std::vector<int>{1});

    CHECK(vertex_orbits(petersen_graph()).size() == 1);
    CHECK(is_vertex_transitive(corpus::heawood()));
    CHECK_FALSE(is_vertex_transitive(star_graph(3)));

    CHECK_THROWS_AS(vertex_orbits(cycle_graph(8), 6), Error);

    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = random_graph(6, 45, seed * 3 + 2);
        CHECK(vertex_orbits(g) == oracles::orbits_by_permutations(g));
    }
}

TEST_CASE("isomorphism") {
    // relabeled C6
    Graph c6 = cycle_graph(6);
    Graph c6b = Graph::from_edges(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
    CHECK(are_isomorphic(c6, c6b));

    Graph two_k3 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(are_isomorphic(c6, two_k3)); // connectivity differs

    CHECK(are_isomorphic(double_cover(cycle_graph(5)), cycle_graph(10)));
    CHECK_THROWS_AS(are_isomorphic(cycle_graph(70), cycle_graph(70)), Error);

    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = random_graph(7, 45, seed * 11 + 5);
        Graph h = random_graph(7, 45, seed * 11 + 500);
        CHECK(are_isomorphic(g, h) == oracles::isomorphic_by_permutations(g, h));
        CHECK(are_isomorphic(g, g));
    }
}
