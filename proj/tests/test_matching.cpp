#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hermix/error.hpp"
#include "hermix/matching.hpp"
#include "support/support.hpp"

using namespace hermix;
using namespace hermix::testing;

namespace {

bool is_perfect_matching_of(const MixedGraph& g, const Matching& m) {
    std::vector<int> hits(g.vertex_count(), 0);
    for (const Edge& e : m.edges()) {
        if (!g.adjacent(e.u, e.v)) return false;
        ++hits[e.u];
        ++hits[e.v];
    }
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

MixedGraph random_class_h(Rng& rng, std::size_t max_n) {
    return generated_instance(rng, 2, max_n, coin(rng));
}

}  // namespace

TEST_CASE("find_perfect_matching desk graphs") {
    const auto p4 = find_perfect_matching(path_graph(4));
    REQUIRE(p4.has_value());
    CHECK(p4->edges() == std::vector<Edge>{{0, 1}, {2, 3}});

    const MixedGraph c6 = cycle_graph(6);
    const auto c6m = find_perfect_matching(c6);
    REQUIRE(c6m.has_value());
    const auto all = all_perfect_matchings(c6);
    CHECK(all.size() == 2);
    CHECK(std::find(all.begin(), all.end(), c6m->edges()) != all.end());

    CHECK_FALSE(find_perfect_matching(path_graph(3)).has_value());
    CHECK_THROWS_AS(find_perfect_matching(cycle_graph(5)), Error);
}

TEST_CASE("find_perfect_matching agrees with exhaustive search") {
    Rng rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const MixedGraph g = random_bipartite_graph(rng, uniform(rng, 1, 10), 0.4, 0.3);
        const auto found = find_perfect_matching(g);
        CHECK(found.has_value() == (count_perfect_matchings(g) > 0));
        if (found) CHECK(is_perfect_matching_of(g, *found));
    }
}

TEST_CASE("unique perfect matching desk graphs") {
    CHECK(is_unique_perfect_matching(path_graph(4)));
    CHECK_FALSE(is_unique_perfect_matching(cycle_graph(4)));
    CHECK(is_unique_perfect_matching(c6_two_pegs()));
    CHECK(count_perfect_matchings(c6_two_pegs()) == 1);
    CHECK(is_unique_perfect_matching(build_graph(0, {}, {})));
    CHECK_FALSE(is_unique_perfect_matching(path_graph(3)));

    const auto m = unique_perfect_matching(c6_two_pegs());
    REQUIRE(m.has_value());
    CHECK(m->edges() == std::vector<Edge>{{0, 6}, {1, 2}, {3, 7}, {4, 5}});

    try {
        is_unique_perfect_matching(cycle_graph(3));
        FAIL("expected NotBipartite");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotBipartite);
    }
}

TEST_CASE("pendant elimination agrees with exhaustive counting") {
    Rng rng(32);
    std::size_t unique = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 * uniform(rng, 1, 6);
        const MixedGraph g = random_bipartite_graph(rng, n, uniform(rng, 2, 6) / 10.0, 0.3);
        const bool fast = is_unique_perfect_matching(g);
        CHECK(fast == (count_perfect_matchings(g) == 1));
        if (fast) {
            ++unique;
            CHECK(unique_perfect_matching(g)->edges() == all_perfect_matchings(g).front());
        }
    }
    CHECK(unique > 20);
}

TEST_CASE("alternating cycles desk graphs") {
    const MixedGraph c4 = cycle_graph(4);
    for (const auto& edges : all_perfect_matchings(c4)) {
        CHECK(has_alternating_cycle(c4, Matching::from_edges(c4, edges)));
    }
    CHECK_FALSE(has_alternating_cycle(path_graph(4), *find_perfect_matching(path_graph(4))));
    CHECK_FALSE(has_alternating_cycle(c6_two_pegs(), *unique_perfect_matching(c6_two_pegs())));

    const MixedGraph p4 = path_graph(4);
    try {
        has_alternating_cycle(p4, Matching::from_edges(p4, {{1, 2}}));
        FAIL("expected NotPerfect");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPerfect);
    }
}

TEST_CASE("uniqueness holds exactly when no alternating cycle exists") {
    Rng rng(33);
    std::size_t with_cycle = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 * uniform(rng, 1, 6);
        const MixedGraph g = random_bipartite_graph(rng, n, uniform(rng, 2, 6) / 10.0, 0.3);
        const auto m = find_perfect_matching(g);
        if (!m) continue;
        const bool alternating = has_alternating_cycle(g, *m);
        CHECK(alternating == (count_perfect_matchings(g) > 1));
        CHECK(alternating == !is_unique_perfect_matching(g));
        with_cycle += alternating ? 1 : 0;
    }
    CHECK(with_cycle > 20);
}

TEST_CASE("Matching construction") {
    const MixedGraph p4 = path_graph(4);
    const Matching m = Matching::from_edges(p4, {{3, 2}, {0, 1}});
    CHECK(m.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(m.is_perfect());
    CHECK(m.partner(2) == Vertex{3});
    CHECK(m.contains(3, 2));
    CHECK_FALSE(m.contains(1, 2));

    const Matching partial = Matching::from_edges(p4, {{1, 2}});
    CHECK_FALSE(partial.is_perfect());
    CHECK_FALSE(partial.partner(0).has_value());

    CHECK_THROWS_AS(Matching::from_edges(p4, {{0, 2}}), Error);
    CHECK_THROWS_AS(Matching::from_edges(p4, {{0, 1}, {1, 2}}), Error);
}

TEST_CASE("is_co_augmenting desk cases") {
    const MixedGraph p4 = path_graph(4);
    const Matching m = Matching::from_edges(p4, {{0, 1}, {2, 3}});
    CHECK(is_co_augmenting(MixedPath{{0, 1}}, m));
    CHECK_FALSE(is_co_augmenting(MixedPath{{1, 2}}, m));
    CHECK(is_co_augmenting(MixedPath{{0, 1, 2, 3}}, m));
    CHECK_FALSE(is_co_augmenting(MixedPath{{0, 1, 2}}, m));
    CHECK_FALSE(is_co_augmenting(MixedPath{{0}}, m));
}

TEST_CASE("co_augmenting_paths desk cases") {
    const MixedGraph p4 = path_graph(4);
    const Matching m = *unique_perfect_matching(p4);
    CHECK(co_augmenting_paths(p4, m, 0, 3).size() == 1);
    CHECK(co_augmenting_paths(p4, m, 1, 2).empty());

    const MixedGraph g = c6_two_pegs();
    const Matching mg = *unique_perfect_matching(g);
    const auto paths = co_augmenting_paths(g, mg, 6, 7);
    REQUIRE(paths.size() == 2);
    CHECK(paths[0].vertices == std::vector<Vertex>{6, 0, 1, 2, 3, 7});
    CHECK(paths[1].vertices == std::vector<Vertex>{6, 0, 5, 4, 3, 7});

    CHECK_THROWS_AS(co_augmenting_paths(p4, m, 2, 2), Error);
}

TEST_CASE("co_augmenting_paths equals the filtered path enumeration") {
    Rng rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        const MixedGraph g = random_class_h(rng, 10);
        const Matching m = *unique_perfect_matching(g);
        const std::size_t n = g.vertex_count();
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                if (i == j) continue;
                std::vector<MixedPath> filtered;
                for (const auto& p : enumerate_paths(g, i, j)) {
                    if (is_co_augmenting(p, m)) filtered.push_back(p);
                }
                const auto direct = co_augmenting_paths(g, m, i, j);
                CHECK(direct == filtered);
                for (const auto& p : direct) {
                    CHECK(p.edge_count() % 2 == 1);
                    std::size_t unmatched = 0;
                    for (std::size_t k = 0; k + 1 < p.vertices.size(); ++k) {
                        unmatched += m.contains(p.vertices[k], p.vertices[k + 1]) ? 0 : 1;
                    }
                    CHECK(unmatched == (p.edge_count() - 1) / 2);
                }
            }
        }
    }
}

TEST_CASE("removing a co-augmenting path keeps a unique perfect matching") {
    Rng rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        const MixedGraph g = random_class_h(rng, 12);
        const Matching m = *unique_perfect_matching(g);
        const std::size_t n = g.vertex_count();
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                for (const auto& p : co_augmenting_paths(g, m, i, j)) {
                    const auto rest = remove_vertices(g, p.vertices);
                    const auto rest_m = unique_perfect_matching(rest.graph);
                    REQUIRE(rest_m.has_value());
                    std::vector<Edge> expected;
                    for (const Edge& e : rest_m->edges()) {
                        const Vertex a = rest.original[e.u];
                        const Vertex b = rest.original[e.v];
                        expected.push_back({std::min(a, b), std::max(a, b)});
                    }
                    std::vector<Edge> kept;
                    for (const Edge& e : m.edges()) {
                        if (std::find(p.vertices.begin(), p.vertices.end(), e.u) == p.vertices.end()) kept.push_back(e);
                    }
                    std::sort(expected.begin(), expected.end());
                    CHECK(expected == kept);
                }
            }
        }
    }
}

TEST_CASE("removing any other path kills every perfect matching") {
    Rng rng(36);
    std::size_t checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const MixedGraph g = random_class_h(rng, 10);
        const Matching m = *unique_perfect_matching(g);
        const std::size_t n = g.vertex_count();
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = i + 1; j < n; ++j) {
                for (const auto& p : enumerate_paths(g, i, j)) {
                    if (is_co_augmenting(p, m)) continue;
                    ++checked;
                    CHECK_FALSE(find_perfect_matching(remove_vertices(g, p.vertices).graph).has_value());
                }
            }
        }
    }
    CHECK(checked > 50);
}
