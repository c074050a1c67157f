#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <numeric>
#include <random>

#include "ricci/graph.hpp"

using namespace ricci;

namespace {

const std::vector<std::string> kSuite = {"cycle:4", "cycle:5", "cycle:6", "complete:2",
                                         "complete:3", "complete:4", "petersen", "h1", "h2"};

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::string> labels(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.label(v);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(g.vertex_count(), std::move(edges), std::move(labels));
}

}  // namespace

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("a b\nb c");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "a");  // first-appearance order
    CHECK(g.label(2) == "c");
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(0, 2));

    CHECK(parse_edge_list("# comment\n\na b # trailing\nb a\n").edge_count() == 1);

    CHECK_THROWS_AS(parse_edge_list("a a"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("a b c"), ParseError);
}

TEST_CASE("h1 fixture file") {
    std::ifstream in(std::string(RICCI_TEST_DATA_DIR) + "/h1.edges");
    REQUIRE(in);
    Graph g = parse_edge_list(in);
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(g.is_regular());
    CHECK(g.degree(0) == 3);
    // identical to the generator fixture up to vertex order
    Graph h1 = generate("h1");
    for (auto [u, v] : g.edges())
        CHECK(h1.has_edge(h1.require_label(g.label(u)), h1.require_label(g.label(v))));
}

TEST_CASE("generators") {
    Graph c4 = generate("cycle:4");
    CHECK(c4.vertex_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    CHECK(generate("complete:4").edge_count() == 6);
    CHECK(generate("path:5").edge_count() == 4);

    Graph q3 = generate("hypercube:3");
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.is_regular());
    CHECK(q3.degree(0) == 3);

    Graph pet = generate("petersen");
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.is_regular());

    Graph h1 = generate("h1");
    CHECK(h1.vertex_count() == 8);
    CHECK(h1.edge_count() == 12);
    CHECK(h1.is_regular());
    CHECK(h1.has_edge(h1.require_label("y1"), h1.require_label("y2")));

    Graph h2 = generate("h2");
    CHECK(h2.vertex_count() == 10);
    CHECK(h2.edge_count() == 15);
    CHECK(h2.is_regular());
    CHECK(h2.has_edge(h2.require_label("y1"), h2.require_label("y2")));

    CHECK_THROWS_AS(generate("cycle:2"), ParseError);
    CHECK_THROWS_AS(generate("complete:1"), ParseError);
    CHECK_THROWS_AS(generate("moebius:5"), ParseError);
    CHECK_THROWS_AS(generate("petersen:3"), ParseError);
    CHECK_THROWS_AS(generate("cycle"), ParseError);
}

TEST_CASE("bfs distances") {
    Graph c4 = generate("cycle:4");
    auto d = bfs_distance(c4, 0);
    CHECK(*d[0] == 0);
    CHECK(*d[1] == 1);
    CHECK(*d[2] == 2);
    CHECK(*d[3] == 1);

    Graph h1 = generate("h1");
    CHECK(graph_distance(h1, h1.require_label("o3"), h1.require_label("i1")) == 3);

    Graph disjoint = parse_edge_list("a b\nc d");
    CHECK_FALSE(bfs_distance(disjoint, 0)[2].has_value());
    CHECK_THROWS_AS(graph_distance(disjoint, 0, 2), PreconditionError);
}

TEST_CASE("edge neighborhood") {
    Graph c4 = generate("cycle:4");
    auto nb = edge_neighborhood(c4, 0, 1);
    CHECK(nb.triangle.empty());
    CHECK(nb.r_x == std::vector<int>{3});
    CHECK(nb.r_y == std::vector<int>{2});

    Graph k4 = generate("complete:4");
    auto nbk = edge_neighborhood(k4, 0, 1);
    CHECK(nbk.triangle.size() == 2);
    CHECK(nbk.r_x.empty());
    CHECK(nbk.r_y.empty());

    Graph h1 = generate("h1");
    auto nbh = edge_neighborhood(h1, h1.require_label("y1"), h1.require_label("y2"));
    CHECK(nbh.triangle.empty());
    auto labels = [&](const std::vector<int>& vs) {
        std::vector<std::string> out;
        for (int v : vs) out.push_back(h1.label(v));
        return out;
    };
    CHECK(labels(nbh.r_x) == std::vector<std::string>{"o3", "i3"});
    CHECK(labels(nbh.r_y) == std::vector<std::string>{"o1", "i1"});

    CHECK_THROWS_AS(edge_neighborhood(c4, 0, 2), PreconditionError);
}

TEST_CASE("edge neighborhood partitions N(x) and N(y) on the whole suite") {
    for (const auto& name : kSuite) {
        Graph g = generate(name);
        for (auto [x, y] : g.edges()) {
            auto nb = edge_neighborhood(g, x, y);
            CHECK(nb.triangle.size() + nb.r_x.size() + 1 == static_cast<std::size_t>(g.degree(x)));
            CHECK(nb.triangle.size() + nb.r_y.size() + 1 == static_cast<std::size_t>(g.degree(y)));
            std::vector<int> nx = nb.triangle;
            nx.insert(nx.end(), nb.r_x.begin(), nb.r_x.end());
            nx.push_back(y);
            std::sort(nx.begin(), nx.end());
            CHECK(nx == g.neighbors(x));
            if (g.degree(x) == g.degree(y)) CHECK(nb.r_x.size() == nb.r_y.size());
        }
    }
}

TEST_CASE("strong product") {
    Graph k2 = generate("complete:2");
    auto k4 = strong_product(k2, k2);
    CHECK(k4.graph.vertex_count() == 4);
    CHECK(k4.graph.edge_count() == 6);

    auto p = strong_product(generate("cycle:4"), generate("h1"));
    CHECK(p.graph.vertex_count() == 32);
    CHECK(p.graph.is_regular());
    CHECK(p.graph.degree(0) == 11);

    auto q = strong_product(generate("cycle:4"), generate("cycle:4"));
    CHECK(q.graph.vertex_count() == 16);
    CHECK(q.graph.is_regular());
    CHECK(q.graph.degree(0) == 8);

    CHECK(p.graph.label(p.vertex_of(0, p.right_factor.require_label("y1"))) == "(g0,y1)");
}

TEST_CASE("cartesian product") {
    Graph k2 = generate("complete:2");
    auto square = cartesian_product(k2, k2);
    CHECK(square.graph.vertex_count() == 4);
    CHECK(square.graph.edge_count() == 4);
    CHECK(square.graph.is_regular());
    CHECK(square.graph.degree(0) == 2);

    auto c = cartesian_product(generate("cycle:4"), generate("cycle:4"));
    CHECK(c.graph.vertex_count() == 16);
    CHECK(c.graph.is_regular());
    CHECK(c.graph.degree(0) == 4);
}

TEST_CASE("K2 x C4 cartesian is the cube graph") {
    auto cube = cartesian_product(generate("complete:2"), generate("cycle:4"));
    Graph q3 = generate("hypercube:3");
    // explicit isomorphism: C4 position b -> Gray code, K2 position -> top bit
    const int gray[4] = {0, 1, 3, 2};
    auto iso = [&](int v) {
        auto [a, b] = cube.coords[v];
        return (a << 2) | gray[b];
    };
    CHECK(cube.graph.edge_count() == q3.edge_count());
    for (auto [u, v] : cube.graph.edges()) CHECK(q3.has_edge(iso(u), iso(v)));
}

TEST_CASE("edge classification") {
    auto p = strong_product(generate("cycle:4"), generate("h1"));
    int y1 = p.right_factor.require_label("y1");
    int y2 = p.right_factor.require_label("y2");
    CHECK(classify_edge(p, p.vertex_of(0, y1), p.vertex_of(0, y2)) == EdgeKind::Horizontal);
    CHECK(classify_edge(p, p.vertex_of(0, y1), p.vertex_of(1, y1)) == EdgeKind::Vertical);
    CHECK(classify_edge(p, p.vertex_of(0, y1), p.vertex_of(1, y2)) == EdgeKind::Diagonal);
    CHECK_THROWS_AS(classify_edge(p, p.vertex_of(0, y1), p.vertex_of(2, y1)),
                    PreconditionError);

    auto cube = cartesian_product(generate("complete:2"), generate("cycle:4"));
    for (auto [u, v] : cube.graph.edges())
        CHECK(classify_edge(cube, u, v) != EdgeKind::Diagonal);
}

TEST_CASE("closed twins") {
    Graph c4 = generate("cycle:4");
    CHECK(closed_neighborhood_equal(c4, 2, 2));
    CHECK_FALSE(closed_neighborhood_equal(c4, 0, 1));
    Graph k4 = generate("complete:4");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(closed_neighborhood_equal(k4, a, b));
}

TEST_CASE("relabeling leaves distances and neighborhood sizes invariant") {
    std::mt19937 rng(20240817);
    for (const auto& name : {"h1", "petersen", "cycle:6"}) {
        Graph g = generate(name);
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph shuffled = permuted(g, perm);
        for (int u = 0; u < g.vertex_count(); ++u) {
            auto d1 = bfs_distance(g, u);
            auto d2 = bfs_distance(shuffled, perm[u]);
            for (int v = 0; v < g.vertex_count(); ++v) CHECK(d1[v] == d2[perm[v]]);
        }
        for (auto [x, y] : g.edges()) {
            auto nb1 = edge_neighborhood(g, x, y);
            auto nb2 = edge_neighborhood(shuffled, perm[x], perm[y]);
            CHECK(nb1.triangle.size() == nb2.triangle.size());
            CHECK(nb1.r_x.size() == nb2.r_x.size());
            CHECK(nb1.r_y.size() == nb2.r_y.size());
        }
    }
}

TEST_CASE("dump and reparse round-trips") {
    for (const auto& name : kSuite) {
        Graph g = generate(name);
        Graph back = parse_edge_list(dump_edge_list(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
        // same graph under the label map, even though vertex order may differ
        for (auto [u, v] : g.edges())
            CHECK(back.has_edge(back.require_label(g.label(u)), back.require_label(g.label(v))));
        // dumping is deterministic for a fixed graph
        CHECK(dump_edge_list(back) == dump_edge_list(parse_edge_list(dump_edge_list(g))));
    }
}
