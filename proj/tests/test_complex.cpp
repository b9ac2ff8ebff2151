#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "scx/complex.hpp"
#include "scx/io.hpp"

using namespace scx;

namespace {

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_faces(3, {Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}}); }
SimplicialComplex full_triangle() { return SimplicialComplex::from_faces(3, {Simplex{0, 1, 2}}); }
SimplicialComplex boundary_tetrahedron()
{
    return SimplicialComplex::from_faces(4, {Simplex{0, 1, 2}, Simplex{0, 1, 3}, Simplex{0, 2, 3}, Simplex{1, 2, 3}});
}

} // namespace

TEST_CASE("graph from edge list")
{
    SECTION("triangle")
    {
        auto g = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
        CHECK(g.size() == 3);
        for (Vertex v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    }
    SECTION("four-cycle")
    {
        auto g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        CHECK(g.size() == 4);
        for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
        CHECK(g == Graph::cycle(4));
    }
    SECTION("rejects self-loops and out-of-range endpoints")
    {
        CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    }
    SECTION("duplicates and reversed pairs merge")
    {
        auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.size() == 1);
    }
}

TEST_CASE("simplex canonical form and orientation signs")
{
    CHECK_THROWS(Simplex(std::vector<Vertex>{2, 1}));
    CHECK_THROWS(Simplex::canonical({1, 1}));
    CHECK(Simplex::canonical({3, 0, 2}) == Simplex{0, 2, 3});

    const Simplex s{1, 3};
    CHECK(s.insert_vertex(0) == std::pair{Simplex{0, 1, 3}, 1});
    CHECK(s.insert_vertex(2) == std::pair{Simplex{1, 2, 3}, -1});
    CHECK(s.insert_vertex(4) == std::pair{Simplex{1, 3, 4}, 1});

    // [v, u, s] as a permutation of its sorted form
    const std::vector<Vertex> pre{4, 0};
    auto [t, sign] = s.prepend(pre);
    CHECK(t == Simplex{0, 1, 3, 4});
    // (4,0,1,3) -> sorted needs 3 transpositions for 4 and none for 0
    CHECK(sign == -1);

    CHECK(Simplex{0, 1, 2}.face(1) == Simplex{0, 2});
}

TEST_CASE("clique complex")
{
    SECTION("triangle")
    {
        auto x = clique_complex(Graph::complete(3), 2);
        CHECK(x.f_vector() == std::vector<std::size_t>{3, 3, 1});
        CHECK(x.contains(Simplex{0, 1, 2}));
    }
    SECTION("four-cycle is triangle-free")
    {
        auto x = clique_complex(Graph::cycle(4), 2);
        CHECK(x.count(1) == 4);
        CHECK(x.count(2) == 0);
    }
    SECTION("K4 capped at dimension 2")
    {
        auto x = clique_complex(Graph::complete(4), 2);
        CHECK(x.count(2) == 4);
        CHECK(x.count(1) == 6);
        CHECK(oracle::faces_of(x) == oracle::clique_faces(Graph::complete(4), 2));
    }
    SECTION("matches brute-force enumeration")
    {
        std::mt19937_64 rng(11);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 3 + t % 8;
            const auto g = oracle::random_graph(n, 0.55, rng);
            const int cap = 1 + t % 4;
            const auto x = clique_complex(g, cap);
            CHECK(oracle::faces_of(x) == oracle::clique_faces(g, cap));
            CHECK(x.is_downward_closed());
        }
    }
}

TEST_CASE("neighborhood complex")
{
    SECTION("K4 gives the boundary of the tetrahedron")
    {
        auto x = neighborhood_complex(Graph::complete(4));
        CHECK(x == boundary_tetrahedron());
        CHECK_FALSE(x.contains(Simplex{0, 1, 2, 3}));
    }
    SECTION("C5 is again a 5-cycle")
    {
        auto x = neighborhood_complex(Graph::cycle(5));
        CHECK(x.count(0) == 5);
        CHECK(x.count(1) == 5);
        CHECK(x.count(2) == 0);
        for (Vertex i = 0; i < 5; ++i) CHECK(x.contains(Simplex::canonical({(i + 4) % 5, (i + 1) % 5})));
    }
    SECTION("star K_{1,3}")
    {
        auto g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
        auto x = neighborhood_complex(g);
        CHECK(x.contains(Simplex{1, 2, 3}));
        CHECK(x.contains(Simplex{0}));
        CHECK(x.count(0) == 4);
        CHECK(x.count(1) == 3);
        CHECK(x.degree(Simplex{0}) == 0);
        CHECK_FALSE(x.is_connected());
    }
    SECTION("K_n gives the boundary of the (n-1)-simplex")
    {
        for (std::size_t n = 3; n <= 7; ++n) {
            auto x = neighborhood_complex(Graph::complete(n));
            CHECK(x.top_dim() == static_cast<int>(n) - 2);
            for (int d = 0; d <= static_cast<int>(n) - 2; ++d)
                CHECK(x.count(d) == SimplicialComplex::binomial(n, static_cast<std::size_t>(d) + 1));
        }
    }
    SECTION("matches brute-force enumeration, with and without a cap")
    {
        std::mt19937_64 rng(12);
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 2 + t % 9;
            const auto g = oracle::random_graph(n, 0.5, rng);
            CHECK(oracle::faces_of(neighborhood_complex(g)) == oracle::neighborhood_faces(g));
            CHECK(oracle::faces_of(neighborhood_complex(g, 2)) == oracle::neighborhood_faces(g, 2));
        }
    }
    SECTION("edgeless graph is empty")
    {
        auto x = neighborhood_complex(Graph(5));
        CHECK(x.empty());
        CHECK(x.top_dim() == -1);
    }
}

TEST_CASE("link, degree, skeleton")
{
    SECTION("link")
    {
        CHECK(boundary_tetrahedron().link(Simplex{0}) ==
              SimplicialComplex::from_faces(4, {Simplex{1, 2}, Simplex{1, 3}, Simplex{2, 3}}));
        CHECK(full_triangle().link(Simplex{0, 1}) == SimplicialComplex::from_faces(3, {Simplex{2}}));
        CHECK(hollow_triangle().link(Simplex{0, 1}).empty());
        CHECK_THROWS_AS(hollow_triangle().link(Simplex{0, 1, 2}), std::invalid_argument);
    }
    SECTION("degree")
    {
        CHECK(full_triangle().degree(Simplex{0, 1}) == 1);
        CHECK(boundary_tetrahedron().degree(Simplex{0, 1}) == 2);
        CHECK(hollow_triangle().degree(Simplex{0, 1}) == 0);
        CHECK_THROWS_AS(hollow_triangle().degree(Simplex{0, 1, 2}), std::invalid_argument);
    }
    SECTION("full skeleton")
    {
        CHECK(boundary_tetrahedron().is_full_skeleton(1));
        CHECK_FALSE(clique_complex(Graph::cycle(4), 1).is_full_skeleton(1));
        CHECK(SimplicialComplex::from_faces(1, {Simplex{0}}).is_full_skeleton(0));
        auto sk = boundary_tetrahedron().skeleton(1);
        CHECK(sk.top_dim() == 1);
        CHECK(sk.count(1) == 6);
    }
    SECTION("link of a clique complex is the clique complex of the common neighborhood")
    {
        std::mt19937_64 rng(13);
        for (int t = 0; t < 25; ++t) {
            const std::size_t n = 5 + t % 5;
            const auto g = oracle::random_graph(n, 0.6, rng);
            const auto x = clique_complex(g, static_cast<int>(n));
            for (const auto& s : x.faces(std::min(1, x.top_dim()))) {
                const auto lk = x.link(s);
                std::vector<Vertex> common;
                const VertexSet c = g.common_neighbors(s.vertices());
                for (auto v = c.find_first(); v != VertexSet::npos; v = c.find_next(v)) common.push_back(static_cast<Vertex>(v));
                for (int d = 0; d <= lk.top_dim(); ++d)
                    for (const auto& f : lk.faces(d)) {
                        CHECK(f.disjoint_from(s));
                        CHECK(g.is_clique(f.vertices()));
                        for (Vertex v : f) CHECK(std::find(common.begin(), common.end(), v) != common.end());
                    }
                CHECK(lk.count(0) == common.size());
            }
        }
    }
}

TEST_CASE("edge and face list io")
{
    SECTION("edge list round trip")
    {
        const auto g = Graph::from_edges(5, {{0, 4}, {1, 2}, {2, 3}});
        std::stringstream ss;
        write_edge_list(ss, g);
        CHECK(read_edge_list(ss) == g);
    }
    SECTION("face list round trip keeps canonical order")
    {
        std::mt19937_64 rng(14);
        for (int t = 0; t < 20; ++t) {
            const auto x = oracle::delete_faces(clique_complex(oracle::random_graph(7, 0.6, rng), 4), 1, 0.2, rng);
            std::stringstream ss;
            write_face_list(ss, x);
            const auto y = read_face_list(ss);
            CHECK(y == x);
            std::stringstream again;
            write_face_list(again, y);
            std::stringstream first;
            write_face_list(first, x);
            CHECK(again.str() == first.str());
        }
    }
    SECTION("parse errors carry line numbers")
    {
        std::istringstream bad("3 2\n0 1\n1 x\n");
        try {
            (void)read_edge_list(bad);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        std::istringstream loop("2 1\n1 1\n");
        CHECK_THROWS_AS(read_edge_list(loop), ParseError);
        std::istringstream short_list("3 2\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(short_list), ParseError);
        std::istringstream faces("# comment\n0 1\n\n1 1\n");
        try {
            (void)read_face_list(faces);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line() == 4);
        }
    }
}
