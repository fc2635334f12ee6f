#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "nervemorse/complex.hpp"
#include "nervemorse/generators.hpp"
#include "nervemorse/gluing.hpp"
#include "nervemorse/homology.hpp"
#include "nervemorse/morse.hpp"
#include "nervemorse/poset.hpp"
#include "oracles.hpp"

using namespace nervemorse;

TEST_SUITE("generators") {

TEST_CASE("chessboard worked cases") {
    SimplicialComplex big = chessboard(4, 4);
    CHECK(big.vertices().size() == 16);
    CHECK(big.facet_count() == 24);
    CHECK(big.dim() == 3);

    SimplicialComplex hex = chessboard(2, 3);
    CHECK(hex.face_counts() == std::vector<std::size_t>{6, 6});
    CHECK(reduced_homology(hex) == reduced_homology(cycle(6)));

    SimplicialComplex points = chessboard(1, 3);
    CHECK(points.face_counts() == std::vector<std::size_t>{3});
    CHECK(points.facets() == std::vector<Face>{Face({"r1c1"}), Face({"r1c2"}), Face({"r1c3"})});

    CHECK(chessboard(0, 5).empty());
    CHECK(chessboard(3, 0).empty());
    CHECK(chessboard(1, 1) == simplex({"r1c1"}));
    CHECK(chessboard(2, 3).vertices() ==
          std::vector<Vertex>{"r1c1", "r1c2", "r1c3", "r2c1", "r2c2", "r2c3"});
    CHECK_THROWS_AS(chessboard(-1, 2), Error);
}

TEST_CASE("chessboard face counts match the closed form") {
    for (int m = 0; m <= 4; ++m) {
        for (int n = 0; n <= 4; ++n) {
            SimplicialComplex k = chessboard(m, n);
            const std::vector<std::size_t> counts = k.face_counts();
            const int top = std::min(m, n);
            CHECK(static_cast<int>(counts.size()) == top);
            for (int rooks = 1; rooks <= top; ++rooks) {
                CHECK(static_cast<long long>(counts[static_cast<std::size_t>(rooks - 1)]) ==
                      oracle::rook_placements(m, n, rooks));
            }
        }
    }
}

TEST_CASE("star cover of the 4x4 board") {
    Cover cover = star_cover(4);
    REQUIRE(cover.size() == 4);
    CHECK(cover.ambient() == chessboard(4, 4));
    for (int i = 1; i <= 4; ++i) {
        const CoverMember& m = cover.members()[static_cast<std::size_t>(i - 1)];
        CHECK(m.name == "X" + std::to_string(i));
        CHECK(m.space == star(cover.ambient(), "r" + std::to_string(i) + "c1"));
    }

    IntersectionPoset poset(cover);
    REQUIRE(poset.size() == 15);
    for (const PosetElement& e : poset.elements()) {
        switch (e.generating_index_sets.front().size()) {
            case 1:
                CHECK_FALSE(cone_apexes(e.space).empty());
                break;
            case 2:
                CHECK(e.space.face_counts() == std::vector<std::size_t>{6, 6});
                CHECK(reduced_homology(e.space).betti == std::map<int, long long>{{1, 1}});
                break;
            case 3:
                CHECK(e.space.face_counts() == std::vector<std::size_t>{3});
                break;
            default:
                CHECK(e.space.empty());
        }
    }
}

TEST_CASE("star cover of the 2x2 board") {
    IntersectionPoset poset(star_cover(2));
    REQUIRE(poset.size() == 3);
    CHECK(poset.element(0).id == "I{1}");
    CHECK(poset.element(1).id == "I{1,2}");
    CHECK(poset.element(2).id == "I{2}");
    // the two stars are disjoint edges, so the pairwise intersection is empty
    CHECK(poset.element(0).space == induced(chessboard(2, 2), {"r1c1", "r2c2"}));
    CHECK(poset.element(1).space.empty());
    CHECK_THROWS_AS(star_cover(1), Error);
}

TEST_CASE("cycle generator") {
    SimplicialComplex hex = cycle(6);
    CHECK(hex.face_counts() == std::vector<std::size_t>{6, 6});
    CHECK(reduced_homology(hex).betti == std::map<int, long long>{{1, 1}});
    CHECK(cycle(3).face_counts() == sphere_boundary(1).face_counts());
    CHECK(reduced_homology(cycle(3)) == reduced_homology(sphere_boundary(1)));
    CHECK_THROWS_AS(cycle(2), Error);
    CHECK_THROWS_AS(cycle(0), Error);
}

TEST_CASE("simplex and sphere boundary generators") {
    CHECK(simplex({}).empty());
    CHECK(simplex({"a"}).face_counts() == std::vector<std::size_t>{1});
    CHECK(simplex({"a", "b", "c"}).face_counts() == std::vector<std::size_t>{3, 3, 1});

    CHECK(sphere_boundary(0).face_counts() == std::vector<std::size_t>{2});
    CHECK(sphere_boundary(1).face_counts() == std::vector<std::size_t>{3, 3});
    CHECK(sphere_boundary(2).face_counts() == std::vector<std::size_t>{4, 6, 4});
    CHECK(reduced_homology(sphere_boundary(2)).betti == std::map<int, long long>{{2, 1}});
    CHECK(reduced_homology(sphere_boundary(3)).betti == std::map<int, long long>{{3, 1}});
    CHECK_THROWS_AS(sphere_boundary(-1), Error);
}

TEST_CASE("arc covers of cycles") {
    Cover cover = arc_cover(6, 3);
    REQUIRE(cover.size() == 3);
    CHECK(cover.ambient() == cycle(6));
    for (const CoverMember& m : cover.members()) {
        CHECK(m.space.face_counts() == std::vector<std::size_t>{3, 2});
        CHECK_FALSE(cone_apexes(m.space).empty());
    }

    IntersectionPoset poset(cover);
    REQUIRE(poset.size() == 7);
    for (const PosetElement& e : poset.elements()) {
        if (e.generating_index_sets.front().size() == 2)
            CHECK(e.space.face_counts() == std::vector<std::size_t>{1});
        if (e.generating_index_sets.front().size() == 3) CHECK(e.space.empty());
    }

    for (int k = 7; k <= 12; ++k) {
        Cover c = arc_cover(k, 3);
        CHECK(c.ambient() == cycle(k));
        CHECK(c.size() == 3);
    }
    CHECK(arc_cover(6, 2).size() == 2);
    CHECK_THROWS_AS(arc_cover(6, 1), Error);
    CHECK_THROWS_AS(arc_cover(6, 7), Error);
}

TEST_CASE("facet covers") {
    SimplicialComplex tetra = sphere_boundary(2);
    Cover cover = facet_cover(tetra);
    REQUIRE(cover.size() == 4);
    CHECK(cover.ambient() == tetra);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(cover.members()[i].name == "F" + std::to_string(i + 1));
        CHECK(cover.members()[i].space ==
              simplex(tetra.facets()[i].vertices()));
    }
    // every facet star is a full simplex, so all intersections are simplices
    // or empty and the poset is the full boolean lattice minus nothing
    CHECK(IntersectionPoset(cover).size() == 15);

    CHECK_THROWS_AS(facet_cover(SimplicialComplex()), Error);
}

TEST_CASE("canonical chessboard assignment") {
    Cover cover = star_cover(4);
    MorseAssignment assignment = canonical_chessboard_assignment(cover);
    IntersectionPoset poset(cover);
    REQUIRE(assignment.per_element.size() == 15);

    for (const PosetElement& e : poset.elements()) {
        const MorseEntry& entry = assignment.per_element.at(e.id);
        switch (e.generating_index_sets.front().size()) {
            case 1:
                CHECK(entry.data.non_initial_dims.empty());
                CHECK(entry.source == "cone");
                break;
            case 2:
                CHECK(entry.data.non_initial_dims == std::vector<int>{1});
                CHECK(entry.data.critical.size() == 2);
                CHECK(entry.source == "user");
                break;
            case 3:
                CHECK(entry.data.non_initial_dims == std::vector<int>{0, 0});
                CHECK(entry.matching.empty());
                CHECK(entry.source == "user");
                break;
            default:
                CHECK(entry.matching.empty());
                CHECK_FALSE(entry.data.initial.has_value());
        }
        // the recorded census is genuine for the element's space
        MorseData fresh = validate_matching(e.space, entry.matching, entry.data.initial);
        CHECK(fresh.critical == entry.data.critical);
        CHECK(fresh.non_initial_dims == entry.data.non_initial_dims);
    }

    CHECK(check_hypothesis(poset, assignment).ok);

    CHECK_THROWS_AS(canonical_chessboard_assignment(star_cover(3)), Error);
    SimplicialComplex k = cycle(6);
    CHECK_THROWS_AS(canonical_chessboard_assignment(Cover(k, {{"X1", k}})), Error);
}

}  // TEST_SUITE
