#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "nervemorse/complex.hpp"
#include "nervemorse/generators.hpp"
#include "nervemorse/homology.hpp"
#include "nervemorse/poset.hpp"
#include "oracles.hpp"

using namespace nervemorse;

namespace {

Cover random_cover(std::mt19937& rng, int max_members) {
    const int n = std::uniform_int_distribution<int>(1, max_members)(rng);
    std::vector<CoverMember> members;
    SimplicialComplex ambient;
    for (int i = 0; i < n; ++i) {
        SimplicialComplex part = oracle::random_complex(rng, 6, 4, 4);
        ambient = unite(ambient, part);
        members.push_back({"X" + std::to_string(i + 1), std::move(part)});
    }
    return Cover(std::move(ambient), std::move(members));
}

SimplicialComplex brute_force_intersection(const Cover& cover, const std::vector<int>& index_set) {
    std::set<oracle::VertexSet> acc = oracle::face_set(cover.members()[index_set.front() - 1].space);
    for (std::size_t i = 1; i < index_set.size(); ++i)
        acc = oracle::intersect_face_sets(acc, oracle::face_set(cover.members()[index_set[i] - 1].space));
    std::vector<Face> faces;
    for (const oracle::VertexSet& vs : acc) faces.push_back(Face(vs));
    return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("cover construction errors") {
    SimplicialComplex edge = simplex({"a", "b"});
    CHECK_THROWS_AS(Cover(edge, {}), Error);

    CHECK_THROWS_WITH_AS(Cover(edge, {{"X1", simplex({"a", "c"})}}),
                         "cover member X1 is not a subcomplex of the ambient complex; "
                         "offending facet {a,c}",
                         NotASubcomplex);

    SimplicialComplex two_edges = SimplicialComplex::from_facets({{"a", "b"}, {"c", "d"}});
    try {
        Cover cover(two_edges, {{"X1", simplex({"a", "b"})}, {"X2", simplex({"c"})}});
        FAIL("expected UnionMismatch");
    } catch (const UnionMismatch& e) {
        CHECK(e.missing_facets == std::vector<std::string>{"{c,d}"});
    }
}

TEST_CASE("poset element ids") {
    CHECK(poset_element_id({1}) == "I{1}");
    CHECK(poset_element_id({1, 3}) == "I{1,3}");
    CHECK(poset_element_id({2, 3, 4}) == "I{2,3,4}");
}

TEST_CASE("chessboard star cover poset has 15 elements") {
    IntersectionPoset poset(star_cover(4));
    REQUIRE(poset.size() == 15);

    std::map<std::size_t, int> by_size;
    for (const PosetElement& e : poset.elements())
        by_size[e.generating_index_sets.front().size()]++;
    CHECK(by_size == std::map<std::size_t, int>{{1, 4}, {2, 6}, {3, 4}, {4, 1}});

    // canonical order sorts by least generating index set
    CHECK(poset.element(0).id == "I{1}");
    CHECK(poset.element(1).id == "I{1,2}");
    CHECK(poset.element(2).id == "I{1,2,3}");
    CHECK(poset.element(3).id == "I{1,2,3,4}");
    CHECK(poset.element(4).id == "I{1,2,4}");
    CHECK(poset.element(5).id == "I{1,3}");
    CHECK(poset.element(14).id == "I{4}");

    CHECK(poset.index_of("I{1,3}") == std::optional<std::size_t>{5});
    CHECK_FALSE(poset.index_of("I{9}").has_value());

    // the four worked intersection types
    CHECK_FALSE(cone_apexes(poset.element(*poset.index_of("I{1}")).space).empty());
    const SimplicialComplex& hex = poset.element(*poset.index_of("I{1,2}")).space;
    CHECK(hex.face_counts() == std::vector<std::size_t>{6, 6});
    const SimplicialComplex& triple = poset.element(*poset.index_of("I{1,2,3}")).space;
    CHECK(triple.face_counts() == std::vector<std::size_t>{3});
    CHECK(poset.element(*poset.index_of("I{1,2,3,4}")).space.empty());
}

TEST_CASE("single-member cover gives a one-element poset") {
    SimplicialComplex k = chessboard(2, 3);
    IntersectionPoset poset(Cover(k, {{"X1", k}}));
    REQUIRE(poset.size() == 1);
    CHECK(poset.element(0).id == "I{1}");
    CHECK(poset.element(0).space == k);
    CHECK(poset.strict_down_set(0).empty());
}

TEST_CASE("disjoint members meet in the empty complex") {
    SimplicialComplex two_edges = SimplicialComplex::from_facets({{"a", "b"}, {"c", "d"}});
    IntersectionPoset poset(
        Cover(two_edges, {{"X1", simplex({"a", "b"})}, {"X2", simplex({"c", "d"})}}));
    REQUIRE(poset.size() == 3);
    CHECK(poset.element(0).space == simplex({"a", "b"}));
    CHECK(poset.element(1).space.empty());
    CHECK(poset.element(2).space == simplex({"c", "d"}));
    CHECK(poset.element(1).generating_index_sets ==
          std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("duplicate members are merged") {
    SimplicialComplex k = cycle(3);
    IntersectionPoset poset(Cover(k, {{"X1", k}, {"X2", k}}));
    REQUIRE(poset.size() == 1);
    CHECK(poset.element(0).generating_index_sets ==
          std::vector<std::vector<int>>{{1}, {1, 2}, {2}});
}

TEST_CASE("random covers match brute-force intersection enumeration") {
    std::mt19937 rng(20240804);
    for (int trial = 0; trial < 40; ++trial) {
        Cover cover = random_cover(rng, 4);
        IntersectionPoset poset(cover);
        const std::size_t n = cover.size();
        CHECK(poset.size() <= (std::size_t{1} << n) - 1);

        // every generating index set reproduces its space by brute force, and
        // every nonempty index set appears exactly once across all elements
        std::size_t total_sets = 0;
        for (const PosetElement& e : poset.elements()) {
            CHECK(std::is_sorted(e.generating_index_sets.begin(), e.generating_index_sets.end()));
            for (const std::vector<int>& index_set : e.generating_index_sets) {
                total_sets++;
                CHECK(brute_force_intersection(cover, index_set) == e.space);
            }
        }
        CHECK(total_sets == (std::size_t{1} << n) - 1);

        // distinct elements have distinct spaces; order is containment
        for (std::size_t a = 0; a < poset.size(); ++a) {
            for (std::size_t b = 0; b < poset.size(); ++b) {
                if (a != b) CHECK(poset.element(a).space != poset.element(b).space);
                CHECK(poset.less(a, b) ==
                      (a != b && is_subcomplex(poset.element(b).space, poset.element(a).space)));
            }
        }
    }
}

TEST_CASE("strict down sets in the chessboard poset") {
    IntersectionPoset poset(star_cover(4));
    CHECK(poset.strict_down_set(*poset.index_of("I{1}")).empty());

    std::vector<std::size_t> below_pair = poset.strict_down_set(*poset.index_of("I{1,2}"));
    REQUIRE(below_pair.size() == 2);
    CHECK(poset.element(below_pair[0]).id == "I{1}");
    CHECK(poset.element(below_pair[1]).id == "I{2}");
    CHECK_FALSE(poset.less(below_pair[0], below_pair[1]));
    CHECK_FALSE(poset.less(below_pair[1], below_pair[0]));

    CHECK(poset.strict_down_set(*poset.index_of("I{1,2,3,4}")).size() == 14);
}

TEST_CASE("order complex basics") {
    CHECK(order_complex(FinitePoset{}).empty());

    FinitePoset antichain{{"a", "b", "c"}, std::vector<std::vector<bool>>(3, std::vector<bool>(3, false))};
    SimplicialComplex pts = order_complex(antichain);
    CHECK(pts.face_counts() == std::vector<std::size_t>{3});

    FinitePoset chain{{"a", "b", "c"}, {{false, true, true}, {false, false, true}, {false, false, false}}};
    CHECK(order_complex(chain) == simplex({"a", "b", "c"}));
}

TEST_CASE("order complex below a triple intersection is a hexagon") {
    IntersectionPoset poset(star_cover(4));
    SimplicialComplex link = order_complex(poset.down_set_poset(*poset.index_of("I{1,2,3}")));
    CHECK(link.face_counts() == std::vector<std::size_t>{6, 6});
    CHECK(reduced_homology(link).betti == std::map<int, long long>{{1, 1}});
}

TEST_CASE("order complex below the total intersection subdivides a tetrahedron boundary") {
    IntersectionPoset poset(star_cover(4));
    SimplicialComplex link = order_complex(poset.down_set_poset(*poset.index_of("I{1,2,3,4}")));
    CHECK(link.face_counts() == std::vector<std::size_t>{14, 36, 24});
    HomologyProfile p = reduced_homology(link);
    CHECK(p.betti == std::map<int, long long>{{2, 1}});
    CHECK(p.torsion.empty());
}

TEST_CASE("order complex faces are exactly the chains") {
    IntersectionPoset poset(star_cover(3));
    REQUIRE(poset.size() == 7);
    FinitePoset down = poset.down_set_poset(*poset.index_of("I{1,2,3}"));
    SimplicialComplex link = order_complex(down);

    std::map<std::string, std::size_t> by_label;
    for (std::size_t i = 0; i < down.labels.size(); ++i) by_label[down.labels[i]] = i;
    for (const Face& f : link.all_faces()) {
        std::vector<std::size_t> ids;
        for (const Vertex& v : f.vertices()) ids.push_back(by_label.at(v));
        bool chain = true;
        for (std::size_t a : ids)
            for (std::size_t b : ids)
                if (a != b && !down.less[a][b] && !down.less[b][a]) chain = false;
        CHECK(chain);
    }
}

}  // TEST_SUITE
