#include "nervemorse/generators.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "nervemorse/errors.hpp"
#include "nervemorse/morse.hpp"

namespace nervemorse {

namespace {

Vertex square_label(int row, int col) {
    return "r" + std::to_string(row) + "c" + std::to_string(col);
}

Vertex cycle_label(int i) { return "v" + std::to_string(i); }

// Matching on a complex that is a single closed cycle: walk from the least
// vertex toward its lesser neighbour and pair each vertex reached with the
// edge it was entered through. Critical cells: the start vertex and the edge
// closing the walk.
std::pair<MorseMatching, MorseData> cycle_matching(const SimplicialComplex& k) {
    std::map<Vertex, std::vector<Vertex>> adjacent;
    for (const Face& e : k.faces(1)) {
        adjacent[e.vertices()[0]].push_back(e.vertices()[1]);
        adjacent[e.vertices()[1]].push_back(e.vertices()[0]);
    }
    const Vertex start = k.vertices().front();
    Vertex previous = start;
    Vertex current = std::min(adjacent.at(start)[0], adjacent.at(start)[1]);
    std::vector<MorsePair> pairs;
    while (current != start) {
        pairs.push_back({Face({current}), Face({previous, current})});
        const auto& nbrs = adjacent.at(current);
        Vertex next = nbrs[0] == previous ? nbrs[1] : nbrs[0];
        previous = current;
        current = next;
    }
    MorseMatching matching(std::move(pairs));
    MorseData data = validate_matching(k, matching);
    return {matching, data};
}

}  // namespace

SimplicialComplex chessboard(int m, int n) {
    if (m < 0 || n < 0) throw Error("chessboard sides must be nonnegative");
    const bool rows_small = m <= n;
    const int small = rows_small ? m : n;
    const int large = rows_small ? n : m;
    if (small == 0) return SimplicialComplex();

    // facets are the injections {1..small} -> {1..large}
    std::vector<std::vector<Vertex>> facets;
    std::vector<int> image(small);
    std::vector<bool> used(static_cast<std::size_t>(large) + 1, false);
    auto place = [&](auto&& self, int i) -> void {
        if (i == small) {
            std::vector<Vertex> facet;
            facet.reserve(small);
            for (int j = 0; j < small; ++j) {
                int row = rows_small ? j + 1 : image[j];
                int col = rows_small ? image[j] : j + 1;
                facet.push_back(square_label(row, col));
            }
            facets.push_back(std::move(facet));
            return;
        }
        for (int v = 1; v <= large; ++v) {
            if (used[v]) continue;
            used[v] = true;
            image[i] = v;
            self(self, i + 1);
            used[v] = false;
        }
    };
    place(place, 0);
    return SimplicialComplex::from_facets(facets);
}

Cover star_cover(int m) {
    if (m < 2) throw Error("star cover needs a board side of at least 2");
    SimplicialComplex ambient = chessboard(m, m);
    std::vector<CoverMember> members;
    members.reserve(m);
    for (int i = 1; i <= m; ++i)
        members.push_back({"X" + std::to_string(i), star(ambient, square_label(i, 1))});
    return Cover(std::move(ambient), std::move(members));
}

SimplicialComplex cycle(int k) {
    if (k < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<std::vector<Vertex>> facets;
    facets.reserve(k);
    for (int i = 0; i < k; ++i)
        facets.push_back({cycle_label(i), cycle_label((i + 1) % k)});
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex simplex(const std::vector<Vertex>& vertices) {
    if (vertices.empty()) return SimplicialComplex();
    return SimplicialComplex::from_facets({vertices});
}

SimplicialComplex sphere_boundary(int d) {
    if (d < 0) throw Error("sphere dimension must be nonnegative");
    const int n = d + 2;
    std::vector<Vertex> labels;
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back("s" + std::to_string(i));
    std::vector<std::vector<Vertex>> facets;
    facets.reserve(n);
    for (int skip = 0; skip < n; ++skip) {
        std::vector<Vertex> facet;
        facet.reserve(n - 1);
        for (int i = 0; i < n; ++i)
            if (i != skip) facet.push_back(labels[i]);
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

Cover arc_cover(int k, int arcs) {
    SimplicialComplex ambient = cycle(k);
    if (arcs < 2 || arcs > k) throw Error("arc count must be between 2 and the cycle length");
    std::vector<CoverMember> members;
    members.reserve(arcs);
    for (int j = 0; j < arcs; ++j) {
        const int lo = j * k / arcs;
        const int hi = (j + 1) * k / arcs;
        std::vector<std::vector<Vertex>> edges;
        edges.reserve(hi - lo);
        for (int i = lo; i < hi; ++i)
            edges.push_back({cycle_label(i), cycle_label((i + 1) % k)});
        members.push_back({"A" + std::to_string(j + 1), SimplicialComplex::from_facets(edges)});
    }
    return Cover(std::move(ambient), std::move(members));
}

Cover facet_cover(const SimplicialComplex& k) {
    std::vector<CoverMember> members;
    members.reserve(k.facet_count());
    int i = 0;
    for (const Face& f : k.facets())
        members.push_back({"F" + std::to_string(++i), simplex(f.vertices())});
    return Cover(k, std::move(members));
}

MorseAssignment canonical_chessboard_assignment(const Cover& cover) {
    const Cover reference = star_cover(4);
    bool shape_ok = cover.ambient() == reference.ambient() && cover.size() == reference.size();
    if (shape_ok)
        for (std::size_t i = 0; i < cover.size(); ++i)
            shape_ok = shape_ok && cover.members()[i].space == reference.members()[i].space;
    if (!shape_ok) throw Error("canonical matchings exist only for the 4x4 star cover");

    IntersectionPoset poset(cover);
    MorseAssignment assignment;
    for (const PosetElement& el : poset.elements()) {
        MorseEntry entry;
        const std::size_t generators = el.generating_index_sets.front().size();
        if (generators == 1) {
            const Vertex apex = square_label(el.generating_index_sets.front().front(), 1);
            entry.matching = cone_matching(el.space, apex);
            entry.data = validate_matching(el.space, entry.matching);
            entry.source = "cone";
        } else if (generators == 2) {
            auto [matching, data] = cycle_matching(el.space);
            entry.matching = std::move(matching);
            entry.data = std::move(data);
            entry.source = "user";
        } else {
            entry.data = validate_matching(el.space, entry.matching);
            entry.source = "user";
        }
        assignment.per_element.emplace(el.id, std::move(entry));
    }
    return assignment;
}

}  // namespace nervemorse
