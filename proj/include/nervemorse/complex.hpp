#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "nervemorse/errors.hpp"

namespace nervemorse {

// Vertices are opaque printable tokens ordered lexicographically. Tokens may
// not be empty, may not contain whitespace, and may not start with '#' (the
// .cx comment marker).
using Vertex = std::string;

bool valid_vertex_token(const Vertex& v);

// A nonempty set of vertices, kept sorted. Canonical order on faces is
// (dimension, lexicographic vertex list); this is the order every face- and
// facet-valued result is emitted in.
class Face {
public:
    explicit Face(std::vector<Vertex> vertices);

    int dim() const { return static_cast<int>(verts_.size()) - 1; }
    const std::vector<Vertex>& vertices() const { return verts_; }

    bool contains(const Vertex& v) const;
    bool is_subset_of(const Face& other) const;
    Face with(const Vertex& v) const;
    Face without(const Vertex& v) const;  // throws VertexNotFound; result must stay nonempty

    std::strong_ordering operator<=>(const Face& other) const;
    bool operator==(const Face& other) const { return verts_ == other.verts_; }

private:
    std::vector<Vertex> verts_;  // sorted, unique, nonempty
};

std::string to_string(const Face& f);  // "{a,b,c}"

// Finite abstract simplicial complex stored by its facets. The facet list is
// always an inclusion antichain in canonical face order, so operator== is
// face-set equality. The empty complex has no facets and dimension -1.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Downward closure of the listed vertex sets; contained entries are absorbed.
    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facet_list);
    // Antichain reduction of an arbitrary face list.
    static SimplicialComplex from_faces(std::vector<Face> faces);

    const std::vector<Face>& facets() const { return facets_; }
    std::vector<Vertex> vertices() const;

    bool empty() const { return facets_.empty(); }
    int dim() const;  // -1 for the empty complex
    bool contains(const Face& f) const;
    bool contains_vertex(const Vertex& v) const;

    std::vector<Face> faces(int k) const;         // all k-dimensional faces
    std::vector<Face> all_faces() const;          // every face, canonical order
    std::vector<std::size_t> face_counts() const; // index d -> number of d-faces

    std::size_t facet_count() const { return facets_.size(); }

    bool operator==(const SimplicialComplex& other) const = default;
    bool operator<(const SimplicialComplex& other) const { return facets_ < other.facets_; }

private:
    std::vector<Face> facets_;
};

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

// Vertex-induced subcomplex on the given vertex set.
SimplicialComplex induced(const SimplicialComplex& k, const std::vector<Vertex>& verts);

// Closed star {F : F + v is a face}. v must be a vertex of k.
SimplicialComplex star(const SimplicialComplex& k, const Vertex& v);

// All v with star(k, v) == k; empty if k is not a cone or is empty.
std::vector<Vertex> cone_apexes(const SimplicialComplex& k);

// Simplicial join. Left vertices are prefixed "L:", right vertices "R:", so
// operands sharing labels never collide. Join with the empty complex returns
// the other operand (prefixed).
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace nervemorse
