#include "nervemorse/complex.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace nervemorse {

bool valid_vertex_token(const Vertex& v) {
    if (v.empty() || v.front() == '#') return false;
    for (unsigned char c : v)
        if (std::isspace(c)) return false;
    return true;
}

Face::Face(std::vector<Vertex> vertices) : verts_(std::move(vertices)) {
    for (const Vertex& v : verts_)
        if (!valid_vertex_token(v)) throw MalformedToken(v);
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    if (verts_.empty()) throw Error("a face must have at least one vertex");
}

bool Face::contains(const Vertex& v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
    return std::includes(other.verts_.begin(), other.verts_.end(), verts_.begin(), verts_.end());
}

Face Face::with(const Vertex& v) const {
    std::vector<Vertex> vs = verts_;
    vs.push_back(v);
    return Face(std::move(vs));
}

Face Face::without(const Vertex& v) const {
    std::vector<Vertex> vs;
    vs.reserve(verts_.size());
    bool found = false;
    for (const Vertex& w : verts_) {
        if (w == v)
            found = true;
        else
            vs.push_back(w);
    }
    if (!found) throw VertexNotFound(v);
    return Face(std::move(vs));
}

std::strong_ordering Face::operator<=>(const Face& other) const {
    if (auto c = verts_.size() <=> other.verts_.size(); c != 0) return c;
    return verts_ <=> other.verts_;
}

std::string to_string(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.vertices().size(); ++i) {
        if (i) s += ",";
        s += f.vertices()[i];
    }
    s += "}";
    return s;
}

namespace {

// Keep only inclusion-maximal faces, sorted canonically.
std::vector<Face> antichain_reduce(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        // canonical order sorts by dimension, so candidates live strictly later
        for (std::size_t j = faces.size(); j-- > i + 1;) {
            if (faces[i].dim() < faces[j].dim() && faces[i].is_subset_of(faces[j])) {
                dominated = true;
                break;
            }
        }
        if (!dominated) maximal.push_back(faces[i]);
    }
    return maximal;
}

void enumerate_subfaces(const Face& f, int k, std::set<Face>& out) {
    // all (k+1)-subsets of f's vertex list
    const std::vector<Vertex>& vs = f.vertices();
    const int n = static_cast<int>(vs.size());
    const int take = k + 1;
    if (take > n) return;
    std::vector<int> idx(take);
    for (int i = 0; i < take; ++i) idx[i] = i;
    while (true) {
        std::vector<Vertex> sub;
        sub.reserve(take);
        for (int i : idx) sub.push_back(vs[i]);
        out.insert(Face(std::move(sub)));
        int i = take - 1;
        while (i >= 0 && idx[i] == n - take + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facet_list) {
    std::vector<Face> faces;
    faces.reserve(facet_list.size());
    for (const auto& vs : facet_list) faces.push_back(Face(vs));
    return from_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
    SimplicialComplex k;
    k.facets_ = antichain_reduce(std::move(faces));
    return k;
}

std::vector<Vertex> SimplicialComplex::vertices() const {
    std::set<Vertex> vs;
    for (const Face& f : facets_) vs.insert(f.vertices().begin(), f.vertices().end());
    return {vs.begin(), vs.end()};
}

int SimplicialComplex::dim() const {
    return facets_.empty() ? -1 : facets_.back().dim();
}

bool SimplicialComplex::contains(const Face& f) const {
    for (const Face& g : facets_)
        if (f.is_subset_of(g)) return true;
    return false;
}

bool SimplicialComplex::contains_vertex(const Vertex& v) const {
    for (const Face& g : facets_)
        if (g.contains(v)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::faces(int k) const {
    std::set<Face> out;
    for (const Face& f : facets_) enumerate_subfaces(f, k, out);
    return {out.begin(), out.end()};
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face> out;
    for (const Face& f : facets_)
        for (int k = 0; k <= f.dim(); ++k) enumerate_subfaces(f, k, out);
    return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(dim() + 1), 0);
    for (const Face& f : all_faces()) counts[static_cast<std::size_t>(f.dim())]++;
    return counts;
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
    // Every common face lies in some facet of a and some facet of b, hence in
    // their pairwise intersection; no face enumeration needed.
    std::vector<Face> candidates;
    for (const Face& f : a.facets()) {
        for (const Face& g : b.facets()) {
            std::vector<Vertex> common;
            std::set_intersection(f.vertices().begin(), f.vertices().end(),
                                  g.vertices().begin(), g.vertices().end(),
                                  std::back_inserter(common));
            if (!common.empty()) candidates.push_back(Face(std::move(common)));
        }
    }
    return SimplicialComplex::from_faces(std::move(candidates));
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> all = a.facets();
    all.insert(all.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex::from_faces(std::move(all));
}

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (const Face& f : a.facets())
        if (!b.contains(f)) return false;
    return true;
}

SimplicialComplex induced(const SimplicialComplex& k, const std::vector<Vertex>& verts) {
    std::vector<Vertex> keep = verts;
    std::sort(keep.begin(), keep.end());
    std::vector<Face> restricted;
    for (const Face& f : k.facets()) {
        std::vector<Vertex> common;
        std::set_intersection(f.vertices().begin(), f.vertices().end(), keep.begin(), keep.end(),
                              std::back_inserter(common));
        if (!common.empty()) restricted.push_back(Face(std::move(common)));
    }
    return SimplicialComplex::from_faces(std::move(restricted));
}

SimplicialComplex star(const SimplicialComplex& k, const Vertex& v) {
    if (!k.contains_vertex(v)) throw VertexNotFound(v);
    std::vector<Face> generating;
    for (const Face& f : k.facets())
        if (f.contains(v)) generating.push_back(f);
    return SimplicialComplex::from_faces(std::move(generating));
}

std::vector<Vertex> cone_apexes(const SimplicialComplex& k) {
    // star(k, v) == k exactly when every facet contains v
    if (k.empty()) return {};
    std::vector<Vertex> common = k.facets().front().vertices();
    for (const Face& f : k.facets()) {
        std::vector<Vertex> next;
        std::set_intersection(common.begin(), common.end(),
                              f.vertices().begin(), f.vertices().end(),
                              std::back_inserter(next));
        common = std::move(next);
        if (common.empty()) break;
    }
    return common;
}

namespace {

SimplicialComplex prefixed(const SimplicialComplex& k, const char* prefix) {
    std::vector<Face> faces;
    faces.reserve(k.facets().size());
    for (const Face& f : k.facets()) {
        std::vector<Vertex> vs;
        vs.reserve(f.vertices().size());
        for (const Vertex& v : f.vertices()) vs.push_back(prefix + v);
        faces.push_back(Face(std::move(vs)));
    }
    return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    SimplicialComplex left = prefixed(a, "L:");
    SimplicialComplex right = prefixed(b, "R:");
    if (left.empty()) return right;
    if (right.empty()) return left;
    std::vector<Face> faces;
    faces.reserve(left.facets().size() * right.facets().size());
    for (const Face& f : left.facets()) {
        for (const Face& g : right.facets()) {
            std::vector<Vertex> vs = f.vertices();
            vs.insert(vs.end(), g.vertices().begin(), g.vertices().end());
            faces.push_back(Face(std::move(vs)));
        }
    }
    return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace nervemorse
