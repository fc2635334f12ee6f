#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nervemorse/complex.hpp"

namespace nervemorse {

struct CoverMember {
    std::string name;
    SimplicialComplex space;
};

// A named family of subcomplexes whose union is the ambient complex. Both
// invariants are checked at construction: NotASubcomplex when a member sticks
// out, UnionMismatch (listing the missing facets) when the members do not
// cover.
class Cover {
public:
    Cover(SimplicialComplex ambient, std::vector<CoverMember> members);

    const SimplicialComplex& ambient() const { return ambient_; }
    const std::vector<CoverMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

private:
    SimplicialComplex ambient_;
    std::vector<CoverMember> members_;
};

// One deduplicated intersection of cover members. Index sets are 1-based and
// sorted; the id renders the lexicographically least generating set, e.g.
// "I{1,3}". Elements are ordered by that least set.
struct PosetElement {
    std::string id;
    SimplicialComplex space;
    std::vector<std::vector<int>> generating_index_sets;
};

std::string poset_element_id(const std::vector<int>& index_set);

// A small explicit poset handed to order_complex: labels plus the full strict
// order relation.
struct FinitePoset {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> less;  // less[a][b]: a strictly below b

    std::size_t size() const { return labels.size(); }
};

// Intersections of all nonempty subfamilies of a cover, ordered by reverse
// inclusion of spaces: Y <= Y' exactly when space(Y) contains space(Y').
class IntersectionPoset {
public:
    explicit IntersectionPoset(const Cover& cover);

    std::size_t size() const { return elements_.size(); }
    const std::vector<PosetElement>& elements() const { return elements_; }
    const PosetElement& element(std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(std::string_view id) const;

    // strict order: space(a) properly contains space(b)
    bool less(std::size_t a, std::size_t b) const { return a != b && leq_[a][b]; }

    // indices of elements strictly below i, i.e. spaces strictly containing
    // space(i)
    std::vector<std::size_t> strict_down_set(std::size_t i) const;
    // the same restriction packaged as a poset for order_complex
    FinitePoset down_set_poset(std::size_t i) const;

private:
    std::vector<PosetElement> elements_;
    std::vector<std::vector<bool>> leq_;
};

inline IntersectionPoset intersection_poset(const Cover& cover) { return IntersectionPoset(cover); }

// Complex of chains of a finite poset: vertices are the labels, facets the
// maximal chains.
SimplicialComplex order_complex(const FinitePoset& q);

}  // namespace nervemorse
