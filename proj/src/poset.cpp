#include "nervemorse/poset.hpp"

#include <algorithm>
#include <map>

namespace nervemorse {

Cover::Cover(SimplicialComplex ambient, std::vector<CoverMember> members)
    : ambient_(std::move(ambient)), members_(std::move(members)) {
    if (members_.empty()) throw Error("a cover needs at least one member");
    for (const CoverMember& m : members_) {
        for (const Face& f : m.space.facets())
            if (!ambient_.contains(f)) throw NotASubcomplex(m.name, to_string(f));
    }
    SimplicialComplex covered;
    for (const CoverMember& m : members_) covered = unite(covered, m.space);
    if (!(covered == ambient_)) {
        std::vector<std::string> missing;
        for (const Face& f : ambient_.facets())
            if (!covered.contains(f)) missing.push_back(to_string(f));
        throw UnionMismatch(std::move(missing));
    }
}

std::string poset_element_id(const std::vector<int>& index_set) {
    std::string id = "I{";
    for (std::size_t i = 0; i < index_set.size(); ++i) {
        if (i) id += ",";
        id += std::to_string(index_set[i]);
    }
    id += "}";
    return id;
}

IntersectionPoset::IntersectionPoset(const Cover& cover) {
    const std::size_t n = cover.size();
    if (n > 16) throw Error("covers with more than 16 members are not supported");

    // all intersections over nonempty index sets, deduplicated by face-set
    // equality; the empty complex is kept when it arises
    std::map<SimplicialComplex, std::vector<std::vector<int>>> by_space;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> index_set;
        SimplicialComplex space;
        bool first = true;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t{1} << i))) continue;
            index_set.push_back(static_cast<int>(i) + 1);
            if (first) {
                space = cover.members()[i].space;
                first = false;
            } else if (!space.empty()) {
                space = intersect(space, cover.members()[i].space);
            }
        }
        by_space[space].push_back(std::move(index_set));
    }

    for (auto& [space, gens] : by_space) {
        std::sort(gens.begin(), gens.end());
        elements_.push_back(PosetElement{poset_element_id(gens.front()), space, gens});
    }
    std::sort(elements_.begin(), elements_.end(), [](const PosetElement& a, const PosetElement& b) {
        return a.generating_index_sets.front() < b.generating_index_sets.front();
    });

    // reverse inclusion, decided by full containment tests between spaces
    leq_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
    for (std::size_t a = 0; a < elements_.size(); ++a)
        for (std::size_t b = 0; b < elements_.size(); ++b)
            leq_[a][b] = is_subcomplex(elements_[b].space, elements_[a].space);
}

std::optional<std::size_t> IntersectionPoset::index_of(std::string_view id) const {
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (elements_[i].id == id) return i;
    return std::nullopt;
}

std::vector<std::size_t> IntersectionPoset::strict_down_set(std::size_t i) const {
    std::vector<std::size_t> below;
    for (std::size_t j = 0; j < elements_.size(); ++j)
        if (less(j, i)) below.push_back(j);
    return below;
}

FinitePoset IntersectionPoset::down_set_poset(std::size_t i) const {
    const std::vector<std::size_t> below = strict_down_set(i);
    FinitePoset q;
    q.labels.reserve(below.size());
    for (std::size_t j : below) q.labels.push_back(elements_[j].id);
    q.less.assign(below.size(), std::vector<bool>(below.size(), false));
    for (std::size_t a = 0; a < below.size(); ++a)
        for (std::size_t b = 0; b < below.size(); ++b) q.less[a][b] = less(below[a], below[b]);
    return q;
}

SimplicialComplex order_complex(const FinitePoset& q) {
    const std::size_t n = q.size();
    if (n == 0) return {};

    // covers[a] holds the immediate successors of a within q
    std::vector<std::vector<std::size_t>> covers(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (!q.less[a][b]) continue;
            bool immediate = true;
            for (std::size_t c = 0; c < n && immediate; ++c)
                if (q.less[a][c] && q.less[c][b]) immediate = false;
            if (immediate) covers[a].push_back(b);
        }
    }

    std::vector<Face> maximal_chains;
    std::vector<std::size_t> chain;
    auto descend = [&](auto&& self, std::size_t at) -> void {
        chain.push_back(at);
        if (covers[at].empty()) {
            std::vector<Vertex> labels;
            labels.reserve(chain.size());
            for (std::size_t c : chain) labels.push_back(q.labels[c]);
            maximal_chains.push_back(Face(std::move(labels)));
        } else {
            for (std::size_t next : covers[at]) self(self, next);
        }
        chain.pop_back();
    };
    for (std::size_t a = 0; a < n; ++a) {
        bool minimal = true;
        for (std::size_t b = 0; b < n && minimal; ++b)
            if (q.less[b][a]) minimal = false;
        if (minimal) descend(descend, a);
    }
    return SimplicialComplex::from_faces(std::move(maximal_chains));
}

}  // namespace nervemorse
