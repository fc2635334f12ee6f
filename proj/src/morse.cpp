#include "nervemorse/morse.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nervemorse {

MorseMatching::MorseMatching(std::vector<MorsePair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end(),
              [](const MorsePair& a, const MorsePair& b) { return a.cell < b.cell; });
}

namespace {

// codimension-1 faces of f (all vertices dropped one at a time); only defined
// for dim >= 1
std::vector<Face> facet_boundary(const Face& f) {
    std::vector<Face> out;
    const std::vector<Vertex>& vs = f.vertices();
    out.reserve(vs.size());
    for (const Vertex& v : vs) out.push_back(f.without(v));
    return out;
}

// every nonempty proper subface of f
std::vector<Face> proper_subfaces(const Face& f) {
    const std::vector<Vertex>& vs = f.vertices();
    const std::size_t n = vs.size();
    std::vector<Face> out;
    out.reserve((std::size_t{1} << n) - 2);
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
        std::vector<Vertex> sub;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) sub.push_back(vs[i]);
        out.push_back(Face(std::move(sub)));
    }
    return out;
}

// Search for a closed V-path among the matched cells of one dimension layer.
// Nodes are matched k-cells; sigma steps to any other matched facet of its
// coface. Returns the witness cycle cell,coface,cell,...,cell on success.
std::optional<std::vector<Face>> find_closed_v_path(const std::vector<Face>& layer_cells,
                                                    const std::map<Face, Face>& up) {
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < layer_cells.size(); ++i) index.emplace(layer_cells[i], i);

    std::vector<std::vector<std::size_t>> next(layer_cells.size());
    for (std::size_t i = 0; i < layer_cells.size(); ++i) {
        const Face& coface = up.at(layer_cells[i]);
        for (const Face& g : facet_boundary(coface)) {
            if (g == layer_cells[i]) continue;
            auto it = index.find(g);
            if (it != index.end()) next[i].push_back(it->second);
        }
    }

    // iterative coloring DFS; 0 unseen, 1 on stack, 2 done
    std::vector<int> color(layer_cells.size(), 0);
    std::vector<std::size_t> parent(layer_cells.size(), SIZE_MAX);
    for (std::size_t root = 0; root < layer_cells.size(); ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [node, edge] = stack.back();
            if (edge < next[node].size()) {
                std::size_t target = next[node][edge++];
                if (color[target] == 0) {
                    color[target] = 1;
                    parent[target] = node;
                    stack.push_back({target, 0});
                } else if (color[target] == 1) {
                    // back edge: unwind node -> ... -> target
                    std::vector<std::size_t> cycle{node};
                    for (std::size_t c = node; c != target; c = parent[c]) cycle.push_back(parent[c]);
                    std::reverse(cycle.begin(), cycle.end());
                    std::vector<Face> witness;
                    for (std::size_t c : cycle) {
                        witness.push_back(layer_cells[c]);
                        witness.push_back(up.at(layer_cells[c]));
                    }
                    witness.push_back(layer_cells[cycle.front()]);
                    return witness;
                }
            } else {
                color[node] = 2;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

MorseData validate_matching(const SimplicialComplex& k, const MorseMatching& m,
                            const std::optional<Face>& initial) {
    const std::vector<Face> cells = k.all_faces();
    const std::set<Face> cell_set(cells.begin(), cells.end());

    std::set<Face> matched;
    std::map<Face, Face> up;  // matched cell -> its coface
    for (const MorsePair& p : m.pairs()) {
        if (!cell_set.count(p.cell)) throw NotAFace(to_string(p.cell));
        if (!cell_set.count(p.coface)) throw NotAFace(to_string(p.coface));
        if (p.coface.dim() != p.cell.dim() + 1 || !p.cell.is_subset_of(p.coface))
            throw NotCodimensionOne(to_string(p.cell), to_string(p.coface));
        if (!matched.insert(p.cell).second) throw DoublyMatched(to_string(p.cell));
        if (!matched.insert(p.coface).second) throw DoublyMatched(to_string(p.coface));
        up.emplace(p.cell, p.coface);
    }

    // any directed cycle in the modified Hasse diagram alternates between two
    // adjacent dimensions, so each layer can be searched on its own
    std::map<int, std::vector<Face>> matched_by_dim;
    for (const auto& [cell, coface] : up) matched_by_dim[cell.dim()].push_back(cell);
    for (const auto& entry : matched_by_dim) {
        if (auto cycle = find_closed_v_path(entry.second, up)) {
            std::vector<std::string> rendered;
            rendered.reserve(cycle->size());
            for (const Face& f : *cycle) rendered.push_back(to_string(f));
            throw CyclicMatching(std::move(rendered));
        }
    }

    MorseData data;
    for (const Face& f : cells)
        if (!matched.count(f)) data.critical.push_back(f);

    if (initial) {
        bool critical_vertex = initial->dim() == 0 &&
                               std::binary_search(data.critical.begin(), data.critical.end(), *initial);
        if (!critical_vertex) throw BadInitial(to_string(*initial));
        data.initial = *initial;
    } else if (!k.empty()) {
        // default rule: the least critical vertex; a valid matching on a
        // nonempty complex always leaves one
        if (data.critical.empty() || data.critical.front().dim() != 0)
            throw Error("valid matching left no critical vertex on a nonempty complex");
        data.initial = data.critical.front();
    }

    for (const Face& f : data.critical)
        if (!(data.initial && f == *data.initial)) data.non_initial_dims.push_back(f.dim());
    std::sort(data.non_initial_dims.begin(), data.non_initial_dims.end());
    return data;
}

MorseMatching cone_matching(const SimplicialComplex& k, const Vertex& apex) {
    std::vector<Vertex> apexes = cone_apexes(k);
    if (!std::binary_search(apexes.begin(), apexes.end(), apex)) throw NotACone(apex);
    std::vector<MorsePair> pairs;
    for (const Face& f : k.all_faces())
        if (!f.contains(apex)) pairs.push_back({f, f.with(apex)});
    return MorseMatching(std::move(pairs));
}

MorseMatching greedy_matching(const SimplicialComplex& k) {
    if (k.empty()) return MorseMatching{};
    std::vector<Vertex> apexes = cone_apexes(k);
    if (!apexes.empty()) return cone_matching(k, apexes.front());

    const std::vector<Face> cells = k.all_faces();
    std::map<Face, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) index.emplace(cells[i], i);

    // static codim-1 coface lists and live proper-coface counts
    std::vector<std::vector<std::size_t>> up(cells.size());
    std::vector<std::size_t> coface_count(cells.size(), 0);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].dim() == 0) continue;
        for (const Face& g : facet_boundary(cells[i])) up[index.at(g)].push_back(i);
        for (const Face& g : proper_subfaces(cells[i])) coface_count[index.at(g)]++;
    }

    std::vector<bool> live(cells.size(), true);
    std::set<std::size_t> free_cells;  // live cells with exactly one live proper coface
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (coface_count[i] == 1) free_cells.insert(i);

    std::size_t remaining = cells.size();
    auto remove_cell = [&](std::size_t i) {
        live[i] = false;
        free_cells.erase(i);
        --remaining;
        // removing a face lowers the coface count of all its live subfaces
        if (cells[i].dim() == 0) return;
        for (const Face& g : proper_subfaces(cells[i])) {
            std::size_t gi = index.at(g);
            if (!live[gi]) continue;
            if (--coface_count[gi] == 1)
                free_cells.insert(gi);
            else
                free_cells.erase(gi);
        }
    };

    std::vector<MorsePair> pairs;
    while (remaining > 0) {
        if (!free_cells.empty()) {
            // the free set is ordered by cell index, which follows canonical face order
            std::size_t ci = *free_cells.begin();
            std::size_t coface = SIZE_MAX;
            for (std::size_t u : up[ci])
                if (live[u]) coface = u;
            if (coface == SIZE_MAX) throw Error("greedy_matching: free cell lost its coface");
            remove_cell(ci);
            remove_cell(coface);
            pairs.push_back({cells[ci], cells[coface]});
        } else {
            // stuck: the least face of top dimension becomes critical; it is
            // maximal, so removing it keeps the live set downward closed
            int max_dim = -1;
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (live[i]) max_dim = std::max(max_dim, cells[i].dim());
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (live[i] && cells[i].dim() == max_dim) {
                    remove_cell(i);
                    break;
                }
            }
        }
    }

    MorseMatching m(std::move(pairs));
    validate_matching(k, m);
    return m;
}

std::pair<MorseMatching, MorseData> matching_from_spec(
    const SimplicialComplex& k, const std::vector<VertexSetPair>& pair_list,
    const std::optional<std::vector<Vertex>>& initial) {
    std::vector<MorsePair> pairs;
    pairs.reserve(pair_list.size());
    for (const auto& [cell_verts, coface_verts] : pair_list)
        pairs.push_back({Face(cell_verts), Face(coface_verts)});
    MorseMatching m(std::move(pairs));
    std::optional<Face> init;
    if (initial) init = Face(*initial);
    MorseData data = validate_matching(k, m, init);
    return {std::move(m), std::move(data)};
}

}  // namespace nervemorse
