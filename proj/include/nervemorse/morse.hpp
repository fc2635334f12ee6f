#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nervemorse/complex.hpp"

namespace nervemorse {

// One matched pair of a discrete Morse matching: cell < coface with
// dim(coface) == dim(cell) + 1. Shape is enforced by validate_matching.
struct MorsePair {
    Face cell;
    Face coface;
    bool operator==(const MorsePair&) const = default;
};

class MorseMatching {
public:
    MorseMatching() = default;
    explicit MorseMatching(std::vector<MorsePair> pairs);

    const std::vector<MorsePair>& pairs() const { return pairs_; }
    bool empty() const { return pairs_.empty(); }

private:
    std::vector<MorsePair> pairs_;  // sorted by cell
};

// Census of critical cells for a validated matching. The initial cell is a
// critical vertex (the lexicographically least one unless a choice is
// supplied); it exists exactly when the complex is nonempty.
struct MorseData {
    std::vector<Face> critical;          // canonical order
    std::optional<Face> initial;
    std::vector<int> non_initial_dims;   // sorted multiset

    int min_non_initial_dim() const { return non_initial_dims.front(); }
    int max_non_initial_dim() const { return non_initial_dims.back(); }
};

// Checks partial-matching shape and acyclicity of the modified Hasse diagram
// (closed V-path search per adjacent dimension pair) and returns the critical
// census. Throws NotAFace, NotCodimensionOne, DoublyMatched, CyclicMatching,
// BadInitial.
MorseData validate_matching(const SimplicialComplex& k, const MorseMatching& m,
                            const std::optional<Face>& initial = std::nullopt);

// Complete matching of a cone: every face not containing the apex is paired
// with its apex extension, leaving the apex as the only critical cell.
MorseMatching cone_matching(const SimplicialComplex& k, const Vertex& apex);

// Deterministic automatic matching. Cones delegate to cone_matching with the
// least apex; otherwise free pairs are collapsed in canonical order and, when
// stuck, the least face of top dimension is removed as critical. The result
// always passes validate_matching; no optimality is promised.
MorseMatching greedy_matching(const SimplicialComplex& k);

using VertexSetPair = std::pair<std::vector<Vertex>, std::vector<Vertex>>;

// Parses raw vertex-set pairs (as read from a matchings file), validates, and
// applies the explicit initial cell if one is given.
std::pair<MorseMatching, MorseData> matching_from_spec(
    const SimplicialComplex& k, const std::vector<VertexSetPair>& pair_list,
    const std::optional<std::vector<Vertex>>& initial = std::nullopt);

}  // namespace nervemorse
