#pragma once

#include <map>
#include <string>
#include <vector>

#include "nervemorse/homology.hpp"
#include "nervemorse/morse.hpp"
#include "nervemorse/poset.hpp"

namespace nervemorse {

// Per-poset-element Morse data, keyed by element id. `source` records where
// the matching came from ("user", "cone", "greedy", ...); it is echoed in
// reports and has no semantics here.
struct MorseEntry {
    MorseMatching matching;
    MorseData data;
    std::string source;
};

struct MorseAssignment {
    std::map<std::string, MorseEntry> per_element;
};

struct DimensionViolation {
    std::string y_id;  // the larger space
    std::string z_id;  // the smaller space
    int dim_y;         // least non-initial critical dimension on Y
    int dim_z;         // greatest non-initial critical dimension on Z
    bool operator==(const DimensionViolation&) const = default;
};

struct HypothesisReport {
    bool ok = true;
    std::vector<DimensionViolation> violations;
};

// Thrown by decompose when the dimension hypothesis fails and force is off.
struct HypothesisViolation : Error {
    explicit HypothesisViolation(HypothesisReport report_)
        : Error("decomposition hypothesis violated for " +
                std::to_string(report_.violations.size()) + " comparable pair(s)"),
          report(std::move(report_)) {}
    HypothesisReport report;
};

struct Summand {
    std::string id;
    SimplicialComplex space;   // Y
    SimplicialComplex link;    // order complex of the elements strictly below Y
    SimplicialComplex joined;  // join(Y, link)
    HomologyProfile profile;
    std::string matching_source;  // copied from the assignment entry
};

struct Decomposition {
    std::vector<Summand> summands;  // one per poset element, in canonical id order
    HomologyProfile total;          // wedge of the summand profiles
    HypothesisReport hypothesis;
    bool forced = false;  // built although the hypothesis failed
};

struct VerifyOutcome {
    bool match = false;
    HomologyProfile direct;  // reduced homology of the ambient complex
    HomologyProfile total;   // the decomposition total
};

// Automatic matchings: cone matching on the least apex where one exists,
// greedy matching otherwise. Every element gets an entry, the empty complex
// an empty one.
MorseAssignment auto_assignment(const IntersectionPoset& poset);

// The dimension hypothesis: for every comparable pair of spaces Y properly
// containing Z, every non-initial critical dimension on Y must exceed every
// one on Z. Pairs where either side has no non-initial critical cells hold
// vacuously. Throws MissingAssignment if an element has no entry.
HypothesisReport check_hypothesis(const IntersectionPoset& poset, const MorseAssignment& assignment);

// Builds the full wedge-of-joins decomposition over the intersection poset.
// Refuses (HypothesisViolation) when the hypothesis fails, unless force is
// set, in which case the result is marked `forced`.
Decomposition decompose(const Cover& cover, const IntersectionPoset& poset,
                        const MorseAssignment& assignment, bool force = false);
Decomposition decompose(const Cover& cover, const MorseAssignment& assignment, bool force = false);
Decomposition decompose_auto(const Cover& cover, bool force = false);

// Compares the decomposition total against directly computed reduced homology
// of the ambient complex. A mismatch is an outcome, not an error.
VerifyOutcome verify(const Cover& cover, const Decomposition& decomposition);

}  // namespace nervemorse
