#include "nervemorse/gluing.hpp"

#include <algorithm>

namespace nervemorse {

MorseAssignment auto_assignment(const IntersectionPoset& poset) {
    MorseAssignment assignment;
    for (const PosetElement& el : poset.elements()) {
        MorseEntry entry;
        if (el.space.empty()) {
            entry.source = "greedy";
        } else {
            std::vector<Vertex> apexes = cone_apexes(el.space);
            if (!apexes.empty()) {
                entry.matching = cone_matching(el.space, apexes.front());
                entry.source = "cone";
            } else {
                entry.matching = greedy_matching(el.space);
                entry.source = "greedy";
            }
        }
        entry.data = validate_matching(el.space, entry.matching);
        assignment.per_element.emplace(el.id, std::move(entry));
    }
    return assignment;
}

namespace {

const MorseEntry& entry_for(const MorseAssignment& assignment, const PosetElement& el) {
    auto it = assignment.per_element.find(el.id);
    if (it == assignment.per_element.end()) throw MissingAssignment({el.id});
    return it->second;
}

}  // namespace

HypothesisReport check_hypothesis(const IntersectionPoset& poset, const MorseAssignment& assignment) {
    std::vector<std::string> missing;
    for (const PosetElement& el : poset.elements())
        if (!assignment.per_element.count(el.id)) missing.push_back(el.id);
    if (!missing.empty()) throw MissingAssignment(std::move(missing));

    HypothesisReport report;
    for (std::size_t y = 0; y < poset.size(); ++y) {
        const MorseData& ydata = assignment.per_element.at(poset.element(y).id).data;
        if (ydata.non_initial_dims.empty()) continue;
        for (std::size_t z = 0; z < poset.size(); ++z) {
            // y < z in the poset means space(y) properly contains space(z)
            if (!poset.less(y, z)) continue;
            const MorseData& zdata = assignment.per_element.at(poset.element(z).id).data;
            if (zdata.non_initial_dims.empty()) continue;
            if (ydata.min_non_initial_dim() <= zdata.max_non_initial_dim()) {
                report.violations.push_back({poset.element(y).id, poset.element(z).id,
                                             ydata.min_non_initial_dim(),
                                             zdata.max_non_initial_dim()});
            }
        }
    }
    report.ok = report.violations.empty();
    return report;
}

Decomposition decompose(const Cover& cover, const IntersectionPoset& poset,
                        const MorseAssignment& assignment, bool force) {
    (void)cover;
    for (const PosetElement& el : poset.elements()) {
        const MorseEntry& entry = entry_for(assignment, el);
        // entries are revalidated against their spaces so a stale assignment
        // cannot slip through
        validate_matching(el.space, entry.matching,
                          entry.data.initial ? std::optional<Face>(*entry.data.initial)
                                             : std::nullopt);
    }

    Decomposition decomposition;
    decomposition.hypothesis = check_hypothesis(poset, assignment);
    if (!decomposition.hypothesis.ok) {
        if (!force) throw HypothesisViolation(decomposition.hypothesis);
        decomposition.forced = true;
    }

    std::vector<HomologyProfile> profiles;
    profiles.reserve(poset.size());
    for (std::size_t i = 0; i < poset.size(); ++i) {
        Summand s;
        s.id = poset.element(i).id;
        s.space = poset.element(i).space;
        s.link = order_complex(poset.down_set_poset(i));
        s.joined = join(s.space, s.link);
        s.profile = reduced_homology(s.joined);
        s.matching_source = assignment.per_element.at(s.id).source;
        profiles.push_back(s.profile);
        decomposition.summands.push_back(std::move(s));
    }
    decomposition.total = wedge_profile(profiles);
    return decomposition;
}

Decomposition decompose(const Cover& cover, const MorseAssignment& assignment, bool force) {
    return decompose(cover, IntersectionPoset(cover), assignment, force);
}

Decomposition decompose_auto(const Cover& cover, bool force) {
    IntersectionPoset poset(cover);
    return decompose(cover, poset, auto_assignment(poset), force);
}

VerifyOutcome verify(const Cover& cover, const Decomposition& decomposition) {
    VerifyOutcome outcome;
    outcome.direct = reduced_homology(cover.ambient());
    outcome.total = decomposition.total;
    outcome.match = outcome.direct == outcome.total;
    return outcome;
}

}  // namespace nervemorse
