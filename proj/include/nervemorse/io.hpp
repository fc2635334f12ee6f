#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "nervemorse/gluing.hpp"
#include "nervemorse/morse.hpp"
#include "nervemorse/poset.hpp"

namespace nervemorse {

using Json = nlohmann::ordered_json;

// --- .cx complex files -------------------------------------------------------
// One facet per line, whitespace-separated vertex tokens. Lines starting with
// '#' and blank lines are ignored. Zero facet lines denote the empty complex.

SimplicialComplex parse_cx(std::istream& in, const std::string& origin);
SimplicialComplex read_cx(const std::filesystem::path& path);
std::string render_cx(const SimplicialComplex& k);
void write_cx(const std::filesystem::path& path, const SimplicialComplex& k);

// --- cover files (JSON) ------------------------------------------------------
// { "ambient": "<path.cx>", "members": [ {"name": "X1", "facets": [[v,...],...]}
//   | {"name": "X2", "induced_on": [v,...]} , ... ] }
// A relative ambient path is resolved against the cover file's directory.

Cover read_cover_file(const std::filesystem::path& path);

// --- matchings files (JSON) --------------------------------------------------
// { "<poset-element-id>": { "pairs": [ [[cell...],[coface...]], ... ],
//                           "initial": [v] (optional) }, ... }

struct MatchingSpec {
    std::vector<VertexSetPair> pairs;
    std::optional<std::vector<Vertex>> initial;
};

std::map<std::string, MatchingSpec> read_matchings_file(const std::filesystem::path& path);
// A single { "pairs": ..., "initial": ... } object (check-matching input).
MatchingSpec read_matching_file(const std::filesystem::path& path);

MatchingSpec matching_spec_of(const MorseMatching& m,
                              const std::optional<std::vector<Vertex>>& initial = std::nullopt);

// --- JSON rendering ----------------------------------------------------------
// All emitters use ordered objects and canonical orders so that repeated runs
// produce byte-identical output.

Json profile_json(const HomologyProfile& p);
Json matchings_json(const std::vector<std::pair<std::string, MatchingSpec>>& specs);
Json morse_data_json(const MorseData& data);
Json hypothesis_json(const HypothesisReport& r);
Json poset_json(const IntersectionPoset& poset);
Json report_json(const IntersectionPoset& poset, const Decomposition& d, const VerifyOutcome& v);
// Partial report emitted when decompose refuses on a failed hypothesis.
Json hypothesis_failure_json(const IntersectionPoset& poset, const HypothesisReport& r);

std::string dump_json(const Json& j);  // 2-space indent, trailing newline

void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace nervemorse
