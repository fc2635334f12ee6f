#include "nervemorse/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace nervemorse {

namespace fs = std::filesystem;
using PlainJson = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& message) {
    throw ParseError(origin, 0, message);
}

PlainJson load_json(const fs::path& path) {
    std::ifstream in(path);
    if (!in) fail(path.string(), "cannot open file");
    try {
        return PlainJson::parse(in);
    } catch (const PlainJson::exception& e) {
        fail(path.string(), e.what());
    }
}

std::vector<Vertex> vertex_list(const PlainJson& j, const std::string& origin, const char* what) {
    if (!j.is_array()) fail(origin, std::string(what) + " must be an array of vertex tokens");
    std::vector<Vertex> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_string()) fail(origin, std::string(what) + " entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

MatchingSpec parse_matching_object(const PlainJson& j, const std::string& origin,
                                   const std::string& label) {
    if (!j.is_object()) fail(origin, "matching for " + label + " must be a JSON object");
    for (const auto& item : j.items())
        if (item.key() != "pairs" && item.key() != "initial")
            fail(origin, "unknown key \"" + item.key() + "\" in matching for " + label);
    if (!j.contains("pairs") || !j.at("pairs").is_array())
        fail(origin, "matching for " + label + " needs a \"pairs\" array");
    MatchingSpec spec;
    for (const auto& p : j.at("pairs")) {
        if (!p.is_array() || p.size() != 2)
            fail(origin, "each pair for " + label + " must be a [cell, coface] array");
        spec.pairs.push_back({vertex_list(p[0], origin, "cell"), vertex_list(p[1], origin, "coface")});
    }
    if (j.contains("initial")) spec.initial = vertex_list(j.at("initial"), origin, "initial");
    return spec;
}

}  // namespace

SimplicialComplex parse_cx(std::istream& in, const std::string& origin) {
    std::vector<std::vector<Vertex>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.front() == '#') continue;
        std::istringstream tokens(line);
        std::vector<Vertex> facet;
        Vertex token;
        while (tokens >> token) {
            if (!valid_vertex_token(token))
                throw ParseError(origin, lineno, "malformed vertex token \"" + token + "\"");
            facet.push_back(token);
        }
        if (facet.empty()) continue;
        std::sort(facet.begin(), facet.end());
        if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
            throw ParseError(origin, lineno, "repeated vertex in facet");
        facets.push_back(std::move(facet));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex read_cx(const fs::path& path) {
    std::ifstream in(path);
    if (!in) fail(path.string(), "cannot open file");
    return parse_cx(in, path.string());
}

std::string render_cx(const SimplicialComplex& k) {
    std::string out;
    for (const Face& f : k.facets()) {
        for (std::size_t i = 0; i < f.vertices().size(); ++i) {
            if (i) out += ' ';
            out += f.vertices()[i];
        }
        out += '\n';
    }
    return out;
}

void write_cx(const fs::path& path, const SimplicialComplex& k) {
    write_text_file(path, render_cx(k));
}

Cover read_cover_file(const fs::path& path) {
    const std::string origin = path.string();
    PlainJson doc = load_json(path);
    if (!doc.is_object()) fail(origin, "cover file must be a JSON object");
    for (const auto& item : doc.items())
        if (item.key() != "ambient" && item.key() != "members")
            fail(origin, "unknown key \"" + item.key() + "\" in cover file");
    if (!doc.contains("ambient") || !doc.at("ambient").is_string())
        fail(origin, "cover file needs an \"ambient\" path string");
    if (!doc.contains("members") || !doc.at("members").is_array())
        fail(origin, "cover file needs a \"members\" array");

    fs::path ambient_path(doc.at("ambient").get<std::string>());
    if (ambient_path.is_relative()) ambient_path = path.parent_path() / ambient_path;
    SimplicialComplex ambient = read_cx(ambient_path);

    std::vector<CoverMember> members;
    std::set<std::string> names;
    for (const auto& mj : doc.at("members")) {
        if (!mj.is_object()) fail(origin, "each member must be a JSON object");
        for (const auto& item : mj.items())
            if (item.key() != "name" && item.key() != "facets" && item.key() != "induced_on")
                fail(origin, "unknown key \"" + item.key() + "\" in cover member");
        if (!mj.contains("name") || !mj.at("name").is_string() ||
            mj.at("name").get<std::string>().empty())
            fail(origin, "each cover member needs a nonempty \"name\" string");
        std::string name = mj.at("name").get<std::string>();
        if (!names.insert(name).second) fail(origin, "duplicate member name \"" + name + "\"");
        const bool has_facets = mj.contains("facets");
        const bool has_induced = mj.contains("induced_on");
        if (has_facets == has_induced)
            fail(origin, "member \"" + name + "\" needs exactly one of \"facets\" or \"induced_on\"");
        SimplicialComplex space;
        try {
            if (has_facets) {
                if (!mj.at("facets").is_array()) fail(origin, "\"facets\" must be an array");
                std::vector<std::vector<Vertex>> facet_list;
                for (const auto& f : mj.at("facets"))
                    facet_list.push_back(vertex_list(f, origin, "facet"));
                space = SimplicialComplex::from_facets(facet_list);
            } else {
                space = induced(ambient, vertex_list(mj.at("induced_on"), origin, "induced_on"));
            }
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            fail(origin, "member \"" + name + "\": " + e.what());
        }
        members.push_back({std::move(name), std::move(space)});
    }
    return Cover(std::move(ambient), std::move(members));
}

std::map<std::string, MatchingSpec> read_matchings_file(const fs::path& path) {
    const std::string origin = path.string();
    PlainJson doc = load_json(path);
    if (!doc.is_object()) fail(origin, "matchings file must be a JSON object keyed by element id");
    std::map<std::string, MatchingSpec> out;
    for (const auto& item : doc.items())
        out.emplace(item.key(), parse_matching_object(item.value(), origin, item.key()));
    return out;
}

MatchingSpec read_matching_file(const fs::path& path) {
    return parse_matching_object(load_json(path), path.string(), "the complex");
}

MatchingSpec matching_spec_of(const MorseMatching& m,
                              const std::optional<std::vector<Vertex>>& initial) {
    MatchingSpec spec;
    spec.pairs.reserve(m.pairs().size());
    for (const MorsePair& p : m.pairs()) spec.pairs.push_back({p.cell.vertices(), p.coface.vertices()});
    spec.initial = initial;
    return spec;
}

Json profile_json(const HomologyProfile& p) {
    Json betti = Json::object();
    for (const auto& [degree, count] : p.betti) betti[std::to_string(degree)] = count;
    Json torsion = Json::object();
    for (const auto& [degree, coefficients] : p.torsion) torsion[std::to_string(degree)] = coefficients;
    return Json{{"betti", betti}, {"torsion", torsion}};
}

Json matchings_json(const std::vector<std::pair<std::string, MatchingSpec>>& specs) {
    Json out = Json::object();
    for (const auto& [id, spec] : specs) {
        Json pairs = Json::array();
        for (const auto& [cell, coface] : spec.pairs) pairs.push_back(Json::array({cell, coface}));
        Json entry{{"pairs", pairs}};
        if (spec.initial) entry["initial"] = *spec.initial;
        out[id] = entry;
    }
    return out;
}

Json morse_data_json(const MorseData& data) {
    Json critical = Json::array();
    for (const Face& f : data.critical) critical.push_back(f.vertices());
    Json j{{"valid", true}, {"critical", critical}};
    j["initial"] = data.initial ? Json(data.initial->vertices()) : Json(nullptr);
    j["non_initial_dims"] = data.non_initial_dims;
    return j;
}

Json hypothesis_json(const HypothesisReport& r) {
    Json violations = Json::array();
    for (const DimensionViolation& v : r.violations)
        violations.push_back(Json{{"y", v.y_id}, {"z", v.z_id}, {"dim_y", v.dim_y}, {"dim_z", v.dim_z}});
    return Json{{"ok", r.ok}, {"violations", violations}};
}

Json poset_json(const IntersectionPoset& poset) {
    Json out = Json::array();
    for (const PosetElement& el : poset.elements()) {
        Json sets = Json::array();
        for (const auto& s : el.generating_index_sets) sets.push_back(s);
        out.push_back(Json{{"id", el.id},
                           {"generating_index_sets", sets},
                           {"face_counts", el.space.face_counts()}});
    }
    return out;
}

Json report_json(const IntersectionPoset& poset, const Decomposition& d, const VerifyOutcome& v) {
    Json summands = Json::array();
    for (const Summand& s : d.summands) {
        summands.push_back(Json{{"id", s.id},
                                {"y_faces", s.space.face_counts()},
                                {"link_faces", s.link.face_counts()},
                                {"join_profile", profile_json(s.profile)},
                                {"matching_source", s.matching_source}});
    }
    Json out{{"schema", 1},
             {"poset", poset_json(poset)},
             {"hypothesis", hypothesis_json(d.hypothesis)},
             {"summands", summands},
             {"total_profile", profile_json(d.total)},
             {"direct_profile", profile_json(v.direct)},
             {"verified", v.match}};
    if (d.forced) out["forced"] = true;
    return out;
}

Json hypothesis_failure_json(const IntersectionPoset& poset, const HypothesisReport& r) {
    return Json{{"schema", 1}, {"poset", poset_json(poset)}, {"hypothesis", hypothesis_json(r)}};
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path.string());
    out << text;
    if (!out) throw Error("write failed: " + path.string());
}

}  // namespace nervemorse
