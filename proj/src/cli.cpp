#include "nervemorse/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <utility>

#include "CLI11.hpp"
#include "nervemorse/generators.hpp"
#include "nervemorse/io.hpp"

namespace nervemorse {

namespace fs = std::filesystem;

namespace {

int cmd_homology(const std::string& path, std::ostream& out) {
    out << dump_json(profile_json(reduced_homology(read_cx(path))));
    return 0;
}

int cmd_decompose(const std::string& cover_path, const std::string& matchings_path,
                  bool auto_matchings, bool force, const std::string& report_path,
                  std::ostream& out, std::ostream& err) {
    Cover cover = read_cover_file(cover_path);
    IntersectionPoset poset(cover);

    MorseAssignment assignment;
    if (auto_matchings) assignment = auto_assignment(poset);
    if (!matchings_path.empty()) {
        for (const auto& [id, spec] : read_matchings_file(matchings_path)) {
            auto idx = poset.index_of(id);
            if (!idx) throw UnknownPosetElement(id);
            auto [matching, data] =
                matching_from_spec(poset.element(*idx).space, spec.pairs, spec.initial);
            assignment.per_element[id] = MorseEntry{std::move(matching), std::move(data), "user"};
        }
    }

    std::string text;
    int code = 0;
    try {
        Decomposition d = decompose(cover, poset, assignment, force);
        VerifyOutcome v = verify(cover, d);
        text = dump_json(report_json(poset, d, v));
        if (!v.match) {
            err << "decomposition total does not match directly computed homology\n";
            code = 4;
        }
    } catch (const HypothesisViolation& e) {
        text = dump_json(hypothesis_failure_json(poset, e.report));
        err << e.what() << "\n";
        code = 3;
    }
    out << text;
    if (!report_path.empty()) write_text_file(report_path, text);
    return code;
}

int cmd_check_matching(const std::string& complex_path, const std::string& matching_path,
                       std::ostream& out, std::ostream& err) {
    SimplicialComplex k = read_cx(complex_path);
    MatchingSpec spec = read_matching_file(matching_path);
    Json j;
    int code = 0;
    try {
        auto [matching, data] = matching_from_spec(k, spec.pairs, spec.initial);
        (void)matching;
        j = morse_data_json(data);
    } catch (const NotAFace& e) {
        j = Json{{"valid", false}, {"error", "NotAFace"}, {"face", e.face}};
        err << e.what() << "\n";
        code = 5;
    } catch (const NotCodimensionOne& e) {
        j = Json{{"valid", false}, {"error", "NotCodimensionOne"}, {"cell", e.cell}, {"coface", e.coface}};
        err << e.what() << "\n";
        code = 5;
    } catch (const DoublyMatched& e) {
        j = Json{{"valid", false}, {"error", "DoublyMatched"}, {"cell", e.cell}};
        err << e.what() << "\n";
        code = 5;
    } catch (const CyclicMatching& e) {
        j = Json{{"valid", false}, {"error", "CyclicMatching"}, {"witness", e.witness}};
        err << e.what() << "\n";
        code = 5;
    } catch (const BadInitial& e) {
        j = Json{{"valid", false}, {"error", "BadInitial"}, {"face", e.face}};
        err << e.what() << "\n";
        code = 5;
    }
    out << dump_json(j);
    return code;
}

int cmd_chessboard(int m, int n, bool with_cover, const std::string& dir, std::ostream& out,
                   std::ostream& err) {
    if (m < 0 || n < 0) {
        err << "board sides must be nonnegative\n";
        return 2;
    }
    if (with_cover && (m != n || m < 2)) {
        err << "--cover needs a square board with side at least 2\n";
        return 2;
    }
    fs::path directory(dir.empty() ? "." : dir);
    fs::create_directories(directory);
    const std::string base = "chessboard_" + std::to_string(m) + "x" + std::to_string(n);
    const fs::path cx_path = directory / (base + ".cx");
    write_cx(cx_path, chessboard(m, n));
    Json result{{"complex", cx_path.string()}};
    if (with_cover) {
        Json members = Json::array();
        for (int i = 1; i <= m; ++i) {
            std::vector<Vertex> verts;
            verts.push_back("r" + std::to_string(i) + "c1");
            for (int r = 1; r <= m; ++r) {
                if (r == i) continue;
                for (int c = 2; c <= n; ++c)
                    verts.push_back("r" + std::to_string(r) + "c" + std::to_string(c));
            }
            std::sort(verts.begin(), verts.end());
            members.push_back(Json{{"name", "X" + std::to_string(i)}, {"induced_on", verts}});
        }
        Json cover{{"ambient", base + ".cx"}, {"members", members}};
        const fs::path cover_path = directory / (base + "_cover.json");
        write_text_file(cover_path, dump_json(cover));
        result["cover"] = cover_path.string();
    }
    out << dump_json(result);
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"wedge decompositions of covered simplicial complexes via discrete Morse matchings"};
    app.require_subcommand(1);

    std::string hom_path;
    auto* hom = app.add_subcommand("homology", "print exact reduced integer homology of a complex");
    hom->add_option("complex", hom_path, "path to a .cx complex file")->required();

    std::string cover_path, matchings_path, report_path;
    bool auto_matchings = false, force = false;
    auto* dec = app.add_subcommand(
        "decompose", "decompose a covered complex and verify the total against direct homology");
    dec->add_option("cover", cover_path, "path to a cover JSON file")->required();
    dec->add_option("matchings", matchings_path, "path to a matchings JSON file");
    dec->add_flag("--auto-matchings", auto_matchings,
                  "construct matchings automatically for elements the matchings file omits");
    dec->add_flag("--force", force, "build the decomposition even if the hypothesis fails");
    dec->add_option("--out", report_path, "also write the report JSON to this file");

    std::string cm_complex, cm_matching;
    auto* chk = app.add_subcommand("check-matching",
                                   "validate a Morse matching and print its critical census");
    chk->add_option("complex", cm_complex, "path to a .cx complex file")->required();
    chk->add_option("matching", cm_matching, "path to a single-matching JSON file")->required();

    int m = 0, n = 0;
    bool with_cover = false;
    std::string dir = ".";
    auto* board = app.add_subcommand(
        "chessboard", "write a chessboard complex (optionally with its star cover) to files");
    board->add_option("m", m, "number of rows")->required();
    board->add_option("n", n, "number of columns")->required();
    board->add_flag("--cover", with_cover, "also write the star cover JSON (square boards only)");
    board->add_option("--dir", dir, "output directory (default: current)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (app.got_subcommand(hom)) return cmd_homology(hom_path, out);
        if (app.got_subcommand(dec)) {
            if (matchings_path.empty() && !auto_matchings) {
                err << "decompose needs a matchings file or --auto-matchings\n";
                return 2;
            }
            return cmd_decompose(cover_path, matchings_path, auto_matchings, force, report_path,
                                 out, err);
        }
        if (app.got_subcommand(chk)) return cmd_check_matching(cm_complex, cm_matching, out, err);
        if (app.got_subcommand(board)) return cmd_chessboard(m, n, with_cover, dir, out, err);
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace nervemorse
