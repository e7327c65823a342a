#include "coorth/cli_app.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "coorth/json_io.hpp"
#include "coorth/selection.hpp"
#include "coorth/worked_example.hpp"

namespace coorth {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

Json vertex_json(const PolyhedralNormSpace& space, std::size_t idx) {
    return vec_json(space.dual_vertices()[idx]);
}

Json face_json(const PolyhedralNormSpace& space, const SupportFace& face) {
    Json out;
    out["norm"] = rat_json(face.norm_value);
    Json verts = Json::array();
    for (std::size_t idx : face.vertex_indices) verts.push_back(vertex_json(space, idx));
    out["vertices"] = std::move(verts);
    return out;
}

Json coverage_json(const Subspace& y, const std::vector<CoverageEntry>& coverage) {
    Json out = Json::array();
    for (const CoverageEntry& entry : coverage) {
        Json e;
        e["vertex"] = vertex_json(y.ambient(), entry.vertex);
        e["covered"] = entry.covered;
        e["witness"] = entry.witness ? vec_json(*entry.witness) : Json(nullptr);
        e["witness_coeffs"] =
            entry.witness_coeffs ? vec_json(*entry.witness_coeffs) : Json(nullptr);
        e["margin"] = rat_json(entry.margin);
        Json blocking = Json::array();
        for (std::size_t b : entry.blocking) blocking.push_back(vertex_json(y.ambient(), b));
        e["blocking"] = std::move(blocking);
        out.push_back(std::move(e));
    }
    return out;
}

struct CommandOutcome {
    Json doc;
    int exit_code = kExitOk;
};

CommandOutcome cmd_orthogonal(const QueryDocument& q, bool approximate) {
    const PolyhedralNormSpace& space = *q.space;
    const Orthogonality result = approximate
                                     ? eps_orthogonal(space, *q.x, *q.y, *q.eps)
                                     : bj_orthogonal(space, *q.x, *q.y);
    Json doc;
    doc["command"] = approximate ? "eps-orthogonal" : "orthogonal";
    doc["space"] = emit_space(space);
    doc["x"] = vec_json(*q.x);
    doc["y"] = vec_json(*q.y);
    if (approximate) doc["eps"] = rat_json(*q.eps);
    doc["orthogonal"] = result.orthogonal;
    // y = 0 is trivially orthogonal; the emitted certificate is null then.
    const bool trivial = is_zero_vec(*q.y);
    doc["certificate"] =
        result.certificate && !trivial ? vec_json(*result.certificate) : Json(nullptr);
    doc["support_face"] = face_json(space, result.face);
    return {std::move(doc), kExitOk};
}

CommandOutcome cmd_coapprox(const QueryDocument& q) {
    const Subspace& y = *q.subspace;
    const CoapproxResult result = best_coapproximation(y, *q.x, q.limits);
    Json doc;
    doc["command"] = "coapprox";
    doc["space"] = emit_space(y.ambient());
    doc["basis"] = mat_json(y.basis());
    doc["x"] = vec_json(*q.x);
    doc["found"] = result.status == CoapproxResult::Status::Solution;
    if (result.solution) {
        const CoapproxSolution& sol = *result.solution;
        doc["point"] = vec_json(sol.point);
        doc["coeffs"] = vec_json(sol.coeffs);
        Json certs = Json::array();
        for (std::size_t i = 0; i < sol.certificates.size(); ++i) {
            Json c;
            c["facet"] = i;
            c["f_minus"] = vec_json(sol.certificates[i].first);
            c["f_plus"] = vec_json(sol.certificates[i].second);
            certs.push_back(std::move(c));
        }
        doc["certificates"] = std::move(certs);
    } else {
        doc["point"] = nullptr;
    }
    doc["unique"] = result.unique ? Json(*result.unique) : Json(nullptr);
    doc["coeff_min"] = result.coeff_min ? vec_json(*result.coeff_min) : Json(nullptr);
    doc["coeff_max"] = result.coeff_max ? vec_json(*result.coeff_max) : Json(nullptr);
    doc["patterns_examined"] = result.patterns_examined;
    doc["pattern_total"] = result.pattern_total;
    const bool capacity = result.status == CoapproxResult::Status::CapacityExceeded;
    if (capacity) doc["capacity_exceeded"] = true;
    return {std::move(doc), capacity ? kExitCapacity : kExitOk};
}

Json direction_json(const Subspace& y, const DirectionSearch& search) {
    Json doc;
    switch (search.status) {
        case DirectionSearch::Status::DirectionFound: {
            doc["anti"] = false;
            doc["direction"] = vec_json(*search.direction);
            Json image = Json::array();
            for (const RatVec& f : search.selection_image) image.push_back(vec_json(f));
            doc["selection_image"] = std::move(image);
            break;
        }
        case DirectionSearch::Status::NoneExists:
            doc["anti"] = true;
            doc["direction"] = nullptr;
            break;
        case DirectionSearch::Status::CapacityExceeded:
            doc["anti"] = nullptr;
            doc["direction"] = nullptr;
            doc["capacity_exceeded"] = true;
            break;
    }
    doc["patterns_examined"] = search.patterns_examined;
    doc["pattern_total"] = search.pattern_total;
    (void)y;
    return doc;
}

Json strong_json(const Subspace& y, const StrongReport& report) {
    Json doc;
    doc["strong"] = report.verdict;
    doc["eps_min"] = rat_json(report.eps_min);
    doc["eps_min_exact"] = report.eps_min_exact;
    doc["eps_direction"] =
        report.eps_direction ? vec_json(*report.eps_direction) : Json(nullptr);
    doc["coverage"] = coverage_json(y, report.coverage);
    return doc;
}

CommandOutcome cmd_check(const QueryDocument& q, const std::string& mode) {
    const Subspace& y = *q.subspace;
    Json doc;
    doc["command"] = "check";
    doc["mode"] = mode;
    doc["space"] = emit_space(y.ambient());
    doc["basis"] = mat_json(y.basis());
    doc["dim"] = y.dim();
    int exit_code = kExitOk;

    if (mode == "anti") {
        const DirectionSearch search = find_orthogonal_direction(y, q.limits);
        doc.update(direction_json(y, search));
        if (search.status == DirectionSearch::Status::CapacityExceeded) exit_code = kExitCapacity;
    } else if (mode == "strong") {
        const StrongReport report = strong_report(y, q.limits);
        doc["strong"] = report.verdict;
        const DirectionSearch search = find_orthogonal_direction(y, q.limits);
        doc.update(direction_json(y, search));
        doc.update(strong_json(y, report));
        if (search.status == DirectionSearch::Status::CapacityExceeded) exit_code = kExitCapacity;
    } else if (mode == "selection") {
        const SelectionReport report = selection_report(y);
        Json sel;
        Json forced = Json::array();
        for (std::size_t idx : report.forced_vertices)
            forced.push_back(vertex_json(y.ambient(), idx));
        sel["forced_vertices"] = std::move(forced);
        sel["facet_pairs"] = report.facet_pairs;
        sel["extension_unique"] = report.extension_unique;
        sel["minimal_exists"] = report.minimal_exists;
        sel["minimal_image_size"] =
            report.minimal_image_size ? Json(*report.minimal_image_size) : Json(nullptr);
        Json image = Json::array();
        for (std::size_t idx : report.chosen_image)
            image.push_back(vertex_json(y.ambient(), idx));
        sel["chosen_image"] = std::move(image);
        doc["selection"] = std::move(sel);
    } else {  // embed
        const EmbeddingReport report = embed_linf(y);
        const ConsistencyRecord record = check_embedding_consistency(y);
        Json emb;
        emb["r"] = y.facets().pair_count();
        emb["facet_count"] = report.facet_count;
        emb["isometric_linf_n"] = report.isometric_linf_n;
        emb["zeta"] = mat_json(report.zeta);
        doc["embed"] = std::move(emb);
        Json cons;
        cons["facet_count_ok"] = record.facet_count_ok;
        cons["lower_embedding_bound_ok"] = record.lower_embedding_bound_ok;
        cons["isometry_ok"] = record.isometry_ok;
        cons["isometry_samples"] = record.samples;
        cons["seed"] = record.seed;
        cons["coproximinal_chain_applicable"] = record.coproximinal_chain_applicable;
        cons["coproximinal_chain_ok"] = record.coproximinal_chain_applicable ? Json(record.coproximinal_chain_ok) : Json(nullptr);
        doc["consistency"] = std::move(cons);
    }
    return {std::move(doc), exit_code};
}

CommandOutcome cmd_probe(const QueryDocument& q) {
    const Subspace& y = *q.subspace;
    const CoproximinalReport report =
        coproximinal_probe(y, q.sample_count, q.seed, q.limits);
    Json doc;
    doc["command"] = "probe";
    doc["mode"] = "coproximinal";
    doc["space"] = emit_space(y.ambient());
    doc["basis"] = mat_json(y.basis());
    doc["seed"] = report.seed;
    doc["samples_requested"] = report.samples_requested;
    doc["samples_solved"] = report.samples_solved;
    switch (report.outcome) {
        case CoproximinalReport::Outcome::Certified:
            doc["outcome"] = "certified";
            doc["summary"] = "coproximinal (certified)";
            break;
        case CoproximinalReport::Outcome::Counterexample:
            doc["outcome"] = "counterexample";
            doc["summary"] = "not coproximinal (counterexample)";
            break;
        case CoproximinalReport::Outcome::Undecided:
            doc["outcome"] = "undecided";
            doc["summary"] = "no counterexample among " +
                             std::to_string(report.samples_requested) + " samples";
            break;
    }
    if (report.certified_choice) {
        Json choice = Json::array();
        for (std::size_t idx : *report.certified_choice)
            choice.push_back(vertex_json(y.ambient(), idx));
        doc["certified_choice"] = std::move(choice);
    } else {
        doc["certified_choice"] = nullptr;
    }
    doc["counterexample"] =
        report.counterexample ? vec_json(*report.counterexample) : Json(nullptr);
    doc["co_chebyshev_all_unique"] = report.co_chebyshev_all_unique;
    doc["sufficient_test_completed"] = report.sufficient_test_completed;
    return {std::move(doc), kExitOk};
}

CommandOutcome cmd_paper_example(const QueryDocument& q) {
    const Subspace y = worked_example_subspace();
    const RatMat pairs = worked_example_pairs();

    Json doc;
    doc["command"] = "paper-example";
    doc["space"] = emit_space(y.ambient());
    doc["spanning_pairs"] = mat_json(pairs);
    doc["basis"] = mat_json(y.basis());
    doc["dim"] = y.dim();

    const StrongReport report = strong_report(y, q.limits);
    const DirectionSearch search = find_orthogonal_direction(y, q.limits);
    doc["strong"] = report.verdict;
    doc["anti"] = search.status == DirectionSearch::Status::NoneExists;
    doc["eps_min"] = rat_json(report.eps_min);
    doc["eps_min_exact"] = report.eps_min_exact;
    std::size_t covered = 0;
    for (const CoverageEntry& entry : report.coverage) covered += entry.covered ? 1 : 0;
    doc["covered_vertices"] = covered;
    doc["vertex_count"] = report.coverage.size();
    doc["coverage"] = coverage_json(y, report.coverage);

    // Per-pair dominance and smoothness: each spanning pair attains its
    // norm in exactly one block and its support face there is a single
    // dual vertex, which is what makes it a coverage witness.
    Json checks = Json::array();
    const PolyhedralNormSpace& sum = y.ambient();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        Json c;
        c["pair"] = i + 1;
        RatVec u(pairs[i].begin(), pairs[i].begin() + 3);
        RatVec v(pairs[i].begin() + 3, pairs[i].end());
        const Rat nu = norm(sum.block_space(0), u);
        const Rat nv = norm(sum.block_space(1), v);
        c["block_norms"] = Json::array({rat_json(nu), rat_json(nv)});
        c["dominant_block"] = nu > nv ? 0 : 1;
        c["dominance_strict"] = nu != nv;
        const SupportFace face = support_face(sum, pairs[i]);
        c["support_face_singleton"] = face.vertex_indices.size() == 1;
        c["support_vertex"] = face.vertex_indices.size() == 1
                                  ? vertex_json(sum, face.vertex_indices[0])
                                  : Json(nullptr);
        checks.push_back(std::move(c));
    }
    doc["pair_checks"] = std::move(checks);
    return {std::move(doc), kExitOk};
}

SearchLimits limits_from_env() {
    SearchLimits limits;
    if (const char* text = std::getenv("COORTH_MAX_PATTERNS")) {
        char* end = nullptr;
        const unsigned long long value = std::strtoull(text, &end, 10);
        if (end == text || *end != '\0' || value == 0)
            throw InputError("COORTH_MAX_PATTERNS: expected a positive integer");
        limits.max_patterns = value;
    }
    return limits;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    CLI::App app{"exact decision procedures for best coapproximation in polyhedral normed spaces"};
    app.require_subcommand(1);
    bool compact = false;
    app.add_flag("--json", compact, "compact single-line JSON output");

    std::string space_file, subspace_file, x_text, y_text, eps_text, mode, target;
    std::uint64_t seed = 1;
    std::size_t samples = 20;

    CLI::App* orth = app.add_subcommand("orthogonal", "decide x |_B y");
    orth->add_option("--space", space_file, "space document")->required();
    orth->add_option("-x", x_text, "base vector (comma-separated rationals)")->required();
    orth->add_option("-y", y_text, "direction vector")->required();

    CLI::App* eps_orth = app.add_subcommand("eps-orthogonal", "decide x |_B^eps y");
    eps_orth->add_option("--space", space_file)->required();
    eps_orth->add_option("-x", x_text)->required();
    eps_orth->add_option("-y", y_text)->required();
    eps_orth->add_option("--eps", eps_text, "epsilon in [0,1)")->required();

    CLI::App* coapprox = app.add_subcommand("coapprox", "best coapproximation to x out of Y");
    coapprox->add_option("--subspace", subspace_file)->required();
    coapprox->add_option("--space", space_file);
    coapprox->add_option("-x", x_text)->required();

    CLI::App* check = app.add_subcommand("check", "subspace decision procedures");
    check->add_option("mode", mode, "anti | strong | selection | embed")
        ->required()
        ->check(CLI::IsMember({"anti", "strong", "selection", "embed"}));
    check->add_option("--subspace", subspace_file)->required();
    check->add_option("--space", space_file);

    CLI::App* probe = app.add_subcommand("probe", "sampling probes");
    probe->add_option("target", target, "coproximinal")
        ->required()
        ->check(CLI::IsMember({"coproximinal"}));
    probe->add_option("--subspace", subspace_file)->required();
    probe->add_option("--space", space_file);
    probe->add_option("--samples", samples, "sample count");
    probe->add_option("--seed", seed, "RNG seed");

    app.add_subcommand("paper-example", "replay the bundled worked example");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    CommandOutcome outcome;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        QueryDocument q;
        q.limits = limits_from_env();
        q.seed = seed;
        q.sample_count = samples;
        if (!space_file.empty()) q.space = parse_space(load_json_file(space_file));
        if (!subspace_file.empty())
            q.subspace = parse_subspace(load_json_file(subspace_file), q.space);
        if (!x_text.empty()) q.x = parse_vector_arg(x_text);
        if (!y_text.empty()) q.y = parse_vector_arg(y_text);
        if (!eps_text.empty()) q.eps = parse_rat(eps_text);

        if (orth->parsed()) {
            q.command = "orthogonal";
            outcome = cmd_orthogonal(q, false);
        } else if (eps_orth->parsed()) {
            q.command = "eps-orthogonal";
            outcome = cmd_orthogonal(q, true);
        } else if (coapprox->parsed()) {
            q.command = "coapprox";
            outcome = cmd_coapprox(q);
        } else if (check->parsed()) {
            q.command = "check";
            outcome = cmd_check(q, mode);
        } else if (probe->parsed()) {
            q.command = "probe";
            outcome = cmd_probe(q);
        } else {
            q.command = "paper-example";
            outcome = cmd_paper_example(q);
        }
    } catch (const CLI::ParseError& e) {
        Json err;
        err["error"] = e.what();
        return {kExitInput, err.dump(2) + "\n"};
    } catch (const InputError& e) {
        Json err;
        err["error"] = e.what();
        return {kExitInput, err.dump(2) + "\n"};
    } catch (const CapacityError& e) {
        Json err;
        err["error"] = e.what();
        return {kExitCapacity, err.dump(2) + "\n"};
    } catch (const std::exception& e) {
        Json err;
        err["error"] = std::string("internal error: ") + e.what();
        return {1, err.dump(2) + "\n"};
    }
    return {outcome.exit_code, compact ? outcome.doc.dump() + "\n" : outcome.doc.dump(2) + "\n"};
}

}  // namespace coorth
