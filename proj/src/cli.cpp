#include "latmeas/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "latmeas/enumerate.hpp"
#include "latmeas/errors.hpp"
#include "latmeas/hahn.hpp"
#include "latmeas/model_io.hpp"
#include "latmeas/report.hpp"
#include "latmeas/search.hpp"

namespace latmeas {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string mark(bool ok) { return ok ? "ok" : "FAIL"; }

void print_verdict_line(std::ostream& out, const std::string& label, const AxiomVerdict& v) {
    out << "  " << label << ": " << mark(v.ok);
    if (!v.ok && !v.note.empty()) out << "  [" << v.note << "]";
    out << "\n";
}

std::string name_list(const FiniteLattice& lat, const std::vector<int>& elements) {
    std::string out;
    for (size_t i = 0; i < elements.size(); ++i) {
        if (i) out += ", ";
        out += lat.name(elements[i]);
    }
    return out;
}

struct ValidateOutcome {
    json report;
    bool pass = false;
};

ValidateOutcome run_validation(const LoadedModel& model) {
    const FiniteLattice& lat = *model.lattice;

    ValidateOutcome outcome;
    const LatticeLawsReport laws = check_lattice_laws(lat);
    const AxiomVerdict distributive = check_distributive(lat);
    const AxiomVerdict frame = is_frame(lat);
    const AxiomReport axioms = check_axioms(*model.complement);
    const ProfileVerdict profile = require_working_profile(axioms);
    const AxiomVerdict closed = is_closed(lat, *model.complement, model.algebra->members());

    outcome.report["lattice_laws"] = lattice_laws_json(laws);
    outcome.report["distributive"] = verdict_json(distributive);
    outcome.report["frame"] = verdict_json(frame);
    outcome.report["complement_axioms"] = axiom_report_json(axioms);
    outcome.report["profile"] = json{{"accepted", profile.accepted}, {"l6_holds", profile.l6_holds}};
    outcome.report["sigma_closed"] = verdict_json(closed);

    bool pass = laws.all_ok() && distributive.ok && profile.accepted && closed.ok;
    if (model.measure) {
        const ClauseReport clauses = validate_signed_measure(*model.measure);
        outcome.report["measure_clauses"] = clause_report_json(clauses);
        pass = pass && clauses.all_pass();
    } else {
        outcome.report["measure_clauses"] = nullptr;
    }
    outcome.pass = pass;
    return outcome;
}

void print_validation_text(std::ostream& out, const LoadedModel& model, const ValidateOutcome& outcome) {
    const FiniteLattice& lat = *model.lattice;
    out << "lattice: " << lat.size() << " elements, bottom=" << lat.name(lat.bottom())
        << " top=" << lat.name(lat.top()) << "\n";
    const json& laws = outcome.report["lattice_laws"];
    auto line = [&](const char* label, const json& v) {
        out << "  " << label << ": " << mark(v["ok"].get<bool>());
        if (!v["ok"].get<bool>()) out << "  [" << v["note"].get<std::string>() << "]";
        out << "\n";
    };
    line("L1 commutativity", laws["l1_commutative"]);
    line("L2 associativity", laws["l2_associative"]);
    line("L3 absorption", laws["l3_absorption"]);
    line("bounds", laws["bounds"]);
    line("order consistency", laws["order_consistency"]);
    line("L4 distributivity", outcome.report["distributive"]);
    out << "  frame law: " << mark(outcome.report["frame"]["ok"].get<bool>()) << " ("
        << outcome.report["frame"]["note"].get<std::string>() << ")  [informational]\n";
    out << "complement axioms:\n";
    const json& ax = outcome.report["complement_axioms"];
    line("L5 excluded middle", ax["l5_excluded_middle"]);
    line("L6 non-contradiction (informational)", ax["l6_non_contradiction"]);
    line("L7 contrapositive", ax["l7_contrapositive"]);
    line("L8 double negation", ax["l8_double_negation"]);
    line("De Morgan, derived (informational)", ax["derived_de_morgan"]);
    const json& profile = outcome.report["profile"];
    out << "working profile (L5,L7,L8): " << (profile["accepted"].get<bool>() ? "accepted" : "REJECTED")
        << (profile["l6_holds"].get<bool>() ? "; L6 also holds" : "; L6 does not hold") << "\n";
    out << "sigma algebra: " << model.algebra->member_count() << " members, closed: "
        << mark(outcome.report["sigma_closed"]["ok"].get<bool>()) << "\n";
    if (!outcome.report["measure_clauses"].is_null()) {
        const json& mc = outcome.report["measure_clauses"];
        out << "measure clauses (signed):\n";
        line("(1) bottom zero", mc["bottom_zero"]);
        line("(2a) monotone on nonnegative pairs", mc["monotone"]);
        line("(2b) antitone on nonpositive pairs", mc["antitone"]);
        line("(3) modular", mc["modular"]);
        line("(4) chain continuity", mc["continuity"]);
    }
    out << "result: " << (outcome.pass ? "PASS" : "FAIL") << "\n";
}

int cmd_validate(const std::string& path, bool as_json, std::ostream& out) {
    const LoadedModel model = load_model(path);
    const ValidateOutcome outcome = run_validation(model);
    if (as_json) {
        json doc = outcome.report;
        doc["pass"] = outcome.pass;
        out << doc.dump(2) << "\n";
    } else {
        print_validation_text(out, model, outcome);
    }
    return outcome.pass ? kExitPass : kExitFail;
}

int cmd_sigma(const std::string& path, bool as_json, std::ostream& out) {
    const LoadedModel model = load_model(path);
    const FiniteLattice& lat = *model.lattice;
    const AxiomVerdict closed = is_closed(lat, *model.complement, model.algebra->members());
    if (as_json) {
        json doc;
        doc["members"] = json::array();
        for (int m : model.algebra->members()) {
            doc["members"].push_back(json{{"index", m}, {"name", lat.name(m)}});
        }
        doc["generators"] = model.algebra->generators();
        doc["closed"] = verdict_json(closed);
        out << doc.dump(2) << "\n";
    } else {
        out << "members (" << model.algebra->member_count() << "):\n";
        for (int m : model.algebra->members()) {
            out << "  " << m << "  " << lat.name(m) << "\n";
        }
        out << "generators: " << name_list(lat, model.algebra->generators()) << "\n";
        print_verdict_line(out, "closed", closed);
    }
    return closed.ok ? kExitPass : kExitFail;
}

int cmd_decompose(const std::string& path, bool as_json, std::ostream& out) {
    const LoadedModel model = load_model(path);
    if (!model.measure) {
        throw DomainMismatch("model file has no 'measure'; decompose needs one");
    }
    const FiniteLattice& lat = *model.lattice;
    const ClauseReport clauses = validate_signed_measure(*model.measure);

    json doc;
    doc["measure_clauses"] = clause_report_json(clauses);
    if (!clauses.all_pass()) {
        doc["decomposition"] = nullptr;
        doc["pass"] = false;
        if (as_json) {
            out << doc.dump(2) << "\n";
        } else {
            out << "measure clauses (signed):\n";
            const json& mc = doc["measure_clauses"];
            const std::pair<const char*, const char*> labels[] = {
                {"bottom_zero", "(1) bottom zero"},
                {"monotone", "(2a) monotone on nonnegative pairs"},
                {"antitone", "(2b) antitone on nonpositive pairs"},
                {"modular", "(3) modular"},
                {"continuity", "(4) chain continuity"},
            };
            for (const auto& [key, label] : labels) {
                const json& v = mc[key];
                out << "  " << label << ": " << mark(v["ok"].get<bool>());
                if (!v["ok"].get<bool>()) out << "  [" << v["note"].get<std::string>() << "]";
                out << "\n";
            }
            out << "decomposition: skipped, measure is invalid\n";
            out << "result: FAIL\n";
        }
        return kExitFail;
    }

    const HahnDecomposition dec = hahn_decompose(*model.measure);
    doc["decomposition"] = decomposition_json(dec);
    doc["pass"] = dec.findings.empty();
    if (as_json) {
        out << doc.dump(2) << "\n";
    } else {
        out << "measure clauses: all pass\n";
        out << "A = " << lat.name(dec.a) << " (index " << dec.a << "), certificate: "
            << (dec.a_certificate.positive ? "positive" : "NOT POSITIVE") << ", "
            << dec.a_certificate.checked.size() << " sub-members checked\n";
        out << "B = " << lat.name(dec.b) << " (index " << dec.b << "), certificate: "
            << (dec.b_certificate.negative ? "negative" : "NOT NEGATIVE") << ", "
            << dec.b_certificate.checked.size() << " sub-members checked\n";
        out << "lambda = " << to_string(dec.lambda) << "\n";
        out << "overlap value at A /\\ B = " << to_string(dec.overlap_value) << "\n";
        out << "cover A \\/ B = top: " << mark(dec.cover_ok) << "\n";
        if (dec.findings.empty()) {
            out << "findings: none\n";
        } else {
            out << "findings:\n";
            for (const TheoremViolation& v : dec.findings) {
                out << "  VIOLATION " << v.claim << " -- " << v.detail << "\n";
            }
        }
        out << "result: " << (dec.findings.empty() ? "PASS" : "FAIL") << "\n";
    }
    return dec.findings.empty() ? kExitPass : kExitFail;
}

json spec_json(const SearchSpec& spec) {
    json doc;
    doc["max_lattice_size"] = spec.max_lattice_size;
    json req = json::array();
    for (Axiom a : spec.required_axioms) req.push_back(axiom_name(a));
    json forb = json::array();
    for (Axiom a : spec.forbidden_axioms) forb.push_back(axiom_name(a));
    doc["required"] = req;
    doc["forbidden"] = forb;
    json pool = json::array();
    for (const Rat& r : spec.measure_value_pool) pool.push_back(to_string(r));
    doc["pool"] = pool;
    doc["require_distributive"] = spec.require_distributive;
    doc["limit"] = spec.limit;
    doc["seed"] = spec.seed;
    return doc;
}

int cmd_search(const SearchSpec& spec, bool stress, const std::string& out_dir, bool as_json,
               std::ostream& out) {
    std::vector<Finding> findings = search_models(spec);
    if (stress) {
        std::vector<Finding> violations = stress_theorem(spec);
        findings.insert(findings.end(), violations.begin(), violations.end());
    }

    size_t counts[4] = {0, 0, 0, 0};
    for (const Finding& f : findings) counts[static_cast<size_t>(f.kind)]++;

    json summary;
    summary["spec"] = spec_json(spec);
    summary["findings"] = json::array();
    for (size_t i = 0; i < findings.size(); ++i) {
        const Finding& f = findings[i];
        json entry;
        entry["kind"] = finding_kind_name(f.kind);
        entry["notes"] = f.notes;
        if (f.model_json.empty()) {
            entry["file"] = nullptr;
            entry["verdicts"] = nullptr;
        } else {
            std::ostringstream file_name;
            file_name << "model_" << std::setw(4) << std::setfill('0') << i << ".json";
            entry["file"] = file_name.str();
            entry["verdicts"] = json::parse(f.verdicts_json);
        }
        summary["findings"].push_back(entry);
    }
    json count_doc;
    count_doc["ModelFound"] = counts[0];
    count_doc["NoModelExists"] = counts[1];
    count_doc["TheoremViolation"] = counts[2];
    count_doc["ValidMeasureFound"] = counts[3];
    summary["counts"] = count_doc;

    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        for (size_t i = 0; i < findings.size(); ++i) {
            if (findings[i].model_json.empty()) continue;
            std::ostringstream file_name;
            file_name << "model_" << std::setw(4) << std::setfill('0') << i << ".json";
            std::ofstream model_out(fs::path(out_dir) / file_name.str());
            model_out << findings[i].model_json;
        }
        std::ofstream summary_out(fs::path(out_dir) / "summary.json");
        summary_out << summary.dump(2) << "\n";
    }

    if (as_json) {
        out << summary.dump(2) << "\n";
    } else {
        out << "findings: ModelFound=" << counts[0] << " ValidMeasureFound=" << counts[3]
            << " NoModelExists=" << counts[1] << " TheoremViolation=" << counts[2] << "\n";
        for (const Finding& f : findings) {
            out << "  " << finding_kind_name(f.kind);
            if (!f.notes.empty()) out << ": " << f.notes;
            out << "\n";
        }
        if (!out_dir.empty()) out << "persisted to " << out_dir << "\n";
    }
    return counts[2] == 0 ? kExitPass : kExitFail;
}

int cmd_report(const std::string& dir, bool as_json, std::ostream& out) {
    const fs::path summary_path = fs::path(dir) / "summary.json";
    std::ifstream in(summary_path);
    if (!in) throw ParseError("cannot open '" + summary_path.string() + "'");
    json summary;
    try {
        summary = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("summary.json is not valid JSON: ") + e.what());
    }

    size_t checked = 0;
    size_t mismatched = 0;
    size_t violations = 0;
    json lines = json::array();
    for (const json& entry : summary.at("findings")) {
        const std::string kind = entry.at("kind").get<std::string>();
        if (kind == "TheoremViolation") ++violations;
        if (entry.at("file").is_null()) continue;
        const std::string file_name = entry.at("file").get<std::string>();
        const fs::path model_path = fs::path(dir) / file_name;

        std::ifstream model_in(model_path);
        if (!model_in) throw ParseError("cannot open '" + model_path.string() + "'");
        std::string text((std::istreambuf_iterator<char>(model_in)), std::istreambuf_iterator<char>());

        const LoadedModel model = parse_model_text(text);
        const json recomputed = compute_model_digest(model);
        const bool verdicts_match = recomputed == entry.at("verdicts");
        const bool canonical_match = serialize_model_text(model) == text;
        ++checked;
        if (!verdicts_match || !canonical_match) ++mismatched;

        json line;
        line["file"] = file_name;
        line["kind"] = kind;
        line["verdicts_match"] = verdicts_match;
        line["canonical_match"] = canonical_match;
        lines.push_back(line);
        if (!as_json) {
            out << "  " << file_name << ": verdicts " << (verdicts_match ? "match" : "MISMATCH")
                << ", canonical form " << (canonical_match ? "stable" : "MISMATCH") << "\n";
        }
    }

    const bool pass = mismatched == 0 && violations == 0;
    if (as_json) {
        json doc;
        doc["models"] = lines;
        doc["checked"] = checked;
        doc["mismatched"] = mismatched;
        doc["recorded_violations"] = violations;
        doc["pass"] = pass;
        out << doc.dump(2) << "\n";
    } else {
        out << "checked " << checked << " model files: " << mismatched << " mismatched, "
            << violations << " recorded violations\n";
        out << "result: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) parts.push_back(current);
    return parts;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite lattice measure laboratory"};
    app.require_subcommand(1);

    std::string validate_path;
    bool validate_json = false;
    CLI::App* validate = app.add_subcommand("validate", "check lattice, complement, algebra, and measure");
    validate->add_option("file", validate_path, "model file")->required();
    validate->add_flag("--json", validate_json, "emit a JSON report");

    std::string sigma_path;
    bool sigma_json = false;
    CLI::App* sigma = app.add_subcommand("sigma", "print the generated sigma algebra");
    sigma->add_option("file", sigma_path, "model file")->required();
    sigma->add_flag("--json", sigma_json, "emit a JSON report");

    std::string decompose_path;
    bool decompose_json = false;
    CLI::App* decompose = app.add_subcommand("decompose", "Hahn decomposition of the model's measure");
    decompose->add_option("file", decompose_path, "model file")->required();
    decompose->add_flag("--json", decompose_json, "emit a JSON report");

    int max_size = 4;
    std::string require_csv;
    std::string forbid_csv;
    std::string pool_csv;
    int limit = 1000;
    uint64_t seed = 0;
    std::string out_dir;
    bool distributive = false;
    bool stress = false;
    bool search_json = false;
    CLI::App* search = app.add_subcommand("search", "enumerate small models matching an axiom profile");
    search->add_option("--max-size", max_size, "largest lattice size to search");
    search->add_option("--require", require_csv, "axioms that must hold, e.g. L5,L7,L8");
    search->add_option("--forbid", forbid_csv, "axioms that must fail, e.g. L6");
    search->add_option("--pool", pool_csv, "measure value pool, e.g. -1,0,1,2");
    search->add_option("--limit", limit, "max model findings to emit");
    search->add_option("--seed", seed, "seed for any sampled phase");
    search->add_option("--out", out_dir, "directory for model files + summary.json");
    search->add_flag("--distributive", distributive, "restrict to distributive lattices");
    search->add_flag("--stress", stress, "replay decompositions against the oracle");
    search->add_flag("--json", search_json, "emit the summary as JSON");

    std::string report_dir;
    bool report_json = false;
    CLI::App* report = app.add_subcommand("report", "re-validate a persisted search output directory");
    report->add_option("dir", report_dir, "search output directory")->required();
    report->add_flag("--json", report_json, "emit a JSON report");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help lands here; usage text is not an error.
            out << app.help();
            return kExitPass;
        }
        err << "usage error: " << e.what() << "\n";
        err << app.help();
        return kExitInput;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_path, validate_json, out);
        if (sigma->parsed()) return cmd_sigma(sigma_path, sigma_json, out);
        if (decompose->parsed()) return cmd_decompose(decompose_path, decompose_json, out);
        if (search->parsed()) {
            SearchSpec spec;
            spec.max_lattice_size = max_size;
            for (const std::string& name : split_csv(require_csv)) {
                spec.required_axioms.push_back(axiom_from_name(name));
            }
            for (const std::string& name : split_csv(forbid_csv)) {
                spec.forbidden_axioms.push_back(axiom_from_name(name));
            }
            for (const std::string& value : split_csv(pool_csv)) {
                spec.measure_value_pool.push_back(parse_rational(value));
            }
            spec.require_distributive = distributive;
            spec.limit = limit;
            spec.seed = seed;
            return cmd_search(spec, stress, out_dir, search_json, out);
        }
        if (report->parsed()) return cmd_report(report_dir, report_json, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
    err << "usage error: no subcommand\n";
    return kExitInput;
}

} // namespace latmeas
