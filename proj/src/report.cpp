#include "latmeas/report.hpp"

namespace latmeas {

using nlohmann::json;

json verdict_json(const AxiomVerdict& v) {
    json out = json::object();
    out["ok"] = v.ok;
    out["witness"] = v.witness;
    out["note"] = v.note;
    return out;
}

json lattice_laws_json(const LatticeLawsReport& rep) {
    json out = json::object();
    out["l1_commutative"] = verdict_json(rep.l1_commutative);
    out["l2_associative"] = verdict_json(rep.l2_associative);
    out["l3_absorption"] = verdict_json(rep.l3_absorption);
    out["bounds"] = verdict_json(rep.bounds);
    out["order_consistency"] = verdict_json(rep.order_consistency);
    return out;
}

json axiom_report_json(const AxiomReport& rep) {
    json out = json::object();
    out["l5_excluded_middle"] = verdict_json(rep.l5_excluded_middle);
    out["l6_non_contradiction"] = verdict_json(rep.l6_non_contradiction);
    out["l7_contrapositive"] = verdict_json(rep.l7_contrapositive);
    out["l8_double_negation"] = verdict_json(rep.l8_double_negation);
    out["derived_de_morgan"] = verdict_json(rep.derived_de_morgan);
    return out;
}

json clause_report_json(const ClauseReport& rep) {
    json out = json::object();
    out["kind"] = rep.kind == MeasureKind::signed_candidate ? "signed" : "unsigned";
    out["bottom_zero"] = verdict_json(rep.bottom_zero);
    out["monotone"] = verdict_json(rep.monotone);
    out["antitone"] = verdict_json(rep.antitone);
    out["modular"] = verdict_json(rep.modular);
    out["continuity"] = verdict_json(rep.continuity);
    out["all_pass"] = rep.all_pass();
    return out;
}

json certificate_json(const PolarityCertificate& cert) {
    json out = json::object();
    out["element"] = cert.element;
    out["positive"] = cert.positive;
    out["negative"] = cert.negative;
    out["checked"] = cert.checked;
    out["positive_witness"] = cert.positive_witness ? json(*cert.positive_witness) : json(nullptr);
    out["negative_witness"] = cert.negative_witness ? json(*cert.negative_witness) : json(nullptr);
    return out;
}

json violation_json(const TheoremViolation& violation) {
    json out = json::object();
    out["claim"] = violation.claim;
    out["detail"] = violation.detail;
    out["witness"] = violation.witness;
    return out;
}

json decomposition_json(const HahnDecomposition& dec) {
    json out = json::object();
    out["a"] = dec.a;
    out["b"] = dec.b;
    out["lambda"] = to_string(dec.lambda);
    out["a_certificate"] = certificate_json(dec.a_certificate);
    out["b_certificate"] = certificate_json(dec.b_certificate);
    out["overlap_value"] = to_string(dec.overlap_value);
    out["cover_ok"] = dec.cover_ok;
    json findings = json::array();
    for (const TheoremViolation& v : dec.findings) findings.push_back(violation_json(v));
    out["findings"] = findings;
    return out;
}

json compute_model_digest(const LoadedModel& model) {
    json digest = json::object();
    digest["distributive"] = check_distributive(*model.lattice).ok;

    const AxiomReport axioms = check_axioms(*model.complement);
    json ax = json::object();
    ax["l5"] = axioms.l5_excluded_middle.ok;
    ax["l6"] = axioms.l6_non_contradiction.ok;
    ax["l7"] = axioms.l7_contrapositive.ok;
    ax["l8"] = axioms.l8_double_negation.ok;
    ax["de_morgan"] = axioms.derived_de_morgan.ok;
    digest["axioms"] = ax;
    digest["profile_accepted"] = require_working_profile(axioms).accepted;

    digest["sigma_closed"] =
        is_closed(*model.lattice, *model.complement, model.algebra->members()).ok;
    digest["member_count"] = model.algebra->member_count();

    if (model.measure) {
        const ClauseReport clauses = validate_signed_measure(*model.measure);
        json mc = json::object();
        mc["bottom_zero"] = clauses.bottom_zero.ok;
        mc["monotone"] = clauses.monotone.ok;
        mc["antitone"] = clauses.antitone.ok;
        mc["modular"] = clauses.modular.ok;
        mc["continuity"] = clauses.continuity.ok;
        mc["all_pass"] = clauses.all_pass();
        digest["measure"] = mc;
        if (clauses.all_pass()) {
            const HahnDecomposition dec = hahn_decompose(*model.measure);
            json hd = json::object();
            hd["a"] = dec.a;
            hd["b"] = dec.b;
            hd["lambda"] = to_string(dec.lambda);
            hd["violations"] = dec.findings.size();
            digest["hahn"] = hd;
        } else {
            digest["hahn"] = nullptr;
        }
    } else {
        digest["measure"] = nullptr;
        digest["hahn"] = nullptr;
    }
    return digest;
}

} // namespace latmeas
