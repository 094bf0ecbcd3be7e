#ifndef LATMEAS_REPORT_HPP
#define LATMEAS_REPORT_HPP

#include "json.hpp"

#include "latmeas/complement.hpp"
#include "latmeas/hahn.hpp"
#include "latmeas/lattice.hpp"
#include "latmeas/measure.hpp"
#include "latmeas/model_io.hpp"

namespace latmeas {

// JSON shapes are schema-stable: every key below is always present and
// always carries the same type, so reports can be diffed across runs.

nlohmann::json verdict_json(const AxiomVerdict& v);
nlohmann::json lattice_laws_json(const LatticeLawsReport& rep);
nlohmann::json axiom_report_json(const AxiomReport& rep);
nlohmann::json clause_report_json(const ClauseReport& rep);
nlohmann::json certificate_json(const PolarityCertificate& cert);
nlohmann::json violation_json(const TheoremViolation& violation);
nlohmann::json decomposition_json(const HahnDecomposition& dec);

// Compact verdict digest for one loaded model: lattice distributivity,
// complement axioms, profile acceptance, sigma closure, measure clauses and
// the decomposition outcome when a measure is present. Search findings
// record this digest; `report` recomputes and compares it.
nlohmann::json compute_model_digest(const LoadedModel& model);

} // namespace latmeas

#endif
