#ifndef LATMEAS_SEARCH_HPP
#define LATMEAS_SEARCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "latmeas/rational.hpp"

namespace latmeas {

enum class Axiom { L5, L6, L7, L8 };

// "L5" -> Axiom::L5; throws UsageError on anything else.
Axiom axiom_from_name(const std::string& name);
const char* axiom_name(Axiom axiom);

struct SearchSpec {
    int max_lattice_size = 4;
    std::vector<Axiom> required_axioms;
    std::vector<Axiom> forbidden_axioms; // disjoint from required_axioms
    std::vector<Rat> measure_value_pool; // empty: skip the measure phase
    bool require_distributive = false;
    int limit = 1000; // max model findings to emit
    uint64_t seed = 0;
};

enum class FindingKind { ModelFound, NoModelExists, TheoremViolation, ValidMeasureFound };
const char* finding_kind_name(FindingKind kind);

/** One search result. `model_json` is the canonical model file text (empty
 * for NoModelExists) and `verdicts_json` the recorded digest, so every
 * finding can be re-loaded and re-validated from its serialized form. */
struct Finding {
    FindingKind kind = FindingKind::ModelFound;
    std::string model_json;
    std::string notes;
    std::string verdicts_json;
};

// Enumerates (lattice, complement) models matching the axiom profile, then
// measures over the value pool that pass the signed clauses. Lattices are
// exhaustive and isomorph-free up to size 8 (sizes 9+ are sampled and say so
// in the notes); complement tables are exhaustive up to lattice size 6 and
// sampled above. Findings are sorted by canonical model key and capped at
// spec.limit. NoModelExists is emitted only when the whole envelope was
// exhaustive (max size <= 6) and nothing matched; its notes carry the
// searched bounds. Throws PreconditionViolated when required and forbidden
// overlap.
std::vector<Finding> search_models(const SearchSpec& spec);

// Replays hahn_decompose and oracle_decompose over every valid measure found
// under the spec and cross-checks them; returns one TheoremViolation finding
// per disagreement or invariant failure, with full reproduction data. An
// empty result means the construction held everywhere it was tested.
std::vector<Finding> stress_theorem(const SearchSpec& spec);

} // namespace latmeas

#endif
