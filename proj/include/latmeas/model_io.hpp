#ifndef LATMEAS_MODEL_IO_HPP
#define LATMEAS_MODEL_IO_HPP

#include <memory>
#include <optional>
#include <string>

#include "json.hpp"

#include "latmeas/complement.hpp"
#include "latmeas/lattice.hpp"
#include "latmeas/measure.hpp"
#include "latmeas/sigma_algebra.hpp"

namespace latmeas {

/** Everything a model file describes, constructed and cross-validated. */
struct LoadedModel {
    std::shared_ptr<const FiniteLattice> lattice;
    std::shared_ptr<const ComplementMap> complement;
    std::shared_ptr<const SigmaAlgebra> algebra;
    std::optional<SignedMeasure> measure;
};

// Model file schema (JSON):
//   "names":      [label, ...]           exactly one of names/powerset
//   "covers":     [[i, j], ...]          optional with names (default none)
//   "powerset":   [label, ...]           ground set; subsets become elements
//   "complement": [c0, c1, ...]          required, index per element
//   "generators": [index-or-name, ...]   optional, default: all elements
//   "measure":    {"name-or-index": "p/q", ...}  optional, must cover members
//
// Loaded measures are signed candidates. Errors: ParseError,
// ReferentialError, NotALattice, CycleDetected, MissingBounds,
// GroundSetTooLarge, DomainMismatch.
LoadedModel parse_model(const nlohmann::json& doc);
LoadedModel parse_model_text(const std::string& text);
LoadedModel load_model(const std::string& path);

// Canonical serialization: explicit names + cover pairs (transitive
// reduction), complement table, generators only when not the default, and
// measure keyed by element name with "p/q" values. parse(serialize(m))
// reproduces the model and serialize is a fixed point on its own output.
nlohmann::json serialize_model(const LoadedModel& model);
std::string serialize_model_text(const LoadedModel& model);

} // namespace latmeas

#endif
