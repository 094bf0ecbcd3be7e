#ifndef LATMEAS_VERDICT_HPP
#define LATMEAS_VERDICT_HPP

#include <string>
#include <vector>

namespace latmeas {

// Outcome of one axiom or clause check. When `ok` is false, `witness` holds
// the element indices that re-evaluate to a violation (arity depends on the
// check: one element for L5/L6/L8, a pair for L7 and the measure clauses, a
// triple for distributivity, a chain for continuity). `note` is a short
// human-readable account carrying the evaluated values.
struct AxiomVerdict {
    bool ok = true;
    std::vector<int> witness;
    std::string note;
};

inline AxiomVerdict pass_verdict(std::string note = {}) {
    AxiomVerdict v;
    v.note = std::move(note);
    return v;
}

inline AxiomVerdict fail_verdict(std::vector<int> witness, std::string note) {
    AxiomVerdict v;
    v.ok = false;
    v.witness = std::move(witness);
    v.note = std::move(note);
    return v;
}

} // namespace latmeas

#endif
