#ifndef LATMEAS_COMPLEMENT_HPP
#define LATMEAS_COMPLEMENT_HPP

#include <memory>
#include <vector>

#include "latmeas/lattice.hpp"
#include "latmeas/verdict.hpp"

namespace latmeas {

/** A unary complement operator x -> x^C, given as a total table. No axiom is
 * assumed at construction; degenerate and failing maps are representable on
 * purpose so that the validators below have something to reject. */
struct ComplementMap {
    std::shared_ptr<const FiniteLattice> lattice;
    std::vector<int> table;

    int of(int x) const { return table[static_cast<size_t>(x)]; }
};

// Validates totality and index range. Throws ReferentialError.
ComplementMap make_complement(std::shared_ptr<const FiniteLattice> lattice, std::vector<int> table);

// The Boolean set complement table for a lattice built by build_powerset
// (element index == subset bitmask).
std::vector<int> set_complement_table(int ground_size);

/** Per-axiom verdicts for one complement operator. Each failed verdict
 * carries a witness that re-evaluates to the violation. */
struct AxiomReport {
    AxiomVerdict l5_excluded_middle;   // x \/ x^C = top
    AxiomVerdict l6_non_contradiction; // x /\ x^C = bottom
    AxiomVerdict l7_contrapositive;    // x <= y implies y^C <= x^C
    AxiomVerdict l8_double_negation;   // (x^C)^C = x
    AxiomVerdict derived_de_morgan;    // (x \/ y)^C = x^C /\ y^C
};

AxiomReport check_axioms(const ComplementMap& complement);

/** Acceptance against the working axiom profile: L5, L7, L8 required, L6 left
 * free. `l6_holds` records whether L6 happens to hold anyway. */
struct ProfileVerdict {
    bool accepted = false;
    bool l6_holds = false;
};

ProfileVerdict require_working_profile(const AxiomReport& report);

} // namespace latmeas

#endif
