#ifndef LATMEAS_MEASURE_HPP
#define LATMEAS_MEASURE_HPP

#include <map>
#include <memory>
#include <vector>

#include "latmeas/rational.hpp"
#include "latmeas/sigma_algebra.hpp"
#include "latmeas/verdict.hpp"

namespace latmeas {

enum class MeasureKind { unsigned_candidate, signed_candidate };

/** An exact-rational valuation of the algebra members. `values` is aligned
 * with algebra->members(). Nothing is assumed valid until one of the
 * validators below has reported all-pass. */
struct SignedMeasure {
    std::shared_ptr<const SigmaAlgebra> algebra;
    std::vector<Rat> values;
    MeasureKind kind = MeasureKind::signed_candidate;

    const Rat& value_of(int element) const; // throws NotAMember
    const Rat& value_at_position(int member_position) const { return values[static_cast<size_t>(member_position)]; }
};

// Builds a measure from an element -> value map. The map must cover the
// algebra members exactly; missing or extra entries are a DomainMismatch.
SignedMeasure make_measure(std::shared_ptr<const SigmaAlgebra> algebra,
                           const std::map<int, Rat>& values_by_element,
                           MeasureKind kind);

/** Verdicts per clause. `antitone` is only evaluated for signed candidates;
 * for unsigned ones it passes with an n/a note so that reports keep a stable
 * shape. */
struct ClauseReport {
    MeasureKind kind = MeasureKind::signed_candidate;
    AxiomVerdict bottom_zero; // (1)  value at bottom is 0
    AxiomVerdict monotone;    // (2)  h <= g with both values >= 0 implies v(h) <= v(g)
    AxiomVerdict antitone;    // (2b) h <= g with both values <= 0 implies v(g) <= v(h)
    AxiomVerdict modular;     // (3)  v(h \/ g) + v(h /\ g) = v(h) + v(g), exactly
    AxiomVerdict continuity;  // (4)  every maximal member chain attains its value at the join

    bool all_pass() const {
        return bottom_zero.ok && monotone.ok && antitone.ok && modular.ok && continuity.ok;
    }
};

// Clause checks for an unsigned candidate (kind must match).
ClauseReport validate_measure(const SignedMeasure& measure);

// Clause checks for a signed candidate (kind must match).
ClauseReport validate_signed_measure(const SignedMeasure& measure);

// Pointwise difference of two unsigned measures on the same algebra. The
// result is a signed candidate and deliberately NOT validated: whether it
// satisfies the signed clauses is a question for the caller to test.
SignedMeasure difference_measure(const SignedMeasure& m1, const SignedMeasure& m2);

// Maximal chains of the member poset, each from bottom to top, in
// deterministic order. Exposed for the continuity clause and its oracle.
std::vector<std::vector<int>> maximal_member_chains(const SigmaAlgebra& algebra);

} // namespace latmeas

#endif
