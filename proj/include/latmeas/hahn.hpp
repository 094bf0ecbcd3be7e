#ifndef LATMEAS_HAHN_HPP
#define LATMEAS_HAHN_HPP

#include <optional>
#include <string>
#include <vector>

#include "latmeas/measure.hpp"
#include "latmeas/rational.hpp"

namespace latmeas {

/** Result of scanning every algebra member below an element. An element can
 * be positive and negative at once (all sub-values zero) or neither. */
struct PolarityCertificate {
    int element = -1;
    bool positive = false;
    bool negative = false;
    std::vector<int> checked;            // every member below element, ascending
    std::optional<int> positive_witness; // sub-member with value < 0, when not positive
    std::optional<int> negative_witness; // sub-member with value > 0, when not negative
};

/** A claimed property that failed on a concrete instance. Violations are
 * first-class results, not crashes: probing the claims is part of the job. */
struct TheoremViolation {
    std::string claim;
    std::string detail;
    std::vector<int> witness;
};

struct ExtractionStep {
    int removed = -1;             // the sub-member stripped in this round
    long long threshold_rank = 0; // least n >= 1 with value < -1/n
    Rat value;                    // measure of the stripped member, always < 0
};

struct ExtractionTrace {
    int start = -1;
    std::vector<ExtractionStep> steps;
    int result = -1;
    PolarityCertificate result_certificate;
    std::vector<TheoremViolation> findings;
};

struct HahnDecomposition {
    int a = -1;
    int b = -1;
    Rat lambda;
    PolarityCertificate a_certificate;
    PolarityCertificate b_certificate;
    Rat overlap_value;     // measure of a /\ b
    bool cover_ok = false; // a \/ b = top
    std::vector<TheoremViolation> findings;

    bool has_pair() const { return a >= 0; }
    bool ok() const { return has_pair() && findings.empty(); }
};

// Scans all members E below `element` (order tested via meet). Positive iff
// every value is >= 0, negative iff every value is <= 0.
// Throws NotAMember.
PolarityCertificate classify_polarity(const SignedMeasure& measure, int element);

struct UnionPositiveResult {
    PolarityCertificate certificate;
    std::vector<TheoremViolation> findings;
};

// Certificate for the join of positively certified elements. The join is
// expected to come out positive; when it does not, the result carries a
// violation finding instead of failing silently. The empty join is bottom.
// Throws NotAMember, or PreconditionViolated when an input is not positive.
UnionPositiveResult union_positive(const SignedMeasure& measure, const std::vector<int>& elements);

// Greedy positive-sublattice extraction from an element with value > 0:
// while the remainder is not positive, strip the most negative sub-member
// (ties to the smallest index) by meeting with its complement. The final
// remainder must be positive with value > 0; failures become findings.
// Throws PreconditionViolated when the start value is not > 0, NotAMember.
ExtractionTrace extract_positive(const SignedMeasure& measure, int element);

// Full decomposition: the positive member maximizing the measure (ties to
// the smallest index) against its complement. lambda is that maximum; it is
// 0 exactly when no positive member carries positive measure. Invariant
// failures (complement not negative, overlap nonzero, cover broken) are
// attached as findings on the returned record.
// Throws InvalidMeasure when the measure does not pass the signed clauses.
HahnDecomposition hahn_decompose(const SignedMeasure& measure);

// Independent check: tests every (a, a^C) pair directly against the four
// decomposition invariants by raw sub-member enumeration, sharing no code
// with classify_polarity, and returns the first valid pair in index order.
// When no pair qualifies the record has no pair and carries a finding.
// Throws InvalidMeasure.
HahnDecomposition oracle_decompose(const SignedMeasure& measure);

} // namespace latmeas

#endif
