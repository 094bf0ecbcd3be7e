#ifndef LATMEAS_LATTICE_HPP
#define LATMEAS_LATTICE_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "latmeas/verdict.hpp"

namespace latmeas {

/** A finite bounded lattice over elements 0..n-1.
 *
 * Elements are abstract indices with optional string labels; the order
 * relation and the total meet/join tables are materialized at construction
 * time and never change afterwards. Construction fails loudly when the input
 * order is not a lattice (missing or non-unique glb/lub, missing bounds,
 * cycles), so a live FiniteLattice always satisfies L1-L3 and the
 * leq/meet/join consistency laws.
 */
class FiniteLattice {
public:
    int size() const { return n_; }
    const std::string& name(int x) const { return names_[static_cast<size_t>(x)]; }
    const std::vector<std::string>& names() const { return names_; }

    bool leq(int x, int y) const { return leq_[idx(x, y)] != 0; }
    int meet(int x, int y) const { return meet_[idx(x, y)]; }
    int join(int x, int y) const { return join_[idx(x, y)]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }

    // Meet / join folded over a set of elements; the empty meet is top and
    // the empty join is bottom.
    int meet_all(const std::vector<int>& xs) const;
    int join_all(const std::vector<int>& xs) const;

    // Covering pairs (x, y): x < y with nothing strictly between. This is the
    // transitive reduction of leq, used for canonical serialization.
    std::vector<std::pair<int, int>> cover_pairs() const;

    // Structural equality: same order and same tables. Names are labels and
    // do not participate.
    friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
        return a.n_ == b.n_ && a.bottom_ == b.bottom_ && a.top_ == b.top_ &&
               a.leq_ == b.leq_ && a.meet_ == b.meet_ && a.join_ == b.join_;
    }
    friend bool operator!=(const FiniteLattice& a, const FiniteLattice& b) { return !(a == b); }

    // Builds from a reflexive-transitively closed order matrix. leq is given
    // row-major (leq[i*n+j] != 0 means i <= j). Throws NotALattice or
    // MissingBounds when the order is not a bounded lattice.
    static FiniteLattice from_leq(std::vector<std::string> names, const std::vector<uint8_t>& leq);

private:
    friend FiniteLattice build_from_covers(std::vector<std::string> names,
                                           const std::vector<std::pair<int, int>>& cover_pairs);
    friend FiniteLattice build_powerset(const std::vector<std::string>& ground_set_labels);

    size_t idx(int x, int y) const { return static_cast<size_t>(x) * static_cast<size_t>(n_) + static_cast<size_t>(y); }

    int n_ = 0;
    std::vector<std::string> names_;
    std::vector<uint8_t> leq_;
    std::vector<int> meet_;
    std::vector<int> join_;
    int bottom_ = -1;
    int top_ = -1;
};

// Realizes a lattice from a Hasse diagram. leq is the reflexive-transitive
// closure of the covers; meet/join are computed from it. Throws CycleDetected,
// MissingBounds, NotALattice, or ReferentialError (index out of range).
FiniteLattice build_from_covers(std::vector<std::string> names,
                                const std::vector<std::pair<int, int>>& cover_pairs);

// The lattice of all subsets of the ground set, ordered by inclusion.
// Element index i is the bitmask over the labels, so bottom is 0 (the empty
// set) and top is 2^k - 1. Throws GroundSetTooLarge above 16 labels.
FiniteLattice build_powerset(const std::vector<std::string>& ground_set_labels);

// Exhaustive L1/L2/L3 + bound + order-consistency validation. Construction
// already guarantees these; this recomputes them as reportable verdicts.
struct LatticeLawsReport {
    AxiomVerdict l1_commutative;
    AxiomVerdict l2_associative;
    AxiomVerdict l3_absorption;
    AxiomVerdict bounds;
    AxiomVerdict order_consistency; // x <= y iff meet = x iff join = y
    bool all_ok() const {
        return l1_commutative.ok && l2_associative.ok && l3_absorption.ok && bounds.ok &&
               order_consistency.ok;
    }
};
LatticeLawsReport check_lattice_laws(const FiniteLattice& lat);

// L4, both directions, all triples. Witness is the first failing triple.
AxiomVerdict check_distributive(const FiniteLattice& lat);

// Frame law: join over {x /\ y : x in S} equals (join over S) /\ y for every
// subset S. Exhaustive for lattices of size <= 12; sampled above that, with
// the sampling parameters recorded in the verdict note.
AxiomVerdict is_frame(const FiniteLattice& lat);

/** A total map between two lattices, candidate homomorphism. */
struct LatticeMap {
    std::shared_ptr<const FiniteLattice> source;
    std::shared_ptr<const FiniteLattice> target;
    std::vector<int> table; // image per source element

    int of(int x) const { return table[static_cast<size_t>(x)]; }
};

struct HomomorphismVerdict {
    AxiomVerdict preserves_ops; // witness: first pair breaking meet or join preservation
    bool bijective = false;     // together with preserves_ops.ok: lattice-isomorphism
};

// Checks h(x /\ y) = h(x) /\ h(y) and h(x \/ y) = h(x) \/ h(y) for all pairs,
// and reports whether the map is a bijection. Throws ReferentialError when
// the table is not total over the source or maps outside the target.
HomomorphismVerdict is_homomorphism(const LatticeMap& map);

} // namespace latmeas

#endif
