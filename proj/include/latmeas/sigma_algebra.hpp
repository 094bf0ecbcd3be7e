#ifndef LATMEAS_SIGMA_ALGEBRA_HPP
#define LATMEAS_SIGMA_ALGEBRA_HPP

#include <memory>
#include <vector>

#include "latmeas/complement.hpp"
#include "latmeas/lattice.hpp"
#include "latmeas/verdict.hpp"

namespace latmeas {

/** The family of lattice elements closed under complement, join, and meet,
 * together with the generators it was grown from. Members always contain
 * bottom and top and are sorted by element index. */
class SigmaAlgebra {
public:
    SigmaAlgebra(std::shared_ptr<const FiniteLattice> lattice,
                 std::shared_ptr<const ComplementMap> complement,
                 std::vector<int> members,
                 std::vector<int> generators);

    const FiniteLattice& lattice() const { return *lattice_; }
    const ComplementMap& complement() const { return *complement_; }
    std::shared_ptr<const FiniteLattice> lattice_ptr() const { return lattice_; }
    std::shared_ptr<const ComplementMap> complement_ptr() const { return complement_; }

    const std::vector<int>& members() const { return members_; }
    const std::vector<int>& generators() const { return generators_; }
    int member_count() const { return static_cast<int>(members_.size()); }

    bool is_member(int element) const {
        return element >= 0 && element < static_cast<int>(member_pos_.size()) && member_pos_[static_cast<size_t>(element)] >= 0;
    }
    // Position of an element inside members(), or -1.
    int member_position(int element) const {
        return is_member(element) ? member_pos_[static_cast<size_t>(element)] : -1;
    }

    friend bool operator==(const SigmaAlgebra& a, const SigmaAlgebra& b) {
        return *a.lattice_ == *b.lattice_ && a.complement_->table == b.complement_->table && a.members_ == b.members_;
    }

private:
    std::shared_ptr<const FiniteLattice> lattice_;
    std::shared_ptr<const ComplementMap> complement_;
    std::vector<int> members_;
    std::vector<int> generators_;
    std::vector<int> member_pos_;
};

// Least fixed point of closing {generators, bottom, top} under x -> x^C,
// (x, y) -> x \/ y, and (x, y) -> x /\ y. Meets are included deliberately:
// the measure clauses evaluate values at h /\ g, so the measure's domain has
// to contain them. Throws ReferentialError on out-of-range generators.
SigmaAlgebra generate_algebra(std::shared_ptr<const FiniteLattice> lattice,
                              std::shared_ptr<const ComplementMap> complement,
                              std::vector<int> generators);

// True iff the candidate set contains bottom and top and is closed under
// complement, join, and meet. The witness names the offending operation and
// operands.
AxiomVerdict is_closed(const FiniteLattice& lattice, const ComplementMap& complement,
                       const std::vector<int>& candidate_members);

} // namespace latmeas

#endif
