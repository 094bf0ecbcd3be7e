#include "latmeas/sigma_algebra.hpp"

#include <algorithm>

#include "latmeas/errors.hpp"

namespace latmeas {

SigmaAlgebra::SigmaAlgebra(std::shared_ptr<const FiniteLattice> lattice,
                           std::shared_ptr<const ComplementMap> complement,
                           std::vector<int> members,
                           std::vector<int> generators)
    : lattice_(std::move(lattice)),
      complement_(std::move(complement)),
      members_(std::move(members)),
      generators_(std::move(generators)) {
    member_pos_.assign(static_cast<size_t>(lattice_->size()), -1);
    for (size_t i = 0; i < members_.size(); ++i) {
        member_pos_[static_cast<size_t>(members_[i])] = static_cast<int>(i);
    }
}

SigmaAlgebra generate_algebra(std::shared_ptr<const FiniteLattice> lattice,
                              std::shared_ptr<const ComplementMap> complement,
                              std::vector<int> generators) {
    const FiniteLattice& lat = *lattice;
    const ComplementMap& comp = *complement;
    const int n = lat.size();
    for (int g : generators) {
        if (g < 0 || g >= n) throw ReferentialError("generator index " + std::to_string(g) + " is out of range");
    }

    std::vector<uint8_t> in(static_cast<size_t>(n), 0);
    in[static_cast<size_t>(lat.bottom())] = 1;
    in[static_cast<size_t>(lat.top())] = 1;
    for (int g : generators) in[static_cast<size_t>(g)] = 1;

    // Termination: each round either adds an element or reaches the fixed
    // point, so at most n rounds run.
    bool grew = true;
    while (grew) {
        grew = false;
        for (int x = 0; x < n; ++x) {
            if (!in[static_cast<size_t>(x)]) continue;
            const int cx = comp.of(x);
            if (!in[static_cast<size_t>(cx)]) {
                in[static_cast<size_t>(cx)] = 1;
                grew = true;
            }
            for (int y = x; y < n; ++y) {
                if (!in[static_cast<size_t>(y)]) continue;
                const int j = lat.join(x, y);
                if (!in[static_cast<size_t>(j)]) {
                    in[static_cast<size_t>(j)] = 1;
                    grew = true;
                }
                const int m = lat.meet(x, y);
                if (!in[static_cast<size_t>(m)]) {
                    in[static_cast<size_t>(m)] = 1;
                    grew = true;
                }
            }
        }
    }

    std::vector<int> members;
    for (int x = 0; x < n; ++x) {
        if (in[static_cast<size_t>(x)]) members.push_back(x);
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    return SigmaAlgebra(std::move(lattice), std::move(complement), std::move(members), std::move(generators));
}

AxiomVerdict is_closed(const FiniteLattice& lattice, const ComplementMap& complement,
                       const std::vector<int>& candidate_members) {
    std::vector<uint8_t> in(static_cast<size_t>(lattice.size()), 0);
    for (int x : candidate_members) {
        if (x < 0 || x >= lattice.size()) {
            throw ReferentialError("candidate member " + std::to_string(x) + " is out of range");
        }
        in[static_cast<size_t>(x)] = 1;
    }
    if (!in[static_cast<size_t>(lattice.bottom())]) {
        return fail_verdict({lattice.bottom()}, "bottom " + lattice.name(lattice.bottom()) + " is not a member");
    }
    if (!in[static_cast<size_t>(lattice.top())]) {
        return fail_verdict({lattice.top()}, "top " + lattice.name(lattice.top()) + " is not a member");
    }
    for (int x : candidate_members) {
        const int cx = complement.of(x);
        if (!in[static_cast<size_t>(cx)]) {
            return fail_verdict({x}, "complement of " + lattice.name(x) + " (= " + lattice.name(cx) + ") is missing");
        }
    }
    for (int x : candidate_members) {
        for (int y : candidate_members) {
            const int j = lattice.join(x, y);
            if (!in[static_cast<size_t>(j)]) {
                return fail_verdict({x, y}, "join of " + lattice.name(x) + " and " + lattice.name(y) +
                                                " (= " + lattice.name(j) + ") is missing");
            }
            const int m = lattice.meet(x, y);
            if (!in[static_cast<size_t>(m)]) {
                return fail_verdict({x, y}, "meet of " + lattice.name(x) + " and " + lattice.name(y) +
                                                " (= " + lattice.name(m) + ") is missing");
            }
        }
    }
    return pass_verdict("closed under complement, join, and meet");
}

} // namespace latmeas
