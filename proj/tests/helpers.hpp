#pragma once

#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "latmeas/complement.hpp"
#include "latmeas/lattice.hpp"
#include "latmeas/measure.hpp"
#include "latmeas/sigma_algebra.hpp"

namespace latmeas_test {

using namespace latmeas;

inline std::shared_ptr<const FiniteLattice> share(FiniteLattice lat) {
    return std::make_shared<const FiniteLattice>(std::move(lat));
}

struct Model {
    std::shared_ptr<const FiniteLattice> lattice;
    std::shared_ptr<const ComplementMap> complement;
    std::shared_ptr<const SigmaAlgebra> algebra;
};

inline std::vector<int> all_indices(int n) {
    std::vector<int> out(static_cast<size_t>(n));
    std::iota(out.begin(), out.end(), 0);
    return out;
}

inline Model model_with_complement(std::shared_ptr<const FiniteLattice> lat, std::vector<int> table,
                                   std::vector<int> generators) {
    auto comp = std::make_shared<const ComplementMap>(make_complement(lat, std::move(table)));
    auto alg = std::make_shared<const SigmaAlgebra>(generate_algebra(lat, comp, std::move(generators)));
    return {lat, comp, alg};
}

inline Model powerset_model(const std::vector<std::string>& labels) {
    auto lat = share(build_powerset(labels));
    return model_with_complement(lat, set_complement_table(static_cast<int>(labels.size())),
                                 all_indices(lat->size()));
}

// bot < a,b,c < top
inline FiniteLattice m3() {
    return build_from_covers({"bot", "a", "b", "c", "top"},
                             {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

// bot < a < c < top alongside bot < b < top
inline FiniteLattice n5() {
    return build_from_covers({"bot", "a", "b", "c", "top"},
                             {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}});
}

inline FiniteLattice chain(int k) {
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < k; ++i) {
        names.push_back("c" + std::to_string(i));
        if (i) covers.emplace_back(i - 1, i);
    }
    return build_from_covers(std::move(names), covers);
}

// Additive valuation on a powerset model: value(mask) = sum of atom values.
inline SignedMeasure atom_measure(const Model& model, const std::vector<Rat>& atom_values,
                                  MeasureKind kind = MeasureKind::signed_candidate) {
    std::map<int, Rat> values;
    for (int member : model.algebra->members()) {
        Rat sum(0);
        for (size_t bit = 0; bit < atom_values.size(); ++bit) {
            if (member & (1 << bit)) sum += atom_values[bit];
        }
        values[member] = sum;
    }
    return make_measure(model.algebra, values, kind);
}

// Valuation given per member, aligned with algebra->members().
inline SignedMeasure measure_from(const Model& model, std::vector<Rat> by_member,
                                  MeasureKind kind = MeasureKind::signed_candidate) {
    SignedMeasure m;
    m.algebra = model.algebra;
    m.kind = kind;
    m.values = std::move(by_member);
    return m;
}

// Witness re-evaluation: each returns true when the witness reproduces a
// genuine violation, computed directly from the tables.
inline bool violates_l5(const FiniteLattice& lat, const ComplementMap& c, int x) {
    return lat.join(x, c.of(x)) != lat.top();
}
inline bool violates_l6(const FiniteLattice& lat, const ComplementMap& c, int x) {
    return lat.meet(x, c.of(x)) != lat.bottom();
}
inline bool violates_l7(const FiniteLattice& lat, const ComplementMap& c, int x, int y) {
    return lat.leq(x, y) && !lat.leq(c.of(y), c.of(x));
}
inline bool violates_l8(const ComplementMap& c, int x) {
    return c.of(c.of(x)) != x;
}
inline bool violates_de_morgan(const FiniteLattice& lat, const ComplementMap& c, int x, int y) {
    return c.of(lat.join(x, y)) != lat.meet(c.of(x), c.of(y));
}

} // namespace latmeas_test
