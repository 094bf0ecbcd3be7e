#include "latmeas/complement.hpp"

#include "latmeas/errors.hpp"

namespace latmeas {

ComplementMap make_complement(std::shared_ptr<const FiniteLattice> lattice, std::vector<int> table) {
    if (!lattice) throw ReferentialError("complement needs a lattice");
    if (static_cast<int>(table.size()) != lattice->size()) {
        throw ReferentialError("complement table has " + std::to_string(table.size()) +
                               " entries for a lattice of size " + std::to_string(lattice->size()));
    }
    for (int image : table) {
        if (image < 0 || image >= lattice->size()) {
            throw ReferentialError("complement table entry " + std::to_string(image) + " is out of range");
        }
    }
    return ComplementMap{std::move(lattice), std::move(table)};
}

std::vector<int> set_complement_table(int ground_size) {
    const int n = 1 << ground_size;
    std::vector<int> table(static_cast<size_t>(n));
    for (int mask = 0; mask < n; ++mask) {
        table[static_cast<size_t>(mask)] = (n - 1) ^ mask;
    }
    return table;
}

AxiomReport check_axioms(const ComplementMap& complement) {
    const FiniteLattice& lat = *complement.lattice;
    const int n = lat.size();
    AxiomReport rep;

    for (int x = 0; x < n; ++x) {
        if (lat.join(x, complement.of(x)) != lat.top()) {
            rep.l5_excluded_middle = fail_verdict({x}, lat.name(x) + " \\/ " + lat.name(complement.of(x)) +
                                                           " = " + lat.name(lat.join(x, complement.of(x))) + ", not top");
            break;
        }
    }
    for (int x = 0; x < n; ++x) {
        if (lat.meet(x, complement.of(x)) != lat.bottom()) {
            rep.l6_non_contradiction = fail_verdict({x}, lat.name(x) + " /\\ " + lat.name(complement.of(x)) +
                                                             " = " + lat.name(lat.meet(x, complement.of(x))) + ", not bottom");
            break;
        }
    }
    for (int x = 0; x < n && rep.l7_contrapositive.ok; ++x) {
        for (int y = 0; y < n; ++y) {
            if (lat.leq(x, y) && !lat.leq(complement.of(y), complement.of(x))) {
                rep.l7_contrapositive = fail_verdict({x, y}, lat.name(x) + " <= " + lat.name(y) +
                                                                 " but " + lat.name(complement.of(y)) + " is not below " + lat.name(complement.of(x)));
                break;
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        if (complement.of(complement.of(x)) != x) {
            rep.l8_double_negation = fail_verdict({x}, "(" + lat.name(x) + "^C)^C = " +
                                                           lat.name(complement.of(complement.of(x))) + ", not " + lat.name(x));
            break;
        }
    }
    for (int x = 0; x < n && rep.derived_de_morgan.ok; ++x) {
        for (int y = 0; y < n; ++y) {
            if (complement.of(lat.join(x, y)) != lat.meet(complement.of(x), complement.of(y))) {
                rep.derived_de_morgan = fail_verdict({x, y}, "(" + lat.name(x) + " \\/ " + lat.name(y) +
                                                                 ")^C differs from " + lat.name(complement.of(x)) + " /\\ " + lat.name(complement.of(y)));
                break;
            }
        }
    }
    return rep;
}

ProfileVerdict require_working_profile(const AxiomReport& report) {
    ProfileVerdict verdict;
    verdict.accepted = report.l5_excluded_middle.ok && report.l7_contrapositive.ok && report.l8_double_negation.ok;
    verdict.l6_holds = report.l6_non_contradiction.ok;
    return verdict;
}

} // namespace latmeas
