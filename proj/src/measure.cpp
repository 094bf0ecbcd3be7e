#include "latmeas/measure.hpp"

#include <algorithm>

#include "latmeas/errors.hpp"

namespace latmeas {

const Rat& SignedMeasure::value_of(int element) const {
    const int pos = algebra->member_position(element);
    if (pos < 0) {
        throw NotAMember("element " + std::to_string(element) + " is not an algebra member");
    }
    return values[static_cast<size_t>(pos)];
}

SignedMeasure make_measure(std::shared_ptr<const SigmaAlgebra> algebra,
                           const std::map<int, Rat>& values_by_element,
                           MeasureKind kind) {
    SignedMeasure m;
    m.kind = kind;
    m.values.reserve(algebra->members().size());
    for (const auto& [element, value] : values_by_element) {
        if (!algebra->is_member(element)) {
            throw DomainMismatch("value given for element " + std::to_string(element) +
                                 ", which is not an algebra member");
        }
        (void)value;
    }
    for (int member : algebra->members()) {
        auto it = values_by_element.find(member);
        if (it == values_by_element.end()) {
            throw DomainMismatch("no value for algebra member " + algebra->lattice().name(member));
        }
        m.values.push_back(it->second);
    }
    m.algebra = std::move(algebra);
    return m;
}

std::vector<std::vector<int>> maximal_member_chains(const SigmaAlgebra& algebra) {
    const FiniteLattice& lat = algebra.lattice();
    const std::vector<int>& members = algebra.members();

    // Cover successors within the member poset.
    std::vector<std::vector<int>> succ(members.size());
    for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = 0; j < members.size(); ++j) {
            const int a = members[i];
            const int b = members[j];
            if (a == b || !lat.leq(a, b)) continue;
            bool covered = true;
            for (int c : members) {
                if (c != a && c != b && lat.leq(a, c) && lat.leq(c, b)) {
                    covered = false;
                    break;
                }
            }
            if (covered) succ[i].push_back(static_cast<int>(j));
        }
    }

    std::vector<std::vector<int>> chains;
    std::vector<int> path;
    const int bottom_pos = algebra.member_position(lat.bottom());
    auto dfs = [&](auto&& self, int pos) -> void {
        path.push_back(members[static_cast<size_t>(pos)]);
        if (succ[static_cast<size_t>(pos)].empty()) {
            chains.push_back(path);
        } else {
            for (int next : succ[static_cast<size_t>(pos)]) self(self, next);
        }
        path.pop_back();
    };
    dfs(dfs, bottom_pos);
    return chains;
}

namespace {

bool is_nonneg(const Rat& r) { return r >= Rat(0); }
bool is_nonpos(const Rat& r) { return r <= Rat(0); }

ClauseReport run_clauses(const SignedMeasure& measure, bool check_antitone) {
    const SigmaAlgebra& alg = *measure.algebra;
    const FiniteLattice& lat = alg.lattice();
    const std::vector<int>& members = alg.members();

    ClauseReport rep;
    rep.kind = measure.kind;

    const int bottom = lat.bottom();
    const Rat& at_bottom = measure.value_of(bottom);
    if (at_bottom != Rat(0)) {
        rep.bottom_zero = fail_verdict({bottom}, "value at bottom is " + to_string(at_bottom) + ", not 0");
    }

    for (size_t hi = 0; hi < members.size() && rep.monotone.ok; ++hi) {
        for (size_t gi = 0; gi < members.size(); ++gi) {
            const int h = members[hi];
            const int g = members[gi];
            if (!lat.leq(h, g)) continue;
            const Rat& vh = measure.value_at_position(static_cast<int>(hi));
            const Rat& vg = measure.value_at_position(static_cast<int>(gi));
            if (is_nonneg(vh) && is_nonneg(vg) && !(vh <= vg)) {
                rep.monotone = fail_verdict({h, g}, lat.name(h) + " <= " + lat.name(g) + " but " +
                                                        to_string(vh) + " > " + to_string(vg));
                break;
            }
        }
    }

    if (check_antitone) {
        for (size_t hi = 0; hi < members.size() && rep.antitone.ok; ++hi) {
            for (size_t gi = 0; gi < members.size(); ++gi) {
                const int h = members[hi];
                const int g = members[gi];
                if (!lat.leq(h, g)) continue;
                const Rat& vh = measure.value_at_position(static_cast<int>(hi));
                const Rat& vg = measure.value_at_position(static_cast<int>(gi));
                if (is_nonpos(vh) && is_nonpos(vg) && !(vg <= vh)) {
                    rep.antitone = fail_verdict({h, g}, lat.name(h) + " <= " + lat.name(g) +
                                                            " with both values <= 0, but " + to_string(vg) +
                                                            " > " + to_string(vh));
                    break;
                }
            }
        }
    } else {
        rep.antitone = pass_verdict("not applicable to an unsigned candidate");
    }

    for (size_t hi = 0; hi < members.size() && rep.modular.ok; ++hi) {
        for (size_t gi = hi; gi < members.size(); ++gi) {
            const int h = members[hi];
            const int g = members[gi];
            const Rat lhs = measure.value_of(lat.join(h, g)) + measure.value_of(lat.meet(h, g));
            const Rat rhs = measure.value_at_position(static_cast<int>(hi)) + measure.value_at_position(static_cast<int>(gi));
            if (lhs != rhs) {
                rep.modular = fail_verdict({h, g}, "v(join) + v(meet) = " + to_string(lhs) + " but v(" +
                                                       lat.name(h) + ") + v(" + lat.name(g) + ") = " + to_string(rhs));
                break;
            }
        }
    }

    for (const std::vector<int>& chain : maximal_member_chains(alg)) {
        const int joined = lat.join_all(chain);
        const Rat& at_join = measure.value_of(joined);
        const Rat& at_last = measure.value_of(chain.back());
        if (joined != chain.back() || at_join != at_last) {
            rep.continuity = fail_verdict(chain, "chain join " + lat.name(joined) + " carries " +
                                                     to_string(at_join) + ", chain ends at " +
                                                     lat.name(chain.back()) + " with " + to_string(at_last));
            break;
        }
    }

    return rep;
}

} // namespace

ClauseReport validate_measure(const SignedMeasure& measure) {
    if (measure.kind != MeasureKind::unsigned_candidate) {
        throw PreconditionViolated("validate_measure expects an unsigned candidate");
    }
    return run_clauses(measure, /*check_antitone=*/false);
}

ClauseReport validate_signed_measure(const SignedMeasure& measure) {
    if (measure.kind != MeasureKind::signed_candidate) {
        throw PreconditionViolated("validate_signed_measure expects a signed candidate");
    }
    return run_clauses(measure, /*check_antitone=*/true);
}

SignedMeasure difference_measure(const SignedMeasure& m1, const SignedMeasure& m2) {
    if (m1.kind != MeasureKind::unsigned_candidate || m2.kind != MeasureKind::unsigned_candidate) {
        throw PreconditionViolated("difference_measure expects two unsigned measures");
    }
    if (!(*m1.algebra == *m2.algebra)) {
        throw DomainMismatch("operand measures live on different algebras");
    }
    SignedMeasure diff;
    diff.algebra = m1.algebra;
    diff.kind = MeasureKind::signed_candidate;
    diff.values.reserve(m1.values.size());
    for (size_t i = 0; i < m1.values.size(); ++i) {
        diff.values.push_back(m1.values[i] - m2.values[i]);
    }
    return diff;
}

} // namespace latmeas
