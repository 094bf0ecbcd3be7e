#include "latmeas/lattice.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "latmeas/errors.hpp"

namespace latmeas {

namespace {

// Greatest element of `candidates` under leq, or -1 when there is none or it
// is not unique. `candidates` is never reordered; ties cannot happen because
// a maximum, when it exists, is unique.
int unique_greatest(const FiniteLattice& lat, const std::vector<int>& candidates) {
    if (candidates.empty()) return -1;
    int best = candidates.front();
    for (int w : candidates) {
        if (lat.leq(best, w)) best = w;
    }
    for (int w : candidates) {
        if (!lat.leq(w, best)) return -1;
    }
    return best;
}

int unique_least(const FiniteLattice& lat, const std::vector<int>& candidates) {
    if (candidates.empty()) return -1;
    int best = candidates.front();
    for (int w : candidates) {
        if (lat.leq(w, best)) best = w;
    }
    for (int w : candidates) {
        if (!lat.leq(best, w)) return -1;
    }
    return best;
}

} // namespace

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
    int acc = top_;
    for (int x : xs) acc = meet(acc, x);
    return acc;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
    int acc = bottom_;
    for (int x : xs) acc = join(acc, x);
    return acc;
}

std::vector<std::pair<int, int>> FiniteLattice::cover_pairs() const {
    std::vector<std::pair<int, int>> covers;
    for (int x = 0; x < n_; ++x) {
        for (int y = 0; y < n_; ++y) {
            if (x == y || !leq(x, y)) continue;
            bool direct = true;
            for (int z = 0; z < n_ && direct; ++z) {
                if (z != x && z != y && leq(x, z) && leq(z, y)) direct = false;
            }
            if (direct) covers.emplace_back(x, y);
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

FiniteLattice FiniteLattice::from_leq(std::vector<std::string> names, const std::vector<uint8_t>& leq) {
    FiniteLattice lat;
    lat.n_ = static_cast<int>(names.size());
    lat.names_ = std::move(names);
    lat.leq_ = leq;
    const int n = lat.n_;
    if (leq.size() != static_cast<size_t>(n) * static_cast<size_t>(n)) {
        throw Error("leq matrix size does not match the name list");
    }

    for (int i = 0; i < n; ++i) {
        if (!lat.leq(i, i)) throw Error("leq is not reflexive at " + lat.name(i));
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && lat.leq(i, j) && lat.leq(j, i)) {
                throw CycleDetected("order cycle between " + lat.name(i) + " and " + lat.name(j));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!lat.leq(i, j)) continue;
            for (int k = 0; k < n; ++k) {
                if (lat.leq(j, k) && !lat.leq(i, k)) {
                    throw Error("leq is not transitive via " + lat.name(j));
                }
            }
        }
    }

    lat.bottom_ = -1;
    lat.top_ = -1;
    for (int x = 0; x < n; ++x) {
        bool is_bottom = true;
        bool is_top = true;
        for (int y = 0; y < n; ++y) {
            if (!lat.leq(x, y)) is_bottom = false;
            if (!lat.leq(y, x)) is_top = false;
        }
        if (is_bottom) lat.bottom_ = x;
        if (is_top) lat.top_ = x;
    }
    if (lat.bottom_ < 0 || lat.top_ < 0) {
        throw MissingBounds("order has no global bottom or top element");
    }

    lat.meet_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    lat.join_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
    std::vector<int> lower;
    std::vector<int> upper;
    for (int x = 0; x < n; ++x) {
        for (int y = x; y < n; ++y) {
            lower.clear();
            upper.clear();
            for (int z = 0; z < n; ++z) {
                if (lat.leq(z, x) && lat.leq(z, y)) lower.push_back(z);
                if (lat.leq(x, z) && lat.leq(y, z)) upper.push_back(z);
            }
            const int glb = unique_greatest(lat, lower);
            if (glb < 0) {
                throw NotALattice("no unique greatest lower bound for (" + lat.name(x) + ", " + lat.name(y) + ")", x, y);
            }
            const int lub = unique_least(lat, upper);
            if (lub < 0) {
                throw NotALattice("no unique least upper bound for (" + lat.name(x) + ", " + lat.name(y) + ")", x, y);
            }
            lat.meet_[lat.idx(x, y)] = glb;
            lat.meet_[lat.idx(y, x)] = glb;
            lat.join_[lat.idx(x, y)] = lub;
            lat.join_[lat.idx(y, x)] = lub;
        }
    }
    return lat;
}

FiniteLattice build_from_covers(std::vector<std::string> names,
                                const std::vector<std::pair<int, int>>& cover_pairs) {
    const int n = static_cast<int>(names.size());
    if (n == 0) throw MissingBounds("empty element list has no bounds");

    std::vector<uint8_t> leq(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    auto at = [n](int i, int j) { return static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j); };
    for (int i = 0; i < n; ++i) leq[at(i, i)] = 1;
    for (const auto& [lo, hi] : cover_pairs) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n) {
            throw ReferentialError("cover pair references an element out of range");
        }
        if (lo == hi) throw CycleDetected("self-cover on " + names[static_cast<size_t>(lo)]);
        leq[at(lo, hi)] = 1;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            if (!leq[at(i, k)]) continue;
            for (int j = 0; j < n; ++j) {
                if (leq[at(k, j)]) leq[at(i, j)] = 1;
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (leq[at(i, j)] && leq[at(j, i)]) {
                throw CycleDetected("cover relation has a cycle through " + names[static_cast<size_t>(i)]);
            }
        }
    }
    return FiniteLattice::from_leq(std::move(names), leq);
}

FiniteLattice build_powerset(const std::vector<std::string>& ground_set_labels) {
    const int k = static_cast<int>(ground_set_labels.size());
    if (k > 16) throw GroundSetTooLarge("ground set has " + std::to_string(k) + " labels, cap is 16");

    const int n = 1 << k;
    FiniteLattice lat;
    lat.n_ = n;
    lat.bottom_ = 0;
    lat.top_ = n - 1;
    lat.names_.reserve(static_cast<size_t>(n));
    for (int mask = 0; mask < n; ++mask) {
        std::string name = "{";
        bool first = true;
        for (int b = 0; b < k; ++b) {
            if (mask & (1 << b)) {
                if (!first) name += ",";
                name += ground_set_labels[static_cast<size_t>(b)];
                first = false;
            }
        }
        name += "}";
        lat.names_.push_back(std::move(name));
    }
    const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
    lat.leq_.resize(nn);
    lat.meet_.resize(nn);
    lat.join_.resize(nn);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const size_t p = lat.idx(i, j);
            lat.leq_[p] = ((i & j) == i) ? 1 : 0;
            lat.meet_[p] = i & j;
            lat.join_[p] = i | j;
        }
    }
    return lat;
}

LatticeLawsReport check_lattice_laws(const FiniteLattice& lat) {
    LatticeLawsReport rep;
    const int n = lat.size();

    for (int x = 0; x < n && rep.l1_commutative.ok; ++x) {
        for (int y = 0; y < n; ++y) {
            if (lat.meet(x, y) != lat.meet(y, x) || lat.join(x, y) != lat.join(y, x)) {
                rep.l1_commutative = fail_verdict({x, y}, "commutativity fails at (" + lat.name(x) + ", " + lat.name(y) + ")");
                break;
            }
        }
    }
    for (int x = 0; x < n && rep.l2_associative.ok; ++x) {
        for (int y = 0; y < n && rep.l2_associative.ok; ++y) {
            for (int z = 0; z < n; ++z) {
                if (lat.meet(x, lat.meet(y, z)) != lat.meet(lat.meet(x, y), z) ||
                    lat.join(x, lat.join(y, z)) != lat.join(lat.join(x, y), z)) {
                    rep.l2_associative = fail_verdict({x, y, z}, "associativity fails at (" + lat.name(x) + ", " + lat.name(y) + ", " + lat.name(z) + ")");
                    break;
                }
            }
        }
    }
    for (int x = 0; x < n && rep.l3_absorption.ok; ++x) {
        for (int y = 0; y < n; ++y) {
            if (lat.join(x, lat.meet(y, x)) != x || lat.meet(x, lat.join(y, x)) != x) {
                rep.l3_absorption = fail_verdict({x, y}, "absorption fails at (" + lat.name(x) + ", " + lat.name(y) + ")");
                break;
            }
        }
    }
    for (int x = 0; x < n; ++x) {
        if (!lat.leq(lat.bottom(), x) || !lat.leq(x, lat.top())) {
            rep.bounds = fail_verdict({x}, "element " + lat.name(x) + " escapes the bounds");
            break;
        }
    }
    for (int x = 0; x < n && rep.order_consistency.ok; ++x) {
        for (int y = 0; y < n; ++y) {
            const bool le = lat.leq(x, y);
            if ((lat.meet(x, y) == x) != le || (lat.join(x, y) == y) != le) {
                rep.order_consistency = fail_verdict({x, y}, "leq disagrees with meet/join at (" + lat.name(x) + ", " + lat.name(y) + ")");
                break;
            }
        }
    }
    return rep;
}

AxiomVerdict check_distributive(const FiniteLattice& lat) {
    const int n = lat.size();
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                if (lat.meet(x, lat.join(y, z)) != lat.join(lat.meet(x, y), lat.meet(x, z))) {
                    return fail_verdict({x, y, z}, "meet does not distribute over join at (" + lat.name(x) + ", " + lat.name(y) + ", " + lat.name(z) + ")");
                }
                if (lat.join(x, lat.meet(y, z)) != lat.meet(lat.join(x, y), lat.join(x, z))) {
                    return fail_verdict({x, y, z}, "join does not distribute over meet at (" + lat.name(x) + ", " + lat.name(y) + ", " + lat.name(z) + ")");
                }
            }
        }
    }
    return pass_verdict("all " + std::to_string(static_cast<long long>(n) * n * n) + " triples checked");
}

AxiomVerdict is_frame(const FiniteLattice& lat) {
    const int n = lat.size();
    if (n <= 12) {
        // join_of[S] and join over {x /\ y : x in S}, built by peeling the
        // lowest bit of S.
        const size_t subsets = size_t{1} << n;
        std::vector<int> join_of(subsets);
        join_of[0] = lat.bottom();
        std::vector<int> mj(subsets); // per fixed y, rebuilt below
        for (size_t m = 1; m < subsets; ++m) {
            const int low = static_cast<int>(__builtin_ctzll(m));
            join_of[m] = lat.join(join_of[m & (m - 1)], low);
        }
        for (int y = 0; y < n; ++y) {
            mj[0] = lat.bottom();
            for (size_t m = 1; m < subsets; ++m) {
                const int low = static_cast<int>(__builtin_ctzll(m));
                mj[m] = lat.join(mj[m & (m - 1)], lat.meet(low, y));
            }
            for (size_t m = 0; m < subsets; ++m) {
                if (mj[m] != lat.meet(join_of[m], y)) {
                    std::vector<int> witness;
                    for (int b = 0; b < n; ++b) {
                        if (m & (size_t{1} << b)) witness.push_back(b);
                    }
                    witness.push_back(y);
                    return fail_verdict(std::move(witness),
                                        "frame law fails for the listed subset with y = " + lat.name(y));
                }
            }
        }
        return pass_verdict("exhaustive over all " + std::to_string(subsets) + " subsets");
    }

    // Sampled mode for larger lattices.
    constexpr uint64_t kSeed = 0x1a77ce5eedULL;
    constexpr int kSamples = 4096;
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<uint64_t> bits;
    std::vector<int> subset;
    for (int s = 0; s < kSamples; ++s) {
        subset.clear();
        for (int x = 0; x < n; ++x) {
            if ((bits(rng) & 1u) != 0) subset.push_back(x);
        }
        const int joined = lat.join_all(subset);
        for (int y = 0; y < n; ++y) {
            int lhs = lat.bottom();
            for (int x : subset) lhs = lat.join(lhs, lat.meet(x, y));
            if (lhs != lat.meet(joined, y)) {
                std::vector<int> witness = subset;
                witness.push_back(y);
                return fail_verdict(std::move(witness),
                                    "frame law fails for the listed subset with y = " + lat.name(y) +
                                        " (sampled mode, " + std::to_string(kSamples) + " subsets, seed " + std::to_string(kSeed) + ")");
            }
        }
    }
    return pass_verdict("sampled " + std::to_string(kSamples) + " subsets, seed " + std::to_string(kSeed));
}

HomomorphismVerdict is_homomorphism(const LatticeMap& map) {
    const FiniteLattice& src = *map.source;
    const FiniteLattice& dst = *map.target;
    if (static_cast<int>(map.table.size()) != src.size()) {
        throw ReferentialError("map table is not total over the source lattice");
    }
    for (int image : map.table) {
        if (image < 0 || image >= dst.size()) {
            throw ReferentialError("map table references an element outside the target lattice");
        }
    }

    HomomorphismVerdict verdict;
    for (int x = 0; x < src.size() && verdict.preserves_ops.ok; ++x) {
        for (int y = 0; y < src.size(); ++y) {
            const bool meet_ok = map.of(src.meet(x, y)) == dst.meet(map.of(x), map.of(y));
            const bool join_ok = map.of(src.join(x, y)) == dst.join(map.of(x), map.of(y));
            if (!meet_ok || !join_ok) {
                verdict.preserves_ops = fail_verdict({x, y}, std::string(meet_ok ? "join" : "meet") +
                                                                 " is not preserved at (" + src.name(x) + ", " + src.name(y) + ")");
                break;
            }
        }
    }
    if (src.size() == dst.size()) {
        std::unordered_set<int> images(map.table.begin(), map.table.end());
        verdict.bijective = static_cast<int>(images.size()) == src.size();
    }
    return verdict;
}

} // namespace latmeas
