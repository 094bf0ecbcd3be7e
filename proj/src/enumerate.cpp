#include "latmeas/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "latmeas/errors.hpp"

namespace latmeas {

namespace {

std::string key_for_permutation(const FiniteLattice& lat, const std::vector<int>& position_of) {
    const int n = lat.size();
    std::string key(static_cast<size_t>(n) * static_cast<size_t>(n), '0');
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (lat.leq(i, j)) {
                key[static_cast<size_t>(position_of[static_cast<size_t>(i)]) * static_cast<size_t>(n) +
                    static_cast<size_t>(position_of[static_cast<size_t>(j)])] = '1';
            }
        }
    }
    return key;
}

// Visits every admissible position map (bottom -> 0, top -> n-1).
template <typename Fn>
void for_each_position_map(const FiniteLattice& lat, Fn&& fn) {
    const int n = lat.size();
    std::vector<int> position_of(static_cast<size_t>(n), -1);
    if (n == 1) {
        position_of[0] = 0;
        fn(position_of);
        return;
    }
    std::vector<int> middles;
    for (int x = 0; x < n; ++x) {
        if (x != lat.bottom() && x != lat.top()) middles.push_back(x);
    }
    std::sort(middles.begin(), middles.end());
    do {
        position_of[static_cast<size_t>(lat.bottom())] = 0;
        position_of[static_cast<size_t>(lat.top())] = n - 1;
        for (size_t k = 0; k < middles.size(); ++k) {
            position_of[static_cast<size_t>(middles[k])] = static_cast<int>(k) + 1;
        }
        fn(position_of);
    } while (std::next_permutation(middles.begin(), middles.end()));
}

struct CanonicalSearch {
    std::string best_key;
    std::vector<int> best_map;
};

CanonicalSearch canonical_search(const FiniteLattice& lat) {
    CanonicalSearch out;
    for_each_position_map(lat, [&](const std::vector<int>& position_of) {
        std::string key = key_for_permutation(lat, position_of);
        if (out.best_key.empty() || key < out.best_key) {
            out.best_key = std::move(key);
            out.best_map = position_of;
        }
    });
    return out;
}

std::vector<std::string> generic_names(int n) {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    return names;
}

// Backtracking enumeration of naturally labeled bounded lattices: element 0
// is bottom, indices form a linear extension, element n-1 is top. cl[j] is
// the closed down-set bitmask of j (including j itself); up[j] the closed
// up-set among the elements added so far.
struct LatticeBuilder {
    int n;
    std::vector<uint32_t> cl;
    std::vector<uint32_t> up;

    explicit LatticeBuilder(int size) : n(size), cl(static_cast<size_t>(size), 0), up(static_cast<size_t>(size), 0) {
        cl[0] = 1u;
        up[0] = 1u;
    }

    // Unique greatest lower bound exists for (x, j) given j's closed down-set?
    bool glb_ok(int x, uint32_t cl_j) const {
        const uint32_t lower = cl[static_cast<size_t>(x)] & cl_j;
        // The maximum of `lower`, if any, dominates all of it.
        for (int z = 31; z >= 0; --z) {
            if ((lower >> z) & 1u) {
                return (lower & ~cl[static_cast<size_t>(z)]) == 0;
            }
        }
        return false; // empty: impossible once 0 is below everything
    }

    // After adding j: every pair with common upper bounds has a unique
    // minimal one. Returns false when two incomparable minimal upper bounds
    // exist (the pair can never acquire a least upper bound later).
    bool lub_sane(int added) const {
        for (int x = 0; x <= added; ++x) {
            for (int y = x + 1; y <= added; ++y) {
                const uint32_t common = up[static_cast<size_t>(x)] & up[static_cast<size_t>(y)];
                if (common == 0) continue;
                int minimal = 0;
                for (int z = 0; z <= added && minimal < 2; ++z) {
                    if (!((common >> z) & 1u)) continue;
                    if ((common & cl[static_cast<size_t>(z)]) == (1u << z)) ++minimal;
                }
                if (minimal != 1) return false;
            }
        }
        return true;
    }

    template <typename Emit>
    void extend(int j, Emit&& emit) {
        if (j == n) {
            emit(*this);
            return;
        }
        const bool is_top = (j == n - 1);
        const uint32_t all_below = (1u << j) - 1u;
        const uint32_t first = is_top ? all_below : 1u; // must contain bottom
        const uint32_t last = all_below;
        for (uint32_t mask = first; mask <= last; ++mask) {
            if (!(mask & 1u)) continue;
            if (is_top && mask != all_below) continue;
            bool down_closed = true;
            for (int i = 0; i < j && down_closed; ++i) {
                if (((mask >> i) & 1u) && (cl[static_cast<size_t>(i)] & ~mask) != 0) down_closed = false;
            }
            if (!down_closed) continue;
            bool glbs = true;
            const uint32_t cl_j = mask | (1u << j);
            for (int x = 0; x < j && glbs; ++x) {
                if (!glb_ok(x, cl_j)) glbs = false;
            }
            if (!glbs) continue;

            cl[static_cast<size_t>(j)] = cl_j;
            up[static_cast<size_t>(j)] = 1u << j;
            std::vector<int> touched;
            for (int i = 0; i < j; ++i) {
                if ((mask >> i) & 1u) {
                    up[static_cast<size_t>(i)] |= 1u << j;
                    touched.push_back(i);
                }
            }
            if (lub_sane(j)) extend(j + 1, emit);
            for (int i : touched) up[static_cast<size_t>(i)] &= ~(1u << j);
        }
    }

    FiniteLattice to_lattice() const {
        std::vector<uint8_t> leq(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
                if ((cl[static_cast<size_t>(j)] >> i) & 1u) {
                    leq[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)] = 1;
                }
            }
        }
        return FiniteLattice::from_leq(generic_names(n), leq);
    }
};

void enumerate_size(int n, bool require_distributive, std::map<std::string, FiniteLattice>& out) {
    if (n == 1) {
        FiniteLattice one = FiniteLattice::from_leq(generic_names(1), {1});
        if (!require_distributive || check_distributive(one).ok) {
            out.emplace(canonical_leq_key(one), std::move(one));
        }
        return;
    }
    LatticeBuilder builder(n);
    builder.extend(1, [&](const LatticeBuilder& done) {
        FiniteLattice lat = done.to_lattice();
        std::string key = canonical_leq_key(lat);
        if (out.count(key)) return;
        if (require_distributive && !check_distributive(lat).ok) return;
        out.emplace(std::move(key), canonical_form(lat));
    });
}

} // namespace

std::string canonical_leq_key(const FiniteLattice& lat) {
    return canonical_search(lat).best_key;
}

FiniteLattice canonical_form(const FiniteLattice& lat) {
    const CanonicalSearch found = canonical_search(lat);
    const int n = lat.size();
    std::vector<uint8_t> leq(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (size_t p = 0; p < found.best_key.size(); ++p) {
        if (found.best_key[p] == '1') leq[p] = 1;
    }
    return FiniteLattice::from_leq(generic_names(n), leq);
}

std::vector<FiniteLattice> enumerate_lattices(int max_size, bool require_distributive) {
    if (max_size > 8) {
        throw SizeTooLargeForExhaustive("exhaustive lattice enumeration is capped at size 8, asked for " +
                                        std::to_string(max_size));
    }
    std::vector<FiniteLattice> result;
    for (int n = 1; n <= max_size; ++n) {
        std::map<std::string, FiniteLattice> classes;
        enumerate_size(n, require_distributive, classes);
        for (auto& [key, lat] : classes) {
            (void)key;
            result.push_back(std::move(lat));
        }
    }
    return result;
}

std::vector<FiniteLattice> sample_lattices(int min_size, int max_size, int count, uint64_t seed,
                                           bool require_distributive) {
    std::mt19937_64 rng(seed);
    std::vector<FiniteLattice> result;
    for (int n = min_size; n <= max_size; ++n) {
        if (n > 31) break; // builder masks are 32-bit; far beyond desk scale anyway
        std::map<std::string, FiniteLattice> classes;
        const int attempts = count * 200;
        for (int attempt = 0; attempt < attempts && static_cast<int>(classes.size()) < count; ++attempt) {
            // Random greedy run of the same constrained construction: pick a
            // uniformly random admissible down-set at each level.
            LatticeBuilder builder(n);
            bool dead = false;
            for (int j = 1; j < n && !dead; ++j) {
                const bool is_top = (j == n - 1);
                const uint32_t all_below = (1u << j) - 1u;
                std::vector<uint32_t> admissible;
                for (uint32_t mask = 1u; mask <= all_below; ++mask) {
                    if (!(mask & 1u)) continue;
                    if (is_top && mask != all_below) continue;
                    bool ok = true;
                    for (int i = 0; i < j && ok; ++i) {
                        if (((mask >> i) & 1u) && (builder.cl[static_cast<size_t>(i)] & ~mask) != 0) ok = false;
                    }
                    const uint32_t cl_j = mask | (1u << j);
                    for (int x = 0; x < j && ok; ++x) {
                        if (!builder.glb_ok(x, cl_j)) ok = false;
                    }
                    if (!ok) continue;
                    builder.cl[static_cast<size_t>(j)] = cl_j;
                    builder.up[static_cast<size_t>(j)] = 1u << j;
                    std::vector<int> touched;
                    for (int i = 0; i < j; ++i) {
                        if ((mask >> i) & 1u) {
                            builder.up[static_cast<size_t>(i)] |= 1u << j;
                            touched.push_back(i);
                        }
                    }
                    if (builder.lub_sane(j)) admissible.push_back(mask);
                    for (int i : touched) builder.up[static_cast<size_t>(i)] &= ~(1u << j);
                }
                if (admissible.empty()) {
                    dead = true;
                    break;
                }
                std::uniform_int_distribution<size_t> pick(0, admissible.size() - 1);
                const uint32_t mask = admissible[pick(rng)];
                builder.cl[static_cast<size_t>(j)] = mask | (1u << j);
                builder.up[static_cast<size_t>(j)] = 1u << j;
                for (int i = 0; i < j; ++i) {
                    if ((mask >> i) & 1u) builder.up[static_cast<size_t>(i)] |= 1u << j;
                }
            }
            if (dead) continue;
            FiniteLattice lat = builder.to_lattice();
            std::string key = canonical_leq_key(lat);
            if (classes.count(key)) continue;
            if (require_distributive && !check_distributive(lat).ok) continue;
            classes.emplace(std::move(key), canonical_form(lat));
        }
        for (auto& [key, lat] : classes) {
            (void)key;
            result.push_back(std::move(lat));
        }
    }
    return result;
}

} // namespace latmeas
