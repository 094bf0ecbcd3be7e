#ifndef LATMEAS_ENUMERATE_HPP
#define LATMEAS_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "latmeas/lattice.hpp"

namespace latmeas {

// Lexicographically least row-major 0/1 string of the permuted leq matrix,
// over all element permutations that send bottom to 0 and top to n-1. Two
// lattices are isomorphic iff their keys match.
std::string canonical_leq_key(const FiniteLattice& lat);

// The lattice relabeled by its key-minimizing permutation, elements named
// e0..e{n-1}, bottom at index 0 and top at n-1.
FiniteLattice canonical_form(const FiniteLattice& lat);

// All non-isomorphic bounded lattices with 1..max_size elements, one
// canonical representative per isomorphism class, in deterministic order
// (size ascending, then canonical key). Exhaustive search is capped at
// size 8; beyond that throws SizeTooLargeForExhaustive.
std::vector<FiniteLattice> enumerate_lattices(int max_size, bool require_distributive);

// Seeded random generation for sizes beyond the exhaustive cap. Emits up to
// `count` pairwise non-isomorphic lattices per size in [min_size, max_size],
// deterministic for a fixed seed.
std::vector<FiniteLattice> sample_lattices(int min_size, int max_size, int count, uint64_t seed,
                                           bool require_distributive);

} // namespace latmeas

#endif
