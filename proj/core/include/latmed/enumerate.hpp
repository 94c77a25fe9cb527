#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "latmed/lattice.hpp"

namespace latmed {

inline constexpr std::size_t kDefaultEnumerationCap = 8;
/// Largest size accepted even with an explicit cap.
inline constexpr std::size_t kMaxEnumerationSize = 10;

/// One representative per isomorphism class of n-element lattices, sorted by
/// canonical code. Representatives are labelled canonically: bottom is 0, top
/// is n-1 and labels increase with height.
///
/// Lattices are grown one height level at a time from the bottom; each new
/// element picks an antichain of lower covers, prefixes that are not
/// meet-semilattices are pruned, and a top is added at the end.
///
/// Throws CapExceeded when n exceeds `cap` or kMaxEnumerationSize, BadParams
/// when n is 0.
std::vector<Lattice> enumerate_lattices(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// All classes of sizes 1..max_n, in increasing size.
std::vector<Lattice> enumerate_lattices_up_to(std::size_t max_n,
                                              std::size_t cap = kDefaultEnumerationCap);

/// Isomorphism invariant that separates non-isomorphic lattices: the
/// lexicographically least order matrix over all labellings compatible with a
/// colour refinement of the covering graph. Lattices above 32 elements are
/// rejected with CapExceeded.
std::vector<std::uint64_t> canonical_code(const Lattice& lattice);

}  // namespace latmed
