#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "latmed/bitset.hpp"

namespace latmed {

/// Dense element index, 0..size()-1.
using Element = std::uint32_t;

/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

/// `lower` is covered by `upper`.
struct CoverPair {
  Element lower = 0;
  Element upper = 0;

  auto operator<=>(const CoverPair&) const = default;
};

class Lattice;
Lattice product(std::span<const Lattice> factors);

/// Immutable finite lattice given by its cover relation.
///
/// Construction validates the input and eagerly derives the order relation
/// (as up-set and down-set bitsets), the join and meet tables, the height
/// function and the covering-graph distance matrix. Element labels are kept
/// exactly as supplied.
class Lattice {
 public:
  /// Builds a lattice on elements 0..n-1 from a transitively reduced cover list.
  ///
  /// Throws IndexError for out-of-range indices, CycleError for cyclic input
  /// (including self-loops), and NotALattice when the order has no unique
  /// bottom or top, some pair has no join or meet, a cover pair is repeated,
  /// or a cover pair is implied by transitivity.
  static Lattice from_covers(std::size_t n, std::span<const CoverPair> covers,
                             std::string name = {});

  std::size_t size() const noexcept { return n_; }
  const std::string& name() const noexcept { return name_; }
  /// Same lattice under a different label.
  Lattice with_name(std::string name) && {
    name_ = std::move(name);
    return std::move(*this);
  }

  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element x, Element y) const;
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }
  /// True iff `upper` covers `lower`.
  bool is_cover(Element lower, Element upper) const;

  Element join(Element x, Element y) const;
  Element meet(Element x, Element y) const;
  /// Shortest path length in the undirected covering graph.
  std::uint32_t distance(Element x, Element y) const;

  /// Length of the longest chain from the bottom to `x`.
  std::uint32_t height(Element x) const;

  /// Cover pairs sorted lexicographically.
  const std::vector<CoverPair>& cover_pairs() const noexcept { return covers_; }
  std::span<const Element> upper_covers(Element x) const;
  std::span<const Element> lower_covers(Element x) const;

  const Bitset& up_set(Element x) const;
  const Bitset& down_set(Element x) const;

  /// A linear extension of the order (bottom first).
  std::span<const Element> topological_order() const noexcept { return topo_; }

  /// Row-major tables; entry x * size() + y.
  std::span<const Element> join_table() const noexcept { return join_; }
  std::span<const Element> meet_table() const noexcept { return meet_; }
  std::span<const std::uint32_t> distance_matrix() const noexcept { return dist_; }

  /// Factor sizes when built by `product`, empty otherwise.
  std::span<const std::size_t> factor_sizes() const noexcept { return factor_sizes_; }
  bool is_product() const noexcept { return !factor_sizes_.empty(); }

  /// Structural identity: same size, same labelled cover relation, same name.
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_ && a.name_ == b.name_;
  }

 private:
  Lattice() = default;
  void check(Element x) const;

  friend Lattice product(std::span<const Lattice> factors);

  std::size_t n_ = 0;
  std::string name_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<CoverPair> covers_;
  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<Bitset> up_;
  std::vector<Bitset> down_;
  std::vector<Element> topo_;
  std::vector<std::uint32_t> height_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> factor_sizes_;
};

/// Join of a family; the empty join is the bottom.
Element join_all(const Lattice& lattice, std::span<const Element> elements);
/// Meet of a family; the empty meet is the top.
Element meet_all(const Lattice& lattice, std::span<const Element> elements);

/// Longest chain size minus one.
std::size_t length(const Lattice& lattice);

/// True iff some height function increases by exactly one along every cover.
bool is_graded(const Lattice& lattice);

/// Upper semimodularity: x∧y ≺ x implies y ≺ x∨y.
bool is_semimodular(const Lattice& lattice);
/// Dual of is_semimodular: x ≺ x∨y implies x∧y ≺ y.
bool is_lower_semimodular(const Lattice& lattice);
bool is_modular(const Lattice& lattice);
bool is_distributive(const Lattice& lattice);

/// All z with a ≤ z ≤ b. Throws EmptyInterval when a is not below b.
ElementSet interval(const Lattice& lattice, Element a, Element b);

/// Nonzero elements with exactly one lower cover.
ElementSet join_irreducibles(const Lattice& lattice);

/// u ≤ x∨y forces u ≤ x or u ≤ y. The bottom is never join-prime: it lies
/// below the empty join.
bool is_join_prime(const Lattice& lattice, Element u);

/// u∧(x∨y) = (u∧x)∨(u∧y) for all x, y.
bool is_codistributive(const Lattice& lattice, Element u);

}  // namespace latmed
