#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latmed/constructions.hpp"
#include "latmed/lattice.hpp"

namespace latmed {

/// A k-tuple of lattice elements, k >= 1, repetition allowed.
class Profile {
 public:
  /// Throws BadParams for an empty tuple.
  explicit Profile(std::vector<Element> entries);
  Profile(std::initializer_list<Element> entries)
      : Profile(std::vector<Element>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const Element> entries() const noexcept { return entries_; }
  Element operator[](std::size_t i) const { return entries_.at(i); }

  /// Throws IndexError when some entry is not an element of `lattice`.
  void validate(const Lattice& lattice) const;

  bool operator==(const Profile&) const = default;

 private:
  std::vector<Element> entries_;
};

std::string to_string(const Profile& profile);

/// How "|I| >= k/2 + 1" selects the index sets in m(ξ) and m′(ξ).
enum class Majority {
  /// |I| > k/2, i.e. |I| >= floor(k/2) + 1. For odd k this is |I| >= (k+1)/2.
  strict,
  /// 2|I| >= k + 2 over the reals. For odd k this demands one more index than
  /// `strict`, and for k = 1 no index set qualifies.
  literal,
};

struct MedianReport {
  Profile profile;
  /// remoteness[y] = r(y, ξ) for every element y.
  std::vector<std::uint64_t> remoteness;
  std::uint64_t min_remoteness = 0;
  /// All minimisers, ascending.
  ElementSet medians;
  Element c1 = 0;
  Element m_lower = 0;
  Element m_upper = 0;
  /// Smallest median not below c1, if any.
  std::optional<Element> violation;
};

/// Join of every profile entry.
Element c1(const Lattice& lattice, const Profile& xi);

/// Sum of covering-graph distances from y to the profile entries.
std::uint64_t remoteness(const Lattice& lattice, Element y, const Profile& xi);

/// Remoteness of every element at once.
std::vector<std::uint64_t> remoteness_table(const Lattice& lattice, const Profile& xi);

/// Join of the meets of all majority index sets.
Element m_lower(const Lattice& lattice, const Profile& xi, Majority rule = Majority::strict);
/// Meet of the joins of all majority index sets.
Element m_upper(const Lattice& lattice, const Profile& xi, Majority rule = Majority::strict);

MedianReport median_set(const Lattice& lattice, const Profile& xi,
                        Majority rule = Majority::strict);

/// Profile positions (0-based) split by their relation to z.
struct PBPartition {
  /// Positions i with x_i incomparable to z.
  std::vector<std::size_t> parallel;
  /// Positions i with x_i < z.
  std::vector<std::size_t> below;
};

/// Requires z not below c1(ξ); throws PreconditionFailed otherwise.
PBPartition pb_partition(const Lattice& lattice, const Profile& xi, Element z);

struct C1Violation {
  std::vector<Element> profile;
  Element median = 0;
  Element c1 = 0;
};

/// Outcome of a bounded c1-median-property check.
struct C1CheckResult {
  std::size_t k_max = 0;
  /// Number of multisets examined when no violation was found.
  std::uint64_t profiles_checked = 0;
  /// Lexicographically first violating multiset, with its smallest bad median.
  std::optional<C1Violation> violation;

  bool holds() const noexcept { return !violation.has_value(); }
  /// "no violation up to kMax=<k>" or a description of the witness.
  std::string summary() const;
};

/// Every multiset profile of size 1..k_max, sizes in increasing order and each
/// size in lexicographic order of its sorted entries. Stops at the first
/// violation. `workers` = 0 picks default_worker_count(); the result does not
/// depend on the worker count.
C1CheckResult check_c1_property(const Lattice& lattice, std::size_t k_max,
                                std::size_t workers = 0);

/// Maximum size of an irredundant join; 0 for the singleton lattice. Searches
/// irredundant subsets of the join-irreducible elements only.
std::size_t breadth(const Lattice& lattice);

/// Largest m <= size_cap such that some m-element subset of the lattice has an
/// irredundant join, found by scanning all subsets.
std::size_t breadth_bruteforce(const Lattice& lattice, std::size_t size_cap);

/// r(y, ξ) for the witness profile of L(n, k), computed from coordinates:
/// 4(n-1) + y1 + y2 - yk + 3 y(k+1) + 3 (y3 + ... + y(k-1)).
std::uint64_t lnk_closed_form_remoteness(const LnkLattice& lnk, Element y);

}  // namespace latmed
