#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "latmed/lattice.hpp"

namespace latmed {

/// Coordinates of an element of a direct product, one index per factor.
using Coordinates = std::vector<Element>;

/// Mixed-radix encoding of product elements; the last factor varies fastest.
class ProductEncoding {
 public:
  explicit ProductEncoding(std::vector<std::size_t> radices);

  std::size_t size() const noexcept { return size_; }
  std::size_t factor_count() const noexcept { return radices_.size(); }
  std::span<const std::size_t> radices() const noexcept { return radices_; }

  Element encode(std::span<const Element> coords) const;
  Coordinates decode(Element flat) const;

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// The n-element chain 0 < 1 < ... < n-1.
Lattice chain(std::size_t n);

/// Direct product with coordinatewise order, encoded by ProductEncoding over
/// the factor sizes. An empty factor list yields the singleton lattice.
Lattice product(std::span<const Lattice> factors);
Lattice product(std::initializer_list<Lattice> factors);

/// The 2^k-element boolean lattice, as the k-fold power of the 2-element chain.
Lattice boolean(std::size_t k);

/// Stacks `upper` on `lower`, identifying the top of `lower` with the bottom of
/// `upper`. Elements of `lower` keep their indices; the remaining elements of
/// `upper` follow in their original relative order.
Lattice glued_sum(const Lattice& lower, const Lattice& upper);

/// Index of `element` of `upper` inside glued_sum(lower, upper).
Element glued_upper_index(const Lattice& lower, const Lattice& upper, Element element);

struct IntervalRemovalSpec {
  const Lattice& base;
  Element e;
  Element f;
};

/// Result of deleting the interval [e, f] from a lattice.
struct IntervalRemoval {
  Lattice lattice;
  /// ambient[i] is the base-lattice element represented by element i.
  std::vector<Element> ambient;
  /// Inverse of `ambient`; empty for removed elements.
  std::vector<std::optional<Element>> local;
};

/// The subposet base \ [e, f]. Surviving elements are renumbered in increasing
/// base order and covers are recomputed inside the subposet.
///
/// Throws ZeroForbidden (e is the bottom), NotComparable (e is not below f),
/// or NotJoinPrime.
IntervalRemoval remove_interval(const IntervalRemovalSpec& spec);

/// L(n, k): C_n^k x C_2 with [e, f] removed, together with the designated
/// elements and the three-entry witness profile.
struct LnkLattice {
  std::size_t n = 0;
  std::size_t k = 0;
  ProductEncoding ambient_encoding;
  IntervalRemoval removal;
  Coordinates e;
  Coordinates f;
  Element e_ambient = 0;
  Element f_ambient = 0;
  /// (0, ..., 0, n-1, 1) as an element of the lattice.
  Element z = 0;
  /// (0,...,0), (n-1,0,...,0,n-1,0), (0,n-1,0,...,0,n-1,0).
  std::vector<Element> xi;

  const Lattice& lattice() const noexcept { return removal.lattice; }
  Coordinates coordinates(Element y) const;
  /// Throws IndexError when the coordinates lie in the removed interval.
  Element element(std::span<const Element> coords) const;
};

/// Requires n >= 4 and k >= 3; throws BadParams otherwise.
LnkLattice build_lnk(std::size_t n, std::size_t k);

/// G(k): L(4, 3) glued below the 2^k-element boolean lattice. The profile and
/// z of L(4, 3) keep their indices. Requires k > 3.
struct GkLattice {
  std::size_t k = 0;
  Lattice lattice;
  Element z = 0;
  std::vector<Element> xi;
};

GkLattice build_gk(std::size_t k);

/// The nine-element nonplanar semimodular lattice of breadth two, with
/// elements A..I numbered 0..8.
Lattice figure1();

/// For a product lattice: the unique factor carrying the nonzero coordinate of
/// a nonzero join-prime element, or nullopt if `u` is zero or not join-prime.
/// Factor indices are 0-based. Throws NotAProduct for non-product lattices.
std::optional<std::size_t> product_join_prime_profile(const Lattice& lattice, Element u);

}  // namespace latmed
