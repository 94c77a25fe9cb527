#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "latmed/constructions.hpp"
#include "latmed/enumerate.hpp"
#include "latmed/lattice_file.hpp"
#include "latmed/median.hpp"
#include "oracles.hpp"

using namespace latmed;

namespace {

constexpr std::uint32_t kSeed = 20240917;
constexpr int kRandomSamples = 60;

// Seeded random join-closed sublattices of a few bases, plus every lattice of
// at most six elements.
const std::vector<Lattice>& samples() {
  static const std::vector<Lattice> all = [] {
    std::mt19937 rng(kSeed);
    const std::vector<Lattice> bases{boolean(4), product({chain(3), chain(3), chain(2)}), figure1(),
                                     product({figure1(), chain(2)})};
    std::vector<Lattice> v;
    for (int i = 0; i < kRandomSamples; ++i) {
      const Lattice& base = bases[static_cast<std::size_t>(i) % bases.size()];
      v.push_back(oracle::random_join_closed(base, rng, 0.25 + 0.1 * (i % 5)));
    }
    for (Lattice& l : enumerate_lattices_up_to(6)) v.push_back(std::move(l));
    return v;
  }();
  return all;
}

Profile random_profile(const Lattice& l, std::mt19937& rng, std::size_t k) {
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(l.size() - 1));
  std::vector<Element> entries(k);
  for (Element& e : entries) e = pick(rng);
  return Profile(std::move(entries));
}

}  // namespace

TEST_CASE("distance matrix is a metric with unit cover edges") {
  for (const Lattice& l : samples()) {
    const std::size_t n = l.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        REQUIRE(l.distance(x, y) == l.distance(y, x));
        REQUIRE((l.distance(x, y) == 0) == (x == y));
        REQUIRE((l.distance(x, y) == 1) == (l.is_cover(x, y) || l.is_cover(y, x)));
        for (Element z = 0; z < n; ++z) REQUIRE(l.distance(x, z) <= l.distance(x, y) + l.distance(y, z));
      }
    }
  }
}

TEST_CASE("semimodular distance identities") {
  for (const Lattice& l : samples()) {
    if (!is_semimodular(l)) continue;
    const std::size_t n = l.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const Element j = l.join(x, y);
        REQUIRE(l.distance(x, y) == (l.height(j) - l.height(x)) + (l.height(j) - l.height(y)));
        REQUIRE(l.distance(x, y) == l.distance(x, j) + l.distance(j, y));
        if (!l.leq(x, y)) continue;
        for (Element w = 0; w < n; ++w)
          if (l.leq(y, w)) REQUIRE(l.distance(x, w) == l.distance(x, y) + l.distance(y, w));
      }
    }
  }
}

TEST_CASE("order-theoretic implication chain") {
  for (const Lattice& l : samples()) {
    const bool d = is_distributive(l);
    const bool m = is_modular(l);
    const bool s = is_semimodular(l);
    CHECK((!d || m));
    CHECK((!m || s));
    CHECK((!m || is_lower_semimodular(l)));
    CHECK((!s || is_graded(l)));
  }
}

TEST_CASE("join-prime and codistributive implications") {
  for (const Lattice& l : samples()) {
    const ElementSet irreducible = join_irreducibles(l);
    for (Element u = 0; u < l.size(); ++u) {
      const bool ji = std::binary_search(irreducible.begin(), irreducible.end(), u);
      const bool jp = is_join_prime(l, u);
      CHECK((!jp || ji));
      CHECK((!(ji && is_codistributive(l, u)) || jp));
    }
  }
}

TEST_CASE("median reports are consistent and order-invariant") {
  std::mt19937 rng(kSeed + 1);
  for (const Lattice& l : samples()) {
    for (std::size_t k = 1; k <= 4; ++k) {
      const Profile xi = random_profile(l, rng, k);
      const MedianReport r = median_set(l, xi);
      REQUIRE_FALSE(r.medians.empty());
      CHECK(std::is_sorted(r.medians.begin(), r.medians.end()));
      for (Element y = 0; y < l.size(); ++y) {
        CHECK(r.remoteness[y] == remoteness(l, y, xi));
        const bool is_median = std::binary_search(r.medians.begin(), r.medians.end(), y);
        CHECK(is_median == (r.remoteness[y] == r.min_remoteness));
      }
      bool any_above = false;
      for (Element y : r.medians) any_above = any_above || !l.leq(y, r.c1);
      CHECK(r.violation.has_value() == any_above);

      std::vector<Element> shuffled(xi.entries().begin(), xi.entries().end());
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const MedianReport s = median_set(l, Profile(shuffled));
      CHECK(s.medians == r.medians);
      CHECK(s.remoteness == r.remoteness);
      CHECK(s.m_lower == r.m_lower);
      CHECK(s.m_upper == r.m_upper);
    }
  }
}

TEST_CASE("majority bounds are ordered") {
  std::mt19937 rng(kSeed + 2);
  for (const Lattice& l : samples()) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const Profile xi = random_profile(l, rng, k);
      CHECK(l.leq(m_lower(l, xi), m_upper(l, xi)));
      CHECK(l.leq(meet_all(l, xi.entries()), m_lower(l, xi)));
      CHECK(l.leq(m_upper(l, xi), c1(l, xi)));
    }
  }
}

TEST_CASE("two-entry profiles in semimodular lattices") {
  for (const Lattice& l : samples()) {
    if (!is_semimodular(l)) continue;
    for (Element a = 0; a < l.size(); ++a)
      for (Element b = a; b < l.size(); ++b)
        for (Element y : median_set(l, Profile{a, b}).medians) CHECK(l.leq(y, l.join(a, b)));
  }
}

TEST_CASE("breadth agrees with brute force on random sublattices") {
  for (const Lattice& l : samples()) {
    if (l.size() > 14) continue;
    CAPTURE(print_lattice(l));
    CHECK(breadth(l) == breadth_bruteforce(l, l.size()));
  }
}

TEST_CASE("file round trip on random sublattices") {
  for (const Lattice& l : samples()) {
    const std::string text = print_lattice(l);
    CHECK(parse_lattice(text) == l);
  }
}

TEST_CASE("interval removal from products of semimodular factors") {
  // Each factor is a semimodular lattice; f takes the top in the join-prime
  // coordinate of e, so the result is a semimodular join-subsemilattice whose
  // covers are ambient covers.
  std::mt19937 rng(kSeed + 3);
  std::vector<Lattice> factors{chain(2), chain(3), chain(4), boolean(2), figure1()};
  for (const Lattice& l : enumerate_lattices_up_to(5))
    if (is_semimodular(l)) factors.push_back(l);

  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<std::size_t> pick(0, factors.size() - 1);
    const std::vector<Lattice> parts{factors[pick(rng)], factors[pick(rng)]};
    const Lattice k = product(parts);
    const ProductEncoding enc({parts[0].size(), parts[1].size()});
    for (Element e = 0; e < k.size(); ++e) {
      const auto coordinate = product_join_prime_profile(k, e);
      if (!coordinate) continue;
      const auto ce = enc.decode(e);
      std::vector<Element> cf = ce;
      cf[*coordinate] = parts[*coordinate].top();
      for (std::size_t other = 0; other < 2; ++other) {
        if (other == *coordinate) continue;
        std::uniform_int_distribution<Element> any(0, static_cast<Element>(parts[other].size() - 1));
        cf[other] = any(rng);
      }
      const Element f = enc.encode(cf);
      const IntervalRemoval r = remove_interval({.base = k, .e = e, .f = f});
      if (r.lattice.size() == 0) continue;
      CHECK(is_semimodular(r.lattice));
      for (Element x = 0; x < r.lattice.size(); ++x) {
        for (Element y = 0; y < r.lattice.size(); ++y) {
          CHECK(r.ambient[r.lattice.join(x, y)] == k.join(r.ambient[x], r.ambient[y]));
          CHECK(r.lattice.is_cover(x, y) == k.is_cover(r.ambient[x], r.ambient[y]));
        }
      }
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("glued sums of semimodular lattices stay semimodular") {
  std::vector<Lattice> parts{chain(1), chain(3), boolean(2), figure1()};
  for (const Lattice& l : enumerate_lattices_up_to(5))
    if (is_semimodular(l)) parts.push_back(l);
  for (const Lattice& a : parts)
    for (const Lattice& b : parts) CHECK(is_semimodular(glued_sum(a, b)));
}
