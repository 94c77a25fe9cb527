#include "latmed/median.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <sstream>

#include "latmed/errors.hpp"
#include "latmed/parallel.hpp"

namespace latmed {

Profile::Profile(std::vector<Element> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw BadParams("a profile needs at least one entry");
}

void Profile::validate(const Lattice& lattice) const {
  for (Element x : entries_)
    if (x >= lattice.size())
      throw IndexError("profile entry " + std::to_string(x) + " out of range for n=" +
                       std::to_string(lattice.size()));
}

std::string to_string(const Profile& profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(profile[i]);
  }
  return out + ")";
}

Element c1(const Lattice& lattice, const Profile& xi) {
  xi.validate(lattice);
  return join_all(lattice, xi.entries());
}

std::uint64_t remoteness(const Lattice& lattice, Element y, const Profile& xi) {
  xi.validate(lattice);
  std::uint64_t total = 0;
  for (Element x : xi.entries()) total += lattice.distance(y, x);
  return total;
}

std::vector<std::uint64_t> remoteness_table(const Lattice& lattice, const Profile& xi) {
  xi.validate(lattice);
  const std::size_t n = lattice.size();
  const auto dist = lattice.distance_matrix();
  std::vector<std::uint64_t> table(n, 0);
  for (Element x : xi.entries())
    for (std::size_t y = 0; y < n; ++y) table[y] += dist[x * n + y];
  return table;
}

namespace {

std::size_t majority_threshold(std::size_t k, Majority rule) {
  return rule == Majority::strict ? k / 2 + 1 : (k + 3) / 2;
}

// Calls f(mask) for each index set of exactly `size` positions out of k.
template <typename F>
void for_each_index_set(std::size_t k, std::size_t size, F&& f) {
  if (size > k) return;
  if (k > 30) throw BadParams("profiles longer than 30 entries are not supported here");
  const std::uint32_t limit = std::uint32_t{1} << k;
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == size) f(mask);
}

// Meets and joins over larger index sets are absorbed by those over sets of
// exactly the threshold size, so only those are enumerated.
Element majority_bound(const Lattice& lattice, const Profile& xi, Majority rule, bool lower) {
  xi.validate(lattice);
  const std::size_t k = xi.size();
  Element acc = lower ? lattice.bottom() : lattice.top();
  for_each_index_set(k, majority_threshold(k, rule), [&](std::uint32_t mask) {
    Element inner = lower ? lattice.top() : lattice.bottom();
    for (std::size_t i = 0; i < k; ++i) {
      if (((mask >> i) & 1U) == 0) continue;
      inner = lower ? lattice.meet(inner, xi[i]) : lattice.join(inner, xi[i]);
    }
    acc = lower ? lattice.join(acc, inner) : lattice.meet(acc, inner);
  });
  return acc;
}

}  // namespace

Element m_lower(const Lattice& lattice, const Profile& xi, Majority rule) {
  return majority_bound(lattice, xi, rule, true);
}

Element m_upper(const Lattice& lattice, const Profile& xi, Majority rule) {
  return majority_bound(lattice, xi, rule, false);
}

MedianReport median_set(const Lattice& lattice, const Profile& xi, Majority rule) {
  std::vector<std::uint64_t> table = remoteness_table(lattice, xi);
  const std::uint64_t best = *std::min_element(table.begin(), table.end());
  const Element top_of_profile = c1(lattice, xi);

  ElementSet medians;
  std::optional<Element> violation;
  for (Element y = 0; y < lattice.size(); ++y) {
    if (table[y] != best) continue;
    medians.push_back(y);
    if (!violation && !lattice.leq(y, top_of_profile)) violation = y;
  }

  return MedianReport{
      .profile = xi,
      .remoteness = std::move(table),
      .min_remoteness = best,
      .medians = std::move(medians),
      .c1 = top_of_profile,
      .m_lower = m_lower(lattice, xi, rule),
      .m_upper = m_upper(lattice, xi, rule),
      .violation = violation,
  };
}

PBPartition pb_partition(const Lattice& lattice, const Profile& xi, Element z) {
  if (lattice.leq(z, c1(lattice, xi)))
    throw PreconditionFailed("z=" + std::to_string(z) + " is below c1 of the profile");
  PBPartition out;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (lattice.less(xi[i], z))
      out.below.push_back(i);
    else
      out.parallel.push_back(i);
  }
  return out;
}

std::string C1CheckResult::summary() const {
  if (!violation) return "no violation up to kMax=" + std::to_string(k_max);
  std::ostringstream out;
  out << "violation: profile (";
  for (std::size_t i = 0; i < violation->profile.size(); ++i)
    out << (i ? "," : "") << violation->profile[i];
  out << ") has median " << violation->median << " not below c1=" << violation->c1;
  return out.str();
}

namespace {

// Depth-first walk over non-decreasing tuples that start with `first`, in
// lexicographic order. Returns the first violation met.
std::optional<C1Violation> first_violation_in_slice(const Lattice& lattice, Element first,
                                                     std::size_t size, std::uint64_t& visited) {
  const std::size_t n = lattice.size();
  const auto dist = lattice.distance_matrix();
  const auto joins = lattice.join_table();

  std::vector<std::vector<std::uint64_t>> acc(size, std::vector<std::uint64_t>(n, 0));
  std::vector<Element> tuple(size, first);
  std::vector<Element> joined(size, first);
  for (std::size_t y = 0; y < n; ++y) acc[0][y] = dist[first * n + y];

  std::optional<C1Violation> found;
  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == size) {
      ++visited;
      const auto& table = acc[size - 1];
      const std::uint64_t best = *std::min_element(table.begin(), table.end());
      const Element top = joined[size - 1];
      const Bitset& below_top = lattice.down_set(top);
      for (Element y = 0; y < n; ++y) {
        if (table[y] == best && !below_top.test(y)) {
          found = C1Violation{.profile = tuple, .median = y, .c1 = top};
          return;
        }
      }
      return;
    }
    for (Element x = tuple[depth - 1]; x < n && !found; ++x) {
      tuple[depth] = x;
      joined[depth] = joins[joined[depth - 1] * n + x];
      const auto& prev = acc[depth - 1];
      auto& cur = acc[depth];
      for (std::size_t y = 0; y < n; ++y) cur[y] = prev[y] + dist[x * n + y];
      extend(depth + 1);
    }
  };
  extend(1);
  return found;
}

}  // namespace

C1CheckResult check_c1_property(const Lattice& lattice, std::size_t k_max, std::size_t workers) {
  if (k_max == 0) throw BadParams("kMax must be at least 1");
  const std::size_t n = lattice.size();
  C1CheckResult result;
  result.k_max = k_max;

  for (std::size_t size = 1; size <= k_max; ++size) {
    std::vector<std::optional<C1Violation>> per_slice(n);
    std::atomic<std::size_t> best_slice{n};
    std::atomic<std::uint64_t> visited_total{0};
    parallel_for(n, workers, [&](std::size_t first) {
      if (first > best_slice.load()) return;
      std::uint64_t visited = 0;
      per_slice[first] =
          first_violation_in_slice(lattice, static_cast<Element>(first), size, visited);
      visited_total += visited;
      if (per_slice[first]) {
        std::size_t current = best_slice.load();
        while (first < current && !best_slice.compare_exchange_weak(current, first)) {
        }
      }
    });
    for (auto& slice : per_slice) {
      if (slice) {
        result.violation = std::move(slice);
        result.profiles_checked = 0;
        return result;
      }
    }
    result.profiles_checked += visited_total.load();
  }
  return result;
}

std::size_t breadth(const Lattice& lattice) {
  const ElementSet irreducibles = join_irreducibles(lattice);
  const std::size_t m = irreducibles.size();
  std::size_t best = 0;

  // rests[i] is the join of the chosen set without its i-th member.
  std::vector<Element> chosen;
  std::vector<Element> rests;
  std::function<void(std::size_t, Element)> grow = [&](std::size_t start, Element joined) {
    best = std::max(best, chosen.size());
    if (chosen.size() + (m - start) <= best) return;
    for (std::size_t i = start; i < m; ++i) {
      const Element x = irreducibles[i];
      if (lattice.leq(x, joined)) continue;
      bool irredundant = true;
      for (std::size_t s = 0; s < chosen.size() && irredundant; ++s)
        irredundant = !lattice.leq(chosen[s], lattice.join(rests[s], x));
      if (!irredundant) continue;

      const std::vector<Element> saved = rests;
      for (Element& r : rests) r = lattice.join(r, x);
      rests.push_back(joined);
      chosen.push_back(x);
      grow(i + 1, lattice.join(joined, x));
      chosen.pop_back();
      rests = saved;
      if (best == m) return;
    }
  };
  grow(0, lattice.bottom());
  return best;
}

std::size_t breadth_bruteforce(const Lattice& lattice, std::size_t size_cap) {
  const std::size_t n = lattice.size();
  std::size_t best = 0;
  std::vector<Element> subset;
  std::function<void(Element)> visit = [&](Element start) {
    if (!subset.empty() && subset.size() > best) {
      const Element whole = join_all(lattice, subset);
      bool irredundant = true;
      for (std::size_t s = 0; s < subset.size() && irredundant; ++s) {
        Element others = lattice.bottom();
        for (std::size_t t = 0; t < subset.size(); ++t)
          if (t != s) others = lattice.join(others, subset[t]);
        irredundant = others != whole;
      }
      if (irredundant) best = subset.size();
    }
    if (subset.size() == size_cap) return;
    for (Element x = start; x < n; ++x) {
      subset.push_back(x);
      visit(x + 1);
      subset.pop_back();
    }
  };
  visit(0);
  return best;
}

std::uint64_t lnk_closed_form_remoteness(const LnkLattice& lnk, Element y) {
  const Coordinates c = lnk.coordinates(y);
  const std::size_t k = lnk.k;
  std::int64_t r = 4 * (static_cast<std::int64_t>(lnk.n) - 1);
  r += c[0] + c[1];
  r -= c[k - 1];
  r += 3 * static_cast<std::int64_t>(c[k]);
  for (std::size_t i = 2; i + 1 < k; ++i) r += 3 * static_cast<std::int64_t>(c[i]);
  return static_cast<std::uint64_t>(r);
}

}  // namespace latmed
