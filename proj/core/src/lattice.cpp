#include "latmed/lattice.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "latmed/errors.hpp"

namespace latmed {

namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

std::string pair_text(Element a, Element b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Least element of `bounds` with respect to the order whose up-sets are `up`,
// using `topo_pos` to pick the only possible candidate. Returns n if none.
Element least_of(const Bitset& bounds, const std::vector<Bitset>& up,
                 const std::vector<std::size_t>& topo_pos) {
  const std::size_t n = up.size();
  std::size_t best = n;
  std::size_t best_pos = n;
  bounds.for_each([&](std::size_t v) {
    if (topo_pos[v] < best_pos) {
      best_pos = topo_pos[v];
      best = v;
    }
  });
  if (best == n || !bounds.is_subset_of(up[best])) return static_cast<Element>(n);
  return static_cast<Element>(best);
}

}  // namespace

Lattice Lattice::from_covers(std::size_t n, std::span<const CoverPair> covers, std::string name) {
  if (n == 0) throw NotALattice("a lattice needs at least one element");
  if (n > std::numeric_limits<Element>::max() / 2) throw IndexError("element count too large");

  Lattice lat;
  lat.n_ = n;
  lat.name_ = std::move(name);
  lat.covers_.assign(covers.begin(), covers.end());
  std::sort(lat.covers_.begin(), lat.covers_.end());

  for (std::size_t i = 0; i < lat.covers_.size(); ++i) {
    const auto [a, b] = lat.covers_[i];
    if (a >= n || b >= n)
      throw IndexError("cover " + pair_text(a, b) + " out of range for n=" + std::to_string(n));
    if (a == b) throw CycleError("self-loop at element " + std::to_string(a));
    if (i > 0 && lat.covers_[i - 1] == lat.covers_[i])
      throw NotALattice("duplicate cover pair " + pair_text(a, b));
  }

  lat.upper_.assign(n, {});
  lat.lower_.assign(n, {});
  for (const auto& [a, b] : lat.covers_) {
    lat.upper_[a].push_back(b);
    lat.lower_[b].push_back(a);
  }

  // Kahn's algorithm; the smallest available index goes first so the order
  // is reproducible.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& c : lat.covers_) ++indegree[c.upper];
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(static_cast<Element>(v));
  lat.topo_.reserve(n);
  while (!ready.empty()) {
    const Element v = ready.top();
    ready.pop();
    lat.topo_.push_back(v);
    for (Element w : lat.upper_[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (lat.topo_.size() != n) throw CycleError("cover relation contains a cycle");

  std::vector<std::size_t> topo_pos(n);
  for (std::size_t i = 0; i < n; ++i) topo_pos[lat.topo_[i]] = i;

  lat.up_.assign(n, Bitset(n));
  lat.down_.assign(n, Bitset(n));
  for (auto it = lat.topo_.rbegin(); it != lat.topo_.rend(); ++it) {
    const Element v = *it;
    lat.up_[v].set(v);
    for (Element w : lat.upper_[v]) lat.up_[v] |= lat.up_[w];
  }
  for (const Element v : lat.topo_) {
    lat.down_[v].set(v);
    for (Element w : lat.lower_[v]) lat.down_[v] |= lat.down_[w];
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (Element b : lat.upper_[a]) {
      for (Element c : lat.upper_[a]) {
        if (c != b && lat.up_[c].test(b))
          throw NotALattice("cover " + pair_text(static_cast<Element>(a), b) +
                            " is implied by transitivity through " + std::to_string(c));
      }
    }
  }

  std::vector<Element> minimal;
  std::vector<Element> maximal;
  for (std::size_t v = 0; v < n; ++v) {
    if (lat.lower_[v].empty()) minimal.push_back(static_cast<Element>(v));
    if (lat.upper_[v].empty()) maximal.push_back(static_cast<Element>(v));
  }
  if (minimal.size() != 1) throw NotALattice("no unique bottom element");
  if (maximal.size() != 1) throw NotALattice("no unique top element");
  lat.bottom_ = minimal.front();
  lat.top_ = maximal.front();

  std::vector<std::size_t> reverse_pos(n);
  for (std::size_t i = 0; i < n; ++i) reverse_pos[lat.topo_[i]] = n - 1 - i;

  lat.join_.assign(n * n, 0);
  lat.meet_.assign(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      const Element j = least_of(lat.up_[x] & lat.up_[y], lat.up_, topo_pos);
      if (j == n)
        throw NotALattice("no join for " + pair_text(static_cast<Element>(x), static_cast<Element>(y)));
      const Element m = least_of(lat.down_[x] & lat.down_[y], lat.down_, reverse_pos);
      if (m == n)
        throw NotALattice("no meet for " + pair_text(static_cast<Element>(x), static_cast<Element>(y)));
      lat.join_[x * n + y] = lat.join_[y * n + x] = j;
      lat.meet_[x * n + y] = lat.meet_[y * n + x] = m;
    }
  }

  lat.height_.assign(n, 0);
  for (const Element v : lat.topo_)
    for (Element w : lat.upper_[v]) lat.height_[w] = std::max(lat.height_[w], lat.height_[v] + 1);

  lat.dist_.assign(n * n, kUnreached);
  std::vector<Element> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::uint32_t* row = &lat.dist_[s * n];
    row[s] = 0;
    queue.clear();
    queue.push_back(static_cast<Element>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element v = queue[head];
      auto visit = [&](Element w) {
        if (row[w] == kUnreached) {
          row[w] = row[v] + 1;
          queue.push_back(w);
        }
      };
      for (Element w : lat.upper_[v]) visit(w);
      for (Element w : lat.lower_[v]) visit(w);
    }
  }

  return lat;
}

void Lattice::check(Element x) const {
  if (x >= n_)
    throw IndexError("element " + std::to_string(x) + " out of range for n=" + std::to_string(n_));
}

bool Lattice::leq(Element x, Element y) const {
  check(x);
  check(y);
  return up_[x].test(y);
}

bool Lattice::is_cover(Element lower, Element upper) const {
  check(lower);
  check(upper);
  const auto& ups = upper_[lower];
  return std::find(ups.begin(), ups.end(), upper) != ups.end();
}

Element Lattice::join(Element x, Element y) const {
  check(x);
  check(y);
  return join_[x * n_ + y];
}

Element Lattice::meet(Element x, Element y) const {
  check(x);
  check(y);
  return meet_[x * n_ + y];
}

std::uint32_t Lattice::distance(Element x, Element y) const {
  check(x);
  check(y);
  return dist_[x * n_ + y];
}

std::uint32_t Lattice::height(Element x) const {
  check(x);
  return height_[x];
}

std::span<const Element> Lattice::upper_covers(Element x) const {
  check(x);
  return upper_[x];
}

std::span<const Element> Lattice::lower_covers(Element x) const {
  check(x);
  return lower_[x];
}

const Bitset& Lattice::up_set(Element x) const {
  check(x);
  return up_[x];
}

const Bitset& Lattice::down_set(Element x) const {
  check(x);
  return down_[x];
}

Element join_all(const Lattice& lattice, std::span<const Element> elements) {
  Element acc = lattice.bottom();
  for (Element e : elements) acc = lattice.join(acc, e);
  return acc;
}

Element meet_all(const Lattice& lattice, std::span<const Element> elements) {
  Element acc = lattice.top();
  for (Element e : elements) acc = lattice.meet(acc, e);
  return acc;
}

std::size_t length(const Lattice& lattice) { return lattice.height(lattice.top()); }

bool is_graded(const Lattice& lattice) {
  for (const auto& [a, b] : lattice.cover_pairs())
    if (lattice.height(b) != lattice.height(a) + 1) return false;
  return true;
}

bool is_semimodular(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  const auto joins = lattice.join_table();
  const auto meets = lattice.meet_table();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (lattice.is_cover(meets[x * n + y], x) && !lattice.is_cover(y, joins[x * n + y]))
        return false;
    }
  }
  return true;
}

bool is_lower_semimodular(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  const auto joins = lattice.join_table();
  const auto meets = lattice.meet_table();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (lattice.is_cover(x, joins[x * n + y]) && !lattice.is_cover(meets[x * n + y], y))
        return false;
    }
  }
  return true;
}

bool is_modular(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  const auto j = lattice.join_table();
  const auto m = lattice.meet_table();
  for (Element x = 0; x < n; ++x) {
    const Bitset& above = lattice.up_set(x);
    for (std::size_t z = above.find_first(); z < n; z = above.find_next(z + 1)) {
      for (Element y = 0; y < n; ++y) {
        if (j[x * n + m[y * n + z]] != m[j[x * n + y] * n + z]) return false;
      }
    }
  }
  return true;
}

bool is_distributive(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  const auto j = lattice.join_table();
  const auto m = lattice.meet_table();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (m[x * n + j[y * n + z]] != j[m[x * n + y] * n + m[x * n + z]]) return false;
  return true;
}

ElementSet interval(const Lattice& lattice, Element a, Element b) {
  if (!lattice.leq(a, b))
    throw EmptyInterval("element " + std::to_string(a) + " is not below " + std::to_string(b));
  ElementSet out;
  (lattice.up_set(a) & lattice.down_set(b)).for_each([&](std::size_t v) {
    out.push_back(static_cast<Element>(v));
  });
  return out;
}

ElementSet join_irreducibles(const Lattice& lattice) {
  ElementSet out;
  for (Element v = 0; v < lattice.size(); ++v)
    if (lattice.lower_covers(v).size() == 1) out.push_back(v);
  return out;
}

bool is_join_prime(const Lattice& lattice, Element u) {
  if (u == lattice.bottom()) return false;
  const std::size_t n = lattice.size();
  const Bitset& above = lattice.up_set(u);
  const auto joins = lattice.join_table();
  for (Element x = 0; x < n; ++x) {
    if (above.test(x)) continue;
    for (Element y = x + 1; y < n; ++y) {
      if (above.test(y)) continue;
      if (above.test(joins[x * n + y])) return false;
    }
  }
  return true;
}

bool is_codistributive(const Lattice& lattice, Element u) {
  const std::size_t n = lattice.size();
  const auto j = lattice.join_table();
  const auto m = lattice.meet_table();
  if (u >= n) throw IndexError("element " + std::to_string(u) + " out of range");
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y)
      if (m[u * n + j[x * n + y]] != j[m[u * n + x] * n + m[u * n + y]]) return false;
  return true;
}

}  // namespace latmed
