#include "latmed/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iterator>
#include <map>
#include <string>

#include "latmed/errors.hpp"

namespace latmed {

namespace {

using Mask = std::uint32_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

struct Canonical {
  std::vector<std::uint64_t> code;
  /// position[v] is the canonical label of element v.
  std::vector<std::size_t> position;
};

// Strict lower covers of v: maximal elements of down[v] \ {v}.
Mask lower_cover_mask(const std::vector<Mask>& down, std::size_t v) {
  const Mask below = down[v] & ~bit(v);
  Mask shadowed = 0;
  for (Mask rest = below; rest != 0; rest &= rest - 1) {
    const auto w = static_cast<std::size_t>(std::countr_zero(rest));
    shadowed |= down[w] & ~bit(w);
  }
  return below & ~shadowed;
}

std::vector<std::size_t> colour_refinement(const std::vector<Mask>& down) {
  const std::size_t n = down.size();
  std::vector<Mask> up(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (Mask rest = down[v]; rest != 0; rest &= rest - 1)
      up[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(v);

  std::vector<Mask> lower(n);
  std::vector<Mask> upper(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    lower[v] = lower_cover_mask(down, v);
    for (Mask rest = lower[v]; rest != 0; rest &= rest - 1)
      upper[static_cast<std::size_t>(std::countr_zero(rest))] |= bit(v);
  }

  // Elements sorted by down-set size form a linear extension.
  std::vector<std::size_t> order(n);
  for (std::size_t v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::popcount(down[a]) < std::popcount(down[b]);
  });
  std::vector<int> height(n, 0);
  for (std::size_t v : order)
    for (Mask rest = lower[v]; rest != 0; rest &= rest - 1)
      height[v] = std::max(height[v], height[static_cast<std::size_t>(std::countr_zero(rest))] + 1);

  std::vector<std::vector<int>> keys(n);
  for (std::size_t v = 0; v < n; ++v)
    keys[v] = {height[v], std::popcount(down[v]), std::popcount(up[v]), std::popcount(lower[v]),
               std::popcount(upper[v])};

  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> distinct = keys;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t v = 0; v < n; ++v)
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();

    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> below;
      std::vector<int> above;
      for (Mask rest = lower[v]; rest != 0; rest &= rest - 1)
        below.push_back(static_cast<int>(colour[static_cast<std::size_t>(std::countr_zero(rest))]));
      for (Mask rest = upper[v]; rest != 0; rest &= rest - 1)
        above.push_back(static_cast<int>(colour[static_cast<std::size_t>(std::countr_zero(rest))]));
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      std::vector<int> key{static_cast<int>(colour[v])};
      key.insert(key.end(), below.begin(), below.end());
      key.push_back(-1);
      key.insert(key.end(), above.begin(), above.end());
      keys[v] = std::move(key);
    }
  }
  return colour;
}

Canonical canonicalize(const std::vector<Mask>& down) {
  const std::size_t n = down.size();
  const std::vector<std::size_t> colour = colour_refinement(down);

  std::vector<std::vector<std::size_t>> cells;
  {
    std::map<std::size_t, std::vector<std::size_t>> by_colour;
    for (std::size_t v = 0; v < n; ++v) by_colour[colour[v]].push_back(v);
    for (auto& [c, members] : by_colour) cells.push_back(std::move(members));
  }

  const std::size_t words = (n * n + 63) / 64;
  Canonical best{.code = {}, .position = {}};
  std::vector<std::size_t> label_to_element(n);
  std::vector<std::uint64_t> code(words);

  auto evaluate = [&] {
    std::fill(code.begin(), code.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Mask d = down[label_to_element[i]];
      for (std::size_t j = 0; j < n; ++j) {
        // bit (j, i) records label j <= label i
        if ((d >> label_to_element[j]) & 1U) {
          const std::size_t b = j * n + i;
          code[b / 64] |= std::uint64_t{1} << (63 - b % 64);
        }
      }
    }
    if (best.code.empty() || code < best.code) {
      best.code = code;
      best.position.assign(n, 0);
      for (std::size_t i = 0; i < n; ++i) best.position[label_to_element[i]] = i;
    }
  };

  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t cell, std::size_t offset) {
    if (cell == cells.size()) {
      evaluate();
      return;
    }
    std::vector<std::size_t> members = cells[cell];
    do {
      std::copy(members.begin(), members.end(), label_to_element.begin() + static_cast<long>(offset));
      place(cell + 1, offset + members.size());
    } while (std::next_permutation(members.begin(), members.end()));
  };
  place(0, 0);
  return best;
}

Lattice relabelled(const std::vector<Mask>& down, const std::vector<std::size_t>& position) {
  const std::size_t n = down.size();
  std::vector<CoverPair> covers;
  for (std::size_t v = 0; v < n; ++v)
    for (Mask rest = lower_cover_mask(down, v); rest != 0; rest &= rest - 1)
      covers.push_back({static_cast<Element>(position[static_cast<std::size_t>(std::countr_zero(rest))]),
                        static_cast<Element>(position[v])});
  return Lattice::from_covers(n, covers);
}

class Enumerator {
 public:
  explicit Enumerator(std::size_t n) : n_(n), down_(n, 0) {}

  std::vector<Lattice> run() {
    if (n_ == 1) return {Lattice::from_covers(1, {}, "enum-1-0")};
    down_[0] = bit(0);
    grow(1, 0, 1, 0);
    std::vector<Lattice> out;
    out.reserve(found_.size());
    for (auto& [code, lattice] : found_)
      out.push_back(std::move(lattice).with_name("enum-" + std::to_string(n_) + "-" +
                                                 std::to_string(out.size())));
    return out;
  }

 private:
  // Elements [prev_start, cur_start) form the previous level and
  // [cur_start, m) the level being filled. New elements in a level take lower
  // cover masks in non-decreasing order.
  void grow(std::size_t m, std::size_t prev_start, std::size_t cur_start, Mask min_mask) {
    if (m == n_ - 1) {
      finish(m);
      return;
    }
    const Mask earlier = bit(cur_start) - 1;
    const Mask previous_level = earlier & ~(bit(prev_start) - 1);
    for (Mask covers = std::max<Mask>(min_mask, 1); covers <= earlier; ++covers) {
      if ((covers & ~earlier) != 0 || (covers & previous_level) == 0) continue;
      if (!is_antichain(covers)) continue;
      Mask d = bit(m);
      for (Mask rest = covers; rest != 0; rest &= rest - 1)
        d |= down_[static_cast<std::size_t>(std::countr_zero(rest))];
      down_[m] = d;
      if (!meets_exist(m)) continue;
      grow(m + 1, prev_start, cur_start, covers);
    }
    if (m > cur_start) grow(m, cur_start, m, 0);
  }

  bool is_antichain(Mask set) const {
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
      const auto a = static_cast<std::size_t>(std::countr_zero(rest));
      if ((down_[a] & set & ~bit(a)) != 0) return false;
    }
    return true;
  }

  // Every pair (m, y) with y < m has a greatest common lower bound.
  bool meets_exist(std::size_t m) const {
    for (std::size_t y = 0; y < m; ++y) {
      const Mask common = down_[m] & down_[y];
      bool has_greatest = false;
      for (Mask rest = common; rest != 0 && !has_greatest; rest &= rest - 1)
        has_greatest = down_[static_cast<std::size_t>(std::countr_zero(rest))] == common;
      if (!has_greatest) return false;
    }
    return true;
  }

  void finish(std::size_t m) {
    down_[m] = bit(n_) - 1;
    Canonical canonical = canonicalize(down_);
    if (found_.count(canonical.code) != 0) return;
    found_.emplace(std::move(canonical.code), relabelled(down_, canonical.position));
  }

  std::size_t n_;
  std::vector<Mask> down_;
  std::map<std::vector<std::uint64_t>, Lattice> found_;
};

}  // namespace

std::vector<Lattice> enumerate_lattices(std::size_t n, std::size_t cap) {
  if (n == 0) throw BadParams("lattices have at least one element");
  if (n > cap || n > kMaxEnumerationSize)
    throw CapExceeded("enumeration of " + std::to_string(n) + "-element lattices exceeds cap " +
                      std::to_string(std::min(cap, kMaxEnumerationSize)));
  return Enumerator(n).run();
}

std::vector<Lattice> enumerate_lattices_up_to(std::size_t max_n, std::size_t cap) {
  std::vector<Lattice> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<Lattice> level = enumerate_lattices(n, cap);
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<std::uint64_t> canonical_code(const Lattice& lattice) {
  const std::size_t n = lattice.size();
  if (n > 32) throw CapExceeded("canonical codes are limited to 32 elements");
  std::vector<Mask> down(n, 0);
  for (Element v = 0; v < n; ++v)
    lattice.down_set(v).for_each([&](std::size_t u) { down[v] |= bit(u); });
  return canonicalize(down).code;
}

}  // namespace latmed
