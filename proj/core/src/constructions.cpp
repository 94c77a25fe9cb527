#include "latmed/constructions.hpp"

#include <string>

#include "latmed/errors.hpp"

namespace latmed {

ProductEncoding::ProductEncoding(std::vector<std::size_t> radices)
    : radices_(std::move(radices)), strides_(radices_.size(), 1) {
  for (std::size_t i = radices_.size(); i-- > 0;) {
    if (radices_[i] == 0) throw BadParams("product factor of size 0");
    strides_[i] = size_;
    size_ *= radices_[i];
  }
}

Element ProductEncoding::encode(std::span<const Element> coords) const {
  if (coords.size() != radices_.size())
    throw IndexError("expected " + std::to_string(radices_.size()) + " coordinates, got " +
                     std::to_string(coords.size()));
  std::size_t flat = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= radices_[i])
      throw IndexError("coordinate " + std::to_string(i) + " out of range");
    flat += coords[i] * strides_[i];
  }
  return static_cast<Element>(flat);
}

Coordinates ProductEncoding::decode(Element flat) const {
  if (flat >= size_) throw IndexError("flat index " + std::to_string(flat) + " out of range");
  Coordinates coords(radices_.size());
  std::size_t rest = flat;
  for (std::size_t i = 0; i < radices_.size(); ++i) {
    coords[i] = static_cast<Element>(rest / strides_[i]);
    rest %= strides_[i];
  }
  return coords;
}

Lattice chain(std::size_t n) {
  if (n == 0) throw BadParams("chain needs n >= 1");
  std::vector<CoverPair> covers;
  for (std::size_t i = 0; i + 1 < n; ++i)
    covers.push_back({static_cast<Element>(i), static_cast<Element>(i + 1)});
  return Lattice::from_covers(n, covers, "chain-" + std::to_string(n));
}

Lattice product(std::span<const Lattice> factors) {
  std::vector<std::size_t> radices;
  std::string name;
  for (const Lattice& f : factors) {
    radices.push_back(f.size());
    if (!name.empty()) name += 'x';
    name += f.name().empty() ? std::string("L") + std::to_string(f.size()) : f.name();
  }
  const ProductEncoding encoding(radices);

  std::vector<CoverPair> covers;
  for (Element flat = 0; flat < encoding.size(); ++flat) {
    Coordinates coords = encoding.decode(flat);
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const Element original = coords[j];
      for (Element up : factors[j].upper_covers(original)) {
        coords[j] = up;
        covers.push_back({flat, encoding.encode(coords)});
      }
      coords[j] = original;
    }
  }

  Lattice result = Lattice::from_covers(encoding.size(), covers,
                                        factors.empty() ? std::string("singleton")
                                                        : "product(" + name + ")");
  result.factor_sizes_ = std::move(radices);
  return result;
}

Lattice product(std::initializer_list<Lattice> factors) {
  return product(std::span<const Lattice>(factors.begin(), factors.size()));
}

Lattice boolean(std::size_t k) {
  const std::vector<Lattice> factors(k, chain(2));
  return product(factors).with_name("boolean-" + std::to_string(k));
}

Element glued_upper_index(const Lattice& lower, const Lattice& upper, Element element) {
  if (element >= upper.size()) throw IndexError("element out of range for upper lattice");
  if (element == upper.bottom()) return lower.top();
  const std::size_t shifted = element < upper.bottom() ? element : element - 1;
  return static_cast<Element>(lower.size() + shifted);
}

Lattice glued_sum(const Lattice& lower, const Lattice& upper) {
  std::vector<CoverPair> covers(lower.cover_pairs().begin(), lower.cover_pairs().end());
  for (const auto& [a, b] : upper.cover_pairs())
    covers.push_back({glued_upper_index(lower, upper, a), glued_upper_index(lower, upper, b)});
  return Lattice::from_covers(lower.size() + upper.size() - 1, covers,
                              "glued(" + lower.name() + "," + upper.name() + ")");
}

IntervalRemoval remove_interval(const IntervalRemovalSpec& spec) {
  const Lattice& base = spec.base;
  const std::size_t n = base.size();
  if (spec.e >= n || spec.f >= n) throw IndexError("interval endpoint out of range");
  if (spec.e == base.bottom()) throw ZeroForbidden("e must not be the bottom element");
  if (!base.leq(spec.e, spec.f)) throw NotComparable("e is not below f");
  if (!is_join_prime(base, spec.e)) throw NotJoinPrime("e is not join-prime");

  Bitset keep(n);
  const Bitset removed = base.up_set(spec.e) & base.down_set(spec.f);
  std::vector<Element> ambient;
  std::vector<std::optional<Element>> local(n);
  for (Element v = 0; v < n; ++v) {
    if (removed.test(v)) continue;
    keep.set(v);
    local[v] = static_cast<Element>(ambient.size());
    ambient.push_back(v);
  }

  std::vector<CoverPair> covers;
  for (const Element a : ambient) {
    Bitset strictly_above = base.up_set(a) & keep;
    strictly_above.reset(a);
    strictly_above.for_each([&](std::size_t c) {
      if ((base.down_set(static_cast<Element>(c)) & strictly_above).count() == 1)
        covers.push_back({*local[a], *local[c]});
    });
  }

  std::string name = "remove(" + base.name() + "," + std::to_string(spec.e) + "," +
                     std::to_string(spec.f) + ")";
  return IntervalRemoval{
      .lattice = Lattice::from_covers(ambient.size(), covers, std::move(name)),
      .ambient = std::move(ambient),
      .local = std::move(local),
  };
}

Coordinates LnkLattice::coordinates(Element y) const {
  if (y >= removal.ambient.size()) throw IndexError("element out of range");
  return ambient_encoding.decode(removal.ambient[y]);
}

Element LnkLattice::element(std::span<const Element> coords) const {
  const Element flat = ambient_encoding.encode(coords);
  if (!removal.local[flat]) throw IndexError("coordinates lie in the removed interval");
  return *removal.local[flat];
}

LnkLattice build_lnk(std::size_t n, std::size_t k) {
  if (n < 4) throw BadParams("L(n,k) requires n >= 4");
  if (k < 3) throw BadParams("L(n,k) requires k >= 3");

  std::vector<Lattice> factors(k, chain(n));
  factors.push_back(chain(2));
  const Lattice ambient = product(factors);
  std::vector<std::size_t> radices(k, n);
  radices.push_back(2);
  ProductEncoding encoding(radices);

  const auto top_coord = static_cast<Element>(n - 1);
  Coordinates e(k + 1, 0);
  e[k - 1] = 1;
  Coordinates f(k + 1, static_cast<Element>(n - 2));
  f[k - 1] = top_coord;
  f[k] = 0;
  const Element e_flat = encoding.encode(e);
  const Element f_flat = encoding.encode(f);

  IntervalRemoval removal = remove_interval({ambient, e_flat, f_flat});
  removal.lattice =
      std::move(removal.lattice).with_name("lnk-" + std::to_string(n) + "-" + std::to_string(k));

  auto local = [&](const Coordinates& c) { return *removal.local[encoding.encode(c)]; };

  Coordinates z(k + 1, 0);
  z[k - 1] = top_coord;
  z[k] = 1;
  Coordinates x0(k + 1, 0);
  Coordinates x1(k + 1, 0);
  x1[0] = top_coord;
  x1[k - 1] = top_coord;
  Coordinates x2(k + 1, 0);
  x2[1] = top_coord;
  x2[k - 1] = top_coord;

  const Element z_local = local(z);
  std::vector<Element> xi{local(x0), local(x1), local(x2)};
  return LnkLattice{
      .n = n,
      .k = k,
      .ambient_encoding = std::move(encoding),
      .removal = std::move(removal),
      .e = std::move(e),
      .f = std::move(f),
      .e_ambient = e_flat,
      .f_ambient = f_flat,
      .z = z_local,
      .xi = std::move(xi),
  };
}

GkLattice build_gk(std::size_t k) {
  if (k <= 3) throw BadParams("G(k) requires k > 3");
  LnkLattice base = build_lnk(4, 3);
  Lattice glued = glued_sum(base.lattice(), boolean(k)).with_name("gk-" + std::to_string(k));
  return GkLattice{.k = k, .lattice = std::move(glued), .z = base.z, .xi = base.xi};
}

Lattice figure1() {
  enum : Element { A, B, C, D, E, F, G, H, I };
  const std::vector<CoverPair> covers{{A, B}, {A, C}, {B, D}, {B, E}, {C, D}, {C, F},
                                      {D, H}, {D, I}, {E, H}, {F, H}, {H, G}, {I, G}};
  return Lattice::from_covers(9, covers, "figure1");
}

std::optional<std::size_t> product_join_prime_profile(const Lattice& lattice, Element u) {
  if (!lattice.is_product()) throw NotAProduct("lattice was not built as a direct product");
  if (u >= lattice.size()) throw IndexError("element out of range");
  if (!is_join_prime(lattice, u)) return std::nullopt;

  const ProductEncoding encoding({lattice.factor_sizes().begin(), lattice.factor_sizes().end()});
  const Coordinates coords = encoding.decode(u);
  const Coordinates zero = encoding.decode(lattice.bottom());
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == zero[i]) continue;
    if (found) return std::nullopt;
    found = i;
  }
  return found;
}

}  // namespace latmed
