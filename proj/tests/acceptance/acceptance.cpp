// Acceptance suite: one PASS/FAIL line per criterion. A criterion passes only
// when its checks hold and it finishes within its time limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "latmed/constructions.hpp"
#include "latmed/enumerate.hpp"
#include "latmed/harness.hpp"
#include "latmed/lattice_file.hpp"
#include "latmed/median.hpp"

using namespace latmed;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string str(std::size_t v) { return std::to_string(v); }

Outcome size_formula() {
  Outcome o;
  for (auto [n, k, expected] : {std::tuple{4, 3, 101}, {5, 3, 186}, {4, 4, 431}}) {
    std::size_t formula = 2;
    std::size_t minus = 1;
    for (int i = 0; i < k; ++i) {
      formula *= static_cast<std::size_t>(n);
      minus *= static_cast<std::size_t>(n - 1);
    }
    formula -= minus;
    const std::size_t built = build_lnk(n, k).lattice().size();
    o.require(formula == static_cast<std::size_t>(expected) && built == formula,
              "L(" + str(n) + "," + str(k) + ") has " + str(built) + " elements, formula " + str(formula));
  }
  if (o.ok) o.detail = "101, 186, 431";
  return o;
}

Outcome counterexample() {
  Outcome o;
  const LnkLattice l = build_lnk(4, 3);
  const Lattice& lat = l.lattice();
  o.require(l.coordinates(l.xi[0]) == Coordinates{0, 0, 0, 0} &&
                l.coordinates(l.xi[1]) == Coordinates{3, 0, 3, 0} &&
                l.coordinates(l.xi[2]) == Coordinates{0, 3, 3, 0},
            "profile coordinates differ");
  o.require(l.coordinates(l.z) == Coordinates{0, 0, 3, 1}, "z has the wrong coordinates");
  const Profile xi(l.xi);
  const MedianReport r = median_set(lat, xi);
  const std::uint64_t rz = remoteness(lat, l.z, xi);
  o.require(rz == 12, "r(z, xi) = " + std::to_string(rz));
  std::uint64_t exhaustive_min = rz;
  for (Element y = 0; y < lat.size(); ++y) exhaustive_min = std::min(exhaustive_min, remoteness(lat, y, xi));
  o.require(exhaustive_min == rz, "some element beats z: minimum " + std::to_string(exhaustive_min));
  o.require(std::binary_search(r.medians.begin(), r.medians.end(), l.z), "z is not a median");
  o.require(l.coordinates(r.c1) == Coordinates{3, 3, 3, 0}, "c1 has the wrong coordinates");
  o.require(!lat.leq(l.z, r.c1), "z is below c1");
  if (o.ok) o.detail = "r(z)=12, min over 101 elements=12, z not below c1=(3,3,3,0)";
  return o;
}

Outcome closed_form() {
  Outcome o;
  std::size_t compared = 0;
  for (auto [n, k] : {std::pair{4, 3}, {5, 3}}) {
    const LnkLattice l = build_lnk(n, k);
    const auto table = remoteness_table(l.lattice(), Profile(l.xi));
    for (Element y = 0; y < l.lattice().size(); ++y) {
      ++compared;
      o.require(lnk_closed_form_remoteness(l, y) == table[y],
                "L(" + str(n) + "," + str(k) + ") element " + str(y) + " disagrees");
    }
  }
  if (o.ok) o.detail = str(compared) + " elements agree";
  return o;
}

Outcome breadth_checks() {
  Outcome o;
  o.require(breadth(build_lnk(4, 3).lattice()) == 3, "breadth of L(4,3)");
  o.require(breadth(figure1()) == 2, "breadth of figure1");
  for (std::size_t k = 0; k <= 5; ++k) o.require(breadth(boolean(k)) == k, "breadth of boolean(" + str(k) + ")");
  for (std::size_t n = 2; n <= 8; ++n) o.require(breadth(chain(n)) == 1, "breadth of chain(" + str(n) + ")");
  const auto family = enumerate_lattices_up_to(7);
  for (const Lattice& l : family)
    o.require(breadth(l) == breadth_bruteforce(l, l.size()), "oracle disagrees on " + l.name());
  if (o.ok) o.detail = "optimized = brute force on " + str(family.size()) + " lattices";
  return o;
}

Outcome structure_checks() {
  Outcome o;
  for (auto [n, k] : {std::pair{4, 3}, {5, 3}, {4, 4}}) {
    const LnkLattice l = build_lnk(n, k);
    const Lattice& lat = l.lattice();
    const std::string tag = "L(" + str(n) + "," + str(k) + ")";
    o.require(is_semimodular(lat), tag + " is not semimodular");
    o.require(is_graded(lat), tag + " is not graded");
    const std::vector<std::size_t> radices(l.ambient_encoding.radices().begin(), l.ambient_encoding.radices().end());
    std::vector<Lattice> factors;
    for (std::size_t r : radices) factors.push_back(chain(r));
    const Lattice ambient = product(factors);
    const auto& amb = l.removal.ambient;
    bool joins_agree = true;
    for (Element x = 0; x < lat.size() && joins_agree; ++x)
      for (Element y = 0; y < lat.size() && joins_agree; ++y)
        joins_agree = amb[lat.join(x, y)] == ambient.join(amb[x], amb[y]);
    o.require(joins_agree, tag + " is not a join-subsemilattice of the ambient product");
  }
  if (o.ok) o.detail = "3 lattices: semimodular, graded, joins agree with the ambient product";
  return o;
}

Outcome main_theorem() {
  Outcome o;
  const std::vector<std::size_t> oeis{1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= oeis.size(); ++n) {
    const std::size_t got = enumerate_lattices(n).size();
    o.require(got == oeis[n - 1], "n=" + str(n) + " gives " + str(got) + " classes");
  }
  const CampaignResult r = verify_theorem_a({.max_size = 7, .k_max = 3});
  const PropertyTally* t = r.tally("theorem-a");
  o.require(t != nullptr && t->fails == 0 && r.passed(), "theorem-a campaign failed");
  if (o.ok) o.detail = str(t->holds) + " semimodular breadth<=2 lattices, 0 violations up to k=3";
  return o;
}

Outcome survey() {
  Outcome o;
  const CampaignResult r = verify_survey({.max_size = 7, .k_max = 3});
  for (const auto& t : r.tallies) o.require(t.fails == 0, t.property + " has " + str(t.fails) + " failures");
  if (o.ok) {
    o.detail = "holds: ";
    for (const auto& t : r.tallies) o.detail += t.property + "=" + str(t.holds) + " ";
    o.detail.pop_back();
  }
  return o;
}

Outcome lemmas() {
  Outcome o;
  const CampaignResult r = verify_lemmas({.max_size = 6, .k_max = 3});
  for (const auto& t : r.tallies) o.require(t.fails == 0, t.property + " has " + str(t.fails) + " failures");
  if (o.ok) o.detail = str(r.tally("two-profile-median")->holds) + " semimodular lattices, 0 failures";
  return o;
}

Outcome products() {
  Outcome o;
  const CampaignResult r = verify_product_laws({.k_max = 3});
  o.require(r.lattices_examined >= 20, "only " + str(r.lattices_examined) + " factor pairs");
  for (const char* p : {"distance-additivity", "breadth-additivity", "median-componentwise"}) {
    const PropertyTally* t = r.tally(p);
    o.require(t != nullptr && t->fails == 0, std::string(p) + " failed");
  }
  o.require(r.passed(), "an asserted product law failed");
  if (o.ok) o.detail = str(r.lattices_examined) + " factor pairs, 0 failures";
  return o;
}

Outcome gk() {
  Outcome o;
  const GkLattice g4 = build_gk(4);
  o.require(g4.lattice.size() == 116, "|G(4)| = " + str(g4.lattice.size()));
  o.require(build_gk(5).lattice.size() == 132, "|G(5)| wrong");
  o.require(is_semimodular(g4.lattice), "G(4) is not semimodular");
  o.require(breadth(g4.lattice) == 4, "breadth of G(4) is " + str(breadth(g4.lattice)));
  const MedianReport r = median_set(g4.lattice, Profile(g4.xi));
  o.require(r.violation.has_value(), "no c1 violation for the embedded profile");
  if (o.ok) o.detail = "|G(4)|=116, |G(5)|=132, breadth 4, violation at " + str(*r.violation);
  return o;
}

Outcome round_trip() {
  Outcome o;
  std::vector<Lattice> all{chain(1), chain(4), boolean(3), figure1(), build_lnk(4, 3).lattice(),
                           build_gk(4).lattice};
  for (const auto& entry : std::filesystem::directory_iterator(LATMED_FIXTURE_DIR))
    all.push_back(read_lattice_file(entry.path()));
  for (Lattice& l : enumerate_lattices_up_to(6)) all.push_back(std::move(l));
  for (const Lattice& l : all) {
    const std::string text = print_lattice(l);
    const Lattice back = parse_lattice(text);
    o.require(back == l && print_lattice(back) == text, "round trip differs for " + l.name());
  }
  if (o.ok) o.detail = str(all.size()) + " lattices byte-exact";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "size formula", 1.0, size_formula},
      {2, "L(4,3) counterexample", 1.0, counterexample},
      {3, "closed-form remoteness", 5.0, closed_form},
      {4, "breadth", 120.0, breadth_checks},
      {5, "structure checks", 60.0, structure_checks},
      {6, "main theorem, desk scale", 600.0, main_theorem},
      {7, "survey oracles, desk scale", 600.0, survey},
      {8, "lemmas", 300.0, lemmas},
      {9, "products", 300.0, products},
      {10, "G(k)", 30.0, gk},
      {11, "file round trip", 60.0, round_trip},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) o = {false, "over the time limit"};
    if (!o.ok) ++failures;
    std::printf("%s %2d %-28s %8.3fs / %5.0fs  %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                c.limit_seconds, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
