#include <doctest.h>

#include <vector>

#include "latmed/constructions.hpp"
#include "latmed/errors.hpp"
#include "latmed/lattice.hpp"
#include "oracles.hpp"

using namespace latmed;

namespace {

Lattice square() {
  return Lattice::from_covers(4, std::vector<CoverPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

}  // namespace

TEST_CASE("from_covers builds chains and squares") {
  const Lattice c3 = Lattice::from_covers(3, std::vector<CoverPair>{{0, 1}, {1, 2}});
  CHECK(c3.size() == 3);
  CHECK(c3.bottom() == 0);
  CHECK(c3.top() == 2);
  CHECK(c3.join(0, 2) == 2);
  CHECK(c3.meet(0, 2) == 0);

  const Lattice sq = square();
  CHECK(sq.join(1, 2) == 3);
  CHECK(sq.meet(1, 2) == 0);
  CHECK(sq.distance(1, 2) == 2);
  CHECK_FALSE(sq.comparable(1, 2));
}

TEST_CASE("from_covers rejects malformed input") {
  CHECK_THROWS_AS(Lattice::from_covers(3, std::vector<CoverPair>{{0, 1}, {0, 2}}), NotALattice);
  CHECK_THROWS_AS(Lattice::from_covers(2, std::vector<CoverPair>{{0, 1}, {1, 0}}), CycleError);
  CHECK_THROWS_AS(Lattice::from_covers(2, std::vector<CoverPair>{{0, 0}}), CycleError);
  CHECK_THROWS_AS(Lattice::from_covers(2, std::vector<CoverPair>{{0, 2}}), IndexError);
  CHECK_THROWS_AS(Lattice::from_covers(0, {}), NotALattice);
  CHECK_THROWS_AS(Lattice::from_covers(3, std::vector<CoverPair>{{0, 1}, {1, 2}, {0, 2}}),
                  NotALattice);
  CHECK_THROWS_AS(Lattice::from_covers(2, std::vector<CoverPair>{{0, 1}, {0, 1}}), NotALattice);
  // two maximal elements over a common bottom
  CHECK_THROWS_AS(Lattice::from_covers(2, {}), NotALattice);
  // bowtie: 0,1 below both 2 and 3, so {0,1} has no join
  CHECK_THROWS_AS(Lattice::from_covers(
                      6, std::vector<CoverPair>{{4, 0}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 5}, {3, 5}}),
                  NotALattice);
}

TEST_CASE("labels are preserved, not renumbered") {
  const Lattice l = Lattice::from_covers(3, std::vector<CoverPair>{{2, 0}, {0, 1}});
  CHECK(l.bottom() == 2);
  CHECK(l.top() == 1);
  CHECK(l.leq(2, 1));
  CHECK(l.cover_pairs() == std::vector<CoverPair>{{0, 1}, {2, 0}});
}

TEST_CASE("out-of-range queries throw") {
  const Lattice c2 = chain(2);
  CHECK_THROWS_AS((void)c2.join(0, 2), IndexError);
  CHECK_THROWS_AS((void)c2.leq(5, 0), IndexError);
  CHECK_THROWS_AS((void)is_join_prime(c2, 9), IndexError);
}

TEST_CASE("length and gradedness") {
  CHECK(length(chain(1)) == 0);
  CHECK(length(chain(5)) == 4);
  CHECK(length(boolean(4)) == 4);
  CHECK(length(build_lnk(4, 3).lattice()) == 10);
  CHECK(is_graded(chain(4)));
  CHECK_FALSE(is_graded(fixtures::pentagon()));
  CHECK(is_graded(fixtures::diamond()));
}

TEST_CASE("modularity and distributivity of small fixtures") {
  CHECK(is_distributive(chain(4)));
  CHECK(is_modular(chain(4)));
  CHECK(is_modular(fixtures::diamond()));
  CHECK_FALSE(is_distributive(fixtures::diamond()));
  CHECK_FALSE(is_modular(fixtures::pentagon()));
  CHECK_FALSE(is_semimodular(fixtures::pentagon()));
  CHECK_FALSE(is_lower_semimodular(fixtures::pentagon()));
  CHECK(is_semimodular(boolean(3)));
  CHECK_FALSE(is_distributive(build_lnk(4, 3).lattice()));
}

TEST_CASE("semimodular but not lower semimodular") {
  CHECK(is_semimodular(figure1()));
  CHECK_FALSE(is_lower_semimodular(figure1()));
}

TEST_CASE("intervals") {
  const Lattice b3 = boolean(3);
  CHECK(interval(b3, b3.bottom(), b3.top()).size() == 8);
  CHECK(interval(b3, 5, 5) == ElementSet{5});
  CHECK_THROWS_AS(interval(b3, 1, 2), EmptyInterval);

  const Lattice k43 = product({chain(4), chain(4), chain(4), chain(2)});
  const ProductEncoding enc({4, 4, 4, 2});
  const std::vector<Element> e{0, 0, 1, 0};
  const std::vector<Element> f{2, 2, 3, 0};
  CHECK(interval(k43, enc.encode(e), enc.encode(f)).size() == 27);
}

TEST_CASE("join-irreducibles") {
  CHECK(join_irreducibles(chain(4)) == ElementSet{1, 2, 3});
  CHECK(join_irreducibles(boolean(3)) == ElementSet{1, 2, 4});
  // B, C, E, F, I
  CHECK(join_irreducibles(figure1()) == ElementSet{1, 2, 4, 5, 8});
  CHECK(join_irreducibles(chain(1)).empty());
}

TEST_CASE("join-prime and codistributive elements") {
  const Lattice c4 = chain(4);
  for (Element u = 1; u < 4; ++u) CHECK(is_join_prime(c4, u));
  CHECK_FALSE(is_join_prime(c4, 0));

  const Lattice b2 = boolean(2);
  CHECK_FALSE(is_join_prime(b2, 3));
  CHECK(is_join_prime(b2, 1));
  CHECK(is_codistributive(b2, 3));

  const Lattice p = product({chain(4), chain(2)});
  CHECK_FALSE(is_join_prime(p, ProductEncoding({4, 2}).encode(std::vector<Element>{1, 1})));
  CHECK(is_join_prime(p, ProductEncoding({4, 2}).encode(std::vector<Element>{1, 0})));

  const Lattice m3 = fixtures::diamond();
  CHECK_FALSE(is_join_prime(m3, 1));
  CHECK_FALSE(is_codistributive(m3, 1));
}

TEST_CASE("join_all and meet_all conventions") {
  const Lattice b3 = boolean(3);
  CHECK(join_all(b3, std::vector<Element>{}) == b3.bottom());
  CHECK(meet_all(b3, std::vector<Element>{}) == b3.top());
  CHECK(join_all(b3, std::vector<Element>{1, 2, 4}) == 7);
  CHECK(meet_all(b3, std::vector<Element>{3, 5, 6}) == 0);
}

TEST_CASE("tables agree with naive oracles on fixtures") {
  for (const Lattice& l : {figure1(), fixtures::pentagon(), fixtures::diamond(), boolean(3),
                           product({chain(3), chain(3)}), build_lnk(4, 3).lattice()}) {
    CAPTURE(l.name());
    const auto leq = oracle::order_closure(l.size(), l.cover_pairs());
    const auto dist = oracle::floyd_distances(l.size(), l.cover_pairs());
    for (Element x = 0; x < l.size(); ++x) {
      for (Element y = 0; y < l.size(); ++y) {
        REQUIRE(l.leq(x, y) == leq[x][y]);
        REQUIRE(l.join(x, y) == oracle::naive_join(leq, x, y));
        REQUIRE(l.meet(x, y) == oracle::naive_meet(leq, x, y));
        REQUIRE(l.distance(x, y) == dist[x][y]);
      }
    }
  }
}

TEST_CASE("topological order is a linear extension") {
  const Lattice l = build_lnk(4, 3).lattice();
  std::vector<std::size_t> position(l.size());
  const auto topo = l.topological_order();
  REQUIRE(topo.size() == l.size());
  for (std::size_t i = 0; i < topo.size(); ++i) position[topo[i]] = i;
  for (const auto& c : l.cover_pairs()) CHECK(position[c.lower] < position[c.upper]);
}
