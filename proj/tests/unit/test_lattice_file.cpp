#include <doctest.h>

#include <filesystem>
#include <string>

#include "latmed/constructions.hpp"
#include "latmed/enumerate.hpp"
#include "latmed/errors.hpp"
#include "latmed/lattice_file.hpp"

using namespace latmed;

TEST_CASE("print format") {
  CHECK(print_lattice(chain(3)) == "lat 1\nn 3\nname chain-3\ncovers\n0 1\n1 2\n");
  CHECK(print_lattice(Lattice::from_covers(1, {})) == "lat 1\nn 1\ncovers\n");
  CHECK_THROWS_AS(print_lattice(chain(2).with_name("two words")), BadParams);
}

TEST_CASE("parse accepts comments and any topological labelling") {
  const Lattice l = parse_lattice("# a comment\nlat 1\nn 3\n# another\ncovers\n2 0\n0 1\n");
  CHECK(l.size() == 3);
  CHECK(l.bottom() == 2);
  CHECK(l.name().empty());
  CHECK(print_lattice(l) == "lat 1\nn 3\ncovers\n0 1\n2 0\n");
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      (void)parse_lattice(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("lat 2\nn 1\ncovers\n") == 1);
  CHECK(line_of("lat 1\nn x\ncovers\n") == 2);
  CHECK(line_of("lat 1\nn 01\ncovers\n") == 2);
  CHECK(line_of("lat 1\nn 2\ncovers\n0  1\n") == 4);
  CHECK(line_of("lat 1\nn 2\ncovers\n0 1 \n") == 4);
  CHECK(line_of("lat 1\nn 2\nname a b\ncovers\n0 1\n") == 3);
  CHECK(line_of("lat 1\nn 2\n") != 0);
  CHECK_THROWS_AS(parse_lattice("lat 1\nn 2\ncovers\n0 1\n1 0\n"), CycleError);
  CHECK(line_of("lat 1\nn 2\ncovers\n0 5\n") == 4);
  CHECK_THROWS_AS(parse_lattice("lat 1\nn 3\ncovers\n0 1\n0 2\n"), NotALattice);
}

TEST_CASE("round trip on fixtures and enumerated lattices") {
  for (const Lattice& l : {chain(1), chain(4), boolean(3), figure1(), build_lnk(4, 3).lattice(),
                           build_gk(4).lattice}) {
    const std::string text = print_lattice(l);
    const Lattice back = parse_lattice(text);
    CHECK(back == l);
    CHECK(print_lattice(back) == text);
  }
  for (const Lattice& l : enumerate_lattices_up_to(6)) {
    const std::string text = print_lattice(l);
    CHECK(print_lattice(parse_lattice(text)) == text);
  }
}

TEST_CASE("fixture files parse") {
  for (const auto& entry : std::filesystem::directory_iterator(LATMED_FIXTURE_DIR)) {
    CAPTURE(entry.path().string());
    const Lattice l = read_lattice_file(entry.path());
    CHECK(l.size() >= 1);
  }
}

TEST_CASE("file I/O") {
  const auto path = std::filesystem::temp_directory_path() / "latmed-file-test.lat";
  write_lattice_file(path, figure1());
  CHECK(read_lattice_file(path) == figure1());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_lattice_file(path), Error);
}
