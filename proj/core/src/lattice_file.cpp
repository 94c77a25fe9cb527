#include "latmed/lattice_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "latmed/errors.hpp"

namespace latmed {

namespace {

bool is_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#') return false;
  return true;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  if (s.empty() || (s.size() > 1 && s.front() == '0')) return std::nullopt;
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.front() != '#') lines.push_back({number, line});
    start = end + 1;
  }
  return lines;
}

}  // namespace

std::string print_lattice(const Lattice& lattice) {
  if (!lattice.name().empty() && !is_token(lattice.name()))
    throw BadParams("lattice name '" + lattice.name() + "' is not a single token");
  std::ostringstream out;
  out << "lat 1\n";
  out << "n " << lattice.size() << '\n';
  if (!lattice.name().empty()) out << "name " << lattice.name() << '\n';
  out << "covers\n";
  for (const auto& [a, b] : lattice.cover_pairs()) out << a << ' ' << b << '\n';
  return out.str();
}

Lattice parse_lattice(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  std::size_t i = 0;
  auto expect_more = [&](const char* what) {
    if (i >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number, std::string("missing ") + what);
  };

  expect_more("header 'lat 1'");
  if (lines[i].text != "lat 1") throw ParseError(lines[i].number, "expected header 'lat 1'");
  ++i;

  expect_more("'n <count>' line");
  std::size_t n = 0;
  {
    const std::string_view t = lines[i].text;
    std::optional<std::size_t> count;
    if (t.starts_with("n ")) count = parse_count(t.substr(2));
    if (!count) throw ParseError(lines[i].number, "expected 'n <count>'");
    n = *count;
    ++i;
  }

  std::string name;
  expect_more("'covers' line");
  if (lines[i].text.starts_with("name ")) {
    const std::string_view token = lines[i].text.substr(5);
    if (!is_token(token)) throw ParseError(lines[i].number, "name must be a single token");
    name = std::string(token);
    ++i;
  }

  expect_more("'covers' line");
  if (lines[i].text != "covers") throw ParseError(lines[i].number, "expected 'covers'");
  ++i;

  std::vector<CoverPair> covers;
  for (; i < lines.size(); ++i) {
    const std::string_view t = lines[i].text;
    const std::size_t space = t.find(' ');
    if (space == std::string_view::npos)
      throw ParseError(lines[i].number, "expected '<a> <b>'");
    const auto a = parse_count(t.substr(0, space));
    const auto b = parse_count(t.substr(space + 1));
    if (!a || !b) throw ParseError(lines[i].number, "expected '<a> <b>'");
    if (*a >= n || *b >= n)
      throw ParseError(lines[i].number, "cover index out of range for n=" + std::to_string(n));
    covers.push_back({static_cast<Element>(*a), static_cast<Element>(*b)});
  }

  return Lattice::from_covers(n, covers, std::move(name));
}

Lattice read_lattice_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_lattice(buffer.str());
}

void write_lattice_file(const std::filesystem::path& path, const Lattice& lattice) {
  const std::string text = print_lattice(lattice);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("write failed for " + path.string());
}

}  // namespace latmed
