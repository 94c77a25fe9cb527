#include "latmed_cli/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "latmed/constructions.hpp"
#include "latmed/enumerate.hpp"
#include "latmed/errors.hpp"
#include "latmed/harness.hpp"
#include "latmed/lattice.hpp"
#include "latmed/lattice_file.hpp"
#include "latmed/median.hpp"

namespace latmed::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

// Campaign sizes above these need --long.
constexpr std::size_t kDeskMaxSize = 7;
constexpr std::size_t kDeskMaxK = 3;
constexpr std::size_t kLongMaxSize = 8;
constexpr std::size_t kLongMaxK = 4;

struct Options {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::string> factors;
  std::string in;
  std::optional<Element> e;
  std::optional<Element> f;
  std::string out;

  std::string file;
  std::string property;
  std::string profile;
  bool report = false;
  std::size_t max_k = kDeskMaxK;
  std::size_t max_size = kDeskMaxSize;
  std::string suite = "theorem-a";
  bool allow_long = false;
  std::string dump;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string coords_text(const Coordinates& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

std::optional<LnkLattice> builtin_lnk(const std::string& name) {
  std::smatch m;
  static const std::regex short_form("l([0-9])([0-9])");
  static const std::regex long_form("lnk-([0-9]+)-([0-9]+)");
  if (std::regex_match(name, m, short_form) || std::regex_match(name, m, long_form))
    return build_lnk(std::stoul(m[1].str()), std::stoul(m[2].str()));
  return std::nullopt;
}

struct Loaded {
  Lattice lattice;
  std::optional<LnkLattice> lnk;
};

// A path that exists is read as a lattice file; otherwise a few builtin names
// are accepted: figure1, l<n><k> or lnk-<n>-<k>, g<k> or gk-<k>.
Loaded load(const std::string& source) {
  if (std::filesystem::exists(source)) {
    Lattice lattice = read_lattice_file(source);
    std::optional<LnkLattice> lnk;
    // Files written by `build lnk` keep the closed-form report available.
    if (auto candidate = builtin_lnk(lattice.name()); candidate && candidate->lattice() == lattice)
      lnk = std::move(candidate);
    return {std::move(lattice), std::move(lnk)};
  }
  if (source == "figure1") return {figure1(), std::nullopt};
  if (auto lnk = builtin_lnk(source)) {
    Lattice lattice = lnk->lattice();
    return {std::move(lattice), std::move(lnk)};
  }
  std::smatch m;
  static const std::regex gk("g([0-9]+)|gk-([0-9]+)");
  if (std::regex_match(source, m, gk))
    return {build_gk(std::stoul(m[1].matched ? m[1].str() : m[2].str())).lattice, std::nullopt};
  throw Error("cannot open '" + source + "': no such file or builtin lattice");
}

Profile parse_profile(const std::string& text) {
  std::vector<Element> entries;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw BadParams("profile entry '" + item + "' is not an element index");
    entries.push_back(static_cast<Element>(std::stoul(item)));
  }
  return Profile(std::move(entries));
}

void print_summary(std::ostream& s, const Lattice& lattice) {
  s << "size " << lattice.size() << '\n';
  s << "length " << length(lattice) << '\n';
  s << "breadth " << breadth(lattice) << '\n';
  s << "semimodular " << yes_no(is_semimodular(lattice)) << '\n';
}

std::size_t require(std::size_t value, const char* flag, const std::string& family) {
  if (value == 0) throw BadParams(family + " needs " + flag);
  return value;
}

int cmd_build(const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<Lattice> lattice;
  std::ostringstream extra;
  const std::string& fam = o.family;

  if (fam == "chain") {
    lattice = chain(require(o.n, "--n", fam));
  } else if (fam == "boolean") {
    lattice = boolean(o.k);
  } else if (fam == "product" || fam == "gluedsum") {
    std::vector<Lattice> parts;
    for (const auto& path : o.factors) parts.push_back(read_lattice_file(path));
    if (fam == "product") {
      if (parts.empty()) throw BadParams("product needs at least one --factor");
      lattice = product(parts);
    } else {
      if (parts.size() != 2) throw BadParams("gluedsum needs exactly two --factor files");
      lattice = glued_sum(parts[0], parts[1]);
    }
  } else if (fam == "remove-interval") {
    if (o.in.empty() || !o.e || !o.f) throw BadParams("remove-interval needs --in, --e and --f");
    const Lattice base = read_lattice_file(o.in);
    lattice = remove_interval({.base = base, .e = *o.e, .f = *o.f}).lattice;
  } else if (fam == "lnk") {
    const LnkLattice lnk = build_lnk(o.n, o.k);
    lattice = lnk.lattice();
    extra << "e ambient " << lnk.e_ambient << ' ' << coords_text(lnk.e) << '\n';
    extra << "f ambient " << lnk.f_ambient << ' ' << coords_text(lnk.f) << '\n';
    extra << "z " << lnk.z << ' ' << coords_text(lnk.coordinates(lnk.z)) << '\n';
    extra << "xi " << to_string(Profile(lnk.xi)) << '\n';
  } else if (fam == "gk") {
    const GkLattice gk = build_gk(o.k);
    lattice = gk.lattice;
    extra << "z " << gk.z << '\n';
    extra << "xi " << to_string(Profile(gk.xi)) << '\n';
  } else if (fam == "figure1") {
    lattice = figure1();
  } else {
    throw BadParams("unknown family '" + fam + "'");
  }

  if (o.out.empty()) {
    out << print_lattice(*lattice);
    print_summary(err, *lattice);
    err << extra.str();
  } else {
    write_lattice_file(o.out, *lattice);
    print_summary(out, *lattice);
    out << extra.str();
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Lattice lattice = load(o.file).lattice;
  const std::string& p = o.property;
  if (p == "breadth") {
    out << breadth(lattice) << '\n';
    return kOk;
  }
  bool holds = false;
  if (p == "lattice")
    holds = true;  // loading already validated it
  else if (p == "graded")
    holds = is_graded(lattice);
  else if (p == "semimodular")
    holds = is_semimodular(lattice);
  else if (p == "lower-semimodular")
    holds = is_lower_semimodular(lattice);
  else if (p == "modular")
    holds = is_modular(lattice);
  else if (p == "distributive")
    holds = is_distributive(lattice);
  else
    throw BadParams("unknown property '" + p + "'");
  out << p << ' ' << (holds ? "holds" : "fails") << '\n';
  return holds ? kOk : kFails;
}

std::string join_elements(const ElementSet& set) {
  std::string s;
  for (std::size_t i = 0; i < set.size(); ++i) s += (i ? " " : "") + std::to_string(set[i]);
  return s;
}

int cmd_median(const Options& o, std::ostream& out) {
  const Loaded loaded = load(o.file);
  const Profile xi = parse_profile(o.profile);
  xi.validate(loaded.lattice);
  if (o.report) {
    const CounterexampleReport r = loaded.lnk ? counterexample_report(*loaded.lnk, xi)
                                              : counterexample_report(loaded.lattice, xi);
    out << r.text;
    return r.has_violation() ? kFails : kOk;
  }
  const MedianReport r = median_set(loaded.lattice, xi);
  out << "profile " << to_string(xi) << '\n';
  out << "medians " << join_elements(r.medians) << '\n';
  out << "c1 " << r.c1 << '\n';
  out << "m " << r.m_lower << '\n';
  out << "m' " << r.m_upper << '\n';
  out << "min-remoteness " << r.min_remoteness << '\n';
  if (r.violation) {
    out << "violation " << *r.violation << " is a median not below c1\n";
    return kFails;
  }
  out << "no violation\n";
  return kOk;
}

int cmd_c1check(const Options& o, std::ostream& out) {
  const Lattice lattice = load(o.file).lattice;
  const C1CheckResult r = check_c1_property(lattice, o.max_k);
  out << "lattice " << (lattice.name().empty() ? o.file : lattice.name()) << " n=" << lattice.size()
      << '\n';
  if (r.holds()) out << "profiles checked " << r.profiles_checked << '\n';
  out << r.summary() << '\n';
  return r.holds() ? kOk : kFails;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max_size == 0) throw BadParams("--max-size must be at least 1");
  if (o.max_k == 0) throw BadParams("--max-k must be at least 1");
  const std::size_t size_cap = o.allow_long ? kLongMaxSize : kDeskMaxSize;
  const std::size_t k_cap = o.allow_long ? kLongMaxK : kDeskMaxK;
  if (o.max_size > size_cap || o.max_k > k_cap)
    throw CapExceeded("--max-size " + std::to_string(o.max_size) + " --max-k " +
                      std::to_string(o.max_k) + " exceeds " + std::to_string(size_cap) + "/" +
                      std::to_string(k_cap) + (o.allow_long ? "" : "; pass --long for larger runs"));

  CampaignOptions options{.max_size = o.max_size,
                          .k_max = o.max_k,
                          .enumeration_cap = std::max(o.max_size, kDefaultEnumerationCap),
                          .dump_dir = std::nullopt};
  if (!o.dump.empty()) options.dump_dir = o.dump;

  CampaignResult result;
  if (o.suite == "theorem-a")
    result = verify_theorem_a(options);
  else if (o.suite == "lemmas")
    result = verify_lemmas(options);
  else if (o.suite == "survey")
    result = verify_survey(options);
  else if (o.suite == "products")
    result = verify_product_laws({.k_max = o.max_k});
  else
    throw BadParams("unknown suite '" + o.suite + "'");
  out << result.to_text();
  return result.passed() ? kOk : kFails;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattice toolkit: constructions, medians and verification campaigns",
               "latmed"};
  app.require_subcommand(1);
  Options o;

  auto* build = app.add_subcommand("build", "Build a lattice family and write a lattice file");
  build->add_option("family", o.family,
                    "chain, boolean, product, gluedsum, remove-interval, lnk, gk, figure1")
      ->required();
  build->add_option("--n", o.n, "Chain length or n of L(n,k)");
  build->add_option("--k", o.k, "Exponent k");
  build->add_option("--factor", o.factors, "Lattice file (product, gluedsum); repeatable");
  build->add_option("--in", o.in, "Base lattice file for remove-interval");
  build->add_option("--e", o.e, "Bottom of the removed interval");
  build->add_option("--f", o.f, "Top of the removed interval");
  build->add_option("--o", o.out, "Output path (default: standard output)");

  auto* check = app.add_subcommand("check", "Check a property of a lattice");
  check->add_option("file", o.file, "Lattice file or builtin name")->required();
  check->add_option("property", o.property,
                    "lattice, graded, semimodular, lower-semimodular, modular, distributive, breadth")
      ->required();

  auto* median = app.add_subcommand("median", "Median set of a profile");
  median->add_option("file", o.file, "Lattice file or builtin name")->required();
  median->add_option("--profile", o.profile, "Comma-separated element indices")->required();
  median->add_flag("--report", o.report, "Print the full counterexample report");

  auto* c1check = app.add_subcommand("c1check", "Bounded check of the c1-median property");
  c1check->add_option("file", o.file, "Lattice file or builtin name")->required();
  c1check->add_option("--max-k", o.max_k, "Largest profile size")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--max-size", o.max_size, "Largest enumerated lattice")->capture_default_str();
  verify->add_option("--max-k", o.max_k, "Largest profile size")->capture_default_str();
  verify->add_option("--suite", o.suite, "theorem-a, lemmas, survey, products")->capture_default_str();
  verify->add_flag("--long", o.allow_long, "Allow --max-size 8 and --max-k 4");
  verify->add_option("--dump", o.dump, "Directory for theorem-a violation files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*build) return cmd_build(o, out, err);
    if (*check) return cmd_check(o, out);
    if (*median) return cmd_median(o, out);
    if (*c1check) return cmd_c1check(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace latmed::cli
