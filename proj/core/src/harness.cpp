#include "latmed/harness.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "latmed/errors.hpp"
#include "latmed/lattice_file.hpp"
#include "latmed/parallel.hpp"

namespace latmed {

namespace {

enum class Verdict { holds, fails, skipped };

struct Outcome {
  Verdict verdict = Verdict::skipped;
  std::vector<Element> profile;
  std::optional<Element> witness;
  std::string detail;

  static Outcome skip() { return {}; }
  static Outcome pass() {
    Outcome o;
    o.verdict = Verdict::holds;
    return o;
  }
  static Outcome fail(std::vector<Element> profile, std::optional<Element> witness,
                      std::string detail) {
    return {.verdict = Verdict::fails,
            .profile = std::move(profile),
            .witness = witness,
            .detail = std::move(detail)};
  }
};

struct PropertySpec {
  std::string name;
  bool asserted = true;
};

using SubjectCheck = std::function<std::vector<Outcome>(std::size_t index)>;

std::string profile_text(std::span<const Element> profile) {
  std::string out = "(";
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(profile[i]);
  }
  return out + ")";
}

// Runs `check` on subjects 0..count-1 in parallel and merges the outcomes in
// subject order, so the result does not depend on scheduling.
CampaignResult run_campaign(std::string family, std::size_t count,
                            const std::vector<PropertySpec>& properties,
                            const std::function<const Lattice&(std::size_t)>& subject,
                            const SubjectCheck& check, std::size_t workers) {
  std::vector<std::vector<Outcome>> outcomes(count);
  parallel_for(count, workers, [&](std::size_t i) { outcomes[i] = check(i); });

  CampaignResult result;
  result.family = std::move(family);
  result.lattices_examined = count;
  for (const auto& p : properties)
    result.tallies.push_back({.property = p.name, .asserted = p.asserted});

  for (std::size_t i = 0; i < count; ++i) {
    if (outcomes[i].size() != properties.size())
      throw Error("internal: property count mismatch in campaign " + result.family);
    for (std::size_t p = 0; p < properties.size(); ++p) {
      Outcome& o = outcomes[i][p];
      PropertyTally& t = result.tallies[p];
      switch (o.verdict) {
        case Verdict::holds: ++t.holds; break;
        case Verdict::skipped: ++t.skipped; break;
        case Verdict::fails:
          ++t.fails;
          result.violations.push_back({.property = properties[p].name,
                                       .lattice = subject(i),
                                       .profile = std::move(o.profile),
                                       .witness = o.witness,
                                       .detail = std::move(o.detail)});
          break;
      }
    }
  }
  return result;
}

// Calls f(tuple) for every non-decreasing tuple of `size` elements of 0..n-1,
// in lexicographic order.
template <typename F>
void for_each_multiset(std::size_t n, std::size_t size, F&& f) {
  if (size == 0 || n == 0) return;
  std::vector<Element> tuple(size, 0);
  while (true) {
    f(std::span<const Element>(tuple));
    std::size_t pos = size;
    while (pos > 0 && tuple[pos - 1] + 1 == n) --pos;
    if (pos == 0) return;
    const Element next = tuple[pos - 1] + 1;
    for (std::size_t j = pos - 1; j < size; ++j) tuple[j] = next;
  }
}

template <typename F>
void for_each_bounded_profile(std::size_t n, std::size_t k_max, F&& f) {
  for (std::size_t size = 1; size <= k_max; ++size) for_each_multiset(n, size, f);
}

Outcome c1_outcome(const Lattice& lattice, std::size_t k_max) {
  const C1CheckResult r = check_c1_property(lattice, k_max, 1);
  if (r.holds()) return Outcome::pass();
  return Outcome::fail(r.violation->profile, r.violation->median, r.summary());
}

std::vector<Outcome> theorem_a_outcomes(const Lattice& lattice, std::size_t k_max,
                                        bool unconditional) {
  const bool distributive = is_distributive(lattice);
  const bool modular = is_modular(lattice);
  const bool semimodular = is_semimodular(lattice);
  const bool graded = is_graded(lattice);

  std::vector<Outcome> out;
  std::optional<Outcome> unconditional_c1;
  if (unconditional) unconditional_c1 = c1_outcome(lattice, k_max);

  if (semimodular && breadth(lattice) <= 2)
    out.push_back(unconditional_c1 ? *unconditional_c1 : c1_outcome(lattice, k_max));
  else
    out.push_back(Outcome::skip());

  if (distributive)
    out.push_back(unconditional_c1 ? *unconditional_c1 : c1_outcome(lattice, k_max));
  else
    out.push_back(Outcome::skip());

  const bool chain_ok = (!distributive || modular) && (!modular || semimodular) &&
                        (!semimodular || graded);
  out.push_back(chain_ok ? Outcome::pass()
                         : Outcome::fail({}, std::nullopt,
                                         "order-chain broken: distributive=" +
                                             std::to_string(distributive) +
                                             " modular=" + std::to_string(modular) +
                                             " semimodular=" + std::to_string(semimodular) +
                                             " graded=" + std::to_string(graded)));
  if (unconditional) out.push_back(*unconditional_c1);
  return out;
}

void dump_theorem_violations(const CampaignResult& result, const CampaignOptions& options) {
  if (!options.dump_dir) return;
  std::size_t index = 0;
  for (const auto& v : result.violations) {
    if (v.property != "theorem-a") continue;
    std::filesystem::create_directories(*options.dump_dir);
    const auto path = *options.dump_dir / ("theorem-a-violation-" + std::to_string(index++) + ".lat");
    std::ofstream out(path, std::ios::binary);
    out << "# theorem-a violation: profile " << profile_text(v.profile) << " median "
        << (v.witness ? std::to_string(*v.witness) : std::string("?")) << '\n';
    out << print_lattice(v.lattice);
  }
}

std::vector<Lattice> enumerate_family(const CampaignOptions& options) {
  return enumerate_lattices_up_to(options.max_size, options.enumeration_cap);
}

std::string enumerated_family_name(const CampaignOptions& options) {
  return "all lattices with 1.." + std::to_string(options.max_size) + " elements";
}

}  // namespace

bool CampaignResult::passed() const {
  for (const auto& t : tallies)
    if (t.asserted && t.fails > 0) return false;
  return true;
}

const PropertyTally* CampaignResult::tally(std::string_view property) const {
  for (const auto& t : tallies)
    if (t.property == property) return &t;
  return nullptr;
}

std::string CampaignResult::to_text() const {
  std::ostringstream out;
  out << "family: " << family << '\n';
  out << "parameters: max-size=" << max_size << " max-k=" << k_max << '\n';
  out << "examined: " << lattices_examined << '\n';
  for (const auto& t : tallies) {
    out << "property " << t.property << ": holds=" << t.holds << " fails=" << t.fails
        << " skipped=" << t.skipped << (t.asserted ? "" : " (reported)") << '\n';
  }
  out << "violations: " << violations.size() << '\n';
  for (const auto& v : violations) {
    out << "  " << v.property << " on " << v.lattice.name() << " (n=" << v.lattice.size() << ")";
    if (!v.profile.empty()) out << " profile " << profile_text(v.profile);
    if (v.witness) out << " witness " << *v.witness;
    if (!v.detail.empty()) out << ": " << v.detail;
    out << '\n';
  }
  if (k_max > 0) out << "note: profiles bounded by size " << k_max << "; no violation up to kMax is not a proof\n";
  out << "result: " << (passed() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

CampaignResult verify_theorem_a(const CampaignOptions& options) {
  const std::vector<Lattice> family = enumerate_family(options);
  const std::vector<PropertySpec> properties{{"theorem-a"}, {"distributive-c1"}, {"order-chain"}};
  CampaignResult result = run_campaign(
      enumerated_family_name(options), family.size(), properties,
      [&](std::size_t i) -> const Lattice& { return family[i]; },
      [&](std::size_t i) { return theorem_a_outcomes(family[i], options.k_max, false); },
      options.workers);
  result.max_size = options.max_size;
  result.k_max = options.k_max;
  dump_theorem_violations(result, options);
  return result;
}

CampaignResult verify_theorem_a(std::span<const Lattice> family, const std::string& family_name,
                                const CampaignOptions& options) {
  const std::vector<PropertySpec> properties{
      {"theorem-a"}, {"distributive-c1"}, {"order-chain"}, {"c1-median", false}};
  CampaignResult result = run_campaign(
      family_name, family.size(), properties,
      [&](std::size_t i) -> const Lattice& { return family[i]; },
      [&](std::size_t i) { return theorem_a_outcomes(family[i], options.k_max, true); },
      options.workers);
  std::size_t largest = 0;
  for (const Lattice& l : family) largest = std::max(largest, l.size());
  result.max_size = largest;
  result.k_max = options.k_max;
  dump_theorem_violations(result, options);
  return result;
}

CampaignResult verify_survey(const CampaignOptions& options) {
  const std::vector<Lattice> family = enumerate_family(options);
  const std::vector<PropertySpec> properties{
      {"distributive-interval"}, {"leclerc-bound"}, {"modular-c1"}};

  auto check = [&](std::size_t index) {
    const Lattice& lattice = family[index];
    const bool distributive = is_distributive(lattice);
    const bool modular = is_modular(lattice);
    const bool semimodular = is_semimodular(lattice);

    std::vector<Outcome> out(3, Outcome::skip());
    if (distributive) out[0] = Outcome::pass();
    if (semimodular) out[1] = Outcome::pass();
    if (modular) out[2] = Outcome::pass();
    if (!distributive && !modular && !semimodular) return out;

    for_each_bounded_profile(lattice.size(), options.k_max, [&](std::span<const Element> tuple) {
      const Profile xi(std::vector<Element>(tuple.begin(), tuple.end()));
      const MedianReport report = median_set(lattice, xi);
      if (distributive && out[0].verdict == Verdict::holds) {
        const ElementSet expected = lattice.leq(report.m_lower, report.m_upper)
                                        ? interval(lattice, report.m_lower, report.m_upper)
                                        : ElementSet{};
        if (expected != report.medians)
          out[0] = Outcome::fail({tuple.begin(), tuple.end()}, std::nullopt,
                                 "median set differs from [m, m']");
      }
      if (semimodular && out[1].verdict == Verdict::holds) {
        for (Element y : report.medians) {
          if (!lattice.leq(report.m_lower, y)) {
            out[1] = Outcome::fail({tuple.begin(), tuple.end()}, y, "median not above m");
            break;
          }
        }
      }
      if (modular && out[2].verdict == Verdict::holds && report.violation)
        out[2] = Outcome::fail({tuple.begin(), tuple.end()}, report.violation,
                               "median not below c1");
    });
    return out;
  };

  CampaignResult result = run_campaign(
      enumerated_family_name(options), family.size(), properties,
      [&](std::size_t i) -> const Lattice& { return family[i]; }, check, options.workers);
  result.max_size = options.max_size;
  result.k_max = options.k_max;
  return result;
}

CampaignResult verify_lemmas(const CampaignOptions& options) {
  const std::vector<Lattice> family = enumerate_family(options);
  const std::vector<PropertySpec> properties{{"two-profile-median"}, {"pb-exclusion"}};

  auto check = [&](std::size_t index) {
    const Lattice& lattice = family[index];
    std::vector<Outcome> out(2, Outcome::skip());
    if (!is_semimodular(lattice)) return out;
    out[0] = Outcome::pass();
    out[1] = Outcome::pass();

    for_each_multiset(lattice.size(), 2, [&](std::span<const Element> pair) {
      if (out[0].verdict != Verdict::holds) return;
      const MedianReport report = median_set(lattice, Profile{pair[0], pair[1]});
      for (Element y : report.medians) {
        if (!lattice.leq(y, lattice.join(pair[0], pair[1]))) {
          out[0] = Outcome::fail({pair.begin(), pair.end()}, y, "median not below x1 v x2");
          return;
        }
      }
    });

    for_each_bounded_profile(lattice.size(), options.k_max, [&](std::span<const Element> tuple) {
      if (out[1].verdict != Verdict::holds) return;
      const Profile xi(std::vector<Element>(tuple.begin(), tuple.end()));
      const MedianReport report = median_set(lattice, xi);
      for (Element z = 0; z < lattice.size(); ++z) {
        if (lattice.leq(z, report.c1)) continue;
        const PBPartition pb = pb_partition(lattice, xi, z);
        if (pb.parallel.size() > pb.below.size()) continue;
        if (std::binary_search(report.medians.begin(), report.medians.end(), z)) {
          out[1] = Outcome::fail({tuple.begin(), tuple.end()}, z,
                                 "|P|=" + std::to_string(pb.parallel.size()) + " <= |B|=" +
                                     std::to_string(pb.below.size()) + " but z is a median");
          return;
        }
      }
    });
    return out;
  };

  CampaignResult result = run_campaign(
      enumerated_family_name(options), family.size(), properties,
      [&](std::size_t i) -> const Lattice& { return family[i]; }, check, options.workers);
  result.max_size = options.max_size;
  result.k_max = options.k_max;
  return result;
}

CampaignResult verify_product_laws(const ProductSample& sample) {
  std::vector<Lattice> factors;
  for (std::size_t n = 2; n <= sample.max_factor_size; ++n) {
    std::vector<Lattice> level = enumerate_lattices(n, std::max(sample.max_factor_size, kDefaultEnumerationCap));
    std::move(level.begin(), level.end(), std::back_inserter(factors));
  }
  std::vector<std::pair<Lattice, Lattice>> pairs;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) pairs.emplace_back(factors[i], factors[j]);
  if (sample.include_constructed) {
    pairs.emplace_back(chain(3), chain(3));
    pairs.emplace_back(boolean(2), chain(3));
    pairs.emplace_back(figure1(), chain(2));
    pairs.emplace_back(chain(4), figure1());
  }

  std::vector<Lattice> products;
  products.reserve(pairs.size());
  for (const auto& [a, b] : pairs) products.push_back(product({a, b}));

  const std::vector<PropertySpec> properties{
      {"distance-additivity"}, {"breadth-additivity"},  {"median-componentwise"},
      {"c1-product"},          {"semimodular-product"}, {"semimodular-converse", false}};

  auto check = [&](std::size_t index) {
    const Lattice& a = pairs[index].first;
    const Lattice& b = pairs[index].second;
    const Lattice& p = products[index];
    const ProductEncoding encoding({a.size(), b.size()});
    std::vector<Coordinates> coords(p.size());
    for (Element v = 0; v < p.size(); ++v) coords[v] = encoding.decode(v);

    std::vector<Outcome> out;

    {
      Outcome o = Outcome::pass();
      for (Element x = 0; x < p.size() && o.verdict == Verdict::holds; ++x) {
        for (Element y = 0; y < p.size(); ++y) {
          const auto expected = a.distance(coords[x][0], coords[y][0]) + b.distance(coords[x][1], coords[y][1]);
          if (p.distance(x, y) != expected) {
            o = Outcome::fail({x, y}, std::nullopt,
                              "d=" + std::to_string(p.distance(x, y)) + " but factor sum " +
                                  std::to_string(expected));
            break;
          }
        }
      }
      out.push_back(std::move(o));
    }

    if (a.size() < 2 || b.size() < 2) {
      out.push_back(Outcome::skip());
    } else {
      const std::size_t bp = breadth(p);
      const std::size_t expected = breadth(a) + breadth(b);
      if (bp != expected) {
        out.push_back(Outcome::fail({}, std::nullopt,
                                    "breadth " + std::to_string(bp) + " but factor sum " +
                                        std::to_string(expected)));
      } else if (p.size() <= sample.bruteforce_limit && breadth_bruteforce(p, bp + 1) != bp) {
        out.push_back(Outcome::fail({}, std::nullopt, "brute-force breadth disagrees"));
      } else {
        out.push_back(Outcome::pass());
      }
    }

    {
      Outcome o = Outcome::pass();
      for_each_bounded_profile(p.size(), sample.k_max, [&](std::span<const Element> tuple) {
        if (o.verdict != Verdict::holds) return;
        std::vector<Element> first;
        std::vector<Element> second;
        for (Element v : tuple) {
          first.push_back(coords[v][0]);
          second.push_back(coords[v][1]);
        }
        const Profile xi(std::vector<Element>(tuple.begin(), tuple.end()));
        const MedianReport whole = median_set(p, xi);
        const auto r1 = remoteness_table(a, Profile(first));
        const auto r2 = remoteness_table(b, Profile(second));
        const auto min1 = *std::min_element(r1.begin(), r1.end());
        const auto min2 = *std::min_element(r2.begin(), r2.end());
        for (Element y = 0; y < p.size(); ++y) {
          if (whole.remoteness[y] != r1[coords[y][0]] + r2[coords[y][1]]) {
            o = Outcome::fail({tuple.begin(), tuple.end()}, y, "remoteness does not split");
            return;
          }
        }
        for (Element y : whole.medians) {
          if (r1[coords[y][0]] != min1 || r2[coords[y][1]] != min2) {
            o = Outcome::fail({tuple.begin(), tuple.end()}, y, "median has a non-median coordinate");
            return;
          }
        }
      });
      out.push_back(std::move(o));
    }

    {
      const bool factors_c1 = check_c1_property(a, sample.k_max, 1).holds() &&
                              check_c1_property(b, sample.k_max, 1).holds();
      if (!factors_c1) {
        out.push_back(Outcome::skip());
      } else {
        out.push_back(c1_outcome(p, sample.k_max));
      }
    }

    const bool sa = is_semimodular(a);
    const bool sb = is_semimodular(b);
    const bool sp = is_semimodular(p);
    if (sa && sb)
      out.push_back(sp ? Outcome::pass()
                       : Outcome::fail({}, std::nullopt, "product of semimodular factors is not semimodular"));
    else
      out.push_back(Outcome::skip());
    if (sp)
      out.push_back(sa && sb ? Outcome::pass()
                             : Outcome::fail({}, std::nullopt, "semimodular product with a non-semimodular factor"));
    else
      out.push_back(Outcome::skip());
    return out;
  };

  CampaignResult result = run_campaign(
      "products of enumerated lattices of size 2.." + std::to_string(sample.max_factor_size) +
          (sample.include_constructed ? " plus constructed pairs" : ""),
      products.size(), properties, [&](std::size_t i) -> const Lattice& { return products[i]; },
      check, sample.workers);
  std::size_t largest = 0;
  for (const Lattice& l : products) largest = std::max(largest, l.size());
  result.max_size = largest;
  result.k_max = sample.k_max;
  return result;
}

namespace {

CounterexampleReport build_report(const Lattice& lattice, const Profile& xi,
                                  const std::function<std::string(Element)>& label,
                                  const LnkLattice* lnk) {
  MedianReport median = median_set(lattice, xi);
  const std::uint64_t max_r = *std::max_element(median.remoteness.begin(), median.remoteness.end());

  std::optional<std::size_t> mismatches;
  if (lnk != nullptr) {
    std::size_t count = 0;
    for (Element y = 0; y < lattice.size(); ++y)
      if (lnk_closed_form_remoteness(*lnk, y) != median.remoteness[y]) ++count;
    mismatches = count;
  }

  std::ostringstream out;
  out << "lattice: " << (lattice.name().empty() ? "(unnamed)" : lattice.name()) << " (n=" << lattice.size()
      << ")\n";
  out << "profile:";
  for (Element x : xi.entries()) out << ' ' << label(x);
  out << '\n';
  out << "c1: " << label(median.c1) << '\n';
  out << "m: " << label(median.m_lower) << '\n';
  out << "m': " << label(median.m_upper) << '\n';
  out << "remoteness: min " << median.min_remoteness << " max " << max_r << '\n';
  out << "medians: " << median.medians.size() << '\n';
  for (Element y : median.medians)
    out << "  " << label(y) << (lattice.leq(y, median.c1) ? " below c1" : " NOT below c1") << '\n';
  if (mismatches) {
    out << "closed-form remoteness: "
        << (*mismatches == 0 ? "agrees with the graph metric on all " + std::to_string(lattice.size()) +
                                   " elements"
                             : std::to_string(*mismatches) + " mismatches")
        << '\n';
  }
  if (median.violation)
    out << "verdict: c1 violation, median " << label(*median.violation) << " is not below c1\n";
  else
    out << "verdict: no violation\n";

  return CounterexampleReport{.median = std::move(median),
                              .max_remoteness = max_r,
                              .closed_form_mismatches = mismatches,
                              .text = out.str()};
}

}  // namespace

CounterexampleReport counterexample_report(const Lattice& lattice, const Profile& xi) {
  return build_report(lattice, xi, [](Element y) { return std::to_string(y); }, nullptr);
}

CounterexampleReport counterexample_report(const LnkLattice& lnk, const Profile& xi) {
  auto label = [&](Element y) {
    std::string text = std::to_string(y) + "=(";
    const Coordinates c = lnk.coordinates(y);
    for (std::size_t i = 0; i < c.size(); ++i) text += (i ? "," : "") + std::to_string(c[i]);
    return text + ")";
  };
  const bool witness_profile = std::vector<Element>(xi.entries().begin(), xi.entries().end()) == lnk.xi;
  return build_report(lnk.lattice(), xi, label, witness_profile ? &lnk : nullptr);
}

}  // namespace latmed
