#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "latmed/constructions.hpp"
#include "latmed/enumerate.hpp"
#include "latmed/lattice.hpp"
#include "latmed/median.hpp"

namespace latmed {

/// Per-property outcome counts; holds + fails + skipped equals the number of
/// lattices (or factor pairs) examined.
struct PropertyTally {
  std::string property;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t skipped = 0;
  /// Reported-only properties never fail a campaign.
  bool asserted = true;
};

struct CampaignViolation {
  std::string property;
  Lattice lattice;
  std::vector<Element> profile;
  std::optional<Element> witness;
  std::string detail;
};

struct CampaignResult {
  std::string family;
  std::size_t lattices_examined = 0;
  std::vector<PropertyTally> tallies;
  std::vector<CampaignViolation> violations;
  std::size_t max_size = 0;
  std::size_t k_max = 0;

  /// No asserted property failed.
  bool passed() const;
  const PropertyTally* tally(std::string_view property) const;
  /// Deterministic plain-text rendering.
  std::string to_text() const;
};

struct CampaignOptions {
  std::size_t max_size = 7;
  std::size_t k_max = 3;
  /// 0 picks default_worker_count().
  std::size_t workers = 0;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  /// Where theorem-a violations are written as lattice files.
  std::optional<std::filesystem::path> dump_dir;
};

/// Over every enumerated lattice of size 1..max_size:
///   theorem-a         semimodular of breadth <= 2 gives no c1 violation
///   distributive-c1   distributive gives no c1 violation
///   order-chain       distributive => modular => semimodular => graded
CampaignResult verify_theorem_a(const CampaignOptions& options);

/// Same properties over a supplied family, plus an unconditional
/// "c1-median" check on every member (a failure there is a recorded violation
/// but only falsifies the theorem when the hypotheses hold).
CampaignResult verify_theorem_a(std::span<const Lattice> family, const std::string& family_name,
                                const CampaignOptions& options);

/// Survey bounds over every enumerated lattice and bounded profile:
///   distributive-interval  M(ξ) = [m(ξ), m′(ξ)] in distributive lattices
///   leclerc-bound          M(ξ) ⊆ [m(ξ), 1] in semimodular lattices
///   modular-c1             no c1 violation in modular lattices
CampaignResult verify_survey(const CampaignOptions& options);

/// Lemma invariants on every enumerated semimodular lattice:
///   two-profile-median  every median of (x1, x2) lies below x1 ∨ x2
///   pb-exclusion        z ≰ c1(ξ) and |P| <= |B| imply z ∉ M(ξ)
/// Non-semimodular lattices are tallied as skipped.
CampaignResult verify_lemmas(const CampaignOptions& options);

struct ProductSample {
  /// Enumerated factors of sizes 2..max_factor_size, all unordered pairs.
  std::size_t max_factor_size = 5;
  /// Adds pairs of constructed lattices (chains, boolean(2), figure1).
  bool include_constructed = true;
  std::size_t k_max = 3;
  std::size_t workers = 0;
  /// breadth_bruteforce confirms breadth on products up to this size.
  std::size_t bruteforce_limit = 25;
};

/// Laws for direct products L1 x L2 over the sampled factor pairs:
///   distance-additivity    d(x, y) = d(x1, y1) + d(x2, y2)
///   breadth-additivity     br(L1 x L2) = br(L1) + br(L2)
///   median-componentwise   y ∈ M(ξ) implies yi ∈ M(ξi)
///   c1-product             c1 factors (up to k_max) give a c1 product
///   semimodular-product    semimodular factors give a semimodular product
///   semimodular-converse   (reported) semimodular product has semimodular factors
CampaignResult verify_product_laws(const ProductSample& sample);

/// Human-readable analysis of one profile.
struct CounterexampleReport {
  MedianReport median;
  std::uint64_t max_remoteness = 0;
  /// For L(n, k): elements where the closed-form remoteness disagrees with the
  /// graph metric.
  std::optional<std::size_t> closed_form_mismatches;
  std::string text;

  bool has_violation() const noexcept { return median.violation.has_value(); }
};

CounterexampleReport counterexample_report(const Lattice& lattice, const Profile& xi);
/// Adds the closed-form comparison when `xi` is the witness profile of `lnk`.
CounterexampleReport counterexample_report(const LnkLattice& lnk, const Profile& xi);

}  // namespace latmed
