#ifndef NSRING_THEOREM_ORACLE_HPP_
#define NSRING_THEOREM_ORACLE_HPP_

#include <json.hpp>

#include <string>
#include <vector>

#include "nsring/relative_ideal.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

using json = nlohmann::ordered_json;

/// One machine-verification certificate: an instance (a semigroup, or a
/// semigroup/ideal pair), the enumerated evidence, and a pass/fail verdict
/// with explicit witnesses on failure. All category-level statements are
/// checked on the rank-one monomial sector only; every certificate carries
/// a "sector" tag so no claim exceeds what was computed.
struct Certificate {
  std::string suite;
  std::string instance;   // "3,7,8" or "3,7,8 | 3,7,8@..."
  bool pass = false;
  json detail;            // self-contained evidence, replayable
};

/// For every integral monomial ideal with min(E) <= c(H):
/// [tr(I) = I] <=> [I:I = R:I].
Certificate verify_trace_characterization(const NumericalSemigroup& H);

/// For a regular reflexive trace ideal I with A = I:I, checks on the
/// min-0 monomial sector:
///  (a) {A-reflexive A-ideals} ⊆ {R-reflexive, tr ⊆ I} ⊆ {A-ideals},
///  (b) equality on the left <=> I stable <=> I principal over A,
///  (c) equality on the right <=> I ⊆ c <=> IK = I; and
///      I stable and I ⊆ c <=> A Gorenstein.
Certificate verify_main(const NumericalSemigroup& H, const RelativeIdeal& I);

/// type(m:m) = 1 <=> [mK = m and m stable], for H != N.
Certificate verify_maximal_ideal_endo(const NumericalSemigroup& H);

/// c is a reflexive trace ideal, c:c = S, and the sector equality
/// {R-reflexive with trace ⊆ c} = {S-ideals}.
Certificate verify_conductor_sector(const NumericalSemigroup& H);

/// Counting: reflexive classes against the predicted structure, under
/// whichever hypotheses hold (Gorenstein/GGL+minmult chain count;
/// mV ⊆ R two-class form; Arf chain form).
Certificate verify_counts(const NumericalSemigroup& H);

/// All regular reflexive trace monomial ideals of H (the setting ideals),
/// with min(E) <= c(H).
std::vector<RelativeIdeal> setting_ideals(const NumericalSemigroup& H);

struct SuiteSummary {
  Z instances = 0;
  Z violations = 0;
};

/// Runs one suite over all semigroups of genus <= genus_max, streaming one
/// certificate per instance. Suites: prop110, cor34, cor35, counts, main.
SuiteSummary run_suite(const std::string& suite, Z genus_max,
                       const std::function<void(const Certificate&)>& sink);

}  // namespace nsring

#endif  // NSRING_THEOREM_ORACLE_HPP_
