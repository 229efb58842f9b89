#ifndef NSRING_CLASSIFICATION_HPP_
#define NSRING_CLASSIFICATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "nsring/relative_ideal.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

/// Ring-level verdicts for R = k[[H]], with the evidence used to reach them.
struct ClassificationReport {
  NumericalSemigroup H;
  bool gorenstein = false;
  bool almost_gorenstein = false;
  bool generalized_gorenstein = false;
  bool minimal_multiplicity = false;
  bool arf = false;
  bool finite_cm_type = false;
  NumericalSemigroup S;      // R[K] as a semigroup
  Z s_exponent = 0;          // first n with K^{n+1} = K^n
  RelativeIdeal conductor;   // c = R:S
  Z ell_R_mod_c = 0;         // l(R/c)
  std::optional<Z> reflexive_count;  // |ind ΩCM(R)| when the theory pins it
  std::vector<std::string> notes;    // provenance of each verdict
};

/// S = R[K]: the stable value of the K-power chain, and the first exponent
/// n with K^{n+1} = K^n.
std::pair<NumericalSemigroup, Z> ring_S(const NumericalSemigroup& H);

/// c = R:S. Asserts that c is a reflexive trace ideal with c:c = S.
RelativeIdeal conductor_ideal(const NumericalSemigroup& H);

ClassificationReport classify(const NumericalSemigroup& H);

/// The least Arf semigroup containing H: saturate x+y-z for x >= y >= z.
NumericalSemigroup arf_closure(const NumericalSemigroup& H);

/// Chain-free Arf test by triples (x, y, z below the conductor).
bool is_arf(const NumericalSemigroup& H);

struct ReflexiveCount {
  Z ell;                     // l(R/c)
  NumericalSemigroup S;
  std::optional<Z> total;    // ell + |ind CM(S)|; set only when S is a DVR
};

/// Reflexive-module count under the counting formula. Requires Gorenstein,
/// or generalized Gorenstein with minimal multiplicity; otherwise throws
/// HypothesisNotSatisfied. total is present only when S = N, where
/// |ind CM(S)| = 1.
ReflexiveCount reflexive_count(const NumericalSemigroup& H);

/// Per-ideal conditions of the main theorem for a candidate setting ideal.
struct TheoremConditions {
  bool is_setting_ideal = false;  // integral, reflexive, trace
  bool stable = false;
  bool contained_in_c = false;
  bool ik_equals_i = false;
  bool a_gorenstein = false;      // type(I:I) = 1
};

/// Evaluates the five conditions; when I is a setting ideal, asserts
/// contained_in_c <=> ik_equals_i and (stable and contained_in_c) <=>
/// a_gorenstein. A non-setting ideal is reported, not fatal.
TheoremConditions theorem_conditions(const NumericalSemigroup& H,
                                     const RelativeIdeal& I);

}  // namespace nsring

#endif  // NSRING_CLASSIFICATION_HPP_
