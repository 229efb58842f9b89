#ifndef NSRING_CHAINS_HPP_
#define NSRING_CHAINS_HPP_

#include <vector>

#include "nsring/relative_ideal.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

/// The Lipman chain R = R_0 ⊂ R_1 ⊂ ... ⊂ N, where each step blows up the
/// maximal ideal of the previous member.
struct LipmanChain {
  std::vector<NumericalSemigroup> members;        // from H up to N
  std::vector<Z> multiplicity_sequence;           // e of each member; e(N) = 1
};

LipmanChain lipman_chain(const NumericalSemigroup& H);

struct ChainTheoremReport {
  Z N = 0;                      // l(R/c)
  NumericalSemigroup S;
  bool s_is_member_N = false;   // S = R_N
  bool multiplicities_ok = false;  // e(R_n) = e(R) and e = v for n < N
};

/// Checks S = R_N with N = l(R/c) along the Lipman chain. Requires
/// Gorenstein, or generalized Gorenstein with minimal multiplicity;
/// otherwise throws HypothesisNotSatisfied. The checks throw
/// std::logic_error on failure (they are theorem-backed).
ChainTheoremReport verify_chain_theorem(const NumericalSemigroup& H);

/// The endomorphism filtration I:I ⊆ I^2:I^2 ⊆ ... up to stabilization;
/// the last entry equals blowup(I). Asserted weakly increasing.
std::vector<NumericalSemigroup> filtration(const RelativeIdeal& I);

}  // namespace nsring

#endif  // NSRING_CHAINS_HPP_
