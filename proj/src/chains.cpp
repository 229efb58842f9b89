#include "nsring/chains.hpp"

#include <stdexcept>

#include "nsring/classification.hpp"
#include "nsring/errors.hpp"

namespace nsring {

LipmanChain lipman_chain(const NumericalSemigroup& H) {
  LipmanChain chain;
  NumericalSemigroup cur = H;
  for (;;) {
    chain.members.push_back(cur);
    chain.multiplicity_sequence.push_back(cur.multiplicity());
    if (cur.is_naturals()) break;
    NumericalSemigroup next = blowup(RelativeIdeal::maximal_ideal(cur));
    if (!cur.subset_of(next) || next == cur)
      throw std::logic_error("Lipman chain not strictly increasing");
    cur = next;
  }
  return chain;
}

ChainTheoremReport verify_chain_theorem(const NumericalSemigroup& H) {
  ClassificationReport rep = classify(H);
  if (!rep.gorenstein && !(rep.generalized_gorenstein && rep.minimal_multiplicity))
    throw HypothesisNotSatisfied(
        "chain theorem needs Gorenstein, or generalized Gorenstein with "
        "minimal multiplicity");

  ChainTheoremReport out;
  out.N = rep.ell_R_mod_c;
  out.S = rep.S;

  LipmanChain chain = lipman_chain(H);
  if (out.N >= static_cast<Z>(chain.members.size()))
    throw std::logic_error("Lipman chain shorter than l(R/c)");
  out.s_is_member_N = (chain.members[static_cast<size_t>(out.N)] == rep.S);

  out.multiplicities_ok = true;
  for (Z n = 0; n < out.N; ++n) {
    const auto& Rn = chain.members[static_cast<size_t>(n)];
    if (Rn.multiplicity() != H.multiplicity() ||
        Rn.multiplicity() != Rn.embedding_dim())
      out.multiplicities_ok = false;
  }

  if (!out.s_is_member_N || !out.multiplicities_ok)
    throw std::logic_error("chain theorem check failed on " + H.to_string());
  return out;
}

std::vector<NumericalSemigroup> filtration(const RelativeIdeal& I) {
  std::vector<NumericalSemigroup> out;
  RelativeIdeal P = I;
  Z cap = I.stabilization() - I.min_element() + 4;
  for (Z n = 0; n < cap; ++n) {
    out.push_back(endomorphism_semigroup(P));
    if (out.size() > 1 && !out[out.size() - 2].subset_of(out.back()))
      throw std::logic_error("endomorphism filtration not increasing");
    RelativeIdeal next = sumset(P, I);
    if (next == P.shift(I.min_element())) break;
    P = next;
  }
  if (out.back() != blowup(I))
    throw std::logic_error("filtration does not end at the blow-up");
  return out;
}

}  // namespace nsring
