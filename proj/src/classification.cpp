#include "nsring/classification.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

std::pair<NumericalSemigroup, Z> ring_S(const NumericalSemigroup& H) {
  RelativeIdeal K = RelativeIdeal::canonical(H);
  RelativeIdeal P = K;
  Z n = 1;
  for (;;) {
    RelativeIdeal next = sumset(P, K);
    if (next == P) break;
    P = next;
    ++n;
    if (n > H.conductor() + 4) throw std::logic_error("K-power chain did not stop");
  }
  return {P.to_semigroup(), n};
}

RelativeIdeal conductor_ideal(const NumericalSemigroup& H) {
  auto [S, n] = ring_S(H);
  RelativeIdeal c = colon(H, RelativeIdeal::from_semigroup(H, S));
  if (!is_trace(c) || !is_reflexive(c))
    throw std::logic_error("conductor is not a reflexive trace ideal");
  if (endomorphism_semigroup(c) != S)
    throw std::logic_error("c:c differs from S");
  return c;
}

bool is_arf(const NumericalSemigroup& H) {
  // x >= y >= z with x below c; larger x gives x+y-z >= x, automatic
  const auto& small = H.small_members();
  for (Z x : small)
    for (Z y : small) {
      if (y > x) break;
      for (Z z : small) {
        if (z > y) break;
        if (!H.contains(x + y - z)) return false;
      }
    }
  return true;
}

NumericalSemigroup arf_closure(const NumericalSemigroup& H) {
  Z c = H.conductor();
  if (c == 0) return H;
  std::vector<bool> mem(static_cast<size_t>(c), false);
  for (Z m : H.small_members()) mem[static_cast<size_t>(m)] = true;
  auto in = [&](Z x) { return x >= c || (x >= 0 && mem[static_cast<size_t>(x)]); };

  bool changed = true;
  while (changed) {
    changed = false;
    Z cur = c;  // current conductor of the growing set
    while (cur > 0 && in(cur - 1)) --cur;
    for (Z x = 0; x < cur; ++x) {
      if (!in(x)) continue;
      for (Z y = 0; y <= x; ++y) {
        if (!in(y)) continue;
        for (Z z = 0; z <= y; ++z) {
          if (!in(z)) continue;
          Z w = x + y - z;
          if (w < c && !mem[static_cast<size_t>(w)]) {
            mem[static_cast<size_t>(w)] = true;
            changed = true;
          }
        }
      }
    }
  }
  auto A = NumericalSemigroup::from_members(std::move(mem), c);
  if (!is_arf(A) || !H.subset_of(A))
    throw std::logic_error("arf closure saturation failed");
  return A;
}

ClassificationReport classify(const NumericalSemigroup& H) {
  ClassificationReport rep;
  rep.H = H;

  RelativeIdeal R = RelativeIdeal::ring(H);
  RelativeIdeal K = RelativeIdeal::canonical(H);
  RelativeIdeal m = RelativeIdeal::maximal_ideal(H);

  rep.gorenstein = (H.type() == 1);
  rep.almost_gorenstein = (sumset(m, K) == m);
  rep.minimal_multiplicity = is_stable(m);
  rep.arf = is_arf(H);

  // generalized Gorenstein: K/R free over R/a with a = R:K, tested by
  // l(K/R) = mu(K/R) * l(R/a)
  if (rep.gorenstein) {
    rep.generalized_gorenstein = true;
    rep.notes.push_back("ggl: Gorenstein");
  } else {
    RelativeIdeal a = colon(H, K);
    Z lkr = length_quotient(K, R);
    Z lra = length_quotient(R, a);
    Z mukr = static_cast<Z>(module_generators(K, R).size());
    rep.generalized_gorenstein = (lkr == mukr * lra);
    rep.notes.push_back("ggl: l(K/R)=" + std::to_string(lkr) + ", mu(K/R)=" +
                        std::to_string(mukr) + ", l(R/a)=" + std::to_string(lra));
  }

  // finite CM type iff mu(V) = e <= 3 and mu((mV + R)/R) <= 1, where
  // mV = [e, oo)
  {
    Z e = H.multiplicity();
    RelativeIdeal mV = RelativeIdeal::tail(H, e);
    RelativeIdeal mVR = module_sum(mV, R);
    Z mu_q = static_cast<Z>(module_generators(mVR, R).size());
    rep.finite_cm_type = (e <= 3) && (mu_q <= 1);
    rep.notes.push_back("finite_cm_type: e=" + std::to_string(e) +
                        ", mu((mV+R)/R)=" + std::to_string(mu_q));
  }

  auto [S, n] = ring_S(H);
  rep.S = S;
  rep.s_exponent = n;
  rep.conductor = conductor_ideal(H);
  rep.ell_R_mod_c = length_quotient(R, rep.conductor);

  if (rep.gorenstein || (rep.generalized_gorenstein && rep.minimal_multiplicity)) {
    if (S.is_naturals()) {
      rep.reflexive_count = rep.ell_R_mod_c + 1;  // |ind CM(DVR)| = 1
      rep.notes.push_back("reflexive_count: l(R/c) + 1, S is a DVR");
    } else {
      rep.notes.push_back("reflexive_count: l(R/c) + |ind CM(S)| with S = " +
                          S.to_string() + ", undetermined");
    }
  } else {
    rep.notes.push_back("reflexive_count: counting formula hypotheses fail");
  }

  // implication chains the theory guarantees
  if (rep.gorenstein && !rep.almost_gorenstein)
    throw std::logic_error("Gorenstein without almost Gorenstein");
  if (rep.almost_gorenstein && !rep.generalized_gorenstein)
    throw std::logic_error("almost Gorenstein without generalized Gorenstein");
  if (rep.arf && !rep.minimal_multiplicity)
    throw std::logic_error("Arf without minimal multiplicity");

  return rep;
}

ReflexiveCount reflexive_count(const NumericalSemigroup& H) {
  ClassificationReport rep = classify(H);
  if (!rep.gorenstein && !(rep.generalized_gorenstein && rep.minimal_multiplicity))
    throw HypothesisNotSatisfied(
        "counting formula needs Gorenstein, or generalized Gorenstein with "
        "minimal multiplicity");
  ReflexiveCount out{rep.ell_R_mod_c, rep.S, std::nullopt};
  if (rep.S.is_naturals()) out.total = rep.ell_R_mod_c + 1;
  return out;
}

TheoremConditions theorem_conditions(const NumericalSemigroup& H,
                                     const RelativeIdeal& I) {
  TheoremConditions out;
  out.is_setting_ideal = I.is_integral() && is_reflexive(I) && is_trace(I);
  out.stable = is_stable(I);

  RelativeIdeal c = conductor_ideal(H);
  RelativeIdeal K = RelativeIdeal::canonical(H);
  out.contained_in_c = c.contains_ideal(I);
  out.ik_equals_i = (sumset(I, K) == I);
  out.a_gorenstein = (endomorphism_semigroup(I).type() == 1);

  if (out.is_setting_ideal) {
    if (out.contained_in_c != out.ik_equals_i)
      throw std::logic_error("I ⊆ c and IK = I disagree on " + I.literal());
    if ((out.stable && out.contained_in_c) != out.a_gorenstein)
      throw std::logic_error("stable ∧ I ⊆ c and Gorenstein(A) disagree on " +
                             I.literal());
  }
  return out;
}

}  // namespace nsring
