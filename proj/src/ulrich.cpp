#include "nsring/ulrich.hpp"

#include "nsring/errors.hpp"

namespace nsring {

UlrichEvidence is_ulrich_monomial(const NumericalSemigroup& H,
                                  const RelativeIdeal& E,
                                  bool include_principal) {
  if (!E.is_integral()) throw NotIntegral();
  RelativeIdeal R = RelativeIdeal::ring(H);
  if (E == R) throw NotPrimary();  // unit ideal

  UlrichEvidence ev;
  ev.mu = mu(E);
  ev.colength = length_quotient(R, E);
  for (Z x = 0; x < E.stabilization(); ++x) {
    if (!H.contains(x) || E.contains(x)) continue;
    bool in_socle = true;
    for (Z a : H.minimal_generators())
      if (!E.contains(x + a)) in_socle = false;
    if (in_socle) ++ev.socle_dim;
  }

  if (!is_stable(E)) {
    ev.verdict = UlrichVerdict::NotUlrich;
    ev.reason = "stability fails: E + E != min(E) + E";
    return ev;
  }
  Z m0 = E.min_element();
  ev.reduction = "t^" + std::to_string(m0);

  if (ev.mu == 1 && !include_principal) {
    ev.verdict = UlrichVerdict::NotUlrich;
    ev.reason = "principal ideal (I/(a) = 0), excluded by convention";
    return ev;
  }

  ev.lhs = length_quotient(E, RelativeIdeal::from_generators(H, {m0}));
  ev.rhs = (ev.mu - 1) * ev.colength;
  ev.verdict = (ev.lhs == ev.rhs) ? UlrichVerdict::Ulrich : UlrichVerdict::NotUlrich;
  if (ev.verdict == UlrichVerdict::NotUlrich)
    ev.reason = "I/(a) is not free over R/I";
  return ev;
}

std::vector<RelativeIdeal> enumerate_ulrich_monomial(const NumericalSemigroup& H,
                                                     Z min_bound,
                                                     bool include_principal) {
  std::vector<RelativeIdeal> out;
  for_each_integral_ideal(H, min_bound, [&](const RelativeIdeal& E) {
    if (E.min_element() == 0) return;  // the unit ideal
    auto ev = is_ulrich_monomial(H, E, include_principal);
    if (ev.verdict == UlrichVerdict::Ulrich) out.push_back(E);
  });
  return out;
}

std::vector<std::uint64_t> field_sweep(const NumericalSemigroup& H,
                                       const std::vector<SeriesPattern>& tpl,
                                       const PrimeField& field, Z prec,
                                       const UlrichOptions& opts) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 0; c < field.size(); ++c) {
    // substitute the slot: c is a canonical representative, so it folds
    // into an integer coefficient
    std::vector<SeriesPattern> inst = tpl;
    for (auto& p : inst)
      for (auto& t : p.terms)
        if (t.slot) {
          t.num *= static_cast<long long>(c);
          t.slot = false;
        }
    auto ev = is_ulrich_series(H, inst, field, prec, opts);
    if (ev.verdict == UlrichVerdict::Ulrich) out.push_back(c);
  }
  return out;
}

}  // namespace nsring
