#ifndef NSRING_RELATIVE_IDEAL_HPP_
#define NSRING_RELATIVE_IDEAL_HPP_

#include <functional>
#include <string>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

/// A relative ideal of H: a set E of integers with E + H ⊆ E and a minimum.
/// This is the value set of a monomial fractional ideal of R = k[[H]], and
/// the universal carrier for I, K, the conductor, the maximal ideal and the
/// value sets of overrings.
///
/// Stored canonically as (min, membership on [min, stab), stab) where stab
/// is the least s with [s, oo) ⊆ E. Two ideals are equal iff the triples
/// agree. Instances are immutable.
class RelativeIdeal {
 public:
  /// Default-constructs the ring of N, i.e. the value set [0, oo).
  RelativeIdeal() = default;

  /// E = union of g + H over the given generators. Throws EmptyGenerators.
  static RelativeIdeal from_generators(const NumericalSemigroup& H,
                                       const std::vector<Z>& gens);

  /// The canonical ideal K = { x | f(H) - x not in H }. Cross-checked
  /// against the pseudo-Frobenius form K = ∪_{p} (f - p) + H.
  static RelativeIdeal canonical(const NumericalSemigroup& H);

  /// H itself as a relative ideal (the ring R).
  static RelativeIdeal ring(const NumericalSemigroup& H);

  /// The maximal ideal m = H \ {0}.
  static RelativeIdeal maximal_ideal(const NumericalSemigroup& H);

  /// [k, oo) as a relative ideal.
  static RelativeIdeal tail(const NumericalSemigroup& H, Z k);

  /// A semigroup S with H ⊆ S, viewed as a relative ideal over H.
  static RelativeIdeal from_semigroup(const NumericalSemigroup& H,
                                      const NumericalSemigroup& S);

  /// Raw constructor from a window [lo, hi) bitset plus implicit tail
  /// [hi, oo); canonicalizes. Closure under H is asserted.
  static RelativeIdeal from_window(const NumericalSemigroup& H, Z lo,
                                   const std::vector<bool>& window);

  bool contains(Z x) const {
    if (x < min_) return false;
    if (x >= stab_) return true;
    return small_[static_cast<size_t>(x - min_)];
  }

  Z min_element() const { return min_; }
  Z stabilization() const { return stab_; }
  const NumericalSemigroup& ambient() const { return H_; }

  /// E ∩ [min, stab), ascending.
  std::vector<Z> small_elements() const;

  /// E ∩ [min, bound), ascending.
  std::vector<Z> elements_below(Z bound) const;

  bool is_integral() const;                       // E ⊆ H
  bool contains_ideal(const RelativeIdeal& J) const;  // E_J ⊆ E_I

  RelativeIdeal shift(Z k) const;
  RelativeIdeal normalized() const { return shift(-min_); }

  /// The same value set viewed over another ambient semigroup (closure
  /// under the new ambient is checked).
  RelativeIdeal with_ambient(const NumericalSemigroup& H) const;

  /// Reinterprets E as a numerical semigroup; requires min = 0 and additive
  /// closure (true for every endomorphism set I:I).
  NumericalSemigroup to_semigroup() const;

  /// Set equality (min, small part, stab); the ambient is not compared.
  bool operator==(const RelativeIdeal& o) const {
    return min_ == o.min_ && stab_ == o.stab_ && small_ == o.small_;
  }
  bool operator!=(const RelativeIdeal& o) const { return !(*this == o); }
  bool operator<(const RelativeIdeal& o) const;

  /// "{0,1,3,4} ∪ [6,∞)" or "[6,∞)".
  std::string to_string() const;

  /// "g1,g2@H-key", the minimal-generator literal accepted by the CLI.
  std::string literal() const;

 private:
  RelativeIdeal(NumericalSemigroup H, Z min, Z stab, std::vector<bool> small)
      : H_(std::move(H)), min_(min), stab_(stab), small_(std::move(small)) {}

  NumericalSemigroup H_;
  Z min_ = 0;
  Z stab_ = 0;
  std::vector<bool> small_;  // membership on [min_, stab_)
};

/// I - J = { z | z + E_J ⊆ E_I } (the colon ideal, Hom(J, I)).
RelativeIdeal colon(const RelativeIdeal& I, const RelativeIdeal& J);
RelativeIdeal colon(const NumericalSemigroup& H, const RelativeIdeal& J);

/// The ideal product IJ: E = { x + y | x in E_I, y in E_J }.
RelativeIdeal sumset(const RelativeIdeal& I, const RelativeIdeal& J);

/// The module sum I + J: set union of value sets.
RelativeIdeal module_sum(const RelativeIdeal& I, const RelativeIdeal& J);

/// tr_R(I) = (R:I)I.
RelativeIdeal trace(const RelativeIdeal& I);

/// Integral I is a trace ideal iff I:I = R:I; asserted equivalent to
/// tr(I) = I. Throws NotIntegral.
bool is_trace(const RelativeIdeal& I);

/// R:(R:I) = I.
bool is_reflexive(const RelativeIdeal& I);

/// I^2 = min(I) + I, i.e. I^2 = aI with the monomial a = t^{min E}.
bool is_stable(const RelativeIdeal& I);

/// R^I = ∪_n (I^n : I^n), computed as (I^n : I^n) for the first n with
/// I^{n+1} = min(I) + I^n.
NumericalSemigroup blowup(const RelativeIdeal& I);

/// End(I) = I : I as a numerical semigroup.
NumericalSemigroup endomorphism_semigroup(const RelativeIdeal& I);

/// Minimal monomial generators of I: E \ ∪_{0 != h in H} (h + E).
std::vector<Z> minimal_generators(const RelativeIdeal& I);
Z mu(const RelativeIdeal& I);

/// ℓ_R(I/J) = |E_I \ E_J| for J ⊆ I. Throws NotContained.
Z length_quotient(const RelativeIdeal& I, const RelativeIdeal& J);

/// Minimal generators of the quotient module I/J: the exponent set
/// D = E_I \ E_J minus (H \ {0}) + D. Throws NotContained.
std::vector<Z> module_generators(const RelativeIdeal& I, const RelativeIdeal& J);

/// Visits every relative ideal E with min(E) = 0 and E ⊆ N (one
/// representative per shift-isomorphism class). Deterministic order:
/// subsets of the gap set in increasing binary order.
void for_each_normalized_ideal(const NumericalSemigroup& H,
                               const std::function<void(const RelativeIdeal&)>& fn);

/// The normalized ideals that are reflexive, in enumeration order.
std::vector<RelativeIdeal> reflexive_classes(const NumericalSemigroup& H);

/// Visits every integral ideal E ⊆ H with min(E) <= min_bound, grouped by
/// ascending min(E), via closure-propagating DFS on the window
/// [min, min + c(H)). Includes E = H when min_bound >= 0.
void for_each_integral_ideal(const NumericalSemigroup& H, Z min_bound,
                             const std::function<void(const RelativeIdeal&)>& fn);

}  // namespace nsring

#endif  // NSRING_RELATIVE_IDEAL_HPP_
