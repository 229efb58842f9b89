#ifndef NSRING_SEMIGROUP_HPP_
#define NSRING_SEMIGROUP_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nsring {

using Z = long long;

/// A numerical semigroup H = <a_1,...,a_l>: a cofinite additive submonoid
/// of the nonnegative integers, the value semigroup of k[[t^{a_1},...,t^{a_l}]].
///
/// Membership is stored as a bitset on [0, c(H)); every integer >= c(H) is a
/// member implicitly. Instances are immutable after construction.
class NumericalSemigroup {
 public:
  /// Default-constructs N (the semigroup of the DVR).
  NumericalSemigroup() : gens_{1} {}

  /// Builds H from any generating set; the stored generator list is minimal.
  /// Throws EmptyGenerators, NonPositiveGenerator, NotCoprime.
  static NumericalSemigroup from_generators(const std::vector<Z>& gens);

  /// Builds H from an explicit membership table on [0, conductor).
  /// The table must describe a valid semigroup: 0 in H, closed under
  /// addition, conductor minimal or larger than needed (it is re-trimmed).
  static NumericalSemigroup from_members(std::vector<bool> member, Z conductor);

  /// N itself, the value semigroup of the DVR k[[t]].
  static NumericalSemigroup naturals() { return from_generators({1}); }

  bool contains(Z x) const {
    if (x < 0) return false;
    if (x >= conductor_) return true;
    return member_[static_cast<size_t>(x)];
  }

  Z conductor() const { return conductor_; }
  Z frobenius() const { return conductor_ - 1; }
  Z genus() const { return genus_; }
  /// e(R): the least positive member.
  Z multiplicity() const { return gens_.front(); }
  /// v(R): the number of minimal generators.
  Z embedding_dim() const { return static_cast<Z>(gens_.size()); }
  const std::vector<Z>& minimal_generators() const { return gens_; }

  /// H ∩ [0, c(H)), ascending.
  const std::vector<Z>& small_members() const { return small_members_; }

  /// Pseudo-Frobenius numbers. For H = N this is empty by the DVR
  /// convention (the raw candidate -1 is excluded).
  const std::vector<Z>& pseudo_frobenius() const { return pf_; }

  /// Cohen-Macaulay type r(R) = |PF(H)|, with type(N) = 1.
  Z type() const { return pf_.empty() ? 1 : static_cast<Z>(pf_.size()); }

  /// Apery set of H with respect to a positive member n: the least member
  /// in each residue class mod n, ascending.
  std::vector<Z> apery(Z n) const;

  bool is_naturals() const { return conductor_ == 0; }

  /// H symmetric: x in H <=> f(H) - x not in H. Equivalent to type 1.
  bool is_symmetric() const;

  bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }
  bool operator!=(const NumericalSemigroup& o) const { return !(*this == o); }
  bool operator<(const NumericalSemigroup& o) const;

  bool subset_of(const NumericalSemigroup& o) const;

  /// Canonical key, e.g. "3,7,8".
  std::string key() const;
  /// Pretty form, e.g. "<3,7,8>".
  std::string to_string() const;

 private:
  void finalize();  // trims conductor, computes gens/PF/genus caches

  std::vector<Z> gens_;
  Z conductor_ = 0;
  std::vector<bool> member_;       // membership on [0, conductor_)
  std::vector<Z> small_members_;
  std::vector<Z> pf_;
  Z genus_ = 0;
};

/// Visits every numerical semigroup of genus <= genus_max exactly once, in
/// the depth-first order of the semigroup tree: children of H are obtained
/// by removing one minimal generator that exceeds f(H), taken in ascending
/// order. The root is N. Throws NegativeBound.
void for_each_semigroup(Z genus_max,
                        const std::function<void(const NumericalSemigroup&)>& fn);

std::vector<NumericalSemigroup> enumerate_by_genus(Z genus_max);

}  // namespace nsring

#endif  // NSRING_SEMIGROUP_HPP_
