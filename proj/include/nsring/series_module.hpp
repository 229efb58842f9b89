#ifndef NSRING_SERIES_MODULE_HPP_
#define NSRING_SERIES_MODULE_HPP_

#include <map>
#include <vector>

#include "nsring/relative_ideal.hpp"
#include "nsring/series.hpp"

namespace nsring {

/// A finitely generated R-submodule of k[[t]] for R = k[[H]], held as a
/// valuation staircase up to precision N: one monic basis series per leading
/// exponent, echelonized (distinct leads, lower rows fully reduced against
/// later ones). The staircase k-spans the module's image in k[[t]]/t^N, so
/// its key set is the module's value set below N.
template <class F>
class SubringIdeal {
 public:
  using Series = TruncatedSeries<F>;

  /// Builds the staircase closure of the given generators. Generators must
  /// be elements of R (support inside H, checked) and nonzero. The precision
  /// must meet the entry rule N >= c(H) + 2*max(val of gens) + e(H).
  /// Throws UnsupportedExponent, PrecisionTooLow, EmptyGenerators.
  static SubringIdeal span(const NumericalSemigroup& H, const F& field,
                           std::vector<Series> gens, Z prec);

  /// span without the entry precision rule, for ideals derived from an
  /// already-validated one (products, principal multiples, mA). The
  /// tail-agreement checks in lengths() and the 2N recheck still guard
  /// the derived results.
  static SubringIdeal span_derived(const NumericalSemigroup& H, const F& field,
                                   std::vector<Series> gens, Z prec);

  const NumericalSemigroup& ambient() const { return H_; }
  const F& field() const { return field_; }
  Z precision() const { return prec_; }
  const std::vector<Series>& generators() const { return gens_; }

  /// Leading exponents of the staircase: the value set below N, ascending.
  std::vector<Z> value_set() const {
    std::vector<Z> out;
    for (const auto& [v, row] : staircase_) out.push_back(v);
    return out;
  }

  bool value_set_contains(Z v) const { return staircase_.count(v) > 0; }

  /// Remainder of x after full reduction against the staircase: the result
  /// has no support on the value set (below min(precisions)).
  Series reduce(Series x) const;

  bool contains(const Series& x) const { return reduce(x).is_zero(); }

  /// Same staircase below the common precision. Throws PrecisionMismatch
  /// if the fields or ambient semigroups differ.
  bool equals(const SubringIdeal& o) const;

  /// Re-runs the closure at a higher precision and checks that the value
  /// set below the original precision is unchanged; throws PrecisionTooLow
  /// otherwise. Returns the refined ideal.
  SubringIdeal recheck_at(Z higher_prec) const;

  const std::map<Z, Series>& staircase() const { return staircase_; }

 private:
  SubringIdeal(NumericalSemigroup H, F field, Z prec)
      : H_(std::move(H)), field_(std::move(field)), prec_(prec) {}

  void insert_closure(std::vector<Series> pending);

  NumericalSemigroup H_;
  F field_;
  Z prec_;
  std::vector<Series> gens_;
  std::map<Z, Series> staircase_;
};

/// The product ideal AB, spanned by pairwise generator products.
template <class F>
SubringIdeal<F> product(const SubringIdeal<F>& A, const SubringIdeal<F>& B);

/// The principal multiple a·A.
template <class F>
SubringIdeal<F> scale(const TruncatedSeries<F>& a, const SubringIdeal<F>& A);

struct LengthData {
  Z mu = 0;         // mu(A) = dim A / mA
  Z colength = 0;   // l(R/A)
  Z socle_dim = 0;  // r(R/A) = dim of the socle of R/A
};

/// Lengths of an integral ideal A ⊆ R via staircase linear algebra.
/// Throws NotPrimary when the value set is not cofinite in H below N.
template <class F>
LengthData lengths(const SubringIdeal<F>& A);

// --- implementation ---

template <class F>
typename SubringIdeal<F>::Series SubringIdeal<F>::reduce(Series x) const {
  // one ascending pass: cancelling a monic row with lead k only changes
  // coefficients above k
  Z limit = std::min(prec_, x.precision());
  for (Z k = 0; k < limit; ++k) {
    if (field_.is_zero(x.at(k))) continue;
    auto it = staircase_.find(k);
    if (it == staircase_.end()) continue;
    x = x - it->second.truncated(x.precision()).scaled(x.at(k));
  }
  return x;
}

template <class F>
void SubringIdeal<F>::insert_closure(std::vector<Series> pending) {
  const std::vector<Z>& hgens = H_.minimal_generators();
  while (!pending.empty()) {
    Series x = reduce(pending.back());
    pending.pop_back();
    auto v = x.valuation();
    if (!v || *v >= prec_) continue;
    Series row = x.monic();
    staircase_.emplace(*v, row);
    // keep earlier rows fully reduced against the new one
    for (auto& [lead, r] : staircase_) {
      if (lead == *v) continue;
      if (!field_.is_zero(r.at(*v))) r = r - row.scaled(r.at(*v));
    }
    for (Z g : hgens)
      if (*v + g < prec_) pending.push_back(row.shifted(g));
  }
}

template <class F>
SubringIdeal<F> SubringIdeal<F>::span(const NumericalSemigroup& H, const F& field,
                                      std::vector<Series> gens, Z prec) {
  if (gens.empty()) throw EmptyGenerators();
  Z max_val = 0;
  for (const auto& g : gens) {
    auto v = g.valuation();
    if (v) max_val = std::max(max_val, *v);
  }
  Z min_prec = H.conductor() + 2 * max_val + H.multiplicity();
  if (prec < min_prec)
    throw PrecisionTooLow("need at least c(H) + 2*max(val) + e(H) = " +
                          std::to_string(min_prec));
  return span_derived(H, field, std::move(gens), prec);
}

template <class F>
SubringIdeal<F> SubringIdeal<F>::span_derived(const NumericalSemigroup& H,
                                              const F& field,
                                              std::vector<Series> gens, Z prec) {
  if (gens.empty()) throw EmptyGenerators();
  for (const auto& g : gens)
    for (Z e : g.support())
      if (!H.contains(e)) throw UnsupportedExponent(e);
  SubringIdeal out(H, field, prec);
  for (auto& g : gens) out.gens_.push_back(g.truncated(prec));
  out.insert_closure(out.gens_);
  return out;
}

template <class F>
bool SubringIdeal<F>::equals(const SubringIdeal& o) const {
  if (!(field_ == o.field_) || H_ != o.H_) throw PrecisionMismatch();
  Z common = std::min(prec_, o.prec_);
  for (Z v = 0; v < common; ++v) {
    auto a = staircase_.find(v);
    auto b = o.staircase_.find(v);
    if ((a == staircase_.end()) != (b == o.staircase_.end())) return false;
    if (a == staircase_.end()) continue;
    if (!a->second.same_below(b->second, common)) return false;
  }
  return true;
}

template <class F>
SubringIdeal<F> SubringIdeal<F>::recheck_at(Z higher_prec) const {
  SubringIdeal refined = span_derived(H_, field_, gens_, higher_prec);
  for (Z v = 0; v < prec_; ++v)
    if (value_set_contains(v) != refined.value_set_contains(v))
      throw PrecisionTooLow("value set changed when recomputed at precision " +
                            std::to_string(higher_prec));
  return refined;
}

template <class F>
SubringIdeal<F> product(const SubringIdeal<F>& A, const SubringIdeal<F>& B) {
  if (!(A.field() == B.field()) || A.ambient() != B.ambient())
    throw PrecisionMismatch();
  std::vector<TruncatedSeries<F>> gens;
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) gens.push_back(a * b);
  return SubringIdeal<F>::span_derived(A.ambient(), A.field(), gens,
                                       std::min(A.precision(), B.precision()));
}

template <class F>
SubringIdeal<F> scale(const TruncatedSeries<F>& a, const SubringIdeal<F>& A) {
  std::vector<TruncatedSeries<F>> gens;
  for (const auto& g : A.generators()) gens.push_back(a * g);
  return SubringIdeal<F>::span_derived(A.ambient(), A.field(), gens, A.precision());
}

namespace detail {

/// Rank of a dense matrix over F by Gaussian elimination.
template <class F>
Z matrix_rank(const F& field, std::vector<std::vector<typename F::Elem>> rows) {
  Z rank = 0;
  size_t cols = rows.empty() ? 0 : rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && field.is_zero(rows[piv][c])) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    auto inv = field.inv(rows[r][c]);
    for (size_t j = c; j < cols; ++j) rows[r][j] = field.mul(rows[r][j], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || field.is_zero(rows[i][c])) continue;
      auto f = rows[i][c];
      for (size_t j = c; j < cols; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[r][j]));
    }
    ++r;
    ++rank;
  }
  return rank;
}

}  // namespace detail

template <class F>
LengthData lengths(const SubringIdeal<F>& A) {
  const NumericalSemigroup& H = A.ambient();
  const F& field = A.field();
  Z N = A.precision();
  Z e = H.multiplicity();
  Z maxgen = H.minimal_generators().back();

  std::vector<Z> V = A.value_set();
  if (V.empty()) throw NotPrimary();

  // tail_V: from here on every integer lies in the value set, so all
  // quotient data lives below it
  Z tail_from = 0;
  for (Z x = 0; x < N; ++x)
    if (H.contains(x) && !A.value_set_contains(x)) tail_from = x + 1;
  Z tail_V = std::max(H.conductor(), tail_from);
  if (tail_V + maxgen + e > N)
    throw PrecisionTooLow("quotient data not settled below t^N");

  LengthData out;

  // colength l(R/A) = |H ∩ [0,N) \ V|
  for (Z x = 0; x < N; ++x)
    if (H.contains(x) && !A.value_set_contains(x)) ++out.colength;

  // mu(A) = |V \ value set of mA|; mA is spanned by the t^a-shifts of the
  // staircase rows
  {
    std::vector<TruncatedSeries<F>> mgens;
    for (const auto& [v, row] : A.staircase())
      for (Z a : H.minimal_generators())
        if (v + a < N) mgens.push_back(row.shifted(a));
    auto mA = SubringIdeal<F>::span_derived(H, field, mgens, N);
    for (Z v : V)
      if (!mA.value_set_contains(v)) ++out.mu;
    // beyond tail_V + e both value sets contain every integer
    for (Z x = tail_V + e; x < N; ++x)
      if (A.value_set_contains(x) != mA.value_set_contains(x))
        throw std::logic_error("mu: value sets of A and mA differ beyond the tail");
  }

  // socle of R/A: basis of the quotient is H \ V below N; the socle is the
  // common kernel of multiplication by each generator monomial
  {
    std::vector<Z> basis;
    for (Z x = 0; x < N; ++x)
      if (H.contains(x) && !A.value_set_contains(x)) basis.push_back(x);
    std::vector<size_t> index(static_cast<size_t>(N), SIZE_MAX);
    for (size_t i = 0; i < basis.size(); ++i)
      index[static_cast<size_t>(basis[i])] = i;

    std::vector<std::vector<typename F::Elem>> stacked;
    for (Z a : H.minimal_generators()) {
      // rows of the matrix of (mult by t^a): one row per output coordinate;
      // transpose orientation is irrelevant for the rank
      std::vector<std::vector<typename F::Elem>> cols;
      for (Z b : basis) {
        auto m = TruncatedSeries<F>::monomial(field, N, b + a, field.one());
        auto r = A.reduce(m);
        std::vector<typename F::Elem> col(basis.size(), field.zero());
        for (Z e : r.support()) {
          if (index[static_cast<size_t>(e)] == SIZE_MAX)
            throw std::logic_error("reduction left support outside the quotient basis");
          col[index[static_cast<size_t>(e)]] = r.at(e);
        }
        cols.push_back(std::move(col));
      }
      // transpose: stacked kernel computation wants x with M x = 0 for all a
      for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<typename F::Elem> row(basis.size(), field.zero());
        for (size_t j = 0; j < cols.size(); ++j) row[j] = cols[j][i];
        stacked.push_back(std::move(row));
      }
    }
    Z rank = stacked.empty() ? 0 : detail::matrix_rank(field, std::move(stacked));
    out.socle_dim = static_cast<Z>(basis.size()) - rank;
  }

  return out;
}

}  // namespace nsring

#endif  // NSRING_SERIES_MODULE_HPP_
