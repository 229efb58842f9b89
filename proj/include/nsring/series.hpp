#ifndef NSRING_SERIES_HPP_
#define NSRING_SERIES_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsring/errors.hpp"
#include "nsring/fields.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

/// An element of k[[t]] modulo t^N. Coefficients are exact (ℚ or GF(p)).
/// Arithmetic results carry the smaller of the operand precisions.
template <class F>
class TruncatedSeries {
 public:
  using Elem = typename F::Elem;

  TruncatedSeries(F field, Z prec)
      : field_(std::move(field)), coeff_(static_cast<size_t>(prec), field_.zero()) {}

  static TruncatedSeries monomial(const F& field, Z prec, Z exp, Elem c) {
    TruncatedSeries s(field, prec);
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp < prec) s.coeff_[static_cast<size_t>(exp)] = std::move(c);
    return s;
  }

  Z precision() const { return static_cast<Z>(coeff_.size()); }
  const F& field() const { return field_; }

  const Elem& at(Z k) const { return coeff_[static_cast<size_t>(k)]; }
  void set(Z k, Elem c) { coeff_[static_cast<size_t>(k)] = std::move(c); }

  /// Least degree with a nonzero coefficient; empty when the series is 0
  /// below the precision (meaning valuation >= N).
  std::optional<Z> valuation() const {
    for (Z k = 0; k < precision(); ++k)
      if (!field_.is_zero(at(k))) return k;
    return std::nullopt;
  }
  bool is_zero() const { return !valuation().has_value(); }

  TruncatedSeries truncated(Z prec) const {
    TruncatedSeries out(field_, prec);
    for (Z k = 0; k < std::min(prec, precision()); ++k) out.set(k, at(k));
    return out;
  }

  TruncatedSeries operator+(const TruncatedSeries& o) const {
    TruncatedSeries out(field_, std::min(precision(), o.precision()));
    for (Z k = 0; k < out.precision(); ++k)
      out.set(k, field_.add(at(k), o.at(k)));
    return out;
  }
  TruncatedSeries operator-(const TruncatedSeries& o) const {
    TruncatedSeries out(field_, std::min(precision(), o.precision()));
    for (Z k = 0; k < out.precision(); ++k)
      out.set(k, field_.sub(at(k), o.at(k)));
    return out;
  }
  TruncatedSeries operator*(const TruncatedSeries& o) const {
    TruncatedSeries out(field_, std::min(precision(), o.precision()));
    for (Z i = 0; i < precision(); ++i) {
      if (field_.is_zero(at(i))) continue;
      for (Z j = 0; i + j < out.precision() && j < o.precision(); ++j) {
        if (field_.is_zero(o.at(j))) continue;
        out.set(i + j, field_.add(out.at(i + j), field_.mul(at(i), o.at(j))));
      }
    }
    return out;
  }

  TruncatedSeries scaled(const Elem& c) const {
    TruncatedSeries out(field_, precision());
    for (Z k = 0; k < precision(); ++k) out.set(k, field_.mul(at(k), c));
    return out;
  }

  /// Multiplication by t^k.
  TruncatedSeries shifted(Z k) const {
    TruncatedSeries out(field_, precision());
    for (Z i = 0; i + k < precision(); ++i) out.set(i + k, at(i));
    return out;
  }

  /// Divides by the leading coefficient, making the series monic.
  TruncatedSeries monic() const {
    auto v = valuation();
    if (!v) return *this;
    return scaled(field_.inv(at(*v)));
  }

  bool same_below(const TruncatedSeries& o, Z prec) const {
    for (Z k = 0; k < prec; ++k)
      if (!field_.eq(at(k), o.at(k))) return false;
    return true;
  }

  /// Exponents with nonzero coefficients.
  std::vector<Z> support() const {
    std::vector<Z> out;
    for (Z k = 0; k < precision(); ++k)
      if (!field_.is_zero(at(k))) out.push_back(k);
    return out;
  }

  std::string to_string() const;

 private:
  F field_;
  std::vector<Elem> coeff_;
};

template <class F>
std::string TruncatedSeries<F>::to_string() const {
  std::string s;
  for (Z k : support()) {
    if (!s.empty()) s += " + ";
    s += field_.to_string(at(k)) + "*t^" + std::to_string(k);
  }
  if (s.empty()) s = "0";
  return s + " + O(t^" + std::to_string(precision()) + ")";
}

/// One parsed term of a series literal: coefficient numerator/denominator
/// (or the sweep slot "c") times t^exp.
struct SeriesTerm {
  long long num = 1;
  long long den = 1;
  Z exp = 0;
  bool slot = false;  // coefficient is the template parameter c
};

/// A parsed series literal, e.g. "t^6 - c*t^7". Terms with slot = true take
/// the sweep parameter as coefficient.
struct SeriesPattern {
  std::vector<SeriesTerm> terms;
  bool has_slot() const {
    for (const auto& t : terms)
      if (t.slot) return true;
    return false;
  }

  template <class F>
  TruncatedSeries<F> instantiate(const F& field, Z prec,
                                 typename F::Elem c) const {
    TruncatedSeries<F> out(field, prec);
    for (const auto& t : terms) {
      typename F::Elem coeff =
          t.slot ? field.mul(c, field.from_fraction(t.num, t.den))
                 : field.from_fraction(t.num, t.den);
      if (t.exp < prec)
        out.set(t.exp, field.add(out.at(t.exp), coeff));
    }
    return out;
  }

  template <class F>
  TruncatedSeries<F> instantiate(const F& field, Z prec) const {
    return instantiate(field, prec, field.one());
  }
};

/// Parses "t^6 - 1*t^7 + 2/3*t^10" style literals; "c" is the sweep slot.
/// Throws std::invalid_argument on malformed input.
SeriesPattern parse_series(const std::string& text);

/// Parses a comma-separated list of series literals.
std::vector<SeriesPattern> parse_series_list(const std::string& text);

}  // namespace nsring

#endif  // NSRING_SERIES_HPP_
