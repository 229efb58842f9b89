#include "nsring/relative_ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

namespace {

void check_closure(const NumericalSemigroup& H, Z min, Z stab,
                   const std::vector<bool>& small) {
  for (Z x = min; x < stab; ++x) {
    if (!small[static_cast<size_t>(x - min)]) continue;
    for (Z g : H.minimal_generators()) {
      Z y = x + g;
      if (y < stab && !small[static_cast<size_t>(y - min)])
        throw std::invalid_argument("window is not closed under H");
    }
  }
}

}  // namespace

RelativeIdeal RelativeIdeal::from_window(const NumericalSemigroup& H, Z lo,
                                         const std::vector<bool>& window) {
  Z hi = lo + static_cast<Z>(window.size());
  Z min = hi;
  for (Z x = lo; x < hi; ++x)
    if (window[static_cast<size_t>(x - lo)]) {
      min = x;
      break;
    }
  Z stab = hi;
  while (stab > min && window[static_cast<size_t>(stab - 1 - lo)]) --stab;
  std::vector<bool> small(window.begin() + (min - lo), window.begin() + (stab - lo));
  check_closure(H, min, stab, small);
  return RelativeIdeal(H, min, stab, std::move(small));
}

RelativeIdeal RelativeIdeal::from_generators(const NumericalSemigroup& H,
                                             const std::vector<Z>& gens) {
  if (gens.empty()) throw EmptyGenerators();
  Z lo = *std::min_element(gens.begin(), gens.end());
  Z hi = *std::max_element(gens.begin(), gens.end()) + H.conductor();
  std::vector<bool> window(static_cast<size_t>(hi - lo), false);
  for (Z g : gens) {
    for (Z m : H.small_members())
      if (g + m < hi) window[static_cast<size_t>(g + m - lo)] = true;
    for (Z x = g + H.conductor(); x < hi; ++x)
      window[static_cast<size_t>(x - lo)] = true;
  }
  return from_window(H, lo, window);
}

RelativeIdeal RelativeIdeal::canonical(const NumericalSemigroup& H) {
  Z f = H.frobenius();
  std::vector<bool> window(static_cast<size_t>(f + 1 > 0 ? f + 1 : 0), false);
  for (Z x = 0; x <= f; ++x)
    if (!H.contains(f - x)) window[static_cast<size_t>(x)] = true;
  RelativeIdeal K = from_window(H, 0, window);

  // cross-check against K = ∪_{p in PF} (f - p) + H; for H = N the raw
  // pseudo-Frobenius set is {-1}
  std::vector<Z> pf = H.pseudo_frobenius();
  if (pf.empty()) pf = {-1};
  std::vector<Z> shifts;
  for (Z p : pf) shifts.push_back(f - p);
  if (from_generators(H, shifts) != K)
    throw std::logic_error("canonical ideal: PF form disagrees with gap form");
  return K;
}

RelativeIdeal RelativeIdeal::ring(const NumericalSemigroup& H) {
  return from_generators(H, {0});
}

RelativeIdeal RelativeIdeal::maximal_ideal(const NumericalSemigroup& H) {
  return from_generators(H, H.minimal_generators());
}

RelativeIdeal RelativeIdeal::tail(const NumericalSemigroup& H, Z k) {
  return RelativeIdeal(H, k, k, {});
}

RelativeIdeal RelativeIdeal::from_semigroup(const NumericalSemigroup& H,
                                            const NumericalSemigroup& S) {
  std::vector<bool> window(static_cast<size_t>(S.conductor()), false);
  for (Z m : S.small_members()) window[static_cast<size_t>(m)] = true;
  return from_window(H, 0, window);
}

std::vector<Z> RelativeIdeal::small_elements() const { return elements_below(stab_); }

std::vector<Z> RelativeIdeal::elements_below(Z bound) const {
  std::vector<Z> out;
  for (Z x = min_; x < bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

bool RelativeIdeal::is_integral() const {
  if (min_ < 0) return false;
  Z top = std::max(stab_, H_.conductor());
  for (Z x = min_; x < top; ++x)
    if (contains(x) && !H_.contains(x)) return false;
  return true;
}

bool RelativeIdeal::contains_ideal(const RelativeIdeal& J) const {
  if (J.min_ < min_) return false;
  Z top = std::max(stab_, J.stab_);
  for (Z x = J.min_; x < top; ++x)
    if (J.contains(x) && !contains(x)) return false;
  return true;
}

RelativeIdeal RelativeIdeal::shift(Z k) const {
  return RelativeIdeal(H_, min_ + k, stab_ + k, small_);
}

RelativeIdeal RelativeIdeal::with_ambient(const NumericalSemigroup& H) const {
  check_closure(H, min_, stab_, small_);
  return RelativeIdeal(H, min_, stab_, small_);
}

NumericalSemigroup RelativeIdeal::to_semigroup() const {
  if (min_ != 0)
    throw std::invalid_argument("value set with min != 0 is not a semigroup");
  std::vector<bool> mem(small_.begin(), small_.end());
  return NumericalSemigroup::from_members(std::move(mem), stab_);
}

bool RelativeIdeal::operator<(const RelativeIdeal& o) const {
  if (min_ != o.min_) return min_ < o.min_;
  if (stab_ != o.stab_) return stab_ < o.stab_;
  return small_ < o.small_;
}

std::string RelativeIdeal::to_string() const {
  std::string s;
  std::vector<Z> xs = small_elements();
  if (!xs.empty()) {
    s = "{";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(xs[i]);
    }
    s += "} ∪ ";
  }
  s += "[" + std::to_string(stab_) + ",∞)";
  return s;
}

std::string RelativeIdeal::literal() const {
  std::vector<Z> gens = minimal_generators(*this);
  std::string s;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(gens[i]);
  }
  return s + "@" + H_.key();
}

RelativeIdeal colon(const RelativeIdeal& I, const RelativeIdeal& J) {
  // z + E_J ⊆ E_I holds automatically once z + min(J) >= stab(I)
  Z lo = I.min_element() - J.min_element();
  Z hi = I.stabilization() - J.min_element();
  std::vector<bool> window(static_cast<size_t>(hi - lo), false);
  for (Z z = lo; z < hi; ++z) {
    bool ok = true;
    for (Z x = J.min_element(); x < I.stabilization() - z && ok; ++x)
      if (J.contains(x) && !I.contains(z + x)) ok = false;
    if (ok) window[static_cast<size_t>(z - lo)] = true;
  }
  return RelativeIdeal::from_window(I.ambient(), lo, window);
}

RelativeIdeal colon(const NumericalSemigroup& H, const RelativeIdeal& J) {
  return colon(RelativeIdeal::ring(H), J);
}

RelativeIdeal sumset(const RelativeIdeal& I, const RelativeIdeal& J) {
  Z lo = I.min_element() + J.min_element();
  Z hi = std::min(I.stabilization() + J.min_element(),
                  J.stabilization() + I.min_element());
  std::vector<bool> window(static_cast<size_t>(hi - lo), false);
  for (Z x = I.min_element(); x < hi - J.min_element(); ++x) {
    if (!I.contains(x)) continue;
    for (Z y = J.min_element(); x + y < hi; ++y)
      if (J.contains(y)) window[static_cast<size_t>(x + y - lo)] = true;
  }
  return RelativeIdeal::from_window(I.ambient(), lo, window);
}

RelativeIdeal module_sum(const RelativeIdeal& I, const RelativeIdeal& J) {
  Z lo = std::min(I.min_element(), J.min_element());
  Z hi = std::min(I.stabilization(), J.stabilization());
  if (hi < lo) hi = lo;
  std::vector<bool> window(static_cast<size_t>(hi - lo), false);
  for (Z x = lo; x < hi; ++x)
    if (I.contains(x) || J.contains(x)) window[static_cast<size_t>(x - lo)] = true;
  return RelativeIdeal::from_window(I.ambient(), lo, window);
}

RelativeIdeal trace(const RelativeIdeal& I) {
  return sumset(colon(I.ambient(), I), I);
}

bool is_trace(const RelativeIdeal& I) {
  if (!I.is_integral()) throw NotIntegral();
  bool colon_eq = colon(I, I) == colon(I.ambient(), I);
  bool trace_eq = trace(I) == I;
  if (colon_eq != trace_eq)
    throw std::logic_error("trace-ideal characterizations disagree on " + I.literal());
  return colon_eq;
}

bool is_reflexive(const RelativeIdeal& I) {
  RelativeIdeal R = RelativeIdeal::ring(I.ambient());
  return colon(R, colon(R, I)) == I;
}

bool is_stable(const RelativeIdeal& I) {
  return sumset(I, I) == I.shift(I.min_element());
}

NumericalSemigroup blowup(const RelativeIdeal& I) {
  RelativeIdeal P = I;
  // the normalized powers increase inside a fixed window, so this stops
  Z cap = I.stabilization() - I.min_element() + 4;
  for (Z n = 0; n < cap; ++n) {
    RelativeIdeal next = sumset(P, I);
    if (next == P.shift(I.min_element()))
      return colon(P, P).to_semigroup();
    P = next;
  }
  throw std::logic_error("blowup did not stabilize");
}

NumericalSemigroup endomorphism_semigroup(const RelativeIdeal& I) {
  return colon(I, I).to_semigroup();
}

std::vector<Z> minimal_generators(const RelativeIdeal& I) {
  const NumericalSemigroup& H = I.ambient();
  Z e = H.multiplicity();
  std::vector<Z> out;
  for (Z x = I.min_element(); x < I.stabilization() + e; ++x) {
    if (!I.contains(x)) continue;
    bool decomposable = false;
    for (Z h = 1; h <= x - I.min_element() && !decomposable; ++h)
      if (H.contains(h) && I.contains(x - h)) decomposable = true;
    if (!decomposable) out.push_back(x);
  }
  return out;
}

Z mu(const RelativeIdeal& I) {
  return static_cast<Z>(minimal_generators(I).size());
}

Z length_quotient(const RelativeIdeal& I, const RelativeIdeal& J) {
  if (!I.contains_ideal(J)) throw NotContained();
  Z top = std::max(I.stabilization(), J.stabilization());
  Z n = 0;
  for (Z x = I.min_element(); x < top; ++x)
    if (I.contains(x) && !J.contains(x)) ++n;
  return n;
}

std::vector<Z> module_generators(const RelativeIdeal& I, const RelativeIdeal& J) {
  if (!I.contains_ideal(J)) throw NotContained();
  const NumericalSemigroup& H = I.ambient();
  Z top = std::max(I.stabilization(), J.stabilization());
  std::vector<Z> D;
  for (Z x = I.min_element(); x < top; ++x)
    if (I.contains(x) && !J.contains(x)) D.push_back(x);
  std::vector<Z> out;
  for (Z d : D) {
    bool covered = false;
    for (Z h = 1; h <= d - (D.empty() ? d : D.front()) && !covered; ++h)
      if (H.contains(h) &&
          std::binary_search(D.begin(), D.end(), d - h))
        covered = true;
    if (!covered) out.push_back(d);
  }
  return out;
}

void for_each_normalized_ideal(const NumericalSemigroup& H,
                               const std::function<void(const RelativeIdeal&)>& fn) {
  Z c = H.conductor();
  std::vector<Z> gaps;
  for (Z x = 1; x < c; ++x)
    if (!H.contains(x)) gaps.push_back(x);
  size_t g = gaps.size();
  std::vector<bool> window(static_cast<size_t>(c), false);
  for (unsigned long long mask = 0; mask < (1ULL << g); ++mask) {
    std::fill(window.begin(), window.end(), false);
    if (c > 0) window[0] = true;
    for (Z m : H.small_members()) window[static_cast<size_t>(m)] = true;
    for (size_t i = 0; i < g; ++i)
      if (mask >> i & 1) window[static_cast<size_t>(gaps[i])] = true;
    bool closed = true;
    for (Z x = 0; x < c && closed; ++x) {
      if (!window[static_cast<size_t>(x)]) continue;
      for (Z a : H.minimal_generators())
        if (x + a < c && !window[static_cast<size_t>(x + a)]) {
          closed = false;
          break;
        }
    }
    if (closed) fn(RelativeIdeal::from_window(H, 0, window));
  }
}

std::vector<RelativeIdeal> reflexive_classes(const NumericalSemigroup& H) {
  std::vector<RelativeIdeal> out;
  for_each_normalized_ideal(H, [&](const RelativeIdeal& E) {
    if (is_reflexive(E)) out.push_back(E);
  });
  return out;
}

void for_each_integral_ideal(const NumericalSemigroup& H, Z min_bound,
                             const std::function<void(const RelativeIdeal&)>& fn) {
  Z c = H.conductor();
  for (Z m0 = 0; m0 <= min_bound; ++m0) {
    if (!H.contains(m0)) continue;
    if (c == 0) {  // H = N: the only integral ideal with min m0 is [m0, oo)
      fn(RelativeIdeal::tail(H, m0));
      continue;
    }
    // members of H in (m0, m0 + c): the free/forced positions
    std::vector<Z> pos;
    for (Z x = m0 + 1; x < m0 + c; ++x)
      if (H.contains(x)) pos.push_back(x);
    std::vector<int> idx(static_cast<size_t>(c), -1);
    for (size_t i = 0; i < pos.size(); ++i)
      idx[static_cast<size_t>(pos[i] - m0)] = static_cast<int>(i);
    std::vector<bool> chosen(pos.size(), false);

    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == pos.size()) {
        std::vector<bool> window(static_cast<size_t>(c), false);
        window[0] = true;
        for (size_t j = 0; j < pos.size(); ++j)
          if (chosen[j]) window[static_cast<size_t>(pos[j] - m0)] = true;
        fn(RelativeIdeal::from_window(H, m0, window));
        return;
      }
      bool forced = false;
      for (Z a : H.minimal_generators()) {
        Z y = pos[i] - a;
        if (y == m0) {
          forced = true;
          break;
        }
        if (y > m0 && y < m0 + c) {
          int j = idx[static_cast<size_t>(y - m0)];
          if (j >= 0 && chosen[static_cast<size_t>(j)]) {
            forced = true;
            break;
          }
        }
      }
      if (forced) {
        chosen[i] = true;
        rec(i + 1);
        chosen[i] = false;
      } else {
        chosen[i] = false;
        rec(i + 1);
        chosen[i] = true;
        rec(i + 1);
        chosen[i] = false;
      }
    };
    rec(0);
  }
}

}  // namespace nsring
