// Test-only brute-force oracles. These deliberately avoid the library's
// algorithms: membership is computed by BFS over generator sums, ideals are
// plain bool tables over a window with an implied tail, and semigroups of
// bounded genus are found by exhausting gap sets. Slow and simple on purpose.
#ifndef NSRING_TESTS_ORACLES_HPP_
#define NSRING_TESTS_ORACLES_HPP_

#include <algorithm>
#include <set>
#include <vector>

namespace oracle {

using Z = long long;

// Membership table of <gens> on [0, bound) by BFS over sums.
inline std::vector<bool> sg_members(const std::vector<Z>& gens, Z bound) {
  std::vector<bool> mem(static_cast<size_t>(bound), false);
  std::vector<Z> queue = {0};
  mem[0] = true;
  while (!queue.empty()) {
    Z x = queue.back();
    queue.pop_back();
    for (Z g : gens) {
      Z y = x + g;
      if (y < bound && !mem[static_cast<size_t>(y)]) {
        mem[static_cast<size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  return mem;
}

inline Z sg_conductor(const std::vector<bool>& mem) {
  Z c = 0;
  for (Z i = static_cast<Z>(mem.size()) - 1; i >= 0; --i)
    if (!mem[static_cast<size_t>(i)]) {
      c = i + 1;
      break;
    }
  return c;
}

// A set of integers with an implied tail: x is a member iff x in [lo, hi)
// and bit set, or x >= hi. All oracle ideal arithmetic uses this shape.
struct TailSet {
  Z lo = 0;
  Z hi = 0;
  std::vector<bool> bits;  // on [lo, hi)

  bool has(Z x) const {
    if (x >= hi) return true;
    if (x < lo) return false;
    return bits[static_cast<size_t>(x - lo)];
  }
  static TailSet make(Z lo, Z hi) {
    TailSet s;
    s.lo = lo;
    s.hi = hi;
    s.bits.assign(static_cast<size_t>(hi - lo), false);
    return s;
  }
  void set(Z x) {
    if (x >= lo && x < hi) bits[static_cast<size_t>(x - lo)] = true;
  }
  std::set<Z> below(Z b) const {
    std::set<Z> out;
    for (Z x = lo; x < b; ++x)
      if (has(x)) out.insert(x);
    return out;
  }
  bool same_as(const TailSet& o, Z from, Z to) const {
    for (Z x = from; x < to; ++x)
      if (has(x) != o.has(x)) return false;
    return true;
  }
};

// E = union of g + H over gens, as a TailSet with window [min gen, hi).
inline TailSet ideal_from_gens(const std::vector<bool>& H_mem, Z H_c,
                               const std::vector<Z>& gens, Z hi) {
  Z lo = *std::min_element(gens.begin(), gens.end());
  TailSet E = TailSet::make(lo, hi);
  for (Z g : gens)
    for (Z x = 0; g + x < hi; ++x)
      if (x >= H_c || H_mem[static_cast<size_t>(x)]) E.set(g + x);
  return E;
}

// { z | z + B ⊆ A } scanned over [zlo, zhi); correct when zhi - 1 is in the
// constant-true range (zhi >= A-tail - min(B)).
inline TailSet colon(const TailSet& A, const TailSet& B, Z zlo, Z zhi, Z probe) {
  TailSet out = TailSet::make(zlo, zhi);
  for (Z z = zlo; z < zhi; ++z) {
    bool ok = true;
    for (Z x = B.lo; x < probe && ok; ++x)
      if (B.has(x) && !A.has(z + x)) ok = false;
    if (ok) out.set(z);
  }
  return out;
}

inline TailSet sum(const TailSet& A, const TailSet& B, Z hi) {
  TailSet out = TailSet::make(A.lo + B.lo, hi);
  for (Z x = A.lo; x < hi - B.lo; ++x) {
    if (!A.has(x)) continue;
    for (Z y = B.lo; x + y < hi; ++y)
      if (B.has(y)) out.set(x + y);
  }
  return out;
}

// All gap sets of numerical semigroups of genus <= gmax, as sorted member
// lists below the conductor. Exhausts subsets of [1, 2g-1].
inline std::vector<std::set<Z>> all_gapsets(Z gmax) {
  std::vector<std::set<Z>> out;
  out.push_back({});  // N: no gaps
  for (Z g = 1; g <= gmax; ++g) {
    std::vector<Z> range;
    for (Z x = 1; x <= 2 * g - 1; ++x) range.push_back(x);
    std::vector<bool> pick(range.size(), false);
    std::fill(pick.end() - g, pick.end(), true);
    // iterate over all size-g subsets via std::next_permutation on the mask
    std::sort(pick.begin(), pick.end());
    do {
      std::set<Z> gaps;
      for (size_t i = 0; i < range.size(); ++i)
        if (pick[i]) gaps.insert(range[i]);
      Z top = 4 * g + 4;
      std::vector<bool> mem(static_cast<size_t>(top), true);
      for (Z x : gaps) mem[static_cast<size_t>(x)] = false;
      bool ok = true;
      for (Z a = 1; a < top && ok; ++a) {
        if (!mem[static_cast<size_t>(a)]) continue;
        for (Z b = a; a + b < top; ++b)
          if (mem[static_cast<size_t>(b)] && !mem[static_cast<size_t>(a + b)]) {
            ok = false;
            break;
          }
      }
      if (ok) out.push_back(gaps);
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return out;
}

}  // namespace oracle

#endif  // NSRING_TESTS_ORACLES_HPP_
