#include "nsring/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<Z>& gens) {
  if (gens.empty()) throw EmptyGenerators();
  for (Z g : gens)
    if (g <= 0) throw NonPositiveGenerator(g);
  Z d = 0;
  for (Z g : gens) d = std::gcd(d, g);
  if (d != 1) throw NotCoprime(d);

  Z maxg = *std::max_element(gens.begin(), gens.end());
  Z ming = *std::min_element(gens.begin(), gens.end());

  // Sieve reachable sums on a doubling window until e = ming consecutive
  // members appear; from there on every integer is a member.
  Z bound = 2 * maxg + 2;
  std::vector<bool> mem;
  Z tail_start = -1;
  for (;;) {
    mem.assign(static_cast<size_t>(bound), false);
    mem[0] = true;
    for (Z i = 0; i < bound; ++i) {
      if (!mem[static_cast<size_t>(i)]) continue;
      for (Z g : gens)
        if (i + g < bound) mem[static_cast<size_t>(i + g)] = true;
    }
    Z run = 0;
    for (Z i = 0; i < bound; ++i) {
      run = mem[static_cast<size_t>(i)] ? run + 1 : 0;
      if (run == ming) {
        tail_start = i - ming + 1;
        break;
      }
    }
    if (tail_start >= 0) break;
    bound *= 2;
  }

  // Least c with [c, oo) in H.
  Z c = tail_start;
  while (c > 0 && mem[static_cast<size_t>(c - 1)]) --c;

  NumericalSemigroup H;
  H.conductor_ = c;
  H.member_.assign(mem.begin(), mem.begin() + c);
  H.finalize();
  return H;
}

NumericalSemigroup NumericalSemigroup::from_members(std::vector<bool> member, Z conductor) {
  if (conductor < 0 || static_cast<Z>(member.size()) < conductor)
    throw std::invalid_argument("membership table shorter than conductor");
  member.resize(static_cast<size_t>(conductor));
  if (conductor > 0 && !member[0])
    throw std::invalid_argument("0 must be a member");
  // closure under addition, with everything >= conductor a member
  auto in = [&](Z x) { return x >= conductor || (x >= 0 && member[static_cast<size_t>(x)]); };
  for (Z a = 0; a < conductor; ++a) {
    if (!member[static_cast<size_t>(a)]) continue;
    for (Z b = a; a + b < conductor; ++b) {
      if (in(b) && !in(a + b))
        throw std::invalid_argument("member table not closed under addition");
    }
  }
  NumericalSemigroup H;
  H.conductor_ = conductor;
  H.member_ = std::move(member);
  H.finalize();
  return H;
}

void NumericalSemigroup::finalize() {
  // canonical conductor: c-1 must be a gap
  while (conductor_ > 0 && member_[static_cast<size_t>(conductor_ - 1)]) {
    --conductor_;
    member_.pop_back();
  }

  small_members_.clear();
  for (Z i = 0; i < conductor_; ++i)
    if (member_[static_cast<size_t>(i)]) small_members_.push_back(i);

  genus_ = conductor_ - static_cast<Z>(small_members_.size());

  // minimal generators: positive members not expressible as a sum of two
  // positive members; all lie below c + e
  gens_.clear();
  if (conductor_ == 0) {
    gens_ = {1};
  } else {
    Z e = 0;
    for (Z i = 1; i < conductor_ && e == 0; ++i)
      if (member_[static_cast<size_t>(i)]) e = i;
    if (e == 0) e = conductor_;  // no positive member below c
    for (Z x = 1; x < conductor_ + e; ++x) {
      if (!contains(x)) continue;
      bool decomposable = false;
      for (Z h = 1; h < x && !decomposable; ++h)
        if (contains(h) && contains(x - h)) decomposable = true;
      if (!decomposable) gens_.push_back(x);
    }
  }

  // PF(H) = { n not in H | n + a in H for every minimal generator a };
  // all candidates are gaps in [0, f]. N gets PF = {} (DVR convention).
  pf_.clear();
  for (Z n = 0; n < conductor_; ++n) {
    if (member_[static_cast<size_t>(n)]) continue;
    bool ok = true;
    for (Z a : gens_)
      if (!contains(n + a)) {
        ok = false;
        break;
      }
    if (ok) pf_.push_back(n);
  }
}

std::vector<Z> NumericalSemigroup::apery(Z n) const {
  if (n <= 0 || !contains(n))
    throw std::invalid_argument("apery set needs a positive member");
  std::vector<Z> least(static_cast<size_t>(n), -1);
  Z found = 0;
  for (Z x = 0; found < n; ++x) {
    if (!contains(x)) continue;
    Z r = x % n;
    if (least[static_cast<size_t>(r)] < 0) {
      least[static_cast<size_t>(r)] = x;
      ++found;
    }
  }
  std::sort(least.begin(), least.end());
  return least;
}

bool NumericalSemigroup::is_symmetric() const {
  Z f = frobenius();
  for (Z x = 0; x <= f; ++x)
    if (contains(x) == contains(f - x)) return false;
  return true;
}

bool NumericalSemigroup::operator<(const NumericalSemigroup& o) const {
  if (genus_ != o.genus_) return genus_ < o.genus_;
  return gens_ < o.gens_;
}

bool NumericalSemigroup::subset_of(const NumericalSemigroup& o) const {
  for (Z x : small_members_)
    if (!o.contains(x)) return false;
  // [c, oo) must land in o as well
  for (Z x = conductor_; x < o.conductor(); ++x)
    if (!o.contains(x)) return false;
  return true;
}

std::string NumericalSemigroup::key() const {
  std::string s;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(gens_[i]);
  }
  return s;
}

std::string NumericalSemigroup::to_string() const { return "<" + key() + ">"; }

void for_each_semigroup(Z genus_max,
                        const std::function<void(const NumericalSemigroup&)>& fn) {
  if (genus_max < 0) throw NegativeBound(genus_max);
  // Depth-first over the semigroup tree: a child removes one minimal
  // generator a > f(H), so its conductor becomes a+1 and genus grows by one.
  std::function<void(const NumericalSemigroup&)> rec =
      [&](const NumericalSemigroup& H) {
        fn(H);
        if (H.genus() == genus_max) return;
        Z f = H.frobenius();
        for (Z a : H.minimal_generators()) {
          if (a <= f) continue;
          std::vector<bool> mem(static_cast<size_t>(a + 1), false);
          for (Z x : H.small_members()) mem[static_cast<size_t>(x)] = true;
          for (Z x = H.conductor(); x <= a; ++x) mem[static_cast<size_t>(x)] = true;
          mem[static_cast<size_t>(a)] = false;
          rec(NumericalSemigroup::from_members(std::move(mem), a + 1));
        }
      };
  rec(NumericalSemigroup::naturals());
}

std::vector<NumericalSemigroup> enumerate_by_genus(Z genus_max) {
  std::vector<NumericalSemigroup> out;
  for_each_semigroup(genus_max, [&](const NumericalSemigroup& H) { out.push_back(H); });
  return out;
}

}  // namespace nsring
