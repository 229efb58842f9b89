#ifndef NSRING_FIELDS_HPP_
#define NSRING_FIELDS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsring {

/// Exact rational coefficients (GMP). Stateless; all field objects compare
/// equal.
class Rationals {
 public:
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_fraction(long long num, long long den) const {
    Elem q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
  }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return Elem(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "q"; }
  bool operator==(const Rationals&) const { return true; }
};

/// GF(p) for a prime p < 2^31. Elements are canonical representatives in
/// [0, p).
class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus is not prime");
    if (p >> 31) throw std::invalid_argument("modulus too large");
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t size() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return p_ == 1 ? 0 : 1; }
  Elem from_fraction(long long num, long long den) const {
    Elem n = reduce(num);
    Elem d = reduce(den);
    return mul(n, inv(d));
  }
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return pow(a, p_ - 2);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "p:" + std::to_string(p_); }
  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem reduce(long long x) const {
    long long m = x % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<Elem>(m);
  }

  std::uint64_t p_;
};

}  // namespace nsring

#endif  // NSRING_FIELDS_HPP_
