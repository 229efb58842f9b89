#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "nsring/classification.hpp"
#include "nsring/errors.hpp"
#include "nsring/ulrich.hpp"

using namespace nsring;

namespace {

NumericalSemigroup sg(std::vector<Z> g) { return NumericalSemigroup::from_generators(g); }

std::vector<SeriesPattern> patterns(const std::string& text) {
  return parse_series_list(text);
}

std::vector<SeriesPattern> monomial_patterns(const std::vector<Z>& exps) {
  std::vector<SeriesPattern> out;
  for (Z e : exps) {
    SeriesPattern p;
    p.terms.push_back({1, 1, e, false});
    out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_CASE("is_ulrich_monomial: conductor of <3,7,8>") {
  auto H = sg({3, 7, 8});
  auto ev = is_ulrich_monomial(H, RelativeIdeal::tail(H, 6));
  CHECK(ev.verdict == UlrichVerdict::Ulrich);
  CHECK(ev.mu == 3);
  CHECK(ev.lhs == 4);  // |E \ (6 + H)| = |{7,8,10,11}|
  CHECK(ev.rhs == 4);  // (3-1) * |{0,3}|
  CHECK(ev.colength == 2);
  CHECK(ev.socle_dim == 1);
}

TEST_CASE("is_ulrich_monomial: value set of (t^6, t^10) in <3,7> is not stable") {
  auto H = sg({3, 7});
  auto E = RelativeIdeal::from_generators(H, {6, 10});
  auto ev = is_ulrich_monomial(H, E);
  CHECK(ev.verdict == UlrichVerdict::NotUlrich);
  CHECK(ev.reason.find("stability") != std::string::npos);
}

TEST_CASE("is_ulrich_monomial: maximal ideal of <3,4,5>") {
  auto H = sg({3, 4, 5});
  auto ev = is_ulrich_monomial(H, RelativeIdeal::maximal_ideal(H));
  CHECK(ev.verdict == UlrichVerdict::Ulrich);
  CHECK(ev.mu == 3);
  CHECK(ev.lhs == 2);  // |{4,5}|
  CHECK(ev.rhs == 2);  // (3-1) * |{0}|
}

TEST_CASE("is_ulrich_monomial: errors and principal convention") {
  auto H = sg({3, 7});
  CHECK_THROWS_AS(is_ulrich_monomial(H, RelativeIdeal::canonical(sg({3, 7, 8}))
                                            .with_ambient(H)),
                  NotIntegral);
  CHECK_THROWS_AS(is_ulrich_monomial(H, RelativeIdeal::ring(H)), NotPrimary);

  auto P = RelativeIdeal::from_generators(H, {6});
  CHECK(is_ulrich_monomial(H, P).verdict == UlrichVerdict::NotUlrich);
  CHECK(is_ulrich_monomial(H, P, true).verdict == UlrichVerdict::Ulrich);
}

TEST_CASE("enumerate_ulrich_monomial") {
  CHECK(enumerate_ulrich_monomial(sg({3, 7}), 12).empty());

  auto found = enumerate_ulrich_monomial(sg({3, 7, 8}), 8);
  bool has_conductor = false;
  for (const auto& E : found)
    if (E == RelativeIdeal::tail(sg({3, 7, 8}), 6)) has_conductor = true;
  CHECK(has_conductor);

  CHECK(enumerate_ulrich_monomial(NumericalSemigroup::naturals(), 5).empty());
}

TEST_CASE("is_ulrich_series: Example 4.12 over GF(5)") {
  PrimeField F5(5);
  auto H = sg({3, 7});
  auto ev = is_ulrich_series(H, patterns("t^6 - t^7, t^10"), F5, 40);
  CHECK(ev.verdict == UlrichVerdict::Ulrich);
  CHECK(ev.mu == 2);
  CHECK(ev.lhs == 3);
  CHECK(ev.rhs == 3);

  auto bad = is_ulrich_series(H, patterns("t^6, t^10"), F5, 40);
  CHECK(bad.verdict == UlrichVerdict::NotUlrich);
  CHECK(bad.reason.find("stability") != std::string::npos);
}

TEST_CASE("is_ulrich_series: monomial generators agree with the monomial test") {
  Rationals Q;
  auto H = sg({3, 7, 8});
  auto ev = is_ulrich_series(H, patterns("t^6, t^7, t^8"), Q, 40);
  CHECK(ev.verdict == UlrichVerdict::Ulrich);
  auto em = is_ulrich_monomial(H, RelativeIdeal::tail(H, 6));
  CHECK(ev.mu == em.mu);
  CHECK(ev.colength == em.colength);
  CHECK(ev.socle_dim == em.socle_dim);
  CHECK(ev.lhs == em.lhs);
}

TEST_CASE("is_ulrich_series: NotVerified when candidates are withheld") {
  PrimeField F5(5);
  auto H = sg({3, 7});
  UlrichOptions opts;
  opts.use_generators = false;
  opts.extra_candidates = 0;
  auto ev = is_ulrich_series(H, patterns("t^6 - t^7, t^10"), F5, 40, opts);
  CHECK(ev.verdict == UlrichVerdict::NotVerified);
}

TEST_CASE("field_sweep: Example 4.12") {
  auto H = sg({3, 7});
  auto tpl = patterns("t^6 - c*t^7, t^10");

  auto s5 = field_sweep(H, tpl, PrimeField(5), 40);
  CHECK(s5 == std::vector<std::uint64_t>{1, 2, 3, 4});

  auto s2 = field_sweep(H, tpl, PrimeField(2), 40);
  CHECK(s2 == std::vector<std::uint64_t>{1});
}

TEST_CASE("field_sweep: template with no Ulrich members") {
  auto H = sg({3, 7});
  // (t^3 - c t^6, t^7) generates an ideal containing t^3-stuff; never Ulrich:
  // v(I) = m has mu = 2 but H does not have minimal multiplicity
  auto tpl = patterns("t^3 - c*t^6, t^7");
  auto s = field_sweep(H, tpl, PrimeField(3), 40);
  CHECK(s.empty());
}

TEST_CASE("monomial/series agreement on random samples") {
  std::mt19937 rng(1003);
  std::uniform_int_distribution<Z> pick(2, 11);
  Rationals Q;
  int done = 0;
  while (done < 15) {
    std::vector<Z> gens = {pick(rng), pick(rng), pick(rng)};
    Z d = std::gcd(std::gcd(gens[0], gens[1]), gens[2]);
    if (d != 1) continue;
    ++done;
    auto H = NumericalSemigroup::from_generators(gens);
    std::uniform_int_distribution<int> cnt(1, 3);
    std::uniform_int_distribution<Z> off(1, 9);
    std::vector<Z> igens;
    for (int i = 0, n = cnt(rng); i < n; ++i) {
      Z x = off(rng);
      while (!H.contains(x)) ++x;
      igens.push_back(x);
    }
    auto E = RelativeIdeal::from_generators(H, igens);
    auto em = is_ulrich_monomial(H, E, true);
    Z maxval = *std::max_element(igens.begin(), igens.end());
    Z prec = 2 * (H.conductor() + maxval + H.minimal_generators().back() +
                  H.multiplicity());
    UlrichOptions opts;
    opts.include_principal = true;
    auto es = is_ulrich_series(H, monomial_patterns(igens), Q, prec, opts);
    CHECK(em.verdict == es.verdict);
    if (em.verdict == UlrichVerdict::Ulrich) {
      CHECK(em.mu == es.mu);
      CHECK(em.colength == es.colength);
      CHECK(em.lhs == es.lhs);
    }
  }
}

TEST_CASE("Ulrich numeric invariants on found ideals") {
  // every Ulrich ideal satisfies (mu-1) * r(R/I) = r(R) and
  // mu(mu-1) <= r(R)(r(R)+1)
  for (auto gens : std::vector<std::vector<Z>>{{3, 7, 8}, {3, 4, 5}, {2, 3}, {4, 5, 6, 7}}) {
    auto H = sg(gens);
    for (const auto& E : enumerate_ulrich_monomial(H, H.conductor() + H.multiplicity())) {
      auto ev = is_ulrich_monomial(H, E);
      REQUIRE(ev.verdict == UlrichVerdict::Ulrich);
      CHECK((ev.mu - 1) * ev.socle_dim == H.type());
      CHECK(ev.mu * (ev.mu - 1) <= H.type() * (H.type() + 1));
    }
  }
}

TEST_CASE("in a non-Gorenstein almost Gorenstein ring, only m is Ulrich") {
  for_each_semigroup(7, [](const NumericalSemigroup& H) {
    if (H.is_naturals()) return;
    auto rep = classify(H);
    if (rep.gorenstein || !rep.almost_gorenstein) return;
    auto m = RelativeIdeal::maximal_ideal(H);
    for (const auto& E :
         enumerate_ulrich_monomial(H, H.conductor() + H.multiplicity()))
      CHECK(E == m);
  });
}
