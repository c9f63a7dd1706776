#include <doctest.h>

#include <random>

#include "knotconc/concordance.hpp"
#include "knotconc/errors.hpp"
#include "knotconc/lspace.hpp"
#include "oracles.hpp"

using namespace knotconc;

namespace {

LaurentPoly P(long n) { return pn(n).laurent(); }

LaurentPoly power(const LaurentPoly& p, int k) {
  LaurentPoly out(0, {1});
  for (int i = 0; i < k; ++i) out = mul(out, p);
  return out;
}

// Candidates by direct scan: n in 1..limit with (4n - 1) | |value|.
std::vector<std::int64_t> brute_candidates(oracle::i128 value, std::int64_t limit) {
  std::vector<std::int64_t> out;
  if (value < 0) value = -value;
  for (std::int64_t n = 1; n <= limit; ++n)
    if (value % (4 * n - 1) == 0) out.push_back(n);
  return out;
}

}  // namespace

TEST_CASE("pn_multiplicity") {
  CHECK(pn_multiplicity(P(7), 7) == 1);
  CHECK(pn_multiplicity(mul(P(2), P(2)), 2) == 2);
  CHECK(pn_multiplicity(LaurentPoly(0, {1, -1, 1}), 5) == 0);
  CHECK(pn_multiplicity(mul(LaurentPoly(-3, {-1}), power(P(4), 3)), 4) == 3);
  CHECK(pn_multiplicity(power(P(4), 3), 5) == 0);
  CHECK_THROWS_AS(pn_multiplicity(LaurentPoly(), 1), ZeroPolynomial);
  CHECK_THROWS_AS(pn_multiplicity(P(1), 0), InvalidN);
}

TEST_CASE("candidate_ns") {
  const auto c7 = candidate_ns(P(7));
  CHECK(c7.exhaustive);
  CHECK(c7.ns == std::vector<std::int64_t>{1, 7});
  CHECK(c7.ns == brute_candidates(oracle::evaluate(oracle::pn_coeffs(7), -1), 100));

  const auto tre = candidate_ns(LaurentPoly(0, {1, -1, 1}));
  CHECK(tre.exhaustive);
  CHECK(tre.ns == std::vector<std::int64_t>{1});
  CHECK(pn_multiplicity(LaurentPoly(0, {1, -1, 1}), 1) == 0);

  // d(-1) = +-1 leaves no candidate.
  const auto unit = candidate_ns(LaurentPoly(0, {1, 0, -1, 0, 1}));
  CHECK(unit.exhaustive);
  CHECK(unit.ns.empty());

  CHECK_THROWS_AS(candidate_ns(LaurentPoly()), ZeroPolynomial);
}

TEST_CASE("candidate_ns matches a brute-force divisor scan") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto d = normalize(oracle::random_laurent(rng, 8, 6, false));
    const oracle::i128 v = oracle::evaluate(oracle::to_i128(d), -1);
    if (v == 0) continue;
    const oracle::i128 mag = v < 0 ? -v : v;
    const auto c = candidate_ns(d);
    CHECK(c.exhaustive);
    CHECK(c.ns == brute_candidates(v, static_cast<std::int64_t>((mag + 1) / 4)));
    // Every n with P_n | d in 1..60 is a candidate.
    for (std::int64_t n = 1; n <= 60; ++n)
      if (pn_multiplicity(d, n) > 0) CHECK(std::find(c.ns.begin(), c.ns.end(), n) != c.ns.end());
  }
}

TEST_CASE("candidate_ns falls back to a bounded scan when d(-1) = 0") {
  const auto d = mul(LaurentPoly(0, {1, 1}), P(3));  // (1 + t) P_3
  const auto c = candidate_ns(d);
  CHECK_FALSE(c.exhaustive);
  Integer top = 0;
  const auto nd = normalize(d);
  for (const auto& x : nd.coeffs()) top = std::max(top, Integer(abs(x)));
  CHECK(c.nmax_used == 10 * (1 + top.get_si()));
  CHECK(c.ns.size() == static_cast<std::size_t>(c.nmax_used));

  const auto capped = candidate_ns(d, 5);
  CHECK(capped.nmax_used == 5);
  CHECK(capped.ns == std::vector<std::int64_t>{1, 2, 3, 4, 5});

  const auto rep = obstruction_report(d);
  CHECK_FALSE(rep.exhaustive);
  REQUIRE(rep.witness_n);
  CHECK(*rep.witness_n == 3);
}

TEST_CASE("P_n(-1) = 1 - 4n for n = 1..1000") {
  for (long n = 1; n <= 1000; ++n) CHECK(eval_rational(pn(n).poly, Rational(-1)) == 1 - 4 * n);
}

TEST_CASE("obstruction_report") {
  const auto r7 = obstruction_report(P(7));
  REQUIRE(r7.obstructed());
  CHECK(*r7.witness_n == 7);
  REQUIRE(r7.candidates.size() == 2);
  CHECK(r7.candidates[0].n == 1);
  CHECK(r7.candidates[0].multiplicity == 0);
  CHECK(r7.candidates[1].n == 7);
  CHECK(r7.candidates[1].multiplicity == 1);
  CHECK(r7.exhaustive);

  const auto sq = obstruction_report(mul(P(3), P(3)));
  CHECK_FALSE(sq.obstructed());
  bool saw = false;
  for (const auto& c : sq.candidates)
    if (c.n == 3) {
      CHECK(c.multiplicity == 2);
      saw = true;
    }
  CHECK(saw);

  CHECK_FALSE(obstruction_report(LaurentPoly(0, {1, -1, 1})).obstructed());
  CHECK_THROWS_AS(obstruction_report(LaurentPoly()), ZeroPolynomial);
}

TEST_CASE("first odd multiplicity in ascending n is the witness") {
  // P_2^2 P_5 P_7^3: odd at 5 and 7, even at 2.
  const auto d = mul(mul(power(P(2), 2), P(5)), power(P(7), 3));
  const auto rep = obstruction_report(d);
  REQUIRE(rep.obstructed());
  CHECK(*rep.witness_n == 5);
  for (const auto& c : rep.candidates) {
    if (c.n == 2) CHECK(c.multiplicity == 2);
    if (c.n == 5) CHECK(c.multiplicity == 1);
    if (c.n == 7) CHECK(c.multiplicity == 3);
  }
}

TEST_CASE("verdict is invariant under units and involution") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> pick_n(1, 9);
  std::uniform_int_distribution<int> shift(-6, 6);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = oracle::random_laurent(rng, 4, 3, false);
    if (trial % 2 == 0) d = mul(d, power(P(pick_n(rng)), 1 + trial % 3));
    const auto base = obstruction_report(d);
    const auto unit = obstruction_report(mul(LaurentPoly(shift(rng), {-1}), d));
    const auto inv = obstruction_report(involute(d));
    CHECK(base.witness_n == unit.witness_n);
    CHECK(base.witness_n == inv.witness_n);
    CHECK(base.candidates.size() == inv.candidates.size());
  }
}

TEST_CASE("multiplicity is additive over products") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> pick_n(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = oracle::random_laurent(rng, 5, 4, false);
    auto b = oracle::random_laurent(rng, 5, 4, false);
    const int n = pick_n(rng);
    if (trial % 3 == 0) a = mul(a, P(n));
    if (trial % 4 == 0) b = mul(b, power(P(n), 2));
    CHECK(pn_multiplicity(mul(a, b), n) == pn_multiplicity(a, n) + pn_multiplicity(b, n));
  }
}

TEST_CASE("parity_invariance_check") {
  CHECK(parity_invariance_check(P(4), P(4), 4));
  CHECK(pn_multiplicity(mul(mul(P(4), P(4)), involute(P(4))), 4) == 3);
  CHECK(parity_invariance_check(P(9), LaurentPoly(0, {1}), 9));
  CHECK_THROWS_AS(parity_invariance_check(LaurentPoly(), P(1), 1), ZeroPolynomial);

  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> pick_n(1, 3);
  const LaurentPoly tre(0, {1, -1, 1});
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = oracle::random_laurent(rng, 6, 5, false);
    CHECK(parity_invariance_check(tre, f, pick_n(rng)));
  }
}

TEST_CASE("L-space forms are never divisible by P_n") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly d(0, {1});
    const int factors = 1 + trial % 3;
    for (int i = 0; i < factors; ++i) {
      const auto f = oracle::random_lspace_form(rng, 12);
      d = mul(d, i % 2 ? involute(f) : f);
    }
    const auto rep = obstruction_report(d);
    CHECK_FALSE(rep.obstructed());
    for (const auto& c : rep.candidates) CHECK(c.multiplicity == 0);
  }
}
