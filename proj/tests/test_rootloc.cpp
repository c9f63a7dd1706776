#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "knotconc/errors.hpp"
#include "knotconc/lspace.hpp"
#include "knotconc/rootloc.hpp"
#include "oracles.hpp"

using namespace knotconc;

namespace {

IntPoly from_roots(const std::vector<long>& roots) {
  IntPoly p{1};
  for (long r : roots) p = p * IntPoly{-r, 1};
  return p;
}

IntPoly random_palindromic(std::mt19937_64& rng, int half, long range) {
  std::uniform_int_distribution<long> coeff(-range, range);
  std::vector<Integer> v(static_cast<std::size_t>(2 * half + 1));
  for (int i = 0; i <= half; ++i) {
    Integer c = coeff(rng);
    if (i == 0 && c == 0) c = 1;
    v[static_cast<std::size_t>(i)] = c;
    v[static_cast<std::size_t>(2 * half - i)] = c;
  }
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("cauchy_bound") {
  CHECK(cauchy_bound(pn(1).poly) == 4);
  CHECK(cauchy_bound(IntPoly{1, -1, 1}) == 2);
  CHECK(cauchy_bound(IntPoly{1, 0, -1, 1, 0, 0, -1, 1}) == 2);
  CHECK(cauchy_bound(IntPoly{3, 0, 2}) == Rational(5, 2));
  CHECK(cauchy_bound(IntPoly{5}) == 1);
  CHECK_THROWS_AS(cauchy_bound(IntPoly{}), ZeroPolynomial);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto p = oracle::random_lspace_form(rng, 20);
    if (p.width() >= 1) CHECK(cauchy_bound(p.to_int_poly()) == 2);
  }
}

TEST_CASE("sturm_count examples") {
  CHECK(sturm_count(pn(1).poly, Interval(-3, -2)) == 1);
  CHECK(sturm_count(IntPoly{1, 0, 1}, Interval(-10, 10)) == 0);
  CHECK(sturm_count(pn(7).poly, Interval(-9, -8)) == 1);
  CHECK_THROWS_AS(sturm_count(IntPoly{}, Interval(0, 1)), ZeroPolynomial);
}

TEST_CASE("sturm_count against polynomials with known integer roots") {
  // Repeated roots count once; the t^2 + 1 factor adds none.
  const IntPoly p = from_roots({-4, -1, -1, 2, 3, 3, 3}) * IntPoly{1, 0, 1};
  CHECK(sturm_count(p, Interval(Rational(-9, 2), Rational(7, 2))) == 4);
  CHECK(sturm_count(p, Interval(Rational(-1, 2), Rational(5, 2))) == 1);
  CHECK(sturm_count(p, Interval(Rational(5, 2), Rational(100))) == 1);
  CHECK(sturm_count(p, Interval(Rational(-3), Rational(-2))) == 0);
  // The open interval excludes the root at 2.
  CHECK(real_roots_open(p, Rational(1, 2), Rational(2)) == 0);
}

TEST_CASE("endpoint roots are nudged outward") {
  const IntPoly p = from_roots({1, 5});
  const auto r = sturm_count_detailed(p, Interval(1, 2));
  CHECK(r.lo_nudged);
  CHECK_FALSE(r.hi_nudged);
  CHECK(r.count == 1);
  const auto s = sturm_count_detailed(p, Interval(3, 5));
  CHECK(s.hi_nudged);
  CHECK(s.count == 1);
}

TEST_CASE("sturm_count is additive over partitions") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<long> cut(-400, 400);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Integer> v(7);
    for (auto& c : v) c = coeff(rng);
    v.back() = 1;
    const IntPoly p(std::move(v));
    std::vector<Rational> pts{Rational(-12), Rational(12)};
    for (int k = 0; k < 4; ++k) pts.emplace_back(cut(rng), 37);
    for (auto& x : pts) x.canonicalize();
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    bool any_root = false;
    for (const auto& x : pts) any_root |= eval_rational(p, x) == 0;
    if (any_root) continue;
    std::size_t parts = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) parts += sturm_count(p, Interval(pts[i], pts[i + 1]));
    CHECK(parts == sturm_count(p, Interval(pts.front(), pts.back())));
  }
}

TEST_CASE("family sign checks and real root in (-n-2, -n-1)") {
  for (long n = 1; n <= 200; ++n) {
    const IntPoly p = pn(n).poly;
    CHECK(sturm_count(p, Interval(-n - 2, -n - 1)) == 1);
    const auto c = oracle::pn_coeffs(n);
    const Rational lo = eval_rational(p, Rational(-n - 1));
    const Rational hi = eval_rational(p, Rational(-n - 2));
    CHECK(lo == Rational(static_cast<long>(oracle::evaluate(c, -n - 1))));
    CHECK(lo == Rational(static_cast<long>(oracle::closed_form_at_minus_n_minus_1(n))));
    CHECK(hi == Rational(static_cast<long>(oracle::closed_form_at_minus_n_minus_2(n))));
    CHECK(lo < 0);
    CHECK(hi > 0);
  }
}

TEST_CASE("palindromic trace reduction") {
  // P_n / t^2 = x^2 + n x - (2n + 3) with x = t + 1/t.
  for (long n = 1; n <= 30; ++n) CHECK(palindromic_trace_reduction(pn(n).poly) == IntPoly{-(2 * n + 3), n, 1});
  CHECK(palindromic_trace_reduction(IntPoly{1, 1, 1, 1, 1}) == IntPoly{-1, 1, 1});
}

TEST_CASE("unit_circle_count_palindromic") {
  CHECK(unit_circle_count_palindromic(pn(1).poly) == 2);
  for (long n = 1; n <= 50; ++n) CHECK(unit_circle_count_palindromic(pn(n).poly) == 2);
  CHECK(unit_circle_count_palindromic(IntPoly{1, 1, 1, 1, 1}) == 4);
  CHECK(unit_circle_count_palindromic(IntPoly{1, -2, 1}) == 2);           // (t-1)^2
  CHECK(unit_circle_count_palindromic(IntPoly{1, 2, 1}) == 2);            // (t+1)^2
  CHECK(unit_circle_count_palindromic(IntPoly{1, 2, 3, 2, 1}) == 4);      // (t^2+t+1)^2
  CHECK(unit_circle_count_palindromic(IntPoly{1, -3, 1}) == 0);           // real roots off the circle
  CHECK(unit_circle_count_palindromic(IntPoly{7}) == 0);
  CHECK_THROWS_AS(unit_circle_count_palindromic(IntPoly{1, 2}), NotPalindromic);
  CHECK_THROWS_AS(unit_circle_count_palindromic(IntPoly{1, 1, 1, 1}), OddDegree);
}

TEST_CASE("has_root_outside_disk") {
  const auto r1 = has_root_outside_disk(pn(1).poly, Rational(2));
  CHECK(r1.outside);
  CHECK(r1.exact);
  REQUIRE(r1.witness);
  CHECK(*r1.witness == Interval(-3, -2));

  const auto r7 = has_root_outside_disk(pn(7).poly, Rational(2));
  CHECK(r7.outside);
  REQUIRE(r7.witness);
  CHECK(*r7.witness == Interval(-9, -8));

  const auto tre = has_root_outside_disk(IntPoly{1, -1, 1}, Rational(2));
  CHECK_FALSE(tre.outside);
  CHECK(tre.exact);  // Cauchy bound is 2

  // Integer root exactly on a bisection point.
  const auto r = has_root_outside_disk(from_roots({5, 0}), Rational(2));
  CHECK(r.outside);
  REQUIRE(r.witness);
  CHECK(r.witness->lo <= 5);
  CHECK(r.witness->hi >= 5);

  // Only complex roots outside: t^2 + 9 has |z| = 3.
  const auto c = has_root_outside_disk(IntPoly{9, 0, 1}, Rational(2));
  CHECK(c.outside);
  CHECK_FALSE(c.exact);
  CHECK_FALSE(c.witness);
  CHECK_THROWS_AS(has_root_outside_disk(IntPoly{}, Rational(2)), ZeroPolynomial);
}

TEST_CASE("witness intervals isolate a root of large modulus") {
  for (long n = 1; n <= 100; ++n) {
    const auto w = certified_real_root_outside(pn(n).poly, Rational(2));
    REQUIRE(w);
    CHECK(*w == Interval(-n - 2, -n - 1));
  }
}

TEST_CASE("root_moduli_numeric examples") {
  const auto six = root_moduli_numeric(IntPoly{1, -1, 1}, {9});
  REQUIRE(six.size() == 2);
  for (const auto& r : six) CHECK(std::abs(r.modulus - 1.0) < 1e-9);

  const auto p1 = root_moduli_numeric(pn(1).poly, {9});
  REQUIRE(p1.size() == 4);
  CHECK(p1[0].modulus > 2.0);
  CHECK(p1[0].modulus < 3.0);
  const auto on_circle =
      std::count_if(p1.begin(), p1.end(), [](const RootEstimate& r) { return std::abs(r.modulus - 1.0) < 1e-9; });
  CHECK(on_circle == 2);
  CHECK(on_circle == static_cast<long>(unit_circle_count_palindromic(pn(1).poly)));

  CHECK(root_moduli_numeric(IntPoly{4}).empty());
  CHECK_THROWS_AS(root_moduli_numeric(IntPoly{}), ZeroPolynomial);
}

TEST_CASE("root_moduli_numeric handles repeated roots and thresholds") {
  const IntPoly tre{1, -1, 1};
  const auto sq = root_moduli_numeric(tre * tre * tre, {12, 1000, {1.0}});
  REQUIRE(sq.size() == 6);
  for (const auto& r : sq) {
    CHECK(std::abs(r.modulus - 1.0) < 1e-12);
    CHECK(r.straddles_threshold);
  }
  const auto far = root_moduli_numeric(from_roots({3, -7}), {12, 1000, {2.0}});
  REQUIRE(far.size() == 2);
  CHECK(far[0].modulus == doctest::Approx(7.0).epsilon(1e-14));
  CHECK_FALSE(far[0].straddles_threshold);
}

TEST_CASE("root_moduli_numeric reports convergence failure") {
  NumericOptions opts;
  opts.max_iterations = 1;
  CHECK_THROWS_AS(root_moduli_numeric(IntPoly{-3, 1, 4, -1, 5, 9, 2, 6}, opts), ConvergenceFailure);
}

TEST_CASE("numeric moduli respect the Cauchy bound") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coeff(-30, 30);
  std::uniform_int_distribution<int> deg(1, 12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Integer> v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& c : v) c = coeff(rng);
    if (v.back() == 0) v.back() = 1;
    const IntPoly p(std::move(v));
    if (p.degree() < 1) continue;
    const double bound = cauchy_bound(p).get_d();
    const auto roots = root_moduli_numeric(p);
    CHECK(roots.size() == static_cast<std::size_t>(p.degree()));
    for (const auto& r : roots) CHECK(r.modulus < bound + r.radius);
  }
}

TEST_CASE("numeric unit-circle count matches the exact count") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const IntPoly p = random_palindromic(rng, 1 + trial % 5, 6);
    if (p.degree() < 2) continue;
    const auto roots = root_moduli_numeric(p, {12, 1000, {1.0}});
    std::size_t numeric = 0;
    for (const auto& r : roots)
      if (std::abs(r.modulus - 1.0) < 1e-9) ++numeric;
    CHECK(numeric == unit_circle_count_palindromic(p));
  }
}

TEST_CASE("roots of a product are the union of the roots") {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<long> coeff(-6, 6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Integer> va(4), vb(3);
    for (auto& c : va) c = coeff(rng);
    for (auto& c : vb) c = coeff(rng);
    va.back() = 1;
    vb.back() = 2;
    const IntPoly a(va), b(vb);
    auto ra = root_moduli_numeric(a);
    const auto rb = root_moduli_numeric(b);
    const auto rab = root_moduli_numeric(a * b);
    ra.insert(ra.end(), rb.begin(), rb.end());
    REQUIRE(ra.size() == rab.size());
    std::vector<bool> used(rab.size(), false);
    for (const auto& x : ra) {
      bool matched = false;
      for (std::size_t j = 0; j < rab.size() && !matched; ++j) {
        if (!used[j] && std::abs(rab[j].value - x.value) < 1e-7) {
          used[j] = true;
          matched = true;
        }
      }
      CHECK(matched);
    }
  }
}

TEST_CASE("root_count_report") {
  const auto rep = root_count_report(pn(3).poly, {Interval(-5, -4), Interval(0, 1)});
  REQUIRE(rep.on_unit_circle);
  CHECK(*rep.on_unit_circle == 2);
  CHECK(rep.cauchy_bound == 8);
  CHECK(rep.real_in_interval[0].second == 1);
  CHECK(rep.real_in_interval[1].second == 0);
  REQUIRE(rep.max_modulus_estimate);
  CHECK(*rep.max_modulus_estimate > 4.0);
  CHECK(*rep.max_modulus_estimate < 5.0);
}
