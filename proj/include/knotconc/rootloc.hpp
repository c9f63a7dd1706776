#pragma once

// Root localization for integer polynomials.
//
// Real-root counts (Sturm) and unit-circle counts for palindromic inputs are
// exact. Complex moduli come from a numeric simultaneous iteration and carry
// inclusion radii; nothing numeric feeds an exact answer.

#include <complex>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "knotconc/polyarith.hpp"

namespace knotconc {

/// Closed rational interval [lo, hi]. Used as (lo, hi] by sturm_count and as an
/// open isolating interval for witnesses (degenerate when lo == hi).
struct Interval {
  Rational lo;
  Rational hi;

  Interval(Rational lo_, Rational hi_);
  Interval(long lo_, long hi_) : Interval(Rational(lo_), Rational(hi_)) {}
  bool degenerate() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// 1 + max_{j<m} |a_j| / |a_m|. Every complex root lies strictly inside.
/// A nonzero constant has no roots; its bound is 1.
/// Throws ZeroPolynomial.
Rational cauchy_bound(const IntPoly& p);

struct SturmCount {
  std::size_t count = 0;
  // Set when an endpoint was a root and had to be moved outward by 2^-32.
  bool lo_nudged = false;
  bool hi_nudged = false;
};

/// Number of distinct real roots in (lo, hi]. If either endpoint is a root it is
/// nudged outward by 2^-32 first, so endpoint roots are counted.
/// Throws ZeroPolynomial.
SturmCount sturm_count_detailed(const IntPoly& p, const Interval& iv);
std::size_t sturm_count(const IntPoly& p, const Interval& iv);

/// Distinct real roots in the open interval (lo, hi), endpoints untouched.
std::size_t real_roots_open(const IntPoly& p, const Rational& lo, const Rational& hi);

/// The degree-d polynomial q with p(t) = t^d q(t + 1/t) for palindromic p of
/// degree 2d. Throws NotPalindromic / OddDegree.
IntPoly palindromic_trace_reduction(const IntPoly& p);

/// Roots of a palindromic polynomial on |z| = 1, counted with multiplicity.
/// Throws NotPalindromic, OddDegree.
std::size_t unit_circle_count_palindromic(const IntPoly& p);

/// Isolating interval of a real root with modulus > r, certified by Sturm
/// counting and narrowed to integer endpoints (besides +-r); nullopt when no
/// real root lies outside. Never consults numerics.
std::optional<Interval> certified_real_root_outside(const IntPoly& p, const Rational& r);

struct OutsideDiskResult {
  bool outside = false;
  /// True when the answer is certified by exact Sturm counting.
  bool exact = false;
  /// Isolating interval of a real root with modulus > r, when certified.
  std::optional<Interval> witness;
  /// Largest numeric modulus, filled only on the numeric fallback path.
  std::optional<double> numeric_max_modulus;
};

/// Looks for a real root of modulus > r by Sturm counting on (-B, -r) and
/// (r, B), B = cauchy_bound(p), then bisects on integer points down to a
/// unit-width witness. Without a real witness it falls back to numeric moduli
/// and reports exact = false. Throws ZeroPolynomial.
OutsideDiskResult has_root_outside_disk(const IntPoly& p, const Rational& r);

struct RootEstimate {
  std::complex<double> value;
  double modulus = 0.0;
  /// Radius of a disk around `value` guaranteed to hold a root (Gerschgorin
  /// style inclusion), bounding the modulus error.
  double radius = 0.0;
  /// True when [modulus - radius, modulus + radius] contains a queried threshold.
  bool straddles_threshold = false;
};

struct NumericOptions {
  int digits = 12;
  std::size_t max_iterations = 1000;
  std::vector<double> thresholds;
};

/// Largest supported `digits` value (working precision is 50 decimal digits).
constexpr int kMaxNumericDigits = 30;

/// All complex roots with multiplicity, sorted by descending modulus. Each
/// squarefree factor is solved separately by Aberth-Ehrlich iteration started
/// on a circle of radius 0.99 * cauchy_bound. Throws ConvergenceFailure once
/// max_iterations is exhausted and ZeroPolynomial for p == 0.
std::vector<RootEstimate> root_moduli_numeric(const IntPoly& p, const NumericOptions& opts = {});

struct RootCountReport {
  std::optional<std::size_t> on_unit_circle;  // exact; palindromic inputs only
  std::vector<std::pair<Interval, std::size_t>> real_in_interval;
  Rational cauchy_bound;
  std::optional<double> max_modulus_estimate;
  double max_modulus_radius = 0.0;
  bool max_modulus_exact = false;
};

RootCountReport root_count_report(const IntPoly& p, const std::vector<Interval>& intervals,
                                  int digits = 12);

}  // namespace knotconc
