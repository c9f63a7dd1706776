#pragma once

// Parity obstruction: an Alexander polynomial divisible by an odd power of some
// P_n cannot belong to a knot algebraically concordant to a connected sum of
// L-space knots and their mirrors. Vanishing order at the unit-circle root of
// P_n is computed as exact P_n-multiplicity, which is valid because P_n is
// irreducible over Q.

#include <cstdint>
#include <optional>
#include <vector>

#include "knotconc/polyarith.hpp"

namespace knotconc {

/// Largest m with P_n^m | d. Throws ZeroPolynomial, InvalidN.
unsigned pn_multiplicity(const LaurentPoly& d, std::int64_t n);

struct CandidateSet {
  std::vector<std::int64_t> ns;
  /// True when the list provably contains every n with P_n | d.
  bool exhaustive = false;
  /// Upper end of the fallback scan; 0 when the divisor test applied.
  std::int64_t nmax_used = 0;
};

/// Every n that can possibly have P_n | d. Since P_n(-1) = 1 - 4n, when
/// d(-1) != 0 the candidates are exactly the n >= 1 with (4n - 1) | d(-1).
/// Otherwise returns 1..nmax (default 10 * (1 + max |coefficient|)), not
/// exhaustive. Throws ZeroPolynomial.
CandidateSet candidate_ns(const LaurentPoly& d, std::optional<std::int64_t> nmax_override = std::nullopt);

struct CandidateResult {
  std::int64_t n = 0;
  unsigned multiplicity = 0;
  bool odd() const { return multiplicity % 2 == 1; }
};

struct ObstructionReport {
  LaurentPoly input;  // normalized
  std::vector<CandidateResult> candidates;
  /// Smallest n with odd multiplicity; empty means not obstructed by this test.
  std::optional<std::int64_t> witness_n;
  std::int64_t nmax_used = 0;
  bool exhaustive = false;

  bool obstructed() const { return witness_n.has_value(); }
};

/// Runs candidate_ns and pn_multiplicity for each candidate. The verdict is
/// obstructed at the first odd multiplicity in ascending n. Throws ZeroPolynomial.
ObstructionReport obstruction_report(const LaurentPoly& d,
                                     std::optional<std::int64_t> nmax_override = std::nullopt);

/// pn_multiplicity(d * f * f(1/t), n) and pn_multiplicity(d, n) have equal
/// parity. Always true; a false return is a bug. Throws ZeroPolynomial.
bool parity_invariance_check(const LaurentPoly& d, const LaurentPoly& f, std::int64_t n);

}  // namespace knotconc
