#pragma once

// L-space Alexander polynomial shape checks and the quartic family
// P_n = 1 + n t - (2n+1) t^2 + n t^3 + t^4 with its certified properties.

#include <cstdint>
#include <optional>
#include <string>

#include "knotconc/polyarith.hpp"
#include "knotconc/rootloc.hpp"

namespace knotconc {

/// Exact certificates behind each verified property of P_n.
struct PnCertificates {
  bool symmetric = false;
  bool value_at_1_is_1 = false;
  bool irreducible = false;
  bool two_unit_circle_roots = false;
  bool real_root_outside_2 = false;

  Integer value_at_1;
  /// q(x) with P_n(t) = t^2 q(t + 1/t).
  IntPoly trace_quadratic;
  std::size_t unit_circle_roots = 0;
  /// (-n-2, -n-1), holding exactly one real root.
  std::optional<Interval> outside_witness;
  /// Exact values P_n(-n-1) and P_n(-n-2).
  Integer value_at_minus_n_minus_1;
  Integer value_at_minus_n_minus_2;
};

/// One member of the family. `verified` is filled only by verify_pn.
struct PnFamily {
  std::int64_t n = 0;
  IntPoly poly;
  std::optional<PnCertificates> verified;

  LaurentPoly laurent() const { return LaurentPoly(poly); }
};

/// The quartic of the family, unverified. Throws InvalidN for n < 1.
PnFamily pn(std::int64_t n);

/// Certifies symmetry, P_n(1) = 1, irreducibility over Q, exactly two roots on
/// the unit circle and one real root in (-n-2, -n-1). Throws
/// VerificationFailure naming the first property that fails.
PnFamily verify_pn(const PnFamily& fam);

/// Irreducibility of a degree-4 integer polynomial over Q: no rational root and
/// no split into two integer quadratics. Throws WrongDegree for degree != 4.
bool quartic_irreducible_over_Q(const IntPoly& p);

struct LspaceFormResult {
  bool ok = false;
  /// Exponent (after normalization) of the first offending term.
  std::optional<std::int64_t> violation;
};

/// Whether normalize(d) = t^a0 - t^a1 + t^a2 - ... + t^an: nonzero coefficients
/// are +-1, strictly alternate, and start and end with +1. Throws ZeroPolynomial.
LspaceFormResult is_lspace_form(const LaurentPoly& d);

enum class NecessaryReason {
  none,
  root_outside_disk,
  /// |d(1)| != 1; a sanity check on Alexander polynomials rather than part of
  /// the radius-2 criterion.
  value_at_one,
};

struct NecessaryVerdict {
  bool pass = true;
  NecessaryReason reason = NecessaryReason::none;
  std::optional<Interval> witness;
};

/// Necessary condition for d to be the Alexander polynomial of a connected sum
/// of L-space knots and mirrors: all roots in the radius-2 disk and d(1) = +-1.
/// Fails only on exact certificates. Throws ZeroPolynomial.
NecessaryVerdict lspace_sum_necessary(const LaurentPoly& d);

std::string to_string(NecessaryReason reason);

}  // namespace knotconc
