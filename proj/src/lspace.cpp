#include "knotconc/lspace.hpp"

#include "knotconc/divisors.hpp"
#include "knotconc/errors.hpp"

namespace knotconc {

PnFamily pn(std::int64_t n) {
  if (n < 1) throw InvalidN(n);
  const Integer nn(static_cast<long>(n));
  PnFamily fam;
  fam.n = n;
  fam.poly = IntPoly(std::vector<Integer>{1, nn, -(2 * nn + 1), nn, 1});
  return fam;
}

PnFamily verify_pn(const PnFamily& fam) {
  const IntPoly& p = fam.poly;
  const LaurentPoly lp(p);
  const Integer n(static_cast<long>(fam.n));
  PnCertificates cert;

  cert.symmetric = is_symmetric(lp);
  if (!cert.symmetric) throw VerificationFailure("symmetric");

  const Rational at_one = eval_rational(p, Rational(1));
  cert.value_at_1 = at_one.get_num();
  cert.value_at_1_is_1 = at_one == 1;
  if (!cert.value_at_1_is_1) throw VerificationFailure("value_at_1_is_1");

  cert.irreducible = p.degree() == 4 && quartic_irreducible_over_Q(p);
  if (!cert.irreducible) throw VerificationFailure("irreducible");

  cert.trace_quadratic = palindromic_trace_reduction(p);
  cert.unit_circle_roots = unit_circle_count_palindromic(p);
  cert.two_unit_circle_roots = cert.unit_circle_roots == 2;
  if (!cert.two_unit_circle_roots) throw VerificationFailure("two_unit_circle_roots");

  // One root in the open interval (-n-2, -n-1); every point there has modulus
  // above n+1 >= 2.
  const Interval iv(Rational(-(n + 2)), Rational(-(n + 1)));
  cert.value_at_minus_n_minus_1 = eval_rational(p, iv.hi).get_num();
  cert.value_at_minus_n_minus_2 = eval_rational(p, iv.lo).get_num();
  cert.real_root_outside_2 = fam.n >= 1 && sgn(cert.value_at_minus_n_minus_1) != 0 &&
                             sgn(cert.value_at_minus_n_minus_2) != 0 && sturm_count(p, iv) == 1;
  if (!cert.real_root_outside_2) throw VerificationFailure("real_root_outside_2");
  cert.outside_witness = iv;

  PnFamily out = fam;
  out.verified = std::move(cert);
  return out;
}

bool quartic_irreducible_over_Q(const IntPoly& input) {
  if (input.degree() != 4) throw WrongDegree(4, input.degree());
  // Irreducibility over Q ignores content; Gauss lets factors be integral.
  const IntPoly p = input.primitive_part();
  const Integer c0 = p[0];
  const Integer c1 = p[1];
  const Integer c2 = p[2];
  const Integer c3 = p[3];
  const Integer c4 = p[4];
  if (sgn(c0) == 0) return false;

  const auto lead_divs = positive_divisors(c4);
  const auto const_divs = positive_divisors(c0);

  for (const auto& den : lead_divs) {
    for (const auto& num : const_divs) {
      for (int s : {1, -1}) {
        if (eval_rational(p, Rational(s * num, den)) == 0) return false;
      }
    }
  }

  // (a t^2 + b t + c)(d t^2 + e t + f) with a > 0, a d = c4, c f = c0.
  // Matching t^3 and t^2 leaves d b^2 - c3 b + a (c2 - a f - c d) = 0.
  for (const auto& a : lead_divs) {
    const Integer d = c4 / a;
    for (const auto& cabs : const_divs) {
      for (int s : {1, -1}) {
        const Integer c = s * cabs;
        const Integer f = c0 / c;
        const Integer disc = c3 * c3 - 4 * d * a * (c2 - a * f - c * d);
        if (sgn(disc) < 0 || mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
        const Integer root = sqrt(disc);
        for (const Integer& num : {Integer(c3 + root), Integer(c3 - root)}) {
          if (!mpz_divisible_p(num.get_mpz_t(), Integer(2 * d).get_mpz_t())) continue;
          const Integer b = num / (2 * d);
          const Integer e_num = c3 - b * d;
          if (!mpz_divisible_p(e_num.get_mpz_t(), a.get_mpz_t())) continue;
          const Integer e = e_num / a;
          if (b * f + c * e == c1) return false;
        }
      }
    }
  }
  return true;
}

LspaceFormResult is_lspace_form(const LaurentPoly& d) {
  if (d.is_zero()) throw ZeroPolynomial("is_lspace_form");
  const LaurentPoly p = normalize(d);
  int expected = 1;
  std::int64_t last = 0;
  for (std::int64_t e = p.low(); e <= p.high(); ++e) {
    const Integer c = p.coeff(e);
    if (sgn(c) == 0) continue;
    if (abs(c) != 1 || sgn(c) != expected) return {false, e};
    expected = -expected;
    last = e;
  }
  // The last nonzero term must be +1, so `expected` flipped to -1 after it.
  if (expected != -1) return {false, last};
  return {true, std::nullopt};
}

NecessaryVerdict lspace_sum_necessary(const LaurentPoly& d) {
  if (d.is_zero()) throw ZeroPolynomial("lspace_sum_necessary");
  const IntPoly p = normalize(d).to_int_poly();
  NecessaryVerdict v;
  if (auto w = certified_real_root_outside(p, Rational(2))) {
    v.pass = false;
    v.reason = NecessaryReason::root_outside_disk;
    v.witness = std::move(w);
    return v;
  }
  if (abs(eval_rational(p, Rational(1))) != 1) {
    v.pass = false;
    v.reason = NecessaryReason::value_at_one;
  }
  return v;
}

std::string to_string(NecessaryReason reason) {
  switch (reason) {
    case NecessaryReason::none:
      return "none";
    case NecessaryReason::root_outside_disk:
      return "root_outside_disk";
    case NecessaryReason::value_at_one:
      return "value_at_one";
  }
  return "unknown";
}

}  // namespace knotconc
