#include "knotconc/concordance.hpp"

#include <algorithm>
#include <limits>

#include "knotconc/divisors.hpp"
#include "knotconc/errors.hpp"
#include "knotconc/lspace.hpp"

namespace knotconc {

unsigned pn_multiplicity(const LaurentPoly& d, std::int64_t n) {
  if (d.is_zero()) throw ZeroPolynomial("pn_multiplicity");
  const LaurentPoly factor = pn(n).laurent();
  LaurentPoly rest = normalize(d);
  unsigned m = 0;
  while (rest.width() >= 4) {
    auto q = exact_div(rest, factor);
    if (!q) break;
    rest = std::move(*q);
    ++m;
  }
  return m;
}

CandidateSet candidate_ns(const LaurentPoly& d, std::optional<std::int64_t> nmax_override) {
  if (d.is_zero()) throw ZeroPolynomial("candidate_ns");
  CandidateSet out;
  const Rational at_minus_one = eval_rational(normalize(d), Rational(-1));
  if (sgn(at_minus_one) != 0) {
    out.exhaustive = true;
    for (const auto& k : positive_divisors(at_minus_one.get_num())) {
      // k = 4n - 1 for n >= 1, i.e. k = 3 mod 4.
      if (mpz_fdiv_ui(k.get_mpz_t(), 4) != 3) continue;
      const Integer n = (k + 1) / 4;
      if (!n.fits_slong_p()) continue;
      out.ns.push_back(n.get_si());
    }
    return out;
  }
  std::int64_t nmax = 0;
  if (nmax_override) {
    nmax = *nmax_override;
  } else {
    Integer top = 0;
    for (const auto& c : d.coeffs()) top = std::max(top, Integer(abs(c)));
    const Integer bound = 10 * (1 + top);
    nmax = bound.fits_slong_p() ? bound.get_si() : std::numeric_limits<long>::max();
  }
  out.nmax_used = nmax;
  for (std::int64_t n = 1; n <= nmax; ++n) out.ns.push_back(n);
  return out;
}

ObstructionReport obstruction_report(const LaurentPoly& d, std::optional<std::int64_t> nmax_override) {
  if (d.is_zero()) throw ZeroPolynomial("obstruction_report");
  ObstructionReport rep;
  rep.input = normalize(d);
  const CandidateSet cands = candidate_ns(rep.input, nmax_override);
  rep.exhaustive = cands.exhaustive;
  rep.nmax_used = cands.nmax_used;
  for (std::int64_t n : cands.ns) {
    CandidateResult r{n, pn_multiplicity(rep.input, n)};
    if (r.odd() && !rep.witness_n) rep.witness_n = n;
    rep.candidates.push_back(r);
  }
  return rep;
}

bool parity_invariance_check(const LaurentPoly& d, const LaurentPoly& f, std::int64_t n) {
  if (d.is_zero() || f.is_zero()) throw ZeroPolynomial("parity_invariance_check");
  const LaurentPoly twisted = mul(mul(d, f), involute(f));
  return pn_multiplicity(twisted, n) % 2 == pn_multiplicity(d, n) % 2;
}

}  // namespace knotconc
