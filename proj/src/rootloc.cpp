#include "knotconc/rootloc.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "knotconc/errors.hpp"

namespace knotconc {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  lo.canonicalize();
  hi.canonicalize();
  if (hi < lo) throw std::invalid_argument("Interval: lo > hi");
}

Rational cauchy_bound(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("cauchy_bound");
  const auto& c = p.coeffs();
  Integer top = 0;
  for (std::size_t j = 0; j + 1 < c.size(); ++j) top = std::max(top, Integer(abs(c[j])));
  Rational ratio(top, abs(c.back()));
  ratio.canonicalize();
  return 1 + ratio;
}

namespace {

int sign_at(const IntPoly& p, const Rational& x) {
  // den > 0, so sign(den^deg * p(num/den)) == sign(p(x)).
  const auto& c = p.coeffs();
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * num + c[i] * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

// Divides by the positive content, keeping signs intact.
IntPoly drop_content(const IntPoly& p) {
  if (p.is_zero()) return p;
  const Integer g = p.content();
  std::vector<Integer> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

class SturmChain {
 public:
  explicit SturmChain(const IntPoly& p) {
    IntPoly s = squarefree_part(p);
    chain_.push_back(s);
    if (s.degree() <= 0) return;
    chain_.push_back(drop_content(s.derivative()));
    while (chain_.back().degree() > 0) {
      IntPoly r = signed_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;
      chain_.push_back(drop_content(-r));
    }
  }

  const IntPoly& base() const { return chain_.front(); }

  std::size_t variations(const Rational& x) const {
    std::size_t v = 0;
    int last = 0;
    for (const auto& q : chain_) {
      int s = sign_at(q, x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  }

  // Distinct roots in (a, b]. Valid for root endpoints too: the chain is built
  // from a squarefree polynomial, so a vanishing base term is simply skipped.
  std::size_t half_open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    return variations(a) - variations(b);
  }

  std::size_t open(const Rational& a, const Rational& b) const {
    if (!(a < b)) return 0;
    std::size_t n = half_open(a, b);
    if (sign_at(base(), b) == 0) --n;
    return n;
  }

  bool is_root(const Rational& x) const { return sign_at(base(), x) == 0; }

 private:
  std::vector<IntPoly> chain_;
};

Rational nudge() {
  Rational d(1);
  d /= Rational(Integer(1) << 32);
  return d;
}

}  // namespace

SturmCount sturm_count_detailed(const IntPoly& p, const Interval& iv) {
  if (p.is_zero()) throw ZeroPolynomial("sturm_count");
  SturmChain chain(p);
  SturmCount out;
  Rational lo = iv.lo;
  Rational hi = iv.hi;
  const Rational step = nudge();
  while (chain.is_root(lo)) {
    lo -= step;
    out.lo_nudged = true;
  }
  while (chain.is_root(hi)) {
    hi += step;
    out.hi_nudged = true;
  }
  out.count = chain.half_open(lo, hi);
  return out;
}

std::size_t sturm_count(const IntPoly& p, const Interval& iv) { return sturm_count_detailed(p, iv).count; }

std::size_t real_roots_open(const IntPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw ZeroPolynomial("real_roots_open");
  return SturmChain(p).open(lo, hi);
}

IntPoly palindromic_trace_reduction(const IntPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("palindromic_trace_reduction");
  if (!p.is_palindromic()) throw NotPalindromic();
  if (p.degree() % 2 != 0) throw OddDegree();
  const std::size_t d = static_cast<std::size_t>(p.degree() / 2);
  // t^k + t^-k = V_k(x) with V_0 = 2, V_1 = x, V_k = x V_{k-1} - V_{k-2}.
  const IntPoly x{0, 1};
  IntPoly prev = IntPoly{2};
  IntPoly cur = x;
  IntPoly q = IntPoly::constant(p[d]);
  for (std::size_t k = 1; k <= d; ++k) {
    q = q + p[d + k] * cur;
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return q;
}

std::size_t unit_circle_count_palindromic(const IntPoly& p) {
  const IntPoly q = palindromic_trace_reduction(p);
  if (q.degree() < 1) return 0;
  std::size_t count = 0;
  // x in (-2, 2): a conjugate pair of distinct circle roots per x-root.
  const auto factors = squarefree_decomposition(q);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    count += 2 * (i + 1) * real_roots_open(factors[i], Rational(-2), Rational(2));
  }
  // x = +-2 means t = +-1, a double root of p per x-multiplicity.
  for (long e : {-2L, 2L}) {
    const IntPoly lin{-e, 1};
    IntPoly rest = q;
    while (auto next = exact_div(rest, lin)) {
      count += 2;
      rest = std::move(*next);
      if (rest.degree() < 1) break;
    }
  }
  return count;
}

std::optional<Interval> certified_real_root_outside(const IntPoly& p, const Rational& r) {
  if (p.degree() < 1) return std::nullopt;
  const Rational bound = cauchy_bound(p);
  if (r >= bound) return std::nullopt;
  Integer outer;
  mpz_cdiv_q(outer.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  const SturmChain chain(p);

  auto narrow = [&](Rational a, Rational b) -> std::optional<Interval> {
    if (chain.open(a, b) == 0) return std::nullopt;
    while (b - a > 1) {
      Rational mid = (a + b) / 2;
      Integer m;
      mpz_fdiv_q(m.get_mpz_t(), mid.get_num_mpz_t(), mid.get_den_mpz_t());
      if (Rational(m) <= a) mpz_cdiv_q(m.get_mpz_t(), mid.get_num_mpz_t(), mid.get_den_mpz_t());
      const Rational mq(m);
      if (chain.is_root(mq)) return Interval(mq, mq);
      if (chain.open(a, mq) > 0)
        b = mq;
      else
        a = mq;
    }
    return Interval(a, b);
  };

  if (auto w = narrow(Rational(-outer), -r)) return w;
  return narrow(r, Rational(outer));
}

OutsideDiskResult has_root_outside_disk(const IntPoly& p, const Rational& r) {
  if (p.is_zero()) throw ZeroPolynomial("has_root_outside_disk");
  OutsideDiskResult out;
  if (p.degree() < 1 || r >= cauchy_bound(p)) {
    out.exact = true;
    return out;
  }
  if (auto w = certified_real_root_outside(p, r)) {
    out.outside = true;
    out.exact = true;
    out.witness = std::move(w);
    return out;
  }
  const double rd = r.get_d();
  const auto roots = root_moduli_numeric(p);
  if (!roots.empty()) out.numeric_max_modulus = roots.front().modulus;
  out.outside = std::any_of(roots.begin(), roots.end(),
                            [rd](const RootEstimate& e) { return e.modulus - e.radius > rd; });
  return out;
}

// ---------------------------------------------------------------------------
// Numeric roots

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

template <typename T>
struct Cx {
  T re{0};
  T im{0};

  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    T n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  T norm() const { return re * re + im * im; }
  T abs() const {
    using std::sqrt;
    return sqrt(norm());
  }
};

template <typename T>
struct Horner {
  Cx<T> value;
  Cx<T> deriv;
};

template <typename T>
Horner<T> horner(const std::vector<T>& c, const Cx<T>& z) {
  Cx<T> v{c.back(), T(0)};
  Cx<T> d{T(0), T(0)};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    d = d * z + v;
    v = v * z + Cx<T>{c[i], T(0)};
  }
  return {v, d};
}

// One Aberth-Ehrlich sweep (Gauss-Seidel order). Returns the largest correction.
template <typename T>
T aberth_sweep(const std::vector<T>& c, std::vector<Cx<T>>& z) {
  T max_step(0);
  for (std::size_t k = 0; k < z.size(); ++k) {
    auto h = horner(c, z[k]);
    if (h.value.norm() == T(0)) continue;
    Cx<T> sum;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j == k) continue;
      sum = sum + Cx<T>{T(1), T(0)} / (z[k] - z[j]);
    }
    Cx<T> step;
    if (h.deriv.norm() == T(0)) {
      // Pure repulsion step when the derivative vanishes.
      step = Cx<T>{T(1), T(0)} / sum;
    } else {
      Cx<T> ratio = h.value / h.deriv;
      step = ratio / (Cx<T>{T(1), T(0)} - ratio * sum);
    }
    z[k] = z[k] - step;
    max_step = std::max(max_step, step.abs());
  }
  return max_step;
}

struct SolvedRoot {
  Cx<Real> z;
  Real radius;
};

std::vector<SolvedRoot> solve_squarefree(const IntPoly& f, const NumericOptions& opts, std::size_t& budget) {
  const std::size_t m = static_cast<std::size_t>(f.degree());
  std::vector<Real> cr(m + 1);
  for (std::size_t i = 0; i <= m; ++i) cr[i] = Real(f.coeffs()[i].get_str());

  if (m == 1) {
    return {SolvedRoot{{-cr[0] / cr[1], Real(0)}, Real(0)}};
  }

  // Starting points on a circle just inside the Cauchy bound.
  const Rational bound = cauchy_bound(f);
  const long double radius = 0.99L * static_cast<long double>(bound.get_d());
  std::vector<long double> cl(m + 1);
  for (std::size_t i = 0; i <= m; ++i) cl[i] = static_cast<long double>(cr[i]);
  std::vector<Cx<long double>> zl(m);
  for (std::size_t k = 0; k < m; ++k) {
    const long double ang = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) /
                                static_cast<long double>(m) +
                            0.7L;
    zl[k] = {radius * std::cos(ang), radius * std::sin(ang)};
  }

  // Fast phase in extended precision, then polish in 50-digit arithmetic.
  while (budget > 0) {
    --budget;
    long double scale = 1.0L;
    for (const auto& z : zl) scale = std::max(scale, z.abs());
    if (aberth_sweep(cl, zl) < 1e-15L * scale) break;
  }

  std::vector<Cx<Real>> z(m);
  for (std::size_t k = 0; k < m; ++k) z[k] = {Real(zl[k].re), Real(zl[k].im)};
  const Real tol = boost::multiprecision::pow(Real(10), -(opts.digits + 2));
  bool converged = false;
  while (budget > 0) {
    --budget;
    if (aberth_sweep(cr, z) < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) throw ConvergenceFailure(opts.max_iterations);

  std::vector<SolvedRoot> out(m);
  const Real lead = boost::multiprecision::abs(cr[m]);
  for (std::size_t k = 0; k < m; ++k) {
    Real prod = lead;
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) prod *= (z[k] - z[j]).abs();
    const Real val = horner(cr, z[k]).value.abs();
    out[k] = {z[k], prod == 0 ? Real(std::numeric_limits<double>::infinity()) : Real(m) * val / prod};
  }
  return out;
}

}  // namespace

std::vector<RootEstimate> root_moduli_numeric(const IntPoly& p, const NumericOptions& opts) {
  if (p.is_zero()) throw ZeroPolynomial("root_moduli_numeric");
  if (opts.digits < 1 || opts.digits > kMaxNumericDigits)
    throw std::invalid_argument("digits must be in [1, " + std::to_string(kMaxNumericDigits) + "]");
  std::vector<RootEstimate> out;
  if (p.degree() < 1) return out;

  const auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    std::size_t budget = opts.max_iterations;
    for (const auto& root : solve_squarefree(factors[i], opts, budget)) {
      RootEstimate e;
      e.value = {root.z.re.convert_to<double>(), root.z.im.convert_to<double>()};
      e.modulus = root.z.abs().convert_to<double>();
      // Include the rounding of the 50-digit root to double.
      e.radius = root.radius.convert_to<double>() + 2 * e.modulus * std::numeric_limits<double>::epsilon();
      for (double t : opts.thresholds)
        if (std::abs(e.modulus - t) <= e.radius) e.straddles_threshold = true;
      for (std::size_t rep = 0; rep <= i; ++rep) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootEstimate& a, const RootEstimate& b) {
    if (a.modulus != b.modulus) return a.modulus > b.modulus;
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

RootCountReport root_count_report(const IntPoly& p, const std::vector<Interval>& intervals, int digits) {
  RootCountReport rep;
  rep.cauchy_bound = cauchy_bound(p);
  if (p.is_palindromic() && p.degree() % 2 == 0) rep.on_unit_circle = unit_circle_count_palindromic(p);
  for (const auto& iv : intervals) rep.real_in_interval.emplace_back(iv, sturm_count(p, iv));
  if (p.degree() < 1) {
    rep.max_modulus_exact = true;
    return rep;
  }
  NumericOptions opts;
  opts.digits = digits;
  const auto roots = root_moduli_numeric(p, opts);
  rep.max_modulus_estimate = roots.front().modulus;
  rep.max_modulus_radius = roots.front().radius;
  return rep;
}

}  // namespace knotconc
