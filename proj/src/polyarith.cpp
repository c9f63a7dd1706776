#include "knotconc/polyarith.hpp"

#include <algorithm>
#include <utility>

#include "knotconc/errors.hpp"

namespace knotconc {

// ---------------------------------------------------------------------------
// IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Integer IntPoly::operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomial("leading");
  return coeffs_.back();
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (sgn(leading()) < 0) g = -g;
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(v));
}

bool IntPoly::is_palindromic() const { return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin()); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> v(a.coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * a.coeffs_[i];
  return IntPoly(std::move(v));
}

std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;

  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Integer> q(rem.size() - db);
  Integer r;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Integer& top = rem[k + db];
    if (sgn(top) == 0) continue;
    // Every quotient coefficient of an integral quotient is itself integral.
    mpz_fdiv_qr(q[k].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
    if (sgn(r) != 0) return std::nullopt;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), bc[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(rem[i]) != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

IntPoly signed_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Integer lc = abs(bc[db]);
  const int lc_sign = sgn(bc[db]);
  // rem <- |lc| * rem - (top * sign(lc)) * t^k * b, which cancels the top term
  // while scaling by a positive factor only.
  for (std::size_t k = rem.size() - 1 - db + 1; k-- > 0;) {
    Integer top = rem[k + db];
    for (auto& c : rem) c *= lc;
    if (lc_sign < 0) top = -top;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[k + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
  }
  rem.resize(db);
  return IntPoly(std::move(rem));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = signed_pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPoly g = gcd(p, p.derivative());
  return exact_div(p.primitive_part(), g).value().primitive_part();
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
  if (p.degree() < 1) throw WrongDegree(1, p.degree());
  const IntPoly f = p.primitive_part();
  const IntPoly fp = f.derivative();
  IntPoly a = gcd(f, fp);
  IntPoly b = exact_div(f, a).value();
  IntPoly c = exact_div(fp, a).value();
  IntPoly d = c - b.derivative();
  std::vector<IntPoly> out;
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(a.primitive_part());
    IntPoly nb = exact_div(b, a).value();
    c = exact_div(d, a).value();
    b = std::move(nb);
    d = c - b.derivative();
  }
  return out;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(std::int64_t low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly::LaurentPoly(std::int64_t low, std::initializer_list<long> coeffs) : low_(low) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

LaurentPoly::LaurentPoly(const IntPoly& p) : LaurentPoly(0, p.coeffs()) {}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; });
  low_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

Integer LaurentPoly::coeff(std::int64_t exponent) const {
  if (exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

IntPoly LaurentPoly::to_int_poly() const { return IntPoly(coeffs_); }

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Integer> v = p.coeffs();
  if (sgn(v.front()) < 0)
    for (auto& c : v) c = -c;
  return LaurentPoly(0, std::move(v));
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t lo = std::min(a.low(), b.low());
  const std::int64_t hi = std::max(a.high(), b.high());
  std::vector<Integer> v(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t e = lo; e <= hi; ++e) v[static_cast<std::size_t>(e - lo)] = a.coeff(e) + b.coeff(e);
  return LaurentPoly(lo, std::move(v));
}

LaurentPoly negate(const LaurentPoly& p) { return scale(Integer(-1), p); }

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, negate(b)); }

LaurentPoly scale(const Integer& c, const LaurentPoly& p) {
  std::vector<Integer> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * p.coeffs()[i];
  return LaurentPoly(p.low(), std::move(v));
}

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly prod = a.to_int_poly() * b.to_int_poly();
  return LaurentPoly(a.low() + b.low(), prod.coeffs());
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return LaurentPoly{};
  // Both stored polynomials have nonzero constant term after dropping t^low,
  // so divisibility up to units reduces to ordinary divisibility.
  auto q = exact_div(normalize(a).to_int_poly(), normalize(b).to_int_poly());
  if (!q) return std::nullopt;
  return normalize(LaurentPoly(*q));
}

LaurentPoly involute(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  std::vector<Integer> v(p.coeffs().rbegin(), p.coeffs().rend());
  return LaurentPoly(-p.high(), std::move(v));
}

bool is_symmetric(const LaurentPoly& p) { return normalize(p) == normalize(involute(p)); }

namespace {

// Returns numerator N with p(num/den) = N / den^deg, via homogeneous Horner.
Integer homogeneous_value(const std::vector<Integer>& c, const Integer& num, const Integer& den) {
  Integer acc = 0;
  Integer den_pow = 1;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * num + c[i] * den_pow;
    den_pow *= den;
  }
  return acc;
}

}  // namespace

Rational eval_rational(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  Integer value = homogeneous_value(p.coeffs(), num, den);
  Integer scale_den;
  mpz_pow_ui(scale_den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p.degree()));
  Rational out(value, scale_den);
  out.canonicalize();
  return out;
}

Rational eval_rational(const LaurentPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  if (p.low() < 0 && sgn(x) == 0) throw EvalAtZero();
  Rational base = eval_rational(p.to_int_poly(), x);
  if (p.low() == 0) return base;
  Rational unit;
  const unsigned long k = static_cast<unsigned long>(p.low() < 0 ? -p.low() : p.low());
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), k);
  unit = p.low() > 0 ? Rational(num, den) : Rational(den, num);
  unit.canonicalize();
  return base * unit;
}

}  // namespace knotconc
