#include "knotconc/polyio.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>

#include "knotconc/errors.hpp"

namespace knotconc {

namespace {

constexpr std::int64_t kMaxSpan = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  LaurentPoly parse() {
    skip_ws();
    if (peek() == '[') return parse_vector();
    parse_terms();
    return build();
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= s_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  bool at_digit() {
    skip_ws();
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("digit");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  Integer signed_integer() {
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    Integer v = digits();
    return sign < 0 ? Integer(-v) : v;
  }

  std::int64_t exponent() {
    skip_ws();
    const std::size_t start = pos_;
    Integer v = signed_integer();
    if (!v.fits_slong_p() || abs(v) > kMaxSpan) {
      pos_ = start;
      fail("exponent with magnitude at most " + std::to_string(kMaxSpan));
    }
    return v.get_si();
  }

  void add_term(std::int64_t e, const Integer& c, std::size_t offset) {
    if (!terms_.empty()) {
      const std::int64_t lo = std::min(e, terms_.begin()->first);
      const std::int64_t hi = std::max(e, terms_.rbegin()->first);
      if (hi - lo > kMaxSpan) {
        pos_ = offset;
        fail("exponent span at most " + std::to_string(kMaxSpan));
      }
    }
    terms_[e] += c;
  }

  // sign? term (sign term)*
  void parse_terms() {
    skip_ws();
    int sign = 1;
    if (accept('-'))
      sign = -1;
    else
      accept('+');
    parse_term(sign);
    while (true) {
      skip_ws();
      if (at_end()) return;
      if (accept('+'))
        sign = 1;
      else if (accept('-'))
        sign = -1;
      else
        fail("'+', '-' or end of input");
      parse_term(sign);
    }
  }

  void parse_term(int sign) {
    skip_ws();
    const std::size_t offset = pos_;
    Integer coeff = 1;
    bool have_coeff = false;
    if (at_digit()) {
      coeff = digits();
      have_coeff = true;
    }
    std::int64_t e = 0;
    const bool star = have_coeff && accept('*');
    skip_ws();
    if (peek() == 't') {
      ++pos_;
      e = 1;
      if (accept('^')) e = exponent();
    } else if (star || !have_coeff) {
      fail(have_coeff ? "'t'" : "term");
    }
    add_term(e, sign < 0 ? Integer(-coeff) : coeff, offset);
  }

  LaurentPoly parse_vector() {
    expect('[');
    std::vector<Integer> coeffs;
    if (!accept(']')) {
      coeffs.push_back(signed_integer());
      while (!accept(']')) {
        if (!accept(',')) fail("',' or ']'");
        coeffs.push_back(signed_integer());
        if (static_cast<std::int64_t>(coeffs.size()) > kMaxSpan) fail("at most 1000000 coefficients");
      }
    }
    std::int64_t low = 0;
    if (accept('@')) low = exponent();
    skip_ws();
    if (!at_end()) fail("end of input");
    return normalize(LaurentPoly(low, std::move(coeffs)));
  }

  LaurentPoly build() const {
    if (terms_.empty()) return {};
    const std::int64_t lo = terms_.begin()->first;
    const std::int64_t hi = terms_.rbegin()->first;
    std::vector<Integer> v(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [e, c] : terms_) v[static_cast<std::size_t>(e - lo)] = c;
    return normalize(LaurentPoly(lo, std::move(v)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::map<std::int64_t, Integer> terms_;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string render_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::int64_t e = p.low(); e <= p.high(); ++e) {
    const Integer c = p.coeff(e);
    if (sgn(c) == 0) continue;
    if (sgn(c) < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    const Integer mag = abs(c);
    if (e == 0 || mag != 1) out += mag.get_str();
    if (e == 0) continue;
    out += 't';
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace knotconc
