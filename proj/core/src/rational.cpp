#include "codisc/rational.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "codisc/errors.hpp"

namespace codisc {

Integer binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer pow2(unsigned long e) {
  Integer r = 1;
  r <<= e;
  return r;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational q(num);
  q /= Rational(den);
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto bad = [&] { throw parse_error("malformed rational '" + std::string(text) + "'"); };
  if (text.empty()) bad();
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
    if (num.empty() || den.empty()) bad();
  }
  Integer n, d;
  if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0) bad();
  if (mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) bad();
  if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  return ratio(n, d);
}

namespace {

// floor(|q| * 10^places + 1/2) as an integer, i.e. round half up.
Integer scaled_round(const Rational& q, int places) {
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer p10 = 1;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(places));
  Integer r;
  // (2*num*10^places + den) / (2*den), floored
  mpz_fdiv_q(r.get_mpz_t(), Integer(2 * num * p10 + den).get_mpz_t(), Integer(2 * den).get_mpz_t());
  return r;
}

std::string insert_point(const std::string& digits, int places, bool negative) {
  std::string s = digits;
  if (places > 0) {
    if (static_cast<int>(s.size()) <= places) s.insert(0, places + 1 - s.size(), '0');
    s.insert(s.size() - places, ".");
  }
  if (negative && s.find_first_not_of("0.") != std::string::npos) s.insert(0, "-");
  return s;
}

}  // namespace

std::string fixed_string(const Rational& q, int places) {
  if (places < 0) throw std::domain_error("fixed_string: negative places");
  Integer scaled = scaled_round(q, places);
  return insert_point(scaled.get_str(), places, q < 0);
}

std::string decimal_string(const Rational& q, int digits) {
  if (digits < 1) throw std::domain_error("decimal_string: digits must be >= 1");
  if (q == 0) return "0";
  // exponent e with 10^e <= |q| < 10^(e+1)
  Rational a = abs(q);
  int e = 0;
  Rational ten(10);
  if (a >= 1) {
    Rational p(1);
    while (p * ten <= a) {
      p *= ten;
      ++e;
    }
  } else {
    Rational p(1);
    while (p > a) {
      p /= ten;
      --e;
    }
  }
  int places = digits - 1 - e;
  if (places < 0) {
    // integral part alone exceeds the significant digits: round at a negative place
    Integer p10 = 1;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(-places));
    Rational shifted = a / Rational(p10);
    Integer r = scaled_round(shifted, 0);
    std::string s = r.get_str() + std::string(-places, '0');
    if (q < 0) s.insert(0, "-");
    return s;
  }
  Integer scaled = scaled_round(a, places);
  return insert_point(scaled.get_str(), places, q < 0);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace codisc
