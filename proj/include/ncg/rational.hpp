#ifndef NCG_RATIONAL_HPP
#define NCG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ncg {

// Exact rational number. Always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "p/q" or a decimal string like "1.25" into an exact rational.
// Decimal strings are converted exactly (never through binary floating point).
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 ||
        den.set_str(s.substr(slash + 1), 10) != 0 || den == 0)
      throw std::invalid_argument("invalid rational literal: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("invalid decimal literal: " + s);
    mpz_class num;
    if (num.set_str(digits, 10) != 0)
      throw std::invalid_argument("invalid decimal literal: " + s);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  mpz_class num;
  if (num.set_str(s, 10) != 0)
    throw std::invalid_argument("invalid integer literal: " + s);
  return Rational(num);
}

// "p" when the denominator is 1, otherwise "p/q".
inline std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ncg

#endif  // NCG_RATIONAL_HPP
