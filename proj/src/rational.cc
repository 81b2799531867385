#include "invop/rational.hh"

#include <cctype>

namespace invop {

Rational::Rational(long num, long den) {
  if (den == 0) throw usage_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw usage_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view s = text;
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits(num) || !digits(den))
    throw usage_error("malformed rational literal '" + std::string(text) + "'");
  mpq_class v(std::string(num) + "/" + std::string(den), 10);
  v.canonicalize();
  if (v.get_den() == 0) throw usage_error("rational with zero denominator");
  if (neg) v = -v;
  return Rational(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw usage_error("rational is not a machine integer: " + str());
  return v_.get_num().get_si();
}

Rational rational_factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  return Rational(mpq_class(z));
}

Rational rational_binomial(unsigned long n, unsigned long k) {
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), n, k);
  return Rational(mpq_class(z));
}

Rational rational_falling(unsigned long n, unsigned long k) {
  mpz_class z = 1;
  for (unsigned long i = 0; i < k; ++i) z *= mpz_class(n - i);
  return Rational(mpq_class(z));
}

}  // namespace invop
