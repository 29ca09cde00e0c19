#include "fratio/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fratio {

Rat::Rat(const BigInt &num, const BigInt &den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat operator/(const Rat &a, const Rat &b) {
  if (b.q_ == 0) {
    throw std::domain_error("division by zero");
  }
  return Rat(mpq_class(a.q_ / b.q_));
}

namespace {

BigInt parse_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    ++i;
  }
  if (i == s.size()) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
    }
  }
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

} // namespace

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rat(parse_integer(text));
  }
  return Rat(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

BigInt Rat::floor() const {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return out;
}

Rat Rat::frac() const { return *this - Rat(floor()); }

std::string Rat::to_string() const {
  if (is_integer()) {
    return q_.get_num().get_str();
  }
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rat::approx(int digits) const {
  // Exact long division; avoids routing through floating point.
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) {
    scale *= 10;
  }
  BigInt scaled_num = abs(q_.get_num()) * scale;
  BigInt scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), scaled_num.get_mpz_t(), q_.get_den_mpz_t());
  BigInt whole;
  BigInt part;
  mpz_fdiv_qr(whole.get_mpz_t(), part.get_mpz_t(), scaled.get_mpz_t(), scale.get_mpz_t());
  std::string frac_digits = part.get_str();
  frac_digits.insert(0, static_cast<std::size_t>(digits) - frac_digits.size(), '0');
  return std::string(sign() < 0 ? "-" : "") + whole.get_str() + "." + frac_digits;
}

std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.to_string(); }

std::int64_t to_int64(const BigInt &v) {
  if (!v.fits_slong_p()) {
    throw std::overflow_error("integer " + v.get_str() + " exceeds 64-bit range");
  }
  return v.get_si();
}

} // namespace fratio
