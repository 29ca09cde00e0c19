#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fratio {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and every
/// arithmetic result is canonical, so equality is structural.
class Rat {
public:
  Rat() = default;
  Rat(long value) : q_(value) {}
  Rat(int value) : q_(static_cast<long>(value)) {}
  Rat(const BigInt &value) : q_(value) {}
  /// Throws std::domain_error when den is zero.
  Rat(const BigInt &num, const BigInt &den);
  Rat(std::int64_t num, std::int64_t den) : Rat(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

  /// Parses "n" or "n/d" (optional leading sign, no whitespace).
  static Rat parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer not exceeding the value.
  BigInt floor() const;
  /// value - floor(value), always in [0, 1).
  Rat frac() const;

  std::string to_string() const;
  /// Decimal approximation for human-readable annotations only.
  std::string approx(int digits = 5) const;

  friend Rat operator+(const Rat &a, const Rat &b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat &a, const Rat &b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat &a, const Rat &b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat &a, const Rat &b);
  Rat operator-() const { return Rat(mpq_class(-q_)); }

  Rat &operator+=(const Rat &o) { q_ += o.q_; return *this; }
  Rat &operator-=(const Rat &o) { q_ -= o.q_; return *this; }
  Rat &operator*=(const Rat &o) { q_ *= o.q_; return *this; }
  Rat &operator/=(const Rat &o) { return *this = *this / o; }

  friend bool operator==(const Rat &a, const Rat &b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  const mpq_class &raw() const { return q_; }

private:
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

std::ostream &operator<<(std::ostream &os, const Rat &r);

/// Narrowing helper; throws std::overflow_error if the value does not fit.
std::int64_t to_int64(const BigInt &v);

} // namespace fratio
