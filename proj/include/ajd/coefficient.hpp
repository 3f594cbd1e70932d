#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ajd/error.hpp"

namespace ajd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// The ground field: the rationals (characteristic 0) or F_q for an odd prime q.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }

  static Field residues(std::uint64_t q) {
    if (q == 2) {
      throw InputError("characteristic 2 is not supported");
    }
    if (!is_prime(q)) {
      throw InputError("characteristic " + std::to_string(q) + " is not prime");
    }
    Field f;
    f.q_ = q;
    return f;
  }

  constexpr std::uint64_t characteristic() const { return q_; }
  constexpr bool is_rational() const { return q_ == 0; }

  std::string str() const { return q_ == 0 ? "Q" : "F_" + std::to_string(q_); }

  friend constexpr bool operator==(Field, Field) = default;

  static constexpr bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
      if (q % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint64_t q_ = 0;
};

/// Exact field element. A rational value with modulus 0 is a literal that
/// embeds into any F_q whose characteristic does not divide its denominator,
/// so integer constants mix freely with residues.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long long value) : value_(value) {}  // NOLINT: implicit by design of literals
  Coefficient(long long num, long long den) {
    if (den == 0) throw InputError("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    value_ = Rational(Integer(num), Integer(den));
  }
  explicit Coefficient(Rational value) : value_(std::move(value)) {}

  static Coefficient residue(const Integer& value, std::uint64_t q) {
    Coefficient c;
    c.q_ = q;
    Integer r = value % q;
    if (r < 0) r += q;
    c.res_ = static_cast<std::uint64_t>(r);
    return c;
  }

  /// Image of this value in `f`.
  Coefficient in(Field f) const {
    if (f.is_rational()) {
      if (q_ != 0) throw InputError("cannot lift a residue to the rationals");
      return *this;
    }
    return to_residue(f.characteristic());
  }

  Field field() const { return q_ == 0 ? Field::rationals() : Field::residues(q_); }
  bool is_residue() const { return q_ != 0; }
  std::uint64_t modulus() const { return q_; }

  bool is_zero() const { return q_ == 0 ? value_ == 0 : res_ == 0; }
  bool is_one() const { return q_ == 0 ? value_ == 1 : res_ == 1; }

  const Rational& rational() const {
    if (q_ != 0) throw InputError("coefficient is a residue");
    return value_;
  }
  std::uint64_t residue_value() const { return res_; }

  Coefficient inverse() const {
    if (is_zero()) throw std::domain_error("division by zero coefficient");
    if (q_ == 0) return Coefficient(Rational(1) / value_);
    return pow_mod(res_, q_ - 2);
  }

  Coefficient operator-() const {
    Coefficient c = *this;
    if (q_ == 0) {
      c.value_ = -value_;
    } else if (res_ != 0) {
      c.res_ = q_ - res_;
    }
    return c;
  }

  Coefficient& operator+=(const Coefficient& o) {
    if (q_ == 0 && o.q_ == 0) {
      value_ += o.value_;
      return *this;
    }
    auto [a, b] = unify(*this, o);
    a.res_ = (a.res_ + b.res_) % a.q_;
    return *this = a;
  }
  Coefficient& operator-=(const Coefficient& o) { return *this += -o; }
  Coefficient& operator*=(const Coefficient& o) {
    if (q_ == 0 && o.q_ == 0) {
      value_ *= o.value_;
      return *this;
    }
    auto [a, b] = unify(*this, o);
    a.res_ = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.res_) * b.res_) % a.q_);
    return *this = a;
  }
  Coefficient& operator/=(const Coefficient& o) {
    if (q_ == 0 && o.q_ == 0) {
      if (o.value_ == 0) throw std::domain_error("division by zero coefficient");
      value_ /= o.value_;
      return *this;
    }
    auto [a, b] = unify(*this, o);
    return *this = a * b.inverse();
  }

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    if (a.q_ == 0 && b.q_ == 0) return a.value_ == b.value_;
    auto [x, y] = unify(a, b);
    return x.res_ == y.res_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Coefficient& c) { return os << c.str(); }

  /// "3", "-1/2"; residues print their representative in [0, q).
  std::string str() const {
    if (q_ != 0) return std::to_string(res_);
    return value_.str();
  }

 private:
  Coefficient to_residue(std::uint64_t q) const {
    if (q_ == q) return *this;
    if (q_ != 0) throw InputError("mixed residue fields");
    Integer den_mod = boost::multiprecision::denominator(value_) % q;
    if (den_mod == 0) {
      throw InputError("denominator divisible by the characteristic " +
                       std::to_string(q));
    }
    Coefficient num = residue(boost::multiprecision::numerator(value_), q);
    Coefficient den = residue(den_mod, q);
    return num * den.inverse();
  }

  static std::pair<Coefficient, Coefficient> unify(const Coefficient& a,
                                                   const Coefficient& b) {
    if (a.q_ == b.q_) return {a, b};
    if (a.q_ == 0) return {a.to_residue(b.q_), b};
    if (b.q_ == 0) return {a, b.to_residue(a.q_)};
    throw InputError("mixed residue fields");
  }

  Coefficient pow_mod(std::uint64_t base, std::uint64_t exp) const {
    unsigned __int128 result = 1;
    unsigned __int128 b = base % q_;
    while (exp > 0) {
      if (exp & 1U) result = (result * b) % q_;
      b = (b * b) % q_;
      exp >>= 1U;
    }
    Coefficient c;
    c.q_ = q_;
    c.res_ = static_cast<std::uint64_t>(result);
    return c;
  }

  Rational value_{0};
  std::uint64_t q_ = 0;
  std::uint64_t res_ = 0;
};

}  // namespace ajd
