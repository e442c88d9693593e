#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fimod {

/// Thrown on malformed input text, bad shapes, or out-of-range arguments.
class FimodError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The ground field: either the rationals or a prime field F_p.
class Field {
public:
  enum class Kind { Rationals, PrimeField };

  static Field rationals() { return Field(Kind::Rationals, 0); }
  /// Throws FimodError unless p is prime.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }
  bool is_prime_field() const { return kind_ == Kind::PrimeField; }

  /// "Q" or "F<p>".
  std::string name() const;
  /// Accepts "Q" or "F<p>" (e.g. "F2", "F5").
  static Field parse(std::string_view text);

  friend bool operator==(const Field&, const Field&) = default;

private:
  Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint64_t p_;
};

/// A field element in canonical form: lowest terms with positive denominator
/// over Q, an integer representative in [0, p) over F_p. Arithmetic goes
/// through ScalarOps so the modulus is applied consistently.
class Scalar {
public:
  Scalar() = default;
  explicit Scalar(mpq_class v) : v_(std::move(v)) {}

  const mpq_class& value() const { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }

private:
  mpq_class v_;
};

/// Arithmetic in a fixed field.
class ScalarOps {
public:
  explicit ScalarOps(Field f) : field_(f), mod_(static_cast<unsigned long>(f.modulus())) {}

  const Field& field() const { return field_; }

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return Scalar(mpq_class(1)); }
  Scalar from_int(long v) const;
  Scalar from_rational(const mpq_class& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws FimodError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// acc += a * b, in place.
  void add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const;

  std::string to_string(const Scalar& a) const;
  /// Rationals: "a" or "a/b"; prime fields: any integer, reduced mod p.
  Scalar parse(std::string_view text) const;

private:
  void reduce(mpq_class& v) const;

  Field field_;
  mpz_class mod_;
};

}  // namespace fimod
