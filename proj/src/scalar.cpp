#include "fimod/scalar.hpp"

#include <cctype>

namespace fimod {

namespace {

bool is_prime(std::uint64_t p)
{
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
  if (!is_prime(p))
    throw FimodError("field modulus " + std::to_string(p) + " is not prime");
  if (p > (1ull << 31))
    throw FimodError("field modulus " + std::to_string(p) + " is too large");
  return Field(Kind::PrimeField, p);
}

std::string Field::name() const
{
  return kind_ == Kind::Rationals ? std::string("Q") : "F" + std::to_string(p_);
}

Field Field::parse(std::string_view text)
{
  if (text == "Q")
    return rationals();
  if (text.size() >= 2 && (text[0] == 'F' || text[0] == 'f')) {
    std::uint64_t p = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw FimodError("bad field name '" + std::string(text) + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p > (1ull << 40))
        throw FimodError("bad field name '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw FimodError("bad field name '" + std::string(text) + "' (expected Q or F<p>)");
}

void ScalarOps::reduce(mpq_class& v) const
{
  if (!field_.is_prime_field())
    return;
  // Prime-field values are kept as integers; callers never form fractions.
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_num_mpz_t(), mod_.get_mpz_t());
  v = r;
}

Scalar ScalarOps::from_int(long v) const
{
  mpq_class q(v);
  reduce(q);
  return Scalar(std::move(q));
}

Scalar ScalarOps::from_rational(const mpq_class& q) const
{
  if (!field_.is_prime_field())
    return Scalar(q);
  // a/b -> a * b^{-1} mod p
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  mpz_class inv_den;
  if (mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), mod_.get_mpz_t()) == 0)
    throw FimodError("denominator divisible by field characteristic");
  mpq_class r(num * inv_den);
  reduce(r);
  return Scalar(std::move(r));
}

Scalar ScalarOps::add(const Scalar& a, const Scalar& b) const
{
  mpq_class r = a.value() + b.value();
  if (field_.is_prime_field() && r >= mod_)
    r -= mod_;
  return Scalar(std::move(r));
}

Scalar ScalarOps::sub(const Scalar& a, const Scalar& b) const
{
  mpq_class r = a.value() - b.value();
  if (field_.is_prime_field() && sgn(r) < 0)
    r += mod_;
  return Scalar(std::move(r));
}

Scalar ScalarOps::mul(const Scalar& a, const Scalar& b) const
{
  mpq_class r = a.value() * b.value();
  reduce(r);
  return Scalar(std::move(r));
}

Scalar ScalarOps::neg(const Scalar& a) const
{
  if (a.is_zero())
    return a;
  if (field_.is_prime_field())
    return Scalar(mpq_class(mod_ - a.value().get_num()));
  return Scalar(mpq_class(-a.value()));
}

Scalar ScalarOps::inv(const Scalar& a) const
{
  if (a.is_zero())
    throw FimodError("division by zero");
  if (!field_.is_prime_field())
    return Scalar(mpq_class(1 / a.value()));
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.value().get_num_mpz_t(), mod_.get_mpz_t());
  return Scalar(mpq_class(r));
}

void ScalarOps::add_mul(Scalar& acc, const Scalar& a, const Scalar& b) const
{
  acc = add(acc, mul(a, b));
}

std::string ScalarOps::to_string(const Scalar& a) const
{
  return a.value().get_str();
}

Scalar ScalarOps::parse(std::string_view text) const
{
  std::string s(text);
  auto bad = [&] { return FimodError("malformed scalar '" + s + "'"); };
  if (s.empty())
    throw bad();
  std::size_t slash = s.find('/');
  auto check_int = [&](std::string_view part) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+'))
      i = 1;
    if (i == part.size())
      throw bad();
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw bad();
  };
  mpq_class q;
  if (slash == std::string::npos) {
    check_int(s);
    q = mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string_view num(s.data(), slash);
    std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
    check_int(num);
    check_int(den);
    mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
    mpz_class d(std::string(den[0] == '+' ? den.substr(1) : den));
    if (d == 0)
      throw bad();
    q = mpq_class(n, d);
    q.canonicalize();
  }
  return from_rational(q);
}

}  // namespace fimod
