#include "qhw/field.hpp"

namespace qw {

Field Field::prime(unsigned long p) {
  mpz_class pz(static_cast<unsigned long>(p));
  require(p >= 2 && mpz_probab_prime_p(pz.get_mpz_t(), 40) != 0, "ParseError",
          "field characteristic must be prime, got " + std::to_string(p));
  return Field(FieldKind::Prime, p);
}

Scalar Field::reduce(const Scalar& x) const {
  Scalar v = x;
  v.canonicalize();
  if (kind_ == FieldKind::Rationals) return v;
  mpz_class p(p_);
  mpz_class den = v.get_den();
  mpz_class dmod = den % p;
  if (dmod < 0) dmod += p;
  require(dmod != 0, "ParseError",
          "scalar with denominator divisible by " + std::to_string(p_));
  mpz_class dinv;
  mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t());
  mpz_class num = v.get_num() % p;
  mpz_class res = (num * dinv) % p;
  if (res < 0) res += p;
  return Scalar(res);
}

Scalar Field::inv(const Scalar& a) const {
  Scalar v = reduce(a);
  require(v != 0, "ParseError", "division by zero");
  if (kind_ == FieldKind::Rationals) return Scalar(1) / v;
  mpz_class p(p_), num = v.get_num(), ninv;
  mpz_invert(ninv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  mpz_class res = ninv % p;
  if (res < 0) res += p;
  return Scalar(res);
}

Scalar Field::parse_scalar(const std::string& text) const {
  try {
    Scalar v(text);
    return reduce(v);
  } catch (const std::invalid_argument&) {
    fail("ParseError", "bad scalar '" + text + "'");
  }
}

std::string Field::to_string(const Scalar& a) const {
  Scalar v = reduce(a);
  return v.get_str();
}

std::string Field::name() const {
  return kind_ == FieldKind::Rationals ? "Q" : "F" + std::to_string(p_);
}

}  // namespace qw
