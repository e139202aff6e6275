#pragma once

#include <gmpxx.h>

#include <string>

#include "qhw/common.hpp"

namespace qw {

// Exact scalar: always an mpq_class.  Over F_p values are kept as the
// canonical residue n/1 with 0 <= n < p, so equality of scalars is plain
// mpq equality in both cases.
using Scalar = mpq_class;

enum class FieldKind { Rationals, Prime };

// Value-type handle for the coefficient field (Q or F_p, p prime).  All
// arithmetic in the workbench goes through this handle so that a single code
// path serves both fields exactly.
class Field {
public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  static Field prime(unsigned long p);

  FieldKind kind() const { return kind_; }
  unsigned long characteristic() const { return p_; }

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_long(long n) const { return reduce(Scalar(n)); }

  // Canonical form: lowest terms over Q; residue class n/1 over F_p.
  Scalar reduce(const Scalar& x) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool is_zero(const Scalar& a) const { return reduce(a) == 0; }

  // Accepts "3", "-7", "2/5".
  Scalar parse_scalar(const std::string& text) const;
  std::string to_string(const Scalar& a) const;
  std::string name() const;

private:
  Field(FieldKind k, unsigned long p) : kind_(k), p_(p) {}
  FieldKind kind_;
  unsigned long p_;
};

}  // namespace qw
