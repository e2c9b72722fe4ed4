// Exact scalar arithmetic: Q, GF(p), and the rational function field Q(t).
// Every value is kept in a canonical form so that equality is string-stable:
// GF residues live in [0,p), rational functions have monic denominator and
// coprime numerator/denominator.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace nchodge {

enum class FieldKind { Q, GF, RatFun };

struct FieldTag {
  FieldKind kind = FieldKind::Q;
  long p = 0; // modulus, meaningful only for GF
  bool operator==(const FieldTag&) const = default;
};

FieldTag field_q();
FieldTag field_gf(long p);
FieldTag field_ratfun();

std::string to_string(const FieldTag& tag);
// Accepts "q", "gf:32003", "gf(32003)", "ratfun".
FieldTag parse_field_tag(const std::string& text);

// Dense polynomial in the formal variable t with rational coefficients.
// Invariant: no trailing zero coefficients (the zero polynomial is {}).
struct Poly {
  std::vector<mpq_class> c;

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
  mpq_class lead() const { return c.empty() ? mpq_class(0) : c.back(); }
  void normalize();

  static Poly zero() { return {}; }
  static Poly constant(const mpq_class& a);
  static Poly t();
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
// Division with remainder; throws on zero divisor.
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);
Poly poly_derive(const Poly& a);
bool poly_eq(const Poly& a, const Poly& b);
std::string poly_to_string(const Poly& a);
Poly poly_parse(const std::string& text);

// Reduced fraction of polynomials; denominator monic and nonzero.
struct RatFun {
  Poly num;
  Poly den = Poly::constant(1);
  void canonicalize();
};

class Scalar {
public:
  Scalar() : tag_(field_q()), payload_(mpq_class(0)) {}

  static Scalar zero(const FieldTag& tag);
  static Scalar one(const FieldTag& tag);
  static Scalar integer(const FieldTag& tag, long n);
  // Embeds a rational constant into the field (reduces mod p for GF).
  static Scalar rational(const FieldTag& tag, const mpq_class& q);
  // The generator t of Q(t); throws for other fields.
  static Scalar t(const FieldTag& tag);
  static Scalar of_ratfun(RatFun rf);
  // Parses the serialization grammar: "3/4", "gf(32003):17",
  // "ratfun: (t^2+1)/(t)". A bare rational is accepted for any field.
  static Scalar parse(const FieldTag& tag, const std::string& text);

  const FieldTag& tag() const { return tag_; }
  bool is_zero() const;
  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }

  Scalar operator+(const Scalar& other) const;
  Scalar operator-(const Scalar& other) const;
  Scalar operator*(const Scalar& other) const;
  Scalar operator/(const Scalar& other) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  Scalar inv() const;
  // Formal d/dt; throws unless the field is Q(t).
  Scalar derive() const;

  // Access for field-specific code paths.
  const mpq_class& as_q() const;
  long as_gf() const;
  const RatFun& as_ratfun() const;

  std::string str() const;

private:
  FieldTag tag_;
  std::variant<mpq_class, long, RatFun> payload_;

  void require_same(const Scalar& other) const;
};

} // namespace nchodge
