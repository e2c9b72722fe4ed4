#include "nchodge/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nchodge {

FieldTag field_q() { return {FieldKind::Q, 0}; }
FieldTag field_gf(long p) { return {FieldKind::GF, p}; }
FieldTag field_ratfun() { return {FieldKind::RatFun, 0}; }

std::string to_string(const FieldTag& tag) {
  switch (tag.kind) {
    case FieldKind::Q: return "q";
    case FieldKind::GF: return "gf:" + std::to_string(tag.p);
    case FieldKind::RatFun: return "ratfun";
  }
  throw std::logic_error("unreachable field kind");
}

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
  return out;
}

mpq_class parse_mpq(const std::string& text) {
  // mpq_class accepts garbage like empty strings in some builds; validate.
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  if (s[i] == '+' || s[i] == '-') ++i;
  std::size_t j = digits(i);
  if (j == i) throw std::invalid_argument("bad rational literal: " + text);
  if (j < s.size()) {
    if (s[j] != '/' ) throw std::invalid_argument("bad rational literal: " + text);
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size())
      throw std::invalid_argument("bad rational literal: " + text);
  }
  mpq_class q(s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

long gf_reduce(const mpz_class& z, long p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<long>(r.get_si());
}

long gf_inv(long a, long p) {
  // Extended Euclid; a must be nonzero mod p.
  long t0 = 0, t1 = 1, r0 = p, r1 = a % p;
  if (r1 < 0) r1 += p;
  if (r1 == 0) throw std::domain_error("inverse of zero in GF(" + std::to_string(p) + ")");
  while (r1 != 0) {
    long q = r0 / r1;
    long tmp = t0 - q * t1;
    t0 = t1; t1 = tmp;
    tmp = r0 - q * r1;
    r0 = r1; r1 = tmp;
  }
  if (r0 != 1) throw std::domain_error("non-invertible element in GF(" + std::to_string(p) + ")");
  long inv = t0 % p;
  if (inv < 0) inv += p;
  return inv;
}

long gf_of_mpq(const mpq_class& q, long p) {
  long num = gf_reduce(q.get_num(), p);
  long den = gf_reduce(q.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes mod " + std::to_string(p));
  return static_cast<long>((static_cast<long long>(num) * gf_inv(den, p)) % p);
}

} // namespace

FieldTag parse_field_tag(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s == "q" || s == "Q") return field_q();
  if (s == "ratfun") return field_ratfun();
  std::string inner;
  if (s.rfind("gf:", 0) == 0) inner = s.substr(3);
  else if (s.rfind("gf(", 0) == 0 && s.back() == ')') inner = s.substr(3, s.size() - 4);
  if (!inner.empty()) {
    long p = 0;
    try {
      p = std::stol(inner);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad field tag: " + text);
    }
    if (!is_prime(p)) throw std::invalid_argument("GF modulus must be prime: " + inner);
    return field_gf(p);
  }
  throw std::invalid_argument("bad field tag: " + text);
}

void Poly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Poly Poly::constant(const mpq_class& a) {
  Poly out;
  if (a != 0) out.c = {a};
  return out;
}

Poly Poly::t() {
  Poly out;
  out.c = {mpq_class(0), mpq_class(1)};
  return out;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  out.normalize();
  return out;
}

Poly poly_neg(const Poly& a) {
  Poly out = a;
  for (auto& x : out.c) x = -x;
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero();
  Poly out;
  out.c.resize(a.c.size() + b.c.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c.size(); ++i)
    for (std::size_t j = 0; j < b.c.size(); ++j)
      out.c[i + j] += a.c[i] * b.c[j];
  out.normalize();
  return out;
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  quot = Poly::zero();
  rem = a;
  const int db = b.degree();
  const mpq_class lead = b.lead();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    mpq_class coef = rem.lead() / lead;
    if (quot.c.size() < static_cast<std::size_t>(shift + 1))
      quot.c.resize(shift + 1, mpq_class(0));
    quot.c[shift] += coef;
    for (int i = 0; i <= db; ++i)
      rem.c[shift + i] -= coef * b.c[i];
    rem.normalize();
  }
  quot.normalize();
}

Poly poly_gcd(Poly a, Poly b) {
  auto monic = [](Poly& x) {
    if (x.is_zero()) return;
    const mpq_class lead = x.lead();
    for (auto& v : x.c) v /= lead;
  };
  monic(a);
  monic(b);
  while (!b.is_zero()) {
    Poly q, r;
    poly_divmod(a, b, q, r);
    monic(r);
    a = b;
    b = r;
  }
  return a;
}

Poly poly_derive(const Poly& a) {
  Poly out;
  if (a.c.size() <= 1) return out;
  out.c.resize(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i)
    out.c[i - 1] = a.c[i] * static_cast<long>(i);
  out.normalize();
  return out;
}

bool poly_eq(const Poly& a, const Poly& b) { return a.c == b.c; }

std::string poly_to_string(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (int i = a.degree(); i >= 0; --i) {
    const mpq_class& coef = a.c[i];
    if (coef == 0) continue;
    const bool first = out.empty();
    mpq_class mag = coef >= 0 ? coef : mpq_class(-coef);
    if (coef < 0) out += "-";
    else if (!first) out += "+";
    if (i == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Poly poly_parse(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial literal");
  Poly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    std::size_t start = i;
    while (i < s.size() && s[i] != '+' && s[i] != '-') ++i;
    std::string term = s.substr(start, i - start);
    if (term.empty()) throw std::invalid_argument("bad polynomial literal: " + text);
    mpq_class coef(1);
    int expo = 0;
    const std::size_t tpos = term.find('t');
    if (tpos == std::string::npos) {
      coef = parse_mpq(term);
    } else {
      std::string head = term.substr(0, tpos);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (!head.empty()) coef = parse_mpq(head);
      expo = 1;
      std::string tail = term.substr(tpos + 1);
      if (!tail.empty()) {
        if (tail[0] != '^') throw std::invalid_argument("bad polynomial literal: " + text);
        expo = std::stoi(tail.substr(1));
        if (expo < 0) throw std::invalid_argument("negative exponent: " + text);
      }
    }
    coef *= sign;
    if (out.c.size() < static_cast<std::size_t>(expo + 1))
      out.c.resize(expo + 1, mpq_class(0));
    out.c[expo] += coef;
  }
  out.normalize();
  return out;
}

void RatFun::canonicalize() {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den = Poly::constant(1);
    return;
  }
  Poly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    Poly q, r;
    poly_divmod(num, g, q, r);
    num = q;
    poly_divmod(den, g, q, r);
    den = q;
  }
  const mpq_class lead = den.lead();
  if (lead != 1) {
    for (auto& v : num.c) v /= lead;
    for (auto& v : den.c) v /= lead;
  }
}

Scalar Scalar::zero(const FieldTag& tag) { return integer(tag, 0); }
Scalar Scalar::one(const FieldTag& tag) { return integer(tag, 1); }

Scalar Scalar::integer(const FieldTag& tag, long n) {
  return rational(tag, mpq_class(n));
}

Scalar Scalar::rational(const FieldTag& tag, const mpq_class& q) {
  Scalar s;
  s.tag_ = tag;
  switch (tag.kind) {
    case FieldKind::Q: s.payload_ = q; break;
    case FieldKind::GF: s.payload_ = gf_of_mpq(q, tag.p); break;
    case FieldKind::RatFun: {
      RatFun rf;
      rf.num = Poly::constant(q);
      s.payload_ = rf;
      break;
    }
  }
  return s;
}

Scalar Scalar::t(const FieldTag& tag) {
  if (tag.kind != FieldKind::RatFun)
    throw std::domain_error("t is only defined in the rational function field");
  RatFun rf;
  rf.num = Poly::t();
  Scalar s;
  s.tag_ = tag;
  s.payload_ = rf;
  return s;
}

Scalar Scalar::of_ratfun(RatFun rf) {
  rf.canonicalize();
  Scalar s;
  s.tag_ = field_ratfun();
  s.payload_ = std::move(rf);
  return s;
}

bool Scalar::is_zero() const {
  switch (tag_.kind) {
    case FieldKind::Q: return std::get<mpq_class>(payload_) == 0;
    case FieldKind::GF: return std::get<long>(payload_) == 0;
    case FieldKind::RatFun: return std::get<RatFun>(payload_).num.is_zero();
  }
  return true;
}

bool Scalar::operator==(const Scalar& other) const {
  if (!(tag_ == other.tag_)) return false;
  switch (tag_.kind) {
    case FieldKind::Q: return std::get<mpq_class>(payload_) == std::get<mpq_class>(other.payload_);
    case FieldKind::GF: return std::get<long>(payload_) == std::get<long>(other.payload_);
    case FieldKind::RatFun: {
      const RatFun& a = std::get<RatFun>(payload_);
      const RatFun& b = std::get<RatFun>(other.payload_);
      return poly_eq(a.num, b.num) && poly_eq(a.den, b.den);
    }
  }
  return false;
}

void Scalar::require_same(const Scalar& other) const {
  if (!(tag_ == other.tag_))
    throw std::invalid_argument("scalar field mismatch: " + to_string(tag_) + " vs " +
                                to_string(other.tag_));
}

Scalar Scalar::operator+(const Scalar& other) const {
  require_same(other);
  Scalar out;
  out.tag_ = tag_;
  switch (tag_.kind) {
    case FieldKind::Q:
      out.payload_ = mpq_class(std::get<mpq_class>(payload_) + std::get<mpq_class>(other.payload_));
      break;
    case FieldKind::GF:
      out.payload_ = (std::get<long>(payload_) + std::get<long>(other.payload_)) % tag_.p;
      break;
    case FieldKind::RatFun: {
      const RatFun& a = std::get<RatFun>(payload_);
      const RatFun& b = std::get<RatFun>(other.payload_);
      RatFun r;
      r.num = poly_add(poly_mul(a.num, b.den), poly_mul(b.num, a.den));
      r.den = poly_mul(a.den, b.den);
      r.canonicalize();
      out.payload_ = std::move(r);
      break;
    }
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out;
  out.tag_ = tag_;
  switch (tag_.kind) {
    case FieldKind::Q: out.payload_ = mpq_class(-std::get<mpq_class>(payload_)); break;
    case FieldKind::GF: {
      long v = std::get<long>(payload_);
      out.payload_ = v == 0 ? 0L : tag_.p - v;
      break;
    }
    case FieldKind::RatFun: {
      RatFun r = std::get<RatFun>(payload_);
      r.num = poly_neg(r.num);
      out.payload_ = std::move(r);
      break;
    }
  }
  return out;
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator*(const Scalar& other) const {
  require_same(other);
  Scalar out;
  out.tag_ = tag_;
  switch (tag_.kind) {
    case FieldKind::Q:
      out.payload_ = mpq_class(std::get<mpq_class>(payload_) * std::get<mpq_class>(other.payload_));
      break;
    case FieldKind::GF:
      out.payload_ = static_cast<long>(
          (static_cast<long long>(std::get<long>(payload_)) * std::get<long>(other.payload_)) %
          tag_.p);
      break;
    case FieldKind::RatFun: {
      const RatFun& a = std::get<RatFun>(payload_);
      const RatFun& b = std::get<RatFun>(other.payload_);
      RatFun r;
      r.num = poly_mul(a.num, b.num);
      r.den = poly_mul(a.den, b.den);
      r.canonicalize();
      out.payload_ = std::move(r);
      break;
    }
  }
  return out;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar out;
  out.tag_ = tag_;
  switch (tag_.kind) {
    case FieldKind::Q:
      out.payload_ = mpq_class(1 / std::get<mpq_class>(payload_));
      break;
    case FieldKind::GF:
      out.payload_ = gf_inv(std::get<long>(payload_), tag_.p);
      break;
    case FieldKind::RatFun: {
      const RatFun& a = std::get<RatFun>(payload_);
      RatFun r;
      r.num = a.den;
      r.den = a.num;
      r.canonicalize();
      out.payload_ = std::move(r);
      break;
    }
  }
  return out;
}

Scalar Scalar::operator/(const Scalar& other) const { return *this * other.inv(); }

Scalar Scalar::derive() const {
  if (tag_.kind != FieldKind::RatFun)
    throw std::domain_error("derivative is only defined over the rational function field");
  const RatFun& a = std::get<RatFun>(payload_);
  RatFun r;
  // (n/d)' = (n'd - nd')/d^2
  r.num = poly_sub(poly_mul(poly_derive(a.num), a.den), poly_mul(a.num, poly_derive(a.den)));
  r.den = poly_mul(a.den, a.den);
  r.canonicalize();
  Scalar out;
  out.tag_ = tag_;
  out.payload_ = std::move(r);
  return out;
}

const mpq_class& Scalar::as_q() const {
  if (tag_.kind != FieldKind::Q) throw std::domain_error("scalar is not rational");
  return std::get<mpq_class>(payload_);
}

long Scalar::as_gf() const {
  if (tag_.kind != FieldKind::GF) throw std::domain_error("scalar is not a GF element");
  return std::get<long>(payload_);
}

const RatFun& Scalar::as_ratfun() const {
  if (tag_.kind != FieldKind::RatFun) throw std::domain_error("scalar is not a rational function");
  return std::get<RatFun>(payload_);
}

std::string Scalar::str() const {
  switch (tag_.kind) {
    case FieldKind::Q: return std::get<mpq_class>(payload_).get_str();
    case FieldKind::GF:
      return "gf(" + std::to_string(tag_.p) + "):" + std::to_string(std::get<long>(payload_));
    case FieldKind::RatFun: {
      const RatFun& a = std::get<RatFun>(payload_);
      return "ratfun: (" + poly_to_string(a.num) + ")/(" + poly_to_string(a.den) + ")";
    }
  }
  throw std::logic_error("unreachable scalar kind");
}

Scalar Scalar::parse(const FieldTag& tag, const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  if (s.rfind("gf(", 0) == 0) {
    const std::size_t close = s.find("):");
    if (close == std::string::npos) throw std::invalid_argument("bad GF literal: " + text);
    const long p = std::stol(s.substr(3, close - 3));
    if (tag.kind != FieldKind::GF || tag.p != p)
      throw std::invalid_argument("GF literal does not match field " + to_string(tag));
    return rational(tag, parse_mpq(s.substr(close + 2)));
  }
  if (s.rfind("ratfun:", 0) == 0) {
    if (tag.kind != FieldKind::RatFun)
      throw std::invalid_argument("ratfun literal in field " + to_string(tag));
    s = s.substr(7);
    RatFun rf;
    if (!s.empty() && s.front() == '(') {
      const std::size_t split = s.find(")/(");
      if (split != std::string::npos && s.back() == ')') {
        rf.num = poly_parse(s.substr(1, split - 1));
        rf.den = poly_parse(s.substr(split + 3, s.size() - split - 4));
      } else if (s.back() == ')') {
        rf.num = poly_parse(s.substr(1, s.size() - 2));
      } else {
        throw std::invalid_argument("bad ratfun literal: " + text);
      }
    } else {
      rf.num = poly_parse(s);
    }
    return of_ratfun(std::move(rf));
  }
  // Bare literal: a rational constant, or a polynomial when over Q(t).
  if (tag.kind == FieldKind::RatFun && s.find('t') != std::string::npos) {
    RatFun rf;
    rf.num = poly_parse(s);
    return of_ratfun(std::move(rf));
  }
  return rational(tag, parse_mpq(s));
}

} // namespace nchodge
