#include "nchodge/useries.hpp"

#include <stdexcept>

namespace nchodge {

USeries USeries::zero(const FieldTag& tag, int order) {
  if (order < 0) throw std::invalid_argument("u-series order must be nonnegative");
  USeries s;
  s.tag = tag;
  s.order = order;
  s.c.assign(order + 1, Scalar::zero(tag));
  return s;
}

USeries USeries::of_scalar(const Scalar& value, int order) {
  USeries s = zero(value.tag(), order);
  s.c[0] = value;
  return s;
}

bool USeries::is_zero() const {
  for (const Scalar& x : c)
    if (!x.is_zero()) return false;
  return true;
}

namespace {
void require_compatible(const USeries& a, const USeries& b) {
  if (!(a.tag == b.tag) || a.order != b.order)
    throw std::invalid_argument("u-series mismatch (field or truncation order)");
}
} // namespace

USeries USeries::operator+(const USeries& other) const {
  require_compatible(*this, other);
  USeries out = *this;
  for (int k = 0; k <= order; ++k) out.c[k] += other.c[k];
  return out;
}

USeries USeries::operator-(const USeries& other) const {
  require_compatible(*this, other);
  USeries out = *this;
  for (int k = 0; k <= order; ++k) out.c[k] -= other.c[k];
  return out;
}

USeries USeries::operator-() const {
  USeries out = *this;
  for (auto& x : out.c) x = -x;
  return out;
}

USeries USeries::operator*(const USeries& other) const {
  require_compatible(*this, other);
  USeries out = zero(tag, order);
  for (int i = 0; i <= order; ++i) {
    if (c[i].is_zero()) continue;
    for (int j = 0; i + j <= order; ++j)
      out.c[i + j] += c[i] * other.c[j];
  }
  return out;
}

bool USeries::operator==(const USeries& other) const {
  if (!(tag == other.tag) || order != other.order) return false;
  for (int k = 0; k <= order; ++k)
    if (c[k] != other.c[k]) return false;
  return true;
}

USeries USeries::scale(const Scalar& s) const {
  USeries out = *this;
  for (auto& x : out.c) x = x * s;
  return out;
}

USeries USeries::shift(int k) const {
  if (k < 0) throw std::invalid_argument("negative u-shift");
  USeries out = zero(tag, order);
  for (int i = 0; i + k <= order; ++i) out.c[i + k] = c[i];
  return out;
}

USeries USeries::star() const {
  USeries out = *this;
  for (int k = 1; k <= order; k += 2) out.c[k] = -out.c[k];
  return out;
}

USeries USeries::derive() const {
  USeries out = *this;
  for (auto& x : out.c) x = x.derive();
  return out;
}

std::string USeries::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = 0; k <= order; ++k) {
    if (c[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string coef = c[k].str();
    const bool needs_parens =
        coef.find_first_of("+-") != std::string::npos && !(coef.size() > 0 && coef[0] == '-' &&
                                                           coef.find_first_of("+-", 1) == std::string::npos);
    if (needs_parens || coef.find(' ') != std::string::npos) coef = "(" + coef + ")";
    if (k == 0) out += coef;
    else if (k == 1) out += coef + "*u";
    else out += coef + "*u^" + std::to_string(k);
  }
  return out;
}

} // namespace nchodge
