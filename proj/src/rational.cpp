#include "qfe/rational.hpp"

#include <stdexcept>

namespace qfe {

RatXQ::RatXQ(PolyXQ num) : num_(std::move(num)), den_(1) {}

RatXQ::RatXQ(PolyXQ num, PolyXQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
}

RatXQ RatXQ::reduced() const {
  if (num_.is_zero()) return {};
  PolyXQ n = num_;
  PolyXQ d = den_;
  const PolyXQ g = gcd(n, d);
  if (!g.is_one()) {
    n = *divide_exact(n, g);
    d = *divide_exact(d, g);
  }
  if (d.leading().coeff < 0) {
    n = -n;
    d = -d;
  }
  // powers of q are units
  const int k = d.min_qdeg();
  if (k != 0) {
    n = n.shifted(0, -k);
    d = d.shifted(0, -k);
  }
  return {std::move(n), std::move(d)};
}

RatXQ operator+(const RatXQ& a, const RatXQ& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatXQ operator*(const RatXQ& a, const RatXQ& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RatXQ operator/(const RatXQ& a, const RatXQ& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

bool operator==(const RatXQ& a, const RatXQ& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatXQ::to_string(PolyStyle style) const {
  if (den_.is_one()) return num_.to_string(style);
  return "(" + num_.to_string(style) + ")/(" + den_.to_string(style) + ")";
}

}  // namespace qfe
