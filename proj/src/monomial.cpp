#include "tate/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tate {

namespace {

void check_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw std::invalid_argument("monomials over different variable counts");
}

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  Monomial::Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("monomial exponent overflow");
  return r;
}

}  // namespace

Monomial::Monomial(std::initializer_list<Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

Monomial::Monomial(std::span<const Exponent> exps) : exps_(exps.begin(), exps.end()) {
  for (Exponent e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  if (index >= nvars) throw std::invalid_argument("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::int64_t Monomial::degree() const {
  std::int64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  check_same_size(*this, other);
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] = checked_add(exps_[i], other.exps_[i]);
  return *this;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw std::invalid_argument("monomial does not divide");
  Monomial q = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  return q;
}

Monomial Monomial::with_variable_removed(std::size_t index) const {
  if (index >= exps_.size()) throw std::invalid_argument("variable index out of range");
  Monomial m = *this;
  m.exps_.erase(m.exps_.begin() + static_cast<std::ptrdiff_t>(index));
  return m;
}

Monomial Monomial::with_variable_appended(Exponent e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Monomial m = *this;
  m.exps_.push_back(e);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  Monomial g = a;
  for (std::size_t i = 0; i < a.size(); ++i) g.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
  return g;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_size(a, b);
  Monomial l = a;
  for (std::size_t i = 0; i < a.size(); ++i) l.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return l;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  return std::lexicographical_compare_three_way(a.exps_.begin(), a.exps_.end(), b.exps_.begin(),
                                                b.exps_.end());
}

}  // namespace tate
