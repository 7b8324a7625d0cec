#include "autoeq/graded.hpp"

#include <sstream>

#include "autoeq/errors.hpp"

namespace autoeq {

HilbertSeries::HilbertSeries(std::initializer_list<std::pair<const int, long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

HilbertSeries HilbertSeries::monomial(int exponent, const Integer& coefficient) {
  HilbertSeries s;
  s.add_term(exponent, coefficient);
  return s;
}

Integer HilbertSeries::coefficient(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

void HilbertSeries::add_term(int exponent, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

HilbertSeries& HilbertSeries::operator+=(const HilbertSeries& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, c);
  return *this;
}

HilbertSeries& HilbertSeries::operator-=(const HilbertSeries& other) {
  for (const auto& [e, c] : other.coeffs_) add_term(e, -c);
  return *this;
}

HilbertSeries& HilbertSeries::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, c] : coeffs_) c *= scalar;
  return *this;
}

HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries out;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) out.add_term(ea + eb, ca * cb);
  return out;
}

HilbertSeries HilbertSeries::pow(unsigned exponent) const {
  HilbertSeries result = one();
  HilbertSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

HilbertSeries HilbertSeries::substitute_power(int ell) const {
  if (ell < 1) throw DomainError("substitute_power requires ell >= 1");
  HilbertSeries out;
  for (const auto& [e, c] : coeffs_) out.add_term(e * ell, c);
  return out;
}

HilbertSeries HilbertSeries::divided_exactly(const Integer& divisor) const {
  if (divisor == 0) throw DomainError("division of a series by zero");
  HilbertSeries out;
  for (const auto& [e, c] : coeffs_) {
    if (!mpz_divisible_p(c.get_mpz_t(), divisor.get_mpz_t())) {
      throw DomainError("coefficient " + c.get_str() + " of t^" + std::to_string(e) +
                        " is not divisible by " + divisor.get_str());
    }
    out.add_term(e, Integer(c / divisor));
  }
  return out;
}

std::string HilbertSeries::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

GradedDims::GradedDims(std::initializer_list<std::pair<const int, long>> entries) {
  for (const auto& [d, n] : entries) {
    if (n < 0) throw DomainError("graded dimension must be nonnegative");
    set(d, at(d) + n);
  }
}

GradedDims GradedDims::from_series(const HilbertSeries& series) {
  GradedDims out;
  for (const auto& [e, c] : series.coefficients()) {
    if (c < 0) {
      throw DomainError("series " + series.to_string() +
                        " has a negative coefficient and is not a dimension vector");
    }
    out.entries_.emplace(e, c);
  }
  return out;
}

HilbertSeries GradedDims::series() const {
  HilbertSeries s;
  for (const auto& [d, n] : entries_) s.add_term(d, n);
  return s;
}

Integer GradedDims::at(int degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? Integer(0) : it->second;
}

Integer GradedDims::total() const {
  Integer t = 0;
  for (const auto& [d, n] : entries_) t += n;
  return t;
}

bool GradedDims::all_even() const {
  for (const auto& [d, n] : entries_)
    if (d % 2 != 0) return false;
  return true;
}

int GradedDims::min_degree() const {
  if (entries_.empty()) throw DomainError("min_degree of the zero space");
  return entries_.begin()->first;
}

int GradedDims::max_degree() const {
  if (entries_.empty()) throw DomainError("max_degree of the zero space");
  return entries_.rbegin()->first;
}

Integer GradedDims::euler_characteristic() const {
  Integer chi = 0;
  for (const auto& [d, n] : entries_) {
    if (d % 2 == 0)
      chi += n;
    else
      chi -= n;
  }
  return chi;
}

void GradedDims::set(int degree, const Integer& dimension) {
  if (dimension < 0) throw DomainError("graded dimension must be nonnegative");
  if (dimension == 0)
    entries_.erase(degree);
  else
    entries_[degree] = dimension;
}

std::string GradedDims::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [d, n] : entries_) {
    if (!first) os << ", ";
    first = false;
    os << d << ":" << n.get_str();
  }
  os << "}";
  return os.str();
}

GradedDims kunneth_product(const GradedDims& a, const GradedDims& b) {
  return GradedDims::from_series(a.series() * b.series());
}

GradedDims shift(const GradedDims& a, int k) {
  GradedDims out;
  for (const auto& [d, n] : a.entries()) out.set(d - k, n);
  return out;
}

GradedDims reflect(const GradedDims& a, int top) {
  GradedDims out;
  for (const auto& [d, n] : a.entries()) out.set(top - d, n);
  return out;
}

GradedDims projective_space_dims(int n) {
  if (n < 0) throw DomainError("projective space of negative dimension");
  GradedDims out;
  for (int k = 0; k <= n; ++k) out.set(2 * k, 1);
  return out;
}

}  // namespace autoeq
