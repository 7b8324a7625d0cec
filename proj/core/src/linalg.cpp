#include "autoeq/linalg.hpp"

#include <sstream>

namespace autoeq {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

std::vector<std::size_t> reduce_to_rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    const Rational inv = 1 / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return reduce_to_rref(m).size(); }

std::vector<RatVector> kernel_basis(RatMatrix m) {
  const auto pivots = reduce_to_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

bool is_rational_multiple(const RatVector& v, const RatVector& w) {
  if (v.size() != w.size()) throw DomainError("is_rational_multiple: length mismatch");
  std::size_t anchor = w.size();
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) {
      anchor = i;
      break;
    }
  if (anchor == w.size()) {
    for (const auto& x : v)
      if (x != 0) return false;
    return true;
  }
  const Rational lambda = v[anchor] / w[anchor];
  for (std::size_t i = 0; i < w.size(); ++i)
    if (v[i] != lambda * w[i]) return false;
  return true;
}

namespace {
template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ")";
  return os.str();
}
}  // namespace

std::string to_string(const IntVector& v) { return join(v); }
std::string to_string(const RatVector& v) { return join(v); }

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "; " : "") << join(m.row(r));
  os << "]";
  return os.str();
}

}  // namespace autoeq
