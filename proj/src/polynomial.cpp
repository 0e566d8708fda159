#include "nullstrata/polynomial.hpp"

#include <sstream>

namespace nullstrata {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(int degree, const Integer& c) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, Integer(0));
  v.back() = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::q_integer(int d) {
  return IntPolynomial(std::vector<Integer>(static_cast<std::size_t>(d), Integer(1)));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(d)];
}

Integer IntPolynomial::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (coeffs_.empty() || o.coeffs_.empty()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw InternalError("division by the zero polynomial");
  const Integer lead = divisor.leading();
  if (lead != 1 && lead != -1) throw InternalError("divide_exact needs a unit leading coefficient");
  if (degree() < divisor.degree()) {
    if (is_zero()) return IntPolynomial{};
    return std::nullopt;
  }
  std::vector<Integer> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<Integer> quot(static_cast<std::size_t>(degree() - dd + 1), Integer(0));
  for (int d = degree(); d >= dd; --d) {
    const Integer c = rem[static_cast<std::size_t>(d)] * lead;  // lead = +-1 is its own inverse
    quot[static_cast<std::size_t>(d - dd)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(d - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

IntPolynomial IntPolynomial::shifted(int by) const {
  if (is_zero() || by == 0) return *this;
  std::vector<Integer> v(static_cast<std::size_t>(by), Integer(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Integer c = coeffs_[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (c != 1 || d == 0) os << c;
    if (d >= 1) os << 't';
    if (d >= 2) os << '^' << d;
  }
  return os.str();
}

}  // namespace nullstrata
