#include "nullstrata/scalar.hpp"

#include <sstream>

namespace nullstrata {

std::string to_string(const Rational& q) { return q.str(); }
std::string to_string(const Integer& z) { return z.str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer n(text.substr(0, slash));
    const Integer d(text.substr(slash + 1));
    if (d == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(n, d);
  } catch (const std::runtime_error&) {
    throw InputError("not a rational number: '" + text + "'");
  }
}

RVec to_rational(const ZVec& v) {
  RVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

RMat to_rational(const ZMat& m) {
  RMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Integer gcd_of(const ZVec& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v[i]);
  return g;
}

ZVec primitive_direction(const RVec& v) {
  Integer l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) l = boost::multiprecision::lcm(l, den(v[i]));
  ZVec z(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) z[i] = num(v[i] * Rational(l));
  const Integer g = gcd_of(z);
  if (g == 0) throw InternalError("primitive_direction of the zero vector");
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] /= g;
  return z;
}

std::string vec_key(const RVec& v) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].str();
  }
  return os.str();
}

std::vector<std::string> vec_strings(const RVec& v) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i].str());
  return out;
}

}  // namespace nullstrata
