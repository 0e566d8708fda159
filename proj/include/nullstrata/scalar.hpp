#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace nullstrata {

// Exact scalars. Expression templates are off so the types behave as plain
// values inside Eigen kernels.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RVec = VectorX<Rational>;
using RMat = MatrixX<Rational>;
using ZVec = VectorX<Integer>;
using ZMat = MatrixX<Integer>;

// Errors. The CLI maps each family onto a distinct exit code.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

inline Rational make_rational(long num, long den = 1) { return Rational(num, den); }

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return den(q) == 1; }

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& text);

/// Bilinear form (a, b)_gram = a^T gram b.
template <typename Scalar>
Scalar pair(const VectorX<Scalar>& a, const MatrixX<Scalar>& gram, const VectorX<Scalar>& b) {
  return a.dot(gram * b);
}

template <typename Scalar>
bool is_zero(const VectorX<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

/// Strict lexicographic order on coordinates; used to canonicalize multisets.
template <typename Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

template <typename Scalar>
bool equal(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

struct RVecLess {
  bool operator()(const RVec& a, const RVec& b) const { return lex_less(a, b); }
};
struct ZVecLess {
  bool operator()(const ZVec& a, const ZVec& b) const { return lex_less(a, b); }
};

RVec to_rational(const ZVec& v);
RMat to_rational(const ZMat& m);

/// Smallest positive integer multiple direction: the unique primitive integer
/// vector on the ray through v. Requires v != 0.
ZVec primitive_direction(const RVec& v);

Integer gcd_of(const ZVec& v);

std::string vec_key(const RVec& v);
std::vector<std::string> vec_strings(const RVec& v);

}  // namespace nullstrata
