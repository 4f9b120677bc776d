#ifndef PARAPROD_SCALAR_HPP
#define PARAPROD_SCALAR_HPP

#include <complex>

#include <Eigen/Core>

#include "paraprod/exact.hpp"

namespace Eigen {

// Storage-level traits so Eigen dense vectors can hold exact coefficients.
// Only coefficient-wise ring operations are ever used on such vectors.
template <>
struct NumTraits<paraprod::ExactComplex> {
  using Real = paraprod::ExactComplex;
  using NonInteger = paraprod::ExactComplex;
  using Literal = paraprod::ExactComplex;
  using Nested = paraprod::ExactComplex;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static inline Real epsilon() { return paraprod::ExactComplex(0); }
  static inline Real dummy_precision() { return paraprod::ExactComplex(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace paraprod {

using Complex = std::complex<double>;

template <typename Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  static constexpr bool is_exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(long n) { return {static_cast<double>(n), 0.0}; }
  static Complex from_ratio(long num, long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static Complex from_exact(const ExactComplex& v) { return v.to_double(); }
  static bool is_zero(const Complex& v) { return v == Complex{0.0, 0.0}; }
  static Complex conj(const Complex& v) { return std::conj(v); }
  static double abs2(const Complex& v) { return std::norm(v); }
  static Complex to_complex(const Complex& v) { return v; }
};

template <>
struct ScalarTraits<ExactComplex> {
  static constexpr bool is_exact = true;
  static ExactComplex zero() { return ExactComplex(0); }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex from_int(long n) { return ExactComplex(n); }
  static ExactComplex from_ratio(long num, long den) { return ExactComplex::ratio(num, den); }
  static ExactComplex from_exact(const ExactComplex& v) { return v; }
  static bool is_zero(const ExactComplex& v) { return v.is_zero(); }
  static ExactComplex conj(const ExactComplex& v) { return v.conj(); }
  static Rational abs2(const ExactComplex& v) { return v.abs2(); }
  static Complex to_complex(const ExactComplex& v) { return v.to_double(); }
};

}  // namespace paraprod

#endif  // PARAPROD_SCALAR_HPP
