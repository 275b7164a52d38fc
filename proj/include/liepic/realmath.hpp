#pragma once

// Precision-generic math shims. The evaluation kernels for characters and the
// Haar density radicand are templated on the real type so that the same code
// path can be instantiated at double precision (production) and, when the
// compiler provides __float128, at quad precision for tight cross-validation
// of the two density routes.

#include <cmath>

#if defined(__GNUC__) && defined(__SIZEOF_FLOAT128__) && !defined(LIEPIC_NO_FLOAT128)
#define LIEPIC_HAVE_FLOAT128 1
#include <quadmath.h>
#endif

namespace liepic::realmath {

inline double r_cos(double x) { return std::cos(x); }
inline double r_sin(double x) { return std::sin(x); }
inline double r_sqrt(double x) { return std::sqrt(x); }
inline double r_abs(double x) { return std::fabs(x); }
inline double r_round(double x) { return std::nearbyint(x); }

inline long double r_cos(long double x) { return cosl(x); }
inline long double r_sin(long double x) { return sinl(x); }
inline long double r_sqrt(long double x) { return sqrtl(x); }
inline long double r_abs(long double x) { return fabsl(x); }
inline long double r_round(long double x) { return nearbyintl(x); }

#if LIEPIC_HAVE_FLOAT128
inline __float128 r_cos(__float128 x) { return cosq(x); }
inline __float128 r_sin(__float128 x) { return sinq(x); }
inline __float128 r_sqrt(__float128 x) { return sqrtq(x); }
inline __float128 r_abs(__float128 x) { return fabsq(x); }
inline __float128 r_round(__float128 x) { return nearbyintq(x); }
#endif

template <class Real>
inline Real pi() {
  return Real(3.14159265358979323846264338327950288L);
}

#if LIEPIC_HAVE_FLOAT128
template <>
inline __float128 pi<__float128>() {
  return 4 * atanq(__float128(1));
}
#endif

}  // namespace liepic::realmath
