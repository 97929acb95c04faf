#ifndef VXK_SPECIALFN_HPP
#define VXK_SPECIALFN_HPP

#include <complex>
#include <functional>

#include "vxk/graph.hpp"

namespace vxk {

// Exponential integral Ei(x), x != 0.  Principal value for x > 0.
double expint_ei(double x);

// E1(x) = -Ei(-x) for x > 0.
double expint_e1(double x);

// exp(x)*E1(x) for x > 0; safe against underflow of E1 for large x.
double expint_e1_scaled(double x);

// Complex E1 on C cut along (-inf, 0].
std::complex<double> expint_e1_complex(std::complex<double> w);

// exp(w)*E1(w); same domain, no overflow for large Re w.
std::complex<double> expint_e1_scaled_complex(std::complex<double> w);

// Complex Ei with the cut on the positive real axis: Ei(z) = -E1(-z).
// On the cut itself (z real positive) returns the principal value,
// matching expint_ei.  This is the branch for which the vertex term of the
// cylinder kernel is continuous in t > 0 and real as t -> 0+.
std::complex<double> expint_ei_complex(std::complex<double> z);

// Complementary error function and its scaled variant exp(x^2)*erfc(x).
double erfc_real(double x);
double erfcx_real(double x);

// Coefficient c1 of g(t) = c0 + c1 t + c2 t^2 + ... from samples of g on a
// geometric ladder of t in [t_min, t_max] (ratio 2), via finite differences
// of consecutive samples and Richardson extrapolation.  Throws
// AccuracyError when the extrapolation diverges.
double extract_linear_coefficient(const std::function<double(double)>& g,
                                  double t_min, double t_max);

}  // namespace vxk

#endif
