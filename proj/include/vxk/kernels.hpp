#ifndef VXK_KERNELS_HPP
#define VXK_KERNELS_HPP

#include <complex>
#include <optional>
#include <vector>

#include "vxk/transform.hpp"
#include "vxk/graph.hpp"

namespace vxk {

enum class ProblemKind { Wave, Heat, Quantum, Cylinder };

// Free kernels on the whole line.  Wave is distributional and has no
// pointwise evaluation (see wave_kernel_slice).
double free_kernel_heat(double t, double z);
double free_kernel_cylinder(double t, double z);
std::complex<double> free_kernel_quantum(double t, double z);
std::complex<double> free_kernel(ProblemKind kind, double t, double z);

// Star-graph Green functions built from the free kernels:
//   G_S^{jl}(t,x,y) = delta^{jl} G(t,|x-y|) + (2/N - delta^{jl}) G(t,x+y)
//                     - (2a/N^2) int_x^inf exp(-a(s-x)/N) G(t,s+y) ds.
// Heat and Cylinder use closed forms for the vertex term (erfcx and the
// exponential integral); Quantum evaluates it by quadrature along a rotated
// ray (accuracy ~1e-6).  Dirichlet configs use the image form
// delta^{jl} [G(t,|x-y|) - G(t,x+y)].
double star_kernel_heat(const StarGraphConfig& g, double t, int j, int l,
                        double x, double y);
double cylinder_kernel(const StarGraphConfig& g, double t, int j, int l,
                       double x, double y);
std::complex<double> star_kernel_quantum(const StarGraphConfig& g, double t,
                                         int j, int l, double x, double y);
std::complex<double> star_kernel(ProblemKind kind, const StarGraphConfig& g,
                                 double t, int j, int l, double x, double y);

// Same kernel with the vertex term evaluated by direct quadrature of the
// defining integral.  Independent route kept for cross-validation.
double star_kernel_quadrature(ProblemKind kind, const StarGraphConfig& g,
                              double t, int j, int l, double x, double y,
                              double tol);

// Wave kernel at fixed (t,x,j,l) as a distribution in y: weighted Dirac
// terms plus a smooth exponential tail on [0, t-x].
struct WaveDiracTerm {
    double y_location;
    double weight;
};

struct WaveTail {
    double upper;      // t - x
    double amplitude;  // -alpha/N^2
    double rate;       // alpha/N
    // kernel value at y in [0, upper]: amplitude * exp(-rate*(t-y-x))
};

struct WaveKernelSlice {
    double t = 0.0;
    double x = 0.0;
    int j = 1;
    int l = 1;
    std::vector<WaveDiracTerm> dirac_terms;
    std::optional<WaveTail> tail;
};

WaveKernelSlice wave_kernel_slice(const StarGraphConfig& g, double t, int j,
                                  int l, double x);

// u_j(t,x) = sum_l int G_S^{jl}(t,x,y) f_l(y) dy for the wave problem,
// evaluated from the structural slice.
double apply_wave_kernel(const StarGraphConfig& g, double t, int j, double x,
                         const EdgeVectorFunction& f, double tol);

// Same contraction for the smooth kernels (Heat, Cylinder).
double apply_kernel(ProblemKind kind, const StarGraphConfig& g, double t,
                    int j, double x, const EdgeVectorFunction& f, double tol);

}  // namespace vxk

#endif
