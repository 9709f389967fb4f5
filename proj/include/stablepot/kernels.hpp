#pragma once

#include "stablepot/geometry.hpp"
#include "stablepot/params.hpp"
#include "stablepot/point.hpp"

#include <limits>

namespace stablepot::kernels {

// Evaluated kernel value.  The diagonal of Green/Riesz kernels is encoded as
// +infinity (never NaN) so ratio tests downstream can detect it explicitly.
struct KernelValue {
    double value = 0.0;
    double abs_error = 0.0;

    bool is_infinite() const { return std::isinf(value); }
    static KernelValue infinite() {
        return {std::numeric_limits<double>::infinity(), 0.0};
    }
    static KernelValue exact(double v) { return {v, 0.0}; }
};

// Riesz-type normalization constant A_{d,gamma}; gamma in (-d,d) \ {0}.
double riesz_constant(const StableParams& params, double gamma);

// Constant in the closed-form ball Green function.
double ball_green_constant(const StableParams& params);

// Constant in the closed-form ball Poisson kernel.
double ball_poisson_constant(const StableParams& params);

// Levy density A_{d,-alpha}|y|^{-d-alpha}; y = 0 is a non-removable
// singularity.
double levy_density(const StableParams& params, const Point& y);

// Radial profile p_1 at radius rho, by adaptive quadrature of the radial
// Fourier inversion of exp(-|xi|^alpha).
double stable_density_p1(const StableParams& params, double rho, double* abs_error = nullptr);

// Transition density p_t(x): computes p_1 and rescales.
KernelValue stable_density(const StableParams& params, double t, const Point& x);

// Whole-space Riesz kernel A_{d,alpha}|x-y|^{alpha-d}; +infinity at x = y.
KernelValue riesz_kernel(const StableParams& params, const Point& x, const Point& y);

// Truncated time integral int_0^T p_t(x) dt together with the tail bound
// C * int_T^inf t^{-d/alpha} dt and a bound on the dropped t -> 0 sliver.
// band_hi is the upper comparability constant of p_t(x) against
// t^{-d/alpha} ^ t|x|^{-d-alpha}.
struct RieszTimeIntegral {
    double value = 0.0;
    double abs_error = 0.0;
    double tail_bound = 0.0;
    double small_t_bound = 0.0;
};
RieszTimeIntegral riesz_time_integral(const StableParams& params, const Point& x, double T,
                                      double band_hi, double rel_tol = 1e-6);

// Green function of the ball, in closed form via an incomplete-beta
// reduction of the inner integral.  Zero if x or v is outside the open
// ball; +infinity at x = v inside.
KernelValue ball_green(const StableParams& params, const Ball& ball, const Point& x,
                       const Point& v);

// Analytic gradient (in x) of the ball Green function.
Point ball_green_gradient(const StableParams& params, const Ball& ball, const Point& x,
                          const Point& v);

// Poisson kernel of the ball; x strictly inside, y strictly outside the
// closed ball.  The bracket is evaluated in log space so near-boundary y
// produce large finite values rather than overflow.
KernelValue ball_poisson(const StableParams& params, const Ball& ball, const Point& x,
                         const Point& y);

// Two-sided comparison envelope for Green functions of C^{1,1} sets:
// |x-y|^{alpha-d} delta(x)^{a/2} delta(y)^{a/2} / (delta(x) v |x-y| v delta(y))^alpha.
double green_envelope(const StableParams& params, const Domain& domain, const Point& x,
                      const Point& y);

// Expected exit time int_B G_B(x,y) dy by singular quadrature; 0 outside.
double expected_exit_time(const StableParams& params, const Ball& ball, const Point& x,
                          double rel_tol = 1e-7);

// int_{|y-c|>r} P_B(x,y) dy; equals 1 for x inside (exit law has full mass
// on the open exterior).  Returns value and quadrature error estimate.
struct ExteriorIntegral {
    double value = 0.0;
    double abs_error = 0.0;
};
ExteriorIntegral poisson_normalization(const StableParams& params, const Ball& ball,
                                       const Point& x, double rel_tol = 1e-7);

// Relative residual of the Green formula on the ball:
// [G(x,y) + int_{B^c} A|y-z|^{alpha-d} P(x,z) dz - A|x-y|^{alpha-d}] / A|x-y|^{alpha-d}.
double green_formula_residual(const StableParams& params, const Ball& ball, const Point& x,
                              const Point& y, double rel_tol = 1e-6);

}  // namespace stablepot::kernels
