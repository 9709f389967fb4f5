#pragma once

#include "stablepot/error.hpp"
#include "stablepot/geometry.hpp"
#include "stablepot/params.hpp"
#include "stablepot/point.hpp"

#include <cstdint>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

namespace stablepot::quad {

// Non-owning callable reference; keeps nested adaptive loops allocation free.
template <class Sig>
class FuncRef;

template <class R, class... Args>
class FuncRef<R(Args...)> {
public:
    template <class F, class = std::enable_if_t<!std::is_same_v<std::decay_t<F>, FuncRef>>>
    FuncRef(F&& f)  // NOLINT: implicit by design
        : obj_(const_cast<void*>(static_cast<const void*>(&f))),
          call_([](void* o, Args... a) -> R {
              return (*static_cast<std::remove_reference_t<F>*>(o))(std::forward<Args>(a)...);
          }) {}
    R operator()(Args... a) const { return call_(obj_, std::forward<Args>(a)...); }

private:
    void* obj_;
    R (*call_)(void*, Args...);
};

struct QuadResult {
    double value = 0.0;
    double abs_error = 0.0;
    std::int64_t n_evals = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) on [a,b].  Deterministic: the worst
// interval is split first, ties resolved by creation order, and the final
// sum runs left to right.
QuadResult integrate_gk(FuncRef<double(double)> f, double a, double b, double rel_tol,
                        double abs_tol, int max_intervals = 4000);

// As integrate_gk, for integrands with algebraic endpoint behavior
// f ~ (x-a)^{exp_a} near a and f ~ (b-x)^{exp_b} near b (exponents > -1,
// zero = no substitution).  Power substitutions flatten both endpoints.
QuadResult integrate_endpoint_singular(FuncRef<double(double)> f, double a, double b,
                                       double exp_a, double exp_b, double rel_tol,
                                       double abs_tol, int max_intervals = 4000);

// Integral over the unit sphere S^{d-1} (d = 2,3) by doubled equal-weight
// rules; the rules are antipodally symmetric, so odd parts cancel exactly.
// min_points guards against false convergence when the integrand has a
// narrow angular feature: pass at least ~8 points per feature width.
QuadResult integrate_sphere(int d, FuncRef<double(const Point&)> h, double rel_tol,
                            double abs_tol, int min_points = 16);

// Volume integrand with known singular structure: |f| ~ |z-p|^{-singular_exponent}
// near each listed point (worst case; must be < d for integrability) and
// f ~ delta(z)^{boundary_exponent} near the boundary of the region
// (negative exponents mean blow-up; must be > -1).
struct SingularIntegrand {
    std::function<double(const Point&)> f;
    std::vector<Point> singular_points;
    double singular_exponent = 0.0;
    double boundary_exponent = 0.0;
    // Smallest length scale on which f varies away from its singular points
    // (0 = comparable to the region size).  Keeps the angular rules from
    // stepping over localized features.
    double feature_scale = 0.0;
};

// Adaptive integral of g over the region.  Each singular point gets a local
// polar patch under a smooth partition of unity, with the power substitution
// rho = u^{1/(d-s)} that removes the |z-p|^{-s} singularity exactly; the
// remainder is integrated in polar coordinates with a boundary-layer
// substitution.  Throws QuadratureError (partial value + achieved error)
// if the error target cannot be met within the evaluation budget.
QuadResult integrate_singular(const SingularIntegrand& g, const Domain& region,
                              double target_rel_error, double abs_floor = 1e-14,
                              std::int64_t max_evals = 50'000'000);

// Integral of f over the open exterior of the ball.  surface_exponent is the
// algebraic behavior in (|y-c|-r) at the sphere (e.g. -alpha/2 for Poisson
// kernels), decay the power |f| ~ |y|^{-decay} at infinity (decay > d).
QuadResult integrate_exterior(FuncRef<double(const Point&)> f, const Ball& ball,
                              double surface_exponent, double decay, double rel_tol,
                              double abs_floor = 1e-14);

// Smooth compactly supported bump A*exp(1 - 1/(1-|u|^2)), u = (z-c)/R,
// with analytic gradient.  sup|phi| = A, attained at the center.
struct TestFunction {
    Ball support;
    double amplitude = 1.0;

    TestFunction(Ball s, double a = 1.0) : support(std::move(s)), amplitude(a) {}

    double value(const Point& z) const;
    Point gradient(const Point& z) const;
    double laplacian(const Point& z) const;
    double sup_norm() const { return amplitude; }
};

struct FracLaplacianOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double eps_inner = 0.0;  // radius below which the (paired) integral is dropped
};

// Principal-value fractional Laplacian of a test function at x.  The inner
// part pairs y with -y through an antipodally symmetric sphere rule, which
// makes the integrand O(|y|^{2-d-alpha}) and kills the principal value.
// Below a crossover radius the paired difference drowns in rounding noise,
// so that sliver is added analytically from the second-order Taylor term;
// the far part integrates phi directly against the Levy density.
double frac_laplacian(const StableParams& params, const TestFunction& phi, const Point& x,
                      const FracLaplacianOptions& opt = {});

// The fractional Laplacian of a radial bump is itself radial; this tabulates
// it once on [0, rho_max] around the support center and evaluates by local
// cubic interpolation, which turns the nested-quadrature cost of operator
// identities into a one-time setup.
class FracLaplacianProfile {
public:
    FracLaplacianProfile(const StableParams& params, const TestFunction& phi,
                         double rho_max, int n_nodes = 400, double rel_tol = 1e-6);
    double at_radius(double rho) const;
    double operator()(const Point& z) const {
        return at_radius(dist(z, center_));
    }

private:
    Point center_;
    double rho_max_;
    double step_;
    std::vector<double> values_;
};

// Residual of the Green operator identity on the ball: returns
// int_B G_B(x,z) (frac_laplacian phi)(z) dz + phi(x), which should vanish
// for phi supported inside the ball.  The overload taking a prebuilt profile
// is the cheap path for sweeps over many x.
double green_generator_residual(const StableParams& params, const Ball& ball,
                                const TestFunction& phi, const Point& x,
                                double rel_tol = 1e-4);
double green_generator_residual(const StableParams& params, const Ball& ball,
                                const TestFunction& phi, const FracLaplacianProfile& prof,
                                const Point& x, double rel_tol = 1e-4);

}  // namespace stablepot::quad
