#include "stablepot/kernels.hpp"

#include "stablepot/quad.hpp"
#include "stablepot/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace stablepot::kernels {

namespace {
constexpr double kPi = std::numbers::pi;
}

double riesz_constant(const StableParams& params, double gamma) {
    const int d = params.d();
    if (gamma == 0.0 || std::fabs(gamma) >= d)
        throw ParameterError("riesz_constant: need 0 < |gamma| < d, got gamma = " +
                             std::to_string(gamma));
    return std::tgamma(0.5 * (d - gamma)) /
           (std::pow(2.0, gamma) * std::pow(kPi, 0.5 * d) * std::fabs(std::tgamma(0.5 * gamma)));
}

double ball_green_constant(const StableParams& params) {
    const int d = params.d();
    const double a = params.alpha();
    const double g = std::tgamma(0.5 * a);
    return std::tgamma(0.5 * d) / (std::pow(2.0, a) * std::pow(kPi, 0.5 * d) * g * g);
}

double ball_poisson_constant(const StableParams& params) {
    const int d = params.d();
    const double a = params.alpha();
    return std::tgamma(0.5 * d) * std::pow(kPi, -1.0 - 0.5 * d) * std::sin(0.5 * kPi * a);
}

double levy_density(const StableParams& params, const Point& y) {
    const double r = y.norm();
    if (r == 0.0) throw SingularityError("levy_density: y = 0");
    return riesz_constant(params, -params.alpha()) * std::pow(r, -params.d() - params.alpha());
}

double stable_density_p1(const StableParams& params, double rho, double* abs_error) {
    const int d = params.d();
    const double alpha = params.alpha();
    // e^{-s^alpha} s^{d/2} below 1e-16 past this point
    const double s_max = std::pow(40.0 + 0.5 * d * 4.0, 1.0 / alpha);
    const double nu = 0.5 * d - 1.0;

    if (rho < 1e-8) {
        auto f0 = [&](double s) { return std::exp(-std::pow(s, alpha)) * std::pow(s, d - 1.0); };
        quad::QuadResult q = quad::integrate_gk(f0, 0.0, s_max, 1e-12, 1e-16, 2000);
        const double val =
            std::pow(2.0 * kPi, -d) * special::unit_sphere_area(d) * q.value;
        if (abs_error) *abs_error = std::pow(2.0 * kPi, -d) * special::unit_sphere_area(d) * q.abs_error;
        return val;
    }

    auto f = [&](double s) {
        return std::exp(-std::pow(s, alpha)) * std::pow(s, 0.5 * d) *
               std::cyl_bessel_j(nu, s * rho);
    };
    // split per half-oscillation of the Bessel factor so the adaptive pass
    // starts from resolved pieces
    const int n_seg = std::max(1, std::min(256, static_cast<int>(rho * s_max / kPi) + 1));
    double total = 0.0, err = 0.0;
    for (int k = 0; k < n_seg; ++k) {
        const double a = s_max * k / n_seg;
        const double b = s_max * (k + 1) / n_seg;
        quad::QuadResult q = quad::integrate_gk(f, a, b, 1e-11, 1e-15, 2000);
        total += q.value;
        err += q.abs_error;
    }
    const double pref = std::pow(2.0 * kPi, -0.5 * d) * std::pow(rho, 1.0 - 0.5 * d);
    if (abs_error) *abs_error = pref * err + 1e-16;
    return pref * total;
}

KernelValue stable_density(const StableParams& params, double t, const Point& x) {
    if (!(t > 0.0)) throw ParameterError("stable_density: t must be > 0");
    const double scale = std::pow(t, -1.0 / params.alpha());
    double err = 0.0;
    const double p1 = stable_density_p1(params, scale * x.norm(), &err);
    const double factor = std::pow(t, -params.d() / params.alpha());
    KernelValue out{factor * p1, factor * err};
    if (out.abs_error > std::max(1e-10, 1e-5 * std::fabs(out.value)))
        throw QuadratureError("stable_density: inversion error target missed at |x|=" +
                                  std::to_string(x.norm()) + ", t=" + std::to_string(t),
                              out.value, out.abs_error);
    return out;
}

KernelValue riesz_kernel(const StableParams& params, const Point& x, const Point& y) {
    const double r = dist(x, y);
    if (r == 0.0) return KernelValue::infinite();
    return KernelValue::exact(riesz_constant(params, params.alpha()) *
                              std::pow(r, params.alpha() - params.d()));
}

RieszTimeIntegral riesz_time_integral(const StableParams& params, const Point& x, double T,
                                      double band_hi, double rel_tol) {
    const int d = params.d();
    const double alpha = params.alpha();
    const double r = x.norm();
    if (!(r > 0.0)) throw SingularityError("riesz_time_integral: x = 0");
    if (!(T > 0.0)) throw ParameterError("riesz_time_integral: T must be > 0");

    RieszTimeIntegral out;
    out.tail_bound = band_hi * (alpha / (d - alpha)) * std::pow(T, -(d - alpha) / alpha);

    // drop [0,t_min] where p_t(x) <= band_hi * t |x|^{-d-alpha}
    const double scale = riesz_constant(params, alpha) * std::pow(r, alpha - d);
    const double t_min = std::min(
        0.5 * T, std::sqrt(2e-5 * scale * std::pow(r, d + alpha) / band_hi));
    out.small_t_bound = 0.5 * band_hi * t_min * t_min * std::pow(r, -d - alpha);

    // substitute u = t^{-1/alpha} |x|:  int p_t(x) dt = alpha |x|^{alpha-d}
    // int u^{d-alpha-1} p_1(u theta) du, so every p_1 evaluation stays at a
    // moderate argument
    const double u_lo = r * std::pow(T, -1.0 / alpha);
    const double u_hi = r * std::pow(t_min, -1.0 / alpha);
    auto f = [&](double u) {
        return std::pow(u, d - alpha - 1.0) * stable_density_p1(params, u, nullptr);
    };
    quad::QuadResult q = quad::integrate_gk(f, u_lo, u_hi, rel_tol, 1e-14, 2000);
    out.value = alpha * std::pow(r, alpha - d) * q.value;
    out.abs_error = alpha * std::pow(r, alpha - d) * q.abs_error;
    return out;
}

KernelValue ball_green(const StableParams& params, const Ball& ball, const Point& x,
                       const Point& v) {
    const double r = ball.radius;
    const double px = (r - dist(x, ball.center)) * (r + dist(x, ball.center));
    const double pv = (r - dist(v, ball.center)) * (r + dist(v, ball.center));
    if (px <= 0.0 || pv <= 0.0) return KernelValue::exact(0.0);
    const double q = (x - v).norm2();
    if (q == 0.0) return KernelValue::infinite();
    const double d = params.d();
    const double alpha = params.alpha();
    // dimensionless w = (r^2-|x-c|^2)(r^2-|v-c|^2) / (r^2 |x-v|^2); the r^2
    // in the denominator is what makes G_{B(0,r)} = r^{a-d} G_{B(0,1)}(./r)
    const double P = px * pv / (r * r);
    const double z = P / (P + q);  // = w/(1+w) with w = P/q
    const double inner = special::inc_beta(0.5 * alpha, 0.5 * (d - alpha), z);
    const double val =
        ball_green_constant(params) * std::pow(q, 0.5 * (alpha - d)) * inner;
    return KernelValue::exact(val);
}

Point ball_green_gradient(const StableParams& params, const Ball& ball, const Point& x,
                          const Point& v) {
    const double r = ball.radius;
    const double px = (r - dist(x, ball.center)) * (r + dist(x, ball.center));
    const double pv = (r - dist(v, ball.center)) * (r + dist(v, ball.center));
    if ((x - v).norm2() == 0.0)
        throw SingularityError("ball_green_gradient: x = v");
    if (px <= 0.0 || pv <= 0.0) return Point(x.dim());  // Green vanishes on a neighborhood

    const double d = params.d();
    const double alpha = params.alpha();
    const Point xv = x - v;
    const double q = xv.norm2();
    const double dist_xv = std::sqrt(q);
    const double w = px * pv / (r * r * q);
    const double inner = special::inc_beta(0.5 * alpha, 0.5 * (d - alpha), w / (1.0 + w));
    const double dinner = std::pow(w, 0.5 * alpha - 1.0) * std::pow(1.0 + w, -0.5 * d);

    // grad w = -2(x-c) pv/(r^2 q) - 2w (x-v)/q
    const Point grad_w =
        (-2.0 * pv / (r * r * q)) * (x - ball.center) + (-2.0 * w / q) * xv;
    const double B = ball_green_constant(params);
    const Point term1 =
        (B * (alpha - d) * std::pow(dist_xv, alpha - d - 2.0) * inner) * xv;
    const Point term2 = (B * std::pow(dist_xv, alpha - d) * dinner) * grad_w;
    return term1 + term2;
}

KernelValue ball_poisson(const StableParams& params, const Ball& ball, const Point& x,
                         const Point& y) {
    const double r = ball.radius;
    const double xi = dist(x, ball.center);
    const double eta = dist(y, ball.center);
    if (!(xi < r)) throw DomainError("ball_poisson: x must be strictly inside the ball");
    if (!(eta > r)) throw DomainError("ball_poisson: y must be outside the closed ball");
    const double alpha = params.alpha();
    const int d = params.d();
    // bracket in log space; (eta - r) may be ~1e-12 r near the boundary
    const double log_num = std::log(r - xi) + std::log(r + xi);
    const double log_den = std::log(eta - r) + std::log(eta + r);
    const double log_val = std::log(ball_poisson_constant(params)) +
                           0.5 * alpha * (log_num - log_den) - d * std::log(dist(x, y));
    return KernelValue::exact(std::exp(log_val));
}

double green_envelope(const StableParams& params, const Domain& domain, const Point& x,
                      const Point& y) {
    const double dx = domain.delta(x);
    const double dy = domain.delta(y);
    if (dx <= 0.0 || dy <= 0.0) return 0.0;
    const double rho = dist(x, y);
    if (rho == 0.0) return std::numeric_limits<double>::infinity();
    const double alpha = params.alpha();
    const double top = std::max(dx, std::max(rho, dy));
    return std::pow(rho, alpha - params.d()) * std::pow(dx * dy, 0.5 * alpha) *
           std::pow(top, -alpha);
}

double expected_exit_time(const StableParams& params, const Ball& ball, const Point& x,
                          double rel_tol) {
    if (!ball.contains(x)) return 0.0;
    quad::SingularIntegrand g;
    g.f = [&](const Point& z) { return ball_green(params, ball, x, z).value; };
    g.singular_points = {x};
    g.singular_exponent = params.d() - params.alpha();
    g.boundary_exponent = 0.5 * params.alpha();
    const double scale = std::pow(ball.radius, params.alpha());
    quad::QuadResult q =
        quad::integrate_singular(g, Domain(ball), rel_tol, 1e-7 * rel_tol * scale + 1e-14);
    return q.value;
}

ExteriorIntegral poisson_normalization(const StableParams& params, const Ball& ball,
                                       const Point& x, double rel_tol) {
    auto f = [&](const Point& y) { return ball_poisson(params, ball, x, y).value; };
    quad::QuadResult q = quad::integrate_exterior(f, ball, -0.5 * params.alpha(),
                                                  params.d() + params.alpha(), rel_tol);
    return {q.value, q.abs_error};
}

double green_formula_residual(const StableParams& params, const Ball& ball, const Point& x,
                              const Point& y, double rel_tol) {
    const double a_const = riesz_constant(params, params.alpha());
    const double ad = params.alpha() - params.d();
    auto f = [&](const Point& z) {
        return a_const * std::pow(dist(y, z), ad) * ball_poisson(params, ball, x, z).value;
    };
    quad::QuadResult q = quad::integrate_exterior(f, ball, -0.5 * params.alpha(),
                                                  2.0 * params.d(), rel_tol);
    const double lhs = ball_green(params, ball, x, y).value + q.value;
    const double rhs = a_const * std::pow(dist(x, y), ad);
    return (lhs - rhs) / rhs;
}

}  // namespace stablepot::kernels
