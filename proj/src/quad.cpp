#include "stablepot/quad.hpp"

#include "stablepot/kernels.hpp"
#include "stablepot/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace stablepot::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// G7,K15 nodes and weights (positive half, node 7 is the origin).
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

struct Interval {
    double a, b, value, error;
};

Interval gk15(FuncRef<double(double)> f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kXgk[i]);
        fv[14 - i] = f(c + h * kXgk[i]);
    }
    fv[7] = f(c);
    double resk = 0.0, resg = 0.0, resabs = 0.0;
    for (int i = 0; i < 7; ++i) {
        resk += kWgk[i] * (fv[i] + fv[14 - i]);
        resabs += kWgk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    }
    resk += kWgk[7] * fv[7];
    resabs += kWgk[7] * std::fabs(fv[7]);
    for (int i = 0; i < 3; ++i) resg += kWg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    resg += kWg[3] * fv[7];

    const double mean = resk * 0.5;
    double resasc = kWgk[7] * std::fabs(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += kWgk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));

    double err = std::fabs(resk - resg) * h;
    resasc *= h;
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round = 50.0 * std::numeric_limits<double>::epsilon() * resabs * h;
    err = std::max(err, round);
    return {a, b, resk * h, err};
}

double sum_sorted(std::vector<Interval>& xs, double Interval::*field) {
    std::sort(xs.begin(), xs.end(),
              [](const Interval& l, const Interval& r) { return l.a < r.a; });
    double s = 0.0;
    for (const auto& x : xs) s += x.*field;
    return s;
}

// Quintic smoothstep cutoff: 1 on [0,1/2], 0 on [1,inf), C^2 in between.
double cutoff(double t) {
    if (t <= 0.5) return 1.0;
    if (t >= 1.0) return 0.0;
    const double u = 2.0 * (t - 0.5);
    return 1.0 - u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

Point sphere_point2(double theta) { return Point{std::cos(theta), std::sin(theta)}; }

Point sphere_point3(double cz, double phi) {
    const double s = std::sqrt(std::max(0.0, 1.0 - cz * cz));
    return Point{s * std::cos(phi), s * std::sin(phi), cz};
}

}  // namespace

QuadResult integrate_gk(FuncRef<double(double)> f, double a, double b, double rel_tol,
                        double abs_tol, int max_intervals) {
    QuadResult out;
    if (a == b) return out;
    std::vector<Interval> ivs;
    ivs.reserve(64);
    ivs.push_back(gk15(f, a, b));
    out.n_evals = 15;
    double total_val = ivs[0].value, total_err = ivs[0].error;
    while (static_cast<int>(ivs.size()) < max_intervals) {
        if (total_err <= std::max(abs_tol, rel_tol * std::fabs(total_val))) break;
        size_t worst = 0;
        for (size_t i = 1; i < ivs.size(); ++i)
            if (ivs[i].error > ivs[worst].error) worst = i;
        const Interval w = ivs[worst];
        const double m = 0.5 * (w.a + w.b);
        if (m <= w.a || m >= w.b) break;  // interval at rounding resolution
        const Interval l = gk15(f, w.a, m);
        const Interval r = gk15(f, m, w.b);
        out.n_evals += 30;
        ivs[worst] = l;
        ivs.push_back(r);
        total_val += l.value + r.value - w.value;
        total_err += l.error + r.error - w.error;
    }
    out.value = sum_sorted(ivs, &Interval::value);
    double err = 0.0;
    for (const auto& iv : ivs) err += iv.error;
    out.abs_error = err;
    return out;
}

QuadResult integrate_endpoint_singular(FuncRef<double(double)> f, double a, double b,
                                       double exp_a, double exp_b, double rel_tol,
                                       double abs_tol, int max_intervals) {
    if (exp_a <= -1.0 || exp_b <= -1.0)
        throw ParameterError("integrate_endpoint_singular: endpoint exponent must be > -1");
    if (exp_a == 0.0 && exp_b == 0.0)
        return integrate_gk(f, a, b, rel_tol, abs_tol, max_intervals);
    if (exp_a != 0.0 && exp_b != 0.0) {
        const double m = 0.5 * (a + b);
        QuadResult left = integrate_endpoint_singular(f, a, m, exp_a, 0.0, rel_tol,
                                                      0.5 * abs_tol, max_intervals);
        QuadResult right = integrate_endpoint_singular(f, m, b, 0.0, exp_b, rel_tol,
                                                       0.5 * abs_tol, max_intervals);
        return {left.value + right.value, left.abs_error + right.abs_error,
                left.n_evals + right.n_evals};
    }
    // one singular endpoint: map x = a + u^q (resp. x = b - u^q)
    const bool at_a = exp_a != 0.0;
    const double e = at_a ? exp_a : exp_b;
    const double q = 1.0 / (1.0 + e);
    const double len = b - a;
    const double upper = std::pow(len, 1.0 / q);
    auto g = [&](double u) {
        const double hq = std::pow(u, q);
        const double x = at_a ? a + hq : b - hq;
        return f(x) * q * hq / u;  // q*u^{q-1}
    };
    QuadResult r = integrate_gk(g, 0.0, upper, rel_tol, abs_tol, max_intervals);
    return r;
}

QuadResult integrate_sphere(int d, FuncRef<double(const Point&)> h, double rel_tol,
                            double abs_tol, int min_points) {
    QuadResult out;
    if (d == 2) {
        int n0 = 16;
        while (n0 < min_points && n0 < 4096) n0 *= 2;
        double prev = 0.0;
        for (int n = n0; n <= 8192; n *= 2) {
            double s = 0.0;
            for (int i = 0; i < n; ++i) s += h(sphere_point2(2.0 * kPi * (i + 0.5) / n));
            const double cur = s * 2.0 * kPi / n;
            out.n_evals += n;
            if (n > n0) {
                out.value = cur;
                out.abs_error = std::fabs(cur - prev);
                if (out.abs_error <= std::max(abs_tol, rel_tol * std::fabs(cur))) return out;
            }
            prev = cur;
        }
        return out;
    }
    if (d == 3) {
        int m0 = 6;
        while (2 * m0 < min_points && m0 < 256) m0 *= 2;
        double prev = 0.0;
        for (int m = m0; m <= 512; m *= 2) {
            const auto& gl = special::gauss_legendre(m);
            const int nphi = 2 * m;
            double s = 0.0;
            for (int i = 0; i < m; ++i) {
                double si = 0.0;
                for (int j = 0; j < nphi; ++j)
                    si += h(sphere_point3(gl.nodes[i], 2.0 * kPi * (j + 0.5) / nphi));
                s += gl.weights[i] * si * 2.0 * kPi / nphi;
            }
            out.n_evals += static_cast<std::int64_t>(m) * nphi;
            if (m > m0) {
                out.value = s;
                out.abs_error = std::fabs(s - prev);
                if (out.abs_error <= std::max(abs_tol, rel_tol * std::fabs(s))) return out;
            }
            prev = s;
        }
        return out;
    }
    throw ParameterError("integrate_sphere: implemented for d = 2, 3 only");
}

namespace {

// Number of angular points needed so that a feature of size w seen from
// distance ell at sphere radius rho gets ~10 samples.
int angular_resolution(double rho, double feature_size, double ell) {
    if (feature_size <= 0.0 || rho <= 0.0) return 16;
    const double reach = std::max(ell, rho);
    const double half_angle = std::asin(std::min(1.0, feature_size / reach));
    if (half_angle <= 0.0) return 16;
    const int n = static_cast<int>(10.0 * kPi / half_angle) + 1;
    return std::clamp(n, 16, 4096);
}

// State shared by the patch/remainder pieces of integrate_singular.
struct VolumeIntegration {
    const SingularIntegrand& g;
    const Domain& region;
    int d;
    double rel;
    double abs;
    std::int64_t max_evals;
    std::int64_t evals = 0;

    std::vector<Point> patch_centers;
    std::vector<double> patch_radii;

    void check_budget(double partial) const {
        if (evals > max_evals)
            throw QuadratureError("integrate_singular: evaluation budget exhausted", partial,
                                  std::numeric_limits<double>::infinity());
    }

    double masked(const Point& z) const {
        double m = 1.0;
        for (size_t i = 0; i < patch_centers.size(); ++i)
            m *= 1.0 - cutoff(dist(z, patch_centers[i]) / patch_radii[i]);
        return m == 0.0 ? 0.0 : m * g.f(z);
    }

    double capped_sphere_err = 0.0;  // worst error among non-converged spheres

    QuadResult sphere_avg(const Point& center, double rho, int min_n,
                          FuncRef<double(const Point&)> fn) {
        auto h = [&](const Point& th) { return fn(center + rho * th); };
        QuadResult r = integrate_sphere(d, h, 0.125 * rel, 1e-30, min_n);
        evals += r.n_evals;
        if (r.abs_error > std::max(1e-30, 0.125 * rel * std::fabs(r.value)))
            capped_sphere_err = std::max(capped_sphere_err, r.abs_error);
        return r;
    }

    // Angular resolution needed on the sphere |z - center| = rho: resolve
    // the partition-of-unity holes and any declared feature scale.
    int shell_min_n(const Point& center, double rho) const {
        int n = 16;
        for (size_t i = 0; i < patch_centers.size(); ++i) {
            const double ell = dist(center, patch_centers[i]);
            const double R = patch_radii[i];
            if (rho > ell - R && rho < ell + R)
                n = std::max(n, angular_resolution(rho, R, ell));
        }
        if (g.feature_scale > 0.0)
            n = std::max(n, angular_resolution(rho, g.feature_scale, rho));
        return n;
    }

    // Integral over the patch ball B(p,R) of f * cutoff(|z-p|/R), in polar
    // coordinates around p with rho = u^{1/(d-s)}.
    QuadResult patch(const Point& p, double R) {
        const double s = g.singular_exponent;
        const double q = 1.0 / (d - s);
        const double upper = std::pow(R, d - s);
        capped_sphere_err = 0.0;
        auto radial = [&](double u) {
            const double rho = std::pow(u, q);
            auto fn = [&](const Point& z) { return g.f(z) * cutoff(dist(z, p) / R); };
            QuadResult sr = sphere_avg(p, rho, 16, fn);
            return std::pow(rho, d - 1) * sr.value * q * rho / u;
        };
        QuadResult r = integrate_gk(radial, 0.0, upper, rel, 0.25 * abs, 2000);
        r.abs_error += 0.25 * rel * std::fabs(r.value) +
                       capped_sphere_err * std::pow(R, d) / d;
        r.n_evals = 0;  // evals tracked globally
        check_budget(r.value);
        return r;
    }

    // Remainder over one radial shell [r_lo, r_hi] around center, with
    // algebraic boundary behavior exp_lo / exp_hi at the two ends.  The
    // radial axis is split where spheres start/stop meeting the patch holes
    // so the adaptive pass cannot step over them.
    QuadResult shell(const Point& center, double r_lo, double r_hi, double exp_lo,
                     double exp_hi) {
        capped_sphere_err = 0.0;
        auto radial = [&](double rho) {
            auto fn = [&](const Point& z) { return masked(z); };
            QuadResult sr = sphere_avg(center, rho, shell_min_n(center, rho), fn);
            return std::pow(rho, d - 1) * sr.value;
        };

        std::vector<double> cuts{r_lo, r_hi};
        for (size_t i = 0; i < patch_centers.size(); ++i) {
            const double ell = dist(center, patch_centers[i]);
            for (double c : {ell - patch_radii[i], ell + patch_radii[i]})
                if (c > r_lo * (1.0 + 1e-12) && c < r_hi * (1.0 - 1e-12)) cuts.push_back(c);
        }
        std::sort(cuts.begin(), cuts.end());

        QuadResult total;
        const double seg_abs = 0.25 * abs / static_cast<double>(cuts.size() - 1);
        for (size_t k = 0; k + 1 < cuts.size(); ++k) {
            const double lo = cuts[k], hi = cuts[k + 1];
            const double e_lo = (k == 0) ? exp_lo : 0.0;
            const double e_hi = (k + 2 == cuts.size()) ? exp_hi : 0.0;
            QuadResult r =
                integrate_endpoint_singular(radial, lo, hi, e_lo, e_hi, rel, seg_abs, 2000);
            total.value += r.value;
            total.abs_error += r.abs_error;
        }
        total.abs_error += 0.25 * rel * std::fabs(total.value) +
                           capped_sphere_err * (std::pow(r_hi, d) - std::pow(r_lo, d)) / d;
        check_budget(total.value);
        return total;
    }
};

}  // namespace

QuadResult integrate_singular(const SingularIntegrand& g, const Domain& region,
                              double target_rel_error, double abs_floor,
                              std::int64_t max_evals) {
    const int d = region.dim();
    if (g.singular_exponent >= d)
        throw ParameterError("integrate_singular: singular exponent >= d, not integrable");
    if (g.boundary_exponent <= -1.0)
        throw ParameterError("integrate_singular: boundary exponent <= -1, not integrable");

    VolumeIntegration vi{g, region, d, target_rel_error, abs_floor, max_evals};

    // local patches around interior singular points
    const double geom_tol = 1e-13 * region.diameter();
    for (size_t i = 0; i < g.singular_points.size(); ++i) {
        const Point& p = g.singular_points[i];
        const double del = region.delta(p);
        if (del <= geom_tol) continue;  // boundary layer picks it up
        double R = 0.5 * del;
        for (size_t j = 0; j < g.singular_points.size(); ++j)
            if (j != i) R = std::min(R, 0.25 * dist(p, g.singular_points[j]));
        if (R <= geom_tol) continue;
        vi.patch_centers.push_back(p);
        vi.patch_radii.push_back(R);
    }

    QuadResult total;
    for (size_t i = 0; i < vi.patch_centers.size(); ++i) {
        QuadResult r = vi.patch(vi.patch_centers[i], vi.patch_radii[i]);
        total.value += r.value;
        total.abs_error += r.abs_error;
    }

    const double eb = g.boundary_exponent;
    if (region.is_ball()) {
        const auto& b = region.as_ball();
        QuadResult r = vi.shell(b.center, 0.0, b.radius, 0.0, eb);
        total.value += r.value;
        total.abs_error += r.abs_error;
    } else if (region.is_annulus()) {
        const auto& a = region.as_annulus();
        const double mid = 0.5 * (a.r_in + a.r_out);
        QuadResult r1 = vi.shell(a.center, a.r_in, mid, eb, 0.0);
        QuadResult r2 = vi.shell(a.center, mid, a.r_out, 0.0, eb);
        total.value += r1.value + r2.value;
        total.abs_error += r1.abs_error + r2.abs_error;
    } else {
        for (const auto& b : region.as_ball_union()) {
            QuadResult r = vi.shell(b.center, 0.0, b.radius, 0.0, eb);
            total.value += r.value;
            total.abs_error += r.abs_error;
        }
    }
    total.n_evals = vi.evals;

    const double target = std::max(abs_floor, target_rel_error * std::fabs(total.value));
    if (total.abs_error > 8.0 * target)
        throw QuadratureError("integrate_singular: error target not met", total.value,
                              total.abs_error);
    return total;
}

QuadResult integrate_exterior(FuncRef<double(const Point&)> f, const Ball& ball,
                              double surface_exponent, double decay, double rel_tol,
                              double abs_floor) {
    const int d = ball.dim();
    if (decay <= d) throw ParameterError("integrate_exterior: decay must exceed d");
    if (surface_exponent <= -1.0)
        throw ParameterError("integrate_exterior: surface exponent must be > -1");
    const double r = ball.radius;
    std::int64_t evals = 0;
    double max_rel_inner = 0.0;

    auto ring = [&](double rho) {
        auto h = [&](const Point& th) { return f(ball.center + rho * th); };
        QuadResult sr = integrate_sphere(d, h, 0.125 * rel_tol, 1e-30);
        evals += sr.n_evals;
        if (sr.value != 0.0)
            max_rel_inner = std::max(max_rel_inner, sr.abs_error / std::fabs(sr.value));
        return std::pow(rho, d - 1) * sr.value;
    };

    QuadResult near = integrate_endpoint_singular(ring, r, 2.0 * r, surface_exponent, 0.0,
                                                  rel_tol, 0.5 * abs_floor, 2000);
    // rho = 2r / v maps [2r, inf) to (0, 1]
    auto far = [&](double v) {
        const double rho = 2.0 * r / v;
        return ring(rho) * 2.0 * r / (v * v);
    };
    QuadResult tail = integrate_endpoint_singular(far, 0.0, 1.0, decay - d - 1.0, 0.0,
                                                  rel_tol, 0.5 * abs_floor, 2000);
    QuadResult out;
    out.value = near.value + tail.value;
    out.abs_error =
        near.abs_error + tail.abs_error + max_rel_inner * std::fabs(out.value);
    out.n_evals = evals;
    return out;
}

double TestFunction::value(const Point& z) const {
    const double t = (z - support.center).norm2() / (support.radius * support.radius);
    if (t >= 1.0) return 0.0;
    return amplitude * std::exp(1.0 - 1.0 / (1.0 - t));
}

Point TestFunction::gradient(const Point& z) const {
    const Point u = z - support.center;
    const double r2 = support.radius * support.radius;
    const double t = u.norm2() / r2;
    if (t >= 1.0) return Point(z.dim());
    const double s = 1.0 / (1.0 - t);
    const double v = amplitude * std::exp(1.0 - s);
    return (-2.0 * v * s * s / r2) * u;
}

double TestFunction::laplacian(const Point& z) const {
    const Point u = z - support.center;
    const double r2 = support.radius * support.radius;
    const double t = u.norm2() / r2;
    if (t >= 1.0) return 0.0;
    const double s = 1.0 / (1.0 - t);
    const double v = amplitude * std::exp(1.0 - s);
    const int d = z.dim();
    return (v / r2) * (4.0 * t * s * s * s * (s - 2.0) - 2.0 * d * s * s);
}

double frac_laplacian(const StableParams& params, const TestFunction& phi, const Point& x,
                      const FracLaplacianOptions& opt) {
    const int d = params.d();
    const double alpha = params.alpha();
    const double anu = kernels::riesz_constant(params, -alpha);
    const double phix = phi.value(x);
    const double r_near = phi.support.radius;
    const double ell = dist(x, phi.support.center);
    const double r_supp = phi.support.radius;

    // spheres around x intersect the support only for rho in [ell-R, ell+R];
    // resolve that angular window and split the radial axis there
    auto support_min_n = [&](double rho) {
        if (ell <= r_supp) return 16;  // x inside: order-one angular scale
        return angular_resolution(rho, r_supp, ell);
    };
    auto add_cut = [](std::vector<double>& cuts, double c, double lo, double hi) {
        if (c > lo + 1e-14 && c < hi - 1e-14) cuts.push_back(c);
    };

    // inner part: antipodally symmetric sphere rule pairs +/- y, so the
    // angular average of phi(x+y)-phi(x) is O(rho^2) and the radial
    // integrand is rho^{1-alpha}
    auto radial_near = [&](double rho) {
        auto h = [&](const Point& th) { return phi.value(x + rho * th) - phix; };
        QuadResult sr = integrate_sphere(d, h, 0.25 * opt.rel_tol, 1e-30, support_min_n(rho));
        return sr.value * anu * std::pow(rho, -1.0 - alpha);
    };
    // u = rho^{2-alpha} flattens the endpoint
    const double p = 2.0 - alpha;
    auto inner_u = [&](double u) {
        const double rho = std::pow(u, 1.0 / p);
        return radial_near(rho) * (1.0 / p) * rho / u;
    };
    // below rho_c the paired difference is rounding noise against the
    // rho^{-1-alpha} kernel; use sigma rho^2 Lap(phi)/(2d) there instead
    const double rho_c = 1e-4 * r_supp;
    const double eps = std::max(opt.eps_inner, 0.0);
    const double sigma = special::unit_sphere_area(d);
    QuadResult in;
    if (eps < rho_c) {
        in.value = anu * sigma * phi.laplacian(x) / (2.0 * d) *
                   (std::pow(rho_c, p) - std::pow(eps, p)) / p;
    }
    const double rho_lo = std::max(eps, rho_c);
    if (rho_lo < r_near) {
        std::vector<double> near_cuts{rho_lo, r_near};
        add_cut(near_cuts, ell - r_supp, rho_lo, r_near);
        add_cut(near_cuts, ell + r_supp, rho_lo, r_near);
        std::sort(near_cuts.begin(), near_cuts.end());
        for (size_t k = 0; k + 1 < near_cuts.size(); ++k) {
            QuadResult r = integrate_gk(inner_u, std::pow(near_cuts[k], p),
                                        std::pow(near_cuts[k + 1], p), opt.rel_tol,
                                        opt.abs_tol, 2000);
            in.value += r.value;
            in.abs_error += r.abs_error;
        }
    }

    // far part: integrate phi against the Levy density beyond r_near, plus
    // the exact -phi(x) * nu(B(0,r_near)^c) term
    const double rho_max = ell + r_supp;
    QuadResult far;
    if (rho_max > r_near) {
        auto radial_far = [&](double rho) {
            auto h = [&](const Point& th) { return phi.value(x + rho * th); };
            QuadResult sr =
                integrate_sphere(d, h, 0.25 * opt.rel_tol, 1e-30, support_min_n(rho));
            return sr.value * anu * std::pow(rho, d - 1.0 - d - alpha);
        };
        std::vector<double> far_cuts{r_near, rho_max};
        add_cut(far_cuts, ell - r_supp, r_near, rho_max);
        std::sort(far_cuts.begin(), far_cuts.end());
        for (size_t k = 0; k + 1 < far_cuts.size(); ++k) {
            QuadResult r = integrate_gk(radial_far, far_cuts[k], far_cuts[k + 1],
                                        opt.rel_tol, opt.abs_tol, 2000);
            far.value += r.value;
            far.abs_error += r.abs_error;
        }
    }
    const double mass_out =
        anu * special::unit_sphere_area(d) * std::pow(r_near, -alpha) / alpha;
    return in.value + far.value - phix * mass_out;
}

FracLaplacianProfile::FracLaplacianProfile(const StableParams& params,
                                           const TestFunction& phi, double rho_max,
                                           int n_nodes, double rel_tol)
    : center_(phi.support.center), rho_max_(rho_max), step_(rho_max / (n_nodes - 1)) {
    FracLaplacianOptions opt;
    opt.rel_tol = rel_tol;
    opt.abs_tol = 1e-9 * phi.sup_norm();
    values_.resize(n_nodes);
    Point probe = center_;
    for (int i = 0; i < n_nodes; ++i) {
        probe[0] = center_[0] + i * step_;
        values_[i] = frac_laplacian(params, phi, probe, opt);
    }
}

double FracLaplacianProfile::at_radius(double rho) const {
    const int n = static_cast<int>(values_.size());
    if (rho >= rho_max_) {
        // beyond the table the operator decays like rho^{-d-..}; extrapolate
        // by the last ratio (callers keep rho_max past the region of use)
        return values_.back();
    }
    const double s = rho / step_;
    int i = static_cast<int>(s);
    i = std::clamp(i, 1, n - 3);
    const double t = s - i;
    // 4-point Lagrange through nodes i-1..i+2
    const double vm = values_[i - 1], v0 = values_[i], v1 = values_[i + 1],
                 v2 = values_[i + 2];
    return vm * (-t * (t - 1.0) * (t - 2.0) / 6.0) + v0 * ((t + 1.0) * (t - 1.0) * (t - 2.0) / 2.0) +
           v1 * (-(t + 1.0) * t * (t - 2.0) / 2.0) + v2 * ((t + 1.0) * t * (t - 1.0) / 6.0);
}

namespace {
double generator_residual_impl(const StableParams& params, const Ball& ball,
                               const TestFunction& phi, const Point& x, double rel_tol,
                               const std::function<double(const Point&)>& frac_lap) {
    const double phix = phi.value(x);
    if (!ball.contains(x)) return phix;  // Green row vanishes outside the ball

    SingularIntegrand g;
    g.f = [&](const Point& z) {
        const double gv = kernels::ball_green(params, ball, x, z).value;
        if (gv == 0.0) return 0.0;
        return gv * frac_lap(z);
    };
    g.singular_points = {x};
    g.singular_exponent = params.d() - params.alpha();
    g.boundary_exponent = 0.5 * params.alpha();
    g.feature_scale = phi.support.radius;
    // the integral equals -phi(x); its natural error scale is sup|phi|
    QuadResult r =
        integrate_singular(g, Domain(ball), rel_tol, 0.5 * rel_tol * phi.sup_norm());
    return r.value + phix;
}
}  // namespace

double green_generator_residual(const StableParams& params, const Ball& ball,
                                const TestFunction& phi, const Point& x, double rel_tol) {
    const double reach = dist(ball.center, phi.support.center) + ball.radius + 1e-9;
    FracLaplacianProfile prof(params, phi, reach);
    return green_generator_residual(params, ball, phi, prof, x, rel_tol);
}

double green_generator_residual(const StableParams& params, const Ball& ball,
                                const TestFunction& phi, const FracLaplacianProfile& prof,
                                const Point& x, double rel_tol) {
    return generator_residual_impl(params, ball, phi, x, rel_tol,
                                   [&](const Point& z) { return prof(z); });
}

}  // namespace stablepot::quad
