#include "stablepot/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace stablepot {

namespace {
constexpr double kPi = std::numbers::pi;

// Points on the sphere |y - c| = r.  d=2 walks the circle uniformly; d=3 uses
// a Fibonacci lattice.  Normals point away from the center.
void sphere_samples(const Point& c, double r, int n, double normal_sign,
                    std::vector<BoundarySample>& out) {
    const int d = c.dim();
    if (d == 2) {
        for (int i = 0; i < n; ++i) {
            const double th = 2.0 * kPi * (i + 0.5) / n;
            Point nrm{std::cos(th), std::sin(th)};
            out.push_back({c + r * nrm, normal_sign * nrm});
        }
    } else if (d == 3) {
        const double ga = kPi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < n; ++i) {
            const double z = 1.0 - 2.0 * (i + 0.5) / n;
            const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double th = ga * i;
            Point nrm{rho * std::cos(th), rho * std::sin(th), z};
            out.push_back({c + r * nrm, normal_sign * nrm});
        }
    } else {
        throw ParameterError("boundary sampling implemented for d = 2, 3 only");
    }
}
}  // namespace

Domain::Domain(Ball b) : shape_(b) {
    r0_ = b.radius;
    diam_ = 2.0 * b.radius;
}

Domain::Domain(Annulus a) : shape_(a) {
    r0_ = std::min(a.r_in, 0.5 * (a.r_out - a.r_in));
    diam_ = 2.0 * a.r_out;
}

Domain::Domain(BallUnion balls) : shape_(std::move(balls)) {
    const auto& bs = std::get<BallUnion>(shape_);
    if (bs.empty()) throw ParameterError("Domain: ball union must be nonempty");
    double min_r = std::numeric_limits<double>::infinity();
    double min_gap = std::numeric_limits<double>::infinity();
    diam_ = 0.0;
    for (size_t i = 0; i < bs.size(); ++i) {
        min_r = std::min(min_r, bs[i].radius);
        diam_ = std::max(diam_, 2.0 * bs[i].radius);
        for (size_t j = i + 1; j < bs.size(); ++j) {
            const double cd = dist(bs[i].center, bs[j].center);
            const double gap = cd - bs[i].radius - bs[j].radius;
            if (gap <= 0.0)
                throw ParameterError("Domain: balls in a union must have positive separation");
            min_gap = std::min(min_gap, gap);
            diam_ = std::max(diam_, cd + bs[i].radius + bs[j].radius);
        }
    }
    r0_ = bs.size() == 1 ? min_r : std::min(min_r, 0.5 * min_gap);
}

int Domain::dim() const {
    if (is_ball()) return as_ball().dim();
    if (is_annulus()) return as_annulus().dim();
    return as_ball_union().front().dim();
}

double Domain::delta(const Point& x) const {
    if (is_ball()) {
        const auto& b = as_ball();
        return std::max(0.0, b.radius - dist(x, b.center));
    }
    if (is_annulus()) {
        const auto& a = as_annulus();
        const double rho = dist(x, a.center);
        if (rho <= a.r_in || rho >= a.r_out) return 0.0;
        return std::min(rho - a.r_in, a.r_out - rho);
    }
    // disjoint union: the boundary sphere of the ball containing x lies in D^c
    double best = 0.0;
    for (const auto& b : as_ball_union())
        best = std::max(best, b.radius - dist(x, b.center));
    return std::max(0.0, best);
}

double Domain::dist_to_closure(const Point& x) const {
    if (is_ball()) {
        const auto& b = as_ball();
        return std::max(0.0, dist(x, b.center) - b.radius);
    }
    if (is_annulus()) {
        const auto& a = as_annulus();
        const double rho = dist(x, a.center);
        if (rho < a.r_in) return a.r_in - rho;
        if (rho > a.r_out) return rho - a.r_out;
        return 0.0;
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& b : as_ball_union())
        best = std::min(best, std::max(0.0, dist(x, b.center) - b.radius));
    return best;
}

std::vector<BoundarySample> Domain::boundary_samples(int n) const {
    std::vector<BoundarySample> out;
    if (is_ball()) {
        sphere_samples(as_ball().center, as_ball().radius, n, +1.0, out);
    } else if (is_annulus()) {
        const auto& a = as_annulus();
        sphere_samples(a.center, a.r_out, n, +1.0, out);
        sphere_samples(a.center, a.r_in, n, -1.0, out);  // outward = toward the hole
    } else {
        for (const auto& b : as_ball_union()) sphere_samples(b.center, b.radius, n, +1.0, out);
    }
    return out;
}

C11Report c11_check(const Domain& domain, double r, int n_boundary_samples) {
    if (!(r > 0.0)) throw ParameterError("c11_check: r must be > 0");
    C11Report rep;
    rep.ok = true;
    rep.worst_margin = std::numeric_limits<double>::infinity();
    const double tol = 1e-12;
    for (const auto& s : domain.boundary_samples(n_boundary_samples)) {
        const Point c_in = s.q - r * s.outward_normal;
        const Point c_out = s.q + r * s.outward_normal;
        const double m_in = domain.delta(c_in) - r;
        const double m_out = domain.dist_to_closure(c_out) - r;
        const double m = std::min(m_in, m_out);
        if (m < rep.worst_margin) {
            rep.worst_margin = m;
            rep.worst_point = s.q;
        }
        if (m < -tol) rep.ok = false;
    }
    return rep;
}

}  // namespace stablepot
