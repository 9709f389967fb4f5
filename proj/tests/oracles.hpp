#pragma once

// Test-only reference integrators.  Deliberately independent of the
// library's quadrature module: plain recursive Simpson in 1-d and midpoint
// tensor grids with Richardson extrapolation in 2-d, so expected values in
// the tests are produced by a different numerical route than the code under
// test.

#include "stablepot/point.hpp"

#include <cmath>
#include <cstdint>
#include <functional>

namespace oracles {

inline double simpson_rec(const std::function<double(double)>& f, double a, double b,
                          double fa, double fm, double fb, double whole, double tol,
                          int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline double simpson(const std::function<double(double)>& f, double a, double b,
                      double tol = 1e-10, int depth = 40) {
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth);
}

// Midpoint rule over the rectangle [ax,bx] x [ay,by].
inline double midpoint2d(const std::function<double(double, double)>& f, double ax,
                         double bx, double ay, double by, int n) {
    const double hx = (bx - ax) / n, hy = (by - ay) / n;
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            s += f(ax + (i + 0.5) * hx, ay + (j + 0.5) * hy);
    return s * hx * hy;
}

// Midpoint + Richardson over a disk, integrand given in Cartesian
// coordinates; points outside the disk contribute zero.
inline double disk_integral(const std::function<double(const stablepot::Point&)>& f,
                            const stablepot::Point& center, double radius, int n) {
    auto g = [&](double rho, double th) {
        stablepot::Point z{center[0] + rho * std::cos(th), center[1] + rho * std::sin(th)};
        return rho * f(z);
    };
    return midpoint2d(g, 0.0, radius, 0.0, 2.0 * std::acos(-1.0), n);
}

inline double disk_integral_richardson(
    const std::function<double(const stablepot::Point&)>& f,
    const stablepot::Point& center, double radius, int n) {
    const double c = disk_integral(f, center, radius, n);
    const double fine = disk_integral(f, center, radius, 2 * n);
    return fine + (fine - c) / 3.0;
}

// Tiny deterministic LCG for test point generation (independent of the
// library RNG).
struct TestRng {
    std::uint64_t s;
    explicit TestRng(std::uint64_t seed) : s(seed) {}
    double next() {
        s = s * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<double>(s >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * next(); }
};

}  // namespace oracles
