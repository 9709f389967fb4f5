#pragma once

#include "stablepot/error.hpp"
#include "stablepot/point.hpp"

#include <string>
#include <variant>
#include <vector>

namespace stablepot {

struct Ball {
    Point center;
    double radius = 0.0;

    Ball() = default;
    Ball(Point c, double r) : center(c), radius(r) {
        if (!(r > 0.0)) throw ParameterError("Ball: radius must be > 0");
    }
    int dim() const { return center.dim(); }
    bool contains(const Point& x) const { return dist(x, center) < radius; }
};

struct Annulus {
    Point center;
    double r_in = 0.0;
    double r_out = 0.0;

    Annulus() = default;
    Annulus(Point c, double ri, double ro) : center(c), r_in(ri), r_out(ro) {
        if (!(ri > 0.0 && ro > ri)) throw ParameterError("Annulus: need 0 < r_in < r_out");
    }
    int dim() const { return center.dim(); }
};

// A boundary sample: point Q on the boundary plus the outward unit normal.
struct BoundarySample {
    Point q;
    Point outward_normal;
};

// Bounded open sets with closed-form distance to the complement.  The shapes
// are exactly those for which the localization radius r_0 is known exactly,
// which the quadrature and the walk-on-spheres samplers both rely on.
class Domain {
public:
    using BallUnion = std::vector<Ball>;

    Domain(Ball b);                 // NOLINT: implicit by design
    Domain(Annulus a);              // NOLINT
    explicit Domain(BallUnion balls);  // pairwise positive separation required

    int dim() const;

    // dist(x, D^c); zero outside D.
    double delta(const Point& x) const;

    // dist(x, closure of D); zero on the closure.
    double dist_to_closure(const Point& x) const;

    bool contains(const Point& x) const { return delta(x) > 0.0; }

    double r0() const { return r0_; }
    double diameter() const { return diam_; }
    double distortion() const { return diam_ / r0_; }

    // Deterministic boundary samples covering every boundary component.
    std::vector<BoundarySample> boundary_samples(int n) const;

    bool is_ball() const { return std::holds_alternative<Ball>(shape_); }
    const Ball& as_ball() const { return std::get<Ball>(shape_); }
    bool is_annulus() const { return std::holds_alternative<Annulus>(shape_); }
    const Annulus& as_annulus() const { return std::get<Annulus>(shape_); }
    bool is_ball_union() const { return std::holds_alternative<BallUnion>(shape_); }
    const BallUnion& as_ball_union() const { return std::get<BallUnion>(shape_); }

private:
    std::variant<Ball, Annulus, BallUnion> shape_;
    double r0_ = 0.0;
    double diam_ = 0.0;
};

struct C11Report {
    bool ok = false;
    double worst_margin = 0.0;
    Point worst_point;
};

// Checks the inner/outer tangent ball condition at scale r on sampled
// boundary points.  Containment is tested through the exact distance
// functions, so a sample passes iff delta(Q - r n) >= r - 1e-12 and
// dist(Q + r n, D) >= r - 1e-12.
C11Report c11_check(const Domain& domain, double r, int n_boundary_samples);

}  // namespace stablepot
