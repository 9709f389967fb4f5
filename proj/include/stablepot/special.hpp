#pragma once

#include <cstddef>
#include <vector>

namespace stablepot::special {

// Surface area of the unit sphere S^{d-1} in R^d.
double unit_sphere_area(int d);

// log of the complete beta function B(a,b), a,b > 0.
double log_beta(double a, double b);

// Regularized incomplete beta I_z(a,b), continued-fraction evaluation.
// a,b > 0, z in [0,1].
double reg_inc_beta(double a, double b, double z);

// Non-regularized incomplete beta B_z(a,b) = int_0^z t^{a-1}(1-t)^{b-1} dt.
double inc_beta(double a, double b, double z);

// Inverse of z -> I_z(a,b).  Bisection-safeguarded Newton, |I_z - q| < 1e-14.
double inv_reg_inc_beta(double a, double b, double q);

// Gauss-Legendre nodes/weights on [-1,1], cached per order.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussRule& gauss_legendre(int n);

}  // namespace stablepot::special
