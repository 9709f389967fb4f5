#pragma once

#include "stablepot/error.hpp"

#include <string>

namespace stablepot {

// Dimension and stability index, validated once and passed by value
// everywhere.  The main constructor enforces d >= 2 and 1 < alpha < 2, the
// range on which the gradient perturbation theory works.  `relaxed` admits
// any alpha in (0,2); it exists only for the alpha <= 1 counterexample
// experiments and for the Gaussian-limit sanity checks of the sampler.
class StableParams {
public:
    StableParams(int d, double alpha) : d_(d), alpha_(alpha) {
        if (d < 2) throw ParameterError("StableParams: dimension must be >= 2, got " + std::to_string(d));
        if (!(alpha > 1.0 && alpha < 2.0))
            throw ParameterError("StableParams: alpha must be in (1,2), got " + std::to_string(alpha));
    }

    static StableParams relaxed(int d, double alpha) {
        if (d < 1) throw ParameterError("StableParams: dimension must be >= 1, got " + std::to_string(d));
        if (!(alpha > 0.0 && alpha < 2.0))
            throw ParameterError("StableParams: alpha must be in (0,2), got " + std::to_string(alpha));
        StableParams p;
        p.d_ = d;
        p.alpha_ = alpha;
        return p;
    }

    int d() const { return d_; }
    double alpha() const { return alpha_; }

private:
    StableParams() : d_(0), alpha_(0.0) {}
    int d_;
    double alpha_;
};

}  // namespace stablepot
