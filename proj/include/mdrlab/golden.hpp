#pragma once

#include <cmath>
#include <functional>

#include "mdrlab/errors.hpp"

namespace mdrlab {

struct GoldenResult {
    double x;
    double fx;
    int iterations;
};

/// Golden-section search for the minimum of a unimodal `f` on [lo, hi].
/// Endpoints are never evaluated, so `f` may diverge there. Throws
/// ConvergenceError if the bracket is still wider than `tol` after
/// `max_iterations`.
inline GoldenResult golden_section_minimize(const std::function<double(double)> &f, double lo, double hi,
                                            double tol = 1e-10, int max_iterations = 500) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    while (hi - lo > tol) {
        if (++it > max_iterations) {
            throw ConvergenceError("golden-section search did not converge");
        }
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    double x = 0.5 * (lo + hi);
    return {x, f(x), it};
}

}  // namespace mdrlab
