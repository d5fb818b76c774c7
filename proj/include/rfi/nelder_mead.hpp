#pragma once

#include <functional>
#include <span>
#include <vector>

namespace rfi {

struct NelderMeadOptions {
    double initial_step = 0.3; // per-coordinate offset of the starting simplex
    double tolerance = 1e-6;   // simplex diameter at which the search stops
    int max_iterations = 2000;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    int evaluations = 0;
    bool converged = false;
    /// Best vertex value after each iteration; non-increasing.
    std::vector<double> best_history;
};

using Objective = std::function<double(std::span<const double>)>;

/// Unconstrained derivative-free simplex minimization. NaN objective values rank as +inf.
NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             const NelderMeadOptions& options = {});

/// Largest Euclidean distance between any two vertices.
double simplex_diameter(std::span<const std::vector<double>> vertices);

} // namespace rfi
