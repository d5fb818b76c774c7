#include "rfi/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "rfi/error.hpp"

namespace rfi {

namespace {

struct Vertex {
    std::vector<double> x;
    double value = 0.0;
};

// x = a + t (b - a)
std::vector<double> along(const std::vector<double>& a, const std::vector<double>& b, double t)
{
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + t * (b[i] - a[i]);
    }
    return out;
}

} // namespace

double simplex_diameter(std::span<const std::vector<double>> vertices)
{
    double diameter = 0.0;
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            double d2 = 0.0;
            for (std::size_t i = 0; i < vertices[a].size(); ++i) {
                const double d = vertices[a][i] - vertices[b][i];
                d2 += d * d;
            }
            diameter = std::max(diameter, std::sqrt(d2));
        }
    }
    return diameter;
}

NelderMeadResult nelder_mead(const Objective& f, std::vector<double> start,
                             const NelderMeadOptions& options)
{
    if (start.empty()) {
        throw DomainError("nelder_mead needs at least one coordinate");
    }
    const std::size_t n = start.size();
    NelderMeadResult result;

    auto eval = [&](const std::vector<double>& x) {
        ++result.evaluations;
        const double v = f(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    };

    std::vector<Vertex> simplex;
    simplex.reserve(n + 1);
    simplex.push_back({start, eval(start)});
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x = start;
        x[i] += options.initial_step;
        const double v = eval(x);
        simplex.push_back({std::move(x), v});
    }

    std::vector<std::vector<double>> points(n + 1);
    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    };

    order();
    while (true) {
        for (std::size_t i = 0; i <= n; ++i) {
            points[i] = simplex[i].x;
        }
        if (simplex_diameter(points) < options.tolerance) {
            result.converged = true;
            break;
        }
        if (result.iterations >= options.max_iterations) {
            break;
        }
        ++result.iterations;

        std::vector<double> centroid(n, 0.0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < n; ++i) {
                centroid[i] += simplex[v].x[i];
            }
        }
        for (double& c : centroid) {
            c /= static_cast<double>(n);
        }

        Vertex& worst = simplex[n];
        const double best_value = simplex[0].value;
        const double second_worst = simplex[n - 1].value;

        std::vector<double> xr = along(centroid, worst.x, -options.reflection);
        const double fr = eval(xr);

        bool do_shrink = false;
        if (fr < best_value) {
            std::vector<double> xe = along(centroid, xr, options.expansion);
            const double fe = eval(xe);
            if (fe < fr) {
                worst = {std::move(xe), fe};
            } else {
                worst = {std::move(xr), fr};
            }
        } else if (fr < second_worst) {
            worst = {std::move(xr), fr};
        } else if (fr < worst.value) {
            std::vector<double> xc = along(centroid, xr, options.contraction);
            const double fc = eval(xc);
            if (fc <= fr) {
                worst = {std::move(xc), fc};
            } else {
                do_shrink = true;
            }
        } else {
            std::vector<double> xc = along(centroid, worst.x, options.contraction);
            const double fc = eval(xc);
            if (fc < worst.value) {
                worst = {std::move(xc), fc};
            } else {
                do_shrink = true;
            }
        }

        if (do_shrink) {
            for (std::size_t v = 1; v <= n; ++v) {
                simplex[v].x = along(simplex[0].x, simplex[v].x, options.shrink);
                simplex[v].value = eval(simplex[v].x);
            }
        }
        order();
        result.best_history.push_back(simplex[0].value);
    }

    result.x = simplex[0].x;
    result.value = simplex[0].value;
    return result;
}

} // namespace rfi
