#include "sominit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sominit/error.hpp"

namespace sominit {

namespace {

void require_same_dim(std::size_t expected, std::size_t got, const char* what) {
    if (expected != got) {
        throw DimensionMismatch(std::string(what) + ": expected dimension " +
                                std::to_string(expected) + ", got " +
                                std::to_string(got));
    }
}

// Population covariance matrix (divisor n), row-major D x D.
std::vector<double> covariance(std::span<const Point> points, const Point& center) {
    const std::size_t dim = center.size();
    std::vector<double> cov(dim * dim, 0.0);
    for (const Point& p : points) {
        for (std::size_t r = 0; r < dim; ++r) {
            const double dr = p[r] - center[r];
            for (std::size_t c = r; c < dim; ++c) {
                cov[r * dim + c] += dr * (p[c] - center[c]);
            }
        }
    }
    const double inv_n = 1.0 / static_cast<double>(points.size());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = r; c < dim; ++c) {
            cov[r * dim + c] *= inv_n;
            cov[c * dim + r] = cov[r * dim + c];
        }
    }
    return cov;
}

// Enforce the sign convention: first nonzero component positive.
void normalize_sign(Point& direction) {
    for (double v : direction) {
        if (v != 0.0) {
            if (v < 0.0) {
                for (double& c : direction) c = -c;
            }
            return;
        }
    }
}

// Top eigenvector of a symmetric 2x2 matrix [[a, b], [b, c]].
Point top_eigenvector_2x2(double a, double b, double c, bool* tie) {
    const double half_gap = (a - c) / 2.0;
    const double radius = std::hypot(half_gap, b);
    const double lambda_max = (a + c) / 2.0 + radius;
    const double lambda_min = (a + c) / 2.0 - radius;
    const double scale = std::max({std::abs(lambda_max), std::abs(lambda_min), 1e-300});
    if ((lambda_max - lambda_min) / scale <= 1e-12) {
        if (tie) *tie = true;
        return {1.0, 0.0};
    }
    // Pick the better-conditioned of the two equivalent eigenvector forms.
    Point v1 = {b, lambda_max - a};
    Point v2 = {lambda_max - c, b};
    Point v = sq_norm(v1) >= sq_norm(v2) ? v1 : v2;
    const double norm = std::sqrt(sq_norm(v));
    for (double& x : v) x /= norm;
    return v;
}

// Power iteration for D > 2. Deterministic start vector; ties stall the
// iteration, in which case the last iterate is returned after sign fixing.
Point top_eigenvector_power(const std::vector<double>& cov, std::size_t dim, bool* tie) {
    Point v(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) v[i] = 1.0 / static_cast<double>(i + 1);
    double norm = std::sqrt(sq_norm(v));
    for (double& x : v) x /= norm;

    Point next(dim, 0.0);
    constexpr int kMaxRounds = 10000;
    constexpr double kTol = 1e-12;
    for (int round = 0; round < kMaxRounds; ++round) {
        for (std::size_t r = 0; r < dim; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < dim; ++c) acc += cov[r * dim + c] * v[c];
            next[r] = acc;
        }
        norm = std::sqrt(sq_norm(next));
        if (norm == 0.0) {
            if (tie) *tie = true;
            Point axis(dim, 0.0);
            axis[0] = 1.0;
            return axis;
        }
        for (double& x : next) x /= norm;
        // Convergence up to sign.
        double delta_same = 0.0;
        double delta_flip = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            delta_same = std::max(delta_same, std::abs(next[i] - v[i]));
            delta_flip = std::max(delta_flip, std::abs(next[i] + v[i]));
        }
        v = next;
        if (std::min(delta_same, delta_flip) <= kTol) return v;
    }
    if (tie) *tie = true;
    return v;
}

} // namespace

double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double sq_norm(std::span<const double> a) { return dot(a, a); }

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

Point mean(std::span<const Point> points) {
    if (points.empty()) throw EmptyDataSet("mean: empty point set");
    const std::size_t dim = points.front().size();
    Point acc(dim, 0.0);
    for (const Point& p : points) {
        require_same_dim(dim, p.size(), "mean");
        for (std::size_t i = 0; i < dim; ++i) acc[i] += p[i];
    }
    for (double& c : acc) c /= static_cast<double>(points.size());
    return acc;
}

double total_variance_sum(std::span<const Point> points) {
    const Point center = mean(points);
    double acc = 0.0;
    for (const Point& p : points) acc += sq_dist(p, center);
    return acc;
}

LineSpec first_principal_component(std::span<const Point> points, bool* tie_warning) {
    if (tie_warning) *tie_warning = false;
    if (points.empty()) throw EmptyDataSet("first_principal_component: empty point set");
    Point center = mean(points);
    const std::size_t dim = center.size();

    bool all_coincident = true;
    for (const Point& p : points) {
        if (sq_dist(p, points.front()) != 0.0) {
            all_coincident = false;
            break;
        }
    }
    if (all_coincident) {
        throw DegenerateCloud("first_principal_component: all points coincide");
    }

    const std::vector<double> cov = covariance(points, center);
    bool tie = false;
    Point direction;
    if (dim == 1) {
        direction = {1.0};
    } else if (dim == 2) {
        direction = top_eigenvector_2x2(cov[0], cov[1], cov[3], &tie);
    } else {
        direction = top_eigenvector_power(cov, dim, &tie);
    }
    normalize_sign(direction);
    if (tie && tie_warning) *tie_warning = true;
    return LineSpec{std::move(center), std::move(direction)};
}

SegmentProjection project_to_segment(std::span<const double> x,
                                     std::span<const double> a,
                                     std::span<const double> b) {
    require_same_dim(x.size(), a.size(), "project_to_segment");
    require_same_dim(x.size(), b.size(), "project_to_segment");
    const double seg_sq = sq_dist(a, b);
    if (seg_sq == 0.0) {
        throw ZeroLengthSegment("project_to_segment: segment endpoints coincide");
    }
    double along = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        along += (x[i] - a[i]) * (b[i] - a[i]);
    }
    const double l = along / seg_sq;
    double dist_sq;
    if (l > 0.0 && l < 1.0) {
        // Pythagoras on the projection; clamp the cancellation residue.
        dist_sq = std::max(0.0, sq_dist(x, a) - l * l * seg_sq);
    } else {
        dist_sq = std::min(sq_dist(x, a), sq_dist(x, b));
    }
    return SegmentProjection{l, dist_sq};
}

} // namespace sominit
