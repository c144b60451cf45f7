#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sominit {

/// A point in D-dimensional space. D is fixed per data set; coordinates are
/// finite doubles.
using Point = std::vector<double>;

/// A straight line through `origin` along unit vector `direction`.
///
/// The sign of `direction` is normalized so that its first nonzero component
/// is positive, which makes results reproducible across eigensolver choices.
struct LineSpec {
    Point origin;
    Point direction;
};

/// Result of projecting a point onto a segment [a, b].
///
/// `l` is the normalized projection parameter: 0 at a, 1 at b. `sq_dist` is
/// the squared distance to the segment itself, so for l outside (0, 1) it is
/// the squared distance to the nearer endpoint.
struct SegmentProjection {
    double l = 0.0;
    double sq_dist = 0.0;
};

// Elementwise vector helpers shared across the library.
double dot(std::span<const double> a, std::span<const double> b);
double sq_norm(std::span<const double> a);
double sq_dist(std::span<const double> a, std::span<const double> b);

/// Coordinate-wise arithmetic mean. Throws EmptyDataSet on empty input and
/// DimensionMismatch on mixed dimensions.
Point mean(std::span<const Point> points);

/// Sum of squared Euclidean distances from each point to the mean.
double total_variance_sum(std::span<const Point> points);

/// First principal component of the cloud: origin at the mean, direction the
/// top eigenvector of the population covariance matrix (divisor n).
///
/// For D = 2 the symmetric 2x2 eigenproblem is solved in closed form; for
/// larger D power iteration runs to a 1e-12 tolerance (at most 10000 rounds).
/// Throws DegenerateCloud when all points coincide. When the top eigenvalues
/// tie (an isotropic cloud), the sign-normalized direction with the largest
/// first coordinate is returned and *tie_warning, if given, is set.
LineSpec first_principal_component(std::span<const Point> points,
                                   bool* tie_warning = nullptr);

/// Projection of x onto segment [a, b] with the squared distance to the
/// segment. Throws ZeroLengthSegment when a == b.
///
/// For an interior projection (0 < l < 1) the squared distance is computed
/// as |x-a|^2 - (l*|b-a|)^2 and clamped at zero against rounding.
SegmentProjection project_to_segment(std::span<const double> x,
                                     std::span<const double> a,
                                     std::span<const double> b);

} // namespace sominit
