#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sominit/geometry.hpp"

namespace sominit {

enum class ShapeFamily { kSpiral3, kHorseshoe, kSShape, kCShape, kTree };

/// Parameters of a synthetic 2-D shape generator.
///
/// With noise_sigma = 0 every point lies exactly on the family's curve (or
/// branch set); with noise_sigma > 0 each point gets an iid isotropic
/// Gaussian displacement on top. Family-specific fields below have defaults
/// that produce the stock shapes.
struct ShapeSpec {
    ShapeFamily family = ShapeFamily::kSpiral3;
    std::size_t n = 1000;
    double noise_sigma = 0.0;
    /// Equispaced curve parameters instead of uniform random draws.
    bool equispaced = false;

    double spiral_turns = 3.0;        // Archimedean r = theta / (2*pi*turns)
    double horseshoe_sweep_deg = 240; // arc sweep, unit radius
    double c_sweep_deg = 210;         // arc sweep, unit radius
    double s_amplitude = 1.0;         // y = A * sin(pi * x), x in [-1, 1]
};

/// An ordered list of same-dimension points plus provenance.
///
/// `shape_params` is the canonical parameter text of the generator that made
/// the points, or "external" for loaded files. Regenerating with identical
/// (spec, seed) reproduces `points` bit-exactly.
struct DataSet {
    std::vector<Point> points;
    std::string name;
    std::string shape_params;
    std::optional<std::uint64_t> seed;
    std::size_t dim = 0;

    std::size_t size() const { return points.size(); }
};

ShapeFamily parse_family(std::string_view name); // throws UnknownShape
std::string_view family_name(ShapeFamily family);

/// Canonical one-line rendering of a spec, stable across runs.
std::string describe(const ShapeSpec& spec);

/// Deterministic synthetic data set for (spec, seed).
DataSet generate(const ShapeSpec& spec, std::uint64_t seed);

/// CSV ingestion: one point per record, comma-separated decimal fields, an
/// optional single header record (auto-skipped when its first field is not
/// numeric). Throws ParseError / DimensionMismatch / IoError.
DataSet load_csv(const std::filesystem::path& path);

/// CSV serialization with shortest round-trippable decimals, LF newlines.
void save_csv(const DataSet& ds, const std::filesystem::path& path);

} // namespace sominit
