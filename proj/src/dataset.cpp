#include "sominit/dataset.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "sominit/error.hpp"
#include "sominit/rng.hpp"
#include "sominit/textio.hpp"

namespace sominit {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Archimedean spiral r = b*theta with b = 1/(2*pi*turns), so r runs 0..1.
Point spiral_point(double u, double turns) {
    const double theta = u * 2.0 * kPi * turns;
    return {u * std::cos(theta), u * std::sin(theta)};
}

// Unit-radius arc of the given sweep, opening downward, centered on the
// positive y axis.
Point arc_point(double u, double sweep_deg) {
    const double sweep = sweep_deg * kPi / 180.0;
    const double phi = kPi / 2.0 - sweep / 2.0 + u * sweep;
    return {std::cos(phi), std::sin(phi)};
}

Point s_shape_point(double u, double amplitude) {
    const double x = 2.0 * u - 1.0;
    return {x, amplitude * std::sin(kPi * x)};
}

struct Segment {
    Point a;
    Point b;
};

// Five straight branches: a trunk with two symmetric branch pairs, one low
// and one high.
const std::array<Segment, 5>& tree_segments() {
    static const std::array<Segment, 5> segments = {{
        {{0.0, -1.0}, {0.0, 1.0}},
        {{0.0, -0.2}, {-0.6, 0.2}},
        {{0.0, -0.2}, {0.6, 0.2}},
        {{0.0, 0.4}, {-0.45, 0.85}},
        {{0.0, 0.4}, {0.45, 0.85}},
    }};
    return segments;
}

Point tree_point(double u) {
    const auto& segments = tree_segments();
    static const std::array<double, 6> cumulative = [] {
        std::array<double, 6> acc{};
        acc[0] = 0.0;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            const auto& s = tree_segments()[i];
            acc[i + 1] = acc[i] + std::sqrt(sq_dist(s.a, s.b));
        }
        return acc;
    }();
    const double total = cumulative.back();
    double t = u * total;
    std::size_t idx = 0;
    while (idx + 1 < segments.size() && t > cumulative[idx + 1]) ++idx;
    const auto& s = segments[idx];
    const double len = cumulative[idx + 1] - cumulative[idx];
    const double w = len > 0.0 ? (t - cumulative[idx]) / len : 0.0;
    return {s.a[0] + w * (s.b[0] - s.a[0]), s.a[1] + w * (s.b[1] - s.a[1])};
}

Point curve_point(const ShapeSpec& spec, double u) {
    switch (spec.family) {
        case ShapeFamily::kSpiral3: return spiral_point(u, spec.spiral_turns);
        case ShapeFamily::kHorseshoe: return arc_point(u, spec.horseshoe_sweep_deg);
        case ShapeFamily::kSShape: return s_shape_point(u, spec.s_amplitude);
        case ShapeFamily::kCShape: return arc_point(u, spec.c_sweep_deg);
        case ShapeFamily::kTree: return tree_point(u);
    }
    throw UnknownShape("unknown shape family");
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t") == std::string_view::npos;
}

} // namespace

ShapeFamily parse_family(std::string_view name) {
    if (name == "spiral3") return ShapeFamily::kSpiral3;
    if (name == "horseshoe") return ShapeFamily::kHorseshoe;
    if (name == "s_shape") return ShapeFamily::kSShape;
    if (name == "c_shape") return ShapeFamily::kCShape;
    if (name == "tree") return ShapeFamily::kTree;
    throw UnknownShape("unknown shape family '" + std::string(name) + "'");
}

std::string_view family_name(ShapeFamily family) {
    switch (family) {
        case ShapeFamily::kSpiral3: return "spiral3";
        case ShapeFamily::kHorseshoe: return "horseshoe";
        case ShapeFamily::kSShape: return "s_shape";
        case ShapeFamily::kCShape: return "c_shape";
        case ShapeFamily::kTree: return "tree";
    }
    return "?";
}

std::string describe(const ShapeSpec& spec) {
    std::string out = "family=" + std::string(family_name(spec.family)) +
                      " n=" + std::to_string(spec.n) +
                      " noise_sigma=" + format_double(spec.noise_sigma) +
                      " equispaced=" + (spec.equispaced ? std::string("1") : std::string("0"));
    switch (spec.family) {
        case ShapeFamily::kSpiral3:
            out += " turns=" + format_double(spec.spiral_turns);
            break;
        case ShapeFamily::kHorseshoe:
            out += " sweep_deg=" + format_double(spec.horseshoe_sweep_deg);
            break;
        case ShapeFamily::kCShape:
            out += " sweep_deg=" + format_double(spec.c_sweep_deg);
            break;
        case ShapeFamily::kSShape:
            out += " amplitude=" + format_double(spec.s_amplitude);
            break;
        case ShapeFamily::kTree:
            break;
    }
    return out;
}

DataSet generate(const ShapeSpec& spec, std::uint64_t seed) {
    if (spec.noise_sigma < 0.0) throw DomainError("noise_sigma must be >= 0");
    if (spec.family != ShapeFamily::kSpiral3 && spec.family != ShapeFamily::kHorseshoe &&
        spec.family != ShapeFamily::kSShape && spec.family != ShapeFamily::kCShape &&
        spec.family != ShapeFamily::kTree) {
        throw UnknownShape("unknown shape family");
    }

    // Curve parameters and noise come from disjoint streams, so the sigma=0
    // skeleton of a noisy set is recoverable by rerunning with sigma=0.
    Rng curve_rng = Rng::substream(seed, rng_stream::kCurveParams);
    Rng noise_rng = Rng::substream(seed, rng_stream::kNoise);

    DataSet ds;
    ds.points.reserve(spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) {
        double u;
        if (spec.equispaced) {
            u = spec.n == 1 ? 0.5 : static_cast<double>(j) / static_cast<double>(spec.n - 1);
        } else {
            u = curve_rng.uniform();
        }
        Point p = curve_point(spec, u);
        if (spec.noise_sigma > 0.0) {
            for (double& c : p) c += spec.noise_sigma * noise_rng.normal();
        }
        ds.points.push_back(std::move(p));
    }
    ds.name = std::string(family_name(spec.family));
    ds.shape_params = describe(spec);
    ds.seed = seed;
    ds.dim = 2;
    return ds;
}

DataSet load_csv(const std::filesystem::path& path) {
    const std::string content = read_file(path);

    DataSet ds;
    ds.name = path.stem().string();
    ds.shape_params = "external";

    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool first_record = true;
    while (pos < content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string::npos) eol = content.size();
        std::string_view line(content.data() + pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (is_blank(line)) continue;

        const auto fields = split_fields(line);
        if (first_record) {
            // A non-numeric first record is a header; skip it once.
            bool header = false;
            for (const auto field : fields) {
                double ignored;
                try {
                    ignored = parse_double_field(field, line_no);
                    (void)ignored;
                } catch (const ParseError&) {
                    header = true;
                    break;
                }
            }
            first_record = false;
            if (header) continue;
        }
        if (ds.dim == 0 && ds.points.empty()) {
            ds.dim = fields.size();
        } else if (fields.size() != ds.dim) {
            throw DimensionMismatch("line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(ds.dim) + " fields, got " +
                                    std::to_string(fields.size()));
        }
        Point p;
        p.reserve(fields.size());
        for (const auto field : fields) p.push_back(parse_double_field(field, line_no));
        ds.points.push_back(std::move(p));
    }
    return ds;
}

void save_csv(const DataSet& ds, const std::filesystem::path& path) {
    std::string out;
    out.reserve(ds.points.size() * 16);
    for (const Point& p : ds.points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i > 0) out += ',';
            out += format_double(p[i]);
        }
        out += '\n';
    }
    atomic_write_file(path, out);
}

} // namespace sominit
