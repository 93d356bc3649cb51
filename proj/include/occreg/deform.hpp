#pragma once

// Smooth, magnitude-bounded procedural deformations of a surface mesh built from
// Gaussian radial basis displacement fields.

#include "occreg/geometry.hpp"
#include "occreg/mesh.hpp"

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <vector>

namespace occreg::deform {

struct ControlPoint {
    Point3 center = Point3::Zero();
    Point3 displacement = Point3::Zero();
    double sigma = 1.0;  // mm
};

struct DeformField {
    std::vector<ControlPoint> controls;

    /// Sum over controls of d_j * exp(-|p - c_j|^2 / (2 sigma_j^2)).
    Point3 displacement_at(const Point3& p) const;
    Point3 apply(const Point3& p) const { return p + displacement_at(p); }
};

struct DeformConfig {
    double max_disp = 0.0;          // mm; 0 selects 15% of the bounding-sphere radius
    std::size_t count = 500;
    int min_controls = 1;
    int max_controls = 4;
    double sigma_lo = 0.35;         // fraction of the bounding-sphere radius
    double sigma_hi = 0.7;
    int max_attempts = 20;
    std::uint64_t seed = 1;
};

/// Raised when a field would invert a face, or no valid field is found.
class DeformationRejected : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Validates 1..8 controls, positive bandwidths and finite values.
void validate_field(const DeformField& field);

/// Displaces every vertex; connectivity unchanged. Throws DeformationRejected when
/// any face normal flips or collapses.
TriangleMesh generate_deformation(const TriangleMesh& mesh, const DeformField& field);

/// max_disp resolved against the mesh when the config leaves it at 0.
double resolved_max_disp(const TriangleMesh& mesh, const DeformConfig& cfg);

/// Random field: centers on surface vertices, random directions, magnitudes in
/// [0.3, 1] * max_disp, bandwidths in [sigma_lo, sigma_hi] * radius.
DeformField random_field(const TriangleMesh& mesh, const DeformConfig& cfg, std::uint64_t seed);

struct DeformedModel {
    std::size_t id = 0;
    std::uint64_t seed = 0;  // seed of the accepted attempt
    int attempts = 0;
    DeformField field;
    TriangleMesh mesh;
};

/// Draws fields from per-attempt seeds until one is flip free.
DeformedModel sample_deformation(const TriangleMesh& mesh, const DeformConfig& cfg, std::size_t id);

/// `cfg.count` deformations with per-item seeds derived from `cfg.seed`.
/// Throws InvalidInput unless the input mesh is watertight.
std::vector<DeformedModel> generate_dataset(const TriangleMesh& mesh, const DeformConfig& cfg);

/// JSON manifest with the config and every accepted field, enough to rebuild the
/// meshes exactly with generate_deformation.
void write_manifest(const std::filesystem::path& path, const DeformConfig& cfg, double max_disp,
                    const std::vector<DeformedModel>& models);

struct ManifestEntry {
    std::size_t id = 0;
    std::uint64_t seed = 0;
    int attempts = 0;
    DeformField field;
};

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

}  // namespace occreg::deform
