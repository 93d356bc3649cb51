#pragma once

// Desk-scale organ phantom: an asymmetric, lobed ellipsoid with interior fiducials.

#include "occreg/geometry.hpp"
#include "occreg/mesh.hpp"
#include "occreg/metrics.hpp"

#include <cstdint>

namespace occreg::pipeline {

struct PhantomConfig {
    int subdivisions = 4;                 // icosphere level of the surface mesh
    Point3 semi_axes = Point3(45, 30, 20);  // mm, before lobes
    int fiducials = 60;
    double fiducial_margin = 3.0;         // mm from the nearest surface vertex
    std::uint64_t seed = 2024;
};

struct Phantom {
    TriangleMesh mesh;
    metrics::FiducialSet fiducials;  // ids 0..F-1, strictly inside
    Point3 anterior_axis = Point3::UnitZ();
};

/// Radial scaling of an icosphere by a smooth positive profile, so the result is
/// star-shaped, watertight and outward-oriented. Fiducials are drawn uniformly
/// inside with the configured margin.
Phantom make_phantom(const PhantomConfig& cfg);

/// Canonical network scale for a model: twice its bounding-sphere radius about the
/// vertex centroid, in mm per normalized unit.
double canonical_scale(const TriangleMesh& mesh);

}  // namespace occreg::pipeline
