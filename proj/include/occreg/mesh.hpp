#pragma once

#include "occreg/geometry.hpp"

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

namespace occreg {

using Face = std::array<std::uint32_t, 3>;

/// Triangle mesh with counter-clockwise (outward) winding.
struct TriangleMesh {
    std::vector<Point3> vertices;
    std::vector<Face> faces;

    bool empty() const { return faces.empty(); }
    PointCloud vertex_cloud(CloudRole role = CloudRole::unspecified) const { return {vertices, role}; }
};

struct Aabb {
    Point3 lo = Point3::Constant(std::numeric_limits<double>::infinity());
    Point3 hi = Point3::Constant(-std::numeric_limits<double>::infinity());

    void extend(const Point3& p) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    Point3 center() const { return 0.5 * (lo + hi); }
    Point3 extent() const { return hi - lo; }
};

Aabb bounding_box(std::span<const Point3> points);

/// Radius of the smallest sphere centered at `center` enclosing every point.
double bounding_radius(std::span<const Point3> points, const Point3& center);

/// Unnormalized face normals; length equals twice the triangle area.
std::vector<Point3> face_normals(const TriangleMesh& mesh);

/// Area-weighted unit vertex normals. Isolated vertices get a zero normal.
/// Throws InvalidInput when every face is degenerate.
std::vector<Point3> vertex_normals(const TriangleMesh& mesh);

struct EdgeAudit {
    std::size_t edges = 0;
    std::size_t boundary_edges = 0;     // used by one face
    std::size_t nonmanifold_edges = 0;  // used by three or more faces
    std::size_t inconsistent_edges = 0; // same directed edge used twice
};

EdgeAudit audit_edges(const TriangleMesh& mesh);

/// Closed 2-manifold edge structure with consistent orientation.
bool is_watertight(const TriangleMesh& mesh);

double mesh_volume(const TriangleMesh& mesh);

TriangleMesh apply_transform(const RigidTransform& t, const TriangleMesh& mesh);

/// `count` points uniform by area over the surface. Throws InvalidInput when the
/// mesh has no area.
std::vector<Point3> sample_surface(const TriangleMesh& mesh, std::size_t count, std::uint64_t seed);

/// Geodesic sphere by recursive subdivision of an icosahedron.
TriangleMesh make_icosphere(int subdivisions, double radius = 1.0);

/// Axis-aligned box [lo, hi] as 12 outward triangles.
TriangleMesh make_box(const Point3& lo, const Point3& hi);

/// Vertices whose outward normal has a positive component along `anterior_axis`.
std::vector<std::size_t> anterior_vertex_indices(const TriangleMesh& mesh, const Point3& anterior_axis);
PointCloud crop_posterior(const TriangleMesh& mesh, const Point3& anterior_axis);

/// Camera geometry around a model: a hemisphere of radius `radius` about `center`,
/// pole along `anterior_axis`.
struct ViewSphere {
    Point3 center = Point3::Zero();
    double radius = 1.0;
    Point3 anterior_axis = Point3::UnitZ();

    /// Azimuth/elevation in radians; elevation pi/2 is the pole.
    Point3 viewpoint(double azimuth, double elevation) const;
    /// Uniform by area over the anterior hemisphere.
    Point3 random_viewpoint(std::uint64_t seed) const;
    /// Uniform by area over the whole sphere.
    Point3 random_viewpoint_full(std::uint64_t seed) const;
    /// Five fixed test viewpoints: azimuth 0, 72, ..., 288 degrees at 45 degrees elevation.
    std::array<Point3, 5> test_viewpoints() const;
};

/// Hemisphere at twice the bounding-sphere radius of `mesh` about its vertex centroid.
ViewSphere view_sphere_for(const TriangleMesh& mesh, const Point3& anterior_axis);

}  // namespace occreg
