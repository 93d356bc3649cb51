#pragma once

// Point cloud and rigid-motion primitives.

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace occreg {

using Point3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Raised when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class CloudRole { source, partial_target, completed_target, ground_truth, unspecified };

struct PointCloud {
    std::vector<Point3> points;
    CloudRole role = CloudRole::unspecified;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

/// Throws InvalidInput when any coordinate is NaN or infinite.
void require_finite(std::span<const Point3> points, const char* what);

Point3 centroid(std::span<const Point3> points);

/// Proper rotation matrix (orthonormal, det +1).
class Rotation {
public:
    Rotation() : m_(Mat3::Identity()) {}

    /// Validates orthonormality and det = +1 within `tol`.
    static Rotation from_matrix(const Mat3& m, double tol = 1e-9);
    /// Rodrigues map; the zero vector gives the identity.
    static Rotation from_axis_angle(const Point3& axis_angle);
    static Rotation about_z(double angle);
    static Rotation identity() { return {}; }

    const Mat3& matrix() const { return m_; }
    Point3 operator*(const Point3& p) const { return m_ * p; }
    Rotation operator*(const Rotation& o) const;
    Rotation inverse() const;
    Point3 axis_angle() const;
    /// Geodesic distance to `o` in radians.
    double angle_to(const Rotation& o) const;

private:
    explicit Rotation(const Mat3& m) : m_(m) {}
    Mat3 m_;
};

/// p' = R p + t, mapping points in mm.
struct RigidTransform {
    Rotation rotation;
    Point3 translation = Point3::Zero();

    static RigidTransform identity() { return {}; }

    Point3 apply(const Point3& p) const { return rotation * p + translation; }
    RigidTransform inverse() const;
    Eigen::Matrix4d matrix() const;
    static RigidTransform from_matrix(const Eigen::Matrix4d& m);
};

PointCloud apply_transform(const RigidTransform& t, const PointCloud& cloud);

/// (a ∘ b)(p) = a(b(p)).
RigidTransform compose(const RigidTransform& a, const RigidTransform& b);

enum class RotationMode { none, z_axis, so3 };

RotationMode parse_rotation_mode(const std::string& s);
std::string to_string(RotationMode m);

/// none: identity. z_axis: angle uniform in [lo, hi] about +z.
/// so3: axis uniform on the sphere, angle uniform in [lo, hi].
Rotation random_rotation(RotationMode mode, double lo, double hi, std::uint64_t seed);

/// Farthest-point sampling to `count` points, starting from a seed-chosen point.
/// Returned indices are ascending.
std::vector<std::size_t> farthest_point_indices(std::span<const Point3> points, std::size_t count,
                                                std::uint64_t seed);
PointCloud downsample(const PointCloud& cloud, std::size_t count, std::uint64_t seed);

/// Indices of the `count` points nearest to `viewpoint`, ascending; ties by index.
std::vector<std::size_t> nearest_to_viewpoint(std::span<const Point3> points, const Point3& viewpoint,
                                              std::size_t count);
PointCloud partial_view(const PointCloud& cloud, const Point3& viewpoint, std::size_t count);

struct Neighbor {
    std::size_t index = 0;
    double distance = 0.0;
};

/// Balanced k-d tree. Queries are exact; equal distances resolve to the lowest index.
class NnIndex {
public:
    NnIndex() = default;
    explicit NnIndex(std::vector<Point3> points);

    Neighbor nearest(const Point3& q) const;
    /// Squared distance only; same tie rule.
    std::pair<std::size_t, double> nearest_sq(const Point3& q) const;
    /// `k` nearest, sorted by (distance, index).
    std::vector<Neighbor> knn(const Point3& q, std::size_t k) const;

    const std::vector<Point3>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

private:
    struct Node {
        std::uint32_t begin, end;  // range into order_
        std::int32_t left = -1, right = -1;
        int axis = -1;  // -1 for leaves
        double split = 0.0;
    };

    std::int32_t build(std::uint32_t begin, std::uint32_t end);

    std::vector<Point3> points_;
    std::vector<std::uint32_t> order_;
    std::vector<Node> nodes_;
};

/// Exhaustive scan with the same tie rule as NnIndex.
Neighbor brute_force_nearest(std::span<const Point3> points, const Point3& q);

}  // namespace occreg
