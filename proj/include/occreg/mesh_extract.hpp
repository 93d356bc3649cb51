#pragma once

// Multiresolution isosurface extraction over an occupancy oracle, followed by
// marching cubes on the finest lattice.

#include "occreg/geometry.hpp"
#include "occreg/mesh.hpp"
#include "occreg/vn_network.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace occreg::extract {

/// Batched occupancy oracle: one probability per column of the input.
using Oracle = std::function<Eigen::VectorXd(const Eigen::Matrix3Xd&)>;

struct ExtractConfig {
    int initial_res = 32;   // voxels per axis on the coarsest level
    int final_res = 128;    // voxels per axis on the finest level
    double threshold = 0.4; // values >= threshold count as inside
    Point3 lo = Point3::Constant(-0.55);
    Point3 hi = Point3::Constant(0.55);

    /// Throws InvalidInput unless final_res = initial_res * 2^k and 0 < threshold < 1.
    void validate() const;
    int levels() const;  // number of refinement steps k
};

using Voxel = std::array<int, 3>;  // min corner, in finest-lattice units

struct MiseGrid {
    int final_res = 0;
    Point3 lo, hi;
    /// Finest-lattice values, (final_res + 1)^3 entries; NaN where never evaluated.
    std::vector<double> values;
    /// Ambiguous voxels per level, coarsest first; the last entry is at final_res.
    std::vector<std::vector<Voxel>> active;
    std::size_t oracle_calls = 0;

    int points_per_axis() const { return final_res + 1; }
    std::size_t index(int i, int j, int k) const;
    Point3 position(int i, int j, int k) const;
    bool visited(int i, int j, int k) const;
    double cell_size() const { return (hi.x() - lo.x()) / final_res; }
};

/// Evaluates the coarse lattice, then repeatedly subdivides voxels whose corners
/// straddle the threshold. Voxels sharing a straddling face with an ambiguous
/// voxel are pulled in at every level so the final active set encloses the surface.
MiseGrid mise(const Oracle& oracle, const ExtractConfig& cfg);

/// Dense evaluation of the whole finest lattice (reference for tests).
MiseGrid dense_grid(const Oracle& oracle, const ExtractConfig& cfg);

/// Marching cubes over `voxels` of `grid` at `iso`. Vertices on shared lattice edges
/// are welded; faces are oriented with outward normals (toward lower values).
TriangleMesh marching_cubes(const MiseGrid& grid, std::span<const Voxel> voxels, double iso);
/// Convenience overload over the finest active level.
TriangleMesh marching_cubes(const MiseGrid& grid, double iso);

class EmptySurface : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Oracle backed by a trained network for one partial cloud in the normalized frame.
Oracle network_oracle(const nn::NetworkParams& params, const nn::LatentCode& latent);

/// Completes a millimeter partial cloud: canonicalize, encode, extract, and map the
/// mesh back to millimeters. Throws EmptySurface when nothing is extracted.
TriangleMesh complete_surface(std::span<const Point3> partial_mm, const nn::NetworkParams& params,
                              const ExtractConfig& cfg);

/// Extraction in the normalized frame with an arbitrary oracle, mapped to mm by
/// x_mm = x * scale + offset. Throws EmptySurface when nothing is extracted.
TriangleMesh extract_surface(const Oracle& oracle, const ExtractConfig& cfg, double scale = 1.0,
                             const Point3& offset = Point3::Zero());

}  // namespace occreg::extract
