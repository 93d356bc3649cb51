#pragma once

// Point cloud and mesh file formats. Every reader rejects NaN/Inf coordinates.
//
// Clouds: .ply (ascii or binary_little_endian), .csv (x,y,z per line, mm).
// Meshes: .obj, .ply.

#include "occreg/geometry.hpp"
#include "occreg/mesh.hpp"

#include <filesystem>
#include <stdexcept>

namespace occreg::io {

/// Malformed or unreadable input file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class PlyEncoding { ascii, binary_little_endian };

PointCloud read_cloud(const std::filesystem::path& path);
void write_cloud(const std::filesystem::path& path, const PointCloud& cloud,
                 PlyEncoding encoding = PlyEncoding::binary_little_endian);

TriangleMesh read_mesh(const std::filesystem::path& path);
void write_mesh(const std::filesystem::path& path, const TriangleMesh& mesh,
                PlyEncoding encoding = PlyEncoding::binary_little_endian);

/// Shortest round-trip decimal text for a double.
std::string format_double(double v);

}  // namespace occreg::io
