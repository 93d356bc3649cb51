#pragma once

// Rotation-equivariant point encoder and rotation-invariant occupancy decoder.
//
// A VectorFeature over n entities is stored as a C x 3n matrix: entity i owns
// columns [3i, 3i+3) and each row of that block is one channel's 3-vector.
// Rotating the features by R means right-multiplying every block by R^T, which
// commutes with any left-multiplication by a channel-mixing matrix.

#include "occreg/geometry.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace occreg::nn {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using VectorFeature = Eigen::MatrixXd;
using ScalarFeature = Eigen::VectorXd;

enum class EncoderKind : std::uint32_t { vector_neuron = 0, baseline = 1 };

std::string to_string(EncoderKind k);
EncoderKind parse_encoder_kind(const std::string& s);

struct Architecture {
    EncoderKind encoder = EncoderKind::vector_neuron;
    int channels = 16;       // per-point vector channels after the lift
    int latent = 32;         // channels of the pooled latent code
    int width = 128;         // decoder hidden width
    int depth = 4;           // decoder hidden layers
    int knn = 16;            // neighbors for the edge-mean input channel
    double slope = 0.2;      // leaky slope in encoder and decoder

    /// Output channels of the five encoder layers (lift + 4 blocks).
    std::vector<int> encoder_channels() const;
    int encoder_inputs() const;   // 2 vector channels, or 6 scalars for the baseline
    int decoder_inputs() const;

    bool operator==(const Architecture&) const = default;
};

/// How raw millimeter clouds map into the network frame:
/// x_norm = (x_mm - centroid(partial)) / scale.
struct Canonicalization {
    double scale = 1.0;  // mm per normalized unit

    bool operator==(const Canonicalization&) const = default;
};

struct NetworkParams {
    Architecture arch;
    std::vector<Matrix> tensors;
    Canonicalization canon;
    double threshold = 0.4;

    std::size_t parameter_count() const;
    bool all_finite() const;
};

/// Tensor names and shapes, in storage order, for an architecture.
struct TensorSpec {
    std::string name;
    int rows, cols;
};
std::vector<TensorSpec> tensor_layout(const Architecture& arch);

/// Uniform(-b, b) weights with b = sqrt(6 / fan_in); biases zero.
NetworkParams init_params(const Architecture& arch, std::uint64_t seed);

/// Zero-filled tensors matching `like` (used for gradients and optimizer moments).
std::vector<Matrix> zeros_like(const std::vector<Matrix>& like);

// --- Layers --------------------------------------------------------------------

VectorFeature vn_linear(const Matrix& w, const VectorFeature& v);

/// q = U v and k = K v per channel and entity. Keeps q when <q,k> >= 0, otherwise
/// removes its component along k; the result is blended as slope*q + (1-slope)*that.
/// A zero direction k passes q through.
VectorFeature vn_leaky_relu(const VectorFeature& v, const Matrix& u, const Matrix& k, double slope);

/// Channel-wise mean over entities. Throws on an empty list.
VectorFeature vn_mean_pool(std::span<const VectorFeature> per_entity);
/// Same reduction over the entity blocks of one C x 3n matrix.
VectorFeature vn_mean_pool(const VectorFeature& stacked);

/// Inner products of the channels of v (C x 3) with the frame F = frame_weights * v,
/// flattened row-major to C*3 scalars.
ScalarFeature vn_invariant(const VectorFeature& v, const Matrix& frame_weights);

/// Rotates every entity block of a feature: block * R^T.
VectorFeature rotate_feature(const VectorFeature& v, const Mat3& r);

// --- Model ---------------------------------------------------------------------

struct LatentCode {
    /// vector_neuron: latent x 3 vector channels; baseline: (3*latent) x 1 scalars.
    Matrix z;
};

/// Per-point inputs: the point and the mean offset to its k nearest neighbors.
/// Returned as 2 x 3n (vector) or 6 x n (baseline) to match the encoder.
Matrix encoder_input(std::span<const Point3> points, const Architecture& arch);

/// Cached activations of one encoder pass, consumed by backpropagation.
struct EncoderTrace {
    std::vector<Matrix> inputs;  // input of each layer (inputs[0] is the lifted cloud)
    std::vector<Matrix> q, k;    // pre-activations (k unused by the baseline)
    Matrix output;               // last layer activations
    std::size_t entities = 0;
    LatentCode latent;
};

EncoderTrace encode_traced(std::span<const Point3> points, const NetworkParams& params);

/// Points must already be in the normalized frame. Throws on an empty cloud.
LatentCode encode(std::span<const Point3> points, const NetworkParams& params);

struct DecoderTrace {
    Matrix frame;                  // vector_neuron only, 3 x 3
    Matrix input;                  // decoder_inputs x Q
    std::vector<Matrix> pre, act;  // hidden pre-activations and activations
    Vector logits;
    Vector probs;
};

DecoderTrace decode_traced(const Eigen::Matrix3Xd& queries, const LatentCode& latent, const NetworkParams& params);

/// Occupancy probabilities for a batch of normalized query points. Each column is
/// evaluated with the same arithmetic regardless of batch size, so batched and
/// single-query results are bit-identical.
Vector decode(const Eigen::Matrix3Xd& queries, const LatentCode& latent, const NetworkParams& params);
double decode_occupancy(const Point3& query, const LatentCode& latent, const NetworkParams& params);

/// Index of the first tensor of decoder layer `i` (0..depth; depth is the head).
std::size_t decoder_tensor_index(const Architecture& arch, int layer);
std::size_t frame_tensor_index(const Architecture& arch);

// --- Serialization ---------------------------------------------------------------

void save_params(const std::filesystem::path& path, const NetworkParams& params);
NetworkParams load_params(const std::filesystem::path& path);

}  // namespace occreg::nn
