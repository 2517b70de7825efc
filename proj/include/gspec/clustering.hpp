#pragma once

#include "gspec/graph.hpp"
#include "gspec/spectra.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gspec {

/// Row i holds vertex i's coordinates.
using Embedding = Eigen::MatrixXd;

/// Columns are the eigenvectors of the k "first" eigenvalues in the kind's
/// convention order: the k largest for Adjacency, the k smallest for the
/// Laplacians. NormalizedLaplacian uses true L_rw eigenvectors D^-1/2 v.
/// Rows are not normalised.
Embedding spectral_embed(const Graph& g, RepresentationKind kind, std::size_t k);

struct KMeansOptions {
    std::size_t restarts = 50;
    std::uint64_t seed = 42;
    std::size_t max_iterations = 300;
};

struct KMeansResult {
    /// Cluster ids renumbered by first appearance in vertex order.
    std::vector<int> labels;
    double inertia = 0.0;
    /// Inertia after each Lloyd iteration of the winning restart.
    std::vector<double> inertia_trace;
    std::size_t iterations = 0;
    std::size_t best_restart = 0;
    /// Ids (after renumbering these are the trailing ids) with no members.
    std::vector<int> empty_clusters;
};

/// Lloyd's algorithm with k-means++ seeding.
///
/// Restart r draws from std::mt19937_64 seeded with seed_seq{seed, r}. The
/// winner is the lowest inertia, then the lowest restart index. Throws
/// std::invalid_argument unless 1 <= k <= rows and restarts >= 1.
KMeansResult kmeans(const Embedding& points, std::size_t k, const KMeansOptions& options = {});

struct ClusteringResult {
    std::vector<int> labels;
    double inertia = 0.0;
    RepresentationKind kind = RepresentationKind::Adjacency;
    std::size_t k = 0;
    std::vector<int> empty_clusters;
};

ClusteringResult cluster(const Graph& g, RepresentationKind kind, std::size_t k, const KMeansOptions& options = {});

struct ClusterComparison {
    std::size_t misplaced = 0;
    /// 0-based vertex ids whose labels disagree under the best matching.
    std::vector<std::size_t> misplaced_ids;
};

/// Minimum number of disagreeing vertices over one-to-one matchings of the
/// label sets (Hungarian algorithm on the confusion matrix). Labels must be
/// non-negative. Throws std::invalid_argument on size mismatch.
ClusterComparison compare_clusterings(std::span<const int> a, std::span<const int> b);
ClusterComparison compare_clusterings(const ClusteringResult& a, const ClusteringResult& b);

}  // namespace gspec
