#pragma once

#include "gspec/graph.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gspec {

/// Eigenvalues with |value| below this count as zero.
inline constexpr double kZeroEigenvalueTolerance = 1e-8;

enum class RepresentationKind { Adjacency, Laplacian, NormalizedLaplacian };

/// "A", "L", "Lrw".
std::string to_string(RepresentationKind kind);
/// Accepts "A", "L", "Lrw" (case-insensitive). Throws std::invalid_argument.
RepresentationKind parse_representation_kind(std::string_view text);

/// Thrown when the eigensolver hits its sweep cap.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& matrix_id, double off_norm, std::size_t sweeps);
    double off_norm() const { return off_norm_; }

private:
    double off_norm_;
};

struct SymMatrix {
    RepresentationKind kind = RepresentationKind::Adjacency;
    Eigen::MatrixXd entries;
    /// True for NormalizedLaplacian: entries hold L_sym = D^-1/2 L D^-1/2,
    /// which is similar to L_rw = D^-1 L and has the same eigenvalues.
    bool symmetric_surrogate = false;
};

/// A, D - A, or L_sym. NormalizedLaplacian throws std::domain_error when the
/// graph has an isolated vertex (d_min == 0).
SymMatrix build_matrix(const Graph& g, RepresentationKind kind);

/// Ascending eigenvalues with orthonormal eigenvectors in matching columns.
struct EigenPairs {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;
    std::size_t sweeps = 0;
};

struct JacobiOptions {
    /// Stop when the off-diagonal Frobenius norm is at most this times ||M||_F.
    double relative_tolerance = 1e-12;
    std::size_t max_sweeps = 100;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Rotations are applied in row-major (p, q) order, so the result is a pure
/// function of the input. Equal eigenvalues keep the order of the diagonal
/// positions they converged on. Throws ConvergenceError (naming `matrix_id`)
/// when the sweep cap is reached.
EigenPairs eig_sym(const Eigen::MatrixXd& m, const JacobiOptions& options = {}, const std::string& matrix_id = "matrix");

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool contains(double x, double tol = 0.0) const { return x >= lo - tol && x <= hi + tol; }
};

/// Gershgorin support: A -> [-d_max, d_max], L -> [0, 2 d_max], L_rw -> [0, 2].
Interval spectral_support(RepresentationKind kind, double d_max);

struct Spectrum {
    RepresentationKind kind = RepresentationKind::Adjacency;
    /// Adjacency: descending. Laplacians: ascending.
    std::vector<double> values;
    Interval support;
    double support_length() const { return support.length(); }
    std::size_t size() const { return values.size(); }
};

/// Eigenpairs reordered into the kind's convention. For NormalizedLaplacian
/// the vectors are the L_rw eigenvectors D^-1/2 v (not unit length).
struct OrderedEigenbasis {
    RepresentationKind kind = RepresentationKind::Adjacency;
    std::vector<double> values;
    Eigen::MatrixXd vectors;
};

OrderedEigenbasis ordered_eigenbasis(const Graph& g, RepresentationKind kind);

Spectrum spectrum(const Graph& g, RepresentationKind kind);

/// Gaps between consecutive eigenvalues in convention order divided by the
/// support length; n - 1 non-negative entries. Entry i (0-based) is gap i+1.
std::vector<double> normalized_eigengaps(const Spectrum& s);

}  // namespace gspec
