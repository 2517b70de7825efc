#pragma once

#include "gspec/graph.hpp"
#include "gspec/spectra.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gspec {

/// Slack allowed when checking a difference against a closed-form bound.
inline constexpr double kBoundSlack = 1e-9;

/// Affine maps between representation spectra:
///   F1: mu -> d1 - mu        (A onto L)
///   F2: lambda -> c1 lambda  (L onto L_rw)
///   F3: mu -> 1 - c2 mu      (A onto L_rw)
enum class Transform { F1, F2, F3 };

std::string to_string(Transform t);
Transform parse_transform(std::string_view text);

/// Matrix pairs compared by the bounds. The first matrix is the transformed
/// source, the second the target.
enum class MatrixPair { A_L, L_Lrw, A_Lrw };

std::string to_string(MatrixPair p);
/// Accepts "A_L", "L_Lrw", "A_Lrw" (also "AL", "LLrw", "ALrw"; case-insensitive).
MatrixPair parse_matrix_pair(std::string_view text);
Transform transform_for(MatrixPair p);
RepresentationKind source_kind(MatrixPair p);
RepresentationKind target_kind(MatrixPair p);

/// d1 = d2 = (d_max + d_min) / 2 and c1 = c2 = 2 / (d_max + d_min).
struct TransformParams {
    double d1 = 0.0;
    double d2 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Throws std::domain_error when d_max + d_min == 0 (edgeless graph).
TransformParams transform_params(double d_min, double d_max);
TransformParams transform_params(const DegreeSummary& ds);

double apply_transform(Transform t, const TransformParams& p, double x);

/// Applies t element-wise. F1/F3 need an Adjacency spectrum, F2 a Laplacian
/// one; anything else throws std::invalid_argument. The output stays
/// index-aligned with the input, so a descending A spectrum maps to an
/// ascending list that pairs with the target's ascending spectrum.
std::vector<double> apply_transform(Transform t, const TransformParams& p, const Spectrum& s);

/// Image of the source kind's spectral support under t.
Interval mapped_support(Transform t, double d_min, double d_max);

/// Eigenvalue-difference bounds. The L_rw bounds are absent when d_min == 0.
struct BoundSet {
    double e_AL = 0.0;
    std::optional<double> e_LLrw;
    std::optional<double> e_ALrw;
    /// Alternative A/L_rw bound; 2 when d_max > 5 d_min (degenerate c2 = 0 map).
    std::optional<double> e_prime_ALrw;
};

BoundSet eigenvalue_bound_set(double d_min, double d_max);
BoundSet eigenvalue_bound_set(const DegreeSummary& ds);

/// Normalised-eigengap bounds.
struct GapBoundSet {
    double g_AL = 0.0;
    std::optional<double> g_LLrw;
    std::optional<double> g_prime_LLrw;
    std::optional<double> g_ALrw;
    std::optional<double> g_prime_ALrw;
};

/// Throws std::domain_error when d_max == 0.
GapBoundSet gap_bound_set(double d_min, double d_max);
GapBoundSet gap_bound_set(const DegreeSummary& ds);

/// Bound used by pair_differences for `pair` (never the primed A/L_rw bound).
std::optional<double> eigenvalue_bound(const BoundSet& b, MatrixPair pair);
std::optional<double> gap_bound(const GapBoundSet& b, MatrixPair pair);
std::optional<double> primed_gap_bound(const GapBoundSet& b, MatrixPair pair);

/// Orderings of (e_AL, e_LLrw, e_ALrw) as a function of d_min + d_max.
enum class Region { Regular, Bold, Underlined, Teletype, Italic, Normal };

std::string to_string(Region r);

struct RegionReport {
    Region label = Region::Regular;
    /// e.g. "e(L,Lrw) < e(A,Lrw) < e(A,L)".
    std::string ordering;
};

/// Throws std::invalid_argument unless 0 <= d_min <= d_max.
RegionReport classify_region(long d_min, long d_max);

/// Per-index comparison of a transformed source spectrum with its target.
/// delta_i = target_i - transformed_i.
struct PairDifferences {
    MatrixPair pair = MatrixPair::A_L;
    std::vector<double> source;
    std::vector<double> transformed;
    std::vector<double> target;
    std::vector<double> deltas;
    double bound = 0.0;
    double max_abs_delta = 0.0;
    /// max |delta_i| <= bound + kBoundSlack.
    bool verified = false;
};

PairDifferences pair_differences(MatrixPair pair, const Spectrum& source, const Spectrum& target,
                                 const DegreeSummary& ds);
/// Computes both spectra. L_rw pairs throw std::domain_error when d_min == 0.
PairDifferences pair_differences(MatrixPair pair, const Graph& g);

struct CrossoverReport {
    /// 1-based eigenvalue positions i such that pairs i and i+1 cross maximally.
    std::vector<std::size_t> indices;
    double tolerance = 0.0;
};

/// Reports i when |d_i| and |d_{i+1}| both reach bound - tol with opposite
/// signs. A zero bound yields an empty report. Throws unless tol > 0.
CrossoverReport detect_maximal_crossover(std::span<const double> diffs, double bound, double tol = 1e-6);

/// Per-gap comparison of normalised eigengaps (gap i is entry i-1).
struct GapDifferences {
    MatrixPair pair = MatrixPair::A_L;
    std::vector<double> source_gaps;
    std::vector<double> target_gaps;
    /// |source_gap_i - target_gap_i|, each normalised by its own support length.
    std::vector<double> differences;
    double bound = 0.0;
    double max_difference = 0.0;
    /// For L_Lrw and A_Lrw: (1/2) |(f(x_{i+1}) - f(x_i)) - (eta_{i+1} - eta_i)|.
    std::optional<std::vector<double>> primed_differences;
    std::optional<double> primed_bound;
    std::optional<double> max_primed_difference;
    bool verified = false;
};

GapDifferences gap_differences(MatrixPair pair, const Spectrum& source, const Spectrum& target,
                               const DegreeSummary& ds);
GapDifferences gap_differences(MatrixPair pair, const Graph& g);

/// Checks d1 - d_max <= (d1 - mu_i) - lambda_i <= d1 - d_min for every i.
struct WeylReport {
    Interval interval;
    std::vector<double> differences;
    std::size_t touching_endpoint = 0;
    bool holds = false;
};

WeylReport weyl_check(const Graph& g, double endpoint_tol = 1e-8);

/// One cell of the bound table.
struct BoundTableCell {
    long d_min = 0;
    long d_max = 0;
    BoundSet bounds;
    Region region = Region::Regular;
};

/// Cells with 0 <= d_min <= min(d_max, d_min_max) and 1 <= d_max <= d_max_max,
/// ordered by d_max then d_min.
std::vector<BoundTableCell> bound_table(long d_min_max, long d_max_max);

/// Newton interpolation of a map taking one spectrum onto another.
struct PolyMapReport {
    /// Interpolation nodes (one per cluster of coincident inputs), ascending.
    std::vector<double> nodes;
    /// Newton coefficients; absent when unstable.
    std::optional<std::vector<double>> coefficients;
    double max_residual = 0.0;
    double min_input_gap = 0.0;
    double output_span_over_degenerate_inputs = 0.0;
    bool unstable = false;

    double evaluate(double x) const;
};

/// Pairs src.values[i] with dst.values[i]. Inputs closer than merge_tol are
/// merged; if their targets differ by more than merge_tol the map is reported
/// unstable. Throws std::invalid_argument on length mismatch.
PolyMapReport polynomial_spectrum_map(const Spectrum& src, const Spectrum& dst, double merge_tol);

}  // namespace gspec
