#include "gspec/spectra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace gspec {

std::string to_string(RepresentationKind kind) {
    switch (kind) {
    case RepresentationKind::Adjacency:
        return "A";
    case RepresentationKind::Laplacian:
        return "L";
    case RepresentationKind::NormalizedLaplacian:
        return "Lrw";
    }
    return "?";
}

RepresentationKind parse_representation_kind(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "a" || s == "adjacency") return RepresentationKind::Adjacency;
    if (s == "l" || s == "laplacian") return RepresentationKind::Laplacian;
    if (s == "lrw" || s == "normalized" || s == "normalizedlaplacian") return RepresentationKind::NormalizedLaplacian;
    throw std::invalid_argument("unknown representation kind '" + std::string(text) + "' (expected A, L or Lrw)");
}

SymMatrix build_matrix(const Graph& g, RepresentationKind kind) {
    SymMatrix out;
    out.kind = kind;
    const Eigen::MatrixXd& a = g.weights();
    const Eigen::VectorXd degrees = a.rowwise().sum();
    switch (kind) {
    case RepresentationKind::Adjacency:
        out.entries = a;
        break;
    case RepresentationKind::Laplacian:
        out.entries = -a;
        out.entries.diagonal() = degrees;
        break;
    case RepresentationKind::NormalizedLaplacian: {
        if (g.size() > 0 && degrees.minCoeff() <= 0.0) {
            throw std::domain_error("normalised Laplacian is undefined for graphs with isolated vertices (d_min = 0)");
        }
        const Eigen::VectorXd inv_sqrt = degrees.cwiseSqrt().cwiseInverse();
        const Eigen::Index n = a.rows();
        out.entries = Eigen::MatrixXd::Identity(n, n);
        // Entry-wise so that (i, j) and (j, i) are bit-identical.
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i + 1; j < n; ++j) {
                const double value = -a(i, j) * (inv_sqrt(i) * inv_sqrt(j));
                out.entries(i, j) = value;
                out.entries(j, i) = value;
            }
        }
        out.symmetric_surrogate = true;
        break;
    }
    }
    return out;
}

Interval spectral_support(RepresentationKind kind, double d_max) {
    if (d_max < 0.0) throw std::invalid_argument("spectral_support: d_max must be non-negative");
    switch (kind) {
    case RepresentationKind::Adjacency:
        return {-d_max, d_max};
    case RepresentationKind::Laplacian:
        return {0.0, 2.0 * d_max};
    case RepresentationKind::NormalizedLaplacian:
        return {0.0, 2.0};
    }
    return {};
}

OrderedEigenbasis ordered_eigenbasis(const Graph& g, RepresentationKind kind) {
    const SymMatrix m = build_matrix(g, kind);
    EigenPairs pairs = eig_sym(m.entries, {}, to_string(kind) + " matrix");
    const Eigen::Index n = pairs.values.size();

    OrderedEigenbasis out;
    out.kind = kind;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = kind == RepresentationKind::Adjacency ? n - 1 - k : k;
        out.values[static_cast<std::size_t>(k)] = pairs.values(src);
        out.vectors.col(k) = pairs.vectors.col(src);
    }
    if (kind == RepresentationKind::NormalizedLaplacian) {
        const Eigen::VectorXd inv_sqrt = g.weights().rowwise().sum().cwiseSqrt().cwiseInverse();
        out.vectors = inv_sqrt.asDiagonal() * out.vectors;
    }
    return out;
}

Spectrum spectrum(const Graph& g, RepresentationKind kind) {
    const SymMatrix m = build_matrix(g, kind);
    const EigenPairs pairs = eig_sym(m.entries, {}, to_string(kind) + " matrix");
    Spectrum s;
    s.kind = kind;
    s.values.assign(pairs.values.data(), pairs.values.data() + pairs.values.size());
    if (kind == RepresentationKind::Adjacency) std::reverse(s.values.begin(), s.values.end());
    s.support = spectral_support(kind, degree_summary(g).d_max);
    return s;
}

std::vector<double> normalized_eigengaps(const Spectrum& s) {
    if (s.values.size() < 2) throw std::invalid_argument("eigengaps need at least two eigenvalues");
    const double length = s.support_length();
    if (!(length > 0.0)) throw std::domain_error("eigengaps undefined for a zero-length spectral support");
    std::vector<double> gaps(s.values.size() - 1);
    for (std::size_t i = 0; i + 1 < s.values.size(); ++i) {
        const double gap = s.kind == RepresentationKind::Adjacency ? s.values[i] - s.values[i + 1]
                                                                   : s.values[i + 1] - s.values[i];
        gaps[i] = gap / length;
    }
    return gaps;
}

}  // namespace gspec
