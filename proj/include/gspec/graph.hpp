#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gspec {

/// Absolute tolerance for comparing degrees (row sums of floating-point weights).
inline constexpr double kDegreeTolerance = 1e-12;

/**
 * Undirected simple weighted graph.
 *
 * Weights live in a dense symmetric matrix with zero diagonal and entries in
 * [0, 1]. A Graph is immutable once constructed; use GraphBuilder or the
 * generators to create one.
 */
class Graph {
public:
    Graph() = default;

    /// Takes ownership of a weight matrix. Throws std::invalid_argument if the
    /// matrix is not square, not exactly symmetric, has a nonzero diagonal or
    /// entries outside [0, 1].
    explicit Graph(Eigen::MatrixXd weights, int index_base = 0, bool rescaled = false);

    /// Graph on n isolated vertices.
    static Graph empty(std::size_t n);

    std::size_t size() const { return static_cast<std::size_t>(weights_.rows()); }
    double weight(std::size_t i, std::size_t j) const { return weights_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); }
    const Eigen::MatrixXd& weights() const { return weights_; }
    std::size_t edge_count() const;

    /// 0 or 1; the numbering used when reporting vertex ids to users.
    int index_base() const { return index_base_; }
    /// True when the input carried weights above 1 and was divided by the maximum weight.
    bool rescaled() const { return rescaled_; }

    /// Same weights, different reporting base.
    Graph with_index_base(int base) const;

private:
    Eigen::MatrixXd weights_{0, 0};
    int index_base_ = 0;
    bool rescaled_ = false;
};

/// Accumulates edges, rejecting self-loops and duplicates, then builds a Graph.
/// Weights above 1 are rescaled by the maximum weight when building.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n, int index_base = 0);

    /// Throws std::invalid_argument on self-loop, out-of-range id, non-positive
    /// weight or an edge that already exists.
    void add_edge(std::size_t u, std::size_t v, double w = 1.0);
    bool has_edge(std::size_t u, std::size_t v) const;
    double edge_weight(std::size_t u, std::size_t v) const;
    std::size_t size() const { return n_; }

    Graph build() const;

private:
    std::size_t n_;
    int index_base_;
    Eigen::MatrixXd weights_;
};

struct DegreeSummary {
    std::vector<double> degrees;
    double d_min = 0.0;
    double d_max = 0.0;
};

DegreeSummary degree_summary(const Graph& g);

struct ComponentLabeling {
    std::vector<std::size_t> labels;
    std::size_t component_count = 0;
};

/// Breadth-first labelling over nonzero weights. Component ids are assigned in
/// order of the lowest vertex id they contain.
ComponentLabeling connected_components(const Graph& g);

/// Degree class C_{j,k}: j = d_min, k = d_max.
struct ClassTag {
    long j = 0;
    long k = 0;
    friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

/// Absent when either degree extreme is not an integer (weighted graphs).
std::optional<ClassTag> class_tag(const DegreeSummary& ds);

/// Block-diagonal union; vertices of `a` come first. Keeps `a`'s index base
/// unless `a` is empty.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Returns d when every vertex has degree d (within kDegreeTolerance).
std::optional<double> is_d_regular(const Graph& g);

// Generators. All produce unit weights.

/// Star on n vertices, vertex 0 is the hub.
Graph gen_star(std::size_t n);
/// Complete graph K_k.
Graph gen_complete(std::size_t k);
/// K_k followed by nine disjoint copies of K_2 (n = k + 18).
Graph gen_graph_c(std::size_t k);
/// Bipartite graph on 34 vertices with degree multiset {1, 16^16, 17^17}.
///
/// Vertices 0..16 form part X, 17..33 part Y. Vertex 0 is joined only to
/// vertex 17; every other X vertex is joined to all of Y. Other wirings give
/// the same degree sequence; this one is fixed.
Graph gen_bipartite_b();

}  // namespace gspec
