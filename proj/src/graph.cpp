#include "gspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

namespace gspec {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

Graph::Graph(Eigen::MatrixXd weights, int index_base, bool rescaled)
    : weights_(std::move(weights)), index_base_(index_base), rescaled_(rescaled) {
    if (weights_.rows() != weights_.cols()) {
        throw std::invalid_argument("graph weight matrix must be square");
    }
    if (index_base_ != 0 && index_base_ != 1) {
        throw std::invalid_argument("index base must be 0 or 1");
    }
    const Eigen::Index n = weights_.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        if (weights_(i, i) != 0.0) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        }
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double w = weights_(i, j);
            if (w != weights_(j, i)) {
                throw std::invalid_argument("weight matrix is not symmetric at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
            }
            if (!(w >= 0.0 && w <= 1.0)) {
                throw std::invalid_argument("edge weight outside [0, 1] at (" + std::to_string(i) + ", " +
                                            std::to_string(j) + ")");
            }
        }
    }
}

Graph Graph::empty(std::size_t n) { return Graph(Eigen::MatrixXd::Zero(idx(n), idx(n))); }

std::size_t Graph::edge_count() const {
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < weights_.rows(); ++i) {
        for (Eigen::Index j = i + 1; j < weights_.cols(); ++j) {
            if (weights_(i, j) != 0.0) ++count;
        }
    }
    return count;
}

Graph Graph::with_index_base(int base) const { return Graph(weights_, base, rescaled_); }

GraphBuilder::GraphBuilder(std::size_t n, int index_base)
    : n_(n), index_base_(index_base), weights_(Eigen::MatrixXd::Zero(idx(n), idx(n))) {}

void GraphBuilder::add_edge(std::size_t u, std::size_t v, double w) {
    if (u >= n_ || v >= n_) {
        throw std::invalid_argument("vertex id out of range (n = " + std::to_string(n_) + ")");
    }
    if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u + static_cast<std::size_t>(index_base_)));
    }
    if (!(w > 0.0) || !std::isfinite(w)) {
        throw std::invalid_argument("edge weight must be positive and finite");
    }
    if (has_edge(u, v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(u + static_cast<std::size_t>(index_base_)) + " " +
                                    std::to_string(v + static_cast<std::size_t>(index_base_)));
    }
    weights_(idx(u), idx(v)) = w;
    weights_(idx(v), idx(u)) = w;
}

bool GraphBuilder::has_edge(std::size_t u, std::size_t v) const { return edge_weight(u, v) != 0.0; }

double GraphBuilder::edge_weight(std::size_t u, std::size_t v) const { return weights_(idx(u), idx(v)); }

Graph GraphBuilder::build() const {
    const double max_weight = weights_.size() == 0 ? 0.0 : weights_.maxCoeff();
    if (max_weight > 1.0) {
        return Graph(weights_ / max_weight, index_base_, true);
    }
    return Graph(weights_, index_base_, false);
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary ds;
    ds.degrees.resize(g.size());
    const Eigen::VectorXd sums = g.weights().rowwise().sum();
    for (std::size_t i = 0; i < g.size(); ++i) ds.degrees[i] = sums(idx(i));
    if (!ds.degrees.empty()) {
        const auto [lo, hi] = std::minmax_element(ds.degrees.begin(), ds.degrees.end());
        ds.d_min = *lo;
        ds.d_max = *hi;
    }
    return ds;
}

ComponentLabeling connected_components(const Graph& g) {
    const std::size_t n = g.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    ComponentLabeling out;
    out.labels.assign(n, unvisited);
    std::queue<std::size_t> frontier;
    for (std::size_t start = 0; start < n; ++start) {
        if (out.labels[start] != unvisited) continue;
        const std::size_t id = out.component_count++;
        out.labels[start] = id;
        frontier.push(start);
        while (!frontier.empty()) {
            const std::size_t u = frontier.front();
            frontier.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (g.weight(u, v) != 0.0 && out.labels[v] == unvisited) {
                    out.labels[v] = id;
                    frontier.push(v);
                }
            }
        }
    }
    return out;
}

std::optional<ClassTag> class_tag(const DegreeSummary& ds) {
    const double j = std::round(ds.d_min);
    const double k = std::round(ds.d_max);
    if (std::abs(j - ds.d_min) > kDegreeTolerance || std::abs(k - ds.d_max) > kDegreeTolerance) {
        return std::nullopt;
    }
    return ClassTag{static_cast<long>(j), static_cast<long>(k)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const Eigen::Index na = idx(a.size());
    const Eigen::Index nb = idx(b.size());
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(na + nb, na + nb);
    w.topLeftCorner(na, na) = a.weights();
    w.bottomRightCorner(nb, nb) = b.weights();
    const int base = a.size() == 0 ? b.index_base() : a.index_base();
    return Graph(std::move(w), base, a.rescaled() || b.rescaled());
}

std::optional<double> is_d_regular(const Graph& g) {
    if (g.size() == 0) return std::nullopt;
    const DegreeSummary ds = degree_summary(g);
    if (ds.d_max - ds.d_min <= kDegreeTolerance) return ds.d_max;
    return std::nullopt;
}

}  // namespace gspec
