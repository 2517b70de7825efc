#include "gspec/clustering.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace gspec {

namespace {

// Portable uniform draw in [0, 1); std::uniform_real_distribution is not
// specified bit-for-bit across standard libraries.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double squared_distance(const Embedding& points, Eigen::Index row, const Eigen::MatrixXd& centers, Eigen::Index c) {
    return (points.row(row) - centers.row(c)).squaredNorm();
}

Eigen::MatrixXd seed_centers(const Embedding& points, std::size_t k, std::mt19937_64& rng) {
    const Eigen::Index n = points.rows();
    Eigen::MatrixXd centers(static_cast<Eigen::Index>(k), points.cols());
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    std::vector<double> nearest(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());

    auto take = [&](Eigen::Index idx, Eigen::Index slot) {
        chosen[static_cast<std::size_t>(idx)] = true;
        centers.row(slot) = points.row(idx);
        for (Eigen::Index i = 0; i < n; ++i) {
            nearest[static_cast<std::size_t>(i)] =
                std::min(nearest[static_cast<std::size_t>(i)], squared_distance(points, i, centers, slot));
        }
    };

    const auto first = std::min<Eigen::Index>(static_cast<Eigen::Index>(uniform01(rng) * static_cast<double>(n)), n - 1);
    take(first, 0);
    for (Eigen::Index slot = 1; slot < static_cast<Eigen::Index>(k); ++slot) {
        double total = 0.0;
        for (const double d : nearest) total += d;
        Eigen::Index pick = -1;
        if (total > 0.0) {
            const double target = uniform01(rng) * total;
            double running = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const double d = nearest[static_cast<std::size_t>(i)];
                if (d <= 0.0) continue;
                running += d;
                pick = i;
                if (running > target) break;
            }
        } else {
            // Fewer distinct points than clusters: fall back to the lowest unused vertex.
            for (Eigen::Index i = 0; i < n && pick < 0; ++i) {
                if (!chosen[static_cast<std::size_t>(i)]) pick = i;
            }
        }
        take(pick, slot);
    }
    return centers;
}

std::vector<int> assign(const Embedding& points, const Eigen::MatrixXd& centers) {
    std::vector<int> labels(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        int best = 0;
        double best_d = squared_distance(points, i, centers, 0);
        for (Eigen::Index c = 1; c < centers.rows(); ++c) {
            const double d = squared_distance(points, i, centers, c);
            if (d < best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        labels[static_cast<std::size_t>(i)] = best;
    }
    return labels;
}

// Empty clusters keep their previous center.
void update_centers(const Embedding& points, const std::vector<int>& labels, Eigen::MatrixXd& centers) {
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(centers.rows(), centers.cols());
    std::vector<std::size_t> counts(static_cast<std::size_t>(centers.rows()), 0);
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        const int c = labels[static_cast<std::size_t>(i)];
        sums.row(c) += points.row(i);
        ++counts[static_cast<std::size_t>(c)];
    }
    for (Eigen::Index c = 0; c < centers.rows(); ++c) {
        const auto count = counts[static_cast<std::size_t>(c)];
        if (count > 0) centers.row(c) = sums.row(c) / static_cast<double>(count);
    }
}

double inertia_of(const Embedding& points, const std::vector<int>& labels, const Eigen::MatrixXd& centers) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
        total += squared_distance(points, i, centers, labels[static_cast<std::size_t>(i)]);
    }
    return total;
}

struct RunResult {
    std::vector<int> labels;
    double inertia = 0.0;
    std::vector<double> trace;
    std::size_t iterations = 0;
};

RunResult lloyd(const Embedding& points, Eigen::MatrixXd centers, std::size_t max_iterations) {
    RunResult run;
    run.labels = assign(points, centers);
    run.inertia = inertia_of(points, run.labels, centers);
    run.trace.push_back(run.inertia);
    while (run.iterations < max_iterations) {
        update_centers(points, run.labels, centers);
        ++run.iterations;
        std::vector<int> next = assign(points, centers);
        run.inertia = inertia_of(points, next, centers);
        run.trace.push_back(run.inertia);
        const bool converged = next == run.labels;
        run.labels = std::move(next);
        if (converged) break;
    }
    return run;
}

}  // namespace

KMeansResult kmeans(const Embedding& points, std::size_t k, const KMeansOptions& options) {
    const auto n = static_cast<std::size_t>(points.rows());
    if (k < 1 || k > n) {
        throw std::invalid_argument("kmeans: need 1 <= k <= " + std::to_string(n) + ", got k = " + std::to_string(k));
    }
    if (options.restarts < 1) throw std::invalid_argument("kmeans: restarts must be at least 1");

    RunResult best;
    std::size_t best_restart = 0;
    for (std::size_t r = 0; r < options.restarts; ++r) {
        std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                          static_cast<std::uint32_t>(r)};
        std::mt19937_64 rng(seq);
        RunResult run = lloyd(points, seed_centers(points, k, rng), options.max_iterations);
        if (r == 0 || run.inertia < best.inertia) {
            best = std::move(run);
            best_restart = r;
        }
    }

    KMeansResult out;
    out.inertia = best.inertia;
    out.inertia_trace = std::move(best.trace);
    out.iterations = best.iterations;
    out.best_restart = best_restart;
    std::vector<int> rename(k, -1);
    int next_id = 0;
    out.labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        int& id = rename[static_cast<std::size_t>(best.labels[i])];
        if (id < 0) id = next_id++;
        out.labels[i] = id;
    }
    for (int id = next_id; id < static_cast<int>(k); ++id) out.empty_clusters.push_back(id);
    return out;
}

}  // namespace gspec
