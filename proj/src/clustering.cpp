#include "gspec/clustering.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace gspec {

namespace {

// Minimum-cost perfect assignment on a square matrix (Hungarian method with
// potentials). Returns row_of[col].
std::vector<std::size_t> hungarian(const std::vector<std::vector<long>>& cost) {
    const std::size_t m = cost.size();
    constexpr long inf = std::numeric_limits<long>::max() / 4;
    std::vector<long> u(m + 1, 0), v(m + 1, 0), minv(m + 1);
    std::vector<std::size_t> p(m + 1, 0), way(m + 1, 0);
    std::vector<bool> used(m + 1);
    for (std::size_t i = 1; i <= m; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const std::size_t i0 = p[j0];
            long delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> row_of(m);
    for (std::size_t j = 1; j <= m; ++j) row_of[j - 1] = p[j] - 1;
    return row_of;
}

}  // namespace

Embedding spectral_embed(const Graph& g, RepresentationKind kind, std::size_t k) {
    if (k < 1 || k > g.size()) {
        throw std::invalid_argument("spectral_embed: need 1 <= k <= " + std::to_string(g.size()) + ", got " +
                                    std::to_string(k));
    }
    const OrderedEigenbasis basis = ordered_eigenbasis(g, kind);
    return basis.vectors.leftCols(static_cast<Eigen::Index>(k));
}

ClusteringResult cluster(const Graph& g, RepresentationKind kind, std::size_t k, const KMeansOptions& options) {
    const KMeansResult km = kmeans(spectral_embed(g, kind, k), k, options);
    ClusteringResult out;
    out.labels = km.labels;
    out.inertia = km.inertia;
    out.kind = kind;
    out.k = k;
    out.empty_clusters = km.empty_clusters;
    return out;
}

ClusterComparison compare_clusterings(std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size()) throw std::invalid_argument("compare_clusterings: labelings differ in length");
    ClusterComparison out;
    if (a.empty()) return out;
    const auto negative = [](int x) { return x < 0; };
    if (std::any_of(a.begin(), a.end(), negative) || std::any_of(b.begin(), b.end(), negative)) {
        throw std::invalid_argument("compare_clusterings: labels must be non-negative");
    }
    const auto ka = static_cast<std::size_t>(*std::max_element(a.begin(), a.end())) + 1;
    const auto kb = static_cast<std::size_t>(*std::max_element(b.begin(), b.end())) + 1;
    const std::size_t m = std::max(ka, kb);

    std::vector<std::vector<long>> cost(m, std::vector<long>(m, 0));
    for (std::size_t v = 0; v < a.size(); ++v) {
        --cost[static_cast<std::size_t>(a[v])][static_cast<std::size_t>(b[v])];
    }
    const std::vector<std::size_t> row_of = hungarian(cost);
    std::vector<std::size_t> match(m);
    for (std::size_t col = 0; col < m; ++col) match[row_of[col]] = col;

    for (std::size_t v = 0; v < a.size(); ++v) {
        if (match[static_cast<std::size_t>(a[v])] != static_cast<std::size_t>(b[v])) out.misplaced_ids.push_back(v);
    }
    out.misplaced = out.misplaced_ids.size();
    return out;
}

ClusterComparison compare_clusterings(const ClusteringResult& a, const ClusteringResult& b) {
    return compare_clusterings(std::span<const int>(a.labels), std::span<const int>(b.labels));
}

}  // namespace gspec
