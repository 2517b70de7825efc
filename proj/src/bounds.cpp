#include "gspec/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace gspec {

namespace {

std::string normalise_token(std::string_view text) {
    std::string s;
    for (const char c : text) {
        if (c == '_' || c == '-' || c == ',' || c == '(' || c == ')') continue;
        s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return s;
}

double max_abs(const std::vector<double>& xs) {
    double m = 0.0;
    for (const double x : xs) m = std::max(m, std::abs(x));
    return m;
}

void require_kind(const Spectrum& s, RepresentationKind expected, const char* role) {
    if (s.kind != expected) {
        throw std::invalid_argument(std::string(role) + " spectrum must be " + to_string(expected) + ", got " +
                                    to_string(s.kind));
    }
}

}  // namespace

std::string to_string(Transform t) {
    switch (t) {
    case Transform::F1:
        return "f1";
    case Transform::F2:
        return "f2";
    case Transform::F3:
        return "f3";
    }
    return "?";
}

Transform parse_transform(std::string_view text) {
    const std::string s = normalise_token(text);
    if (s == "f1") return Transform::F1;
    if (s == "f2") return Transform::F2;
    if (s == "f3") return Transform::F3;
    throw std::invalid_argument("unknown transform '" + std::string(text) + "' (expected f1, f2 or f3)");
}

std::string to_string(MatrixPair p) {
    switch (p) {
    case MatrixPair::A_L:
        return "A_L";
    case MatrixPair::L_Lrw:
        return "L_Lrw";
    case MatrixPair::A_Lrw:
        return "A_Lrw";
    }
    return "?";
}

MatrixPair parse_matrix_pair(std::string_view text) {
    const std::string s = normalise_token(text);
    if (s == "al") return MatrixPair::A_L;
    if (s == "llrw") return MatrixPair::L_Lrw;
    if (s == "alrw") return MatrixPair::A_Lrw;
    throw std::invalid_argument("unknown matrix pair '" + std::string(text) + "' (expected A_L, L_Lrw or A_Lrw)");
}

Transform transform_for(MatrixPair p) {
    switch (p) {
    case MatrixPair::A_L:
        return Transform::F1;
    case MatrixPair::L_Lrw:
        return Transform::F2;
    case MatrixPair::A_Lrw:
        return Transform::F3;
    }
    return Transform::F1;
}

RepresentationKind source_kind(MatrixPair p) {
    return p == MatrixPair::L_Lrw ? RepresentationKind::Laplacian : RepresentationKind::Adjacency;
}

RepresentationKind target_kind(MatrixPair p) {
    return p == MatrixPair::A_L ? RepresentationKind::Laplacian : RepresentationKind::NormalizedLaplacian;
}

TransformParams transform_params(double d_min, double d_max) {
    if (d_min < 0.0 || d_max < d_min) throw std::invalid_argument("transform_params: need 0 <= d_min <= d_max");
    const double sum = d_max + d_min;
    if (!(sum > 0.0)) throw std::domain_error("transform parameters undefined for a graph without edges");
    TransformParams p;
    p.d1 = p.d2 = sum / 2.0;
    p.c1 = p.c2 = 2.0 / sum;
    return p;
}

TransformParams transform_params(const DegreeSummary& ds) { return transform_params(ds.d_min, ds.d_max); }

double apply_transform(Transform t, const TransformParams& p, double x) {
    switch (t) {
    case Transform::F1:
        return p.d1 - x;
    case Transform::F2:
        return p.c1 * x;
    case Transform::F3:
        return 1.0 - p.c2 * x;
    }
    return x;
}

std::vector<double> apply_transform(Transform t, const TransformParams& p, const Spectrum& s) {
    require_kind(s, t == Transform::F2 ? RepresentationKind::Laplacian : RepresentationKind::Adjacency,
                 ("input of " + to_string(t)).c_str());
    std::vector<double> out(s.values.size());
    std::transform(s.values.begin(), s.values.end(), out.begin(),
                   [&](double x) { return apply_transform(t, p, x); });
    return out;
}

Interval mapped_support(Transform t, double d_min, double d_max) {
    const double sum = d_max + d_min;
    if (!(sum > 0.0)) throw std::domain_error("mapped support undefined when d_max + d_min == 0");
    switch (t) {
    case Transform::F1:
        return {-(d_max - d_min) / 2.0, (3.0 * d_max + d_min) / 2.0};
    case Transform::F2:
        return {0.0, 4.0 * d_max / sum};
    case Transform::F3:
        return {-(d_max - d_min) / sum, (3.0 * d_max + d_min) / sum};
    }
    return {};
}

BoundSet eigenvalue_bound_set(double d_min, double d_max) {
    if (d_min < 0.0 || d_max < d_min) throw std::invalid_argument("bounds need 0 <= d_min <= d_max");
    BoundSet b;
    const double spread = d_max - d_min;
    b.e_AL = spread / 2.0;
    if (d_min > 0.0) {
        const double sum = d_max + d_min;
        b.e_LLrw = 2.0 * spread / sum;
        b.e_ALrw = 3.0 * spread / sum;
        b.e_prime_ALrw = d_max <= 5.0 * d_min ? *b.e_ALrw : 2.0;
    }
    return b;
}

BoundSet eigenvalue_bound_set(const DegreeSummary& ds) { return eigenvalue_bound_set(ds.d_min, ds.d_max); }

GapBoundSet gap_bound_set(double d_min, double d_max) {
    if (d_min < 0.0 || d_max < d_min) throw std::invalid_argument("gap bounds need 0 <= d_min <= d_max");
    if (!(d_max > 0.0)) throw std::domain_error("gap bounds undefined when d_max == 0");
    GapBoundSet g;
    const double spread = d_max - d_min;
    g.g_AL = spread / (2.0 * d_max);
    if (d_min > 0.0) {
        const BoundSet e = eigenvalue_bound_set(d_min, d_max);
        g.g_LLrw = 2.0 * spread / d_max;
        g.g_prime_LLrw = e.e_LLrw;
        g.g_ALrw = 2.5 * spread / d_max;
        g.g_prime_ALrw = e.e_prime_ALrw;
    }
    return g;
}

GapBoundSet gap_bound_set(const DegreeSummary& ds) { return gap_bound_set(ds.d_min, ds.d_max); }

std::optional<double> eigenvalue_bound(const BoundSet& b, MatrixPair pair) {
    switch (pair) {
    case MatrixPair::A_L:
        return b.e_AL;
    case MatrixPair::L_Lrw:
        return b.e_LLrw;
    case MatrixPair::A_Lrw:
        return b.e_ALrw;
    }
    return std::nullopt;
}

std::optional<double> gap_bound(const GapBoundSet& b, MatrixPair pair) {
    switch (pair) {
    case MatrixPair::A_L:
        return b.g_AL;
    case MatrixPair::L_Lrw:
        return b.g_LLrw;
    case MatrixPair::A_Lrw:
        return b.g_ALrw;
    }
    return std::nullopt;
}

std::optional<double> primed_gap_bound(const GapBoundSet& b, MatrixPair pair) {
    switch (pair) {
    case MatrixPair::A_L:
        return std::nullopt;
    case MatrixPair::L_Lrw:
        return b.g_prime_LLrw;
    case MatrixPair::A_Lrw:
        return b.g_prime_ALrw;
    }
    return std::nullopt;
}

std::string to_string(Region r) {
    switch (r) {
    case Region::Regular:
        return "regular";
    case Region::Bold:
        return "bold";
    case Region::Underlined:
        return "underlined";
    case Region::Teletype:
        return "teletype";
    case Region::Italic:
        return "italic";
    case Region::Normal:
        return "normal";
    }
    return "?";
}

RegionReport classify_region(long d_min, long d_max) {
    if (d_min < 0 || d_max < d_min) throw std::invalid_argument("classify_region needs 0 <= d_min <= d_max");
    if (d_min == d_max) return {Region::Regular, "e(A,L) = e(L,Lrw) = e(A,Lrw) = 0"};
    const long sum = d_min + d_max;
    if (sum < 4) return {Region::Bold, "e(A,L) < e(L,Lrw) < e(A,Lrw)"};
    if (sum == 4) return {Region::Underlined, "e(A,L) = e(L,Lrw) < e(A,Lrw)"};
    if (sum == 5) return {Region::Teletype, "e(L,Lrw) < e(A,L) < e(A,Lrw)"};
    if (sum == 6) return {Region::Italic, "e(L,Lrw) < e(A,L) = e(A,Lrw)"};
    return {Region::Normal, "e(L,Lrw) < e(A,Lrw) < e(A,L)"};
}

PairDifferences pair_differences(MatrixPair pair, const Spectrum& source, const Spectrum& target,
                                 const DegreeSummary& ds) {
    require_kind(source, source_kind(pair), "source");
    require_kind(target, target_kind(pair), "target");
    if (source.size() != target.size()) throw std::invalid_argument("pair_differences: spectra differ in length");
    const auto bound = eigenvalue_bound(eigenvalue_bound_set(ds), pair);
    if (!bound) throw std::domain_error("bound for " + to_string(pair) + " is undefined when d_min == 0");

    PairDifferences out;
    out.pair = pair;
    out.source = source.values;
    out.transformed = apply_transform(transform_for(pair), transform_params(ds), source);
    out.target = target.values;
    out.deltas.resize(out.target.size());
    for (std::size_t i = 0; i < out.deltas.size(); ++i) out.deltas[i] = out.target[i] - out.transformed[i];
    out.bound = *bound;
    out.max_abs_delta = max_abs(out.deltas);
    out.verified = out.max_abs_delta <= out.bound + kBoundSlack;
    return out;
}

PairDifferences pair_differences(MatrixPair pair, const Graph& g) {
    const DegreeSummary ds = degree_summary(g);
    return pair_differences(pair, spectrum(g, source_kind(pair)), spectrum(g, target_kind(pair)), ds);
}

CrossoverReport detect_maximal_crossover(std::span<const double> diffs, double bound, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("crossover tolerance must be positive");
    CrossoverReport report;
    report.tolerance = tol;
    if (bound == 0.0) return report;
    const double reach = bound - tol;
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
        const double a = diffs[i];
        const double b = diffs[i + 1];
        if (std::abs(a) >= reach && std::abs(b) >= reach && ((a > 0.0 && b < 0.0) || (a < 0.0 && b > 0.0))) {
            report.indices.push_back(i + 1);
        }
    }
    return report;
}

GapDifferences gap_differences(MatrixPair pair, const Spectrum& source, const Spectrum& target,
                               const DegreeSummary& ds) {
    require_kind(source, source_kind(pair), "source");
    require_kind(target, target_kind(pair), "target");
    if (source.size() != target.size()) throw std::invalid_argument("gap_differences: spectra differ in length");
    const GapBoundSet bounds = gap_bound_set(ds);
    const auto bound = gap_bound(bounds, pair);
    if (!bound) throw std::domain_error("gap bound for " + to_string(pair) + " is undefined when d_min == 0");

    GapDifferences out;
    out.pair = pair;
    out.source_gaps = normalized_eigengaps(source);
    out.target_gaps = normalized_eigengaps(target);
    out.differences.resize(out.source_gaps.size());
    for (std::size_t i = 0; i < out.differences.size(); ++i) {
        out.differences[i] = std::abs(out.source_gaps[i] - out.target_gaps[i]);
    }
    out.bound = *bound;
    out.max_difference = max_abs(out.differences);
    out.verified = out.max_difference <= out.bound + kBoundSlack;

    if (pair != MatrixPair::A_L) {
        const std::vector<double> mapped = apply_transform(transform_for(pair), transform_params(ds), source);
        std::vector<double> primed(out.differences.size());
        for (std::size_t i = 0; i < primed.size(); ++i) {
            const double mapped_gap = mapped[i + 1] - mapped[i];
            const double target_gap = target.values[i + 1] - target.values[i];
            primed[i] = 0.5 * std::abs(mapped_gap - target_gap);
        }
        out.primed_bound = primed_gap_bound(bounds, pair);
        out.max_primed_difference = max_abs(primed);
        out.primed_differences = std::move(primed);
        out.verified = out.verified && *out.max_primed_difference <= *out.primed_bound + kBoundSlack;
    }
    return out;
}

GapDifferences gap_differences(MatrixPair pair, const Graph& g) {
    const DegreeSummary ds = degree_summary(g);
    return gap_differences(pair, spectrum(g, source_kind(pair)), spectrum(g, target_kind(pair)), ds);
}

WeylReport weyl_check(const Graph& g, double endpoint_tol) {
    const DegreeSummary ds = degree_summary(g);
    const double d1 = (ds.d_max + ds.d_min) / 2.0;
    const Spectrum mu = spectrum(g, RepresentationKind::Adjacency);
    const Spectrum lambda = spectrum(g, RepresentationKind::Laplacian);

    WeylReport report;
    report.interval = {d1 - ds.d_max, d1 - ds.d_min};
    report.differences.resize(mu.size());
    report.holds = true;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        const double diff = (d1 - mu.values[i]) - lambda.values[i];
        report.differences[i] = diff;
        if (!report.interval.contains(diff, kBoundSlack)) report.holds = false;
        if (std::abs(diff - report.interval.lo) <= endpoint_tol || std::abs(diff - report.interval.hi) <= endpoint_tol) {
            ++report.touching_endpoint;
        }
    }
    return report;
}

std::vector<BoundTableCell> bound_table(long d_min_max, long d_max_max) {
    if (d_min_max < 0 || d_max_max < 1) throw std::invalid_argument("bound_table needs d_min_max >= 0, d_max_max >= 1");
    std::vector<BoundTableCell> cells;
    for (long k = 1; k <= d_max_max; ++k) {
        for (long j = 0; j <= std::min(k, d_min_max); ++j) {
            cells.push_back({j, k, eigenvalue_bound_set(static_cast<double>(j), static_cast<double>(k)),
                             classify_region(j, k).label});
        }
    }
    return cells;
}

}  // namespace gspec
