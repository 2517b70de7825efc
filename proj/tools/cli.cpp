#include "cli.hpp"

#include "gspec/bounds.hpp"
#include "gspec/clustering.hpp"
#include "gspec/graph.hpp"
#include "gspec/graph_io.hpp"
#include "gspec/spectra.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <optional>
#include <sstream>

namespace gspec::cli {

using nlohmann::json;

std::string table_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", std::round(x * 100.0) / 100.0);
    std::string s(buf);
    if (s.find('.') != std::string::npos) {
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    if (s == "-0") s = "0";
    return s;
}

std::string table_cell(const BoundSet& b) {
    const auto part = [](const std::optional<double>& v) { return v ? table_number(*v) : std::string("·"); };
    return "(" + table_number(b.e_AL) + ", " + part(b.e_LLrw) + ", " + part(b.e_ALrw) + ")";
}

namespace {

struct GraphInput {
    std::string path;
    std::string format = "auto";
};

void add_graph_input(CLI::App* sub, GraphInput& in) {
    sub->add_option("file", in.path, "Graph file (.net is read as Pajek, anything else as an edge list)")->required();
    sub->add_option("--input-format", in.format, "Override format detection")
        ->check(CLI::IsMember({"auto", "edgelist", "pajek"}));
}

Graph read_graph(const GraphInput& in) {
    GraphFormat format = GraphFormat::Auto;
    if (in.format == "edgelist") format = GraphFormat::EdgeList;
    if (in.format == "pajek") format = GraphFormat::Pajek;
    return load_graph_file(in.path, format);
}

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json opt(const std::optional<double>& x) { return x ? num(*x) : json(nullptr); }

json num_array(const std::vector<double>& xs) {
    json arr = json::array();
    for (const double x : xs) arr.push_back(num(x));
    return arr;
}

std::string csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fixed2(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

json region_json(const DegreeSummary& ds) {
    const auto tag = class_tag(ds);
    if (!tag) return nullptr;
    const RegionReport r = classify_region(tag->j, tag->k);
    return {{"label", to_string(r.label)}, {"ordering", r.ordering}};
}

std::vector<MatrixPair> defined_pairs(const DegreeSummary& ds) {
    if (ds.d_min > 0.0) return {MatrixPair::A_L, MatrixPair::L_Lrw, MatrixPair::A_Lrw};
    return {MatrixPair::A_L};
}

std::pair<long, long> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw CLI::ValidationError("--graphc", "expected a range like 3..18");
    try {
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (lo < 2 || hi < lo) throw CLI::ValidationError("--graphc", "range must satisfy 2 <= lo <= hi");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw CLI::ValidationError("--graphc", "expected a range like 3..18");
    }
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Subcommand bodies -------------------------------------------------------

void cmd_info(const GraphInput& in, std::ostream& out) {
    const Graph g = read_graph(in);
    const DegreeSummary ds = degree_summary(g);
    const ComponentLabeling comps = connected_components(g);
    const auto tag = class_tag(ds);
    const auto regular = is_d_regular(g);
    json j = {{"graph", in.path},
              {"n", g.size()},
              {"edges", g.edge_count()},
              {"d_min", ds.d_min},
              {"d_max", ds.d_max},
              {"components", comps.component_count},
              {"class", tag ? json{{"j", tag->j}, {"k", tag->k}} : json(nullptr)},
              {"region", region_json(ds)},
              {"regular_degree", regular ? json(*regular) : json(nullptr)},
              {"rescaled", g.rescaled()},
              {"index_base", g.index_base()}};
    emit_json(out, j);
}

void cmd_gen(const std::string& family, std::optional<std::size_t> size, const std::string& output, std::ostream& out) {
    const auto need_size = [&]() {
        if (!size) throw CLI::ValidationError("gen", family + " needs a size argument");
        return *size;
    };
    Graph g;
    if (family == "star") {
        g = gen_star(need_size());
    } else if (family == "complete") {
        g = gen_complete(need_size());
    } else if (family == "graphc") {
        g = gen_graph_c(need_size());
    } else {
        g = gen_bipartite_b();
    }
    g = g.with_index_base(1);
    if (output.empty()) {
        write_edge_list(out, g);
        return;
    }
    std::ofstream file(output);
    if (!file) throw std::runtime_error("cannot write '" + output + "'");
    write_edge_list(file, g);
}

void cmd_spectra(const GraphInput& in, const std::string& kind_text, const std::string& format, std::ostream& out) {
    const Spectrum s = spectrum(read_graph(in), parse_representation_kind(kind_text));
    if (format == "json") {
        emit_json(out, {{"kind", to_string(s.kind)},
                        {"order", s.kind == RepresentationKind::Adjacency ? "descending" : "ascending"},
                        {"support", {num(s.support.lo), num(s.support.hi)}},
                        {"values", num_array(s.values)}});
        return;
    }
    out << "index,value\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) out << i + 1 << ',' << csv_number(s.values[i]) << '\n';
}

void cmd_bounds(const GraphInput& in, const std::string& format, std::ostream& out) {
    const Graph g = read_graph(in);
    const DegreeSummary ds = degree_summary(g);
    const BoundSet b = eigenvalue_bound_set(ds);
    json pairs = json::object();
    for (const MatrixPair p : {MatrixPair::A_L, MatrixPair::L_Lrw, MatrixPair::A_Lrw}) pairs[to_string(p)] = nullptr;
    for (const MatrixPair p : defined_pairs(ds)) {
        const PairDifferences d = pair_differences(p, g);
        pairs[to_string(p)] = {{"bound", d.bound}, {"max_abs_delta", d.max_abs_delta}, {"verified", d.verified}};
    }
    const auto render = [](const std::optional<double>& x) { return x ? fixed2(*x) : std::string("·"); };
    const std::string rendered = "(" + fixed2(b.e_AL) + ", " + render(b.e_LLrw) + ", " + render(b.e_ALrw) + ")";
    if (format == "text") {
        out << "d_min = " << ds.d_min << ", d_max = " << ds.d_max << '\n';
        out << "(e(A,L), e(L,Lrw), e(A,Lrw)) = " << rendered << '\n';
        out << "e'(A,Lrw) (inner interval) = " << render(b.e_prime_ALrw) << '\n';
        const json region = region_json(ds);
        if (!region.is_null()) out << "region: " << region["label"].get<std::string>() << "  " << region["ordering"].get<std::string>() << '\n';
        for (const auto& [name, v] : pairs.items()) {
            if (v.is_null()) continue;
            out << name << ": max |delta| = " << fixed2(v["max_abs_delta"].get<double>())
                << (v["verified"].get<bool>() ? "  within bound" : "  EXCEEDS bound") << '\n';
        }
        return;
    }
    emit_json(out, {{"graph", in.path},
                    {"n", g.size()},
                    {"d_min", ds.d_min},
                    {"d_max", ds.d_max},
                    {"region", region_json(ds)},
                    {"bounds",
                     {{"e_AL", b.e_AL}, {"e_LLrw", opt(b.e_LLrw)}, {"e_ALrw", opt(b.e_ALrw)}, {"e_prime_ALrw", opt(b.e_prime_ALrw)}}},
                    {"rendered", rendered},
                    {"pairs", pairs}});
}

void cmd_gaps(const GraphInput& in, const std::string& format, std::ostream& out) {
    const Graph g = read_graph(in);
    const DegreeSummary ds = degree_summary(g);
    const GapBoundSet b = gap_bound_set(ds);
    json pairs = json::object();
    for (const MatrixPair p : {MatrixPair::A_L, MatrixPair::L_Lrw, MatrixPair::A_Lrw}) pairs[to_string(p)] = nullptr;
    for (const MatrixPair p : defined_pairs(ds)) {
        const GapDifferences d = gap_differences(p, g);
        json entry = {{"bound", d.bound}, {"max_difference", d.max_difference}, {"verified", d.verified}};
        if (d.primed_bound) {
            entry["primed_bound"] = *d.primed_bound;
            entry["max_primed_difference"] = *d.max_primed_difference;
        }
        pairs[to_string(p)] = entry;
    }
    if (format == "text") {
        const auto render = [](const std::optional<double>& x) { return x ? fixed2(*x) : std::string("·"); };
        out << "g(A,L) = " << fixed2(b.g_AL) << ", g(L,Lrw) = " << render(b.g_LLrw) << ", g'(L,Lrw) = "
            << render(b.g_prime_LLrw) << ", g(A,Lrw) = " << render(b.g_ALrw) << ", g'(A,Lrw) = " << render(b.g_prime_ALrw)
            << '\n';
        for (const auto& [name, v] : pairs.items()) {
            if (v.is_null()) continue;
            out << name << ": max normalised gap difference = " << fixed2(v["max_difference"].get<double>())
                << (v["verified"].get<bool>() ? "  within bound" : "  EXCEEDS bound") << '\n';
        }
        return;
    }
    emit_json(out, {{"graph", in.path},
                    {"d_min", ds.d_min},
                    {"d_max", ds.d_max},
                    {"bounds",
                     {{"g_AL", b.g_AL},
                      {"g_LLrw", opt(b.g_LLrw)},
                      {"g_prime_LLrw", opt(b.g_prime_LLrw)},
                      {"g_ALrw", opt(b.g_ALrw)},
                      {"g_prime_ALrw", opt(b.g_prime_ALrw)}}},
                    {"pairs", pairs}});
}

void cmd_table(long d_min_max, long d_max_max, const std::string& format, std::ostream& out) {
    const std::vector<BoundTableCell> cells = bound_table(d_min_max, d_max_max);
    if (format == "csv") {
        out << "d_min,d_max,e_AL,e_LLrw,e_ALrw,cell,region\n";
        for (const auto& c : cells) {
            const auto field = [](const std::optional<double>& x) { return x ? csv_number(*x) : std::string(); };
            out << c.d_min << ',' << c.d_max << ',' << csv_number(c.bounds.e_AL) << ',' << field(c.bounds.e_LLrw) << ','
                << field(c.bounds.e_ALrw) << ",\"" << table_cell(c.bounds) << "\"," << to_string(c.region) << '\n';
        }
        return;
    }
    constexpr int width = 20;
    // The middle dot is two bytes but one column wide.
    const auto pad = [&](const std::string& s) {
        std::size_t columns = 0;
        for (const char ch : s) columns += (static_cast<unsigned char>(ch) & 0xC0) != 0x80;
        return s + std::string(columns < width ? width - columns : 1, ' ');
    };
    out << pad("d_max \\ d_min");
    for (long j = 0; j <= d_min_max; ++j) out << pad(std::to_string(j));
    out << '\n';
    std::size_t next = 0;
    for (long k = 1; k <= d_max_max; ++k) {
        out << pad(std::to_string(k));
        for (long j = 0; j <= d_min_max; ++j) {
            if (j > k) {
                out << pad("*");
            } else {
                out << pad(table_cell(cells[next++].bounds));
            }
        }
        out << '\n';
    }
}

void cmd_region(const std::optional<GraphInput>& in, std::optional<long> d_min, std::optional<long> d_max,
                std::ostream& out) {
    if (in) {
        const auto tag = class_tag(degree_summary(read_graph(*in)));
        if (!tag) throw std::domain_error("region needs integer degree extremes");
        d_min = tag->j;
        d_max = tag->k;
    }
    if (!d_min || !d_max) throw CLI::ValidationError("region", "give a graph file or both --dmin and --dmax");
    const RegionReport r = classify_region(*d_min, *d_max);
    emit_json(out, {{"d_min", *d_min}, {"d_max", *d_max}, {"region", to_string(r.label)}, {"ordering", r.ordering}});
}

void cmd_cluster(const GraphInput& in, const std::string& kind_text, std::size_t k, std::uint64_t seed,
                 std::size_t restarts, const std::string& truth_path, std::ostream& out) {
    const Graph g = read_graph(in);
    KMeansOptions options;
    options.seed = seed;
    options.restarts = restarts;
    const ClusteringResult result = cluster(g, parse_representation_kind(kind_text), k, options);
    const std::size_t base = static_cast<std::size_t>(g.index_base());

    std::vector<std::vector<std::size_t>> members(k);
    for (std::size_t v = 0; v < result.labels.size(); ++v) {
        members[static_cast<std::size_t>(result.labels[v])].push_back(v + base);
    }
    json j = {{"graph", in.path},
              {"kind", to_string(result.kind)},
              {"k", k},
              {"seed", seed},
              {"restarts", restarts},
              {"inertia", result.inertia},
              {"index_base", base},
              {"labels", result.labels},
              {"clusters", members},
              {"empty_clusters", result.empty_clusters}};
    if (!truth_path.empty()) {
        const std::vector<int> truth = load_labels_file(truth_path);
        const ClusterComparison cmp = compare_clusterings(std::span<const int>(result.labels), std::span<const int>(truth));
        std::vector<std::size_t> ids;
        for (const std::size_t v : cmp.misplaced_ids) ids.push_back(v + base);
        j["comparison"] = {{"truth", truth_path}, {"misplaced", cmp.misplaced}, {"misplaced_ids", ids}};
    }
    emit_json(out, j);
}

void cmd_crossover(const GraphInput& in, const std::string& pair_text, double tol, std::ostream& out) {
    const MatrixPair pair = parse_matrix_pair(pair_text);
    const PairDifferences d = pair_differences(pair, read_graph(in));
    const CrossoverReport r = detect_maximal_crossover(d.deltas, d.bound, tol);
    emit_json(out, {{"graph", in.path},
                    {"pair", to_string(pair)},
                    {"bound", d.bound},
                    {"tolerance", r.tolerance},
                    {"indices", r.indices},
                    {"deltas", num_array(d.deltas)}});
}

void cmd_polymap(const GraphInput& in, const std::string& pair_text, double merge_tol, std::ostream& out) {
    const MatrixPair pair = parse_matrix_pair(pair_text);
    const Graph g = read_graph(in);
    const PolyMapReport r =
        polynomial_spectrum_map(spectrum(g, source_kind(pair)), spectrum(g, target_kind(pair)), merge_tol);
    emit_json(out, {{"graph", in.path},
                    {"pair", to_string(pair)},
                    {"merge_tol", merge_tol},
                    {"unstable", r.unstable},
                    {"min_input_gap", num(r.min_input_gap)},
                    {"output_span_over_degenerate_inputs", r.output_span_over_degenerate_inputs},
                    {"max_residual", r.unstable ? json(nullptr) : num(r.max_residual)},
                    {"nodes", num_array(r.nodes)},
                    {"coefficients", r.coefficients ? num_array(*r.coefficients) : json(nullptr)}});
}

void cmd_weyl(const GraphInput& in, std::ostream& out) {
    const WeylReport r = weyl_check(read_graph(in));
    emit_json(out, {{"graph", in.path},
                    {"holds", r.holds},
                    {"interval", {r.interval.lo, r.interval.hi}},
                    {"touching_endpoint", r.touching_endpoint},
                    {"differences", num_array(r.differences)}});
}

struct PlotRow {
    double raw;
    double transformed;
    double target;
};

void write_plot_csv(std::ostream& out, const std::vector<PlotRow>& rows, double bound, std::optional<double> inner) {
    out << "index,raw,transformed,target,difference,center,interval_low,interval_high";
    if (inner) out << ",inner_low,inner_high";
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const PlotRow& r = rows[i];
        const double center = (r.transformed + r.target) / 2.0;
        out << i + 1 << ',' << csv_number(r.raw) << ',' << csv_number(r.transformed) << ',' << csv_number(r.target) << ','
            << csv_number(r.target - r.transformed) << ',' << csv_number(center) << ',' << csv_number(center - bound)
            << ',' << csv_number(center + bound);
        if (inner) out << ',' << csv_number(center - *inner) << ',' << csv_number(center + *inner);
        out << '\n';
    }
}

void cmd_plotdata(const GraphInput& in, const std::string& figure, const std::string& pair_text, std::ostream& out) {
    const MatrixPair pair = parse_matrix_pair(pair_text);
    const Graph g = read_graph(in);
    const DegreeSummary ds = degree_summary(g);
    const Spectrum source = spectrum(g, source_kind(pair));
    const Spectrum target = spectrum(g, target_kind(pair));
    std::vector<PlotRow> rows;
    double bound = 0.0;
    std::optional<double> inner;
    if (figure == "eigs") {
        const PairDifferences d = pair_differences(pair, source, target, ds);
        for (std::size_t i = 0; i < d.deltas.size(); ++i) rows.push_back({d.source[i], d.transformed[i], d.target[i]});
        bound = d.bound;
        if (pair == MatrixPair::A_Lrw) inner = eigenvalue_bound_set(ds).e_prime_ALrw;
    } else {
        const GapDifferences d = gap_differences(pair, source, target, ds);
        for (std::size_t i = 0; i < d.source_gaps.size(); ++i) {
            rows.push_back({d.source_gaps[i] * source.support_length(), d.source_gaps[i], d.target_gaps[i]});
        }
        bound = d.bound;
        inner = d.primed_bound;
    }
    out << "# graph=" << in.path << '\n';
    out << "# figure=" << figure << '\n';
    out << "# pair=" << to_string(pair) << '\n';
    out << "# bound=" << csv_number(bound) << '\n';
    if (inner) out << "# inner_bound=" << csv_number(*inner) << '\n';
    write_plot_csv(out, rows, bound, inner);
}

void cmd_sweep(const std::string& range_text, std::ostream& out) {
    const auto [lo, hi] = parse_range(range_text);
    out << "k,kind,index,normalized_gap,rank,at_k_plus_9\n";
    for (long k = lo; k <= hi; ++k) {
        const Graph g = gen_graph_c(static_cast<std::size_t>(k));
        for (const RepresentationKind kind :
             {RepresentationKind::Adjacency, RepresentationKind::Laplacian, RepresentationKind::NormalizedLaplacian}) {
            const std::vector<double> gaps = normalized_eigengaps(spectrum(g, kind));
            std::vector<std::size_t> order(gaps.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return gaps[a] > gaps[b]; });
            std::vector<std::size_t> rank(gaps.size());
            for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r + 1;
            for (std::size_t i = 0; i < gaps.size(); ++i) {
                const bool flagged = static_cast<long>(i + 1) == k + 9;
                out << k << ',' << to_string(kind) << ',' << i + 1 << ',' << csv_number(gaps[i]) << ',' << rank[i] << ','
                    << (flagged ? 1 : 0) << '\n';
            }
        }
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compare spectra of graph adjacency and Laplacian matrices", "gspec"};
    app.require_subcommand(1);

    GraphInput info_in;
    auto* info = app.add_subcommand("info", "Size, degree extremes, components, class and region");
    add_graph_input(info, info_in);

    std::string gen_family;
    std::optional<std::size_t> gen_size;
    std::string gen_output;
    auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen->add_option("family", gen_family, "star, complete, graphc or bipartiteb")
        ->required()
        ->check(CLI::IsMember({"star", "complete", "graphc", "bipartiteb"}));
    gen->add_option("size", gen_size, "Vertex count (star), clique size (complete, graphc)");
    gen->add_option("-o,--output", gen_output, "Output file (default stdout)");

    GraphInput spectra_in;
    std::string spectra_kind;
    std::string spectra_format = "csv";
    auto* spectra = app.add_subcommand("spectra", "Ordered eigenvalues of one representation matrix");
    add_graph_input(spectra, spectra_in);
    spectra->add_option("--kind", spectra_kind, "A, L or Lrw")->required();
    spectra->add_option("--format", spectra_format)->check(CLI::IsMember({"csv", "json"}));

    GraphInput bounds_in;
    std::string bounds_format = "json";
    auto* bounds = app.add_subcommand("bounds", "Eigenvalue-difference bounds and their verification");
    add_graph_input(bounds, bounds_in);
    bounds->add_option("--format", bounds_format)->check(CLI::IsMember({"json", "text"}));

    GraphInput gaps_in;
    std::string gaps_format = "json";
    auto* gaps = app.add_subcommand("gaps", "Normalised-eigengap bounds and their verification");
    add_graph_input(gaps, gaps_in);
    gaps->add_option("--format", gaps_format)->check(CLI::IsMember({"json", "text"}));

    long table_dmin_max = 5;
    long table_dmax_max = 7;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "Bound values over a grid of degree extremes");
    table->add_option("--dmin-max", table_dmin_max)->check(CLI::NonNegativeNumber);
    table->add_option("--dmax-max", table_dmax_max)->check(CLI::PositiveNumber);
    table->add_option("--format", table_format)->check(CLI::IsMember({"text", "csv"}));

    GraphInput region_in;
    std::optional<long> region_dmin;
    std::optional<long> region_dmax;
    auto* region = app.add_subcommand("region", "Bound-ordering region for a graph or degree extremes");
    region->add_option("file", region_in.path, "Graph file");
    region->add_option("--input-format", region_in.format)->check(CLI::IsMember({"auto", "edgelist", "pajek"}));
    region->add_option("--dmin", region_dmin);
    region->add_option("--dmax", region_dmax);

    GraphInput cluster_in;
    std::string cluster_kind;
    std::size_t cluster_k = 0;
    std::uint64_t cluster_seed = 42;
    std::size_t cluster_restarts = 50;
    std::string cluster_truth;
    auto* clus = app.add_subcommand("cluster", "Spectral clustering on one representation matrix");
    add_graph_input(clus, cluster_in);
    clus->add_option("--kind", cluster_kind, "A, L or Lrw")->required();
    clus->add_option("--k", cluster_k, "Number of eigenvectors and clusters")->required()->check(CLI::PositiveNumber);
    clus->add_option("--seed", cluster_seed);
    clus->add_option("--restarts", cluster_restarts)->check(CLI::PositiveNumber);
    clus->add_option("--truth", cluster_truth, "Reference labels, 'vertex_id label' per line (1-based)");

    GraphInput cross_in;
    std::string cross_pair;
    double cross_tol = 1e-6;
    auto* cross = app.add_subcommand("crossover", "Maximal crossovers of eigenvalue differences");
    add_graph_input(cross, cross_in);
    cross->add_option("--pair", cross_pair, "A_L, L_Lrw or A_Lrw")->required();
    cross->add_option("--tol", cross_tol)->check(CLI::PositiveNumber);

    GraphInput poly_in;
    std::string poly_pair;
    double poly_tol = 1e-12;
    auto* poly = app.add_subcommand("polymap", "Interpolating polynomial between two spectra");
    add_graph_input(poly, poly_in);
    poly->add_option("--pair", poly_pair, "A_L, L_Lrw or A_Lrw")->required();
    poly->add_option("--merge-tol", poly_tol)->check(CLI::NonNegativeNumber);

    GraphInput weyl_in;
    auto* weyl = app.add_subcommand("weyl", "Check A/L eigenvalue differences against Weyl's interval");
    add_graph_input(weyl, weyl_in);

    GraphInput plot_in;
    std::string plot_figure;
    std::string plot_pair;
    auto* plot = app.add_subcommand("plotdata", "CSV of spectra or eigengaps with centred bound intervals");
    add_graph_input(plot, plot_in);
    plot->add_option("--figure", plot_figure)->required()->check(CLI::IsMember({"eigs", "gaps"}));
    plot->add_option("--pair", plot_pair, "A_L, L_Lrw or A_Lrw")->required();

    std::string sweep_range;
    auto* sweep = app.add_subcommand("sweep", "Normalised eigengaps of C(k) over a range of k");
    sweep->add_option("--graphc", sweep_range, "Range lo..hi")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (info->parsed()) cmd_info(info_in, out);
        if (gen->parsed()) cmd_gen(gen_family, gen_size, gen_output, out);
        if (spectra->parsed()) cmd_spectra(spectra_in, spectra_kind, spectra_format, out);
        if (bounds->parsed()) cmd_bounds(bounds_in, bounds_format, out);
        if (gaps->parsed()) cmd_gaps(gaps_in, gaps_format, out);
        if (table->parsed()) cmd_table(table_dmin_max, table_dmax_max, table_format, out);
        if (region->parsed()) {
            cmd_region(region_in.path.empty() ? std::nullopt : std::optional<GraphInput>(region_in), region_dmin,
                       region_dmax, out);
        }
        if (clus->parsed()) {
            cmd_cluster(cluster_in, cluster_kind, cluster_k, cluster_seed, cluster_restarts, cluster_truth, out);
        }
        if (cross->parsed()) cmd_crossover(cross_in, cross_pair, cross_tol, out);
        if (poly->parsed()) cmd_polymap(poly_in, poly_pair, poly_tol, out);
        if (weyl->parsed()) cmd_weyl(weyl_in, out);
        if (plot->parsed()) cmd_plotdata(plot_in, plot_figure, plot_pair, out);
        if (sweep->parsed()) cmd_sweep(sweep_range, out);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomainError;
    }
    return kExitOk;
}

}  // namespace gspec::cli
