#include "gspec/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

namespace gspec {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

std::string strip_comment(const std::string& line, char marker) {
    const auto pos = line.find(marker);
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool parse_unsigned(const std::string& tok, std::size_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

bool parse_double(const std::string& tok, double& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

std::size_t parse_vertex(const std::string& tok, std::size_t base, std::size_t n, std::size_t line) {
    std::size_t id = 0;
    if (!parse_unsigned(tok, id)) throw ParseError(line, "non-numeric vertex id '" + tok + "'");
    if (id < base || id - base >= n) {
        throw ParseError(line, "vertex id " + tok + " out of range for " + std::to_string(n) + " nodes with base " +
                                   std::to_string(base));
    }
    return id - base;
}

double parse_weight(const std::vector<std::string>& tokens, std::size_t line) {
    if (tokens.size() < 3) return 1.0;
    double w = 0.0;
    if (!parse_double(tokens[2], w)) throw ParseError(line, "non-numeric weight '" + tokens[2] + "'");
    if (!(w > 0.0) || !std::isfinite(w)) throw ParseError(line, "edge weight must be positive, got " + tokens[2]);
    return w;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<GraphBuilder> builder;
    std::size_t base = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = tokenize(strip_comment(raw, '#'));
        if (tokens.empty()) continue;
        if (!builder) {
            if (lower(tokens[0]) != "nodes" || (tokens.size() != 2 && tokens.size() != 4)) {
                throw ParseError(line_no, "expected header 'nodes N [base 0|1]'");
            }
            std::size_t n = 0;
            if (!parse_unsigned(tokens[1], n)) throw ParseError(line_no, "invalid node count '" + tokens[1] + "'");
            if (tokens.size() == 4) {
                if (lower(tokens[2]) != "base" || (tokens[3] != "0" && tokens[3] != "1")) {
                    throw ParseError(line_no, "index base must be 'base 0' or 'base 1'");
                }
                base = tokens[3] == "1" ? 1 : 0;
            }
            builder.emplace(n, static_cast<int>(base));
            continue;
        }
        if (tokens.size() < 2 || tokens.size() > 3) throw ParseError(line_no, "expected 'u v [w]'");
        const std::size_t u = parse_vertex(tokens[0], base, builder->size(), line_no);
        const std::size_t v = parse_vertex(tokens[1], base, builder->size(), line_no);
        const double w = parse_weight(tokens, line_no);
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + tokens[0]);
        if (builder->has_edge(u, v)) throw ParseError(line_no, "duplicate edge " + tokens[0] + " " + tokens[1]);
        builder->add_edge(u, v, w);
    }
    if (!builder) throw ParseError(0, "missing 'nodes N' header");
    return builder->build();
}

Graph load_pajek(std::istream& in) {
    enum class Section { None, Vertices, Edges, Arcs };
    std::string raw;
    std::size_t line_no = 0;
    Section section = Section::None;
    std::optional<GraphBuilder> builder;
    std::set<std::pair<std::size_t, std::size_t>> arcs;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = tokenize(strip_comment(raw, '%'));
        if (tokens.empty()) continue;
        if (tokens[0][0] == '*') {
            const std::string head = lower(tokens[0]);
            if (head == "*vertices") {
                if (builder) throw ParseError(line_no, "repeated *Vertices header");
                std::size_t n = 0;
                if (tokens.size() < 2 || !parse_unsigned(tokens[1], n)) {
                    throw ParseError(line_no, "expected '*Vertices N'");
                }
                builder.emplace(n, 1);
                section = Section::Vertices;
            } else if (head == "*edges" || head == "*arcs") {
                if (!builder) throw ParseError(line_no, "missing *Vertices header");
                section = head == "*edges" ? Section::Edges : Section::Arcs;
            } else {
                throw ParseError(line_no, "unsupported Pajek section '" + tokens[0] + "'");
            }
            continue;
        }
        switch (section) {
        case Section::None:
            throw ParseError(line_no, "missing *Vertices header");
        case Section::Vertices: {
            // Label lines: "id [label ...]"; only the id is checked.
            std::size_t id = 0;
            if (!parse_unsigned(tokens[0], id)) throw ParseError(line_no, "non-numeric vertex id '" + tokens[0] + "'");
            break;
        }
        case Section::Edges:
        case Section::Arcs: {
            if (tokens.size() < 2 || tokens.size() > 3) throw ParseError(line_no, "expected 'u v [w]'");
            const std::size_t u = parse_vertex(tokens[0], 1, builder->size(), line_no);
            const std::size_t v = parse_vertex(tokens[1], 1, builder->size(), line_no);
            const double w = parse_weight(tokens, line_no);
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + tokens[0]);
            if (section == Section::Arcs) {
                if (!arcs.insert({u, v}).second) {
                    throw ParseError(line_no, "duplicate arc " + tokens[0] + " " + tokens[1]);
                }
                if (builder->has_edge(u, v)) {
                    if (arcs.count({v, u}) != 0 && builder->edge_weight(u, v) == w) break;
                    throw ParseError(line_no, "duplicate edge " + tokens[0] + " " + tokens[1]);
                }
            } else if (builder->has_edge(u, v)) {
                throw ParseError(line_no, "duplicate edge " + tokens[0] + " " + tokens[1]);
            }
            builder->add_edge(u, v, w);
            break;
        }
        }
    }
    if (!builder) throw ParseError(0, "missing *Vertices header");
    return builder->build();
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file '" + path + "'");
    if (format == GraphFormat::Auto) {
        const bool net = path.size() >= 4 && lower(path.substr(path.size() - 4)) == ".net";
        format = net ? GraphFormat::Pajek : GraphFormat::EdgeList;
    }
    try {
        return format == GraphFormat::Pajek ? load_pajek(in) : load_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(0, path + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    const std::size_t base = static_cast<std::size_t>(g.index_base());
    out << "nodes " << g.size() << " base " << base << '\n';
    const auto old_precision = out.precision(17);
    for (std::size_t u = 0; u < g.size(); ++u) {
        for (std::size_t v = u + 1; v < g.size(); ++v) {
            const double w = g.weight(u, v);
            if (w == 0.0) continue;
            out << u + base << ' ' << v + base;
            if (w != 1.0) out << ' ' << w;
            out << '\n';
        }
    }
    out.precision(old_precision);
}

std::vector<int> load_labels(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::vector<std::pair<std::size_t, int>> entries;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto tokens = tokenize(strip_comment(raw, '#'));
        if (tokens.empty()) continue;
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertex_id label'");
        std::size_t id = 0;
        std::size_t label = 0;
        if (!parse_unsigned(tokens[0], id) || id == 0) throw ParseError(line_no, "invalid vertex id '" + tokens[0] + "'");
        if (!parse_unsigned(tokens[1], label) || label > static_cast<std::size_t>(std::numeric_limits<int>::max())) {
            throw ParseError(line_no, "invalid label '" + tokens[1] + "'");
        }
        entries.emplace_back(id, static_cast<int>(label));
    }
    std::vector<int> labels(entries.size(), -1);
    for (const auto& [id, label] : entries) {
        if (id > labels.size()) throw ParseError(0, "vertex id " + std::to_string(id) + " exceeds label count");
        if (labels[id - 1] != -1) throw ParseError(0, "vertex id " + std::to_string(id) + " labelled twice");
        labels[id - 1] = label;
    }
    return labels;
}

std::vector<int> load_labels_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open label file '" + path + "'");
    return load_labels(in);
}

}  // namespace gspec
