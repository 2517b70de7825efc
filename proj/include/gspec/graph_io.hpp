#pragma once

#include "gspec/graph.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gspec {

/// Malformed graph or label input. Carries the 1-based line number (0 when the
/// problem is not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * Edge-list format:
 *
 *     # comment
 *     nodes N [base 0|1]
 *     u v [w]
 *
 * Vertex ids use the declared base (default 0). Missing weights are 1.
 * Self-loops, duplicate edges, out-of-range ids and malformed lines are errors.
 * Weights above 1 are divided by the maximum weight; Graph::rescaled() reports it.
 */
Graph load_edge_list(std::istream& in);

/// Pajek subset: "*Vertices N" (optional label lines), then "*Edges" and/or
/// "*Arcs" sections of "u v [w]" with 1-based ids. Arcs are symmetrised; a
/// reverse arc with the same weight is collapsed into one edge.
Graph load_pajek(std::istream& in);

enum class GraphFormat { Auto, EdgeList, Pajek };

/// Reads a file. Auto picks Pajek for a ".net" extension, edge list otherwise.
Graph load_graph_file(const std::string& path, GraphFormat format = GraphFormat::Auto);

/// Writes the edge-list format using the graph's index base.
void write_edge_list(std::ostream& out, const Graph& g);

/// "vertex_id label" per line, 1-based vertex ids, '#' comments. Returns
/// labels indexed by 0-based vertex. Every vertex 1..n must appear once.
std::vector<int> load_labels(std::istream& in);
std::vector<int> load_labels_file(const std::string& path);

}  // namespace gspec
