#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphlib/graph.hpp"
#include "graphlib/planarity.hpp"

namespace graphlib {

enum class FileFormat { edgelist, json };

/// Flow metadata carried next to a graph (aligned with the edge list).
struct FlowSpec {
    int source = 0;
    int terminal = 0;
    std::vector<double> capacities;
    std::vector<double> costs;  // empty when uncosted
};

/**
 * Parsed graph file: the graph plus the optional payloads the JSON format
 * can carry. Parsing then emitting in the same format is the identity.
 */
struct GraphDocument {
    Graph graph;
    std::optional<RotationSystem> rotation;
    std::optional<FlowSpec> flow;
    std::vector<std::string> labels;  // empty when absent
};

GraphDocument parse_graph_file(const std::string& text, FileFormat format);

/// Format sniffing: leading '{' means JSON, anything else edgelist.
GraphDocument parse_graph_auto(const std::string& text);

std::string emit_graph(const GraphDocument& doc, FileFormat format);

std::string emit_dot(const Graph& g);

/**
 * Full command-line surface. `args` excludes the program name. Returns the
 * process exit code: 0 success, 1 domain error, 2 usage error.
 */
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace graphlib
