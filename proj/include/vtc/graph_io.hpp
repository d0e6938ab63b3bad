#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "vtc/graph.hpp"

namespace vtc {

/// Malformed or unreadable input (files, graph6 strings, generator lists).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Standard graph6 ASCII encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" prefix and trailing whitespace.
Graph from_graph6(std::string_view s);

/// Edge list with a leading "n <count>" header, one "u v" pair per line.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

/// Reads a graph file: edge list when the first token is "n", graph6
/// (first nonempty line) otherwise.
Graph read_graph_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace vtc
