#pragma once

#include "chipfire/divisor.hpp"
#include "chipfire/families.hpp"

#include <map>
#include <string>

namespace chipfire {

/// Graph file: {"num_vertices": n, "edges": [[u, v], ...]} with zero-indexed
/// endpoints, loops as [u, u] and parallel edges repeated. Divisor file:
/// {"values": [...]}; firing script: {"counts": [...]}. Marks sidecar maps
/// role labels to vertex index lists.

std::string graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const std::string& text);

std::string divisor_to_json(const Divisor& d);
Divisor divisor_from_json(const std::string& text);

std::string script_to_json(const FiringScript& s);
FiringScript script_from_json(const std::string& text);

std::string marks_to_json(const std::map<std::string, std::vector<VertexId>>& marks);
std::map<std::string, std::vector<VertexId>> marks_from_json(const std::string& text);

/// Undirected DOT document, one edge statement per multiset element.
std::string to_dot(const Multigraph& g);

Multigraph load_graph(const std::string& path);
Divisor load_divisor(const std::string& path);
void save_text(const std::string& path, const std::string& text);

}  // namespace chipfire
