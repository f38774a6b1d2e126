#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace iscover {

// Undirected simple graph: symmetric adjacency, no self loops, dense ids.
struct Graph {
    int node_count = 0;
    std::vector<std::vector<int>> adjacency;  // sorted neighbor lists

    const std::vector<int>& neighbors(int v) const { return adjacency[v]; }
    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
};

// Builds a graph from raw edges: symmetrizes, collapses duplicates, drops
// self edges. Node ids must already be 0..nodes-1.
Graph make_graph(int nodes, const std::vector<std::pair<int, int>>& edges);

std::size_t edge_count(const Graph& g);

// Whitespace-separated "u v" lines; lines starting with '#' are comments.
// External node ids are compacted to 0..n-1 in first-appearance order.
// Throws parse_error (with the line number) on malformed tokens.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);

}  // namespace iscover
