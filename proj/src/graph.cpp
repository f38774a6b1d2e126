#include "iscover/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "iscover/errors.hpp"

namespace iscover {

Graph make_graph(int nodes, const std::vector<std::pair<int, int>>& edges) {
    if (nodes < 0) throw parameter_error("make_graph: negative node count");
    Graph g;
    g.node_count = nodes;
    g.adjacency.assign(nodes, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= nodes || v < 0 || v >= nodes)
            throw parameter_error("make_graph: edge endpoint out of range");
        if (u == v) continue;
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return g;
}

std::size_t edge_count(const Graph& g) {
    std::size_t twice = 0;
    for (const auto& nbrs : g.adjacency) twice += nbrs.size();
    return twice / 2;
}

Graph parse_edge_list(std::istream& in) {
    std::unordered_map<long long, int> id_of;
    std::vector<std::pair<int, int>> edges;
    int next_id = 0;

    auto compact = [&](long long raw) {
        auto [it, fresh] = id_of.try_emplace(raw, next_id);
        if (fresh) ++next_id;
        return it->second;
    };

    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;

        std::istringstream tokens(line);
        long long u, v;
        if (!(tokens >> u >> v))
            throw parse_error("edge list line " + std::to_string(line_no) +
                              ": expected two integer node ids");
        std::string extra;
        if (tokens >> extra)
            throw parse_error("edge list line " + std::to_string(line_no) +
                              ": unexpected token '" + extra + "'");
        edges.emplace_back(compact(u), compact(v));
    }
    return make_graph(next_id, edges);
}

Graph parse_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open edge list file: " + path);
    return parse_edge_list(in);
}

}  // namespace iscover
