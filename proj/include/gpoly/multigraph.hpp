#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace gpoly {

// Unordered vertex pair with u <= v; u == v is a loop.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite multigraph on vertices 0..n-1 with an edge multiset that may
// contain loops and parallel edges. Immutable in spirit: the edge
// operations return new graphs. The edge list is kept sorted, so two
// graphs with equal order and equal edge multisets compare equal and
// edge indices are deterministic.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int n);
    Multigraph(int n, std::vector<Edge> edges);

    int order() const { return n_; }                          // n(G)
    int edge_count() const { return (int)edges_.size(); }     // m(G)
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const;

    void add_edge(int u, int v);

    bool is_loop(int index) const;
    bool has_edge(int u, int v) const;
    int multiplicity(int u, int v) const;
    bool is_simple() const;       // no loops, no parallel edges
    int degree(int v) const;      // loops contribute 2
    int loop_count(int v) const;

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// G_{-e}: remove the edge, keep all vertices.
Multigraph delete_edge(const Multigraph& g, int e);

// G_{/e}: merge the endpoints; remaining parallels of e become loops.
// Rejects loops with LoopEdgeError.
Multigraph contract_edge(const Multigraph& g, int e);

// G_{†e}: remove both endpoints together with every incident edge.
// Rejects loops with LoopEdgeError.
Multigraph extract_edge(const Multigraph& g, int e);

struct Components {
    int count = 0;              // k(G); isolated vertices count
    std::vector<int> label;     // vertex -> component id, ids by first occurrence
};

Components components(const Multigraph& g);
int component_count(const Multigraph& g);

// True iff e is a cut edge of its component (never true for loops or
// for edges with parallel copies).
bool is_bridge(const Multigraph& g, int e);

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b);

// Relabels vertices: vertex v becomes perm[v].
Multigraph relabel(const Multigraph& g, const std::vector<int>& perm);

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices);

// Subgraph carried by the chosen edges: vertices are the endpoints
// (relabelled in increasing order), edges the chosen ones.
Multigraph edge_induced_subgraph(const Multigraph& g, const std::vector<int>& edge_indices);

// Spanning subgraph (all vertices, chosen edges).
Multigraph spanning_subgraph(const Multigraph& g, const std::vector<int>& edge_indices);

Multigraph complete_graph(int n);
Multigraph path_graph(int n);
Multigraph cycle_graph(int n);

// Edge-list text format: first line "n m", then m lines "u v"
// (loops as "u u").
Multigraph parse_edge_list(std::istream& in);
Multigraph parse_edge_list_text(const std::string& text);
std::string edge_list_text(const Multigraph& g);

} // namespace gpoly
