#include "gpoly/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gpoly/errors.hpp"

namespace gpoly {

namespace {

void check_endpoint(int v, int n) {
    if (v < 0 || v >= n)
        throw std::out_of_range("edge endpoint " + std::to_string(v) +
                                " outside vertex range [0," + std::to_string(n) + ")");
}

// Plain union-find, small and allocation-free beyond the two vectors.
struct Dsu {
    std::vector<int> parent, rank_;
    explicit Dsu(int n) : parent(n), rank_(n, 0) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }
};

} // namespace

Multigraph::Multigraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Multigraph::Multigraph(int n, std::vector<Edge> edges) : Multigraph(n) {
    for (auto& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        check_endpoint(e.u, n_);
        check_endpoint(e.v, n_);
    }
    edges_ = std::move(edges);
    std::sort(edges_.begin(), edges_.end());
}

const Edge& Multigraph::edge(int index) const {
    if (index < 0 || index >= edge_count())
        throw std::out_of_range("edge index " + std::to_string(index) + " out of range");
    return edges_[index];
}

void Multigraph::add_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    check_endpoint(u, n_);
    check_endpoint(v, n_);
    Edge e{u, v};
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

bool Multigraph::is_loop(int index) const {
    const Edge& e = edge(index);
    return e.u == e.v;
}

bool Multigraph::has_edge(int u, int v) const { return multiplicity(u, v) > 0; }

int Multigraph::multiplicity(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge e{u, v};
    auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), e);
    return (int)(hi - lo);
}

bool Multigraph::is_simple() const {
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i].v) return false;
        if (i + 1 < edges_.size() && edges_[i] == edges_[i + 1]) return false;
    }
    return true;
}

int Multigraph::degree(int v) const {
    check_endpoint(v, n_);
    int d = 0;
    for (const Edge& e : edges_) {
        if (e.u == v) ++d;
        if (e.v == v) ++d;
    }
    return d;
}

int Multigraph::loop_count(int v) const {
    check_endpoint(v, n_);
    int c = 0;
    for (const Edge& e : edges_)
        if (e.u == v && e.v == v) ++c;
    return c;
}

Multigraph delete_edge(const Multigraph& g, int e) {
    g.edge(e); // range check
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + e);
    return Multigraph(g.order(), std::move(edges));
}

Multigraph contract_edge(const Multigraph& g, int e) {
    const Edge ce = g.edge(e);
    if (ce.u == ce.v) throw LoopEdgeError("cannot contract a loop");
    // Merge v into u, then close the gap left by v.
    std::vector<Edge> edges;
    edges.reserve(g.edge_count() - 1);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        Edge x = g.edge(i);
        if (x.u == ce.v) x.u = ce.u;
        if (x.v == ce.v) x.v = ce.u;
        if (x.u > ce.v) --x.u;
        if (x.v > ce.v) --x.v;
        edges.push_back(x);
    }
    return Multigraph(g.order() - 1, std::move(edges));
}

Multigraph extract_edge(const Multigraph& g, int e) {
    const Edge ce = g.edge(e);
    if (ce.u == ce.v) throw LoopEdgeError("cannot extract a loop");
    std::vector<Edge> edges;
    for (int i = 0; i < g.edge_count(); ++i) {
        Edge x = g.edge(i);
        if (x.u == ce.u || x.u == ce.v || x.v == ce.u || x.v == ce.v) continue;
        x.u -= (x.u > ce.u) + (x.u > ce.v);
        x.v -= (x.v > ce.u) + (x.v > ce.v);
        edges.push_back(x);
    }
    return Multigraph(g.order() - 2, std::move(edges));
}

Components components(const Multigraph& g) {
    Dsu dsu(g.order());
    for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
    Components out;
    out.label.assign(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        int root = dsu.find(v);
        if (out.label[root] == -1) out.label[root] = out.count++;
        out.label[v] = out.label[root];
    }
    return out;
}

int component_count(const Multigraph& g) { return components(g).count; }

bool is_bridge(const Multigraph& g, int e) {
    const Edge ce = g.edge(e);
    if (ce.u == ce.v) return false;
    if (g.multiplicity(ce.u, ce.v) > 1) return false;
    Dsu dsu(g.order());
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        const Edge& x = g.edge(i);
        dsu.unite(x.u, x.v);
    }
    return dsu.find(ce.u) != dsu.find(ce.v);
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    std::vector<Edge> edges = a.edges();
    edges.reserve(edges.size() + b.edges().size());
    for (const Edge& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
    return Multigraph(a.order() + b.order(), std::move(edges));
}

Multigraph relabel(const Multigraph& g, const std::vector<int>& perm) {
    if ((int)perm.size() != g.order())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return Multigraph(g.order(), std::move(edges));
}

Multigraph induced_subgraph(const Multigraph& g, const std::vector<int>& vertices) {
    std::vector<int> pos(g.order(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        check_endpoint(vertices[i], g.order());
        if (pos[vertices[i]] != -1) throw std::invalid_argument("duplicate vertex in subset");
        pos[vertices[i]] = (int)i;
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (pos[e.u] != -1 && pos[e.v] != -1) edges.push_back({pos[e.u], pos[e.v]});
    return Multigraph((int)vertices.size(), std::move(edges));
}

Multigraph edge_induced_subgraph(const Multigraph& g, const std::vector<int>& edge_indices) {
    std::vector<bool> keep(g.order(), false);
    for (int i : edge_indices) {
        const Edge& e = g.edge(i);
        keep[e.u] = keep[e.v] = true;
    }
    std::vector<int> pos(g.order(), -1);
    int next = 0;
    for (int v = 0; v < g.order(); ++v)
        if (keep[v]) pos[v] = next++;
    std::vector<Edge> edges;
    for (int i : edge_indices) {
        const Edge& e = g.edge(i);
        edges.push_back({pos[e.u], pos[e.v]});
    }
    return Multigraph(next, std::move(edges));
}

Multigraph spanning_subgraph(const Multigraph& g, const std::vector<int>& edge_indices) {
    std::vector<Edge> edges;
    edges.reserve(edge_indices.size());
    for (int i : edge_indices) edges.push_back(g.edge(i));
    return Multigraph(g.order(), std::move(edges));
}

Multigraph complete_graph(int n) {
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Multigraph path_graph(int n) {
    Multigraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Multigraph cycle_graph(int n) {
    Multigraph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    else if (n == 2) g.add_edge(0, 1); // double edge
    return g;
}

Multigraph parse_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw InputError("edge list: expected header line \"n m\"");
    if (n < 0 || m < 0) throw InputError("edge list: negative counts");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw InputError("edge list: truncated after " + std::to_string(i) + " edges");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge list: endpoint out of range on edge " + std::to_string(i));
        edges.push_back({u, v});
    }
    return Multigraph(n, std::move(edges));
}

Multigraph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string edge_list_text(const Multigraph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

} // namespace gpoly
