#pragma once

#include <map>
#include <optional>
#include <vector>

namespace ramsey {

// Partially colored complete r-uniform hypergraph on an explicit vertex set.
// Vertices are arbitrary ints (point indices); edges are sorted r-subsets.
// Used as the G_i state of the stepping constructions: r = a-2.
class PartialColoredGraph {
public:
    explicit PartialColoredGraph(int r = 1) : r_(r) {}

    int r() const { return r_; }
    const std::vector<int>& vertices() const { return verts_; }
    const std::map<std::vector<int>, int>& edges() const { return edges_; }
    size_t edge_count() const { return edges_.size(); }

    bool has_vertex(int v) const;
    void add_vertex(int v); // idempotent

    // e strictly increasing, size r; endpoints are added as vertices
    void set_edge(const std::vector<int>& e, int color);
    std::optional<int> edge_color(const std::vector<int>& e) const;

    // every r-subset of the vertex set is colored
    bool complete() const;

    // induced subgraph on vertices < j
    PartialColoredGraph restrict_below(int j) const;

    // relabel vertices to 1..m preserving order; squash(squash(G)) = squash(G)
    PartialColoredGraph squash() const;

    bool operator==(const PartialColoredGraph&) const = default;

private:
    int r_;
    std::vector<int> verts_; // sorted
    std::map<std::vector<int>, int> edges_;
};

// the sub-j edge maps coincide (vertex bookkeeping is ignored: an isolated
// vertex below j left behind by a higher edge is no part of the coloring)
bool agree_prefix(const PartialColoredGraph& g1, const PartialColoredGraph& g2,
                  int j);

// no edge colored in both graphs gets two different colors (symmetric)
bool agree_on(const PartialColoredGraph& g1, const PartialColoredGraph& g2);

} // namespace ramsey
