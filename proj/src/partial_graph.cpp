#include "ramsey/partial_graph.hpp"

#include "ramsey/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

bool PartialColoredGraph::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

void PartialColoredGraph::add_vertex(int v) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) verts_.insert(it, v);
}

void PartialColoredGraph::set_edge(const std::vector<int>& e, int color) {
    if (static_cast<int>(e.size()) != r_)
        throw std::invalid_argument("partial graph: edge arity mismatch");
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] <= e[i - 1])
            throw std::invalid_argument("partial graph: edge must increase");
    for (int v : e) add_vertex(v);
    edges_[e] = color;
}

std::optional<int> PartialColoredGraph::edge_color(const std::vector<int>& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) return std::nullopt;
    return it->second;
}

bool PartialColoredGraph::complete() const {
    bool ok = true;
    for_each_subset(verts_, r_, [&](const std::vector<int>& e) {
        if (!edges_.count(e)) { ok = false; return false; }
        return true;
    });
    return ok;
}

PartialColoredGraph PartialColoredGraph::restrict_below(int j) const {
    PartialColoredGraph g(r_);
    for (int v : verts_)
        if (v < j) g.add_vertex(v);
    for (const auto& [e, col] : edges_)
        if (e.back() < j) g.edges_[e] = col;
    return g;
}

PartialColoredGraph PartialColoredGraph::squash() const {
    PartialColoredGraph g(r_);
    std::map<int, int> remap;
    int next = 1;
    for (int v : verts_) {
        remap[v] = next;
        g.add_vertex(next);
        ++next;
    }
    for (const auto& [e, col] : edges_) {
        std::vector<int> e2(e.size());
        for (size_t i = 0; i < e.size(); ++i) e2[i] = remap.at(e[i]);
        g.edges_[e2] = col;
    }
    return g;
}

bool agree_prefix(const PartialColoredGraph& g1, const PartialColoredGraph& g2,
                  int j) {
    // Fingerprints agree below j when their sub-j edge maps coincide. Only
    // edges matter: vertex bookkeeping may strand isolated sub-j endpoints
    // of higher edges, which are no part of the recorded coloring.
    size_t below2 = 0;
    for (const auto& [e, col] : g2.edges())
        if (e.back() < j) ++below2;
    size_t below1 = 0;
    for (const auto& [e, col] : g1.edges()) {
        if (e.back() >= j) continue;
        ++below1;
        auto other = g2.edge_color(e);
        if (!other || *other != col) return false;
    }
    return below1 == below2;
}

bool agree_on(const PartialColoredGraph& g1, const PartialColoredGraph& g2) {
    const auto& small = g1.edge_count() <= g2.edge_count() ? g1 : g2;
    const auto& large = g1.edge_count() <= g2.edge_count() ? g2 : g1;
    for (const auto& [e, col] : small.edges()) {
        auto other = large.edge_color(e);
        if (other && *other != col) return false;
    }
    return true;
}

} // namespace ramsey
