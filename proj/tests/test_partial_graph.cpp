#include "doctest.h"

#include "ramsey/partial_graph.hpp"

using namespace ramsey;

TEST_CASE("edges carry their endpoints in") {
    PartialColoredGraph g(2);
    g.set_edge({2, 5}, 1);
    g.set_edge({2, 3}, 0);
    CHECK(g.vertices() == std::vector<int>{2, 3, 5});
    CHECK(g.edge_count() == 2);
    CHECK(g.edge_color({2, 5}) == 1);
    CHECK(g.edge_color({3, 5}) == std::nullopt);
    g.add_vertex(3); // idempotent
    CHECK(g.vertices() == std::vector<int>{2, 3, 5});
}

TEST_CASE("edge shape is enforced") {
    PartialColoredGraph g(2);
    CHECK_THROWS_AS(g.set_edge({1, 2, 3}, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.set_edge({5, 2}, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.set_edge({2, 2}, 0), std::invalid_argument);
}

TEST_CASE("completeness counts every subset of the vertex set") {
    PartialColoredGraph g(2);
    g.set_edge({1, 2}, 0);
    g.set_edge({1, 3}, 1);
    CHECK_FALSE(g.complete()); // {2,3} missing
    g.set_edge({2, 3}, 0);
    CHECK(g.complete());
    g.add_vertex(9); // a bare vertex opens new subsets
    CHECK_FALSE(g.complete());
}

TEST_CASE("an edgeless graph is complete when it cannot host an edge") {
    PartialColoredGraph g(2);
    CHECK(g.complete());
    g.add_vertex(4);
    CHECK(g.complete()); // one vertex, no pair to color
}

TEST_CASE("restriction keeps only the strictly-below part") {
    PartialColoredGraph g(2);
    g.set_edge({1, 2}, 0);
    g.set_edge({2, 5}, 1);
    g.add_vertex(7);
    PartialColoredGraph r = g.restrict_below(5);
    CHECK(r.vertices() == std::vector<int>{1, 2});
    CHECK(r.edge_count() == 1);
    CHECK(r.edge_color({1, 2}) == 0);
}

TEST_CASE("squash relabels order-preserving to 1..m") {
    PartialColoredGraph g(2);
    g.set_edge({3, 8}, 1);
    g.set_edge({3, 11}, 0);
    PartialColoredGraph s = g.squash();
    CHECK(s.vertices() == std::vector<int>{1, 2, 3});
    CHECK(s.edge_color({1, 2}) == 1);
    CHECK(s.edge_color({1, 3}) == 0);
    CHECK(s.squash() == s); // idempotent
}

TEST_CASE("prefix agreement compares sub-j edge maps only") {
    // the fingerprint laws define agreement by the recorded sub-j coloring;
    // a stranded endpoint of a higher edge must not break it
    PartialColoredGraph a(2), b(2);
    a.set_edge({1, 2}, 0);
    b.set_edge({1, 2}, 0);
    b.set_edge({2, 9}, 1); // strands vertex 2 below j=3 in the vertex view
    CHECK(agree_prefix(a, b, 3));
    CHECK(agree_prefix(b, a, 3));
    // but at j above the higher edge the maps differ
    CHECK_FALSE(agree_prefix(a, b, 10));

    // color mismatch below j is a disagreement
    PartialColoredGraph c(2);
    c.set_edge({1, 2}, 1);
    CHECK_FALSE(agree_prefix(a, c, 3));
    // missing edge below j likewise
    PartialColoredGraph d(2);
    CHECK_FALSE(agree_prefix(a, d, 3));
    CHECK(agree_prefix(a, d, 2)); // both empty below 2
}

TEST_CASE("pairwise consistency check") {
    PartialColoredGraph a(1), b(1);
    a.set_edge({4}, 0);
    b.set_edge({5}, 1);
    CHECK(agree_on(a, b)); // disjoint edge sets never conflict
    b.set_edge({4}, 0);
    CHECK(agree_on(a, b));
    b.set_edge({4}, 1);
    CHECK_FALSE(agree_on(a, b));
}

TEST_CASE("one-uniform graphs model the pairwise fingerprints") {
    // r = 1: the fingerprint of the pair construction is a colored point set
    PartialColoredGraph g(1);
    g.set_edge({1}, 0);
    g.set_edge({2}, 1);
    g.set_edge({3}, 0);
    CHECK(g.complete());
    PartialColoredGraph below = g.restrict_below(3);
    CHECK(below.edge_count() == 2);
    CHECK(agree_prefix(g, below, 3));
}
