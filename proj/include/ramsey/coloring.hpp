#pragma once

#include "ramsey/combinatorics.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ramsey {

// A c-coloring of all a-subsets of [n], vertices 1-based. Colors are dense
// bit-packed at ceil(log2 c) bits per edge, indexed by colex rank. Immutable
// in spirit: extractors only read; construction fills it once.
class Coloring {
public:
    Coloring() = default;
    Coloring(int a, int n, int c);

    int a() const { return a_; }
    int n() const { return n_; }
    int c() const { return c_; }
    uint64_t edge_count() const { return edges_; }
    int bits_per_edge() const { return bits_; }

    // edge must be strictly increasing, within [1..n]
    int color(const std::vector<int>& edge) const {
        return color_by_rank(edge_rank(edge));
    }
    int color_by_rank(uint64_t r) const {
        uint64_t bit = r * bits_;
        uint64_t w = bit >> 6, off = bit & 63;
        uint64_t v = words_[w] >> off;
        if (off + bits_ > 64) v |= words_[w + 1] << (64 - off);
        return static_cast<int>(v & mask_);
    }
    void set_color_by_rank(uint64_t r, int col);
    void set_color(const std::vector<int>& edge, int col) {
        set_color_by_rank(edge_rank(edge), col);
    }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

private:
    int a_ = 0, n_ = 0, c_ = 0;
    int bits_ = 0;
    uint64_t mask_ = 0;
    uint64_t edges_ = 0;
    std::vector<uint64_t> words_; // one spare word so straddled reads stay in range
};

// uniform independent edge colors; same seed gives the identical coloring on
// every platform (mt19937_64 plus rejection sampling, both fully specified)
Coloring random_coloring(int n, int a, int c, uint64_t seed);

// text format: header "a n c", then one line per edge "v1 ... va color" with
// strictly increasing vertices; every edge must appear exactly once
void save_coloring_text(const Coloring& col, std::ostream& out);
Coloring load_coloring_text(std::istream& in);

// binary format: "RHGB" magic, a/n/c header, packed rank-ordered color words
void save_coloring_binary(const Coloring& col, std::ostream& out);
Coloring load_coloring_binary(std::istream& in);

// sniffs the magic to pick a format
Coloring load_coloring_any(std::istream& in);

} // namespace ramsey
