#include "ramsey/coloring.hpp"

#include <cstring>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

int bits_for(int c) {
    int b = 1;
    while ((1 << b) < c) ++b;
    return b;
}

} // namespace

Coloring::Coloring(int a, int n, int c) : a_(a), n_(n), c_(c) {
    if (a < 1) throw std::invalid_argument("coloring: a must be >= 1");
    if (n < a) throw std::invalid_argument("coloring: n must be >= a");
    if (c < 1 || c > 256) throw std::invalid_argument("coloring: c out of range");
    bits_ = bits_for(c);
    mask_ = (bits_ == 64) ? ~0ull : ((1ull << bits_) - 1);
    edges_ = binom_u64(n, a);
    uint64_t total_bits = edges_ * bits_;
    words_.assign((total_bits + 63) / 64 + 1, 0);
}

void Coloring::set_color_by_rank(uint64_t r, int col) {
    if (col < 0 || col >= c_) throw std::invalid_argument("color out of range");
    uint64_t bit = r * bits_;
    uint64_t w = bit >> 6, off = bit & 63;
    uint64_t v = static_cast<uint64_t>(col);
    words_[w] = (words_[w] & ~(mask_ << off)) | (v << off);
    if (off + bits_ > 64) {
        int spill = static_cast<int>(off + bits_ - 64);
        uint64_t hmask = (1ull << spill) - 1;
        words_[w + 1] = (words_[w + 1] & ~hmask) | (v >> (bits_ - spill));
    }
}

Coloring random_coloring(int n, int a, int c, uint64_t seed) {
    Coloring col(a, n, c);
    std::mt19937_64 eng(seed);
    uint64_t uc = static_cast<uint64_t>(c);
    // rejection sampling keeps the draw uniform and platform-independent
    uint64_t limit = ~0ull - (~0ull % uc + 1) % uc;
    for (uint64_t r = 0; r < col.edge_count(); ++r) {
        uint64_t v = eng();
        while (v > limit) v = eng();
        col.set_color_by_rank(r, static_cast<int>(v % uc));
    }
    return col;
}

void save_coloring_text(const Coloring& col, std::ostream& out) {
    out << col.a() << ' ' << col.n() << ' ' << col.c() << '\n';
    std::vector<int> edge(col.a());
    for_each_combination(col.n(), col.a(), [&](const std::vector<int>& idx) {
        for (size_t i = 0; i < idx.size(); ++i) edge[i] = idx[i] + 1;
        for (int v : edge) out << v << ' ';
        out << col.color(edge) << '\n';
        return true;
    });
}

Coloring load_coloring_text(std::istream& in) {
    int a, n, c;
    if (!(in >> a >> n >> c))
        throw std::runtime_error("coloring parse: bad header, expected \"a n c\"");
    Coloring col(a, n, c);
    std::vector<bool> seen(col.edge_count(), false);
    std::vector<int> edge(a);
    uint64_t lines = 0;
    for (;;) {
        if (!(in >> edge[0])) break;
        for (int i = 1; i < a; ++i)
            if (!(in >> edge[i]))
                throw std::runtime_error("coloring parse: truncated edge line");
        int color;
        if (!(in >> color))
            throw std::runtime_error("coloring parse: edge line missing color");
        for (int i = 0; i < a; ++i) {
            if (edge[i] < 1 || edge[i] > n)
                throw std::runtime_error("coloring parse: vertex out of range");
            if (i > 0 && edge[i] <= edge[i - 1])
                throw std::runtime_error("coloring parse: vertices must increase");
        }
        if (color < 0 || color >= c)
            throw std::runtime_error("coloring parse: color out of range");
        uint64_t r = edge_rank(edge);
        if (seen[r]) throw std::runtime_error("coloring parse: duplicate edge");
        seen[r] = true;
        col.set_color_by_rank(r, color);
        ++lines;
    }
    if (lines != col.edge_count())
        throw std::runtime_error("coloring parse: missing edges");
    return col;
}

namespace {

void put_u32(std::ostream& out, uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 4);
}

void put_u64(std::ostream& out, uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(b, 8);
}

uint32_t get_u32(std::istream& in) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw std::runtime_error("coloring parse: truncated binary header");
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(b[i]) << (8 * i);
    return v;
}

uint64_t get_u64(std::istream& in) {
    unsigned char b[8];
    if (!in.read(reinterpret_cast<char*>(b), 8))
        throw std::runtime_error("coloring parse: truncated binary data");
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(b[i]) << (8 * i);
    return v;
}

constexpr char kMagic[4] = {'R', 'H', 'G', 'B'};

} // namespace

void save_coloring_binary(const Coloring& col, std::ostream& out) {
    out.write(kMagic, 4);
    put_u32(out, static_cast<uint32_t>(col.a()));
    put_u64(out, static_cast<uint64_t>(col.n()));
    put_u32(out, static_cast<uint32_t>(col.c()));
    put_u64(out, col.words().size());
    for (uint64_t w : col.words()) put_u64(out, w);
}

Coloring load_coloring_binary(std::istream& in) {
    char magic[4];
    if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0)
        throw std::runtime_error("coloring parse: bad binary magic");
    uint32_t a = get_u32(in);
    uint64_t n = get_u64(in);
    uint32_t c = get_u32(in);
    if (a > 64 || n > (1ull << 32))
        throw std::runtime_error("coloring parse: unreasonable header");
    Coloring col(static_cast<int>(a), static_cast<int>(n), static_cast<int>(c));
    uint64_t nwords = get_u64(in);
    if (nwords != col.words().size())
        throw std::runtime_error("coloring parse: word count mismatch");
    for (uint64_t i = 0; i < nwords; ++i) col.words()[i] = get_u64(in);
    return col;
}

Coloring load_coloring_any(std::istream& in) {
    int first = in.peek();
    if (first == 'R') return load_coloring_binary(in);
    return load_coloring_text(in);
}

} // namespace ramsey
