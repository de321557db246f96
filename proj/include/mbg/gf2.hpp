#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mbg/edge.hpp"

namespace mbg {

// Dense GF(2) vector as 64-bit words.
using BitVec = std::vector<std::uint64_t>;

inline BitVec bitvec_zero(int bits) { return BitVec(static_cast<std::size_t>((bits + 63) / 64), 0); }

inline void bit_set(BitVec& v, int i) { v[static_cast<std::size_t>(i) >> 6] |= 1ULL << (i & 63); }

inline bool bit_get(const BitVec& v, int i) {
    return (v[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1ULL;
}

inline void bit_xor(BitVec& a, const BitVec& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] ^= b[w];
}

inline bool bit_any(const BitVec& v) {
    for (auto w : v)
        if (w) return true;
    return false;
}

inline int bit_lowest(const BitVec& v) {
    for (std::size_t w = 0; w < v.size(); ++w)
        if (v[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w])));
    return -1;
}

inline BitVec column_of_edge(const EdgeId& e, int n) {
    BitVec c = bitvec_zero(n);
    for (Vertex v : e.vertices) bit_set(c, v);
    return c;
}

// Incremental rank of the vertex/edge incidence matrix: one column per Maker
// edge, maintained as a pivoted column basis so each new edge costs O(n)
// words. Basis edges double as the full-rank certificate.
class StreamingRank {
  public:
    explicit StreamingRank(int n) : n_(n) {}

    // Returns true when the edge's column increased the rank.
    bool add_edge(const EdgeId& e) {
        BitVec c = column_of_edge(e, n_);
        for (const Pivot& p : basis_) {
            if (bit_get(c, p.pivot)) bit_xor(c, p.column);
        }
        if (!bit_any(c)) return false;
        basis_.push_back({std::move(c), 0, e});
        basis_.back().pivot = bit_lowest(basis_.back().column);
        return true;
    }

    int rank() const { return static_cast<int>(basis_.size()); }
    int n() const { return n_; }

    std::vector<EdgeId> basis_edges() const {
        std::vector<EdgeId> out;
        out.reserve(basis_.size());
        for (const Pivot& p : basis_) out.push_back(p.edge);
        return out;
    }

    // A nonempty set S of rows whose GF(2) sum is zero, or nullopt when the
    // rank is n. The witness is any nonzero solution of x^T A = 0, found by
    // eliminating the basis columns as linear constraints on x.
    std::optional<VertexList> find_dependency() const {
        if (rank() == n_) return std::nullopt;
        // Row-reduce the constraint system {x . column = 0}.
        std::vector<BitVec> rows;
        rows.reserve(basis_.size());
        for (const Pivot& p : basis_) rows.push_back(p.column);
        std::vector<int> pivot_of_row;
        std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
        std::size_t r = 0;
        for (int col = 0; col < n_ && r < rows.size(); ++col) {
            std::size_t sel = r;
            while (sel < rows.size() && !bit_get(rows[sel], col)) ++sel;
            if (sel == rows.size()) continue;
            std::swap(rows[r], rows[sel]);
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (i != r && bit_get(rows[i], col)) bit_xor(rows[i], rows[r]);
            pivot_of_row.push_back(col);
            is_pivot[static_cast<std::size_t>(col)] = true;
            ++r;
        }
        int free_var = -1;
        for (int col = 0; col < n_; ++col)
            if (!is_pivot[static_cast<std::size_t>(col)]) {
                free_var = col;
                break;
            }
        BitVec x = bitvec_zero(n_);
        bit_set(x, free_var);
        for (std::size_t i = 0; i < pivot_of_row.size(); ++i)
            if (bit_get(rows[i], free_var)) bit_set(x, pivot_of_row[i]);
        VertexList s;
        for (int v = 0; v < n_; ++v)
            if (bit_get(x, v)) s.push_back(v);
        return s;
    }

  private:
    struct Pivot {
        BitVec column;
        int pivot;
        EdgeId edge;
    };
    int n_;
    std::vector<Pivot> basis_;
};

// Batch rank by row elimination on the n x m incidence matrix. Independent
// route from StreamingRank; the two must agree on every matrix.
inline int gf2_rank(const std::vector<EdgeId>& edges, int n) {
    const int m = static_cast<int>(edges.size());
    if (m == 0) return 0;
    std::vector<BitVec> rows(static_cast<std::size_t>(n), bitvec_zero(m));
    for (int j = 0; j < m; ++j)
        for (Vertex v : edges[static_cast<std::size_t>(j)].vertices)
            bit_set(rows[static_cast<std::size_t>(v)], j);
    int rank = 0;
    for (int col = 0; col < m && rank < n; ++col) {
        int sel = -1;
        for (int i = rank; i < n; ++i)
            if (bit_get(rows[static_cast<std::size_t>(i)], col)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(sel)]);
        for (int i = rank + 1; i < n; ++i)
            if (bit_get(rows[static_cast<std::size_t>(i)], col))
                bit_xor(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(rank)]);
        ++rank;
    }
    return rank;
}

inline std::optional<VertexList> find_dependency(const std::vector<EdgeId>& edges, int n) {
    StreamingRank sr(n);
    for (const EdgeId& e : edges) sr.add_edge(e);
    return sr.find_dependency();
}

// Full-rank target: n when k is odd, n-1 when k is even (all-rows sum is zero
// for even k, so rank n is impossible).
inline int rank_target(int n, int k) { return k % 2 == 1 ? n : n - 1; }

}  // namespace mbg
