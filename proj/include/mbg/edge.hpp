#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "mbg/common.hpp"

namespace mbg {

using Vertex = int;
using VertexList = std::vector<Vertex>;

// Colexicographic rank of a strictly increasing k-subset of [0, n).
// rank = sum_j C(v_j, j+1) over 0-based positions j.
inline std::uint64_t colex_rank(const VertexList& vertices, int n) {
    const int k = static_cast<int>(vertices.size());
    if (k == 0) fail(ErrorKind::InvalidEdge, "empty vertex set");
    std::uint64_t r = 0;
    for (int j = 0; j < k; ++j) {
        Vertex v = vertices[j];
        if (v < 0 || v >= n) fail(ErrorKind::InvalidEdge, "vertex out of range: " + std::to_string(v));
        if (j > 0 && vertices[j - 1] >= v) fail(ErrorKind::InvalidEdge, "vertices not strictly increasing");
        r += binomial(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(j) + 1);
    }
    return r;
}

// Inverse of colex_rank: the r-th k-subset of [0, n) in colex order.
inline VertexList colex_unrank(std::uint64_t r, int n, int k) {
    if (k <= 0 || k > n) fail(ErrorKind::InvalidParameters, "colex_unrank: bad k");
    if (r >= binomial(n, k)) fail(ErrorKind::InvalidRank, "rank out of range: " + std::to_string(r));
    VertexList out(static_cast<std::size_t>(k));
    int v = n - 1;
    for (int j = k; j >= 1; --j) {
        while (binomial(v, j) > r) --v;
        out[static_cast<std::size_t>(j - 1)] = v;
        r -= binomial(v, j);
        --v;
    }
    return out;
}

// An edge of a k-uniform board: the sorted vertex set plus its colex rank.
// The rank doubles as the hash key for claimed-edge sets.
struct EdgeId {
    VertexList vertices;
    std::uint64_t rank = 0;

    EdgeId() = default;
    EdgeId(VertexList verts, int n) : vertices(std::move(verts)) { rank = colex_rank(vertices, n); }

    static EdgeId from_rank(std::uint64_t r, int n, int k) {
        EdgeId e;
        e.vertices = colex_unrank(r, n, k);
        e.rank = r;
        return e;
    }

    bool contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

    bool operator==(const EdgeId& o) const { return rank == o.rank; }
    bool operator!=(const EdgeId& o) const { return rank != o.rank; }
    bool operator<(const EdgeId& o) const { return rank < o.rank; }
};

inline std::string to_string(const EdgeId& e) {
    std::string s = "{";
    for (std::size_t i = 0; i < e.vertices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.vertices[i]);
    }
    return s + "}";
}

}  // namespace mbg
