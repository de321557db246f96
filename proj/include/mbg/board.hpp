#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mbg/common.hpp"
#include "mbg/edge.hpp"

namespace mbg {

enum class BoardKind { CompleteHypergraph, RegularGraph, LCycleBipartite };

enum class Player { Maker, Breaker };

inline const char* to_string(Player p) { return p == Player::Maker ? "Maker" : "Breaker"; }

// The A_1..A_D family of (k-1)-sets plus the reservoir B used by the
// restricted-board Hamilton l-cycle game. 0-based: A_i covers the arc
// {(k-l-1)i, ..., (k-l-1)i + k-2} reduced modulo n-D, and B is the last D
// vertices of [0, n).
struct AFamily {
    int n = 0, k = 0, l = 0, D = 0;
    std::vector<VertexList> sets;  // D sorted (k-1)-subsets of [0, n-D)
    VertexList b_vertices;         // {n-D, ..., n-1}

    int color_of_b(Vertex w) const { return w - (n - D); }
    Vertex b_vertex(int color) const { return n - D + color; }
};

inline AFamily make_afamily(int n, int k, int l) {
    if (k < 2 || l < 0 || 2 * l >= k) fail(ErrorKind::InvalidParameters, "l-cycle requires 0 <= l < k/2");
    if (n % (k - l) != 0) fail(ErrorKind::InvalidParameters, "(k-l) must divide n");
    const int D = n / (k - l);
    if (D < k) fail(ErrorKind::InvalidParameters, "D = n/(k-l) must be at least k");
    AFamily fam;
    fam.n = n;
    fam.k = k;
    fam.l = l;
    fam.D = D;
    const int base = n - D;  // = D*(k-l-1), the arc cycle length
    fam.sets.reserve(static_cast<std::size_t>(D));
    for (int i = 0; i < D; ++i) {
        VertexList a(static_cast<std::size_t>(k - 1));
        for (int j = 0; j < k - 1; ++j) a[static_cast<std::size_t>(j)] = ((k - l - 1) * i + j) % base;
        std::sort(a.begin(), a.end());
        fam.sets.push_back(std::move(a));
    }
    fam.b_vertices.resize(static_cast<std::size_t>(D));
    for (int j = 0; j < D; ++j) fam.b_vertices[static_cast<std::size_t>(j)] = base + j;
    return fam;
}

// A playable board. Construction is immutable; GameState carries all
// per-game mutation so one Board can back many concurrent games.
class Board {
  public:
    static Board complete(int n, int k) {
        if (k < 2 || n < k) fail(ErrorKind::InvalidParameters, "complete board needs n >= k >= 2");
        Board b;
        b.kind_ = BoardKind::CompleteHypergraph;
        b.n_ = n;
        b.k_ = k;
        b.edge_count_ = binomial(n, k);
        b.capacity_.assign(static_cast<std::size_t>(n), binomial(n - 1, k - 1));
        return b;
    }

    // An arbitrary regular graph (k = 2) given by its edge list. Regularity is
    // validated at construction.
    static Board regular(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        if (n < 2) fail(ErrorKind::InvalidParameters, "regular board needs n >= 2");
        Board b;
        b.kind_ = BoardKind::RegularGraph;
        b.n_ = n;
        b.k_ = 2;
        b.capacity_.assign(static_cast<std::size_t>(n), 0);
        b.incident_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u > v) std::swap(u, v);
            EdgeId e(VertexList{u, v}, n);
            if (b.edge_set_.count(e.rank)) fail(ErrorKind::InvalidParameters, "duplicate edge in regular board");
            b.edge_set_.insert(e.rank);
            b.edges_.push_back(e);
            b.incident_[static_cast<std::size_t>(u)].push_back(e);
            b.incident_[static_cast<std::size_t>(v)].push_back(e);
            ++b.capacity_[static_cast<std::size_t>(u)];
            ++b.capacity_[static_cast<std::size_t>(v)];
        }
        b.edge_count_ = b.edges_.size();
        const std::uint64_t d = b.capacity_.empty() ? 0 : b.capacity_[0];
        for (auto c : b.capacity_)
            if (c != d) fail(ErrorKind::InvalidParameters, "graph is not regular");
        b.degree_ = static_cast<int>(d);
        return b;
    }

    // The section-5 restricted board: exactly the D*D edges A_i u {w}, w in B.
    // Its bipartite view Gamma (arc index vs B vertex) is D-regular.
    static Board lcycle(int n, int k, int l) {
        Board b;
        b.kind_ = BoardKind::LCycleBipartite;
        b.n_ = n;
        b.k_ = k;
        b.family_ = make_afamily(n, k, l);
        const int D = b.family_->D;
        b.degree_ = D;
        b.capacity_.assign(static_cast<std::size_t>(n), 0);
        b.incident_.assign(static_cast<std::size_t>(n), {});
        for (int i = 0; i < D; ++i) {
            for (int j = 0; j < D; ++j) {
                VertexList verts = b.family_->sets[static_cast<std::size_t>(i)];
                verts.push_back(b.family_->b_vertices[static_cast<std::size_t>(j)]);
                std::sort(verts.begin(), verts.end());
                EdgeId e(std::move(verts), n);
                b.gamma_of_[e.rank] = {i, j};
                b.edge_set_.insert(e.rank);
                b.edges_.push_back(e);
                for (Vertex v : e.vertices) {
                    b.incident_[static_cast<std::size_t>(v)].push_back(e);
                    ++b.capacity_[static_cast<std::size_t>(v)];
                }
            }
        }
        b.edge_count_ = b.edges_.size();
        return b;
    }

    BoardKind kind() const { return kind_; }
    int n() const { return n_; }
    int k() const { return k_; }
    int l() const { return family_ ? family_->l : 0; }
    std::uint64_t edge_count() const { return edge_count_; }
    // Incident-edge capacity: N = C(n-1, k-1) on complete boards, D otherwise.
    std::uint64_t capacity(Vertex v) const { return capacity_[static_cast<std::size_t>(v)]; }

    const AFamily& family() const {
        if (!family_) fail(ErrorKind::InvalidParameters, "board has no A-family");
        return *family_;
    }

    bool contains(const EdgeId& e) const {
        if (static_cast<int>(e.vertices.size()) != k_) return false;
        if (e.vertices.front() < 0 || e.vertices.back() >= n_) return false;
        if (kind_ == BoardKind::CompleteHypergraph) return true;
        return edge_set_.count(e.rank) > 0;
    }

    // Gamma endpoints (arc index, B index) of a restricted edge.
    std::pair<int, int> gamma_of(const EdgeId& e) const {
        auto it = gamma_of_.find(e.rank);
        if (it == gamma_of_.end()) fail(ErrorKind::InvalidEdge, "edge not on restricted board: " + to_string(e));
        return it->second;
    }

    EdgeId edge_of_gamma(int arc, int bIndex) const {
        const AFamily& fam = family();
        VertexList verts = fam.sets[static_cast<std::size_t>(arc)];
        verts.push_back(fam.b_vertices[static_cast<std::size_t>(bIndex)]);
        std::sort(verts.begin(), verts.end());
        return EdgeId(std::move(verts), n_);
    }

    // Enumerates the incident edges of v in a fixed order.
    template <typename Fn>
    void for_each_incident(Vertex v, Fn&& fn) const {
        if (kind_ == BoardKind::CompleteHypergraph) {
            const std::uint64_t cap = capacity(v);
            for (std::uint64_t r = 0; r < cap; ++r) fn(incident_from_rank(v, r));
        } else {
            for (const EdgeId& e : incident_[static_cast<std::size_t>(v)]) fn(e);
        }
    }

    // The r-th edge (colex over the remaining vertices) incident to v on a
    // complete board.
    EdgeId incident_from_rank(Vertex v, std::uint64_t r) const {
        VertexList rest = colex_unrank(r, n_ - 1, k_ - 1);
        VertexList verts;
        verts.reserve(static_cast<std::size_t>(k_));
        for (Vertex u : rest) verts.push_back(u < v ? u : u + 1);
        verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        return EdgeId(std::move(verts), n_);
    }

    // The r-th incident edge of v in enumeration order, any board kind.
    EdgeId incident_at(Vertex v, std::uint64_t r) const {
        if (kind_ == BoardKind::CompleteHypergraph) return incident_from_rank(v, r);
        return incident_[static_cast<std::size_t>(v)][static_cast<std::size_t>(r)];
    }

    EdgeId edge_from_rank(std::uint64_t r) const {
        if (kind_ == BoardKind::CompleteHypergraph) return EdgeId::from_rank(r, n_, k_);
        fail(ErrorKind::InvalidParameters, "edge_from_rank only on complete boards");
    }

    const std::vector<EdgeId>& explicit_edges() const { return edges_; }

  private:
    Board() = default;

    BoardKind kind_ = BoardKind::CompleteHypergraph;
    int n_ = 0, k_ = 0;
    int degree_ = 0;
    std::uint64_t edge_count_ = 0;
    std::vector<std::uint64_t> capacity_;
    std::optional<AFamily> family_;
    std::vector<EdgeId> edges_;                           // explicit boards only
    std::vector<std::vector<EdgeId>> incident_;           // explicit boards only
    std::unordered_set<std::uint64_t> edge_set_;          // explicit boards only
    std::unordered_map<std::uint64_t, std::pair<int, int>> gamma_of_;
};

// Claimed-edge sets for both players plus the incidence counters that make
// availability queries O(1). Single-owner: one game loop mutates it.
struct GameState {
    explicit GameState(const Board& board, int bias)
        : d_maker(static_cast<std::size_t>(board.n()), 0),
          d_breaker(static_cast<std::size_t>(board.n()), 0),
          bias(bias),
          board_(&board) {}

    std::unordered_set<std::uint64_t> maker_edges;
    std::unordered_set<std::uint64_t> breaker_edges;
    std::vector<std::uint32_t> d_maker;    // claimed-incidence counts per vertex
    std::vector<std::uint32_t> d_breaker;
    int round = 0;
    int bias = 1;
    std::unordered_map<std::uint64_t, int> color_of;

    const Board& board() const { return *board_; }

    bool claimed(const EdgeId& e) const { return maker_edges.count(e.rank) || breaker_edges.count(e.rank); }

    std::uint64_t total_claimed() const { return maker_edges.size() + breaker_edges.size(); }

    std::uint64_t available_total() const { return board_->edge_count() - total_claimed(); }

  private:
    const Board* board_;
};

// Incident edges of v unclaimed by both players.
inline std::uint64_t available_degree(const Board& board, const GameState& state, Vertex v) {
    return board.capacity(v) - state.d_maker[static_cast<std::size_t>(v)] -
           state.d_breaker[static_cast<std::size_t>(v)];
}

inline void claim(GameState& state, Player player, const EdgeId& e) {
    const Board& board = state.board();
    if (!board.contains(e)) fail(ErrorKind::InvalidEdge, "edge not on board: " + to_string(e));
    if (state.claimed(e))
        fail(ErrorKind::IllegalMove,
             std::string(to_string(player)) + " claims already-claimed edge " + to_string(e));
    auto& mine = player == Player::Maker ? state.maker_edges : state.breaker_edges;
    auto& deg = player == Player::Maker ? state.d_maker : state.d_breaker;
    mine.insert(e.rank);
    for (Vertex v : e.vertices) ++deg[static_cast<std::size_t>(v)];
}

// Uniform over the incident edges of v claimed by neither player, or nullopt
// if none. Rejection sampling against the incident space, with explicit
// enumeration once availability drops below 10% of capacity.
inline std::optional<EdgeId> sample_available_incident_edge(const Board& board, const GameState& state,
                                                            Vertex v, Rng& rng) {
    const std::uint64_t cap = board.capacity(v);
    const std::uint64_t avail = available_degree(board, state, v);
    if (avail == 0) return std::nullopt;
    if (avail * 10 >= cap) {
        for (;;) {
            EdgeId e = board.incident_at(v, rng.below(cap));
            if (!state.claimed(e)) return e;
        }
    }
    std::vector<EdgeId> options;
    board.for_each_incident(v, [&](const EdgeId& e) {
        if (!state.claimed(e)) options.push_back(e);
    });
    if (options.empty()) return std::nullopt;
    return options[rng.below(options.size())];
}

// Uniform over all available board edges, or nullopt if exhausted.
inline std::optional<EdgeId> sample_available_edge(const Board& board, const GameState& state, Rng& rng) {
    const std::uint64_t total = board.edge_count();
    const std::uint64_t avail = state.available_total();
    if (avail == 0) return std::nullopt;
    if (board.kind() == BoardKind::CompleteHypergraph && avail * 10 >= total) {
        for (;;) {
            EdgeId e = board.edge_from_rank(rng.below(total));
            if (!state.claimed(e)) return e;
        }
    }
    std::vector<EdgeId> options;
    if (board.kind() == BoardKind::CompleteHypergraph) {
        options.reserve(static_cast<std::size_t>(avail));
        for (std::uint64_t r = 0; r < total; ++r) {
            EdgeId e = board.edge_from_rank(r);
            if (!state.claimed(e)) options.push_back(std::move(e));
        }
    } else {
        for (const EdgeId& e : board.explicit_edges())
            if (!state.claimed(e)) options.push_back(e);
    }
    return options[rng.below(options.size())];
}

inline EdgeId make_edge(const Board& board, VertexList vertices) {
    std::sort(vertices.begin(), vertices.end());
    return EdgeId(std::move(vertices), board.n());
}

inline std::pair<Board, AFamily> build_lcycle_board(int n, int k, int l) {
    Board b = Board::lcycle(n, k, l);
    AFamily fam = b.family();
    return {std::move(b), std::move(fam)};
}

}  // namespace mbg
