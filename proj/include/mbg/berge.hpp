#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mbg/board.hpp"
#include "mbg/edge.hpp"

namespace mbg {

// Berge verifiers are exact and exponential; hard cap per contract.
inline constexpr int kBergeMaxVertices = 12;

struct BergeCertificate {
    VertexList vertices;         // cyclic order v_0..v_{n-1}
    std::vector<EdgeId> edges;   // e_i contains {v_i, v_{i+1 mod n}}, all distinct
};

// Independent recheck of the Berge Hamilton cycle conditions.
inline bool check_berge_certificate(const BergeCertificate& cert, const std::vector<EdgeId>& hyperedges,
                                    int n) {
    if (static_cast<int>(cert.vertices.size()) != n || static_cast<int>(cert.edges.size()) != n) return false;
    std::vector<char> seen_v(static_cast<std::size_t>(n), 0);
    for (Vertex v : cert.vertices) {
        if (v < 0 || v >= n || seen_v[static_cast<std::size_t>(v)]) return false;
        seen_v[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<std::uint64_t> ranks;
    for (const EdgeId& e : cert.edges) ranks.push_back(e.rank);
    std::sort(ranks.begin(), ranks.end());
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end()) return false;
    for (const EdgeId& e : cert.edges) {
        bool in_h = false;
        for (const EdgeId& h : hyperedges)
            if (h.rank == e.rank) in_h = true;
        if (!in_h) return false;
    }
    for (int i = 0; i < n; ++i) {
        Vertex u = cert.vertices[static_cast<std::size_t>(i)];
        Vertex w = cert.vertices[static_cast<std::size_t>((i + 1) % n)];
        const EdgeId& e = cert.edges[static_cast<std::size_t>(i)];
        if (!e.contains(u) || !e.contains(w)) return false;
    }
    return true;
}

namespace detail {

// Incremental slot->edge matching used while backtracking over vertex
// sequences. A slot is one consecutive pair of the path; it must be assigned
// a distinct supporting edge. Kuhn augmentation on add; a failed add leaves
// the matching untouched, and removal only frees the popped slot.
class SlotMatcher {
  public:
    explicit SlotMatcher(int edge_count) : edge_slot_(static_cast<std::size_t>(edge_count), -1),
                                           seen_(static_cast<std::size_t>(edge_count), 0) {}

    bool push_slot(const std::vector<int>& candidates) {
        slots_.push_back(candidates);
        slot_edge_.push_back(-1);
        ++token_;
        if (augment(static_cast<int>(slots_.size()) - 1)) return true;
        slots_.pop_back();
        slot_edge_.pop_back();
        return false;
    }

    void pop_slot() {
        int e = slot_edge_.back();
        if (e >= 0) edge_slot_[static_cast<std::size_t>(e)] = -1;
        slot_edge_.pop_back();
        slots_.pop_back();
    }

    int edge_for_slot(int s) const { return slot_edge_[static_cast<std::size_t>(s)]; }

  private:
    bool augment(int s) {
        for (int e : slots_[static_cast<std::size_t>(s)]) {
            if (seen_[static_cast<std::size_t>(e)] == token_) continue;
            seen_[static_cast<std::size_t>(e)] = token_;
            int owner = edge_slot_[static_cast<std::size_t>(e)];
            if (owner < 0 || augment(owner)) {
                edge_slot_[static_cast<std::size_t>(e)] = s;
                slot_edge_[static_cast<std::size_t>(s)] = e;
                return true;
            }
        }
        return false;
    }

    std::vector<std::vector<int>> slots_;
    std::vector<int> slot_edge_;
    std::vector<int> edge_slot_;
    std::vector<int> seen_;
    int token_ = 0;
};

}  // namespace detail

// Exact Berge path/cycle search over a hypergraph with at most 12 vertices.
class BergeAnalyzer {
  public:
    BergeAnalyzer(std::vector<EdgeId> edges, int n) : edges_(std::move(edges)), n_(n) {
        if (n > kBergeMaxVertices) fail(ErrorKind::SizeLimit, "Berge verification capped at 12 vertices");
        support_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
        for (int idx = 0; idx < static_cast<int>(edges_.size()); ++idx) {
            const VertexList& vs = edges_[static_cast<std::size_t>(idx)].vertices;
            for (std::size_t a = 0; a < vs.size(); ++a)
                for (std::size_t b = a + 1; b < vs.size(); ++b) {
                    support(vs[a], vs[b]).push_back(idx);
                    support(vs[b], vs[a]).push_back(idx);
                }
        }
    }

    // Maximum number of vertices on a Berge path. With target >= 0, stops as
    // soon as a path of that many vertices is found.
    int longest_path(int target = -1) const {
        if (n_ == 0) return 0;
        best_ = 1;
        best_path_ = {0};
        target_ = target;
        for (Vertex s = 0; s < n_; ++s) {
            if (target_ >= 0 && best_ >= target_) break;
            if (best_ >= n_) break;
            detail::SlotMatcher matcher(static_cast<int>(edges_.size()));
            std::vector<char> used(static_cast<std::size_t>(n_), 0);
            used[static_cast<std::size_t>(s)] = 1;
            VertexList path{s};
            extend(path, used, matcher);
        }
        return best_;
    }

    VertexList best_path() const { return best_path_; }

    std::optional<BergeCertificate> hamiltonian_certificate() const {
        if (n_ < 3 || static_cast<int>(edges_.size()) < n_) return std::nullopt;
        // Cheap necessary condition: every consecutive pair needs support, so
        // every vertex needs two distinct partners.
        for (Vertex v = 0; v < n_; ++v) {
            int partners = 0;
            for (Vertex u = 0; u < n_; ++u)
                if (u != v && !support(v, u).empty()) ++partners;
            if (partners < 2) return std::nullopt;
        }
        detail::SlotMatcher matcher(static_cast<int>(edges_.size()));
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        used[0] = 1;
        VertexList cycle{0};
        BergeCertificate cert;
        if (close_cycle(cycle, used, matcher, cert)) return cert;
        return std::nullopt;
    }

  private:
    std::vector<int>& support(Vertex a, Vertex b) {
        return support_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }
    const std::vector<int>& support(Vertex a, Vertex b) const {
        return support_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)];
    }

    void extend(VertexList& path, std::vector<char>& used, detail::SlotMatcher& matcher) const {
        if (static_cast<int>(path.size()) > best_) {
            best_ = static_cast<int>(path.size());
            best_path_ = path;
        }
        if (best_ >= n_ || (target_ >= 0 && best_ >= target_)) return;
        Vertex last = path.back();
        for (Vertex w = 0; w < n_; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            const std::vector<int>& cand = support(last, w);
            if (cand.empty()) continue;
            if (!matcher.push_slot(cand)) continue;
            used[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            extend(path, used, matcher);
            path.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
            matcher.pop_slot();
            if (best_ >= n_ || (target_ >= 0 && best_ >= target_)) return;
        }
    }

    bool close_cycle(VertexList& cycle, std::vector<char>& used, detail::SlotMatcher& matcher,
                     BergeCertificate& cert) const {
        if (static_cast<int>(cycle.size()) == n_) {
            const std::vector<int>& closing = support(cycle.back(), cycle.front());
            if (closing.empty() || !matcher.push_slot(closing)) return false;
            cert.vertices = cycle;
            cert.edges.clear();
            for (int s = 0; s < n_; ++s) cert.edges.push_back(edges_[static_cast<std::size_t>(matcher.edge_for_slot(s))]);
            matcher.pop_slot();
            return true;
        }
        Vertex last = cycle.back();
        for (Vertex w = 1; w < n_; ++w) {
            if (used[static_cast<std::size_t>(w)]) continue;
            const std::vector<int>& cand = support(last, w);
            if (cand.empty()) continue;
            if (!matcher.push_slot(cand)) continue;
            used[static_cast<std::size_t>(w)] = 1;
            cycle.push_back(w);
            if (close_cycle(cycle, used, matcher, cert)) return true;
            cycle.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
            matcher.pop_slot();
        }
        return false;
    }

    std::vector<EdgeId> edges_;
    int n_;
    std::vector<std::vector<int>> support_;
    mutable int best_ = 1;
    mutable VertexList best_path_;
    mutable int target_ = -1;
};

inline std::pair<int, VertexList> longest_berge_path(const std::vector<EdgeId>& edges, int n) {
    BergeAnalyzer a(edges, n);
    int len = a.longest_path();
    return {len, a.best_path()};
}

inline std::optional<BergeCertificate> is_berge_hamiltonian(const std::vector<EdgeId>& edges, int n) {
    BergeAnalyzer a(edges, n);
    return a.hamiltonian_certificate();
}

struct BoosterSet {
    bool already_hamiltonian = false;
    std::vector<EdgeId> edges;
};

// Exactly the available edges e for which H u {e} has a longer Berge path
// than H or is Berge Hamiltonian. Requires e unclaimed by both players.
inline BoosterSet boosters(const std::vector<EdgeId>& hyperedges, const Board& board,
                           const GameState& state) {
    BoosterSet out;
    const int n = board.n();
    BergeAnalyzer base(hyperedges, n);
    if (base.hamiltonian_certificate()) {
        out.already_hamiltonian = true;
        return out;
    }
    const int base_len = base.longest_path();
    auto consider = [&](const EdgeId& e) {
        if (state.claimed(e)) return;
        std::vector<EdgeId> plus = hyperedges;
        plus.push_back(e);
        BergeAnalyzer ext(plus, n);
        // A Berge Hamilton cycle contains a spanning Berge path, so when
        // base_len < n the path target subsumes the Hamiltonicity test.
        bool boost = base_len < n ? ext.longest_path(base_len + 1) > base_len
                                  : ext.hamiltonian_certificate().has_value();
        if (boost) out.edges.push_back(e);
    };
    if (board.kind() == BoardKind::CompleteHypergraph) {
        for (std::uint64_t r = 0; r < board.edge_count(); ++r) consider(board.edge_from_rank(r));
    } else {
        for (const EdgeId& e : board.explicit_edges()) consider(e);
    }
    return out;
}

}  // namespace mbg
