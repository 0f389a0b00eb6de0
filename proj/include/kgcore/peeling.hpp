#ifndef KGCORE_PEELING_HPP
#define KGCORE_PEELING_HPP

#include <cstdint>
#include <vector>

#include "kgcore/hypergraph.hpp"

namespace kgcore {

/**
 * Shell structure for one fixed g: shell(k) holds the nodes whose g-coreness
 * is exactly k, i.e. the nodes of the (k,g)-core that are not in the
 * (k+1,g)-core. Shells are pairwise disjoint and the suffix union
 * shell(k) u ... u shell(k_star) is exactly the (k,g)-core.
 */
struct ShellDecomposition {
    int g = 0;
    // shells[i] = nodes with g-coreness i+1, each sorted ascending.
    std::vector<std::vector<NodeId>> shells;
    // coreness[v] = g-coreness of v at this g, 0 if v is in no (k,g)-core.
    std::vector<int> coreness;

    int k_star() const { return static_cast<int>(shells.size()); }
    bool empty() const { return shells.empty(); }
    const std::vector<NodeId>& shell(int k) const { return shells[k - 1]; }
};

/**
 * Incremental (k,g)-core peeler for one fixed g. Maintains the surviving node
 * set H and per-node qualified-neighbour counters; advance(k) deletes nodes
 * with fewer than k qualified neighbours until a fixpoint, using a FIFO
 * worklist (each removed neighbour relation costs one counter decrement).
 * Thresholds must be advanced in non-decreasing order; the survivors after
 * advance(k) are exactly the (k,g)-core.
 */
class Peeler {
public:
    Peeler(const CooccurrenceGraph& cg, int g);

    /// Peels H down to the (k,g)-core; returns the removed nodes, sorted.
    std::vector<NodeId> advance(int k);

    std::int64_t alive_count() const { return alive_count_; }
    std::vector<NodeId> alive_members() const;

private:
    const CooccurrenceGraph& cg_;
    int g_;
    int threshold_ = 0;
    std::vector<char> alive_;
    std::vector<int> degree_;  // qualified neighbours still alive
    std::int64_t alive_count_ = 0;
};

/// Ground-truth (k,g)-core by peeling: the fixpoint of deleting every node
/// with fewer than k surviving neighbours that share at least g edges with it.
/// The result is sorted ascending and may be empty.
std::vector<NodeId> kg_core(const CooccurrenceGraph& cg, int k, int g);
std::vector<NodeId> kg_core(const Hypergraph& g, int k, int gq);

/// Shell enumeration for fixed g: peels at k = 1, 2, ... reusing the
/// surviving set between thresholds, and records each difference as a shell.
ShellDecomposition enum_h(const CooccurrenceGraph& cg, int g);
ShellDecomposition enum_h(const Hypergraph& g, int gq);

/**
 * Shell decompositions for every g with a nonempty (1,g)-core.
 * g_star is the largest such g, k_star the largest k with a nonempty
 * (k,1)-core, and k_star_of(g) the per-branch maximum.
 */
struct CorenessTables {
    std::vector<ShellDecomposition> per_g;  // index g-1

    int g_star() const { return static_cast<int>(per_g.size()); }
    int k_star() const { return per_g.empty() ? 0 : per_g.front().k_star(); }
    int k_star_of(int g) const {
        return (g >= 1 && g <= g_star()) ? per_g[g - 1].k_star() : 0;
    }
    /// g-coreness of v at g; 0 when v is in no (k,g)-core.
    int g_coreness(NodeId v, int g) const {
        return (g >= 1 && g <= g_star()) ? per_g[g - 1].coreness[v] : 0;
    }
    /// k-coreness of v at k: the largest g with g_coreness(v,g) >= k; 0 if none.
    int k_coreness(NodeId v, int k) const;
};

/// Runs enum_h for g = 1, 2, ... until the decomposition comes back empty.
/// Distinct g values are independent; `threads` > 1 computes them in parallel.
CorenessTables coreness_tables(const Hypergraph& g, int threads = 1);
CorenessTables coreness_tables(const CooccurrenceGraph& cg, int threads = 1);

}  // namespace kgcore

#endif
