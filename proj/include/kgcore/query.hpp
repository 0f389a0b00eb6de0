#ifndef KGCORE_QUERY_HPP
#define KGCORE_QUERY_HPP

#include <cstdint>
#include <vector>

#include "kgcore/hypergraph.hpp"
#include "kgcore/index_tree.hpp"

namespace kgcore {

struct Query {
    int k = 1;
    int g = 1;
};

/// Retrieves the (k,g)-core as sorted internal ids. Out-of-range (k,g) is an
/// empty core, not an error; k < 1 or g < 1 throws std::invalid_argument.
std::vector<NodeId> query_core(const IndexTree& tree, Query q);

// Per-variant entry points. query_core dispatches on tree.variant; calling a
// mismatched one throws std::invalid_argument.
std::vector<NodeId> query_naive(const IndexTree& tree, Query q);
std::vector<NodeId> query_lse_h(const IndexTree& tree, Query q);
std::vector<NodeId> query_lse_hv(const IndexTree& tree, Query q);
std::vector<NodeId> query_lse_hvd(const IndexTree& tree, Query q);

/// |(k,g)-core| straight from the size table, no materialisation.
std::int64_t core_size(const IndexTree& tree, Query q);

struct SizeQuery {
    std::int64_t lb = 0;
    std::int64_t ub = 0;
};

struct SizeQueryResult {
    int k = 0;
    int g = 0;
    std::int64_t size = 0;

    friend bool operator==(const SizeQueryResult&, const SizeQueryResult&) = default;
};

/// All (k,g) with lb <= |(k,g)-core| <= ub, ordered by (g,k) ascending. Each
/// row of the size table is non-increasing, so the qualifying k form a
/// contiguous window found by two binary searches. lb > ub throws
/// std::invalid_argument.
std::vector<SizeQueryResult> size_bounded_query(const IndexTree& tree, SizeQuery q);

/// Same contract, computed by actually peeling the hypergraph per (k,g).
/// Baseline for benchmarks and cross-checks.
std::vector<SizeQueryResult> size_bounded_query_peeling(const Hypergraph& g, SizeQuery q);

}  // namespace kgcore

#endif
