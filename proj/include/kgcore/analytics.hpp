#ifndef KGCORE_ANALYTICS_HPP
#define KGCORE_ANALYTICS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "kgcore/hypergraph.hpp"
#include "kgcore/index_tree.hpp"
#include "kgcore/query.hpp"

namespace kgcore {

/// Storage accounting by exhaustive tree walk. An entry is one stored NodeId
/// occurrence, in a leaf value or an aux depth set. approx_bytes is
/// 8 * total_entries plus a flat structural charge (16 per leaf, 24 per aux
/// depth record, 16 per branch).
struct IndexStats {
    std::int64_t total_entries = 0;
    std::int64_t approx_bytes = 0;
    std::int64_t leaf_count = 0;
    std::int64_t empty_leaf_count = 0;   // leaves with an empty value set
    std::int64_t aux_count = 0;          // positions holding >= 1 nonempty depth
    double mean_aux_depth = 0.0;         // over nonempty depth records; 0 if none
    double mean_aux_size = 0.0;
};

IndexStats storage_stats(const IndexTree& tree);

struct DiagonalJaccard {
    int k = 0;
    int g = 0;
    double jaccard = 0.0;   // J(leaf(k-1,g).value, leaf(k,g-1).value)
};

struct DiagonalSummary {
    std::vector<DiagonalJaccard> cells;   // (g,k) ascending
    double mean = 0.0;                    // 0 when cells is empty
};

/// Overlap of the two diagonally adjacent leaves at every position (k,g),
/// k,g >= 2, where both leaf(k-1,g) and leaf(k,g-1) exist; the position
/// itself need not. Operates on whichever tree is supplied, so a Naive tree
/// measures core-level overlap and an LseHV tree exact-coreness overlap.
/// J(empty, empty) counts as 1.
DiagonalSummary diagonal_jaccard(const IndexTree& tree);

struct PercentileQuery {
    int percentile = 0;   // 1..100, nearest-rank
    Query query;
    std::int64_t size = 0;
};

struct PercentileSuite {
    std::vector<PercentileQuery> queries;
    bool flagged = false;   // fewer than 100 positions: all returned instead
};

/// Ranks every (k,g) position by core size ascending (ties by g, then k) and
/// returns the 1st..100th percentile representatives.
PercentileSuite percentile_query_suite(const CoreSizeTable& sizes);

/// The 25th/50th/75th percentile positions of the same ranking.
std::vector<Query> quartile_queries(const CoreSizeTable& sizes);

struct BenchOptions {
    int threads = 1;
    int construction_runs = 3;       // build_seconds is the median
    bool run_peeling_baseline = true;
};

struct VariantBench {
    Variant variant = Variant::Naive;
    double build_seconds = 0.0;
    std::int64_t total_entries = 0;
    std::int64_t approx_bytes = 0;
    double query_seconds = 0.0;      // whole percentile suite
};

struct BenchReport {
    NodeId num_nodes = 0;
    EdgeId num_edges = 0;
    int g_star = 0;
    int k_star = 0;
    std::int64_t suite_size = 0;
    bool suite_flagged = false;
    std::vector<VariantBench> variants;
    double peeling_seconds = 0.0;    // same suite answered from scratch
    bool peeling_ran = false;
};

/// Times construction (median of construction_runs) and the percentile query
/// suite for each requested variant, then optionally re-answers the suite by
/// peeling the hypergraph from scratch. Naive suite timing measures the leaf
/// lookup itself, without copying the result out, since that is the whole
/// retrieval; the other variants materialise their result sets.
BenchReport bench(const Hypergraph& g, const std::vector<Variant>& variants,
                  const BenchOptions& opts = {});

void write_json(const BenchReport& report, std::ostream& out);

}  // namespace kgcore

#endif
