#include "kgcore/analytics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include <json.hpp>

#include "kgcore/peeling.hpp"

namespace kgcore {

IndexStats storage_stats(const IndexTree& tree) {
    IndexStats s;
    std::int64_t branch_count = tree.g_max();
    std::int64_t aux_records = 0;
    std::int64_t aux_depth_sum = 0;
    std::int64_t aux_entry_sum = 0;
    for (const Branch& branch : tree.branches) {
        s.leaf_count += static_cast<std::int64_t>(branch.leaves.size());
        for (const LeafNode& leaf : branch.leaves) {
            s.total_entries += static_cast<std::int64_t>(leaf.value.size());
            if (leaf.value.empty()) ++s.empty_leaf_count;
            if (!leaf.aux.empty()) ++s.aux_count;
            for (const auto& [d, nodes] : leaf.aux) {
                ++aux_records;
                aux_depth_sum += d;
                aux_entry_sum += static_cast<std::int64_t>(nodes.size());
            }
        }
    }
    s.total_entries += aux_entry_sum;
    s.approx_bytes = 8 * s.total_entries + 16 * s.leaf_count + 24 * aux_records +
                     16 * branch_count;
    if (aux_records > 0) {
        s.mean_aux_depth = static_cast<double>(aux_depth_sum) / aux_records;
        s.mean_aux_size = static_cast<double>(aux_entry_sum) / aux_records;
    }
    return s;
}

namespace {

double jaccard(const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t inter = 0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else {
            ++inter;
            ++ia;
            ++ib;
        }
    }
    return static_cast<double>(inter) /
           static_cast<double>(a.size() + b.size() - inter);
}

}  // namespace

DiagonalSummary diagonal_jaccard(const IndexTree& tree) {
    DiagonalSummary summary;
    double total = 0.0;
    for (int g = 2; g <= tree.g_max(); ++g) {
        int k_hi = std::min(tree.k_max(g) + 1, tree.k_max(g - 1));
        for (int k = 2; k <= k_hi; ++k) {
            const LeafNode* left = tree.leaf(k - 1, g);
            const LeafNode* below = tree.leaf(k, g - 1);
            double j = jaccard(left->value, below->value);
            summary.cells.push_back({k, g, j});
            total += j;
        }
    }
    if (!summary.cells.empty()) summary.mean = total / summary.cells.size();
    return summary;
}

namespace {

struct RankedPosition {
    std::int64_t size;
    int g;
    int k;
};

std::vector<RankedPosition> ranked_positions(const CoreSizeTable& sizes) {
    std::vector<RankedPosition> all;
    for (int g = 1; g <= sizes.g_max(); ++g)
        for (int k = 1; k <= sizes.k_max(g); ++k)
            all.push_back({sizes.size(k, g), g, k});
    std::sort(all.begin(), all.end(), [](const RankedPosition& a, const RankedPosition& b) {
        if (a.size != b.size) return a.size < b.size;
        if (a.g != b.g) return a.g < b.g;
        return a.k < b.k;
    });
    return all;
}

// nearest-rank index for percentile p of n items, 1-based
std::size_t nearest_rank(int p, std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<std::uint64_t>(p) * n + 99) / 100);
}

}  // namespace

PercentileSuite percentile_query_suite(const CoreSizeTable& sizes) {
    PercentileSuite suite;
    auto all = ranked_positions(sizes);
    std::size_t n = all.size();
    if (n == 0) {
        suite.flagged = true;
        return suite;
    }
    if (n < 100) {
        suite.flagged = true;
        for (std::size_t i = 1; i <= n; ++i) {
            const auto& pos = all[i - 1];
            int p = static_cast<int>((i * 100 + n - 1) / n);
            suite.queries.push_back({p, {pos.k, pos.g}, pos.size});
        }
        return suite;
    }
    for (int p = 1; p <= 100; ++p) {
        const auto& pos = all[nearest_rank(p, n) - 1];
        suite.queries.push_back({p, {pos.k, pos.g}, pos.size});
    }
    return suite;
}

std::vector<Query> quartile_queries(const CoreSizeTable& sizes) {
    auto all = ranked_positions(sizes);
    std::vector<Query> out;
    if (all.empty()) return out;
    for (int p : {25, 50, 75}) {
        const auto& pos = all[nearest_rank(p, all.size()) - 1];
        out.push_back({pos.k, pos.g});
    }
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double median3(double a, double b, double c) {
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

}  // namespace

BenchReport bench(const Hypergraph& g, const std::vector<Variant>& variants,
                  const BenchOptions& opts) {
    BenchReport report;
    report.num_nodes = g.num_nodes();
    report.num_edges = g.num_edges();

    PercentileSuite suite;
    bool have_suite = false;

    for (Variant variant : variants) {
        VariantBench vb;
        vb.variant = variant;

        int runs = std::max(1, opts.construction_runs);
        std::vector<double> times;
        times.reserve(runs);
        IndexTree tree;
        for (int r = 0; r < runs; ++r) {
            auto start = Clock::now();
            tree = build_index(g, variant, opts.threads);
            times.push_back(seconds_since(start));
        }
        vb.build_seconds = times.size() >= 3 ? median3(times[0], times[1], times[2])
                                             : times.front();

        IndexStats stats = storage_stats(tree);
        vb.total_entries = stats.total_entries;
        vb.approx_bytes = stats.approx_bytes;

        if (!have_suite) {
            suite = percentile_query_suite(tree.core_sizes);
            report.g_star = tree.g_max();
            report.k_star = tree.k_max(1);
            report.suite_size = static_cast<std::int64_t>(suite.queries.size());
            report.suite_flagged = suite.flagged;
            have_suite = true;
        }

        // A naive hit is the leaf lookup itself; copying the value out would
        // time the caller's allocation, not the index.
        std::int64_t checksum = 0;
        auto start = Clock::now();
        if (variant == Variant::Naive) {
            for (const auto& pq : suite.queries) {
                const LeafNode* leaf = tree.leaf(pq.query.k, pq.query.g);
                checksum += leaf ? static_cast<std::int64_t>(leaf->value.size()) : 0;
            }
        } else {
            for (const auto& pq : suite.queries)
                checksum += static_cast<std::int64_t>(query_core(tree, pq.query).size());
        }
        vb.query_seconds = seconds_since(start);
        std::int64_t expected = 0;
        for (const auto& pq : suite.queries) expected += pq.size;
        if (checksum != expected)
            throw std::logic_error("bench query results disagree with size table");

        report.variants.push_back(vb);
    }

    if (opts.run_peeling_baseline && have_suite) {
        // each query is answered from the raw hypergraph, co-occurrence included
        std::int64_t checksum = 0;
        auto start = Clock::now();
        for (const auto& pq : suite.queries)
            checksum += static_cast<std::int64_t>(kg_core(g, pq.query.k, pq.query.g).size());
        report.peeling_seconds = seconds_since(start);
        report.peeling_ran = true;
        std::int64_t expected = 0;
        for (const auto& pq : suite.queries) expected += pq.size;
        if (checksum != expected)
            throw std::logic_error("peeling baseline disagrees with size table");
    }
    return report;
}

void write_json(const BenchReport& report, std::ostream& out) {
    nlohmann::json doc;
    doc["dataset"] = {{"nodes", report.num_nodes},
                      {"edges", report.num_edges},
                      {"g_star", report.g_star},
                      {"k_star", report.k_star}};
    doc["suite"] = {{"queries", report.suite_size}, {"flagged", report.suite_flagged}};
    doc["variants"] = nlohmann::json::array();
    for (const auto& vb : report.variants) {
        doc["variants"].push_back({{"variant", std::string(to_string(vb.variant))},
                                   {"build_seconds", vb.build_seconds},
                                   {"total_entries", vb.total_entries},
                                   {"approx_bytes", vb.approx_bytes},
                                   {"query_seconds", vb.query_seconds}});
    }
    doc["peeling"] = {{"ran", report.peeling_ran}, {"seconds", report.peeling_seconds}};
    out << doc.dump(2) << '\n';
}

}  // namespace kgcore
