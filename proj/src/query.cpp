#include "kgcore/query.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgcore/peeling.hpp"

namespace kgcore {

namespace {

void check_query(Query q) {
    if (q.k < 1 || q.g < 1) throw std::invalid_argument("query requires k >= 1 and g >= 1");
}

void check_variant(const IndexTree& tree, Variant expected) {
    if (tree.variant != expected) throw std::invalid_argument("index variant mismatch");
}

std::vector<NodeId> sort_unique(std::vector<NodeId> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

}  // namespace

std::vector<NodeId> query_naive(const IndexTree& tree, Query q) {
    check_query(q);
    check_variant(tree, Variant::Naive);
    const LeafNode* leaf = tree.leaf(q.k, q.g);
    return leaf ? leaf->value : std::vector<NodeId>{};
}

std::vector<NodeId> query_lse_h(const IndexTree& tree, Query q) {
    check_query(q);
    check_variant(tree, Variant::LseH);
    std::vector<NodeId> out;
    // shells are disjoint, so the next-link walk needs no dedup
    for (int k = q.k; k <= tree.k_max(q.g); ++k) {
        const auto& value = tree.leaf(k, q.g)->value;
        out.insert(out.end(), value.begin(), value.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<NodeId> query_lse_hv(const IndexTree& tree, Query q) {
    check_query(q);
    check_variant(tree, Variant::LseHV);
    std::vector<NodeId> out;
    for (int g = q.g; g <= tree.g_max(); ++g) {
        if (q.k > tree.k_max(g)) break;  // k_max is non-increasing in g
        for (int k = q.k; k <= tree.k_max(g); ++k) {
            const auto& value = tree.leaf(k, g)->value;
            out.insert(out.end(), value.begin(), value.end());
        }
    }
    return sort_unique(std::move(out));
}

std::vector<NodeId> query_lse_hvd(const IndexTree& tree, Query q) {
    check_query(q);
    check_variant(tree, Variant::LseHVD);
    std::vector<NodeId> out;
    for (int g = q.g; g <= tree.g_max(); ++g) {
        if (q.k > tree.k_max(g)) break;
        for (int k = q.k; k <= tree.k_max(g); ++k) {
            const LeafNode& leaf = *tree.leaf(k, g);
            out.insert(out.end(), leaf.value.begin(), leaf.value.end());
            // an aux depth-d set is common to the LseHV leaves (k-d,g)..(k,g-d);
            // it belongs to the result iff one of those positions is in the
            // query quadrant, i.e. iff d <= (k-q.k)+(g-q.g)
            int max_depth = (k - q.k) + (g - q.g);
            for (const auto& [d, nodes] : leaf.aux) {
                if (d > max_depth) break;
                out.insert(out.end(), nodes.begin(), nodes.end());
            }
        }
    }
    return sort_unique(std::move(out));
}

std::vector<NodeId> query_core(const IndexTree& tree, Query q) {
    switch (tree.variant) {
        case Variant::Naive: return query_naive(tree, q);
        case Variant::LseH: return query_lse_h(tree, q);
        case Variant::LseHV: return query_lse_hv(tree, q);
        case Variant::LseHVD: return query_lse_hvd(tree, q);
    }
    throw std::invalid_argument("unknown variant");
}

std::int64_t core_size(const IndexTree& tree, Query q) {
    return tree.core_sizes.size(q.k, q.g);
}

std::vector<SizeQueryResult> size_bounded_query(const IndexTree& tree, SizeQuery q) {
    if (q.lb > q.ub) throw std::invalid_argument("size query requires lb <= ub");
    std::vector<SizeQueryResult> out;
    const CoreSizeTable& sizes = tree.core_sizes;
    for (int g = 1; g <= sizes.g_max(); ++g) {
        const auto& row = sizes.row(g);
        // row is non-increasing: sizes in [lb,ub] form one contiguous window
        auto lo = std::partition_point(row.begin(), row.end(),
                                       [&](std::int64_t s) { return s > q.ub; });
        auto hi = std::partition_point(row.begin(), row.end(),
                                       [&](std::int64_t s) { return s >= q.lb; });
        for (auto it = lo; it != hi; ++it)
            out.push_back({static_cast<int>(it - row.begin()) + 1, g, *it});
    }
    return out;
}

std::vector<SizeQueryResult> size_bounded_query_peeling(const Hypergraph& g, SizeQuery q) {
    if (q.lb > q.ub) throw std::invalid_argument("size query requires lb <= ub");
    std::vector<SizeQueryResult> out;
    if (g.num_nodes() == 0) return out;
    CooccurrenceGraph cg(g);
    std::int64_t stop = std::max<std::int64_t>(q.lb, 1);
    for (int gv = 1;; ++gv) {
        Peeler p(cg, gv);
        p.advance(1);
        if (p.alive_count() == 0) break;  // no larger g has a core either
        for (int k = 1; p.alive_count() >= stop; ++k) {
            if (k > 1) p.advance(k);
            std::int64_t size = p.alive_count();
            if (size >= stop && size <= q.ub) out.push_back({k, gv, size});
        }
    }
    return out;
}

}  // namespace kgcore
