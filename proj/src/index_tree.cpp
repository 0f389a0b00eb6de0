#include "kgcore/index_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace kgcore {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::Naive: return "naive";
        case Variant::LseH: return "lse-h";
        case Variant::LseHV: return "lse-hv";
        case Variant::LseHVD: return "lse-hvd";
    }
    return "naive";
}

std::optional<Variant> variant_from_string(std::string_view name) {
    if (name == "naive") return Variant::Naive;
    if (name == "lse-h") return Variant::LseH;
    if (name == "lse-hv") return Variant::LseHV;
    if (name == "lse-hvd") return Variant::LseHVD;
    return std::nullopt;
}

CoreSizeTable CoreSizeTable::from_shells(const CorenessTables& tables) {
    std::vector<std::vector<std::int64_t>> rows(tables.g_star());
    for (int g = 1; g <= tables.g_star(); ++g) {
        const auto& shells = tables.per_g[g - 1].shells;
        auto& row = rows[g - 1];
        row.assign(shells.size(), 0);
        std::int64_t suffix = 0;
        for (int k = static_cast<int>(shells.size()); k >= 1; --k) {
            suffix += static_cast<std::int64_t>(shells[k - 1].size());
            row[k - 1] = suffix;
        }
    }
    return CoreSizeTable(std::move(rows));
}

namespace {

std::vector<NodeId> sorted_difference(const std::vector<NodeId>& a,
                                      const std::vector<NodeId>& b) {
    std::vector<NodeId> out;
    out.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<NodeId> sorted_intersection(const std::vector<NodeId>& a,
                                        const std::vector<NodeId>& b) {
    std::vector<NodeId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

IndexTree tree_skeleton(const Hypergraph& g, const CorenessTables& tables, Variant variant) {
    IndexTree tree;
    tree.variant = variant;
    tree.num_nodes = g.num_nodes();
    tree.fingerprint = g.fingerprint();
    tree.labels = g.labels();
    tree.core_sizes = CoreSizeTable::from_shells(tables);
    tree.branches.resize(tables.g_star());
    for (int gv = 1; gv <= tables.g_star(); ++gv) {
        tree.branches[gv - 1].g = gv;
        tree.branches[gv - 1].leaves.resize(tables.k_star_of(gv));
    }
    return tree;
}

void fill_shell_leaves(IndexTree& tree, const CorenessTables& tables) {
    for (int gv = 1; gv <= tables.g_star(); ++gv) {
        const auto& shells = tables.per_g[gv - 1].shells;
        auto& leaves = tree.branches[gv - 1].leaves;
        for (std::size_t i = 0; i < shells.size(); ++i) leaves[i].value = shells[i];
    }
}

// leafHV(k,g) = leafH(k,g) minus leafH(k,g+1): exactly the nodes whose
// g-coreness at g is k and whose k-coreness at k is g.
void difference_pass(IndexTree& tree) {
    for (int gv = 1; gv < tree.g_max(); ++gv) {
        auto& leaves = tree.branches[gv - 1].leaves;
        const auto& next_leaves = tree.branches[gv].leaves;
        for (std::size_t i = 0; i < leaves.size() && i < next_leaves.size(); ++i)
            leaves[i].value = sorted_difference(leaves[i].value, next_leaves[i].value);
    }
}

LeafNode& leaf_at(IndexTree& tree, int k, int g) {
    return tree.branches[g - 1].leaves[k - 1];
}

// Extends branch g with empty leaves so position (k,g) exists.
void ensure_leaf(IndexTree& tree, int k, int g) {
    auto& leaves = tree.branches[g - 1].leaves;
    if (static_cast<int>(leaves.size()) < k) leaves.resize(k);
}

// Anti-diagonal sweep: bases (k,g) in increasing k+g, ties by increasing g.
// Each base intersects its two diagonal successors (k+1,g) and (k,g+1),
// migrating the shared nodes one step up the diagonal into (k+1,g+1).
// Extended leaves never push k past k_max(1) or g past g_max, so every base
// that can act has k+g < k_max(1)+g_max. Leaf references are re-taken after
// ensure_leaf may have grown a branch vector.
void diagonal_sweep(IndexTree& tree) {
    if (tree.g_max() == 0) return;
    int s_max = tree.k_max(1) + tree.g_max();

    for (int s = 2; s <= s_max; ++s) {
        for (int gv = 1; gv <= std::min(s - 1, tree.g_max() - 1); ++gv) {
            int kv = s - gv;
            if (kv + 1 > tree.k_max(gv) || kv > tree.k_max(gv + 1)) continue;

            auto common = sorted_intersection(leaf_at(tree, kv + 1, gv).value,
                                              leaf_at(tree, kv, gv + 1).value);
            if (!common.empty()) {
                auto& right = leaf_at(tree, kv + 1, gv);
                right.value = sorted_difference(right.value, common);
                auto& up = leaf_at(tree, kv, gv + 1);
                up.value = sorted_difference(up.value, common);
                ensure_leaf(tree, kv + 1, gv + 1);
                leaf_at(tree, kv + 1, gv + 1).aux[1] = std::move(common);
            }

            std::vector<int> depths;
            for (const auto& [d, nodes] : leaf_at(tree, kv + 1, gv).aux)
                if (leaf_at(tree, kv, gv + 1).aux.count(d)) depths.push_back(d);
            for (int d : depths) {
                auto shared = sorted_intersection(leaf_at(tree, kv + 1, gv).aux[d],
                                                  leaf_at(tree, kv, gv + 1).aux[d]);
                if (shared.empty()) continue;
                auto& raux = leaf_at(tree, kv + 1, gv).aux;
                raux[d] = sorted_difference(raux[d], shared);
                if (raux[d].empty()) raux.erase(d);
                auto& uaux = leaf_at(tree, kv, gv + 1).aux;
                uaux[d] = sorted_difference(uaux[d], shared);
                if (uaux[d].empty()) uaux.erase(d);
                ensure_leaf(tree, kv + 1, gv + 1);
                leaf_at(tree, kv + 1, gv + 1).aux[d + 1] = std::move(shared);
            }
        }
    }
}

}  // namespace

IndexTree build_naive(const Hypergraph& g, int threads) {
    auto tables = coreness_tables(g, threads);
    IndexTree tree = tree_skeleton(g, tables, Variant::Naive);
    // leaf(k,g) = suffix union of shells k..k_star, assembled innermost-out
    for (int gv = 1; gv <= tables.g_star(); ++gv) {
        const auto& shells = tables.per_g[gv - 1].shells;
        auto& leaves = tree.branches[gv - 1].leaves;
        std::vector<NodeId> core;
        for (int k = tables.k_star_of(gv); k >= 1; --k) {
            std::vector<NodeId> merged;
            merged.reserve(core.size() + shells[k - 1].size());
            std::merge(core.begin(), core.end(), shells[k - 1].begin(),
                       shells[k - 1].end(), std::back_inserter(merged));
            core = std::move(merged);
            leaves[k - 1].value = core;
        }
    }
    return tree;
}

IndexTree build_lse_h(const Hypergraph& g, int threads) {
    auto tables = coreness_tables(g, threads);
    IndexTree tree = tree_skeleton(g, tables, Variant::LseH);
    fill_shell_leaves(tree, tables);
    return tree;
}

IndexTree build_lse_hv(const Hypergraph& g, int threads) {
    auto tables = coreness_tables(g, threads);
    IndexTree tree = tree_skeleton(g, tables, Variant::LseHV);
    fill_shell_leaves(tree, tables);
    difference_pass(tree);
    return tree;
}

IndexTree build_lse_hvd(const Hypergraph& g, int threads) {
    auto tables = coreness_tables(g, threads);
    IndexTree tree = tree_skeleton(g, tables, Variant::LseHVD);
    fill_shell_leaves(tree, tables);
    difference_pass(tree);
    diagonal_sweep(tree);
    return tree;
}

IndexTree build_index(const Hypergraph& g, Variant variant, int threads) {
    switch (variant) {
        case Variant::Naive: return build_naive(g, threads);
        case Variant::LseH: return build_lse_h(g, threads);
        case Variant::LseHV: return build_lse_hv(g, threads);
        case Variant::LseHVD: return build_lse_hvd(g, threads);
    }
    throw std::invalid_argument("unknown variant");
}

}  // namespace kgcore
