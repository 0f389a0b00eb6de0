#ifndef KGCORE_INDEX_TREE_HPP
#define KGCORE_INDEX_TREE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgcore/hypergraph.hpp"
#include "kgcore/peeling.hpp"

namespace kgcore {

enum class Variant { Naive, LseH, LseHV, LseHVD };

std::string_view to_string(Variant v);
std::optional<Variant> variant_from_string(std::string_view name);

/// |(k,g)-core| for every g branch and k = 1..k_star(g), built as suffix sums
/// of shell sizes. Rows are non-increasing in k; columns non-increasing in g.
class CoreSizeTable {
public:
    CoreSizeTable() = default;
    explicit CoreSizeTable(std::vector<std::vector<std::int64_t>> rows)
        : rows_(std::move(rows)) {}

    static CoreSizeTable from_shells(const CorenessTables& tables);

    int g_max() const { return static_cast<int>(rows_.size()); }
    int k_max(int g) const {
        return (g >= 1 && g <= g_max()) ? static_cast<int>(rows_[g - 1].size()) : 0;
    }
    /// |(k,g)-core|; 0 out of range.
    std::int64_t size(int k, int g) const {
        if (g < 1 || g > g_max() || k < 1 || k > k_max(g)) return 0;
        return rows_[g - 1][k - 1];
    }
    const std::vector<std::int64_t>& row(int g) const { return rows_[g - 1]; }

private:
    std::vector<std::vector<std::int64_t>> rows_;
};

/**
 * One position of the indexing tree. What `value` holds depends on the
 * variant:
 *   Naive   - the full (k,g)-core;
 *   LseH    - nodes with g-coreness exactly k;
 *   LseHV   - nodes with g-coreness exactly k and k-coreness exactly g;
 *   LseHVD  - the LseHV value minus everything migrated into aux entries.
 * `aux` (LseHVD only) maps depth d to the nodes that were common to the d+1
 * diagonally adjacent LseHV leaves (k-d,g), (k-d+1,g-1), ..., (k,g-d).
 */
struct LeafNode {
    std::vector<NodeId> value;                  // sorted ascending
    std::map<int, std::vector<NodeId>> aux;     // depth -> sorted members

    bool has_aux() const { return !aux.empty(); }
};

/// One g branch: leaves[i] is the (i+1, g)-leaf. The implicit next link joins
/// leaves[i] to leaves[i+1]; the implicit jump link joins (k,g) to (k,g+1).
struct Branch {
    int g = 0;
    std::vector<LeafNode> leaves;
};

/**
 * Height-2 indexing tree: root fans out per g, each branch fans out per k,
 * leaves carry node sets per the variant. Branches cover exactly the g with a
 * nonempty (1,g)-core; branch g initially has k_star(g) leaves, which LseHVD
 * construction may extend with empty leaves at aux intersection positions.
 * Built trees are immutable; concurrent queries are safe.
 */
struct IndexTree {
    Variant variant = Variant::Naive;
    NodeId num_nodes = 0;
    std::uint64_t fingerprint = 0;
    std::vector<std::string> labels;   // id -> external label
    std::vector<Branch> branches;      // index g-1
    CoreSizeTable core_sizes;

    int g_max() const { return static_cast<int>(branches.size()); }
    int k_max(int g) const {
        return (g >= 1 && g <= g_max())
                   ? static_cast<int>(branches[g - 1].leaves.size())
                   : 0;
    }
    const LeafNode* leaf(int k, int g) const {
        if (g < 1 || g > g_max() || k < 1 || k > k_max(g)) return nullptr;
        return &branches[g - 1].leaves[k - 1];
    }
};

/// Builds the requested variant from scratch. Shell computation for distinct
/// g branches runs in parallel when threads > 1; the result is identical
/// either way.
IndexTree build_index(const Hypergraph& g, Variant variant, int threads = 1);

IndexTree build_naive(const Hypergraph& g, int threads = 1);
IndexTree build_lse_h(const Hypergraph& g, int threads = 1);
IndexTree build_lse_hv(const Hypergraph& g, int threads = 1);
IndexTree build_lse_hvd(const Hypergraph& g, int threads = 1);

}  // namespace kgcore

#endif
