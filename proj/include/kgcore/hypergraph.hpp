#ifndef KGCORE_HYPERGRAPH_HPP
#define KGCORE_HYPERGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kgcore {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

/// How node labels in a dataset file are validated.
enum class LabelType { String, Numeric };

struct ParseOptions {
    LabelType label_type = LabelType::String;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * Undirected, unweighted hypergraph.
 *
 * Node labels are interned to dense internal ids (0..|V|-1) in first-appearance
 * order. Edges form an ordered multiset: duplicate edges are kept and counted
 * separately. Each edge stores its member ids sorted ascending with duplicates
 * within the edge collapsed. The structure is immutable after parsing, so
 * concurrent reads are safe.
 */
class Hypergraph {
public:
    Hypergraph() = default;

    /// Parses the line-oriented dataset format: one hyperedge per line,
    /// whitespace-separated labels; '#'-prefixed lines and blank lines skipped.
    static Hypergraph parse(std::istream& in, const ParseOptions& opts = {});
    static Hypergraph parse_file(const std::string& path, const ParseOptions& opts = {});

    NodeId num_nodes() const { return static_cast<NodeId>(labels_.size()); }
    EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

    const std::vector<NodeId>& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<EdgeId>& incident_edges(NodeId v) const { return incidence_[v]; }

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Internal id for a label, or -1 if the label never appeared.
    NodeId id_of(const std::string& label) const;

    /// Interns a label, assigning the next dense id on first appearance.
    NodeId intern(const std::string& label);
    /// Adds one hyperedge; members are deduplicated and sorted. Empty edges are rejected.
    void add_edge(std::vector<NodeId> members);

    /// Stable 64-bit content hash over labels and edges (FNV-1a).
    std::uint64_t fingerprint() const;

    /// Writes the graph back in the dataset line format (one edge per line,
    /// members in internal-id order). Reparsing the output reproduces the
    /// exact same id assignment.
    void write(std::ostream& out) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> ids_;
    std::vector<std::vector<NodeId>> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

struct GraphStats {
    NodeId num_nodes = 0;
    EdgeId num_edges = 0;
    double mean_neighbours = 0.0;  // average distinct-neighbour count per node
};

GraphStats graph_stats(const Hypergraph& g);

/// Co-occurrence counts around one node: neighbour -> number of shared edges.
/// Absent neighbours mean zero.
using CooccurrenceMap = std::map<NodeId, int>;

/// c(v,w) for all neighbours w of v. `alive` restricts both the neighbour set;
/// counts themselves are taken over the original edge multiset, which is
/// unchanged by node removal. Throws std::invalid_argument if v is not alive.
CooccurrenceMap cooccurrence(const Hypergraph& g, NodeId v, const std::vector<bool>& alive);
CooccurrenceMap cooccurrence(const Hypergraph& g, NodeId v);

/**
 * Whole-graph co-occurrence precomputation: for every node, the neighbours
 * paired with shared-edge counts, ordered by count descending (ties by id).
 * The descending order makes "neighbours with count >= g" a prefix, so one
 * precomputation serves peeling at every g.
 */
class CooccurrenceGraph {
public:
    explicit CooccurrenceGraph(const Hypergraph& g);

    NodeId num_nodes() const { return static_cast<NodeId>(adj_.size()); }
    /// Largest pair count in the graph; equals the largest g with a nonempty (1,g)-core.
    int max_count() const { return max_count_; }

    std::span<const std::pair<NodeId, int>> neighbours(NodeId v) const {
        return {adj_[v].data(), adj_[v].size()};
    }
    /// Neighbours w of v with c(v,w) >= g, as a prefix of the sorted list.
    std::span<const std::pair<NodeId, int>> qualified(NodeId v, int g) const;

private:
    std::vector<std::vector<std::pair<NodeId, int>>> adj_;
    int max_count_ = 0;
};

}  // namespace kgcore

#endif
