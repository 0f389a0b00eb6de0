#include "kgcore/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kgcore {

namespace {

bool valid_numeric_label(const std::string& tok) {
    const char* first = tok.data();
    const char* last = first + tok.size();
    if (first != last && *first == '-') ++first;
    if (first == last) return false;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    return ec == std::errc() && ptr == last;
}

}  // namespace

Hypergraph Hypergraph::parse(std::istream& in, const ParseOptions& opts) {
    Hypergraph g;
    std::string line;
    std::size_t line_no = 0;
    std::vector<NodeId> members;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;

        members.clear();
        std::istringstream tokens(line);
        std::string tok;
        while (tokens >> tok) {
            if (opts.label_type == LabelType::Numeric && !valid_numeric_label(tok))
                throw ParseError(line_no, "malformed token '" + tok + "'");
            members.push_back(g.intern(tok));
        }
        if (!members.empty()) g.add_edge(std::move(members));
        members = {};
    }
    return g;
}

Hypergraph Hypergraph::parse_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse(in, opts);
}

NodeId Hypergraph::id_of(const std::string& label) const {
    auto it = ids_.find(label);
    return it == ids_.end() ? NodeId{-1} : it->second;
}

NodeId Hypergraph::intern(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, num_nodes());
    if (inserted) {
        labels_.push_back(label);
        incidence_.emplace_back();
    }
    return it->second;
}

void Hypergraph::add_edge(std::vector<NodeId> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) throw std::invalid_argument("empty hyperedge");
    EdgeId e = num_edges();
    for (NodeId v : members) incidence_[v].push_back(e);
    edges_.push_back(std::move(members));
}

std::uint64_t Hypergraph::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const char* data, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            h ^= static_cast<unsigned char>(data[i]);
            h *= 1099511628211ull;
        }
    };
    auto feed_int = [&](long long x) {
        char buf[24];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
        (void)ec;
        feed(buf, static_cast<std::size_t>(ptr - buf));
        feed("|", 1);
    };
    feed_int(num_nodes());
    for (const auto& label : labels_) {
        feed(label.data(), label.size());
        feed("\n", 1);
    }
    feed_int(num_edges());
    for (const auto& e : edges_) {
        for (NodeId v : e) feed_int(v);
        feed(";", 1);
    }
    return h;
}

void Hypergraph::write(std::ostream& out) const {
    for (const auto& e : edges_) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << labels_[e[i]];
        }
        out << '\n';
    }
}

GraphStats graph_stats(const Hypergraph& g) {
    GraphStats s;
    s.num_nodes = g.num_nodes();
    s.num_edges = g.num_edges();
    if (g.num_nodes() == 0) return s;
    CooccurrenceGraph cg(g);
    std::int64_t total = 0;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
        total += static_cast<std::int64_t>(cg.neighbours(v).size());
    s.mean_neighbours = static_cast<double>(total) / g.num_nodes();
    return s;
}

CooccurrenceMap cooccurrence(const Hypergraph& g, NodeId v, const std::vector<bool>& alive) {
    if (v < 0 || v >= g.num_nodes() || !alive[v])
        throw std::invalid_argument("node is not alive");
    CooccurrenceMap counts;
    for (EdgeId e : g.incident_edges(v))
        for (NodeId w : g.edge(e))
            if (w != v && alive[w]) ++counts[w];
    return counts;
}

CooccurrenceMap cooccurrence(const Hypergraph& g, NodeId v) {
    if (v < 0 || v >= g.num_nodes())
        throw std::invalid_argument("node out of range");
    CooccurrenceMap counts;
    for (EdgeId e : g.incident_edges(v))
        for (NodeId w : g.edge(e))
            if (w != v) ++counts[w];
    return counts;
}

CooccurrenceGraph::CooccurrenceGraph(const Hypergraph& g) {
    NodeId n = g.num_nodes();
    adj_.resize(n);
    std::vector<int> count(n, 0);
    std::vector<NodeId> touched;
    for (NodeId v = 0; v < n; ++v) {
        touched.clear();
        for (EdgeId e : g.incident_edges(v)) {
            for (NodeId w : g.edge(e)) {
                if (w == v) continue;
                if (count[w]++ == 0) touched.push_back(w);
            }
        }
        auto& row = adj_[v];
        row.reserve(touched.size());
        for (NodeId w : touched) {
            row.emplace_back(w, count[w]);
            if (count[w] > max_count_) max_count_ = count[w];
            count[w] = 0;
        }
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
            return a.second != b.second ? a.second > b.second : a.first < b.first;
        });
    }
}

std::span<const std::pair<NodeId, int>> CooccurrenceGraph::qualified(NodeId v, int g) const {
    const auto& row = adj_[v];
    auto it = std::partition_point(row.begin(), row.end(),
                                   [g](const auto& p) { return p.second >= g; });
    return {row.data(), static_cast<std::size_t>(it - row.begin())};
}

}  // namespace kgcore
