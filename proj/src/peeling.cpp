#include "kgcore/peeling.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <stdexcept>
#include <thread>

namespace kgcore {

Peeler::Peeler(const CooccurrenceGraph& cg, int g) : cg_(cg), g_(g) {
    NodeId n = cg.num_nodes();
    alive_.assign(n, 1);
    degree_.resize(n);
    alive_count_ = n;
    for (NodeId v = 0; v < n; ++v)
        degree_[v] = static_cast<int>(cg.qualified(v, g).size());
}

std::vector<NodeId> Peeler::advance(int k) {
    if (k < threshold_) throw std::invalid_argument("thresholds must not decrease");
    threshold_ = k;

    std::deque<NodeId> work;
    for (NodeId v = 0; v < cg_.num_nodes(); ++v)
        if (alive_[v] && degree_[v] < k) work.push_back(v);

    std::vector<NodeId> removed;
    while (!work.empty()) {
        NodeId v = work.front();
        work.pop_front();
        if (!alive_[v]) continue;
        alive_[v] = 0;
        --alive_count_;
        removed.push_back(v);
        for (auto [w, c] : cg_.qualified(v, g_)) {
            if (!alive_[w]) continue;
            if (--degree_[w] == k - 1) work.push_back(w);
        }
    }
    std::sort(removed.begin(), removed.end());
    return removed;
}

std::vector<NodeId> Peeler::alive_members() const {
    std::vector<NodeId> members;
    members.reserve(static_cast<std::size_t>(alive_count_));
    for (NodeId v = 0; v < cg_.num_nodes(); ++v)
        if (alive_[v]) members.push_back(v);
    return members;
}

std::vector<NodeId> kg_core(const CooccurrenceGraph& cg, int k, int g) {
    Peeler p(cg, g);
    p.advance(k);
    return p.alive_members();
}

std::vector<NodeId> kg_core(const Hypergraph& g, int k, int gq) {
    if (g.num_nodes() == 0) return {};
    CooccurrenceGraph cg(g);
    return kg_core(cg, k, gq);
}

ShellDecomposition enum_h(const CooccurrenceGraph& cg, int g) {
    ShellDecomposition d;
    d.g = g;
    d.coreness.assign(cg.num_nodes(), 0);

    Peeler p(cg, g);
    p.advance(1);  // coreness-0 nodes are in no shell
    if (p.alive_count() == 0) return d;

    for (int k = 2;; ++k) {
        std::vector<NodeId> shell = p.advance(k);
        for (NodeId v : shell) d.coreness[v] = k - 1;
        d.shells.push_back(std::move(shell));
        if (p.alive_count() == 0) break;
    }
    return d;
}

ShellDecomposition enum_h(const Hypergraph& g, int gq) {
    if (g.num_nodes() == 0) {
        ShellDecomposition d;
        d.g = gq;
        return d;
    }
    CooccurrenceGraph cg(g);
    return enum_h(cg, gq);
}

int CorenessTables::k_coreness(NodeId v, int k) const {
    for (int g = g_star(); g >= 1; --g)
        if (per_g[g - 1].coreness[v] >= k) return g;
    return 0;
}

CorenessTables coreness_tables(const CooccurrenceGraph& cg, int threads) {
    CorenessTables tables;
    // Pair counts survive node removals, so a pair with the maximum count
    // keeps the (1,max_count)-core nonempty: g_star is exactly max_count.
    int g_star = cg.max_count();
    tables.per_g.resize(g_star);
    if (g_star == 0) return tables;

    if (threads <= 1) {
        for (int g = 1; g <= g_star; ++g) tables.per_g[g - 1] = enum_h(cg, g);
        return tables;
    }
    std::atomic<int> next{1};
    auto worker = [&] {
        for (int g = next.fetch_add(1); g <= g_star; g = next.fetch_add(1))
            tables.per_g[g - 1] = enum_h(cg, g);
    };
    std::vector<std::thread> pool;
    int nthreads = std::min(threads, g_star);
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return tables;
}

CorenessTables coreness_tables(const Hypergraph& g, int threads) {
    if (g.num_nodes() == 0) return {};
    CooccurrenceGraph cg(g);
    return coreness_tables(cg, threads);
}

}  // namespace kgcore
