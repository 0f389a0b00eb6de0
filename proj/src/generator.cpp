#include "kgcore/generator.hpp"

#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgcore {

namespace {

void validate(const GenConfig& cfg) {
    if (cfg.nodes < 1) throw std::invalid_argument("need at least one node");
    if (cfg.edges < 0) throw std::invalid_argument("edge count must be non-negative");
    if (cfg.min_cardinality < 1) throw std::invalid_argument("cardinality must be at least 1");
    if (cfg.max_cardinality < cfg.min_cardinality)
        throw std::invalid_argument("max cardinality below min");
    if (cfg.max_cardinality > cfg.nodes)
        throw std::invalid_argument("cardinality exceeds node count");
}

class EdgeSampler {
public:
    explicit EdgeSampler(const GenConfig& cfg) : cfg_(cfg), engine_(cfg.seed) {}

    // modulo keeps the byte stream identical across platforms, unlike
    // uniform_int_distribution
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    std::vector<std::int64_t> next_edge() {
        int card = cfg_.min_cardinality +
                   static_cast<int>(below(static_cast<std::uint64_t>(
                       cfg_.max_cardinality - cfg_.min_cardinality + 1)));
        std::vector<std::int64_t> members;
        members.reserve(card);
        while (static_cast<int>(members.size()) < card) {
            auto v = static_cast<std::int64_t>(below(static_cast<std::uint64_t>(cfg_.nodes)));
            bool fresh = true;
            for (auto m : members)
                if (m == v) {
                    fresh = false;
                    break;
                }
            if (fresh) members.push_back(v);
        }
        return members;
    }

private:
    const GenConfig& cfg_;
    std::mt19937_64 engine_;
};

}  // namespace

Hypergraph generate_hypergraph(const GenConfig& cfg) {
    validate(cfg);
    EdgeSampler sampler(cfg);
    Hypergraph g;
    std::vector<NodeId> ids;
    for (std::int64_t e = 0; e < cfg.edges; ++e) {
        ids.clear();
        for (std::int64_t v : sampler.next_edge()) ids.push_back(g.intern(std::to_string(v)));
        g.add_edge(ids);
    }
    return g;
}

void generate_dataset(const GenConfig& cfg, std::ostream& out) {
    validate(cfg);
    EdgeSampler sampler(cfg);
    for (std::int64_t e = 0; e < cfg.edges; ++e) {
        auto members = sampler.next_edge();
        for (std::size_t i = 0; i < members.size(); ++i) {
            if (i) out << ' ';
            out << members[i];
        }
        out << '\n';
    }
}

}  // namespace kgcore
