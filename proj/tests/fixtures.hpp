#ifndef KGCORE_TESTS_FIXTURES_HPP
#define KGCORE_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "kgcore/generator.hpp"
#include "kgcore/hypergraph.hpp"

namespace kgtest {

inline const char* toy_text() {
    return "1 2 3\n1 2 3\n1 2 4\n3 4 5\n4 5 6\n4 5 6\n";
}

// Six nodes, six edges, g* = 3, k* = 3. Labels "1".."6" intern to ids 0..5.
inline kgcore::Hypergraph make_toy() {
    std::istringstream in(toy_text());
    return kgcore::Hypergraph::parse(in);
}

// Sorted internal ids for integer labels of a parsed dataset.
inline std::vector<kgcore::NodeId> ids_of(const kgcore::Hypergraph& g,
                                          std::initializer_list<int> labels) {
    std::vector<kgcore::NodeId> ids;
    for (int label : labels) ids.push_back(g.id_of(std::to_string(label)));
    std::sort(ids.begin(), ids.end());
    return ids;
}

// Mixed bag of generator configs: dense little multigraphs for large g*,
// mid-sized ones, and sparser instances near the |V| <= 100, |E| <= 300 cap.
inline std::vector<kgcore::GenConfig> random_instance_configs(int count,
                                                              std::uint64_t seed_base = 0x5eed) {
    std::vector<kgcore::GenConfig> configs;
    for (int i = 0; i < count; ++i) {
        kgcore::GenConfig cfg;
        cfg.seed = seed_base + static_cast<std::uint64_t>(i) * 7919;
        switch (i % 5) {
            case 0:
                cfg.nodes = 6 + i % 7;
                cfg.edges = 25 + (i * 13) % 55;
                cfg.min_cardinality = 2;
                cfg.max_cardinality = 4;
                break;
            case 1:
                cfg.nodes = 10 + i % 6;
                cfg.edges = 40 + (i * 11) % 41;
                cfg.min_cardinality = 2;
                cfg.max_cardinality = 5;
                break;
            case 2:
                cfg.nodes = 20 + i % 21;
                cfg.edges = 60 + (i * 17) % 101;
                cfg.min_cardinality = 2;
                cfg.max_cardinality = 5;
                break;
            case 3:
                cfg.nodes = 50 + i % 31;
                cfg.edges = 90 + (i * 23) % 151;
                cfg.min_cardinality = 2;
                cfg.max_cardinality = 5;
                break;
            default:
                cfg.nodes = 80 + i % 21;
                cfg.edges = 150 + (i * 29) % 151;
                cfg.min_cardinality = 2;
                cfg.max_cardinality = 5;
                break;
        }
        configs.push_back(cfg);
    }
    return configs;
}

}  // namespace kgtest

#endif
