#ifndef KGCORE_GENERATOR_HPP
#define KGCORE_GENERATOR_HPP

#include <cstdint>
#include <iosfwd>

#include "kgcore/hypergraph.hpp"

namespace kgcore {

struct GenConfig {
    std::int64_t nodes = 0;
    std::int64_t edges = 0;
    int min_cardinality = 2;
    int max_cardinality = 5;
    std::uint64_t seed = 0;
};

/// Uniform random hypergraph: each edge draws a cardinality uniformly from
/// [min,max], then that many distinct nodes uniformly from [0,nodes).
/// Identical seeds give identical output on every platform. Invalid configs
/// (nodes < 1, edges < 0, min < 1, min > max, max > nodes) throw
/// std::invalid_argument.
Hypergraph generate_hypergraph(const GenConfig& cfg);

/// Same graph, written in the input format (labels are the node numbers).
void generate_dataset(const GenConfig& cfg, std::ostream& out);

}  // namespace kgcore

#endif
