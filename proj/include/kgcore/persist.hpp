#ifndef KGCORE_PERSIST_HPP
#define KGCORE_PERSIST_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "kgcore/hypergraph.hpp"
#include "kgcore/index_tree.hpp"

namespace kgcore {

/// Malformed or truncated index file. offset() is the byte position of the
/// record that failed.
class LoadError : public std::runtime_error {
public:
    LoadError(std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Line-oriented text format, one record per line:
///   KGIDX 1 <variant> <num-nodes> <g-max> <fingerprint>
///   D <label> <id>                     (one per node)
///   B <g> <k-max>                      (one per branch)
///   L <k> <n> <ids...>                 (one per leaf, k ascending)
///   A <k> <g> <d> <n> <ids...>        (aux entries, depth ascending)
///   S <g> <n> <sizes...>              (one per size-table row)
/// Output is deterministic: ids within a record ascend, records follow tree
/// order. Next and jump links are positional and not serialised.
void save_index(const IndexTree& tree, std::ostream& out);
void save_index(const IndexTree& tree, const std::string& path);

IndexTree load_index(std::istream& in);
IndexTree load_index(const std::string& path);

/// True when the tree was built from a hypergraph with this fingerprint.
bool fingerprint_matches(const IndexTree& tree, const Hypergraph& g);

}  // namespace kgcore

#endif
