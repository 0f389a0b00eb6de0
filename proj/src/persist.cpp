#include "kgcore/persist.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace kgcore {

LoadError::LoadError(std::size_t offset, const std::string& message)
    : std::runtime_error("offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

namespace {

constexpr char kMagic[] = "KGIDX";
constexpr int kVersion = 1;

void write_ids(std::ostream& out, const std::vector<NodeId>& ids) {
    out << ' ' << ids.size();
    for (NodeId v : ids) out << ' ' << v;
    out << '\n';
}

char hex_digit(std::uint64_t nibble) {
    return nibble < 10 ? static_cast<char>('0' + nibble)
                       : static_cast<char>('a' + nibble - 10);
}

std::string to_hex(std::uint64_t x) {
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, x >>= 4) s[i] = hex_digit(x & 0xf);
    return s;
}

/// Pulls lines out of the stream while tracking the byte offset each line
/// starts at, so load errors can point at the exact record. One line of
/// lookahead can be pushed back.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        if (has_pending_) {
            line = std::move(pending_);
            line_offset_ = pending_offset_;
            has_pending_ = false;
            return true;
        }
        line_offset_ = consumed_;
        if (!std::getline(in_, line)) return false;
        consumed_ += line.size() + 1;
        return true;
    }

    void push_back(std::string line) {
        pending_ = std::move(line);
        pending_offset_ = line_offset_;
        has_pending_ = true;
    }

    std::size_t line_offset() const { return line_offset_; }
    /// Offset of the next unread byte.
    std::size_t consumed() const { return has_pending_ ? pending_offset_ : consumed_; }

private:
    std::istream& in_;
    std::string pending_;
    std::size_t consumed_ = 0;
    std::size_t line_offset_ = 0;
    std::size_t pending_offset_ = 0;
    bool has_pending_ = false;
};

class RecordParser {
public:
    RecordParser(const std::string& line, std::size_t offset)
        : tokens_(line), offset_(offset) {}

    std::string word(const char* what) {
        std::string tok;
        if (!(tokens_ >> tok)) throw LoadError(offset_, std::string("missing ") + what);
        return tok;
    }

    long long integer(const char* what) {
        std::string tok = word(what);
        long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw LoadError(offset_, std::string("bad ") + what + " '" + tok + "'");
        return value;
    }

    std::uint64_t hex64(const char* what) {
        std::string tok = word(what);
        std::uint64_t value = 0;
        auto [ptr, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), value, 16);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw LoadError(offset_, std::string("bad ") + what + " '" + tok + "'");
        return value;
    }

    std::vector<NodeId> id_list(NodeId num_nodes) {
        long long n = integer("count");
        if (n < 0) throw LoadError(offset_, "negative count");
        std::vector<NodeId> ids;
        ids.reserve(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i) {
            long long v = integer("node id");
            if (v < 0 || v >= num_nodes) throw LoadError(offset_, "node id out of range");
            ids.push_back(static_cast<NodeId>(v));
        }
        return ids;
    }

    void finish() {
        std::string extra;
        if (tokens_ >> extra) throw LoadError(offset_, "trailing token '" + extra + "'");
    }

    std::size_t offset() const { return offset_; }

private:
    std::istringstream tokens_;
    std::size_t offset_;
};

}  // namespace

void save_index(const IndexTree& tree, std::ostream& out) {
    out << kMagic << ' ' << kVersion << ' ' << to_string(tree.variant) << ' '
        << tree.num_nodes << ' ' << tree.g_max() << ' ' << to_hex(tree.fingerprint)
        << '\n';
    for (NodeId v = 0; v < tree.num_nodes; ++v)
        out << "D " << tree.labels[v] << ' ' << v << '\n';
    for (int g = 1; g <= tree.g_max(); ++g) {
        out << "B " << g << ' ' << tree.k_max(g) << '\n';
        for (int k = 1; k <= tree.k_max(g); ++k) {
            const LeafNode& leaf = *tree.leaf(k, g);
            out << "L " << k;
            write_ids(out, leaf.value);
            for (const auto& [d, nodes] : leaf.aux) {
                out << "A " << k << ' ' << g << ' ' << d;
                write_ids(out, nodes);
            }
        }
    }
    for (int g = 1; g <= tree.core_sizes.g_max(); ++g) {
        const auto& row = tree.core_sizes.row(g);
        out << "S " << g << ' ' << row.size();
        for (std::int64_t s : row) out << ' ' << s;
        out << '\n';
    }
    if (!out) throw std::runtime_error("index write failed");
}

void save_index(const IndexTree& tree, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    save_index(tree, out);
}

IndexTree load_index(std::istream& in) {
    LineReader reader(in);
    std::string line;

    if (!reader.next(line)) throw LoadError(0, "empty file");
    RecordParser header(line, reader.line_offset());
    if (header.word("magic") != kMagic) throw LoadError(0, "bad magic");
    long long version = header.integer("version");
    if (version != kVersion)
        throw LoadError(0, "unsupported version " + std::to_string(version));

    IndexTree tree;
    std::string variant_name = header.word("variant");
    auto variant = variant_from_string(variant_name);
    if (!variant) throw LoadError(0, "unknown variant '" + variant_name + "'");
    tree.variant = *variant;

    long long num_nodes = header.integer("node count");
    long long g_max = header.integer("g max");
    if (num_nodes < 0 || g_max < 0) throw LoadError(0, "negative header count");
    tree.num_nodes = static_cast<NodeId>(num_nodes);
    tree.fingerprint = header.hex64("fingerprint");
    header.finish();

    tree.labels.assign(static_cast<std::size_t>(num_nodes), {});
    std::vector<char> seen(static_cast<std::size_t>(num_nodes), 0);
    for (long long i = 0; i < num_nodes; ++i) {
        if (!reader.next(line))
            throw LoadError(reader.consumed(), "unexpected end of file in dictionary");
        RecordParser rec(line, reader.line_offset());
        if (rec.word("record tag") != "D") throw LoadError(rec.offset(), "expected D record");
        std::string label = rec.word("label");
        long long id = rec.integer("node id");
        if (id < 0 || id >= num_nodes) throw LoadError(rec.offset(), "node id out of range");
        if (seen[static_cast<std::size_t>(id)])
            throw LoadError(rec.offset(), "duplicate node id");
        seen[static_cast<std::size_t>(id)] = 1;
        tree.labels[static_cast<std::size_t>(id)] = std::move(label);
        rec.finish();
    }

    tree.branches.resize(static_cast<std::size_t>(g_max));
    for (long long g = 1; g <= g_max; ++g) {
        if (!reader.next(line))
            throw LoadError(reader.consumed(), "unexpected end of file in branches");
        RecordParser rec(line, reader.line_offset());
        if (rec.word("record tag") != "B") throw LoadError(rec.offset(), "expected B record");
        if (rec.integer("branch g") != g) throw LoadError(rec.offset(), "branch out of order");
        long long k_max = rec.integer("branch k max");
        if (k_max < 0) throw LoadError(rec.offset(), "negative branch size");
        rec.finish();

        Branch& branch = tree.branches[static_cast<std::size_t>(g - 1)];
        branch.g = static_cast<int>(g);
        branch.leaves.resize(static_cast<std::size_t>(k_max));
        for (long long k = 1; k <= k_max; ++k) {
            if (!reader.next(line))
                throw LoadError(reader.consumed(), "unexpected end of file in leaves");
            RecordParser leaf_rec(line, reader.line_offset());
            if (leaf_rec.word("record tag") != "L")
                throw LoadError(leaf_rec.offset(), "expected L record");
            if (leaf_rec.integer("leaf k") != k)
                throw LoadError(leaf_rec.offset(), "leaf out of order");
            LeafNode& leaf = branch.leaves[static_cast<std::size_t>(k - 1)];
            leaf.value = leaf_rec.id_list(tree.num_nodes);
            leaf_rec.finish();

            // aux records for this leaf follow immediately, depths ascending
            int last_depth = 0;
            for (;;) {
                if (!reader.next(line)) break;
                if (line.rfind("A ", 0) != 0) {
                    reader.push_back(std::move(line));
                    break;
                }
                RecordParser aux_rec(line, reader.line_offset());
                aux_rec.word("record tag");
                if (aux_rec.integer("aux k") != k || aux_rec.integer("aux g") != g)
                    throw LoadError(aux_rec.offset(), "aux record at wrong position");
                long long d = aux_rec.integer("aux depth");
                if (d <= last_depth) throw LoadError(aux_rec.offset(), "aux depths out of order");
                last_depth = static_cast<int>(d);
                leaf.aux[static_cast<int>(d)] = aux_rec.id_list(tree.num_nodes);
                aux_rec.finish();
            }
        }
    }

    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(g_max));
    for (long long g = 1; g <= g_max; ++g) {
        if (!reader.next(line))
            throw LoadError(reader.consumed(), "unexpected end of file in size table");
        RecordParser rec(line, reader.line_offset());
        if (rec.word("record tag") != "S") throw LoadError(rec.offset(), "expected S record");
        if (rec.integer("size table g") != g)
            throw LoadError(rec.offset(), "size table out of order");
        long long n = rec.integer("count");
        if (n < 0) throw LoadError(rec.offset(), "negative count");
        auto& row = rows[static_cast<std::size_t>(g - 1)];
        row.reserve(static_cast<std::size_t>(n));
        for (long long i = 0; i < n; ++i) row.push_back(rec.integer("core size"));
        rec.finish();
    }
    tree.core_sizes = CoreSizeTable(std::move(rows));

    if (reader.next(line)) throw LoadError(reader.line_offset(), "trailing data");
    return tree;
}

IndexTree load_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_index(in);
}

bool fingerprint_matches(const IndexTree& tree, const Hypergraph& g) {
    return tree.fingerprint == g.fingerprint();
}

}  // namespace kgcore
