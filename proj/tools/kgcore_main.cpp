#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kgcore/analytics.hpp"
#include "kgcore/generator.hpp"
#include "kgcore/hypergraph.hpp"
#include "kgcore/index_tree.hpp"
#include "kgcore/peeling.hpp"
#include "kgcore/persist.hpp"
#include "kgcore/query.hpp"

namespace {

using namespace kgcore;

bool logging_enabled() {
    const char* env = std::getenv("KGCORE_LOG");
    return env != nullptr && *env != '\0' && std::string(env) != "0";
}

void log(const std::string& message) {
    if (logging_enabled()) std::cerr << "kgcore: " << message << '\n';
}

ParseOptions parse_options(bool numeric_labels) {
    ParseOptions opts;
    opts.label_type = numeric_labels ? LabelType::Numeric : LabelType::String;
    return opts;
}

Hypergraph load_dataset(const std::string& path, bool numeric_labels) {
    Hypergraph g = Hypergraph::parse_file(path, parse_options(numeric_labels));
    log("parsed " + path + ": |V|=" + std::to_string(g.num_nodes()) +
        " |E|=" + std::to_string(g.num_edges()));
    return g;
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + path);
    return file;
}

void print_labels(std::ostream& out, const IndexTree& tree, const std::vector<NodeId>& ids) {
    for (NodeId v : ids) out << tree.labels[v] << '\n';
}

Variant variant_arg(const std::string& name) {
    auto v = variant_from_string(name);
    if (!v) throw CLI::ValidationError("--variant", "unknown variant '" + name + "'");
    return *v;
}

std::vector<Variant> variants_arg(const std::string& spec) {
    if (spec == "all")
        return {Variant::Naive, Variant::LseH, Variant::LseHV, Variant::LseHVD};
    std::vector<Variant> out;
    std::stringstream parts(spec);
    std::string name;
    while (std::getline(parts, name, ',')) {
        auto v = variant_from_string(name);
        if (!v) throw CLI::ValidationError("--variants", "unknown variant '" + name + "'");
        out.push_back(*v);
    }
    if (out.empty()) throw CLI::ValidationError("--variants", "no variants given");
    return out;
}

void print_stats(std::ostream& out, const IndexTree& tree, const IndexStats& stats) {
    out << "variant=" << to_string(tree.variant) << " nodes=" << tree.num_nodes
        << " g_star=" << tree.g_max() << " entries=" << stats.total_entries
        << " approx_bytes=" << stats.approx_bytes << " leaves=" << stats.leaf_count
        << " empty_leaves=" << stats.empty_leaf_count << " aux=" << stats.aux_count
        << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"(k,g)-core hypergraph indexing"};
    app.require_subcommand(1);

    struct {
        std::string input, output, index;
        std::string variant = "lse-hvd";
        std::string variants = "all";
        std::string json_path;
        bool numeric_labels = false;
        int threads = 1;
        int k = 1, g = 1;
        std::int64_t lb = 0, ub = 0;
        GenConfig gen;
        bool jaccard = false;
        bool skip_peeling = false;
    } opt;

    auto* build = app.add_subcommand("build", "Build an index from a dataset");
    build->add_option("--input", opt.input, "dataset file")->required();
    build->add_option("--output", opt.output, "index file to write")->required();
    build->add_option("--variant", opt.variant, "naive|lse-h|lse-hv|lse-hvd");
    build->add_option("--threads", opt.threads, "parallel shell computation");
    build->add_flag("--numeric-labels", opt.numeric_labels, "labels must be integers");
    build->callback([&] {
        Variant variant = variant_arg(opt.variant);
        Hypergraph g = load_dataset(opt.input, opt.numeric_labels);
        IndexTree tree = build_index(g, variant, opt.threads);
        save_index(tree, opt.output);
        log("saved " + opt.output);
        print_stats(std::cout, tree, storage_stats(tree));
    });

    auto* query = app.add_subcommand("query", "Retrieve a (k,g)-core from an index");
    query->add_option("--index", opt.index, "index file")->required();
    query->add_option("-k", opt.k, "k bound")->required();
    query->add_option("-g", opt.g, "g bound")->required();
    query->add_option("--output", opt.output, "write result here instead of stdout");
    query->callback([&] {
        if (opt.k < 1 || opt.g < 1) throw CLI::ValidationError("query", "k and g must be >= 1");
        IndexTree tree = load_index(opt.index);
        auto result = query_core(tree, {opt.k, opt.g});
        std::ofstream file;
        print_labels(open_sink(file, opt.output), tree, result);
    });

    auto* size_query = app.add_subcommand("size-query", "Find (k,g) pairs by core size");
    size_query->add_option("--index", opt.index, "index file")->required();
    size_query->add_option("--lb", opt.lb, "smallest acceptable size")->required();
    size_query->add_option("--ub", opt.ub, "largest acceptable size")->required();
    size_query->callback([&] {
        if (opt.lb > opt.ub) throw CLI::ValidationError("size-query", "lb must not exceed ub");
        IndexTree tree = load_index(opt.index);
        for (const auto& r : size_bounded_query(tree, {opt.lb, opt.ub}))
            std::cout << r.k << ' ' << r.g << ' ' << r.size << '\n';
    });

    auto* peel = app.add_subcommand("peel", "Compute a (k,g)-core directly from a dataset");
    peel->add_option("--input", opt.input, "dataset file")->required();
    peel->add_option("-k", opt.k, "k bound")->required();
    peel->add_option("-g", opt.g, "g bound")->required();
    peel->add_option("--output", opt.output, "write result here instead of stdout");
    peel->add_flag("--numeric-labels", opt.numeric_labels, "labels must be integers");
    peel->callback([&] {
        if (opt.k < 1 || opt.g < 1) throw CLI::ValidationError("peel", "k and g must be >= 1");
        Hypergraph g = load_dataset(opt.input, opt.numeric_labels);
        auto members = kg_core(g, opt.k, opt.g);
        std::ofstream file;
        auto& out = open_sink(file, opt.output);
        for (NodeId v : members) out << g.label(v) << '\n';
    });

    auto* stats = app.add_subcommand("stats", "Report storage statistics for an index");
    stats->add_option("--index", opt.index, "index file")->required();
    stats->add_flag("--jaccard", opt.jaccard, "also report diagonal leaf similarity");
    stats->callback([&] {
        IndexTree tree = load_index(opt.index);
        IndexStats s = storage_stats(tree);
        print_stats(std::cout, tree, s);
        std::cout << "mean_aux_depth=" << s.mean_aux_depth
                  << " mean_aux_size=" << s.mean_aux_size << '\n';
        if (opt.jaccard) {
            DiagonalSummary d = diagonal_jaccard(tree);
            for (const auto& cell : d.cells)
                std::cout << "jaccard " << cell.k << ' ' << cell.g << ' ' << cell.jaccard
                          << '\n';
            std::cout << "jaccard_mean=" << d.mean << " cells=" << d.cells.size() << '\n';
        }
    });

    auto* bench_cmd = app.add_subcommand("bench", "Time construction and the query suite");
    bench_cmd->add_option("--input", opt.input, "dataset file")->required();
    bench_cmd->add_option("--variants", opt.variants, "comma list or 'all'");
    bench_cmd->add_option("--json", opt.json_path, "write the report as JSON");
    bench_cmd->add_option("--threads", opt.threads, "parallel shell computation");
    bench_cmd->add_flag("--skip-peeling", opt.skip_peeling, "skip the peeling baseline");
    bench_cmd->add_flag("--numeric-labels", opt.numeric_labels, "labels must be integers");
    bench_cmd->callback([&] {
        auto variants = variants_arg(opt.variants);
        Hypergraph g = load_dataset(opt.input, opt.numeric_labels);
        BenchOptions bopts;
        bopts.threads = opt.threads;
        bopts.run_peeling_baseline = !opt.skip_peeling;
        BenchReport report = bench(g, variants, bopts);
        if (!opt.json_path.empty()) {
            std::ofstream file(opt.json_path, std::ios::binary);
            if (!file) throw std::runtime_error("cannot write " + opt.json_path);
            write_json(report, file);
        }
        write_json(report, std::cout);
    });

    auto* gen = app.add_subcommand("gen", "Generate a random dataset");
    gen->add_option("--nodes", opt.gen.nodes, "node universe size")->required();
    gen->add_option("--edges", opt.gen.edges, "edge count")->required();
    gen->add_option("--cmin", opt.gen.min_cardinality, "smallest cardinality");
    gen->add_option("--cmax", opt.gen.max_cardinality, "largest cardinality");
    gen->add_option("--seed", opt.gen.seed, "RNG seed")->required();
    gen->add_option("--output", opt.output, "write dataset here instead of stdout");
    gen->callback([&] {
        if (opt.gen.max_cardinality > opt.gen.nodes)
            throw CLI::ValidationError("gen", "cardinality exceeds node count");
        if (opt.gen.min_cardinality < 1 ||
            opt.gen.max_cardinality < opt.gen.min_cardinality)
            throw CLI::ValidationError("gen", "bad cardinality range");
        std::ofstream file;
        generate_dataset(opt.gen, open_sink(file, opt.output));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
