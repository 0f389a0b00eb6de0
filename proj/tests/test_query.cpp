#include <doctest.h>

#include <random>

#include "kgcore/query.hpp"
#include "kgcore/peeling.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace kgcore;
using kgtest::ids_of;
using kgtest::make_toy;

namespace {

std::vector<IndexTree> all_trees(const Hypergraph& g) {
    std::vector<IndexTree> trees;
    for (Variant v : {Variant::Naive, Variant::LseH, Variant::LseHV, Variant::LseHVD})
        trees.push_back(build_index(g, v));
    return trees;
}

}  // namespace

TEST_CASE("toy queries per variant") {
    Hypergraph g = make_toy();

    IndexTree naive = build_naive(g);
    CHECK(query_naive(naive, {2, 2}) == ids_of(g, {1, 2, 3, 4, 5, 6}));
    CHECK(query_naive(naive, {1, 3}) == ids_of(g, {1, 2, 4, 5}));
    CHECK(query_naive(naive, {5, 5}).empty());

    IndexTree h = build_lse_h(g);
    CHECK(query_lse_h(h, {2, 1}) == ids_of(g, {1, 2, 3, 4, 5, 6}));
    CHECK(query_lse_h(h, {3, 2}).empty());
    CHECK(query_lse_h(h, {1, 3}) == ids_of(g, {1, 2, 4, 5}));

    IndexTree hv = build_lse_hv(g);
    CHECK(query_lse_hv(hv, {2, 2}) == ids_of(g, {1, 2, 3, 4, 5, 6}));
    CHECK(query_lse_hv(hv, {1, 1}) == ids_of(g, {1, 2, 3, 4, 5, 6}));
    CHECK(query_lse_hv(hv, {1, 3}) == ids_of(g, {1, 2, 4, 5}));

    IndexTree hvd = build_lse_hvd(g);
    CHECK(query_lse_hvd(hvd, {3, 1}) == ids_of(g, {1, 2, 3, 4}));
    CHECK(query_lse_hvd(hvd, {2, 2}) == ids_of(g, {1, 2, 3, 4, 5, 6}));
    CHECK(query_lse_hvd(hvd, {1, 1}) == ids_of(g, {1, 2, 3, 4, 5, 6}));
    CHECK(query_lse_hvd(hvd, {3, 2}).empty());
}

TEST_CASE("query_core dispatches and validates") {
    Hypergraph g = make_toy();
    IndexTree naive = build_naive(g);
    IndexTree hvd = build_lse_hvd(g);
    CHECK(query_core(naive, {2, 2}) == query_core(hvd, {2, 2}));
    CHECK_THROWS_AS(query_naive(hvd, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(query_lse_hvd(naive, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(query_core(naive, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(query_core(naive, {1, 0}), std::invalid_argument);
    CHECK(query_core(naive, {100, 100}).empty());
}

TEST_CASE("all variants equal the oracle over the full grid") {
    Hypergraph g = make_toy();
    auto trees = all_trees(g);
    for (int k = 1; k <= 4; ++k)
        for (int gq = 1; gq <= 4; ++gq) {
            auto expected = kgtest::oracle_kg_core(g, k, gq);
            for (const auto& tree : trees)
                CHECK(query_core(tree, {k, gq}) == expected);
        }

    for (const auto& cfg : kgtest::random_instance_configs(6, 0x41)) {
        Hypergraph r = generate_hypergraph(cfg);
        auto trees_r = all_trees(r);
        int k_hi = trees_r[0].k_max(1) + 1;
        int g_hi = trees_r[0].g_max() + 1;
        for (int k = 1; k <= k_hi; ++k)
            for (int gq = 1; gq <= g_hi; ++gq) {
                auto expected = kgtest::oracle_kg_core(r, k, gq);
                for (const auto& tree : trees_r)
                    CHECK(query_core(tree, {k, gq}) == expected);
            }
    }
}

TEST_CASE("aux depth filter is tight on the toy tree") {
    Hypergraph g = make_toy();
    IndexTree hvd = build_lse_hvd(g);
    // (3,2) offsets to its own aux by 0, so depth 1 is beyond the filter;
    // including it would inject nodes although the (3,2)-core is empty
    CHECK(query_lse_hvd(hvd, {3, 2}).empty());
    CHECK(!hvd.leaf(3, 2)->aux.at(1).empty());
    CHECK(query_lse_hvd(hvd, {2, 3}).empty());
    CHECK(!hvd.leaf(2, 3)->aux.at(1).empty());
}

TEST_CASE("core_size reads the table") {
    Hypergraph g = make_toy();
    IndexTree tree = build_lse_hvd(g);
    CHECK(core_size(tree, {2, 1}) == 6);
    CHECK(core_size(tree, {1, 3}) == 4);
    CHECK(core_size(tree, {3, 1}) == 4);
    CHECK(core_size(tree, {9, 9}) == 0);

    for (int k = 1; k <= 3; ++k)
        for (int gq = 1; gq <= 2; ++gq) {
            CHECK(core_size(tree, {k, gq}) >= core_size(tree, {k + 1, gq}));
            CHECK(core_size(tree, {k, gq}) >= core_size(tree, {k, gq + 1}));
        }
}

TEST_CASE("size-bounded queries on the toy table") {
    Hypergraph g = make_toy();
    IndexTree tree = build_lse_h(g);

    auto all = size_bounded_query(tree, {4, 6});
    REQUIRE(all.size() == 6);
    // ordered by (g,k)
    CHECK(all.front() == SizeQueryResult{1, 1, 6});
    CHECK(all.back() == SizeQueryResult{1, 3, 4});

    CHECK(size_bounded_query(tree, {7, 10}).empty());

    auto exact = size_bounded_query(tree, {4, 4});
    REQUIRE(exact.size() == 2);
    CHECK(exact[0] == SizeQueryResult{3, 1, 4});
    CHECK(exact[1] == SizeQueryResult{1, 3, 4});

    CHECK_THROWS_AS(size_bounded_query(tree, {5, 4}), std::invalid_argument);
    CHECK_THROWS_AS(size_bounded_query_peeling(g, {5, 4}), std::invalid_argument);
}

TEST_CASE("indexed and peeled size queries agree") {
    Hypergraph toy = make_toy();
    IndexTree toy_tree = build_lse_h(toy);
    for (std::int64_t lb = 0; lb <= 7; ++lb)
        for (std::int64_t ub = lb; ub <= 8; ++ub)
            CHECK(size_bounded_query(toy_tree, {lb, ub}) ==
                  size_bounded_query_peeling(toy, {lb, ub}));

    std::mt19937_64 rng(0x51);
    for (const auto& cfg : kgtest::random_instance_configs(8, 0x52)) {
        Hypergraph g = generate_hypergraph(cfg);
        IndexTree tree = build_lse_h(g);
        for (int i = 0; i < 6; ++i) {
            std::int64_t lb = 1 + static_cast<std::int64_t>(rng() % g.num_nodes());
            std::int64_t ub = lb + static_cast<std::int64_t>(rng() % g.num_nodes());
            CHECK(size_bounded_query(tree, {lb, ub}) ==
                  size_bounded_query_peeling(g, {lb, ub}));
        }
    }

    Hypergraph empty;
    CHECK(size_bounded_query_peeling(empty, {1, 5}).empty());
}
