#include <random>
#include <set>

#include <catch2/catch.hpp>

#include "fixtures.hpp"
#include "hfgt/adjacency.hpp"
#include "oracle.hpp"

using namespace hfgt;
namespace psi = fixtures::fig5_psi;

namespace {

std::set<std::pair<CapabilityId, CapabilityId>> edge_set(const HfgAdjacency& adj) {
    auto entries = adj.boolean_entries();
    return {entries.begin(), entries.end()};
}

}  // namespace

TEST_CASE("fixture story edge: treat water, then pipe it to the house") {
    auto model = fixtures::fig5();
    auto a_rho = hfg_adjacency_tensor_path(positive_tensor(model), negative_tensor(model));
    CHECK(a_rho.has_edge(psi::treat_water, psi::pipe_water));
    CHECK_FALSE(a_rho.has_edge(psi::pipe_water, psi::treat_water));
}

TEST_CASE("fixture adjacency matches the hand-derived edge set") {
    auto model = fixtures::fig5();
    auto a_rho = hfg_adjacency_tensor_path(positive_tensor(model), negative_tensor(model));
    CHECK(a_rho.capability_count == 12);

    std::set<std::pair<CapabilityId, CapabilityId>> expected{
        {psi::treat_water, psi::treat_water},
        {psi::treat_water, psi::pipe_water},
        {psi::generate_electricity, psi::generate_electricity},
        {psi::generate_electricity, psi::line_panel_house},
        {psi::store_electricity, psi::store_electricity},
        {psi::store_electricity, psi::consume_water},
        {psi::store_electricity, psi::line_house_work},
        {psi::store_water, psi::store_water},
        {psi::store_water, psi::consume_water},
        {psi::shelter_person, psi::shelter_person},
        {psi::shelter_person, psi::drive_to_work},
        {psi::consume_water, psi::store_water},
        {psi::consume_water, psi::consume_water},
        {psi::do_work, psi::do_work},
        {psi::do_work, psi::drive_home},
        {psi::pipe_water, psi::store_water},
        {psi::pipe_water, psi::consume_water},
        {psi::line_panel_house, psi::store_electricity},
        {psi::line_panel_house, psi::consume_water},
        {psi::line_panel_house, psi::line_house_work},
        {psi::line_house_work, psi::do_work},
        {psi::drive_to_work, psi::do_work},
        {psi::drive_to_work, psi::drive_home},
        {psi::drive_home, psi::shelter_person},
        {psi::drive_home, psi::drive_to_work},
    };
    CHECK(edge_set(a_rho) == expected);
}

TEST_CASE("both A_rho paths and the brute-force oracle agree on the fixture") {
    auto model = fixtures::fig5();
    auto pos = positive_tensor(model);
    auto neg = negative_tensor(model);

    auto via_tensor = hfg_adjacency_tensor_path(pos, neg);
    auto via_matrix = hfg_adjacency_matrix_path(matricize(pos), matricize(neg));
    CHECK(edge_set(via_tensor) == edge_set(via_matrix));
    CHECK(via_tensor.entries == via_matrix.entries);  // counts agree too

    auto dense = oracle::dense_tensors(model);
    CHECK(edge_set(via_tensor) == oracle::adjacency_edges(dense));

    auto oracle_counts = oracle::adjacency_counts(dense);
    for (const auto& e : via_tensor.entries) CHECK(e.count == oracle_counts[e.from][e.to]);
}

TEST_CASE("empty and disjoint inputs give empty adjacency") {
    IncidenceTensor pos, neg;
    CHECK(hfg_adjacency_tensor_path(pos, neg).entries.empty());

    // two transports carrying unrelated operands never chain
    pos.operand_count = neg.operand_count = 2;
    pos.buffer_count = neg.buffer_count = 2;
    pos.capability_count = neg.capability_count = 2;
    pos.sign = Sign::positive;
    neg.entries = {{0, 0, 0}, {1, 1, 1}};
    pos.entries = {{0, 1, 0}, {1, 0, 1}};
    CHECK(hfg_adjacency_tensor_path(pos, neg).entries.empty());
}

TEST_CASE("holding in place produces a self-loop") {
    auto model = build_model({{"water", OperandKind::matter, std::nullopt}},
                             {{"tank", ResourceKind::independent_buffer}},
                             {{"hold", TransportDecl{0, 0, 0}}}, {{0, 0}});
    auto a_rho = hfg_adjacency_tensor_path(positive_tensor(model), negative_tensor(model));
    REQUIRE(a_rho.entries.size() == 1);
    CHECK(a_rho.has_edge(0, 0));
}

TEST_CASE("dimension mismatches are rejected") {
    IncidenceTensor pos, neg;
    pos.operand_count = 2;
    neg.operand_count = 3;
    CHECK_THROWS_AS(hfg_adjacency_tensor_path(pos, neg), Error);
    CHECK_THROWS_AS(formal_graph_projection(pos, neg), Error);
    CHECK_THROWS_AS(multilayer_projection(pos, neg), Error);

    IncidenceMatrix pm, nm;
    pm.rows = 4;
    nm.rows = 6;
    CHECK_THROWS_AS(hfg_adjacency_matrix_path(pm, nm), Error);
}

TEST_CASE("fixture formal graph projection") {
    auto model = fixtures::fig5();
    auto a_bs = formal_graph_projection(positive_tensor(model), negative_tensor(model));
    CHECK(a_bs.buffer_count == 4);

    const BufferId plant = 0, panel = 1, house = 2, work = 3;
    std::set<std::pair<BufferId, BufferId>> off_diagonal;
    for (const auto& [y1, y2] : a_bs.entries)
        if (y1 != y2) off_diagonal.emplace(y1, y2);
    CHECK(off_diagonal == std::set<std::pair<BufferId, BufferId>>{
                              {plant, house}, {panel, house}, {house, work}, {work, house}});

    // every buffer transforms or holds something in place
    for (BufferId y = 0; y < 4; ++y) CHECK(a_bs.has_edge(y, y));
}

TEST_CASE("pure transformation models stay on the diagonal") {
    auto model = build_model({{"water", OperandKind::matter, std::nullopt}},
                             {{"plant", ResourceKind::transformation}},
                             {{"treat", TransformationDecl{{0}, {0}}}}, {{0, 0}});
    auto a_bs = formal_graph_projection(positive_tensor(model), negative_tensor(model));
    for (const auto& [y1, y2] : a_bs.entries) CHECK(y1 == y2);
}

TEST_CASE("empty model projects to a 0x0 formal graph") {
    auto model = build_model({}, {}, {}, {});
    auto a_bs = formal_graph_projection(positive_tensor(model), negative_tensor(model));
    CHECK(a_bs.buffer_count == 0);
    CHECK(a_bs.entries.empty());
}

TEST_CASE("fixture multilayer projection") {
    auto model = fixtures::fig5();
    auto pos = positive_tensor(model);
    auto neg = negative_tensor(model);
    auto layers = multilayer_projection(pos, neg);
    CHECK(layers.buffer_count == 4);
    CHECK(layers.operand_count == 3);

    const OperandId water = 0;
    const BufferId plant = 0, house = 2;

    // only the pipeline moves water between distinct buffers
    auto water_layer = layers.slice(water, water);
    std::set<std::pair<BufferId, BufferId>> off_diagonal;
    for (const auto& [y1, y2] : water_layer)
        if (y1 != y2) off_diagonal.emplace(y1, y2);
    CHECK(off_diagonal == std::set<std::pair<BufferId, BufferId>>{{plant, house}});

    // the formula never reads i2, so layers repeat across it
    for (OperandId i2 = 0; i2 < 3; ++i2)
        CHECK(layers.slice(water, i2) == water_layer);

    CHECK(layers == multilayer_projection(pos, neg));  // deterministic

    auto dense = oracle::dense_tensors(model);
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>> got;
    for (const auto& e : layers.entries) got.emplace(e.y1, e.y2, e.i1, e.i2);
    CHECK(got == oracle::multilayer_entries(dense));
}

TEST_CASE("empty tensors project to an empty multilayer structure") {
    auto model = build_model({}, {}, {}, {});
    auto layers = multilayer_projection(positive_tensor(model), negative_tensor(model));
    CHECK(layers.entries.empty());
    CHECK(layers.buffer_count == 0);
    CHECK(layers.operand_count == 0);
}

TEST_CASE("OR over diagonal slices equals the formal graph") {
    std::mt19937 rng(303);
    for (int round = 0; round < 30; ++round) {
        auto model = round == 0 ? fixtures::fig5() : fixtures::random_valid_model(rng);
        auto pos = positive_tensor(model);
        auto neg = negative_tensor(model);
        auto layers = multilayer_projection(pos, neg);
        auto a_bs = formal_graph_projection(pos, neg);

        std::set<std::pair<BufferId, BufferId>> merged;
        for (OperandId i = 0; i < layers.operand_count; ++i) {
            auto layer = layers.slice(i, i);
            merged.insert(layer.begin(), layer.end());
        }
        CHECK(merged == std::set<std::pair<BufferId, BufferId>>(a_bs.entries.begin(),
                                                                a_bs.entries.end()));
    }
}

TEST_CASE("random models: dual path, oracle, and handshake") {
    std::mt19937 rng(404);
    for (int round = 0; round < 40; ++round) {
        auto model = fixtures::random_valid_model(rng);
        REQUIRE(validate(model).errors.empty());
        CHECK(enumerate_capabilities(model).size() == model.allocations.size());

        auto pos = positive_tensor(model);
        auto neg = negative_tensor(model);
        auto via_tensor = hfg_adjacency_tensor_path(pos, neg);
        auto via_matrix = hfg_adjacency_matrix_path(matricize(pos), matricize(neg));
        CHECK(via_tensor.entries == via_matrix.entries);

        auto dense = oracle::dense_tensors(model);
        CHECK(edge_set(via_tensor) == oracle::adjacency_edges(dense));

        auto a_bs = formal_graph_projection(pos, neg);
        CHECK(std::set<std::pair<BufferId, BufferId>>(a_bs.entries.begin(), a_bs.entries.end()) ==
              oracle::formal_edges(dense));

        auto stats = structure_stats(via_tensor);
        std::size_t out_sum = 0, in_sum = 0;
        for (auto d : stats.out_degree) out_sum += d;
        for (auto d : stats.in_degree) in_sum += d;
        CHECK(stats.edge_count == out_sum);
        CHECK(stats.edge_count == in_sum);
    }
}

TEST_CASE("structure stats on the fixture") {
    auto model = fixtures::fig5();
    auto pos = positive_tensor(model);
    auto neg = negative_tensor(model);

    auto hfg = structure_stats(hfg_adjacency_tensor_path(pos, neg));
    CHECK(hfg.node_count == 12);
    CHECK(hfg.edge_count == 25);
    CHECK(hfg.weak_components == 1);
    CHECK(hfg.strong_components == 8);

    auto formal = structure_stats(formal_graph_projection(pos, neg));
    CHECK(formal.node_count == 4);
    CHECK(formal.edge_count == 8);
    CHECK(formal.weak_components == 1);
    CHECK(formal.strong_components == 3);
}

TEST_CASE("structure stats on an edgeless graph") {
    HfgAdjacency adj;
    adj.capability_count = 5;
    auto stats = structure_stats(adj);
    CHECK(stats.node_count == 5);
    CHECK(stats.edge_count == 0);
    CHECK(stats.weak_components == 5);
    CHECK(stats.strong_components == 5);
}

TEST_CASE("story paths from the fixture's first capability") {
    auto model = fixtures::fig5();
    auto a_rho = hfg_adjacency_tensor_path(positive_tensor(model), negative_tensor(model));

    auto walks = story_paths(a_rho, psi::treat_water, 2);
    using Walk = std::vector<CapabilityId>;
    std::vector<Walk> expected{
        {0}, {0, 0}, {0, 0, 0}, {0, 0, 7}, {0, 7}, {0, 7, 3}, {0, 7, 5}};
    CHECK(walks == expected);
}

TEST_CASE("story paths on isolated and looping capabilities") {
    HfgAdjacency isolated;
    isolated.capability_count = 2;
    CHECK(story_paths(isolated, 1, 4) == std::vector<std::vector<CapabilityId>>{{1}});

    HfgAdjacency loop;
    loop.capability_count = 1;
    loop.entries = {{0, 0, 1}};
    auto walks = story_paths(loop, 0, 3);
    std::vector<std::vector<CapabilityId>> expected{{0}, {0, 0}, {0, 0, 0}, {0, 0, 0, 0}};
    CHECK(walks == expected);

    CHECK_THROWS_AS(story_paths(loop, 5, 1), Error);
}
