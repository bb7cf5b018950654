#pragma once

#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "hfgt/hfgt.hpp"

// Shared test fixtures: the water/solar/house/work system (the same model
// as models/fig5.json, built from declarations) and seeded random model and
// net generators.

namespace fixtures {

inline std::filesystem::path models_dir() {
#ifdef HFGT_MODELS_DIR
    return HFGT_MODELS_DIR;
#else
    return "models";
#endif
}

inline std::filesystem::path fig5_path() { return models_dir() / "fig5.json"; }

// Capability indices of the fixture, in (process, resource) order.
namespace fig5_psi {
inline constexpr hfgt::CapabilityId treat_water = 0;
inline constexpr hfgt::CapabilityId generate_electricity = 1;
inline constexpr hfgt::CapabilityId store_electricity = 2;
inline constexpr hfgt::CapabilityId store_water = 3;
inline constexpr hfgt::CapabilityId shelter_person = 4;
inline constexpr hfgt::CapabilityId consume_water = 5;
inline constexpr hfgt::CapabilityId do_work = 6;
inline constexpr hfgt::CapabilityId pipe_water = 7;
inline constexpr hfgt::CapabilityId line_panel_house = 8;
inline constexpr hfgt::CapabilityId line_house_work = 9;
inline constexpr hfgt::CapabilityId drive_to_work = 10;
inline constexpr hfgt::CapabilityId drive_home = 11;
}  // namespace fig5_psi

inline hfgt::SystemModel fig5() {
    using namespace hfgt;

    const OperandId water = 0, electricity = 1, person = 2;
    const ResourceId plant = 0, panel = 1, house = 2, work = 3;
    const ResourceId pipeline = 4, line1 = 5, line2 = 6, road_out = 7, road_back = 8;

    std::vector<OperandDecl> operands{
        {"water", OperandKind::matter,
         OperandNetDecl{{"untreated", "treated", "at-house"},
                        {"treat", "pipe"},
                        {{"untreated", "treat", 1},
                         {"treat", "treated", 1},
                         {"treated", "pipe", 1},
                         {"pipe", "at-house", 1}}}},
        {"electricity", OperandKind::energy,
         OperandNetDecl{{"potential", "generated", "consumed"},
                        {"generate", "consume"},
                        {{"potential", "generate", 1},
                         {"generate", "generated", 1},
                         {"generated", "consume", 1},
                         {"consume", "consumed", 1}}}},
        {"person", OperandKind::living_organism,
         OperandNetDecl{{"at-home", "at-work"},
                        {"commute to work", "commute home"},
                        {{"at-home", "commute to work", 1},
                         {"commute to work", "at-work", 1},
                         {"at-work", "commute home", 1},
                         {"commute home", "at-home", 1}}}},
    };

    std::vector<ResourceDecl> resources{
        {"water treatment facility", ResourceKind::transformation},
        {"solar PV panel", ResourceKind::transformation},
        {"house with rooftop solar", ResourceKind::transformation},
        {"work location", ResourceKind::transformation},
        {"water pipeline", ResourceKind::transportation},
        {"power line 1", ResourceKind::transportation},
        {"power line 2", ResourceKind::transportation},
        {"road to work", ResourceKind::transportation},
        {"road home", ResourceKind::transportation},
    };

    std::vector<ProcessDecl> processes{
        {"treat water", TransformationDecl{{water}, {water}}},
        {"generate electricity", TransformationDecl{{electricity}, {electricity}}},
        {"store electricity", TransportDecl{house, house, electricity}},
        {"store water", TransportDecl{house, house, water}},
        {"shelter person", TransportDecl{house, house, person}},
        {"consume water", TransformationDecl{{water, electricity}, {water}}},
        {"do work", TransformationDecl{{person, electricity}, {person}}},
        {"transport water plant to house", TransportDecl{plant, house, water}},
        {"transmit electricity panel to house", TransportDecl{panel, house, electricity}},
        {"transmit electricity house to work", TransportDecl{house, work, electricity}},
        {"drive person house to work", TransportDecl{house, work, person}},
        {"drive person work to house", TransportDecl{work, house, person}},
    };

    std::vector<AllocationDecl> allocations{
        {0, plant},    {1, panel},   {2, house},    {3, house},
        {4, house},    {5, house},   {6, work},     {7, pipeline},
        {8, line1},    {9, line2},   {10, road_out}, {11, road_back},
    };

    return build_model(operands, resources, processes, allocations);
}

// --- Random valid models --------------------------------------------------

namespace detail {

// Payload identity mirrors the R4 laconicity check.
using PayloadKey = std::tuple<int, std::vector<hfgt::OperandId>, std::vector<hfgt::OperandId>,
                              hfgt::BufferId, hfgt::BufferId, hfgt::OperandId>;

inline std::vector<hfgt::OperandId> random_operand_subset(std::mt19937& rng, std::size_t count) {
    std::vector<hfgt::OperandId> subset;
    std::uniform_int_distribution<int> coin(0, 1);
    for (hfgt::OperandId i = 0; i < count; ++i)
        if (coin(rng)) subset.push_back(i);
    if (subset.empty())
        subset.push_back(std::uniform_int_distribution<hfgt::OperandId>(
            0, static_cast<hfgt::OperandId>(count - 1))(rng));
    return subset;
}

}  // namespace detail

// A model that validates with zero errors: |L| <= 5, |B_S| <= 6, |E_S| <= 20.
inline hfgt::SystemModel random_valid_model(std::mt19937& rng) {
    using namespace hfgt;

    std::uniform_int_distribution<std::size_t> operand_dist(1, 5);
    std::uniform_int_distribution<std::size_t> transformation_dist(1, 3);
    std::uniform_int_distribution<std::size_t> independent_dist(0, 3);
    std::uniform_int_distribution<std::size_t> transport_res_dist(0, 3);

    const std::size_t operand_count = operand_dist(rng);
    const std::size_t transformation_count = transformation_dist(rng);
    const std::size_t independent_count = independent_dist(rng);
    const std::size_t transport_res_count = transport_res_dist(rng);
    const std::size_t buffer_count = transformation_count + independent_count;

    std::vector<OperandDecl> operands;
    for (std::size_t i = 0; i < operand_count; ++i)
        operands.push_back({"op" + std::to_string(i),
                            static_cast<OperandKind>(std::uniform_int_distribution<int>(0, 4)(rng)),
                            std::nullopt});

    // Declared in canonical order, so buffer index == resource id for every
    // buffer-kind resource.
    std::vector<ResourceDecl> resources;
    for (std::size_t v = 0; v < transformation_count; ++v)
        resources.push_back({"mach" + std::to_string(v), ResourceKind::transformation});
    for (std::size_t v = 0; v < independent_count; ++v)
        resources.push_back({"buf" + std::to_string(v), ResourceKind::independent_buffer});
    for (std::size_t v = 0; v < transport_res_count; ++v)
        resources.push_back({"mover" + std::to_string(v), ResourceKind::transportation});

    std::uniform_int_distribution<std::size_t> process_count_dist(1, 10);
    const std::size_t target_processes = process_count_dist(rng);

    std::vector<ProcessDecl> processes;
    std::set<detail::PayloadKey> payloads;
    std::uniform_int_distribution<int> variant_coin(0, 1);
    std::uniform_int_distribution<BufferId> buffer_pick(0, static_cast<BufferId>(buffer_count - 1));
    std::uniform_int_distribution<OperandId> operand_pick(0,
                                                          static_cast<OperandId>(operand_count - 1));

    for (std::size_t attempts = 0; processes.size() < target_processes && attempts < 100;
         ++attempts) {
        ProcessDecl decl;
        detail::PayloadKey key;
        if (variant_coin(rng) == 0) {
            TransformationDecl t{detail::random_operand_subset(rng, operand_count),
                                 detail::random_operand_subset(rng, operand_count)};
            std::sort(t.inputs.begin(), t.inputs.end());
            std::sort(t.outputs.begin(), t.outputs.end());
            key = {0, t.inputs, t.outputs, 0, 0, 0};
            decl.spec = std::move(t);
        } else {
            TransportDecl t{buffer_pick(rng), buffer_pick(rng), operand_pick(rng)};
            key = {1, {}, {}, t.origin, t.destination, t.carried};
            decl.spec = t;
        }
        if (!payloads.insert(key).second) continue;
        decl.name = "proc" + std::to_string(processes.size());
        processes.push_back(std::move(decl));
    }

    std::vector<AllocationDecl> allocations;
    std::set<std::pair<ProcessId, ResourceId>> seen;
    std::uniform_int_distribution<int> extra_coin(0, 3);
    for (ProcessId w = 0; w < processes.size() && allocations.size() < 20; ++w) {
        const int copies = 1 + (extra_coin(rng) == 0 ? 1 : 0);
        for (int k = 0; k < copies && allocations.size() < 20; ++k) {
            ResourceId v;
            if (const auto* t = std::get_if<TransportDecl>(&processes[w].spec)) {
                // Holding in place may sit on its own buffer; a real move
                // needs a transportation resource.
                const bool holding = t->origin == t->destination;
                if (transport_res_count == 0 || (holding && variant_coin(rng) == 0))
                    v = static_cast<ResourceId>(t->origin);
                else
                    v = static_cast<ResourceId>(
                        buffer_count + std::uniform_int_distribution<std::size_t>(
                                           0, transport_res_count - 1)(rng));
                if (!holding && v < buffer_count) continue;  // no mover available
            } else {
                v = static_cast<ResourceId>(
                    std::uniform_int_distribution<std::size_t>(0, transformation_count - 1)(rng));
            }
            if (seen.emplace(w, v).second) allocations.push_back({w, v});
        }
    }

    return hfgt::build_model(operands, resources, processes, allocations);
}

// --- Random operand nets ----------------------------------------------------

inline hfgt::OperandNet random_net(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> place_dist(1, 6);
    std::uniform_int_distribution<std::size_t> transition_dist(1, 5);
    const std::size_t place_count = place_dist(rng);
    const std::size_t transition_count = transition_dist(rng);

    std::vector<std::string> places, transitions;
    for (std::size_t s = 0; s < place_count; ++s) places.push_back("s" + std::to_string(s));
    for (std::size_t e = 0; e < transition_count; ++e) transitions.push_back("e" + std::to_string(e));

    std::uniform_int_distribution<std::size_t> place_pick(0, place_count - 1);
    std::uniform_int_distribution<int> weight_dist(1, 3);
    std::uniform_int_distribution<int> shape_dist(0, 2);

    std::vector<hfgt::ArcDecl> arcs;
    for (std::size_t e = 0; e < transition_count; ++e) {
        // Every transition gets at least one arc; most get one in and one out.
        const int shape = shape_dist(rng);
        if (shape != 1)
            arcs.push_back({places[place_pick(rng)], transitions[e], weight_dist(rng)});
        if (shape != 2)
            arcs.push_back({transitions[e], places[place_pick(rng)], weight_dist(rng)});
    }

    return hfgt::build_operand_net(0, places, transitions, arcs);
}

inline hfgt::Marking random_marking(const hfgt::OperandNet& net, std::mt19937& rng) {
    std::uniform_int_distribution<int> token_dist(0, 5);
    hfgt::Marking m;
    m.tokens.resize(net.places.size());
    for (auto& t : m.tokens) t = token_dist(rng);
    return m;
}

}  // namespace fixtures
