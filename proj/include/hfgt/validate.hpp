#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfgt/model.hpp"
#include "hfgt/types.hpp"

namespace hfgt {

// The four linguistic fidelity properties, operationalized as mechanical
// checks on an instantiated model, plus the allocation-kind rules.
//
//   R1 soundness     every reference resolves to an interpretable entity
//   R2 completeness  every declared entity plays a part (warnings only)
//   R3 lucidity      no entity stands for two concepts at once
//   R4 laconicity    no concept is declared twice
//   R5 allocation    process/resource kind compatibility
enum class Rule { r1_soundness, r2_completeness, r3_lucidity, r4_laconicity, r5_allocation };

constexpr std::string_view rule_code(Rule r) {
    switch (r) {
        case Rule::r1_soundness: return "R1";
        case Rule::r2_completeness: return "R2";
        case Rule::r3_lucidity: return "R3";
        case Rule::r4_laconicity: return "R4";
        case Rule::r5_allocation: return "R5";
    }
    return "?";
}

enum class EntityKind { operand, resource, process, allocation };

struct EntityRef {
    EntityKind kind = EntityKind::operand;
    std::uint32_t id = 0;

    bool operator==(const EntityRef&) const = default;
};

struct Finding {
    Rule rule = Rule::r1_soundness;
    std::string message;
    std::vector<EntityRef> entities;

    bool operator==(const Finding&) const = default;
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;

    bool ok() const { return errors.empty(); }

    bool has_rule(Rule r) const {
        for (const auto& f : errors)
            if (f.rule == r) return true;
        for (const auto& f : warnings)
            if (f.rule == r) return true;
        return false;
    }

    bool operator==(const ValidationReport&) const = default;
};

namespace detail {

struct ReportBuilder {
    ValidationReport report;

    void error(Rule rule, std::string message, std::vector<EntityRef> entities = {}) {
        report.errors.push_back({rule, std::move(message), std::move(entities)});
    }
    void warn(Rule rule, std::string message, std::vector<EntityRef> entities = {}) {
        report.warnings.push_back({rule, std::move(message), std::move(entities)});
    }
};

inline std::string payload_description(const Process& p) {
    if (const auto* t = std::get_if<TransformationSpec>(&p.spec)) {
        std::string s = "transformation(in:";
        for (auto id : t->inputs) s += " " + std::to_string(id);
        s += "; out:";
        for (auto id : t->outputs) s += " " + std::to_string(id);
        return s + ")";
    }
    const auto& move = std::get<RefinedTransportSpec>(p.spec);
    return "transport(" + std::to_string(move.origin) + " -> " + std::to_string(move.destination) +
           ", carrying " + std::to_string(move.carried) + ")";
}

}  // namespace detail

// Pure and idempotent; reports every violated rule rather than stopping at
// the first. Empty errors <=> the model passes all hard rules.
inline ValidationReport validate(const SystemModel& model) {
    detail::ReportBuilder out;

    const auto operand_count = static_cast<OperandId>(model.operands.size());
    const auto resource_count = static_cast<ResourceId>(model.resources.size());
    const auto process_count = static_cast<ProcessId>(model.processes.size());
    const auto buffer_table = buffers(model);
    const auto buffer_count = static_cast<BufferId>(buffer_table.size());

    // R1: ids are dense and every reference resolves.
    for (std::size_t i = 0; i < model.operands.size(); ++i)
        if (model.operands[i].id != i)
            out.error(Rule::r1_soundness,
                      "operand '" + model.operands[i].name + "' has id " +
                          std::to_string(model.operands[i].id) + " but sits at index " +
                          std::to_string(i),
                      {{EntityKind::operand, static_cast<std::uint32_t>(i)}});
    for (std::size_t v = 0; v < model.resources.size(); ++v)
        if (model.resources[v].id != v)
            out.error(Rule::r1_soundness,
                      "resource '" + model.resources[v].name + "' has id " +
                          std::to_string(model.resources[v].id) + " but sits at index " +
                          std::to_string(v),
                      {{EntityKind::resource, static_cast<std::uint32_t>(v)}});
    for (std::size_t w = 0; w < model.processes.size(); ++w)
        if (model.processes[w].id != w)
            out.error(Rule::r1_soundness,
                      "process '" + model.processes[w].name + "' has id " +
                          std::to_string(model.processes[w].id) + " but sits at index " +
                          std::to_string(w),
                      {{EntityKind::process, static_cast<std::uint32_t>(w)}});

    for (const auto& r : model.resources)
        if (r.buffer_index && *r.buffer_index >= buffer_count)
            out.error(Rule::r1_soundness,
                      "resource '" + r.name + "' has buffer index " +
                          std::to_string(*r.buffer_index) + " but there are only " +
                          std::to_string(buffer_count) + " buffers",
                      {{EntityKind::resource, r.id}});

    for (const auto& p : model.processes) {
        if (const auto* t = std::get_if<TransformationSpec>(&p.spec)) {
            if (t->inputs.empty() || t->outputs.empty())
                out.error(Rule::r1_soundness,
                          "process '" + p.name +
                              "' has an empty input or output set and cannot be interpreted as a "
                              "transformation",
                          {{EntityKind::process, p.id}});
            for (auto id : t->inputs)
                if (id >= operand_count)
                    out.error(Rule::r1_soundness,
                              "process '" + p.name + "' consumes unknown operand id " +
                                  std::to_string(id),
                              {{EntityKind::process, p.id}});
            for (auto id : t->outputs)
                if (id >= operand_count)
                    out.error(Rule::r1_soundness,
                              "process '" + p.name + "' produces unknown operand id " +
                                  std::to_string(id),
                              {{EntityKind::process, p.id}});
        } else {
            const auto& move = std::get<RefinedTransportSpec>(p.spec);
            if (move.origin >= buffer_count || move.destination >= buffer_count)
                out.error(Rule::r1_soundness,
                          "process '" + p.name + "' moves between unknown buffers " +
                              std::to_string(move.origin) + " -> " + std::to_string(move.destination),
                          {{EntityKind::process, p.id}});
            if (move.carried >= operand_count)
                out.error(Rule::r1_soundness,
                          "process '" + p.name + "' carries unknown operand id " +
                              std::to_string(move.carried),
                          {{EntityKind::process, p.id}});
        }
    }

    for (std::size_t a = 0; a < model.allocations.size(); ++a) {
        const auto& alloc = model.allocations[a];
        if (alloc.process >= process_count)
            out.error(Rule::r1_soundness,
                      "allocation " + std::to_string(a) + " references unknown process id " +
                          std::to_string(alloc.process),
                      {{EntityKind::allocation, static_cast<std::uint32_t>(a)}});
        if (alloc.resource >= resource_count)
            out.error(Rule::r1_soundness,
                      "allocation " + std::to_string(a) + " references unknown resource id " +
                          std::to_string(alloc.resource),
                      {{EntityKind::allocation, static_cast<std::uint32_t>(a)}});
    }

    for (const auto& [operand_id, net] : model.operand_nets) {
        if (operand_id >= operand_count)
            out.error(Rule::r1_soundness,
                      "operand net attached to unknown operand id " + std::to_string(operand_id));
        else if (net.operand_id != operand_id)
            out.error(Rule::r1_soundness,
                      "operand net for '" + model.operands[operand_id].name +
                          "' is bound to operand id " + std::to_string(net.operand_id),
                      {{EntityKind::operand, operand_id}});
    }

    // R3: buffer index presence and the canonical ordering.
    for (const auto& r : model.resources) {
        const bool is_buffer_kind = r.kind != ResourceKind::transportation;
        if (is_buffer_kind && !r.buffer_index)
            out.error(Rule::r3_lucidity,
                      "resource '" + r.name + "' is a " + std::string(to_string(r.kind)) +
                          " resource but has no buffer index",
                      {{EntityKind::resource, r.id}});
        if (!is_buffer_kind && r.buffer_index)
            out.error(Rule::r3_lucidity,
                      "transportation resource '" + r.name +
                          "' carries a buffer index; it would stand for both a mover and a place",
                      {{EntityKind::resource, r.id}});
    }
    for (const auto& site : buffer_table) {
        const auto& r = model.resources[site.resource];
        if (r.buffer_index && *r.buffer_index < buffer_count && *r.buffer_index != site.index)
            out.error(Rule::r3_lucidity,
                      "resource '" + r.name + "' has buffer index " +
                          std::to_string(*r.buffer_index) + " but the canonical ordering assigns " +
                          std::to_string(site.index),
                      {{EntityKind::resource, r.id}});
    }

    // R4: duplicate allocations and duplicate process payloads.
    {
        std::map<std::pair<ProcessId, ResourceId>, std::size_t> seen;
        for (std::size_t a = 0; a < model.allocations.size(); ++a) {
            const auto& alloc = model.allocations[a];
            auto [it, fresh] = seen.emplace(std::make_pair(alloc.process, alloc.resource), a);
            if (!fresh)
                out.error(Rule::r4_laconicity,
                          "allocation (process " + std::to_string(alloc.process) + ", resource " +
                              std::to_string(alloc.resource) + ") is declared more than once",
                          {{EntityKind::allocation, static_cast<std::uint32_t>(it->second)},
                           {EntityKind::allocation, static_cast<std::uint32_t>(a)}});
        }
    }
    for (std::size_t w1 = 0; w1 < model.processes.size(); ++w1)
        for (std::size_t w2 = w1 + 1; w2 < model.processes.size(); ++w2)
            if (model.processes[w1].spec == model.processes[w2].spec)
                out.error(Rule::r4_laconicity,
                          "processes '" + model.processes[w1].name + "' and '" +
                              model.processes[w2].name + "' declare the same " +
                              detail::payload_description(model.processes[w1]),
                          {{EntityKind::process, static_cast<std::uint32_t>(w1)},
                           {EntityKind::process, static_cast<std::uint32_t>(w2)}});

    // R5: who may carry out what.
    for (std::size_t a = 0; a < model.allocations.size(); ++a) {
        const auto& alloc = model.allocations[a];
        if (alloc.process >= process_count || alloc.resource >= resource_count) continue;
        const auto& p = model.processes[alloc.process];
        const auto& r = model.resources[alloc.resource];
        if (p.is_transformation()) {
            if (r.kind != ResourceKind::transformation)
                out.error(Rule::r5_allocation,
                          "transformation process '" + p.name + "' is allocated to " +
                              std::string(to_string(r.kind)) + " resource '" + r.name + "'",
                          {{EntityKind::process, p.id}, {EntityKind::resource, r.id}});
        } else if (r.kind != ResourceKind::transportation && r.buffer_index) {
            const auto& move = std::get<RefinedTransportSpec>(p.spec);
            if (move.origin != *r.buffer_index || move.destination != *r.buffer_index)
                out.error(Rule::r5_allocation,
                          "transport process '" + p.name + "' (" + std::to_string(move.origin) +
                              " -> " + std::to_string(move.destination) +
                              ") is allocated to point resource '" + r.name +
                              "' at buffer " + std::to_string(*r.buffer_index),
                          {{EntityKind::process, p.id}, {EntityKind::resource, r.id}});
        }
    }

    // R2: everything declared should take part somewhere (warnings).
    {
        std::set<ProcessId> allocated;
        std::set<ResourceId> allocated_to;
        std::set<BufferId> touched_buffers;
        for (const auto& alloc : model.allocations) {
            if (alloc.process >= process_count || alloc.resource >= resource_count) continue;
            allocated.insert(alloc.process);
            allocated_to.insert(alloc.resource);
            if (const auto& bi = model.resources[alloc.resource].buffer_index)
                touched_buffers.insert(*bi);
            const auto& p = model.processes[alloc.process];
            if (const auto* t = std::get_if<RefinedTransportSpec>(&p.spec)) {
                touched_buffers.insert(t->origin);
                touched_buffers.insert(t->destination);
            }
        }

        std::set<OperandId> used_operands;
        for (const auto& p : model.processes) {
            if (const auto* spec = std::get_if<TransformationSpec>(&p.spec)) {
                used_operands.insert(spec->inputs.begin(), spec->inputs.end());
                used_operands.insert(spec->outputs.begin(), spec->outputs.end());
            } else {
                used_operands.insert(std::get<RefinedTransportSpec>(p.spec).carried);
            }
        }

        for (const auto& p : model.processes)
            if (!allocated.contains(p.id))
                out.warn(Rule::r2_completeness,
                         "process '" + p.name + "' is not allocated to any resource",
                         {{EntityKind::process, p.id}});
        for (const auto& op : model.operands)
            if (!used_operands.contains(op.id))
                out.warn(Rule::r2_completeness,
                         "operand '" + op.name + "' does not appear in any process",
                         {{EntityKind::operand, op.id}});
        for (const auto& site : buffer_table)
            if (!allocated_to.contains(site.resource) && !touched_buffers.contains(site.index))
                out.warn(Rule::r2_completeness,
                         "buffer '" + model.resources[site.resource].name +
                             "' is neither the site nor an endpoint of any allocated process",
                         {{EntityKind::resource, site.resource}});
    }

    return out.report;
}

}  // namespace hfgt
