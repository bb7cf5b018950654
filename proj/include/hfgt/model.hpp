#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "hfgt/operand_net.hpp"
#include "hfgt/types.hpp"

namespace hfgt {

// --- Instantiated architecture ------------------------------------------
//
// Resources are subjects, processes are predicates, operands are objects.
// R partitions into transformation resources (M), independent buffers (B)
// and transportation resources (H); the buffers B_S = M u B get dense
// indices with all of M first (in id order), then B (in id order).

struct Operand {
    OperandId id = 0;
    std::string name;
    OperandKind kind = OperandKind::matter;

    bool operator==(const Operand&) const = default;
};

struct Resource {
    ResourceId id = 0;
    std::string name;
    ResourceKind kind = ResourceKind::transformation;
    std::optional<BufferId> buffer_index;  // present iff kind != transportation

    bool operator==(const Resource&) const = default;
};

struct TransformationSpec {
    std::vector<OperandId> inputs;   // sorted, unique, nonempty
    std::vector<OperandId> outputs;  // sorted, unique, nonempty

    bool operator==(const TransformationSpec&) const = default;
};

// One transportation process fused with the holding process of the operand
// it carries. origin == destination models holding in place.
struct RefinedTransportSpec {
    BufferId origin = 0;
    BufferId destination = 0;
    OperandId carried = 0;

    bool operator==(const RefinedTransportSpec&) const = default;
};

struct Process {
    ProcessId id = 0;
    std::string name;
    std::variant<TransformationSpec, RefinedTransportSpec> spec;

    bool is_transformation() const { return std::holds_alternative<TransformationSpec>(spec); }

    bool operator==(const Process&) const = default;
};

struct Allocation {
    ProcessId process = 0;
    ResourceId resource = 0;

    bool operator==(const Allocation&) const = default;
};

struct SystemModel {
    std::vector<Operand> operands;
    std::vector<Resource> resources;
    std::vector<Process> processes;
    std::vector<Allocation> allocations;
    std::map<OperandId, OperandNet> operand_nets;

    bool operator==(const SystemModel&) const = default;
};

// --- Raw declarations accepted by build_model ----------------------------

struct OperandNetDecl {
    std::vector<std::string> places;
    std::vector<std::string> transitions;
    std::vector<ArcDecl> arcs;
};

struct OperandDecl {
    std::string name;
    OperandKind kind = OperandKind::matter;
    std::optional<OperandNetDecl> net;
};

struct ResourceDecl {
    std::string name;
    ResourceKind kind = ResourceKind::transformation;
};

struct TransformationDecl {
    std::vector<OperandId> inputs;
    std::vector<OperandId> outputs;
};

// Transport endpoints are declared as resource ids; build_model resolves
// them to buffer indices.
struct TransportDecl {
    ResourceId origin = 0;
    ResourceId destination = 0;
    OperandId carried = 0;
};

struct ProcessDecl {
    std::string name;
    std::variant<TransformationDecl, TransportDecl> spec;
};

struct AllocationDecl {
    ProcessId process = 0;
    ResourceId resource = 0;
};

struct BufferSite {
    BufferId index = 0;
    ResourceId resource = 0;

    bool operator==(const BufferSite&) const = default;
};

namespace detail {

inline void check_unique_names(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names)
        if (!seen.insert(n).second)
            throw Error(errc::duplicate, std::string("duplicate ") + what + " name '" + n + "'");
}

inline std::vector<OperandId> sorted_unique(std::vector<OperandId> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

// Canonical buffer table: transformation resources first, independent
// buffers second, each in id order. Derived from kinds alone so it stays
// well-defined even for models that fail validation.
inline std::vector<BufferSite> derive_buffers(const std::vector<Resource>& resources) {
    std::vector<BufferSite> sites;
    for (const auto& r : resources)
        if (r.kind == ResourceKind::transformation)
            sites.push_back({static_cast<BufferId>(sites.size()), r.id});
    for (const auto& r : resources)
        if (r.kind == ResourceKind::independent_buffer)
            sites.push_back({static_cast<BufferId>(sites.size()), r.id});
    return sites;
}

}  // namespace detail

// Ordered buffer table of the model, length |M| + |B|.
inline std::vector<BufferSite> buffers(const SystemModel& model) {
    return detail::derive_buffers(model.resources);
}

// Assembles a model with dense ids and the derived buffer ordering.
// Rejects only what cannot be represented (duplicate names, dangling ids,
// transport endpoints that are not buffers); everything else is left to
// validate().
inline SystemModel build_model(const std::vector<OperandDecl>& operand_decls,
                               const std::vector<ResourceDecl>& resource_decls,
                               const std::vector<ProcessDecl>& process_decls,
                               const std::vector<AllocationDecl>& allocation_decls) {
    SystemModel model;

    {
        std::vector<std::string> names;
        for (const auto& d : operand_decls) names.push_back(d.name);
        detail::check_unique_names(names, "operand");
        names.clear();
        for (const auto& d : resource_decls) names.push_back(d.name);
        detail::check_unique_names(names, "resource");
        names.clear();
        for (const auto& d : process_decls) names.push_back(d.name);
        detail::check_unique_names(names, "process");
    }

    for (std::size_t i = 0; i < operand_decls.size(); ++i)
        model.operands.push_back({static_cast<OperandId>(i), operand_decls[i].name,
                                  operand_decls[i].kind});

    for (std::size_t v = 0; v < resource_decls.size(); ++v)
        model.resources.push_back({static_cast<ResourceId>(v), resource_decls[v].name,
                                   resource_decls[v].kind, std::nullopt});
    for (const auto& site : detail::derive_buffers(model.resources))
        model.resources[site.resource].buffer_index = site.index;

    const auto operand_count = static_cast<OperandId>(model.operands.size());
    const auto resource_count = static_cast<ResourceId>(model.resources.size());

    auto check_operand = [&](OperandId id, const std::string& context) {
        if (id >= operand_count)
            throw Error(errc::unresolved, context + ": operand id " + std::to_string(id) +
                                              " does not exist");
    };

    for (std::size_t w = 0; w < process_decls.size(); ++w) {
        const auto& decl = process_decls[w];
        Process process;
        process.id = static_cast<ProcessId>(w);
        process.name = decl.name;
        if (const auto* t = std::get_if<TransformationDecl>(&decl.spec)) {
            for (auto id : t->inputs) check_operand(id, "process '" + decl.name + "'");
            for (auto id : t->outputs) check_operand(id, "process '" + decl.name + "'");
            process.spec = TransformationSpec{detail::sorted_unique(t->inputs),
                                              detail::sorted_unique(t->outputs)};
        } else {
            const auto& move = std::get<TransportDecl>(decl.spec);
            check_operand(move.carried, "process '" + decl.name + "'");
            auto site_of = [&](ResourceId rv) {
                if (rv >= resource_count)
                    throw Error(errc::unresolved, "process '" + decl.name + "': resource id " +
                                                      std::to_string(rv) + " does not exist");
                const auto& r = model.resources[rv];
                if (!r.buffer_index)
                    throw Error(errc::not_a_buffer,
                                "process '" + decl.name + "': resource '" + r.name +
                                    "' is a transportation resource, not a buffer");
                return *r.buffer_index;
            };
            process.spec =
                RefinedTransportSpec{site_of(move.origin), site_of(move.destination), move.carried};
        }
        model.processes.push_back(std::move(process));
    }

    const auto process_count = static_cast<ProcessId>(model.processes.size());
    for (const auto& decl : allocation_decls) {
        if (decl.process >= process_count)
            throw Error(errc::unresolved,
                        "allocation: process id " + std::to_string(decl.process) + " does not exist");
        if (decl.resource >= resource_count)
            throw Error(errc::unresolved,
                        "allocation: resource id " + std::to_string(decl.resource) + " does not exist");
        model.allocations.push_back({decl.process, decl.resource});
    }

    for (std::size_t i = 0; i < operand_decls.size(); ++i) {
        if (!operand_decls[i].net) continue;
        const auto& net = *operand_decls[i].net;
        try {
            model.operand_nets.emplace(static_cast<OperandId>(i),
                                       build_operand_net(static_cast<OperandId>(i), net.places,
                                                         net.transitions, net.arcs));
        } catch (const Error& e) {
            throw Error(e.code(), "operand '" + operand_decls[i].name + "': " + e.message());
        }
    }

    return model;
}

}  // namespace hfgt
