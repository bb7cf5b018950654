#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hfgt/model.hpp"
#include "hfgt/types.hpp"
#include "hfgt/validate.hpp"

namespace hfgt {

// The HFG node: "resource r_v does process p_w". Capabilities are the
// allocations of a valid model, ordered by (process, resource) so that psi
// indices are reproducible.
struct Capability {
    CapabilityId psi = 0;
    ProcessId process = 0;
    ResourceId resource = 0;

    bool operator==(const Capability&) const = default;
};

// Binary |P| x |R| allocation matrix; a bipartite graph between processes
// and resources.
struct SystemConcept {
    std::size_t process_count = 0;
    std::size_t resource_count = 0;
    std::vector<std::pair<ProcessId, ResourceId>> entries;  // sorted (w, v)

    bool operator==(const SystemConcept&) const = default;
};

enum class Sign { positive, negative };

struct TensorEntry {
    OperandId operand = 0;
    BufferId buffer = 0;
    CapabilityId capability = 0;

    auto operator<=>(const TensorEntry&) const = default;
};

// Sparse third-order binary tensor over (operand, buffer, capability).
// The negative tensor records pulls, the positive tensor injections.
struct IncidenceTensor {
    Sign sign = Sign::negative;
    std::size_t operand_count = 0;
    std::size_t buffer_count = 0;
    std::size_t capability_count = 0;
    std::vector<TensorEntry> entries;  // sorted (operand, buffer, capability)

    bool operator==(const IncidenceTensor&) const = default;
};

// Matricized tensor of shape (|L|*|B_S|, |E_S|) with row = y*|L| + i.
struct IncidenceMatrix {
    Sign sign = Sign::negative;
    std::size_t operand_count = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::pair<std::uint32_t, CapabilityId>> entries;  // sorted (row, col)

    bool operator==(const IncidenceMatrix&) const = default;
};

namespace detail {

inline void require_valid(const SystemModel& model) {
    auto report = validate(model);
    if (!report.ok())
        throw Error(errc::invalid_model,
                    "model fails validation with " + std::to_string(report.errors.size()) +
                        " error(s); first: " + report.errors.front().message);
}

}  // namespace detail

// One capability per allocation; precondition: validate() reports no errors.
inline std::vector<Capability> enumerate_capabilities(const SystemModel& model) {
    detail::require_valid(model);
    std::vector<std::pair<ProcessId, ResourceId>> pairs;
    pairs.reserve(model.allocations.size());
    for (const auto& a : model.allocations) pairs.emplace_back(a.process, a.resource);
    std::sort(pairs.begin(), pairs.end());

    std::vector<Capability> capabilities;
    capabilities.reserve(pairs.size());
    for (std::size_t psi = 0; psi < pairs.size(); ++psi)
        capabilities.push_back({static_cast<CapabilityId>(psi), pairs[psi].first, pairs[psi].second});
    return capabilities;
}

inline std::optional<CapabilityId> find_capability(const std::vector<Capability>& capabilities,
                                                   ProcessId process, ResourceId resource) {
    for (const auto& c : capabilities)
        if (c.process == process && c.resource == resource) return c.psi;
    return std::nullopt;
}

inline SystemConcept system_concept_matrix(const SystemModel& model) {
    SystemConcept a_s;
    a_s.process_count = model.processes.size();
    a_s.resource_count = model.resources.size();
    for (const auto& c : enumerate_capabilities(model))
        a_s.entries.emplace_back(c.process, c.resource);
    return a_s;
}

namespace detail {

inline IncidenceTensor incidence_tensor(const SystemModel& model, Sign sign) {
    IncidenceTensor tensor;
    tensor.sign = sign;
    tensor.operand_count = model.operands.size();
    tensor.buffer_count = buffers(model).size();

    const auto capabilities = enumerate_capabilities(model);
    tensor.capability_count = capabilities.size();

    for (const auto& c : capabilities) {
        const auto& process = model.processes[c.process];
        const auto& resource = model.resources[c.resource];
        if (const auto* t = std::get_if<TransformationSpec>(&process.spec)) {
            // Transformation happens at the executing resource's own buffer.
            const BufferId site = *resource.buffer_index;
            const auto& operands = sign == Sign::negative ? t->inputs : t->outputs;
            for (auto i : operands) tensor.entries.push_back({i, site, c.psi});
        } else {
            const auto& move = std::get<RefinedTransportSpec>(process.spec);
            const BufferId y = sign == Sign::negative ? move.origin : move.destination;
            tensor.entries.push_back({move.carried, y, c.psi});
        }
    }

    std::sort(tensor.entries.begin(), tensor.entries.end());
    tensor.entries.erase(std::unique(tensor.entries.begin(), tensor.entries.end()),
                         tensor.entries.end());
    return tensor;
}

}  // namespace detail

// M~rho-: capability psi pulls operand i from buffer y.
inline IncidenceTensor negative_tensor(const SystemModel& model) {
    return detail::incidence_tensor(model, Sign::negative);
}

// M~rho+: capability psi injects operand i into buffer y.
inline IncidenceTensor positive_tensor(const SystemModel& model) {
    return detail::incidence_tensor(model, Sign::positive);
}

inline IncidenceMatrix matricize(const IncidenceTensor& tensor) {
    IncidenceMatrix m;
    m.sign = tensor.sign;
    m.operand_count = tensor.operand_count;
    m.rows = tensor.operand_count * tensor.buffer_count;
    m.cols = tensor.capability_count;
    m.entries.reserve(tensor.entries.size());
    for (const auto& e : tensor.entries)
        m.entries.emplace_back(
            static_cast<std::uint32_t>(e.buffer * tensor.operand_count + e.operand), e.capability);
    std::sort(m.entries.begin(), m.entries.end());
    return m;
}

inline IncidenceTensor dematricize(const IncidenceMatrix& matrix) {
    IncidenceTensor tensor;
    tensor.sign = matrix.sign;
    tensor.operand_count = matrix.operand_count;
    tensor.buffer_count = matrix.operand_count == 0 ? 0 : matrix.rows / matrix.operand_count;
    tensor.capability_count = matrix.cols;
    if (matrix.operand_count == 0) return tensor;
    tensor.entries.reserve(matrix.entries.size());
    for (const auto& [row, psi] : matrix.entries)
        tensor.entries.push_back({static_cast<OperandId>(row % matrix.operand_count),
                                  static_cast<BufferId>(row / matrix.operand_count), psi});
    std::sort(tensor.entries.begin(), tensor.entries.end());
    return tensor;
}

}  // namespace hfgt
