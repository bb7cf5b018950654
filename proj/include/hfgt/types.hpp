#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hfgt {

// Dense, contiguous indices. Operands index L, resources index R,
// processes index P, buffers index B_S = M u B, capabilities index E_S.
using OperandId = std::uint32_t;
using ResourceId = std::uint32_t;
using ProcessId = std::uint32_t;
using BufferId = std::uint32_t;
using CapabilityId = std::uint32_t;

enum class OperandKind { matter, energy, living_organism, information, money };

enum class ResourceKind { transformation, independent_buffer, transportation };

constexpr std::string_view to_string(OperandKind k) {
    switch (k) {
        case OperandKind::matter: return "matter";
        case OperandKind::energy: return "energy";
        case OperandKind::living_organism: return "living-organism";
        case OperandKind::information: return "information";
        case OperandKind::money: return "money";
    }
    return "?";
}

constexpr std::string_view to_string(ResourceKind k) {
    switch (k) {
        case ResourceKind::transformation: return "transformation";
        case ResourceKind::independent_buffer: return "independent-buffer";
        case ResourceKind::transportation: return "transportation";
    }
    return "?";
}

inline std::optional<OperandKind> operand_kind_from(std::string_view s) {
    if (s == "matter") return OperandKind::matter;
    if (s == "energy") return OperandKind::energy;
    if (s == "living-organism") return OperandKind::living_organism;
    if (s == "information") return OperandKind::information;
    if (s == "money") return OperandKind::money;
    return std::nullopt;
}

inline std::optional<ResourceKind> resource_kind_from(std::string_view s) {
    if (s == "transformation") return ResourceKind::transformation;
    if (s == "independent-buffer") return ResourceKind::independent_buffer;
    if (s == "transportation") return ResourceKind::transportation;
    return std::nullopt;
}

// Stable machine-readable diagnostic codes. Tests and scripts assert on
// these, never on message prose.
namespace errc {
inline constexpr const char* syntax = "E_SYNTAX";
inline constexpr const char* schema = "E_SCHEMA";
inline constexpr const char* unresolved = "E_UNRESOLVED";
inline constexpr const char* duplicate = "E_DUPLICATE";
inline constexpr const char* kind = "E_KIND";
inline constexpr const char* variant = "E_VARIANT";
inline constexpr const char* not_a_buffer = "E_NOT_A_BUFFER";
inline constexpr const char* weight = "E_WEIGHT";
inline constexpr const char* isolated = "E_ISOLATED";
inline constexpr const char* dimension = "E_DIMENSION";
inline constexpr const char* disabled = "E_DISABLED";
inline constexpr const char* range = "E_RANGE";
inline constexpr const char* invalid_model = "E_INVALID_MODEL";
inline constexpr const char* io = "E_IO";
}  // namespace errc

class Error : public std::runtime_error {
public:
    Error(std::string code, std::string message)
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          message_(std::move(message)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string code_;
    std::string message_;
};

}  // namespace hfgt
