#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hfgt/adjacency.hpp"
#include "hfgt/incidence.hpp"
#include "hfgt/model.hpp"
#include "hfgt/types.hpp"

namespace hfgt::io {

// All exports are deterministic byte-for-byte: entries are pre-sorted, line
// endings are '\n', and nothing environment-dependent (timestamps, locales)
// is written. Files are written to a temp name and renamed into place.

inline void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(errc::io, "cannot write '" + tmp.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(errc::io, "short write to '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

// Matrix Market coordinate/pattern with 1-based indices.
inline std::string matrix_market_pattern(std::size_t rows, std::size_t cols,
                                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& entries) {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern general\n";
    out << rows << " " << cols << " " << entries.size() << "\n";
    for (const auto& [r, c] : entries) out << r + 1 << " " << c + 1 << "\n";
    return out.str();
}

struct PatternMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;

    bool operator==(const PatternMatrix&) const = default;
};

inline PatternMatrix read_matrix_market_pattern(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw Error(errc::syntax, "missing MatrixMarket header");
    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (object != "matrix" || format != "coordinate" || field != "pattern" || symmetry != "general")
        throw Error(errc::schema, "unsupported MatrixMarket flavor: " + line);

    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '%') break;
    }
    PatternMatrix m;
    std::size_t nnz = 0;
    {
        std::istringstream sizes(line);
        if (!(sizes >> m.rows >> m.cols >> nnz))
            throw Error(errc::syntax, "malformed size line: " + line);
    }
    for (std::size_t k = 0; k < nnz; ++k) {
        long r = 0, c = 0;
        if (!(in >> r >> c)) throw Error(errc::syntax, "truncated entry list");
        if (r < 1 || c < 1 || static_cast<std::size_t>(r) > m.rows ||
            static_cast<std::size_t>(c) > m.cols)
            throw Error(errc::range, "entry out of bounds");
        m.entries.emplace_back(static_cast<std::uint32_t>(r - 1), static_cast<std::uint32_t>(c - 1));
    }
    return m;
}

inline PatternMatrix read_matrix_market_pattern(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io, "cannot open '" + path.string() + "'");
    return read_matrix_market_pattern(in);
}

// Tensor coordinate list: one 0-based "i y psi" triple per line.
inline std::string tensor_coo(const IncidenceTensor& tensor) {
    std::ostringstream out;
    for (const auto& e : tensor.entries)
        out << e.operand << " " << e.buffer << " " << e.capability << "\n";
    return out.str();
}

inline std::string capabilities_tsv(const SystemModel& model,
                                    const std::vector<Capability>& capabilities) {
    std::ostringstream out;
    out << "psi\tprocess\tresource\n";
    for (const auto& c : capabilities)
        out << c.psi << "\t" << model.processes[c.process].name << "\t"
            << model.resources[c.resource].name << "\n";
    return out.str();
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

}  // namespace detail

// One node per capability labeled "resource: process", one directed edge
// per A_rho entry.
inline std::string dot_hfg(const SystemModel& model, const std::vector<Capability>& capabilities,
                           const HfgAdjacency& a_rho) {
    std::ostringstream out;
    out << "digraph hfg {\n";
    for (const auto& c : capabilities)
        out << "  " << c.psi << " [label=\""
            << detail::dot_escape(model.resources[c.resource].name) << ": "
            << detail::dot_escape(model.processes[c.process].name) << "\"];\n";
    for (const auto& e : a_rho.entries) out << "  " << e.from << " -> " << e.to << ";\n";
    out << "}\n";
    return out.str();
}

// One node per buffer, one directed edge per A_BS entry.
inline std::string dot_formal(const SystemModel& model, const FormalGraphAdjacency& a_bs) {
    const auto buffer_table = buffers(model);
    std::ostringstream out;
    out << "digraph formal {\n";
    for (const auto& site : buffer_table)
        out << "  " << site.index << " [label=\""
            << detail::dot_escape(model.resources[site.resource].name) << "\"];\n";
    for (const auto& [y1, y2] : a_bs.entries) out << "  " << y1 << " -> " << y2 << ";\n";
    out << "}\n";
    return out.str();
}

// The full construction pipeline behind `hfgt build`: writes
// capabilities.tsv, a_s.mtx, m_pos.coo, m_neg.coo, m_pos.mtx, m_neg.mtx,
// a_rho.mtx and a_bs.mtx into out_dir.
inline std::vector<std::filesystem::path> write_build_outputs(const SystemModel& model,
                                                              const std::filesystem::path& out_dir) {
    const auto capabilities = enumerate_capabilities(model);
    const auto a_s = system_concept_matrix(model);
    const auto neg = negative_tensor(model);
    const auto pos = positive_tensor(model);
    const auto neg_m = matricize(neg);
    const auto pos_m = matricize(pos);
    const auto a_rho = hfg_adjacency_tensor_path(pos, neg);
    const auto a_bs = formal_graph_projection(pos, neg);

    std::filesystem::create_directories(out_dir);

    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back("capabilities.tsv", capabilities_tsv(model, capabilities));
    files.emplace_back("a_s.mtx",
                       matrix_market_pattern(a_s.process_count, a_s.resource_count, a_s.entries));
    files.emplace_back("m_neg.coo", tensor_coo(neg));
    files.emplace_back("m_pos.coo", tensor_coo(pos));
    files.emplace_back("m_neg.mtx", matrix_market_pattern(neg_m.rows, neg_m.cols, neg_m.entries));
    files.emplace_back("m_pos.mtx", matrix_market_pattern(pos_m.rows, pos_m.cols, pos_m.entries));
    files.emplace_back("a_rho.mtx", matrix_market_pattern(a_rho.capability_count,
                                                          a_rho.capability_count,
                                                          a_rho.boolean_entries()));
    files.emplace_back("a_bs.mtx",
                       matrix_market_pattern(a_bs.buffer_count, a_bs.buffer_count, a_bs.entries));

    std::vector<std::filesystem::path> written;
    for (const auto& [name, content] : files) {
        auto path = out_dir / name;
        write_file_atomic(path, content);
        written.push_back(std::move(path));
    }
    return written;
}

}  // namespace hfgt::io
