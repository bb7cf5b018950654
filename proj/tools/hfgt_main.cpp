// hfgt: build hetero-functional graphs from system-description files.
//
// Exit codes: 0 success, 1 model fails validation, 2 file or usage error.

#include <filesystem>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hfgt/hfgt.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidModel = 1;
constexpr int kExitFileError = 2;

void print_findings(const hfgt::ValidationReport& report, std::ostream& out) {
    for (const auto& f : report.errors)
        out << hfgt::rule_code(f.rule) << " error: " << f.message << "\n";
    for (const auto& f : report.warnings)
        out << hfgt::rule_code(f.rule) << " warning: " << f.message << "\n";
}

// Parses and validates; returns the model only if it is error-free.
hfgt::SystemModel load_valid_model(const std::string& path, int& exit_code) {
    auto model = hfgt::io::parse_system_file(path);
    auto report = hfgt::validate(model);
    if (!report.ok()) {
        print_findings(report, std::cerr);
        exit_code = kExitInvalidModel;
        return {};
    }
    exit_code = kExitOk;
    return model;
}

int run_validate(const std::string& path) {
    auto model = hfgt::io::parse_system_file(path);
    auto report = hfgt::validate(model);
    print_findings(report, std::cout);
    if (report.ok()) {
        std::cout << "model is valid (" << report.warnings.size() << " warning(s))\n";
        return kExitOk;
    }
    std::cout << "model is invalid (" << report.errors.size() << " error(s), "
              << report.warnings.size() << " warning(s))\n";
    return kExitInvalidModel;
}

int run_build(const std::string& path, const std::string& out_dir) {
    int code = kExitOk;
    auto model = load_valid_model(path, code);
    if (code != kExitOk) return code;
    for (const auto& file : hfgt::io::write_build_outputs(model, out_dir))
        std::cout << "wrote " << file.string() << "\n";
    return kExitOk;
}

int run_export_dot(const std::string& path, const std::string& which, const std::string& out_file) {
    int code = kExitOk;
    auto model = load_valid_model(path, code);
    if (code != kExitOk) return code;

    std::string dot;
    if (which == "hfg") {
        const auto capabilities = hfgt::enumerate_capabilities(model);
        const auto a_rho =
            hfgt::hfg_adjacency_tensor_path(hfgt::positive_tensor(model), hfgt::negative_tensor(model));
        dot = hfgt::io::dot_hfg(model, capabilities, a_rho);
    } else {
        const auto a_bs =
            hfgt::formal_graph_projection(hfgt::positive_tensor(model), hfgt::negative_tensor(model));
        dot = hfgt::io::dot_formal(model, a_bs);
    }
    hfgt::io::write_file_atomic(out_file, dot);
    std::cout << "wrote " << out_file << "\n";
    return kExitOk;
}

int run_stats(const std::string& path) {
    int code = kExitOk;
    auto model = load_valid_model(path, code);
    if (code != kExitOk) return code;

    std::size_t transformation = 0, independent = 0, transportation = 0;
    for (const auto& r : model.resources) {
        switch (r.kind) {
            case hfgt::ResourceKind::transformation: ++transformation; break;
            case hfgt::ResourceKind::independent_buffer: ++independent; break;
            case hfgt::ResourceKind::transportation: ++transportation; break;
        }
    }

    const auto pos = hfgt::positive_tensor(model);
    const auto neg = hfgt::negative_tensor(model);
    const auto a_rho = hfgt::hfg_adjacency_tensor_path(pos, neg);
    const auto a_bs = hfgt::formal_graph_projection(pos, neg);
    const auto hfg_stats = hfgt::structure_stats(a_rho);
    const auto formal_stats = hfgt::structure_stats(a_bs);

    std::cout << "operands: " << model.operands.size() << "\n"
              << "resources: " << model.resources.size() << "\n"
              << "transformation resources: " << transformation << "\n"
              << "independent buffers: " << independent << "\n"
              << "transportation resources: " << transportation << "\n"
              << "buffers: " << hfgt::buffers(model).size() << "\n"
              << "processes: " << model.processes.size() << "\n"
              << "capabilities: " << hfg_stats.node_count << "\n"
              << "hfg edges: " << hfg_stats.edge_count << "\n"
              << "hfg weak components: " << hfg_stats.weak_components << "\n"
              << "hfg strong components: " << hfg_stats.strong_components << "\n"
              << "formal edges: " << formal_stats.edge_count << "\n"
              << "formal weak components: " << formal_stats.weak_components << "\n"
              << "formal strong components: " << formal_stats.strong_components << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hetero-functional graph construction and analysis"};
    app.require_subcommand(1);

    std::string path;
    std::string out_dir;
    std::string which;
    std::string out_file;

    auto* validate_cmd = app.add_subcommand("validate", "check a system-description file");
    validate_cmd->add_option("file", path, "system-description JSON file")->required();

    auto* build_cmd = app.add_subcommand("build", "write capability, tensor and adjacency files");
    build_cmd->add_option("file", path, "system-description JSON file")->required();
    build_cmd->add_option("--out", out_dir, "output directory")->required();

    auto* dot_cmd = app.add_subcommand("export-dot", "render a graph as a DOT digraph");
    dot_cmd->add_option("file", path, "system-description JSON file")->required();
    dot_cmd->add_option("--which", which, "hfg or formal")
        ->required()
        ->check(CLI::IsMember({"hfg", "formal"}));
    dot_cmd->add_option("--out", out_file, "output DOT file")->required();

    auto* stats_cmd = app.add_subcommand("stats", "print structural statistics");
    stats_cmd->add_option("file", path, "system-description JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitFileError;
    }

    try {
        if (validate_cmd->parsed()) return run_validate(path);
        if (build_cmd->parsed()) return run_build(path, out_dir);
        if (dot_cmd->parsed()) return run_export_dot(path, which, out_file);
        if (stats_cmd->parsed()) return run_stats(path);
    } catch (const hfgt::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitFileError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFileError;
    }
    return kExitFileError;
}
