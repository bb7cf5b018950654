#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "hfgt/model.hpp"
#include "hfgt/types.hpp"

namespace hfgt::io {

// System-description file: a JSON document with top-level arrays
// `operands`, `resources`, `processes`, `allocations`. Cross-references are
// by name; dense ids follow array order.

namespace detail {

using json = nlohmann::json;

inline void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                       const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* k : allowed)
            if (item.key() == k) known = true;
        if (!known)
            throw Error(errc::schema, where + ": unknown key '" + item.key() + "'");
    }
}

inline const json& expect(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw Error(errc::schema, where + ": missing required key '" + key + "'");
    return *it;
}

inline std::string expect_string(const json& obj, const char* key, const std::string& where) {
    const auto& v = expect(obj, key, where);
    if (!v.is_string())
        throw Error(errc::schema, where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

inline const json& expect_array(const json& v, const std::string& where) {
    if (!v.is_array())
        throw Error(errc::schema, where + " must be an array");
    return v;
}

class NameTable {
public:
    NameTable(const char* what) : what_(what) {}

    void add(const std::string& name) {
        if (!index_.emplace(name, static_cast<std::uint32_t>(index_.size())).second)
            throw Error(errc::duplicate, std::string("duplicate ") + what_ + " name '" + name + "'");
    }

    std::uint32_t resolve(const std::string& name, const std::string& where) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw Error(errc::unresolved,
                        where + ": unknown " + what_ + " name '" + name + "'");
        return it->second;
    }

private:
    const char* what_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

inline OperandNetDecl parse_net(const json& net, const std::string& where) {
    if (!net.is_object()) throw Error(errc::schema, where + ": 'net' must be an object");
    check_keys(net, {"places", "transitions", "arcs"}, where);
    OperandNetDecl decl;
    for (const auto& p : expect_array(expect(net, "places", where), where + ".places")) {
        if (!p.is_string()) throw Error(errc::schema, where + ": place names must be strings");
        decl.places.push_back(p.get<std::string>());
    }
    for (const auto& t : expect_array(expect(net, "transitions", where), where + ".transitions")) {
        if (!t.is_string()) throw Error(errc::schema, where + ": transition names must be strings");
        decl.transitions.push_back(t.get<std::string>());
    }
    if (auto it = net.find("arcs"); it != net.end()) {
        for (const auto& arc : expect_array(*it, where + ".arcs")) {
            if (!arc.is_object()) throw Error(errc::schema, where + ": arcs must be objects");
            check_keys(arc, {"from", "to", "weight"}, where + ".arcs");
            ArcDecl a;
            a.from = expect_string(arc, "from", where + ".arcs");
            a.to = expect_string(arc, "to", where + ".arcs");
            if (auto w = arc.find("weight"); w != arc.end()) {
                if (!w->is_number_integer())
                    throw Error(errc::schema, where + ": arc weight must be an integer");
                a.weight = w->get<int>();
            }
            decl.arcs.push_back(std::move(a));
        }
    }
    return decl;
}

}  // namespace detail

inline SystemModel parse_system_json(const nlohmann::json& doc) {
    using detail::expect;
    using detail::expect_array;
    using detail::expect_string;

    if (!doc.is_object())
        throw Error(errc::schema, "top level must be a JSON object");
    detail::check_keys(doc, {"operands", "resources", "processes", "allocations"}, "top level");

    std::vector<OperandDecl> operands;
    std::vector<ResourceDecl> resources;
    std::vector<ProcessDecl> processes;
    std::vector<AllocationDecl> allocations;

    detail::NameTable operand_names("operand");
    detail::NameTable resource_names("resource");
    detail::NameTable process_names("process");

    if (auto it = doc.find("operands"); it != doc.end()) {
        for (const auto& o : expect_array(*it, "'operands'")) {
            if (!o.is_object()) throw Error(errc::schema, "operand entries must be objects");
            detail::check_keys(o, {"name", "kind", "net"}, "operand");
            OperandDecl decl;
            decl.name = expect_string(o, "name", "operand");
            const std::string where = "operand '" + decl.name + "'";
            auto kind = expect_string(o, "kind", where);
            auto parsed = operand_kind_from(kind);
            if (!parsed) throw Error(errc::kind, where + ": unknown operand kind '" + kind + "'");
            decl.kind = *parsed;
            if (auto net = o.find("net"); net != o.end())
                decl.net = detail::parse_net(*net, where);
            operand_names.add(decl.name);
            operands.push_back(std::move(decl));
        }
    }

    if (auto it = doc.find("resources"); it != doc.end()) {
        for (const auto& r : expect_array(*it, "'resources'")) {
            if (!r.is_object()) throw Error(errc::schema, "resource entries must be objects");
            detail::check_keys(r, {"name", "kind"}, "resource");
            ResourceDecl decl;
            decl.name = expect_string(r, "name", "resource");
            const std::string where = "resource '" + decl.name + "'";
            auto kind = expect_string(r, "kind", where);
            auto parsed = resource_kind_from(kind);
            if (!parsed) throw Error(errc::kind, where + ": unknown resource kind '" + kind + "'");
            decl.kind = *parsed;
            resource_names.add(decl.name);
            resources.push_back(std::move(decl));
        }
    }

    if (auto it = doc.find("processes"); it != doc.end()) {
        for (const auto& p : expect_array(*it, "'processes'")) {
            if (!p.is_object()) throw Error(errc::schema, "process entries must be objects");
            ProcessDecl decl;
            decl.name = expect_string(p, "name", "process");
            const std::string where = "process '" + decl.name + "'";
            auto variant = expect_string(p, "variant", where);
            if (variant == "transformation") {
                detail::check_keys(p, {"name", "variant", "inputs", "outputs"}, where);
                TransformationDecl t;
                for (const auto& name : expect_array(expect(p, "inputs", where), where + ".inputs")) {
                    if (!name.is_string())
                        throw Error(errc::schema, where + ": inputs must be operand names");
                    t.inputs.push_back(operand_names.resolve(name.get<std::string>(), where));
                }
                for (const auto& name : expect_array(expect(p, "outputs", where), where + ".outputs")) {
                    if (!name.is_string())
                        throw Error(errc::schema, where + ": outputs must be operand names");
                    t.outputs.push_back(operand_names.resolve(name.get<std::string>(), where));
                }
                decl.spec = std::move(t);
            } else if (variant == "transport") {
                detail::check_keys(p, {"name", "variant", "origin", "destination", "carried"}, where);
                TransportDecl t;
                t.origin = resource_names.resolve(expect_string(p, "origin", where), where);
                t.destination = resource_names.resolve(expect_string(p, "destination", where), where);
                t.carried = operand_names.resolve(expect_string(p, "carried", where), where);
                decl.spec = std::move(t);
            } else {
                throw Error(errc::variant, where + ": unknown process variant '" + variant + "'");
            }
            process_names.add(decl.name);
            processes.push_back(std::move(decl));
        }
    }

    if (auto it = doc.find("allocations"); it != doc.end()) {
        for (const auto& a : expect_array(*it, "'allocations'")) {
            if (!a.is_object()) throw Error(errc::schema, "allocation entries must be objects");
            detail::check_keys(a, {"process", "resource"}, "allocation");
            AllocationDecl decl;
            decl.process = process_names.resolve(expect_string(a, "process", "allocation"), "allocation");
            decl.resource = resource_names.resolve(expect_string(a, "resource", "allocation"), "allocation");
            allocations.push_back(decl);
        }
    }

    return build_model(operands, resources, processes, allocations);
}

inline SystemModel parse_system_text(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(errc::syntax, e.what());
    }
    return parse_system_json(doc);
}

inline SystemModel parse_system_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(errc::io, "cannot open '" + path.string() + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_system_text(text);
}

// Inverse of parse_system_json, with canonical ordering throughout; parsing
// the result reproduces the model exactly.
inline nlohmann::json serialize_model(const SystemModel& model) {
    nlohmann::json doc = nlohmann::json::object();

    auto& operands = doc["operands"] = nlohmann::json::array();
    for (const auto& op : model.operands) {
        nlohmann::json o{{"name", op.name}, {"kind", std::string(to_string(op.kind))}};
        if (auto it = model.operand_nets.find(op.id); it != model.operand_nets.end()) {
            const auto& net = it->second;
            nlohmann::json arcs = nlohmann::json::array();
            for (std::size_t e = 0; e < net.transitions.size(); ++e) {
                for (std::size_t s = 0; s < net.places.size(); ++s)
                    if (net.neg_arcs(s, e) > 0)
                        arcs.push_back({{"from", net.places[s]},
                                        {"to", net.transitions[e]},
                                        {"weight", net.neg_arcs(s, e)}});
                for (std::size_t s = 0; s < net.places.size(); ++s)
                    if (net.pos_arcs(s, e) > 0)
                        arcs.push_back({{"from", net.transitions[e]},
                                        {"to", net.places[s]},
                                        {"weight", net.pos_arcs(s, e)}});
            }
            o["net"] = {{"places", net.places}, {"transitions", net.transitions}, {"arcs", arcs}};
        }
        operands.push_back(std::move(o));
    }

    auto& resources = doc["resources"] = nlohmann::json::array();
    for (const auto& r : model.resources)
        resources.push_back({{"name", r.name}, {"kind", std::string(to_string(r.kind))}});

    const auto buffer_table = buffers(model);
    auto buffer_resource_name = [&](BufferId y) { return model.resources[buffer_table[y].resource].name; };

    auto& processes = doc["processes"] = nlohmann::json::array();
    for (const auto& p : model.processes) {
        nlohmann::json o{{"name", p.name}};
        if (const auto* t = std::get_if<TransformationSpec>(&p.spec)) {
            o["variant"] = "transformation";
            auto names_of = [&](const std::vector<OperandId>& ids) {
                std::vector<std::string> names;
                for (auto id : ids) names.push_back(model.operands[id].name);
                return names;
            };
            o["inputs"] = names_of(t->inputs);
            o["outputs"] = names_of(t->outputs);
        } else {
            const auto& move = std::get<RefinedTransportSpec>(p.spec);
            o["variant"] = "transport";
            o["origin"] = buffer_resource_name(move.origin);
            o["destination"] = buffer_resource_name(move.destination);
            o["carried"] = model.operands[move.carried].name;
        }
        processes.push_back(std::move(o));
    }

    auto& allocations = doc["allocations"] = nlohmann::json::array();
    for (const auto& a : model.allocations)
        allocations.push_back({{"process", model.processes[a.process].name},
                               {"resource", model.resources[a.resource].name}});

    return doc;
}

}  // namespace hfgt::io
