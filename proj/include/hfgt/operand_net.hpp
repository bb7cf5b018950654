#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "hfgt/grid.hpp"
#include "hfgt/types.hpp"

namespace hfgt {

// Elementary Petri net tracking one operand's state. Places are states,
// transitions are state changes; pos_arcs/neg_arcs are the |S| x |E|
// incidence matrices (transition -> place and place -> transition weights).
struct OperandNet {
    OperandId operand_id = 0;
    std::vector<std::string> places;
    std::vector<std::string> transitions;
    Grid<int> pos_arcs;
    Grid<int> neg_arcs;

    bool operator==(const OperandNet&) const = default;
};

struct Marking {
    std::vector<int> tokens;

    bool operator==(const Marking&) const = default;
};

// Arc endpoints are named; direction follows from which endpoint is a place.
struct ArcDecl {
    std::string from;
    std::string to;
    int weight = 1;

    bool operator==(const ArcDecl&) const = default;
};

struct NetIncidence {
    Grid<int> positive;  // M+
    Grid<int> negative;  // M-
    Grid<int> delta;     // M = M+ - M-
};

namespace detail {

inline void check_no_isolated_transition(const OperandNet& net) {
    for (std::size_t e = 0; e < net.transitions.size(); ++e) {
        bool touched = false;
        for (std::size_t s = 0; s < net.places.size() && !touched; ++s)
            touched = net.pos_arcs(s, e) != 0 || net.neg_arcs(s, e) != 0;
        if (!touched)
            throw Error(errc::isolated, "isolated transition '" + net.transitions[e] + "'");
    }
}

inline std::unordered_map<std::string, std::size_t> index_names(
    const std::vector<std::string>& names, const char* what) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!index.emplace(names[i], i).second)
            throw Error(errc::duplicate, std::string("duplicate ") + what + " name '" + names[i] + "'");
    }
    return index;
}

}  // namespace detail

inline OperandNet build_operand_net(OperandId operand_id,
                                    std::vector<std::string> places,
                                    std::vector<std::string> transitions,
                                    const std::vector<ArcDecl>& arcs) {
    auto place_index = detail::index_names(places, "place");
    auto transition_index = detail::index_names(transitions, "transition");
    for (const auto& p : places) {
        if (transition_index.contains(p))
            throw Error(errc::duplicate, "name '" + p + "' used for both a place and a transition");
    }

    OperandNet net;
    net.operand_id = operand_id;
    net.places = std::move(places);
    net.transitions = std::move(transitions);
    net.pos_arcs = Grid<int>(net.places.size(), net.transitions.size());
    net.neg_arcs = Grid<int>(net.places.size(), net.transitions.size());

    for (const auto& arc : arcs) {
        if (arc.weight <= 0)
            throw Error(errc::weight, "arc '" + arc.from + "' -> '" + arc.to +
                                          "' has non-positive weight " + std::to_string(arc.weight));
        auto from_place = place_index.find(arc.from);
        auto to_transition = transition_index.find(arc.to);
        if (from_place != place_index.end() && to_transition != transition_index.end()) {
            net.neg_arcs(from_place->second, to_transition->second) += arc.weight;
            continue;
        }
        auto from_transition = transition_index.find(arc.from);
        auto to_place = place_index.find(arc.to);
        if (from_transition != transition_index.end() && to_place != place_index.end()) {
            net.pos_arcs(to_place->second, from_transition->second) += arc.weight;
            continue;
        }
        throw Error(errc::unresolved, "arc '" + arc.from + "' -> '" + arc.to +
                                          "' does not connect a place and a transition");
    }

    detail::check_no_isolated_transition(net);
    return net;
}

// Rebuild directly from incidence matrices (the inverse of incidence()).
inline OperandNet build_operand_net(OperandId operand_id,
                                    std::vector<std::string> places,
                                    std::vector<std::string> transitions,
                                    Grid<int> pos_arcs, Grid<int> neg_arcs) {
    detail::index_names(places, "place");
    detail::index_names(transitions, "transition");
    if (pos_arcs.rows() != places.size() || pos_arcs.cols() != transitions.size() ||
        neg_arcs.rows() != places.size() || neg_arcs.cols() != transitions.size())
        throw Error(errc::dimension, "incidence matrix shape does not match place/transition counts");
    for (std::size_t s = 0; s < places.size(); ++s)
        for (std::size_t e = 0; e < transitions.size(); ++e)
            if (pos_arcs(s, e) < 0 || neg_arcs(s, e) < 0)
                throw Error(errc::weight, "incidence matrices must be nonnegative");

    OperandNet net{operand_id, std::move(places), std::move(transitions),
                   std::move(pos_arcs), std::move(neg_arcs)};
    detail::check_no_isolated_transition(net);
    return net;
}

// Returns (M+, M-, M). M is recomputed, never stored.
inline NetIncidence incidence(const OperandNet& net) {
    NetIncidence inc{net.pos_arcs, net.neg_arcs,
                     Grid<int>(net.places.size(), net.transitions.size())};
    for (std::size_t s = 0; s < net.places.size(); ++s)
        for (std::size_t e = 0; e < net.transitions.size(); ++e)
            inc.delta(s, e) = net.pos_arcs(s, e) - net.neg_arcs(s, e);
    return inc;
}

inline bool is_enabled(const OperandNet& net, const Marking& marking, std::uint32_t transition) {
    if (marking.tokens.size() != net.places.size())
        throw Error(errc::dimension, "marking length does not match place count");
    if (transition >= net.transitions.size())
        throw Error(errc::range, "transition index " + std::to_string(transition) + " out of range");
    for (std::size_t s = 0; s < net.places.size(); ++s)
        if (marking.tokens[s] < net.neg_arcs(s, transition)) return false;
    return true;
}

inline std::vector<std::uint32_t> enabled(const OperandNet& net, const Marking& marking) {
    std::vector<std::uint32_t> result;
    for (std::uint32_t e = 0; e < net.transitions.size(); ++e)
        if (is_enabled(net, marking, e)) result.push_back(e);
    return result;
}

inline Marking fire(const OperandNet& net, const Marking& marking, std::uint32_t transition) {
    if (!is_enabled(net, marking, transition))
        throw Error(errc::disabled, "transition '" + net.transitions[transition] +
                                        "' is not enabled at this marking");
    Marking next = marking;
    for (std::size_t s = 0; s < net.places.size(); ++s)
        next.tokens[s] += net.pos_arcs(s, transition) - net.neg_arcs(s, transition);
    return next;
}

}  // namespace hfgt
