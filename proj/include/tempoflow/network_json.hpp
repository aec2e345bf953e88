#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "tempoflow/error.hpp"
#include "tempoflow/network.hpp"

// Canonical JSON network format:
//   {"nodes":["s","a","d"],"source":"s","sink":"d","tau":1,
//    "edges":[{"from":"s","to":"a","capacity":[{"from_time":0,"value":5}]}]}
// An edge may carry an optional integer "length" overriding tau.

namespace tempoflow {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline const nlohmann::json& require(const nlohmann::json& obj, const char* key, const std::string& where)
{
    if (!obj.is_object() || !obj.contains(key))
        throw Error(ErrorCode::ParseError, where + ": missing field '" + key + "'");
    return obj.at(key);
}

inline std::int64_t require_int(const nlohmann::json& obj, const char* key, const std::string& where)
{
    const auto& v = require(obj, key, where);
    if (v.is_string() && v.get<std::string>() == "inf")
        throw Error(ErrorCode::ParseError, where + "." + key + ": \"inf\" is not allowed in input");
    if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, where + "." + key + ": expected an integer");
    if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
        throw Error(ErrorCode::ArithmeticOverflow, where + "." + key + ": integer exceeds 64-bit range");
    return v.get<std::int64_t>();
}

inline std::string require_string(const nlohmann::json& obj, const char* key, const std::string& where)
{
    const auto& v = require(obj, key, where);
    if (!v.is_string())
        throw Error(ErrorCode::ParseError, where + "." + key + ": expected a string");
    return v.get<std::string>();
}

}  // namespace detail

inline RawNetwork raw_network_from_json(const nlohmann::json& doc)
{
    RawNetwork raw;
    const auto& nodes = detail::require(doc, "nodes", "network");
    if (!nodes.is_array())
        throw Error(ErrorCode::ParseError, "network.nodes: expected an array");
    for (const auto& n : nodes) {
        if (!n.is_string())
            throw Error(ErrorCode::ParseError, "network.nodes: expected string identifiers");
        raw.nodes.push_back(n.get<std::string>());
    }
    raw.source = detail::require_string(doc, "source", "network");
    raw.sink = detail::require_string(doc, "sink", "network");
    raw.tau = detail::require_int(doc, "tau", "network");
    const auto& edges = detail::require(doc, "edges", "network");
    if (!edges.is_array())
        throw Error(ErrorCode::ParseError, "network.edges: expected an array");
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string where = "network.edges[" + std::to_string(k) + "]";
        const auto& e = edges[k];
        RawEdge re;
        re.from = detail::require_string(e, "from", where);
        re.to = detail::require_string(e, "to", where);
        if (e.contains("length"))
            re.length = detail::require_int(e, "length", where);
        const auto& cap = detail::require(e, "capacity", where);
        if (!cap.is_array())
            throw Error(ErrorCode::ParseError, where + ".capacity: expected an array of pieces");
        for (std::size_t p = 0; p < cap.size(); ++p) {
            const std::string pw = where + ".capacity[" + std::to_string(p) + "]";
            re.capacity.push_back(Piece{detail::require_int(cap[p], "from_time", pw),
                                        detail::require_int(cap[p], "value", pw)});
        }
        raw.edges.push_back(std::move(re));
    }
    return raw;
}

inline TemporalNetwork parse_network(const std::string& text, std::vector<std::string>* warnings = nullptr)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return validate_network(raw_network_from_json(doc), warnings);
}

inline TemporalNetwork load_network(const std::string& path, std::vector<std::string>* warnings = nullptr)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str(), warnings);
}

inline ordered_json to_json(const TemporalNetwork& net)
{
    const RawNetwork raw = net.to_raw();
    ordered_json doc;
    doc["nodes"] = raw.nodes;
    doc["source"] = raw.source;
    doc["sink"] = raw.sink;
    doc["tau"] = raw.tau;
    doc["edges"] = ordered_json::array();
    for (const auto& re : raw.edges) {
        ordered_json e;
        e["from"] = re.from;
        e["to"] = re.to;
        e["capacity"] = ordered_json::array();
        for (const auto& p : re.capacity)
            e["capacity"].push_back(ordered_json{{"from_time", p.from_time}, {"value", p.value}});
        if (re.length)
            e["length"] = *re.length;
        doc["edges"].push_back(std::move(e));
    }
    return doc;
}

inline std::string serialize_network(const TemporalNetwork& net) { return to_json(net).dump(); }

}  // namespace tempoflow
