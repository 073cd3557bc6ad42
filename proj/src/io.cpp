#include "hyperricci/io.hpp"

#include <json.hpp>

namespace hyperricci {

namespace {

using json = nlohmann::ordered_json;

Rational parse_weight(const json& node, const std::string& where) {
    if (!node.is_string()) {
        throw ParseError(where + ": weight must be an exact rational string "
                                 "like \"2\" or \"1/3\" (floats are rejected)");
    }
    try {
        return parse_rational(node.get<std::string>());
    } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::vector<VertexId> parse_side(const json& node, const std::string& where) {
    if (!node.is_array()) {
        throw ParseError(where + " must be an array of vertex ids");
    }
    std::vector<VertexId> side;
    for (const json& item : node) {
        if (!item.is_string()) {
            throw ParseError(where + " entries must be vertex id strings");
        }
        side.push_back({item.get<std::string>()});
    }
    return side;
}

} // namespace

DirectedHypergraph parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("syntax error: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    if (!doc.contains("version") || !doc["version"].is_number_integer() ||
        doc["version"].get<int>() != 1) {
        throw ParseError("document version must be the integer 1");
    }

    std::vector<Vertex> vertices;
    for (const json& vnode : doc.value("vertices", json::array())) {
        if (!vnode.is_object() || !vnode.contains("id") || !vnode["id"].is_string()) {
            throw ParseError("each vertex needs a string \"id\"");
        }
        Vertex v;
        v.id = {vnode["id"].get<std::string>()};
        if (vnode.contains("label")) {
            if (!vnode["label"].is_string()) {
                throw ParseError("vertex '" + v.id.value + "': label must be a string");
            }
            v.label = vnode["label"].get<std::string>();
        }
        if (vnode.contains("weight")) {
            v.weight = parse_weight(vnode["weight"], "vertex '" + v.id.value + "'");
        }
        vertices.push_back(std::move(v));
    }

    std::vector<Hyperedge> edges;
    int position = 0;
    for (const json& enode : doc.value("edges", json::array())) {
        ++position;
        if (!enode.is_object()) throw ParseError("each edge must be an object");
        Hyperedge e;
        if (enode.contains("id")) {
            if (!enode["id"].is_string()) {
                throw ParseError("edge #" + std::to_string(position) +
                                 ": id must be a string");
            }
            e.id = enode["id"].get<std::string>();
        } else {
            e.id = "e" + std::to_string(position);
        }
        if (!enode.contains("tail") || !enode.contains("head")) {
            throw ParseError("edge '" + e.id + "' needs \"tail\" and \"head\" arrays");
        }
        e.tail = parse_side(enode["tail"], "edge '" + e.id + "' tail");
        e.head = parse_side(enode["head"], "edge '" + e.id + "' head");
        if (enode.contains("weight")) {
            e.weight = parse_weight(enode["weight"], "edge '" + e.id + "'");
        }
        edges.push_back(std::move(e));
    }

    DirectedHypergraph h(std::move(vertices), std::move(edges));
    const std::vector<Violation> violations = validate(h);
    if (!violations.empty()) {
        std::string message = "invalid hypergraph:";
        for (const Violation& v : violations) {
            message += "\n  " + v.subject + ": " + v.detail;
        }
        throw ParseError(message);
    }
    return h;
}

std::string serialize_document(const DirectedHypergraph& h) {
    json doc;
    doc["version"] = 1;
    doc["vertices"] = json::array();
    for (const Vertex& v : h.vertices()) {
        json vnode;
        vnode["id"] = v.id.value;
        if (!v.label.empty()) vnode["label"] = v.label;
        if (v.weight != 1) vnode["weight"] = format_rational(v.weight);
        doc["vertices"].push_back(std::move(vnode));
    }
    doc["edges"] = json::array();
    for (const Hyperedge& e : h.edges()) {
        json enode;
        enode["id"] = e.id;
        enode["tail"] = json::array();
        for (const VertexId& v : e.tail) enode["tail"].push_back(v.value);
        enode["head"] = json::array();
        for (const VertexId& v : e.head) enode["head"].push_back(v.value);
        if (e.weight != 1) enode["weight"] = format_rational(e.weight);
        doc["edges"].push_back(std::move(enode));
    }
    return doc.dump(2) + "\n";
}

} // namespace hyperricci
