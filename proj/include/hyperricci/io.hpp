#pragma once

#include "hyperricci/hypergraph.hpp"

#include <string>

namespace hyperricci {

struct ParseError : Error {
    using Error::Error;
};

/// Read a hypergraph document:
///
///   {
///     "version": 1,
///     "vertices": [{"id": "x", "label": "...", "weight": "1/2"}, ...],
///     "edges": [{"id": "e1", "tail": ["x"], "head": ["y"], "weight": "2"}, ...]
///   }
///
/// Weights are strings holding exact rationals ("p/q" or an integer);
/// numeric literals are rejected so no float can sneak in. Edge ids are
/// optional and default to "e1", "e2", ... in document order. The parsed
/// hypergraph is validated; any violation raises ParseError.
DirectedHypergraph parse_document(const std::string& text);

/// Inverse of parse_document: parse(serialize(h)) == h, including exact
/// weights. Unit weights and empty labels are omitted.
std::string serialize_document(const DirectedHypergraph& h);

} // namespace hyperricci
