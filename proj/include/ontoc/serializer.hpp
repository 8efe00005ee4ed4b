#ifndef ONTOC_SERIALIZER_HPP
#define ONTOC_SERIALIZER_HPP

#include <stdexcept>
#include <string>

#include "ontoc/graph.hpp"

namespace ontoc {

struct TurtleParseError : std::runtime_error {
    int line;
    int column;
    TurtleParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg), line(line_), column(column_) {}
};

/// RDF/XML document: rdf:RDF root, owl:Ontology header, one element per
/// subject sorted by IRI. Byte-deterministic for equal graphs.
std::string serialize_rdfxml(const Graph& g, const std::string& version_info);

/// Compact subject-grouped triple syntax with @prefix declarations.
/// Blank nodes appear as _:bN after canonical relabeling.
std::string serialize_turtle(const Graph& g);

/// Parses the subset serialize_turtle emits (prefixed names, full IRIs,
/// typed/plain literals, blank labels, `;` and `,` grouping).
/// Throws TurtleParseError with line/column on malformed input.
Graph parse_turtle(const std::string& text);

/// One term in the compact syntax, using the graph's prefixes.
std::string format_turtle_term(const Graph& g, const Term& t);

} // namespace ontoc

#endif
