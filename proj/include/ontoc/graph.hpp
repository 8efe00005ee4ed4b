#ifndef ONTOC_GRAPH_HPP
#define ONTOC_GRAPH_HPP

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ontoc/model.hpp"

namespace ontoc {

namespace iri {
// Well-known vocabulary IRIs.
inline const std::string rdf_ns  = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string owl_ns  = "http://www.w3.org/2002/07/owl#";
inline const std::string xsd_ns  = "http://www.w3.org/2001/XMLSchema#";

inline const std::string rdf_type        = rdf_ns + "type";
inline const std::string rdf_first       = rdf_ns + "first";
inline const std::string rdf_rest        = rdf_ns + "rest";
inline const std::string rdf_nil         = rdf_ns + "nil";
inline const std::string rdfs_subclassof = rdfs_ns + "subClassOf";
inline const std::string rdfs_domain     = rdfs_ns + "domain";
inline const std::string rdfs_range      = rdfs_ns + "range";
inline const std::string owl_class       = owl_ns + "Class";
inline const std::string owl_objectprop  = owl_ns + "ObjectProperty";
inline const std::string owl_dataprop    = owl_ns + "DatatypeProperty";
inline const std::string owl_inverseof   = owl_ns + "inverseOf";
inline const std::string owl_disjointwith = owl_ns + "disjointWith";
inline const std::string owl_unionof     = owl_ns + "unionOf";
inline const std::string xsd_string      = xsd_ns + "string";
inline const std::string xsd_int         = xsd_ns + "int";
inline const std::string xsd_date       = xsd_ns + "date";
inline const std::string xsd_anyuri     = xsd_ns + "anyURI";
} // namespace iri

/// Maps a model datatype to its XSD datatype IRI.
const std::string& datatype_iri(Datatype dt);

struct Term {
    enum class Kind { Iri, Blank, Literal };
    Kind kind = Kind::Iri;
    std::string value;          // IRI, blank label, or lexical form
    std::string datatype_iri;   // literals only

    static Term iri(std::string v);
    static Term blank(std::string label);
    static Term literal(std::string lexical, std::string dtype);

    bool is_iri() const { return kind == Kind::Iri; }
    bool is_blank() const { return kind == Kind::Blank; }
    bool is_literal() const { return kind == Kind::Literal; }

    // Canonical order: IRIs, then blanks, then literals.
    auto operator<=>(const Term&) const = default;
};

struct Triple {
    Term subject;    // iri or blank
    Term predicate;  // iri only
    Term object;

    auto operator<=>(const Triple&) const = default;
};

struct TriplePattern {
    std::optional<Term> subject;    // nullopt = wildcard
    std::optional<Term> predicate;
    std::optional<Term> object;
};

class Graph {
public:
    using TripleSet = std::set<Triple>;

    Graph() = default;
    explicit Graph(std::vector<Namespace> namespaces) : namespaces_(std::move(namespaces)) {}

    // Set semantics; re-inserting an existing triple is a no-op.
    void insert(Triple t);
    bool contains(const Triple& t) const;
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    const TripleSet& triples() const { return triples_; }
    const std::vector<Namespace>& namespaces() const { return namespaces_; }
    void set_namespaces(std::vector<Namespace> ns) { namespaces_ = std::move(ns); }

    /// Fresh blank node with a label unused in this graph.
    Term fresh_blank();

    bool operator==(const Graph& other) const { return triples_ == other.triples_; }

private:
    TripleSet triples_;
    std::vector<Namespace> namespaces_;
    int blank_counter_ = 0;
};

/// Namespaces the lowering emits prefixes for: the model's own plus
/// rdf/rdfs/owl/xsd.
std::vector<Namespace> standard_namespaces(const PreliminaryModel& model);

/// Lowers declarations to schema triples. Requires a model that passed
/// validation; throws std::invalid_argument on unresolved names.
Graph lower_schema(const PreliminaryModel& model);

/// Lowers individuals to instance triples (rdf:type + assertions).
Graph lower_instances(const std::vector<IndividualDecl>& individuals,
                      const PreliminaryModel& model);

/// Least fixpoint under subclass transitivity, type inheritance and
/// inverse symmetry. Idempotent; never removes triples.
Graph materialize_inferences(const Graph& g);

/// Triples unifying with the pattern, in canonical order.
std::vector<Triple> match(const Graph& g, const TriplePattern& p);

struct GraphDiff {
    std::vector<Triple> only_in_a;
    std::vector<Triple> only_in_b;

    bool empty() const { return only_in_a.empty() && only_in_b.empty(); }
};

/// Relabels blank nodes deterministically by sorted incident-triple
/// signature, then returns the symmetric set differences.
GraphDiff graph_diff(const Graph& a, const Graph& b);

/// The canonical-relabeling half of graph_diff, exposed for serializers.
Graph canonicalize_blanks(const Graph& g);

} // namespace ontoc

#endif
