#include "ontoc/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ontoc {
namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ULL) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string term_skeleton(const Term& t) {
    switch (t.kind) {
        case Term::Kind::Iri: return "I:" + t.value;
        case Term::Kind::Blank: return "B";
        case Term::Kind::Literal: return "L:" + t.value + "^^" + t.datatype_iri;
    }
    return "";
}

} // namespace

const std::string& datatype_iri(Datatype dt) {
    switch (dt) {
        case Datatype::String: return iri::xsd_string;
        case Datatype::Number: return iri::xsd_int;
        case Datatype::Date: return iri::xsd_date;
        case Datatype::PageUri: return iri::xsd_anyuri;
    }
    return iri::xsd_string;
}

Term Term::iri(std::string v) { return {Kind::Iri, std::move(v), ""}; }
Term Term::blank(std::string label) { return {Kind::Blank, std::move(label), ""}; }
Term Term::literal(std::string lexical, std::string dtype) {
    return {Kind::Literal, std::move(lexical), std::move(dtype)};
}

void Graph::insert(Triple t) {
    if (!t.predicate.is_iri())
        throw std::invalid_argument("triple predicate must be an IRI");
    if (t.subject.is_literal())
        throw std::invalid_argument("triple subject cannot be a literal");
    triples_.insert(std::move(t));
}

bool Graph::contains(const Triple& t) const { return triples_.count(t) > 0; }

Term Graph::fresh_blank() {
    while (true) {
        std::string label = "g" + std::to_string(blank_counter_++);
        bool used = false;
        for (const auto& t : triples_) {
            if ((t.subject.is_blank() && t.subject.value == label) ||
                (t.object.is_blank() && t.object.value == label)) {
                used = true;
                break;
            }
        }
        if (!used) return Term::blank(label);
    }
}

std::vector<Namespace> standard_namespaces(const PreliminaryModel& model) {
    std::vector<Namespace> ns = model.namespaces;
    ns.push_back({"rdf", iri::rdf_ns, false});
    ns.push_back({"rdfs", iri::rdfs_ns, false});
    ns.push_back({"owl", iri::owl_ns, false});
    ns.push_back({"xsd", iri::xsd_ns, false});
    return ns;
}

namespace {

// Single class: the class IRI itself. Multiple classes: a blank class
// node carrying an owl:unionOf member list.
Term class_or_union(Graph& g, const PreliminaryModel& model,
                    const std::vector<std::string>& classes) {
    if (classes.empty()) throw std::invalid_argument("empty class list");
    if (classes.size() == 1) return Term::iri(expand_identifier(model, classes.front()));

    Term union_node = g.fresh_blank();
    g.insert({union_node, Term::iri(iri::rdf_type), Term::iri(iri::owl_class)});
    Term prev;
    Term head;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        Term cell = g.fresh_blank();
        g.insert({cell, Term::iri(iri::rdf_first), Term::iri(expand_identifier(model, classes[i]))});
        if (i == 0)
            head = cell;
        else
            g.insert({prev, Term::iri(iri::rdf_rest), cell});
        prev = cell;
    }
    g.insert({prev, Term::iri(iri::rdf_rest), Term::iri(iri::rdf_nil)});
    g.insert({union_node, Term::iri(iri::owl_unionof), head});
    return union_node;
}

void require_class(const PreliminaryModel& model, const std::string& name) {
    if (!model.find_class(name))
        throw std::invalid_argument("unresolved class name '" + name + "'");
}

} // namespace

Graph lower_schema(const PreliminaryModel& model) {
    if (!model.default_namespace())
        throw std::invalid_argument("model has no default namespace");
    Graph g(standard_namespaces(model));
    auto ex = [&](const std::string& name) { return Term::iri(expand_identifier(model, name)); };
    const Term a = Term::iri(iri::rdf_type);

    for (const auto& c : model.classes) {
        g.insert({ex(c.name), a, Term::iri(iri::owl_class)});
        for (const auto& super : c.superclasses) {
            require_class(model, super);
            g.insert({ex(c.name), Term::iri(iri::rdfs_subclassof), ex(super)});
        }
    }

    for (const auto& r : model.relationships) {
        for (const auto& cls : r.domain_classes) require_class(model, cls);
        for (const auto& cls : r.range_classes) require_class(model, cls);
        g.insert({ex(r.name), a, Term::iri(iri::owl_objectprop)});
        g.insert({ex(r.name), Term::iri(iri::rdfs_domain),
                  class_or_union(g, model, r.domain_classes)});
        g.insert({ex(r.name), Term::iri(iri::rdfs_range),
                  class_or_union(g, model, r.range_classes)});
        if (r.inverse_name)
            g.insert({ex(r.name), Term::iri(iri::owl_inverseof), ex(*r.inverse_name)});
    }

    for (const auto& c : model.characteristics) {
        for (const auto& cls : c.domain_classes) require_class(model, cls);
        g.insert({ex(c.name), a, Term::iri(iri::owl_dataprop)});
        g.insert({ex(c.name), Term::iri(iri::rdfs_domain),
                  class_or_union(g, model, c.domain_classes)});
        g.insert({ex(c.name), Term::iri(iri::rdfs_range), Term::iri(datatype_iri(c.datatype))});
    }

    for (const auto& d : model.disjointness) {
        for (std::size_t i = 0; i < d.members.size(); ++i)
            for (std::size_t j = i + 1; j < d.members.size(); ++j)
                g.insert({ex(d.members[i]), Term::iri(iri::owl_disjointwith), ex(d.members[j])});
    }

    if (!model.pages.empty()) {
        g.insert({ex("belongToPage"), a, Term::iri(iri::owl_objectprop)});
        g.insert({ex("belongToPage"), Term::iri(iri::rdfs_domain), ex("HardCodedContent")});
        g.insert({ex("belongToPage"), Term::iri(iri::rdfs_range), ex("PageClass")});
        g.insert({ex("HardCodedContent"), a, Term::iri(iri::owl_class)});
        g.insert({ex("PageClass"), a, Term::iri(iri::owl_class)});
        for (const auto& p : model.pages) {
            g.insert({ex(p.name), a, ex("PageClass")});
            for (const auto& m : p.member_classes) {
                require_class(model, m);
                g.insert({ex(m), ex("belongToPage"), ex(p.name)});
            }
        }
    }
    return g;
}

Graph lower_instances(const std::vector<IndividualDecl>& individuals,
                      const PreliminaryModel& model) {
    Graph g(standard_namespaces(model));
    auto ex = [&](const std::string& name) { return Term::iri(expand_identifier(model, name)); };
    const Term a = Term::iri(iri::rdf_type);

    for (const auto& ind : individuals) {
        for (const auto& cls : ind.classes) {
            if (!model.find_class(cls))
                throw std::invalid_argument("unresolved class name '" + cls + "'");
            g.insert({ex(ind.id), a, ex(cls)});
        }
        for (const auto& oa : ind.object_assertions) {
            if (!model.find_relationship(oa.relationship))
                throw std::invalid_argument("unresolved relationship '" + oa.relationship + "'");
            g.insert({ex(ind.id), ex(oa.relationship), ex(oa.target)});
        }
        for (const auto& da : ind.data_assertions) {
            if (!model.find_characteristic(da.characteristic))
                throw std::invalid_argument("unresolved characteristic '" + da.characteristic + "'");
            g.insert({ex(ind.id), ex(da.characteristic),
                      Term::literal(da.value.lexical, datatype_iri(da.value.datatype))});
        }
    }
    return g;
}

Graph materialize_inferences(const Graph& g) {
    Graph out = g;
    const Term type = Term::iri(iri::rdf_type);
    const Term sub = Term::iri(iri::rdfs_subclassof);
    const Term inv = Term::iri(iri::owl_inverseof);

    bool changed = true;
    while (changed) {
        changed = false;
        // subclass edges and inverse pairs as currently known
        std::multimap<Term, Term> supers;   // A -> B for (A subClassOf B)
        std::multimap<Term, Term> inverses; // p -> q, both directions
        for (const auto& t : out.triples()) {
            if (t.predicate == sub) supers.insert({t.subject, t.object});
            if (t.predicate == inv) {
                inverses.insert({t.subject, t.object});
                inverses.insert({t.object, t.subject});
            }
        }

        std::vector<Triple> additions;
        for (const auto& t : out.triples()) {
            if (t.predicate == sub) {
                auto [lo, hi] = supers.equal_range(t.object);
                for (auto it = lo; it != hi; ++it)
                    additions.push_back({t.subject, sub, it->second});
            }
            if (t.predicate == type) {
                auto [lo, hi] = supers.equal_range(t.object);
                for (auto it = lo; it != hi; ++it)
                    additions.push_back({t.subject, type, it->second});
            }
            if (!t.object.is_literal()) {
                auto [lo, hi] = inverses.equal_range(t.predicate);
                for (auto it = lo; it != hi; ++it)
                    additions.push_back({t.object, it->second, t.subject});
            }
        }
        for (auto& t : additions) {
            if (!out.contains(t)) {
                out.insert(std::move(t));
                changed = true;
            }
        }
    }
    return out;
}

std::vector<Triple> match(const Graph& g, const TriplePattern& p) {
    std::vector<Triple> out;
    for (const auto& t : g.triples()) {
        if (p.subject && *p.subject != t.subject) continue;
        if (p.predicate && *p.predicate != t.predicate) continue;
        if (p.object && *p.object != t.object) continue;
        out.push_back(t);
    }
    return out;
}

Graph canonicalize_blanks(const Graph& g) {
    std::vector<std::string> blanks;
    for (const auto& t : g.triples()) {
        if (t.subject.is_blank()) blanks.push_back(t.subject.value);
        if (t.object.is_blank()) blanks.push_back(t.object.value);
    }
    std::sort(blanks.begin(), blanks.end());
    blanks.erase(std::unique(blanks.begin(), blanks.end()), blanks.end());
    if (blanks.empty()) return g;

    // Signature refinement: each round folds in the neighbouring blanks'
    // previous-round signatures, so labels propagate along list chains.
    std::map<std::string, std::uint64_t> sig;
    for (const auto& b : blanks) sig[b] = 0;
    auto render = [&](const Term& t) {
        if (t.is_blank()) return "B:" + std::to_string(sig.at(t.value));
        return term_skeleton(t);
    };
    std::map<std::string, std::vector<std::string>> history;
    for (std::size_t round = 0; round <= blanks.size(); ++round) {
        std::map<std::string, std::uint64_t> next;
        for (const auto& b : blanks) {
            std::vector<std::string> incident;
            for (const auto& t : g.triples()) {
                if (t.subject.is_blank() && t.subject.value == b)
                    incident.push_back("S|" + t.predicate.value + "|" + render(t.object));
                if (t.object.is_blank() && t.object.value == b)
                    incident.push_back("O|" + t.predicate.value + "|" + render(t.subject));
            }
            std::sort(incident.begin(), incident.end());
            std::uint64_t h = 1469598103934665603ULL;
            for (const auto& s : incident) h = fnv1a(s, h);
            next[b] = h;
            history[b].push_back(std::to_string(h));
        }
        sig = std::move(next);
    }

    std::sort(blanks.begin(), blanks.end(), [&](const std::string& a, const std::string& b) {
        return history[a] != history[b] ? history[a] < history[b] : a < b;
    });
    std::map<std::string, std::string> rename;
    for (std::size_t i = 0; i < blanks.size(); ++i)
        rename[blanks[i]] = "b" + std::to_string(i);

    Graph out(g.namespaces());
    for (const auto& t : g.triples()) {
        Triple r = t;
        if (r.subject.is_blank()) r.subject.value = rename[r.subject.value];
        if (r.object.is_blank()) r.object.value = rename[r.object.value];
        out.insert(std::move(r));
    }
    return out;
}

GraphDiff graph_diff(const Graph& a, const Graph& b) {
    Graph ca = canonicalize_blanks(a);
    Graph cb = canonicalize_blanks(b);
    GraphDiff diff;
    std::set_difference(ca.triples().begin(), ca.triples().end(), cb.triples().begin(),
                        cb.triples().end(), std::back_inserter(diff.only_in_a));
    std::set_difference(cb.triples().begin(), cb.triples().end(), ca.triples().begin(),
                        ca.triples().end(), std::back_inserter(diff.only_in_b));
    return diff;
}

} // namespace ontoc
