#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "ontoc/graph.hpp"

using namespace ontoc;
using namespace ontoc::testing;

namespace {

Term uet(const std::string& local) {
    return Term::iri("http://www.owl-ontologies.com/uet-1.owl#" + local);
}

// Deliberately naive closure: full rescans until nothing changes.
Graph oracle_closure(const Graph& g) {
    Graph out = g;
    const Term type = Term::iri(iri::rdf_type);
    const Term sub = Term::iri(iri::rdfs_subclassof);
    const Term inv = Term::iri(iri::owl_inverseof);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Triple> snapshot(out.triples().begin(), out.triples().end());
        for (const auto& x : snapshot) {
            for (const auto& y : snapshot) {
                if (x.predicate == sub && y.predicate == sub && x.object == y.subject) {
                    Triple t{x.subject, sub, y.object};
                    if (!out.contains(t)) { out.insert(t); changed = true; }
                }
                if (x.predicate == type && y.predicate == sub && x.object == y.subject) {
                    Triple t{x.subject, type, y.object};
                    if (!out.contains(t)) { out.insert(t); changed = true; }
                }
                if (y.predicate == inv && !x.object.is_literal()) {
                    if (x.predicate == y.subject) {
                        Triple t{x.object, y.object, x.subject};
                        if (!out.contains(t)) { out.insert(t); changed = true; }
                    }
                    if (x.predicate == y.object) {
                        Triple t{x.object, y.subject, x.subject};
                        if (!out.contains(t)) { out.insert(t); changed = true; }
                    }
                }
            }
        }
    }
    return out;
}

Graph random_graph(std::mt19937& rng) {
    Graph g({{"ex", "http://e.org/x#", true}});
    auto ex = [](const std::string& l) { return Term::iri("http://e.org/x#" + l); };
    std::uniform_int_distribution<int> count(0, 30);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<int> cls(0, 5);
    std::uniform_int_distribution<int> prop(0, 3);
    std::uniform_int_distribution<int> ind(0, 7);
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        switch (kind(rng)) {
            case 0:
                g.insert({ex("C" + std::to_string(cls(rng))), Term::iri(iri::rdfs_subclassof),
                          ex("C" + std::to_string(cls(rng)))});
                break;
            case 1:
                g.insert({ex("i" + std::to_string(ind(rng))), Term::iri(iri::rdf_type),
                          ex("C" + std::to_string(cls(rng)))});
                break;
            case 2:
                g.insert({ex("P" + std::to_string(prop(rng))), Term::iri(iri::owl_inverseof),
                          ex("Q" + std::to_string(prop(rng)))});
                break;
            default:
                g.insert({ex("i" + std::to_string(ind(rng))), ex("P" + std::to_string(prop(rng))),
                          ex("i" + std::to_string(ind(rng)))});
        }
    }
    return g;
}

bool subset_of(const Graph& a, const Graph& b) {
    for (const auto& t : a.triples())
        if (!b.contains(t)) return false;
    return true;
}

} // namespace

TEST_CASE("lower_schema emits the paper's class and property triples") {
    auto model = fixture_model();
    Graph g = lower_schema(model);

    CHECK(g.contains({uet("Author"), Term::iri(iri::rdf_type), Term::iri(iri::owl_class)}));
    CHECK(g.contains({uet("Faculty"), Term::iri(iri::rdfs_subclassof), uet("Person")}));
    CHECK(g.contains({uet("hasCategory"), Term::iri(iri::rdf_type), Term::iri(iri::owl_objectprop)}));
    CHECK(g.contains({uet("hasCategory"), Term::iri(iri::rdfs_domain), uet("ResearchPaper")}));
    CHECK(g.contains({uet("hasCategory"), Term::iri(iri::rdfs_range), uet("PaperCategory")}));
    CHECK(g.contains({uet("hasTitle"), Term::iri(iri::rdf_type), Term::iri(iri::owl_dataprop)}));
    CHECK(g.contains({uet("hasTitle"), Term::iri(iri::rdfs_range), Term::iri(iri::xsd_string)}));
    CHECK(g.contains({uet("hasDirector"), Term::iri(iri::owl_inverseof), uet("isDirectorOf")}));
}

TEST_CASE("multi-class domains lower to a union blank node") {
    auto model = fixture_model();
    Graph g = lower_schema(model);

    auto domains = match(g, {uet("hasId"), Term::iri(iri::rdfs_domain), std::nullopt});
    REQUIRE(domains.size() == 1);
    REQUIRE(domains.front().object.is_blank());

    auto unions = match(g, {domains.front().object, Term::iri(iri::owl_unionof), std::nullopt});
    REQUIRE(unions.size() == 1);

    // walk the member list
    std::vector<std::string> members;
    Term cell = unions.front().object;
    while (!(cell.is_iri() && cell.value == iri::rdf_nil)) {
        auto firsts = match(g, {cell, Term::iri(iri::rdf_first), std::nullopt});
        REQUIRE(firsts.size() == 1);
        members.push_back(firsts.front().object.value);
        auto rests = match(g, {cell, Term::iri(iri::rdf_rest), std::nullopt});
        REQUIRE(rests.size() == 1);
        cell = rests.front().object;
    }
    CHECK(members.size() == 4);

    // single-class domains stay direct
    auto email = match(g, {uet("hasEmail"), Term::iri(iri::rdfs_domain), std::nullopt});
    REQUIRE(email.size() == 1);
    CHECK(email.front().object == uet("Researcher"));
}

TEST_CASE("page membership triples are emitted with their built-ins") {
    auto model = fixture_model();
    Graph g = lower_schema(model);
    CHECK(g.contains({uet("belongToPage"), Term::iri(iri::rdf_type), Term::iri(iri::owl_objectprop)}));
    CHECK(g.contains({uet("belongToPage"), Term::iri(iri::rdfs_domain), uet("HardCodedContent")}));
    CHECK(g.contains({uet("belongToPage"), Term::iri(iri::rdfs_range), uet("PageClass")}));
    CHECK(g.contains({uet("Researcher"), uet("belongToPage"), uet("ResearchersPage")}));
}

TEST_CASE("lower_instances produces the Fig 9 triples") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    Graph g = lower_instances(individuals, model);

    CHECK(g.contains({uet("D_5"), Term::iri(iri::rdf_type), uet("Director")}));
    CHECK(g.contains({uet("D_5"), uet("hasCode"), uet("F_7")}));
    CHECK(g.contains({uet("D_5"), uet("hasJoiningDate"),
                      Term::literal("2006-01-25", iri::xsd_date)}));
    CHECK(g.contains({uet("F_7"), uet("hasName"), Term::literal("M. Afzal", iri::xsd_string)}));
    CHECK(g.contains({uet("F_7"), uet("hasJobTitle"), Term::literal("Professor", iri::xsd_string)}));
    CHECK(g.contains({uet("F_7"), uet("hasEmail"),
                      Term::literal("m.afzal@hotmail.com", iri::xsd_string)}));
    CHECK(lower_instances({}, model).empty());
}

TEST_CASE("closure adds inherited types and inverse edges") {
    auto model = fixture_model();
    Graph g = lower_schema(model);
    Graph inst = lower_instances(fixture_individuals(model), model);
    for (const auto& t : inst.triples()) g.insert(t);
    Graph closed = materialize_inferences(g);

    CHECK(closed.contains({uet("F_7"), Term::iri(iri::rdf_type), uet("Person")}));
    CHECK(closed.contains({uet("D_5"), uet("isDirectorOf"), uet("RG_4")}));
}

TEST_CASE("closure without schema triples is the identity") {
    Graph g({{"ex", "http://e.org/x#", true}});
    g.insert({Term::iri("http://e.org/x#a"), Term::iri("http://e.org/x#p"),
              Term::iri("http://e.org/x#b")});
    CHECK(materialize_inferences(g) == g);
}

TEST_CASE("closure matches the naive oracle on random graphs") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng);
        Graph fast = materialize_inferences(g);
        Graph slow = oracle_closure(g);
        CHECK(fast == slow);
    }
}

TEST_CASE("closure is idempotent and monotone") {
    std::mt19937 rng(11);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng);
        Graph once = materialize_inferences(g);
        CHECK(materialize_inferences(once) == once);
        CHECK(subset_of(g, once));

        // add one triple; closure can only grow
        Graph h = g;
        h.insert({Term::iri("http://e.org/x#i0"), Term::iri(iri::rdf_type),
                  Term::iri("http://e.org/x#C0")});
        CHECK(subset_of(once, materialize_inferences(h)));
    }
}

TEST_CASE("match finds the fixture's class declarations") {
    auto model = fixture_model();
    Graph g = lower_schema(model);
    auto classes = match(g, {std::nullopt, Term::iri(iri::rdf_type), Term::iri(iri::owl_class)});
    // 10 declared classes + HardCodedContent + PageClass + 3 union nodes
    std::size_t named = 0;
    for (const auto& t : classes)
        if (t.subject.is_iri()) ++named;
    CHECK(named == 12);

    Graph inst = lower_instances(fixture_individuals(model), model);
    CHECK(match(inst, {uet("D_5"), std::nullopt, std::nullopt}).size() == 3);
    CHECK(match(Graph{}, {std::nullopt, std::nullopt, std::nullopt}).empty());
}

TEST_CASE("graph_diff reflexivity and single insertion") {
    auto model = fixture_model();
    Graph g = lower_schema(model);
    CHECK(graph_diff(g, g).empty());

    Graph h = g;
    Triple fresh{uet("Extra"), Term::iri(iri::rdf_type), Term::iri(iri::owl_class)};
    h.insert(fresh);
    auto diff = graph_diff(g, h);
    CHECK(diff.only_in_a.empty());
    REQUIRE(diff.only_in_b.size() == 1);
    CHECK(diff.only_in_b.front() == fresh);
}

TEST_CASE("blank relabeling makes isomorphic graphs equal") {
    auto build = [](const std::string& l1, const std::string& l2) {
        Graph g({{"ex", "http://e.org/x#", true}});
        g.insert({Term::iri("http://e.org/x#p"), Term::iri(iri::rdfs_domain), Term::blank(l1)});
        g.insert({Term::blank(l1), Term::iri(iri::rdf_first), Term::iri("http://e.org/x#A")});
        g.insert({Term::blank(l1), Term::iri(iri::rdf_rest), Term::blank(l2)});
        g.insert({Term::blank(l2), Term::iri(iri::rdf_first), Term::iri("http://e.org/x#B")});
        g.insert({Term::blank(l2), Term::iri(iri::rdf_rest), Term::iri(iri::rdf_nil)});
        return g;
    };
    CHECK(graph_diff(build("x", "y"), build("n7", "n3")).empty());
}

TEST_CASE("lower_schema is deterministic") {
    auto model = fixture_model();
    CHECK(graph_diff(lower_schema(model), lower_schema(model)).empty());
}

TEST_CASE("lowered triples always have IRI predicates") {
    auto model = fixture_model();
    Graph g = lower_schema(model);
    Graph inst = lower_instances(fixture_individuals(model), model);
    for (const auto& t : inst.triples()) g.insert(t);
    for (const auto& t : g.triples()) {
        CHECK(t.predicate.is_iri());
        CHECK_FALSE(t.subject.is_literal());
    }
}

TEST_CASE("lower_schema rejects unresolved names") {
    auto model = parse_text(
        "namespace ex = <http://e.org/x#> default\n"
        "class A\n"
        "relationship r domain A range Ghost\n").model;
    CHECK_THROWS_AS(lower_schema(model), std::invalid_argument);
}
