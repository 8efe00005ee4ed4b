#ifndef ONTOC_MODEL_HPP
#define ONTOC_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "ontoc/diagnostics.hpp"

namespace ontoc {

struct Namespace {
    std::string prefix;
    std::string base;          // absolute IRI ending in '#' or '/'
    bool is_default = false;
};

enum class TermKind { Class, Relationship, Characteristic, Individual };

struct VocabularyTerm {
    std::string name;
    TermKind kind;
    std::string description;
};

enum class Datatype { String, Number, Date, PageUri };

std::string datatype_name(Datatype dt);
std::optional<Datatype> datatype_from_name(const std::string& name);

struct ClassDecl {
    std::string name;
    std::vector<std::string> superclasses;
    std::string description;
    SourceLoc loc;
};

struct DisjointnessDecl {
    std::vector<std::string> members;  // >= 2, pairwise distinct
    SourceLoc loc;
};

struct RelationshipDecl {
    std::string name;
    std::optional<std::string> inverse_name;
    std::vector<std::string> domain_classes;
    std::vector<std::string> range_classes;
    std::optional<long long> min_cardinality;
    std::optional<long long> max_cardinality;
    SourceLoc loc;
};

struct CharacteristicDecl {
    std::string name;
    std::vector<std::string> domain_classes;
    Datatype datatype = Datatype::String;
    SourceLoc loc;
};

struct Axiom {
    std::string text;
    std::vector<std::string> referenced_terms;  // non-empty
    SourceLoc loc;
};

enum class Comparator { Less, LessEq, Eq, GreaterEq, Greater, NotEq };

std::string comparator_symbol(Comparator c);

struct IntegrityRule {
    std::string relationship;
    std::string subject_characteristic;
    Comparator comparator = Comparator::Eq;
    std::string object_characteristic;
    SourceLoc loc;
};

struct PageDecl {
    std::string name;
    std::vector<std::string> member_classes;  // non-empty, no repeats
    std::string template_path;
    SourceLoc loc;
};

// `synonym A = B` — an explicit semantic-heterogeneity annotation.
struct SynonymDecl {
    std::string left;
    std::string right;
    SourceLoc loc;
};

struct Literal {
    Datatype datatype = Datatype::String;
    std::string lexical;  // unescaped value text, e.g. M. Afzal / 2006-01-25
};

struct ObjectAssertion {
    std::string relationship;
    std::string target;
    SourceLoc loc;
};

struct DataAssertion {
    std::string characteristic;
    Literal value;
    SourceLoc loc;
};

struct IndividualDecl {
    std::string id;
    std::vector<std::string> classes;  // non-empty; multi-class is legal
    std::vector<ObjectAssertion> object_assertions;
    std::vector<DataAssertion> data_assertions;
    SourceLoc loc;
};

struct PreliminaryModel {
    std::vector<Namespace> namespaces;
    std::vector<ClassDecl> classes;
    std::vector<DisjointnessDecl> disjointness;
    std::vector<RelationshipDecl> relationships;
    std::vector<CharacteristicDecl> characteristics;
    std::vector<Axiom> axioms;
    std::vector<IntegrityRule> rules;
    std::vector<PageDecl> pages;
    std::vector<SynonymDecl> synonyms;

    const Namespace* default_namespace() const;
    const ClassDecl* find_class(const std::string& name) const;
    const RelationshipDecl* find_relationship(const std::string& name) const;
    const CharacteristicDecl* find_characteristic(const std::string& name) const;
    const PageDecl* find_page(const std::string& name) const;
};

/// Expands an identifier in the model's default namespace.
std::string expand_identifier(const PreliminaryModel& model, const std::string& name);

/// The declared vocabulary: one term per class/relationship/characteristic.
std::vector<VocabularyTerm> vocabulary(const PreliminaryModel& model);

/// Case-sensitive lookup in the declared vocabulary.
std::optional<VocabularyTerm> lookup_term(const PreliminaryModel& model, const std::string& name);

bool is_identifier(const std::string& s);

/// True when `sub` equals `cls` or is a (transitive) subclass of it.
bool is_subclass_of(const PreliminaryModel& model, const std::string& sub, const std::string& cls);

/// `cls` plus every declared superclass, transitively; cycle-safe.
std::vector<std::string> superclass_closure(const PreliminaryModel& model, const std::string& cls);

} // namespace ontoc

#endif
