#include "ontoc/model.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ontoc {

std::string datatype_name(Datatype dt) {
    switch (dt) {
        case Datatype::String: return "string";
        case Datatype::Number: return "number";
        case Datatype::Date: return "date";
        case Datatype::PageUri: return "pageURI";
    }
    return "string";
}

std::optional<Datatype> datatype_from_name(const std::string& name) {
    if (name == "string") return Datatype::String;
    if (name == "number") return Datatype::Number;
    if (name == "date") return Datatype::Date;
    if (name == "pageURI") return Datatype::PageUri;
    return std::nullopt;
}

std::string comparator_symbol(Comparator c) {
    switch (c) {
        case Comparator::Less: return "<";
        case Comparator::LessEq: return "<=";
        case Comparator::Eq: return "=";
        case Comparator::GreaterEq: return ">=";
        case Comparator::Greater: return ">";
        case Comparator::NotEq: return "!=";
    }
    return "=";
}

const Namespace* PreliminaryModel::default_namespace() const {
    for (const auto& ns : namespaces)
        if (ns.is_default) return &ns;
    return nullptr;
}

const ClassDecl* PreliminaryModel::find_class(const std::string& name) const {
    for (const auto& c : classes)
        if (c.name == name) return &c;
    return nullptr;
}

const RelationshipDecl* PreliminaryModel::find_relationship(const std::string& name) const {
    for (const auto& r : relationships)
        if (r.name == name) return &r;
    return nullptr;
}

const CharacteristicDecl* PreliminaryModel::find_characteristic(const std::string& name) const {
    for (const auto& c : characteristics)
        if (c.name == name) return &c;
    return nullptr;
}

const PageDecl* PreliminaryModel::find_page(const std::string& name) const {
    for (const auto& p : pages)
        if (p.name == name) return &p;
    return nullptr;
}

std::string expand_identifier(const PreliminaryModel& model, const std::string& name) {
    const Namespace* ns = model.default_namespace();
    if (!ns && !model.namespaces.empty()) ns = &model.namespaces.front();
    if (!ns) return name;
    return ns->base + name;
}

std::vector<VocabularyTerm> vocabulary(const PreliminaryModel& model) {
    std::vector<VocabularyTerm> terms;
    for (const auto& c : model.classes)
        terms.push_back({c.name, TermKind::Class, c.description});
    for (const auto& r : model.relationships)
        terms.push_back({r.name, TermKind::Relationship, ""});
    for (const auto& c : model.characteristics)
        terms.push_back({c.name, TermKind::Characteristic, ""});
    return terms;
}

std::optional<VocabularyTerm> lookup_term(const PreliminaryModel& model, const std::string& name) {
    for (auto& t : vocabulary(model))
        if (t.name == name) return t;
    return std::nullopt;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

std::vector<std::string> superclass_closure(const PreliminaryModel& model, const std::string& cls) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::vector<std::string> work{cls};
    while (!work.empty()) {
        std::string cur = work.back();
        work.pop_back();
        if (!seen.insert(cur).second) continue;
        out.push_back(cur);
        if (const ClassDecl* decl = model.find_class(cur))
            for (const auto& super : decl->superclasses) work.push_back(super);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_subclass_of(const PreliminaryModel& model, const std::string& sub, const std::string& cls) {
    auto closure = superclass_closure(model, sub);
    return std::binary_search(closure.begin(), closure.end(), cls);
}

} // namespace ontoc
