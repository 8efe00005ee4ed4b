#include "ontoc/validator.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace ontoc {
namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

// True when some declared class of the individual, or a superclass of it,
// is among `classes`.
bool satisfies_class_constraint(const PreliminaryModel& model,
                                const std::vector<std::string>& individual_classes,
                                const std::vector<std::string>& classes) {
    for (const auto& c : individual_classes) {
        auto closure = superclass_closure(model, c);
        for (const auto& want : classes)
            if (std::binary_search(closure.begin(), closure.end(), want)) return true;
    }
    return false;
}

// -1 / 0 / +1 comparison of optionally signed arbitrary-precision integers.
int compare_numbers(const std::string& a, const std::string& b) {
    auto split = [](const std::string& s) {
        bool neg = !s.empty() && s[0] == '-';
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        while (start + 1 < s.size() && s[start] == '0') ++start;
        return std::pair<bool, std::string>{neg, s.substr(start)};
    };
    auto [na, ma] = split(a);
    auto [nb, mb] = split(b);
    if (ma == "0") na = false;
    if (mb == "0") nb = false;
    if (na != nb) return na ? -1 : 1;
    int mag;
    if (ma.size() != mb.size())
        mag = ma.size() < mb.size() ? -1 : 1;
    else
        mag = ma < mb ? -1 : (ma > mb ? 1 : 0);
    return na ? -mag : mag;
}

bool comparator_holds(Comparator c, int cmp) {
    switch (c) {
        case Comparator::Less: return cmp < 0;
        case Comparator::LessEq: return cmp <= 0;
        case Comparator::Eq: return cmp == 0;
        case Comparator::GreaterEq: return cmp >= 0;
        case Comparator::Greater: return cmp > 0;
        case Comparator::NotEq: return cmp != 0;
    }
    return false;
}

const Literal* find_value(const IndividualDecl& ind, const std::string& characteristic) {
    for (const auto& da : ind.data_assertions)
        if (da.characteristic == characteristic) return &da.value;
    return nullptr;
}

} // namespace

bool ValidationReport::valid() const { return error_count() == 0; }

std::vector<Diagnostic> ValidationReport::all() const {
    std::vector<Diagnostic> out;
    for (const auto* list : {&consistency, &completeness, &correctness,
                             &instance_conformance, &integrity})
        out.insert(out.end(), list->begin(), list->end());
    return out;
}

std::size_t ValidationReport::error_count() const { return count_errors(all()); }
std::size_t ValidationReport::warning_count() const { return count_warnings(all()); }

std::vector<Diagnostic> check_consistency(const PreliminaryModel& model,
                                          const std::vector<IndividualDecl>& individuals) {
    std::vector<Diagnostic> diags;

    // Names differing only by letter case denote one resource twice.
    auto terms = vocabulary(model);
    for (std::size_t i = 0; i < terms.size(); ++i) {
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            if (terms[i].name != terms[j].name && lower(terms[i].name) == lower(terms[j].name)) {
                diags.push_back({Severity::Error, "ALIAS",
                                 "'" + terms[i].name + "' and '" + terms[j].name +
                                     "' differ only by letter case and likely name one resource",
                                 {}});
            }
        }
    }
    for (const auto& syn : model.synonyms) {
        diags.push_back({Severity::Error, "ALIAS",
                         "'" + syn.left + "' and '" + syn.right +
                             "' are declared synonyms; merge them into one term",
                         syn.loc});
    }

    for (const auto& ind : individuals) {
        std::set<std::string> closure;
        for (const auto& c : ind.classes) {
            auto up = superclass_closure(model, c);
            closure.insert(up.begin(), up.end());
        }
        for (const auto& dis : model.disjointness) {
            for (std::size_t i = 0; i < dis.members.size(); ++i) {
                for (std::size_t j = i + 1; j < dis.members.size(); ++j) {
                    if (closure.count(dis.members[i]) && closure.count(dis.members[j])) {
                        diags.push_back({Severity::Error, "DISJOINT",
                                         "individual '" + ind.id + "' belongs to disjoint classes '" +
                                             dis.members[i] + "' and '" + dis.members[j] + "'",
                                         ind.loc});
                    }
                }
            }
        }
    }
    sort_by_code(diags);
    return diags;
}

std::vector<Diagnostic> check_completeness(const PreliminaryModel& model) {
    std::vector<Diagnostic> diags;
    auto known_class = [&](const std::string& name) { return model.find_class(name) != nullptr; };
    auto undeclared = [&](const std::string& name, const std::string& where, const SourceLoc& loc) {
        diags.push_back({Severity::Error, "UNDECLARED-CLASS",
                         "class '" + name + "' used as " + where + " but never declared", loc});
    };

    for (const auto& c : model.classes)
        for (const auto& super : c.superclasses)
            if (!known_class(super)) undeclared(super, "superclass of '" + c.name + "'", c.loc);
    for (const auto& r : model.relationships) {
        for (const auto& d : r.domain_classes)
            if (!known_class(d)) undeclared(d, "domain of '" + r.name + "'", r.loc);
        for (const auto& rg : r.range_classes)
            if (!known_class(rg)) undeclared(rg, "range of '" + r.name + "'", r.loc);
    }
    for (const auto& c : model.characteristics)
        for (const auto& d : c.domain_classes)
            if (!known_class(d)) undeclared(d, "domain of '" + c.name + "'", c.loc);
    for (const auto& p : model.pages)
        for (const auto& m : p.member_classes)
            if (!known_class(m)) undeclared(m, "member of page '" + p.name + "'", p.loc);
    for (const auto& d : model.disjointness)
        for (const auto& m : d.members)
            if (!known_class(m)) undeclared(m, "disjointness member", d.loc);

    for (const auto& ax : model.axioms) {
        for (const auto& term : ax.referenced_terms) {
            if (!lookup_term(model, term)) {
                diags.push_back({Severity::Error, "UNDECLARED-TERM",
                                 "axiom references '" + term + "' which is not in the vocabulary",
                                 ax.loc});
            }
        }
    }
    for (const auto& rule : model.rules) {
        if (!model.find_relationship(rule.relationship))
            diags.push_back({Severity::Error, "UNDECLARED-TERM",
                             "integrity rule names unknown relationship '" + rule.relationship + "'",
                             rule.loc});
        for (const auto& ch : {rule.subject_characteristic, rule.object_characteristic})
            if (!model.find_characteristic(ch))
                diags.push_back({Severity::Error, "UNDECLARED-TERM",
                                 "integrity rule names unknown characteristic '" + ch + "'",
                                 rule.loc});
    }

    for (const auto& r : model.relationships) {
        if (!r.inverse_name) {
            diags.push_back({Severity::Warning, "MISSING-INVERSE",
                             "relationship '" + r.name + "' has no inverse name", r.loc});
        }
    }
    sort_by_code(diags);
    return diags;
}

std::vector<Diagnostic> check_correctness(const PreliminaryModel& model) {
    std::vector<Diagnostic> diags;

    // Cycle detection over the subclass graph: iterative DFS collecting
    // strongly connected names via the path stack.
    std::map<std::string, std::vector<std::string>> edges;
    for (const auto& c : model.classes)
        for (const auto& s : c.superclasses) edges[c.name].push_back(s);

    std::set<std::string> done;
    std::set<std::set<std::string>> reported;
    for (const auto& c : model.classes) {
        // walk from c; a cycle exists iff c is reachable from one of its
        // superclasses
        std::set<std::string> on_cycle;
        std::vector<std::string> stack{c.name};
        std::set<std::string> seen;
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            for (const auto& next : edges[cur]) {
                if (next == c.name) on_cycle.insert(cur);
                if (seen.insert(next).second) stack.push_back(next);
            }
        }
        if (!on_cycle.empty()) {
            on_cycle.insert(c.name);
            if (reported.insert(on_cycle).second) {
                std::vector<std::string> members(on_cycle.begin(), on_cycle.end());
                diags.push_back({Severity::Error, "CYCLE",
                                 "subclass cycle involving {" + join(members, ", ") + "}",
                                 c.loc});
            }
        }
    }

    for (const auto& r : model.relationships) {
        if (r.min_cardinality && r.max_cardinality && *r.max_cardinality < *r.min_cardinality) {
            diags.push_back({Severity::Error, "BAD-CARDINALITY",
                             "relationship '" + r.name + "' has max cardinality " +
                                 std::to_string(*r.max_cardinality) + " below min " +
                                 std::to_string(*r.min_cardinality),
                             r.loc});
        }
    }

    for (const auto& d : model.disjointness) {
        for (std::size_t i = 0; i < d.members.size(); ++i) {
            for (std::size_t j = i + 1; j < d.members.size(); ++j) {
                const auto& a = d.members[i];
                const auto& b = d.members[j];
                if (is_subclass_of(model, a, b) || is_subclass_of(model, b, a)) {
                    diags.push_back({Severity::Error, "SELF-DISJOINT",
                                     "disjointness names '" + a + "' and '" + b +
                                         "' although one subsumes the other",
                                     d.loc});
                }
            }
        }
    }
    sort_by_code(diags);
    return diags;
}

std::vector<Diagnostic> check_instance_conformance(const PreliminaryModel& model,
                                                   const std::vector<IndividualDecl>& individuals) {
    std::vector<Diagnostic> diags;
    std::map<std::string, const IndividualDecl*> by_id;
    for (const auto& ind : individuals) by_id[ind.id] = &ind;

    for (const auto& ind : individuals) {
        for (const auto& c : ind.classes) {
            if (!model.find_class(c)) {
                diags.push_back({Severity::Error, "UNDECLARED-CLASS",
                                 "individual '" + ind.id + "' has undeclared class '" + c + "'",
                                 ind.loc});
            }
        }

        for (const auto& da : ind.data_assertions) {
            const CharacteristicDecl* decl = model.find_characteristic(da.characteristic);
            if (!decl) {
                diags.push_back({Severity::Error, "UNDECLARED-TERM",
                                 "data assertion uses undeclared characteristic '" +
                                     da.characteristic + "'",
                                 da.loc});
                continue;
            }
            if (!satisfies_class_constraint(model, ind.classes, decl->domain_classes)) {
                diags.push_back({Severity::Error, "DOMAIN-VIOLATION",
                                 "'" + ind.id + "' is not in the domain of '" + da.characteristic +
                                     "'",
                                 da.loc});
            }
            if (da.value.datatype != decl->datatype) {
                diags.push_back({Severity::Error, "DATATYPE-MISMATCH",
                                 "value of '" + da.characteristic + "' on '" + ind.id + "' is " +
                                     datatype_name(da.value.datatype) + ", declared " +
                                     datatype_name(decl->datatype),
                                 da.loc});
            }
        }

        std::map<std::string, long long> counts;
        for (const auto& oa : ind.object_assertions) {
            const RelationshipDecl* decl = model.find_relationship(oa.relationship);
            if (!decl) {
                diags.push_back({Severity::Error, "UNDECLARED-TERM",
                                 "object assertion uses undeclared relationship '" +
                                     oa.relationship + "'",
                                 oa.loc});
                continue;
            }
            ++counts[oa.relationship];
            if (!satisfies_class_constraint(model, ind.classes, decl->domain_classes)) {
                diags.push_back({Severity::Error, "DOMAIN-VIOLATION",
                                 "'" + ind.id + "' is not in the domain of '" + oa.relationship +
                                     "'",
                                 oa.loc});
            }
            auto it = by_id.find(oa.target);
            if (it == by_id.end()) {
                diags.push_back({Severity::Error, "UNDECLARED-TERM",
                                 "object assertion targets unknown individual '" + oa.target + "'",
                                 oa.loc});
            } else if (!satisfies_class_constraint(model, it->second->classes,
                                                   decl->range_classes)) {
                diags.push_back({Severity::Error, "RANGE-VIOLATION",
                                 "'" + oa.target + "' is not in the range of '" + oa.relationship +
                                     "'",
                                 oa.loc});
            }
        }

        for (const auto& r : model.relationships) {
            if (!r.min_cardinality && !r.max_cardinality) continue;
            long long n = counts.count(r.name) ? counts[r.name] : 0;
            bool in_domain = satisfies_class_constraint(model, ind.classes, r.domain_classes);
            if (r.max_cardinality && n > *r.max_cardinality) {
                diags.push_back({Severity::Error, "CARDINALITY-VIOLATION",
                                 "'" + ind.id + "' has " + std::to_string(n) + " '" + r.name +
                                     "' assertions, max is " + std::to_string(*r.max_cardinality),
                                 ind.loc});
            }
            if (r.min_cardinality && in_domain && n < *r.min_cardinality) {
                diags.push_back({Severity::Error, "CARDINALITY-VIOLATION",
                                 "'" + ind.id + "' has " + std::to_string(n) + " '" + r.name +
                                     "' assertions, min is " + std::to_string(*r.min_cardinality),
                                 ind.loc});
            }
        }
    }
    sort_by_code(diags);
    return diags;
}

std::vector<Diagnostic> check_integrity_rules(const PreliminaryModel& model,
                                              const std::vector<IndividualDecl>& individuals) {
    std::vector<Diagnostic> diags;
    std::map<std::string, const IndividualDecl*> by_id;
    for (const auto& ind : individuals) by_id[ind.id] = &ind;

    for (const auto& rule : model.rules) {
        const CharacteristicDecl* subj_decl = model.find_characteristic(rule.subject_characteristic);
        const CharacteristicDecl* obj_decl = model.find_characteristic(rule.object_characteristic);
        if (!subj_decl || !obj_decl) continue;  // completeness reports these
        bool comparable = (subj_decl->datatype == Datatype::Number ||
                           subj_decl->datatype == Datatype::Date) &&
                          subj_decl->datatype == obj_decl->datatype;
        if (!comparable) {
            diags.push_back({Severity::Warning, "RULE-INAPPLICABLE",
                             "rule on '" + rule.relationship +
                                 "' compares characteristics that are not both number or both date",
                             rule.loc});
            continue;
        }

        for (const auto& ind : individuals) {
            for (const auto& oa : ind.object_assertions) {
                if (oa.relationship != rule.relationship) continue;
                auto it = by_id.find(oa.target);
                const Literal* lhs = find_value(ind, rule.subject_characteristic);
                const Literal* rhs =
                    it == by_id.end() ? nullptr : find_value(*it->second, rule.object_characteristic);
                if (!lhs || lhs->datatype != subj_decl->datatype || !rhs ||
                    rhs->datatype != obj_decl->datatype) {
                    diags.push_back({Severity::Warning, "RULE-INAPPLICABLE",
                                     "rule on '" + rule.relationship + "' cannot be applied to ('" +
                                         ind.id + "', '" + oa.target + "'): missing operand",
                                     oa.loc});
                    continue;
                }
                int cmp = subj_decl->datatype == Datatype::Number
                              ? compare_numbers(lhs->lexical, rhs->lexical)
                              : lhs->lexical.compare(rhs->lexical) < 0
                                    ? -1
                                    : (lhs->lexical == rhs->lexical ? 0 : 1);
                if (!comparator_holds(rule.comparator, cmp)) {
                    diags.push_back({Severity::Error, "RULE-VIOLATION",
                                     "rule '" + rule.relationship + ": subject." +
                                         rule.subject_characteristic + " " +
                                         comparator_symbol(rule.comparator) + " object." +
                                         rule.object_characteristic + "' violated by ('" + ind.id +
                                         "', '" + oa.target + "')",
                                     oa.loc});
                }
            }
        }
    }
    sort_by_code(diags);
    return diags;
}

ValidationReport validate_all(const PreliminaryModel& model,
                              const std::vector<IndividualDecl>& individuals) {
    ValidationReport report;
    report.consistency = check_consistency(model, individuals);
    report.completeness = check_completeness(model);
    report.correctness = check_correctness(model);
    report.instance_conformance = check_instance_conformance(model, individuals);
    report.integrity = check_integrity_rules(model, individuals);
    return report;
}

std::string render_report(const ValidationReport& report) {
    std::ostringstream out;
    out << (report.valid() ? "valid" : "invalid") << ": " << report.error_count() << " errors, "
        << report.warning_count() << " warnings\n";
    out << render_diagnostics(report.all());
    return out.str();
}

} // namespace ontoc
