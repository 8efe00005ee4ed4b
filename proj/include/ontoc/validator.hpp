#ifndef ONTOC_VALIDATOR_HPP
#define ONTOC_VALIDATOR_HPP

#include <string>
#include <vector>

#include "ontoc/diagnostics.hpp"
#include "ontoc/model.hpp"

namespace ontoc {

struct ValidationReport {
    std::vector<Diagnostic> consistency;
    std::vector<Diagnostic> completeness;
    std::vector<Diagnostic> correctness;
    std::vector<Diagnostic> instance_conformance;
    std::vector<Diagnostic> integrity;

    bool valid() const;
    std::vector<Diagnostic> all() const;
    std::size_t error_count() const;
    std::size_t warning_count() const;
};

// ALIAS (case-only name clashes, synonym annotations), DISJOINT
// (individual in both sides of a disjointness pair).
std::vector<Diagnostic> check_consistency(const PreliminaryModel& model,
                                          const std::vector<IndividualDecl>& individuals);

// UNDECLARED-CLASS, UNDECLARED-TERM, MISSING-INVERSE.
std::vector<Diagnostic> check_completeness(const PreliminaryModel& model);

// CYCLE, BAD-CARDINALITY, SELF-DISJOINT.
std::vector<Diagnostic> check_correctness(const PreliminaryModel& model);

// DOMAIN-VIOLATION, RANGE-VIOLATION, DATATYPE-MISMATCH,
// CARDINALITY-VIOLATION, UNDECLARED-TERM/UNDECLARED-CLASS for names that
// never resolved. Domain/range satisfaction counts subclasses.
std::vector<Diagnostic> check_instance_conformance(const PreliminaryModel& model,
                                                   const std::vector<IndividualDecl>& individuals);

// RULE-VIOLATION, RULE-INAPPLICABLE.
std::vector<Diagnostic> check_integrity_rules(const PreliminaryModel& model,
                                              const std::vector<IndividualDecl>& individuals);

ValidationReport validate_all(const PreliminaryModel& model,
                              const std::vector<IndividualDecl>& individuals);

/// "valid|invalid: E errors, W warnings" followed by the diagnostic lines.
std::string render_report(const ValidationReport& report);

} // namespace ontoc

#endif
