#ifndef ONTOC_PARSER_HPP
#define ONTOC_PARSER_HPP

#include <string>
#include <utility>
#include <vector>

#include "ontoc/diagnostics.hpp"
#include "ontoc/model.hpp"

namespace ontoc {

struct SourceText {
    std::string path;
    std::string content;  // UTF-8
};

SourceText load_source(const std::string& path);

struct ParseResult {
    PreliminaryModel model;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return count_errors(diagnostics) == 0; }
};

struct InstanceParseResult {
    std::vector<IndividualDecl> individuals;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return count_errors(diagnostics) == 0; }
};

/// Parses a `.swm` model file. Recovers at statement granularity; the
/// model is usable iff no error-severity diagnostics were produced.
ParseResult parse_model(const SourceText& src);

/// Parses a `.swi` instance file against an already-parsed model.
/// Unknown term references are warnings; malformed literals and duplicate
/// ids are errors.
InstanceParseResult parse_instances(const SourceText& src, const PreliminaryModel& model);

/// Statement-level pretty printers; re-parsing the output reproduces the
/// input structure field for field.
std::string print_model(const PreliminaryModel& model);
std::string print_instances(const std::vector<IndividualDecl>& individuals);

} // namespace ontoc

#endif
