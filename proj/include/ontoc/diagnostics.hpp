#ifndef ONTOC_DIAGNOSTICS_HPP
#define ONTOC_DIAGNOSTICS_HPP

#include <string>
#include <vector>

namespace ontoc {

struct SourceLoc {
    std::string file;
    int line = 0;
    int column = 0;

    auto operator<=>(const SourceLoc&) const = default;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;     // stable identifier, e.g. "DISJOINT"
    std::string message;
    SourceLoc location;
};

/// Renders one diagnostic as "file:line:col: severity[code]: message".
std::string render_diagnostic(const Diagnostic& d);

/// Renders all diagnostics, one per line, sorted by (file, line, column).
std::string render_diagnostics(std::vector<Diagnostic> diags);

std::size_t count_errors(const std::vector<Diagnostic>& diags);
std::size_t count_warnings(const std::vector<Diagnostic>& diags);

/// Sorts by (code, location) — the emission order used by the validator.
void sort_by_code(std::vector<Diagnostic>& diags);

} // namespace ontoc

#endif
