#include "ontoc/diagnostics.hpp"

#include <algorithm>
#include <sstream>

namespace ontoc {

std::string render_diagnostic(const Diagnostic& d) {
    std::ostringstream out;
    out << d.location.file << ':' << d.location.line << ':' << d.location.column << ": "
        << (d.severity == Severity::Error ? "error" : "warning") << '[' << d.code << "]: "
        << d.message;
    return out.str();
}

std::string render_diagnostics(std::vector<Diagnostic> diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.location.file, a.location.line, a.location.column, a.code) <
               std::tie(b.location.file, b.location.line, b.location.column, b.code);
    });
    std::string out;
    for (const auto& d : diags) {
        out += render_diagnostic(d);
        out += '\n';
    }
    return out;
}

std::size_t count_errors(const std::vector<Diagnostic>& diags) {
    return static_cast<std::size_t>(std::count_if(diags.begin(), diags.end(), [](const Diagnostic& d) {
        return d.severity == Severity::Error;
    }));
}

std::size_t count_warnings(const std::vector<Diagnostic>& diags) {
    return diags.size() - count_errors(diags);
}

void sort_by_code(std::vector<Diagnostic>& diags) {
    std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.code, a.location) < std::tie(b.code, b.location);
    });
}

} // namespace ontoc
