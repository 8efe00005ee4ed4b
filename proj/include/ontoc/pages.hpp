#ifndef ONTOC_PAGES_HPP
#define ONTOC_PAGES_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontoc/diagnostics.hpp"
#include "ontoc/graph.hpp"
#include "ontoc/model.hpp"

namespace ontoc {

inline const std::string machine_begin_marker = "<!-- BEGIN-MACHINE-TEMPLATE -->";
inline const std::string machine_end_marker   = "<!-- END-MACHINE-TEMPLATE -->";

struct TemplateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One segment of a parsed template: literal text, a placeholder, or a
// class loop with nested segments.
struct TemplateNode {
    enum class Kind { Text, Placeholder, RelPlaceholder, MachineSlot, ClassLoop };
    Kind kind = Kind::Text;
    std::string text;                 // Text: verbatim; Placeholder: characteristic name
    std::string class_name;           // ClassLoop
    std::string rel_name;             // RelPlaceholder: relationship
    std::string rel_characteristic;   // RelPlaceholder: characteristic of the target
    std::vector<TemplateNode> children;  // ClassLoop body
};

struct PageTemplate {
    std::string source;
    std::vector<TemplateNode> nodes;
    bool machine_slot_present = false;
};

/// Parses template text. Throws TemplateError on unbalanced loops,
/// missing or duplicated {{machine}} slots, or loops naming an
/// undeclared class.
PageTemplate parse_template(const std::string& source, const PreliminaryModel& model);

struct ClassBuffer {
    PageDecl page;
    // member class -> individuals of that class (via subclass closure),
    // sorted by id
    std::map<std::string, std::vector<IndividualDecl>> entries;
    // the full instance set, for rendering cross-page rel placeholders
    std::vector<IndividualDecl> universe;

    /// All individuals in the buffer, deduplicated, sorted by id.
    std::vector<IndividualDecl> individuals() const;
};

struct SemanticPage {
    std::string path;
    std::string user_section;
    std::string machine_section;  // compact triple syntax
    std::size_t machine_slot_offset = 0;  // byte offset of the slot in user_section
    std::vector<Diagnostic> warnings;

    /// The full document: user section with the machine section embedded
    /// between the sentinel markers at the {{machine}} slot.
    std::string document() const;
};

ClassBuffer build_buffer(const std::vector<IndividualDecl>& individuals,
                         const PageDecl& page,
                         const PreliminaryModel& model);

SemanticPage instantiate_page(const PageTemplate& tmpl,
                              const ClassBuffer& buffer,
                              const PreliminaryModel& model);

/// Returns the text between the machine markers, byte-equal to the
/// machine_section produced at generation time. Throws TemplateError when
/// the marker block is absent or duplicated.
std::string extract_machine_section(const std::string& page_text);

/// Parses the embedded machine section and graph-diffs it against
/// lower_instances of the buffer. Any difference is one INCONSISTENT-PAGE
/// error listing the missing/extra triples.
std::vector<Diagnostic> verify_page_consistency(const std::string& page_text,
                                                const ClassBuffer& buffer,
                                                const PreliminaryModel& model,
                                                const std::string& page_name);

} // namespace ontoc

#endif
