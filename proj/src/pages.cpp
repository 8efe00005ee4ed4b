#include "ontoc/pages.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ontoc/serializer.hpp"

namespace ontoc {
namespace {

// Sentinel marking where the machine block gets spliced in.
const std::string machine_sentinel = "\x01MACHINE-SLOT\x01";

struct TemplateCursor {
    const std::string& src;
    std::size_t pos = 0;

    bool at_end() const { return pos >= src.size(); }

    // Text up to the next "{{" (or end).
    std::string take_text() {
        std::size_t open = src.find("{{", pos);
        if (open == std::string::npos) open = src.size();
        std::string text = src.substr(pos, open - pos);
        pos = open;
        return text;
    }

    // The directive inside "{{...}}", trimmed.
    std::string take_directive() {
        std::size_t close = src.find("}}", pos);
        if (close == std::string::npos) throw TemplateError("unterminated '{{' directive");
        std::string inner = src.substr(pos + 2, close - pos - 2);
        pos = close + 2;
        auto begin = inner.find_first_not_of(" \t");
        auto end = inner.find_last_not_of(" \t");
        if (begin == std::string::npos) throw TemplateError("empty '{{}}' directive");
        return inner.substr(begin, end - begin + 1);
    }
};

std::vector<TemplateNode> parse_nodes(TemplateCursor& cur, const PreliminaryModel& model,
                                      bool inside_loop, bool& machine_seen) {
    std::vector<TemplateNode> nodes;
    while (!cur.at_end()) {
        std::string text = cur.take_text();
        if (!text.empty()) {
            TemplateNode n;
            n.kind = TemplateNode::Kind::Text;
            n.text = std::move(text);
            nodes.push_back(std::move(n));
        }
        if (cur.at_end()) break;
        std::string directive = cur.take_directive();

        if (directive == "/class") {
            if (!inside_loop) throw TemplateError("'{{/class}}' without an open '{{class:...}}'");
            return nodes;
        }
        if (directive.rfind("class:", 0) == 0) {
            TemplateNode n;
            n.kind = TemplateNode::Kind::ClassLoop;
            n.class_name = directive.substr(6);
            if (!model.find_class(n.class_name))
                throw TemplateError("class loop names undeclared class '" + n.class_name + "'");
            n.children = parse_nodes(cur, model, true, machine_seen);
            nodes.push_back(std::move(n));
            continue;
        }
        if (directive == "machine") {
            if (machine_seen) throw TemplateError("template has more than one '{{machine}}' slot");
            if (inside_loop) throw TemplateError("'{{machine}}' cannot appear inside a class loop");
            machine_seen = true;
            TemplateNode n;
            n.kind = TemplateNode::Kind::MachineSlot;
            nodes.push_back(std::move(n));
            continue;
        }
        if (directive.rfind("rel:", 0) == 0) {
            // rel:r -> t.p
            std::string body = directive.substr(4);
            auto arrow = body.find("->");
            auto dot = body.find('.', arrow == std::string::npos ? 0 : arrow);
            if (arrow == std::string::npos || dot == std::string::npos)
                throw TemplateError("malformed '{{rel:...}}' directive: " + directive);
            auto trim = [](std::string s) {
                auto b = s.find_first_not_of(" \t");
                auto e = s.find_last_not_of(" \t");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            TemplateNode n;
            n.kind = TemplateNode::Kind::RelPlaceholder;
            n.rel_name = trim(body.substr(0, arrow));
            n.rel_characteristic = trim(body.substr(dot + 1));
            nodes.push_back(std::move(n));
            continue;
        }
        TemplateNode n;
        n.kind = TemplateNode::Kind::Placeholder;
        n.text = directive;
        nodes.push_back(std::move(n));
    }
    if (inside_loop) throw TemplateError("unterminated '{{class:...}}' loop");
    return nodes;
}

const Literal* data_value(const IndividualDecl& ind, const std::string& characteristic) {
    for (const auto& da : ind.data_assertions)
        if (da.characteristic == characteristic) return &da.value;
    return nullptr;
}

} // namespace

PageTemplate parse_template(const std::string& source, const PreliminaryModel& model) {
    PageTemplate tmpl;
    tmpl.source = source;
    TemplateCursor cur{source};
    bool machine_seen = false;
    tmpl.nodes = parse_nodes(cur, model, false, machine_seen);
    tmpl.machine_slot_present = machine_seen;
    if (!machine_seen) throw TemplateError("template has no '{{machine}}' slot");
    return tmpl;
}

std::vector<IndividualDecl> ClassBuffer::individuals() const {
    std::vector<IndividualDecl> out;
    std::set<std::string> seen;
    for (const auto& [cls, list] : entries)
        for (const auto& ind : list)
            if (seen.insert(ind.id).second) out.push_back(ind);
    std::sort(out.begin(), out.end(),
              [](const IndividualDecl& a, const IndividualDecl& b) { return a.id < b.id; });
    return out;
}

ClassBuffer build_buffer(const std::vector<IndividualDecl>& individuals,
                         const PageDecl& page,
                         const PreliminaryModel& model) {
    ClassBuffer buffer;
    buffer.page = page;
    buffer.universe = individuals;
    for (const auto& member : page.member_classes) {
        if (!model.find_class(member))
            throw std::invalid_argument("page '" + page.name + "' references undeclared class '" +
                                        member + "'");
        std::vector<IndividualDecl> matching;
        for (const auto& ind : individuals) {
            bool belongs = std::any_of(ind.classes.begin(), ind.classes.end(),
                                       [&](const std::string& c) {
                                           return is_subclass_of(model, c, member);
                                       });
            if (belongs) matching.push_back(ind);
        }
        std::sort(matching.begin(), matching.end(),
                  [](const IndividualDecl& a, const IndividualDecl& b) { return a.id < b.id; });
        buffer.entries[member] = std::move(matching);
    }
    return buffer;
}

namespace {

class PageRenderer {
public:
    PageRenderer(const ClassBuffer& buffer, const PreliminaryModel& model,
                 std::vector<Diagnostic>& warnings)
        : buffer_(buffer), model_(model), warnings_(warnings) {}

    std::string render(const std::vector<TemplateNode>& nodes, const IndividualDecl* current) {
        std::string out;
        for (const auto& n : nodes) {
            switch (n.kind) {
                case TemplateNode::Kind::Text:
                    out += n.text;
                    break;
                case TemplateNode::Kind::MachineSlot:
                    out += machine_sentinel;
                    break;
                case TemplateNode::Kind::ClassLoop: {
                    auto it = buffer_.entries.find(n.class_name);
                    if (it == buffer_.entries.end()) break;  // class not on this page
                    for (const auto& ind : it->second) out += render(n.children, &ind);
                    break;
                }
                case TemplateNode::Kind::Placeholder:
                    out += placeholder(n.text, current);
                    break;
                case TemplateNode::Kind::RelPlaceholder:
                    out += rel_placeholder(n, current);
                    break;
            }
        }
        return out;
    }

private:
    std::string placeholder(const std::string& name, const IndividualDecl* current) {
        if (!model_.find_characteristic(name))
            throw TemplateError("placeholder names undeclared characteristic '" + name + "'");
        if (!current) {
            warnings_.push_back({Severity::Warning, "MISSING-VALUE",
                                 "placeholder '" + name + "' used outside a class loop", {}});
            return "";
        }
        const Literal* value = data_value(*current, name);
        if (!value) {
            warnings_.push_back({Severity::Warning, "MISSING-VALUE",
                                 "individual '" + current->id + "' has no value for '" + name + "'",
                                 {}});
            return "";
        }
        return value->lexical;
    }

    std::string rel_placeholder(const TemplateNode& n, const IndividualDecl* current) {
        if (!model_.find_relationship(n.rel_name))
            throw TemplateError("placeholder names undeclared relationship '" + n.rel_name + "'");
        if (!model_.find_characteristic(n.rel_characteristic))
            throw TemplateError("placeholder names undeclared characteristic '" +
                                n.rel_characteristic + "'");
        if (!current) return "";
        std::vector<std::string> values;
        for (const auto& oa : current->object_assertions) {
            if (oa.relationship != n.rel_name) continue;
            const IndividualDecl* target = nullptr;
            for (const auto& ind : buffer_.universe)
                if (ind.id == oa.target) target = &ind;
            const Literal* value = target ? data_value(*target, n.rel_characteristic) : nullptr;
            if (!value) {
                warnings_.push_back({Severity::Warning, "MISSING-VALUE",
                                     "target '" + oa.target + "' has no value for '" +
                                         n.rel_characteristic + "'",
                                     {}});
                continue;
            }
            values.push_back(value->lexical);
        }
        std::string out;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i) out += ", ";
            out += values[i];
        }
        return out;
    }

    const ClassBuffer& buffer_;
    const PreliminaryModel& model_;
    std::vector<Diagnostic>& warnings_;
};

} // namespace

SemanticPage instantiate_page(const PageTemplate& tmpl,
                              const ClassBuffer& buffer,
                              const PreliminaryModel& model) {
    if (!tmpl.machine_slot_present) throw TemplateError("template has no '{{machine}}' slot");
    SemanticPage page;
    page.path = buffer.page.name + ".html";

    PageRenderer renderer(buffer, model, page.warnings);
    std::string rendered = renderer.render(tmpl.nodes, nullptr);
    page.machine_section = serialize_turtle(lower_instances(buffer.individuals(), model));

    auto slot = rendered.find(machine_sentinel);
    page.user_section = rendered;
    page.user_section.erase(slot, machine_sentinel.size());
    page.machine_slot_offset = slot;
    return page;
}

std::string SemanticPage::document() const {
    std::string block = machine_begin_marker + "\n" + machine_section + machine_end_marker;
    std::string out = user_section;
    out.insert(std::min(machine_slot_offset, out.size()), block);
    return out;
}

std::string extract_machine_section(const std::string& page_text) {
    auto begin = page_text.find(machine_begin_marker);
    if (begin == std::string::npos) throw TemplateError("machine-template markers absent");
    if (page_text.find(machine_begin_marker, begin + 1) != std::string::npos)
        throw TemplateError("more than one machine-template block");
    std::size_t content = begin + machine_begin_marker.size();
    if (content >= page_text.size() || page_text[content] != '\n')
        throw TemplateError("malformed machine-template block");
    ++content;
    auto end = page_text.find(machine_end_marker, content);
    if (end == std::string::npos) throw TemplateError("machine-template block is unterminated");
    return page_text.substr(content, end - content);
}

std::vector<Diagnostic> verify_page_consistency(const std::string& page_text,
                                                const ClassBuffer& buffer,
                                                const PreliminaryModel& model,
                                                const std::string& page_name) {
    std::vector<Diagnostic> diags;
    std::string machine;
    try {
        machine = extract_machine_section(page_text);
    } catch (const TemplateError& e) {
        diags.push_back({Severity::Error, "BAD-MACHINE-SECTION",
                         "page '" + page_name + "': " + e.what(), {}});
        return diags;
    }

    Graph embedded;
    try {
        embedded = parse_turtle(machine);
    } catch (const TurtleParseError& e) {
        diags.push_back({Severity::Error, "BAD-MACHINE-SECTION",
                         "page '" + page_name + "': machine section does not parse: " + e.what(),
                         {"", e.line, e.column}});
        return diags;
    }

    Graph expected = lower_instances(buffer.individuals(), model);
    GraphDiff diff = graph_diff(expected, embedded);
    if (!diff.empty()) {
        std::ostringstream msg;
        msg << "page '" << page_name << "' machine section is out of date: " << diff.only_in_a.size()
            << " missing, " << diff.only_in_b.size() << " extra triples";
        diags.push_back({Severity::Error, "INCONSISTENT-PAGE", msg.str(), {}});
    }
    return diags;
}

} // namespace ontoc
