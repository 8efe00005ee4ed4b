#include "ontoc/serializer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ontoc {
namespace {

bool simple_local(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == '.';
    });
}

// Longest-base prefix match; empty prefix on failure.
bool split_iri(const std::vector<Namespace>& namespaces, const std::string& iri,
               std::string& prefix, std::string& local) {
    const Namespace* best = nullptr;
    for (const auto& ns : namespaces) {
        if (iri.rfind(ns.base, 0) == 0 && (!best || ns.base.size() > best->base.size()))
            best = &ns;
    }
    if (!best) return false;
    local = iri.substr(best->base.size());
    if (!simple_local(local)) return false;
    prefix = best->prefix;
    return true;
}

std::string escape_literal(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string turtle_term(const Graph& g, const Term& t) {
    switch (t.kind) {
        case Term::Kind::Iri: {
            std::string prefix, local;
            if (split_iri(g.namespaces(), t.value, prefix, local))
                return prefix + ":" + local;
            return "<" + t.value + ">";
        }
        case Term::Kind::Blank:
            return "_:" + t.value;
        case Term::Kind::Literal: {
            std::string out = "\"" + escape_literal(t.value) + "\"";
            if (!t.datatype_iri.empty()) {
                std::string prefix, local;
                if (split_iri(g.namespaces(), t.datatype_iri, prefix, local))
                    out += "^^" + prefix + ":" + local;
                else
                    out += "^^<" + t.datatype_iri + ">";
            }
            return out;
        }
    }
    return "";
}

// rdf:type first, then alphabetical by predicate IRI.
bool predicate_before(const Term& a, const Term& b) {
    bool ta = a.value == iri::rdf_type;
    bool tb = b.value == iri::rdf_type;
    if (ta != tb) return ta;
    return a.value < b.value;
}

struct SubjectGroup {
    Term subject;
    // predicate -> objects in canonical order
    std::vector<std::pair<Term, std::vector<Term>>> properties;
};

std::vector<SubjectGroup> group_by_subject(const Graph& g) {
    std::map<Term, std::map<Term, std::vector<Term>>> grouped;
    for (const auto& t : g.triples()) grouped[t.subject][t.predicate].push_back(t.object);

    std::vector<SubjectGroup> out;
    for (auto& [subject, props] : grouped) {
        SubjectGroup sg;
        sg.subject = subject;
        for (auto& [pred, objs] : props) {
            std::sort(objs.begin(), objs.end());
            sg.properties.push_back({pred, std::move(objs)});
        }
        std::sort(sg.properties.begin(), sg.properties.end(),
                  [](const auto& a, const auto& b) { return predicate_before(a.first, b.first); });
        out.push_back(std::move(sg));
    }
    return out;
}

} // namespace

std::string serialize_turtle(const Graph& raw) {
    Graph g = canonicalize_blanks(raw);
    std::ostringstream out;

    std::vector<Namespace> namespaces = g.namespaces();
    std::sort(namespaces.begin(), namespaces.end(),
              [](const Namespace& a, const Namespace& b) { return a.prefix < b.prefix; });
    for (const auto& ns : namespaces)
        out << "@prefix " << ns.prefix << ": <" << ns.base << "> .\n";

    for (const auto& sg : group_by_subject(g)) {
        out << '\n' << turtle_term(g, sg.subject);
        for (std::size_t i = 0; i < sg.properties.size(); ++i) {
            const auto& [pred, objs] = sg.properties[i];
            out << (i == 0 ? " " : " ;\n  ") << turtle_term(g, pred);
            for (std::size_t j = 0; j < objs.size(); ++j)
                out << (j == 0 ? " " : " , ") << turtle_term(g, objs[j]);
        }
        out << " .\n";
    }
    return out.str();
}

namespace {

class TurtleReader {
public:
    explicit TurtleReader(const std::string& text) : text_(text) {}

    Graph run() {
        while (true) {
            skip_trivia();
            if (pos_ >= text_.size()) break;
            if (peek() == '@')
                prefix_directive();
            else
                triples_block();
        }
        std::vector<Namespace> ns;
        for (const auto& [prefix, base] : prefixes_) ns.push_back({prefix, base, false});
        graph_.set_namespaces(std::move(ns));
        return std::move(graph_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw TurtleParseError(msg, line_, col_); }

    char peek(std::size_t off = 0) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }

    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            char c = peek();
            if (c == '#') {
                while (pos_ < text_.size() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        skip_trivia();
        if (pos_ >= text_.size() || peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    std::string read_name() {
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
               peek() == '-' || peek() == '.')
            s += advance();
        // a trailing '.' belongs to the statement, not the name
        while (!s.empty() && s.back() == '.') {
            s.pop_back();
            --pos_;
            --col_;
        }
        return s;
    }

    void prefix_directive() {
        for (const char* kw = "@prefix"; *kw; ++kw)
            if (pos_ >= text_.size() || advance() != *kw) fail("expected @prefix directive");
        skip_trivia();
        std::string prefix = read_name();
        expect(':');
        skip_trivia();
        if (peek() != '<') fail("expected <IRI> in @prefix");
        std::string base = read_iri();
        expect('.');
        prefixes_[prefix] = base;
    }

    std::string read_iri() {
        advance();  // '<'
        std::string s;
        while (pos_ < text_.size() && peek() != '>') {
            char c = advance();
            if (c == '\n') fail("newline inside IRI");
            s += c;
        }
        if (pos_ >= text_.size()) fail("unterminated IRI");
        advance();
        return s;
    }

    Term read_term() {
        skip_trivia();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = peek();
        if (c == '<') return Term::iri(read_iri());
        if (c == '_') {
            advance();
            if (peek() != ':') fail("expected ':' after '_'");
            advance();
            std::string label = read_name();
            if (label.empty()) fail("empty blank node label");
            return Term::blank(label);
        }
        if (c == '"') {
            advance();
            std::string s;
            while (pos_ < text_.size() && peek() != '"') {
                char d = advance();
                if (d == '\n') fail("newline inside literal");
                if (d == '\\') {
                    if (pos_ >= text_.size()) fail("unterminated escape");
                    char e = advance();
                    switch (e) {
                        case 'n': s += '\n'; break;
                        case 't': s += '\t'; break;
                        case '"': s += '"'; break;
                        case '\\': s += '\\'; break;
                        default: fail(std::string("unknown escape '\\") + e + "'");
                    }
                } else {
                    s += d;
                }
            }
            if (pos_ >= text_.size()) fail("unterminated literal");
            advance();
            std::string dtype;
            if (peek() == '^' && peek(1) == '^') {
                advance();
                advance();
                Term t = read_term();
                if (!t.is_iri()) fail("literal datatype must be an IRI");
                dtype = t.value;
            } else {
                dtype = iri::xsd_string;
            }
            return Term::literal(s, dtype);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string prefix = read_name();
            if (peek() != ':') fail("expected ':' in prefixed name");
            advance();
            std::string local = read_name();
            auto it = prefixes_.find(prefix);
            if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
            return Term::iri(it->second + local);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    void triples_block() {
        Term subject = read_term();
        if (subject.is_literal()) fail("subject cannot be a literal");
        while (true) {
            Term predicate = read_term();
            if (!predicate.is_iri()) fail("predicate must be an IRI");
            while (true) {
                Term object = read_term();
                graph_.insert({subject, predicate, object});
                skip_trivia();
                if (peek() == ',') {
                    advance();
                    continue;
                }
                break;
            }
            skip_trivia();
            if (peek() == ';') {
                advance();
                skip_trivia();
                // tolerate a dangling ';' before '.'
                if (peek() == '.') {
                    advance();
                    return;
                }
                continue;
            }
            if (peek() == '.') {
                advance();
                return;
            }
            fail("expected ';' or '.' after object");
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    std::map<std::string, std::string> prefixes_;
    Graph graph_;
};

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

Graph parse_turtle(const std::string& text) {
    return TurtleReader(text).run();
}

std::string format_turtle_term(const Graph& g, const Term& t) {
    return turtle_term(g, t);
}

namespace {

class RdfXmlWriter {
public:
    RdfXmlWriter(const Graph& g, std::string version_info)
        : g_(g), version_info_(std::move(version_info)) {
        for (const auto& t : g_.triples()) {
            if (t.object.is_blank()) ++blank_object_refs_[t.object.value];
        }
    }

    std::string run() {
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out_ << "<rdf:RDF";
        std::vector<Namespace> namespaces = g_.namespaces();
        std::sort(namespaces.begin(), namespaces.end(),
                  [](const Namespace& a, const Namespace& b) { return a.prefix < b.prefix; });
        for (const auto& ns : namespaces)
            out_ << "\n    xmlns:" << ns.prefix << "=\"" << xml_escape(ns.base) << "\"";
        out_ << ">\n";
        out_ << "  <owl:Ontology rdf:about=\"\">\n";
        out_ << "    <owl:versionInfo rdf:datatype=\"" << xml_escape(iri::xsd_string) << "\">"
             << xml_escape(version_info_) << "</owl:versionInfo>\n";
        out_ << "  </owl:Ontology>\n";

        for (const auto& sg : group_by_subject(g_)) {
            // blank subjects inlined exactly once at their object site
            if (sg.subject.is_blank() && blank_object_refs_[sg.subject.value] == 1) continue;
            emit_subject(sg, 1);
        }
        out_ << "</rdf:RDF>\n";
        return out_.str();
    }

private:
    std::string qname(const std::string& iri_text) {
        std::string prefix, local;
        if (!split_iri(g_.namespaces(), iri_text, prefix, local))
            throw std::runtime_error("no namespace prefix covers IRI <" + iri_text + ">");
        return prefix + ":" + local;
    }

    void indent(int depth) {
        for (int i = 0; i < depth; ++i) out_ << "  ";
    }

    const SubjectGroup* group_for_blank(const std::string& label) {
        for (const auto& sg : groups_cache()) {
            if (sg.subject.is_blank() && sg.subject.value == label) return &sg;
        }
        return nullptr;
    }

    const std::vector<SubjectGroup>& groups_cache() {
        if (groups_.empty()) groups_ = group_by_subject(g_);
        return groups_;
    }

    // Detects an owl:unionOf class node and returns the listed member
    // IRIs, or nullopt when the blank is not that shape.
    std::optional<std::vector<std::string>> union_members(const SubjectGroup& sg) {
        const std::vector<Term>* head = nullptr;
        for (const auto& [pred, objs] : sg.properties)
            if (pred.value == iri::owl_unionof) head = &objs;
        if (!head || head->size() != 1) return std::nullopt;

        std::vector<std::string> members;
        Term cell = head->front();
        while (!(cell.is_iri() && cell.value == iri::rdf_nil)) {
            if (!cell.is_blank()) return std::nullopt;
            const SubjectGroup* cg = group_for_blank(cell.value);
            if (!cg) return std::nullopt;
            Term first, rest;
            bool have_first = false, have_rest = false;
            for (const auto& [pred, objs] : cg->properties) {
                if (pred.value == iri::rdf_first && objs.size() == 1) {
                    first = objs.front();
                    have_first = true;
                }
                if (pred.value == iri::rdf_rest && objs.size() == 1) {
                    rest = objs.front();
                    have_rest = true;
                }
            }
            if (!have_first || !have_rest || !first.is_iri()) return std::nullopt;
            members.push_back(first.value);
            cell = rest;
        }
        return members;
    }

    void emit_subject(const SubjectGroup& sg, int depth) {
        // element name from the first rdf:type when available
        std::string element = "rdf:Description";
        std::vector<Term> extra_types;
        std::vector<std::pair<Term, std::vector<Term>>> props;
        for (const auto& [pred, objs] : sg.properties) {
            if (pred.value == iri::rdf_type) {
                for (const auto& o : objs) {
                    std::string prefix, local;
                    if (element == "rdf:Description" && o.is_iri() &&
                        split_iri(g_.namespaces(), o.value, prefix, local))
                        element = prefix + ":" + local;
                    else
                        extra_types.push_back(o);
                }
            } else {
                props.push_back({pred, objs});
            }
        }

        indent(depth);
        out_ << '<' << element;
        if (sg.subject.is_iri())
            out_ << " rdf:about=\"" << xml_escape(sg.subject.value) << "\"";
        else
            out_ << " rdf:nodeID=\"" << xml_escape(sg.subject.value) << "\"";
        if (props.empty() && extra_types.empty()) {
            out_ << "/>\n";
            return;
        }
        out_ << ">\n";
        for (const auto& t : extra_types) {
            indent(depth + 1);
            out_ << "<rdf:type rdf:resource=\"" << xml_escape(t.value) << "\"/>\n";
        }
        for (const auto& [pred, objs] : props)
            for (const auto& obj : objs) emit_property(pred, obj, depth + 1);
        indent(depth);
        out_ << "</" << element << ">\n";
    }

    void emit_property(const Term& pred, const Term& obj, int depth) {
        std::string name = qname(pred.value);
        indent(depth);
        switch (obj.kind) {
            case Term::Kind::Iri:
                out_ << '<' << name << " rdf:resource=\"" << xml_escape(obj.value) << "\"/>\n";
                return;
            case Term::Kind::Literal:
                out_ << '<' << name;
                if (!obj.datatype_iri.empty())
                    out_ << " rdf:datatype=\"" << xml_escape(obj.datatype_iri) << "\"";
                out_ << '>' << xml_escape(obj.value) << "</" << name << ">\n";
                return;
            case Term::Kind::Blank: break;
        }

        const SubjectGroup* bg = group_for_blank(obj.value);
        if (bg && blank_object_refs_[obj.value] == 1) {
            if (auto members = union_members(*bg)) {
                out_ << '<' << name << ">\n";
                indent(depth + 1);
                out_ << "<owl:Class>\n";
                indent(depth + 2);
                out_ << "<owl:unionOf rdf:parseType=\"Collection\">\n";
                for (const auto& m : *members) {
                    indent(depth + 3);
                    out_ << "<owl:Class rdf:about=\"" << xml_escape(m) << "\"/>\n";
                }
                indent(depth + 2);
                out_ << "</owl:unionOf>\n";
                indent(depth + 1);
                out_ << "</owl:Class>\n";
                indent(depth);
                out_ << "</" << name << ">\n";
                return;
            }
            out_ << '<' << name << ">\n";
            emit_subject(*bg, depth + 1);
            indent(depth);
            out_ << "</" << name << ">\n";
            return;
        }
        out_ << '<' << name << " rdf:nodeID=\"" << xml_escape(obj.value) << "\"/>\n";
    }

    const Graph& g_;
    std::string version_info_;
    std::ostringstream out_;
    std::map<std::string, int> blank_object_refs_;
    std::vector<SubjectGroup> groups_;
};

} // namespace

std::string serialize_rdfxml(const Graph& raw, const std::string& version_info) {
    Graph g = canonicalize_blanks(raw);
    return RdfXmlWriter(g, version_info).run();
}

} // namespace ontoc
