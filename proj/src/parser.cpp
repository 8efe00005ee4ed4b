#include "ontoc/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ontoc {
namespace {

struct Token {
    enum class Kind { End, Ident, String, Number, Date, Iri, Punct, Bad };
    Kind kind = Kind::End;
    std::string text;  // unescaped for strings, bare IRI for Iri
    int line = 0;
    int col = 0;
};

bool valid_date(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (int i : {0, 1, 2, 3, 5, 6, 8, 9})
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    int y = std::stoi(s.substr(0, 4));
    int m = std::stoi(s.substr(5, 2));
    int d = std::stoi(s.substr(8, 2));
    if (m < 1 || m > 12 || d < 1) return false;
    static const int days[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    int limit = days[m - 1];
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    if (m == 2 && leap) limit = 29;
    return d <= limit;
}

bool date_shaped(const std::string& s) {
    return s.size() == 10 && s[4] == '-' && s[7] == '-';
}

class Lexer {
public:
    Lexer(const std::string& text, const std::string& file, int line_base = 1)
        : text_(text), file_(file), line_(line_base) {}

    std::vector<Token> run(std::vector<Diagnostic>& diags) {
        std::vector<Token> tokens;
        while (true) {
            Token t = next(diags);
            if (t.kind == Token::Kind::End) break;
            if (t.kind == Token::Kind::Bad) continue;
            tokens.push_back(t);
        }
        return tokens;
    }

private:
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

    // An '<' opens an IRI when a '>' arrives before whitespace.
    bool looks_like_iri() const {
        for (std::size_t i = pos_ + 1; i < text_.size(); ++i) {
            char c = text_[i];
            if (c == '>') return true;
            if (std::isspace(static_cast<unsigned char>(c))) return false;
        }
        return false;
    }

    Token next(std::vector<Diagnostic>& diags) {
        skip_trivia();
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line_, col_};
        int line = line_, col = col_;
        char c = peek();

        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string s;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                s += advance();
            return {Token::Kind::Ident, s, line, col};
        }

        if (std::isdigit(static_cast<unsigned char>(c)) ||
            ((c == '+' || c == '-') && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            std::string s;
            if (c == '+' || c == '-') s += advance();
            while (std::isdigit(static_cast<unsigned char>(peek())) ||
                   (peek() == '-' && std::isdigit(static_cast<unsigned char>(peek(1)))))
                s += advance();
            if (date_shaped(s)) {
                if (!valid_date(s)) {
                    diags.push_back({Severity::Error, "MALFORMED-LITERAL",
                                     "'" + s + "' is not a valid calendar date",
                                     {file_, line, col}});
                    return {Token::Kind::Bad, s, line, col};
                }
                return {Token::Kind::Date, s, line, col};
            }
            if (s.find('-', 1) != std::string::npos) {
                diags.push_back({Severity::Error, "MALFORMED-LITERAL",
                                 "malformed numeric or date literal '" + s + "'",
                                 {file_, line, col}});
                return {Token::Kind::Bad, s, line, col};
            }
            return {Token::Kind::Number, s, line, col};
        }

        if (c == '"') {
            advance();
            std::string s;
            while (pos_ < text_.size() && peek() != '"' && peek() != '\n') {
                char d = advance();
                if (d == '\\' && pos_ < text_.size()) {
                    char e = advance();
                    switch (e) {
                        case 'n': s += '\n'; break;
                        case 't': s += '\t'; break;
                        case '"': s += '"'; break;
                        case '\\': s += '\\'; break;
                        default:
                            diags.push_back({Severity::Error, "LEX",
                                             std::string("unknown escape '\\") + e + "'",
                                             {file_, line_, col_}});
                    }
                } else {
                    s += d;
                }
            }
            if (pos_ >= text_.size() || peek() != '"') {
                diags.push_back({Severity::Error, "LEX", "unterminated string literal",
                                 {file_, line, col}});
                return {Token::Kind::Bad, s, line, col};
            }
            advance();
            return {Token::Kind::String, s, line, col};
        }

        if (c == '<' && looks_like_iri()) {
            advance();
            std::string s;
            while (pos_ < text_.size() && peek() != '>') s += advance();
            advance();
            return {Token::Kind::Iri, s, line, col};
        }

        // punctuation
        if (c == '-' && peek(1) == '>') {
            advance();
            advance();
            return {Token::Kind::Punct, "->", line, col};
        }
        for (const char* two : {"<=", ">=", "!="}) {
            if (c == two[0] && peek(1) == two[1]) {
                advance();
                advance();
                return {Token::Kind::Punct, two, line, col};
            }
        }
        if (std::string("=,:{}.<>").find(c) != std::string::npos) {
            advance();
            return {Token::Kind::Punct, std::string(1, c), line, col};
        }

        diags.push_back({Severity::Error, "LEX",
                         std::string("unexpected character '") + c + "'", {file_, line, col}});
        advance();
        return {Token::Kind::Bad, std::string(1, c), line, col};
    }

    const std::string& text_;
    std::string file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// Cursor over one statement's tokens.
class Cursor {
public:
    Cursor(std::vector<Token> tokens, std::string file, int line)
        : tokens_(std::move(tokens)), file_(std::move(file)), line_(line) {}

    const Token& peek() const {
        static Token end{Token::Kind::End, "", 0, 0};
        return idx_ < tokens_.size() ? tokens_[idx_] : end;
    }

    Token take() {
        Token t = peek();
        if (idx_ < tokens_.size()) ++idx_;
        return t;
    }

    bool at_end() const { return idx_ >= tokens_.size(); }

    bool accept_ident(const std::string& kw) {
        if (peek().kind == Token::Kind::Ident && peek().text == kw) {
            ++idx_;
            return true;
        }
        return false;
    }

    bool accept_punct(const std::string& p) {
        if (peek().kind == Token::Kind::Punct && peek().text == p) {
            ++idx_;
            return true;
        }
        return false;
    }

    SourceLoc loc() const {
        const Token& t = peek();
        if (t.kind == Token::Kind::End)
            return {file_, tokens_.empty() ? line_ : tokens_.back().line,
                    tokens_.empty() ? 1 : tokens_.back().col};
        return {file_, t.line, t.col};
    }

private:
    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
    std::string file_;
    int line_;
};

struct StatementError : std::runtime_error {
    SourceLoc loc;
    StatementError(std::string msg, SourceLoc l) : std::runtime_error(std::move(msg)), loc(std::move(l)) {}
};

std::string expect_ident(Cursor& c, const std::string& what) {
    if (c.peek().kind != Token::Kind::Ident)
        throw StatementError("expected " + what, c.loc());
    return c.take().text;
}

void expect_punct(Cursor& c, const std::string& p) {
    if (!c.accept_punct(p)) throw StatementError("expected '" + p + "'", c.loc());
}

std::string expect_string(Cursor& c, const std::string& what) {
    if (c.peek().kind != Token::Kind::String)
        throw StatementError("expected " + what, c.loc());
    return c.take().text;
}

std::vector<std::string> ident_list(Cursor& c, const std::string& what) {
    std::vector<std::string> out;
    out.push_back(expect_ident(c, what));
    while (c.accept_punct(",")) out.push_back(expect_ident(c, what));
    return out;
}

bool valid_namespace_base(const std::string& base) {
    if (base.empty()) return false;
    if (base.back() != '#' && base.back() != '/') return false;
    auto colon = base.find(':');
    if (colon == std::string::npos || colon == 0) return false;
    if (!std::isalpha(static_cast<unsigned char>(base[0]))) return false;
    for (std::size_t i = 1; i < colon; ++i) {
        char ch = base[i];
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '+' && ch != '-' && ch != '.')
            return false;
    }
    return true;
}

class ModelParser {
public:
    explicit ModelParser(const SourceText& src) : src_(src) {}

    ParseResult run() {
        std::istringstream in(src_.content);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            Lexer lex(line, src_.path, lineno);
            std::vector<Diagnostic> lex_diags;
            std::vector<Token> tokens = lex.run(lex_diags);
            diags_.insert(diags_.end(), lex_diags.begin(), lex_diags.end());
            if (!lex_diags.empty() && count_errors(lex_diags) > 0) continue;
            if (tokens.empty()) continue;
            Cursor c(std::move(tokens), src_.path, lineno);
            try {
                statement(c);
            } catch (const StatementError& e) {
                diags_.push_back({Severity::Error, "SYNTAX", e.what(), e.loc});
            }
        }
        return {std::move(model_), std::move(diags_)};
    }

private:
    void statement(Cursor& c) {
        SourceLoc start = c.loc();
        if (c.accept_ident("namespace")) return namespace_stmt(c, start);
        if (c.accept_ident("class")) return class_stmt(c, start);
        if (c.accept_ident("disjoint")) return disjoint_stmt(c, start);
        if (c.accept_ident("relationship")) return relationship_stmt(c, start);
        if (c.accept_ident("characteristic")) return characteristic_stmt(c, start);
        if (c.accept_ident("axiom")) return axiom_stmt(c, start);
        if (c.accept_ident("integrity")) return integrity_stmt(c, start);
        if (c.accept_ident("page")) return page_stmt(c, start);
        if (c.accept_ident("synonym")) return synonym_stmt(c, start);
        throw StatementError("unknown top-level keyword '" + c.peek().text + "'", start);
    }

    void finish(Cursor& c) {
        if (!c.at_end())
            throw StatementError("unexpected trailing token '" + c.peek().text + "'", c.loc());
    }

    void duplicate(const std::string& kind, const std::string& name, const SourceLoc& loc) {
        diags_.push_back({Severity::Error, "DUPLICATE-DECL",
                          kind + " '" + name + "' declared twice", loc});
    }

    void namespace_stmt(Cursor& c, const SourceLoc& start) {
        Namespace ns;
        ns.prefix = expect_ident(c, "namespace prefix");
        expect_punct(c, "=");
        if (c.peek().kind != Token::Kind::Iri)
            throw StatementError("expected <IRI> namespace base", c.loc());
        ns.base = c.take().text;
        ns.is_default = c.accept_ident("default");
        finish(c);
        if (!valid_namespace_base(ns.base))
            throw StatementError("namespace base must be an absolute IRI ending in '#' or '/'", start);
        for (const auto& existing : model_.namespaces)
            if (existing.prefix == ns.prefix) return duplicate("namespace", ns.prefix, start);
        model_.namespaces.push_back(std::move(ns));
    }

    void class_stmt(Cursor& c, const SourceLoc& start) {
        ClassDecl decl;
        decl.loc = start;
        decl.name = expect_ident(c, "class name");
        if (c.accept_ident("subclassOf")) decl.superclasses = ident_list(c, "superclass name");
        if (c.peek().kind == Token::Kind::String) decl.description = c.take().text;
        finish(c);
        for (const auto& super : decl.superclasses)
            if (super == decl.name)
                throw StatementError("class '" + decl.name + "' lists itself as a superclass", start);
        if (model_.find_class(decl.name)) return duplicate("class", decl.name, start);
        model_.classes.push_back(std::move(decl));
    }

    void disjoint_stmt(Cursor& c, const SourceLoc& start) {
        DisjointnessDecl decl;
        decl.loc = start;
        decl.members.push_back(expect_ident(c, "class name"));
        while (!c.at_end()) {
            c.accept_punct(",");
            decl.members.push_back(expect_ident(c, "class name"));
        }
        if (decl.members.size() < 2)
            throw StatementError("disjointness needs at least two classes", start);
        std::set<std::string> unique(decl.members.begin(), decl.members.end());
        if (unique.size() != decl.members.size())
            throw StatementError("disjointness members must be pairwise distinct", start);
        model_.disjointness.push_back(std::move(decl));
    }

    void relationship_stmt(Cursor& c, const SourceLoc& start) {
        RelationshipDecl decl;
        decl.loc = start;
        decl.name = expect_ident(c, "relationship name");
        if (!c.accept_ident("domain")) throw StatementError("expected 'domain'", c.loc());
        decl.domain_classes = ident_list(c, "domain class");
        if (!c.accept_ident("range")) throw StatementError("expected 'range'", c.loc());
        decl.range_classes = ident_list(c, "range class");
        while (!c.at_end()) {
            if (c.accept_ident("inverse")) {
                decl.inverse_name = expect_ident(c, "inverse name");
            } else if (c.accept_ident("min")) {
                decl.min_cardinality = take_count(c);
            } else if (c.accept_ident("max")) {
                decl.max_cardinality = take_count(c);
            } else {
                throw StatementError("unexpected token '" + c.peek().text + "'", c.loc());
            }
        }
        if (decl.inverse_name && *decl.inverse_name == decl.name)
            throw StatementError("relationship '" + decl.name + "' cannot be its own inverse", start);
        if (model_.find_relationship(decl.name))
            return duplicate("relationship", decl.name, start);
        model_.relationships.push_back(std::move(decl));
    }

    long long take_count(Cursor& c) {
        if (c.peek().kind != Token::Kind::Number)
            throw StatementError("expected a non-negative integer", c.loc());
        Token t = c.take();
        long long v = 0;
        try {
            v = std::stoll(t.text);
        } catch (const std::out_of_range&) {
            throw StatementError("cardinality out of range", {src_.path, t.line, t.col});
        }
        if (v < 0) throw StatementError("cardinality must be non-negative", {src_.path, t.line, t.col});
        return v;
    }

    void characteristic_stmt(Cursor& c, const SourceLoc& start) {
        CharacteristicDecl decl;
        decl.loc = start;
        decl.name = expect_ident(c, "characteristic name");
        if (!c.accept_ident("domain")) throw StatementError("expected 'domain'", c.loc());
        decl.domain_classes = ident_list(c, "domain class");
        if (!c.accept_ident("datatype")) throw StatementError("expected 'datatype'", c.loc());
        std::string dt = expect_ident(c, "datatype name");
        auto parsed = datatype_from_name(dt);
        if (!parsed)
            throw StatementError("unknown datatype '" + dt + "' (string, number, date, pageURI)", start);
        decl.datatype = *parsed;
        finish(c);
        if (model_.find_characteristic(decl.name))
            return duplicate("characteristic", decl.name, start);
        model_.characteristics.push_back(std::move(decl));
    }

    void axiom_stmt(Cursor& c, const SourceLoc& start) {
        Axiom ax;
        ax.loc = start;
        ax.text = expect_string(c, "axiom sentence");
        if (!c.accept_ident("uses")) throw StatementError("expected 'uses'", c.loc());
        ax.referenced_terms = ident_list(c, "referenced term");
        finish(c);
        model_.axioms.push_back(std::move(ax));
    }

    void integrity_stmt(Cursor& c, const SourceLoc& start) {
        IntegrityRule rule;
        rule.loc = start;
        rule.relationship = expect_ident(c, "relationship name");
        expect_punct(c, ":");
        if (!c.accept_ident("subject")) throw StatementError("expected 'subject'", c.loc());
        expect_punct(c, ".");
        rule.subject_characteristic = expect_ident(c, "characteristic name");
        rule.comparator = take_comparator(c);
        if (!c.accept_ident("object")) throw StatementError("expected 'object'", c.loc());
        expect_punct(c, ".");
        rule.object_characteristic = expect_ident(c, "characteristic name");
        finish(c);
        model_.rules.push_back(std::move(rule));
    }

    Comparator take_comparator(Cursor& c) {
        if (c.peek().kind != Token::Kind::Punct)
            throw StatementError("expected a comparator", c.loc());
        std::string p = c.take().text;
        if (p == "<") return Comparator::Less;
        if (p == "<=") return Comparator::LessEq;
        if (p == "=") return Comparator::Eq;
        if (p == ">=") return Comparator::GreaterEq;
        if (p == ">") return Comparator::Greater;
        if (p == "!=") return Comparator::NotEq;
        throw StatementError("unknown comparator '" + p + "'", c.loc());
    }

    void page_stmt(Cursor& c, const SourceLoc& start) {
        PageDecl decl;
        decl.loc = start;
        decl.name = expect_ident(c, "page name");
        if (!c.accept_ident("classes")) throw StatementError("expected 'classes'", c.loc());
        decl.member_classes = ident_list(c, "member class");
        if (!c.accept_ident("template")) throw StatementError("expected 'template'", c.loc());
        decl.template_path = expect_string(c, "template path");
        finish(c);
        std::set<std::string> unique(decl.member_classes.begin(), decl.member_classes.end());
        if (unique.size() != decl.member_classes.size())
            throw StatementError("page lists a class more than once", start);
        if (model_.find_page(decl.name)) return duplicate("page", decl.name, start);
        model_.pages.push_back(std::move(decl));
    }

    void synonym_stmt(Cursor& c, const SourceLoc& start) {
        SynonymDecl decl;
        decl.loc = start;
        decl.left = expect_ident(c, "term name");
        expect_punct(c, "=");
        decl.right = expect_ident(c, "term name");
        finish(c);
        model_.synonyms.push_back(std::move(decl));
    }

    const SourceText& src_;
    PreliminaryModel model_;
    std::vector<Diagnostic> diags_;
};

class InstanceParser {
public:
    InstanceParser(const SourceText& src, const PreliminaryModel& model)
        : src_(src), model_(model) {}

    InstanceParseResult run() {
        Lexer lex(src_.content, src_.path);
        tokens_ = lex.run(diags_);
        while (idx_ < tokens_.size()) {
            try {
                individual();
            } catch (const StatementError& e) {
                diags_.push_back({Severity::Error, "SYNTAX", e.what(), e.loc});
                recover();
            }
        }
        return {std::move(individuals_), std::move(diags_)};
    }

private:
    const Token& peek(std::size_t off = 0) const {
        static Token end{Token::Kind::End, "", 0, 0};
        return idx_ + off < tokens_.size() ? tokens_[idx_ + off] : end;
    }

    Token take() {
        Token t = peek();
        if (idx_ < tokens_.size()) ++idx_;
        return t;
    }

    SourceLoc loc() const {
        const Token& t = peek();
        if (t.kind == Token::Kind::End) {
            if (tokens_.empty()) return {src_.path, 1, 1};
            return {src_.path, tokens_.back().line, tokens_.back().col};
        }
        return {src_.path, t.line, t.col};
    }

    bool accept_punct(const std::string& p) {
        if (peek().kind == Token::Kind::Punct && peek().text == p) {
            ++idx_;
            return true;
        }
        return false;
    }

    std::string want_ident(const std::string& what) {
        if (peek().kind != Token::Kind::Ident) throw StatementError("expected " + what, loc());
        return take().text;
    }

    void want_punct(const std::string& p) {
        if (!accept_punct(p)) throw StatementError("expected '" + p + "'", loc());
    }

    void recover() {
        while (idx_ < tokens_.size() &&
               !(peek().kind == Token::Kind::Ident && peek().text == "individual"))
            ++idx_;
    }

    void warn_unknown(const std::string& what, const std::string& name, const SourceLoc& l) {
        diags_.push_back({Severity::Warning, "UNKNOWN-NAME",
                          what + " '" + name + "' is not declared in the model", l});
    }

    void individual() {
        SourceLoc start = loc();
        if (!(peek().kind == Token::Kind::Ident && peek().text == "individual"))
            throw StatementError("expected 'individual'", start);
        take();
        IndividualDecl decl;
        decl.loc = start;
        decl.id = want_ident("individual id");
        want_punct(":");
        decl.classes.push_back(want_ident("class name"));
        while (accept_punct(",")) decl.classes.push_back(want_ident("class name"));
        for (const auto& cls : decl.classes)
            if (!model_.find_class(cls)) warn_unknown("class", cls, start);
        want_punct("{");
        while (!accept_punct("}")) {
            if (peek().kind == Token::Kind::End)
                throw StatementError("unterminated individual block", loc());
            assertion(decl);
        }
        for (const auto& existing : individuals_) {
            if (existing.id == decl.id) {
                diags_.push_back({Severity::Error, "DUPLICATE-INDIVIDUAL",
                                  "individual '" + decl.id + "' declared twice", start});
                return;
            }
        }
        individuals_.push_back(std::move(decl));
    }

    void assertion(IndividualDecl& decl) {
        SourceLoc start = loc();
        std::string name = want_ident("assertion name");
        if (accept_punct("->")) {
            ObjectAssertion oa;
            oa.loc = start;
            oa.relationship = name;
            oa.target = want_ident("target individual id");
            if (!model_.find_relationship(name)) warn_unknown("relationship", name, start);
            decl.object_assertions.push_back(std::move(oa));
            return;
        }
        want_punct("=");
        DataAssertion da;
        da.loc = start;
        da.characteristic = name;
        da.value = literal();
        if (!model_.find_characteristic(name)) warn_unknown("characteristic", name, start);
        decl.data_assertions.push_back(std::move(da));
    }

    Literal literal() {
        const Token& t = peek();
        switch (t.kind) {
            case Token::Kind::String: return {Datatype::String, take().text};
            case Token::Kind::Number: return {Datatype::Number, take().text};
            case Token::Kind::Date: return {Datatype::Date, take().text};
            case Token::Kind::Iri: return {Datatype::PageUri, take().text};
            default:
                throw StatementError("expected a literal value", loc());
        }
    }

    const SourceText& src_;
    const PreliminaryModel& model_;
    std::vector<Token> tokens_;
    std::size_t idx_ = 0;
    std::vector<IndividualDecl> individuals_;
    std::vector<Diagnostic> diags_;
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string print_literal(const Literal& lit) {
    switch (lit.datatype) {
        case Datatype::String: return quote(lit.lexical);
        case Datatype::Number: return lit.lexical;
        case Datatype::Date: return lit.lexical;
        case Datatype::PageUri: return "<" + lit.lexical + ">";
    }
    return quote(lit.lexical);
}

} // namespace

SourceText load_source(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return {path, buf.str()};
}

ParseResult parse_model(const SourceText& src) {
    return ModelParser(src).run();
}

InstanceParseResult parse_instances(const SourceText& src, const PreliminaryModel& model) {
    return InstanceParser(src, model).run();
}

std::string print_model(const PreliminaryModel& model) {
    std::ostringstream out;
    for (const auto& ns : model.namespaces) {
        out << "namespace " << ns.prefix << " = <" << ns.base << ">";
        if (ns.is_default) out << " default";
        out << '\n';
    }
    for (const auto& c : model.classes) {
        out << "class " << c.name;
        if (!c.superclasses.empty()) out << " subclassOf " << join(c.superclasses, ", ");
        if (!c.description.empty()) out << ' ' << quote(c.description);
        out << '\n';
    }
    for (const auto& d : model.disjointness) out << "disjoint " << join(d.members, " ") << '\n';
    for (const auto& r : model.relationships) {
        out << "relationship " << r.name << " domain " << join(r.domain_classes, ", ")
            << " range " << join(r.range_classes, ", ");
        if (r.inverse_name) out << " inverse " << *r.inverse_name;
        if (r.min_cardinality) out << " min " << *r.min_cardinality;
        if (r.max_cardinality) out << " max " << *r.max_cardinality;
        out << '\n';
    }
    for (const auto& c : model.characteristics)
        out << "characteristic " << c.name << " domain " << join(c.domain_classes, ", ")
            << " datatype " << datatype_name(c.datatype) << '\n';
    for (const auto& a : model.axioms)
        out << "axiom " << quote(a.text) << " uses " << join(a.referenced_terms, ", ") << '\n';
    for (const auto& r : model.rules)
        out << "integrity " << r.relationship << " : subject." << r.subject_characteristic << ' '
            << comparator_symbol(r.comparator) << " object." << r.object_characteristic << '\n';
    for (const auto& p : model.pages)
        out << "page " << p.name << " classes " << join(p.member_classes, ", ") << " template "
            << quote(p.template_path) << '\n';
    for (const auto& s : model.synonyms) out << "synonym " << s.left << " = " << s.right << '\n';
    return out.str();
}

std::string print_instances(const std::vector<IndividualDecl>& individuals) {
    std::ostringstream out;
    for (const auto& ind : individuals) {
        out << "individual " << ind.id << " : " << join(ind.classes, ", ") << " {\n";
        for (const auto& da : ind.data_assertions)
            out << "  " << da.characteristic << " = " << print_literal(da.value) << '\n';
        for (const auto& oa : ind.object_assertions)
            out << "  " << oa.relationship << " -> " << oa.target << '\n';
        out << "}\n";
    }
    return out.str();
}

} // namespace ontoc
