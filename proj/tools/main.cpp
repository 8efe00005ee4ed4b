#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ontoc/graph.hpp"
#include "ontoc/pages.hpp"
#include "ontoc/parser.hpp"
#include "ontoc/serializer.hpp"
#include "ontoc/validator.hpp"

namespace fs = std::filesystem;
using namespace ontoc;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_invalid = 2;
constexpr int exit_usage = 64;

struct CliError : std::runtime_error {
    int code;
    CliError(std::string msg, int code_) : std::runtime_error(std::move(msg)), code(code_) {}
};

struct LoadedModel {
    PreliminaryModel model;
    std::vector<IndividualDecl> individuals;
};

// Parses model (and optional instance) files; prints diagnostics to
// stderr; throws CliError(exit_failure) on parse errors.
LoadedModel load_inputs(const std::string& model_path, const std::optional<std::string>& data_path) {
    LoadedModel out;
    ParseResult parsed = parse_model(load_source(model_path));
    std::cerr << render_diagnostics(parsed.diagnostics);
    if (!parsed.ok()) throw CliError("model file has parse errors", exit_failure);
    out.model = std::move(parsed.model);

    if (data_path) {
        InstanceParseResult instances = parse_instances(load_source(*data_path), out.model);
        std::cerr << render_diagnostics(instances.diagnostics);
        if (!instances.ok()) throw CliError("instance file has parse errors", exit_failure);
        out.individuals = std::move(instances.individuals);
    }
    return out;
}

// Validation gate shared by the design-phase commands.
void require_valid(const LoadedModel& input) {
    ValidationReport report = validate_all(input.model, input.individuals);
    if (!report.valid()) {
        std::cerr << render_report(report);
        throw CliError("validation failed", exit_invalid);
    }
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError("cannot write " + path.string(), exit_failure);
    out << content;
    if (!out) throw CliError("write failed for " + path.string(), exit_failure);
}

int cmd_validate(const std::string& model_path, const std::optional<std::string>& data_path) {
    LoadedModel input = load_inputs(model_path, data_path);
    ValidationReport report = validate_all(input.model, input.individuals);
    std::cout << render_report(report);
    return report.valid() ? exit_ok : exit_invalid;
}

int cmd_compile(const std::string& model_path, const std::optional<std::string>& data_path,
                const std::string& out_path, const std::string& format,
                std::optional<std::string> version_info) {
    LoadedModel input = load_inputs(model_path, data_path);
    require_valid(input);

    Graph g = lower_schema(input.model);
    if (!input.individuals.empty()) {
        Graph instances = lower_instances(input.individuals, input.model);
        for (const auto& t : instances.triples()) g.insert(t);
    }
    if (!version_info) version_info = fs::path(model_path).filename().string();

    std::string text = format == "turtle" ? serialize_turtle(g)
                                          : serialize_rdfxml(g, *version_info);
    write_file(out_path, text);
    return exit_ok;
}

int cmd_infer(const std::string& graph_path, const std::string& out_path) {
    Graph g = parse_turtle(load_source(graph_path).content);
    write_file(out_path, serialize_turtle(materialize_inferences(g)));
    return exit_ok;
}

int cmd_gen_pages(const std::string& model_path, const std::string& data_path,
                  const std::string& templates_dir, const std::string& out_dir) {
    LoadedModel input = load_inputs(model_path, data_path);
    require_valid(input);

    // All-or-nothing: render into a staging directory, promote on success.
    fs::path out(out_dir);
    fs::path staging = out.string() + ".staging";
    std::error_code ec;
    fs::remove_all(staging, ec);
    fs::create_directories(staging);

    try {
        for (const auto& page_decl : input.model.pages) {
            fs::path tpl_path = fs::path(templates_dir) / page_decl.template_path;
            PageTemplate tmpl = parse_template(load_source(tpl_path.string()).content, input.model);
            ClassBuffer buffer = build_buffer(input.individuals, page_decl, input.model);
            SemanticPage page = instantiate_page(tmpl, buffer, input.model);
            for (const auto& w : page.warnings) std::cerr << render_diagnostic(w) << '\n';
            write_file(staging / (page_decl.name + ".html"), page.document());
        }
    } catch (const TemplateError& e) {
        fs::remove_all(staging, ec);
        throw CliError(std::string("template error: ") + e.what(), exit_failure);
    } catch (...) {
        fs::remove_all(staging, ec);
        throw;
    }

    fs::create_directories(out);
    for (const auto& entry : fs::directory_iterator(staging))
        fs::rename(entry.path(), out / entry.path().filename());
    fs::remove_all(staging, ec);
    return exit_ok;
}

Term parse_pattern_term(const Graph& g, const std::string& text) {
    if (text.size() >= 2 && text.front() == '<' && text.back() == '>')
        return Term::iri(text.substr(1, text.size() - 2));
    if (text.rfind("_:", 0) == 0) return Term::blank(text.substr(2));
    if (!text.empty() && text.front() == '"') {
        auto close = text.rfind('"');
        if (close == 0) throw CliError("unterminated literal in pattern", exit_usage);
        std::string lexical = text.substr(1, close - 1);
        std::string rest = text.substr(close + 1);
        std::string dtype = iri::xsd_string;
        if (rest.rfind("^^", 0) == 0) {
            Term t = parse_pattern_term(g, rest.substr(2));
            dtype = t.value;
        }
        return Term::literal(lexical, dtype);
    }
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string prefix = text.substr(0, colon);
        for (const auto& ns : g.namespaces())
            if (ns.prefix == prefix) return Term::iri(ns.base + text.substr(colon + 1));
        throw CliError("undeclared prefix '" + prefix + "' in pattern", exit_usage);
    }
    throw CliError("cannot parse pattern term '" + text + "'", exit_usage);
}

int cmd_query(const std::string& graph_path, const std::string& pattern_text) {
    Graph g = parse_turtle(load_source(graph_path).content);

    std::istringstream in(pattern_text);
    std::vector<std::string> parts;
    std::string word;
    while (in >> word) parts.push_back(word);
    if (parts.size() != 3)
        throw CliError("pattern must have three fields: \"<s|?> <p|?> <o|?>\"", exit_usage);

    TriplePattern pattern;
    if (parts[0] != "?") pattern.subject = parse_pattern_term(g, parts[0]);
    if (parts[1] != "?") pattern.predicate = parse_pattern_term(g, parts[1]);
    if (parts[2] != "?") pattern.object = parse_pattern_term(g, parts[2]);

    for (const auto& t : match(g, pattern)) {
        std::cout << format_turtle_term(g, t.subject) << ' ' << format_turtle_term(g, t.predicate)
                  << ' ' << format_turtle_term(g, t.object) << " .\n";
    }
    return exit_ok;
}

int cmd_check_pages(const std::string& model_path, const std::string& data_path,
                    const std::string& pages_dir) {
    LoadedModel input = load_inputs(model_path, std::optional<std::string>(data_path));
    require_valid(input);

    std::size_t errors = 0;
    for (const auto& page_decl : input.model.pages) {
        fs::path page_path = fs::path(pages_dir) / (page_decl.name + ".html");
        if (!fs::exists(page_path))
            throw CliError("missing page file " + page_path.string(), exit_failure);
        std::string text = load_source(page_path.string()).content;
        ClassBuffer buffer = build_buffer(input.individuals, page_decl, input.model);
        auto diags = verify_page_consistency(text, buffer, input.model, page_decl.name);
        errors += count_errors(diags);
        for (const auto& d : diags) std::cerr << render_diagnostic(d) << '\n';
    }
    std::cout << (errors == 0 ? "pages consistent" : "pages inconsistent") << '\n';
    return errors == 0 ? exit_ok : exit_invalid;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ontology compiler: model validation, triple lowering, OWL "
                 "serialization and semantic page generation"};
    app.require_subcommand(1);

    std::string model_path, data_path, out_path, graph_path, pattern, templates_dir, pages_dir;
    std::string format = "rdfxml";
    std::string version_info;
    bool have_version_info = false;

    auto* validate = app.add_subcommand("validate", "validate a model and optional instance file");
    validate->add_option("model", model_path, "model file (.swm)")->required();
    validate->add_option("data", data_path, "instance file (.swi)");

    auto* compile = app.add_subcommand("compile", "lower a validated model to an ontology file");
    compile->add_option("model", model_path)->required();
    compile->add_option("data", data_path);
    compile->add_option("-o,--output", out_path)->required();
    compile->add_option("--format", format)->check(CLI::IsMember({"rdfxml", "turtle"}));
    compile->add_option("--version-info", version_info);

    auto* infer = app.add_subcommand("infer", "materialize the inference closure of a graph");
    infer->add_option("graph", graph_path)->required();
    infer->add_option("-o,--output", out_path)->required();

    auto* gen = app.add_subcommand("gen-pages", "generate all semantic pages");
    gen->add_option("model", model_path)->required();
    gen->add_option("data", data_path)->required();
    gen->add_option("--templates", templates_dir)->required();
    gen->add_option("-o,--output", out_path)->required();

    auto* query = app.add_subcommand("query", "match a triple pattern against a graph");
    query->add_option("graph", graph_path)->required();
    query->add_option("pattern", pattern, "\"<s|?> <p|?> <o|?>\"")->required();

    auto* check = app.add_subcommand("check-pages", "verify generated pages against the data");
    check->add_option("model", model_path)->required();
    check->add_option("data", data_path)->required();
    check->add_option("pages", pages_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    have_version_info = compile->count("--version-info") > 0;

    try {
        auto opt_data = [&]() {
            return data_path.empty() ? std::nullopt : std::optional<std::string>(data_path);
        };
        if (*validate) return cmd_validate(model_path, opt_data());
        if (*compile)
            return cmd_compile(model_path, opt_data(), out_path, format,
                               have_version_info ? std::optional<std::string>(version_info)
                                                 : std::nullopt);
        if (*infer) return cmd_infer(graph_path, out_path);
        if (*gen) return cmd_gen_pages(model_path, data_path, templates_dir, out_path);
        if (*query) return cmd_query(graph_path, pattern);
        if (*check) return cmd_check_pages(model_path, data_path, pages_dir);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code;
    } catch (const TurtleParseError& e) {
        std::cerr << "error: " << e.line << ':' << e.column << ": " << e.what() << '\n';
        return exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
