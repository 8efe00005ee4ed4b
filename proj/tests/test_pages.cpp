#include <doctest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "ontoc/pages.hpp"
#include "ontoc/serializer.hpp"

using namespace ontoc;
using namespace ontoc::testing;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string template_text(const std::string& name) {
    return read_file(fixture_path("templates/" + name));
}

const PageDecl& page_named(const PreliminaryModel& model, const std::string& name) {
    const auto* p = model.find_page(name);
    REQUIRE(p);
    return *p;
}

} // namespace

TEST_CASE("fixture templates parse with one machine slot each") {
    auto model = fixture_model();
    for (const auto* name : {"researchers.tpl", "areas.tpl", "groups.tpl"}) {
        auto tmpl = parse_template(template_text(name), model);
        CHECK(tmpl.machine_slot_present);
        std::size_t loops = 0;
        for (const auto& n : tmpl.nodes)
            if (n.kind == TemplateNode::Kind::ClassLoop) ++loops;
        CHECK(loops == 1);
    }
}

TEST_CASE("templates without a machine slot are rejected") {
    auto model = fixture_model();
    CHECK_THROWS_AS(parse_template("<html>{{class:Researcher}}x{{/class}}</html>", model),
                    TemplateError);
}

TEST_CASE("duplicate machine slots are rejected") {
    auto model = fixture_model();
    CHECK_THROWS_AS(parse_template("{{machine}} and {{machine}}", model), TemplateError);
}

TEST_CASE("unbalanced class loops are rejected") {
    auto model = fixture_model();
    CHECK_THROWS_AS(parse_template("{{machine}}{{class:Researcher}}no close", model),
                    TemplateError);
    CHECK_THROWS_AS(parse_template("{{machine}}dangling {{/class}}", model), TemplateError);
}

TEST_CASE("loops over undeclared classes are rejected") {
    auto model = fixture_model();
    CHECK_THROWS_AS(parse_template("{{machine}}{{class:Ghost}}{{/class}}", model), TemplateError);
}

TEST_CASE("buffer for the researchers page gathers subclass members") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto buffer = build_buffer(individuals, page_named(model, "ResearchersPage"), model);

    auto members = buffer.individuals();
    std::vector<std::string> ids;
    for (const auto& i : members) ids.push_back(i.id);
    // D_5 is a Director and F_7/MS_3 are Faculty; both are below Researcher
    CHECK(ids == std::vector<std::string>{"D_5", "F_7", "MS_3"});
    CHECK(buffer.universe.size() == individuals.size());
}

TEST_CASE("buffer for a page with no members is empty but valid") {
    auto model = parse_text(
        "namespace ex = <http://e.org/x#> default\n"
        "class PaperCategory\n"
        "page CategoriesPage classes PaperCategory template \"c.tpl\"\n").model;
    auto buffer = build_buffer({}, page_named(model, "CategoriesPage"), model);
    CHECK(buffer.individuals().empty());
}

TEST_CASE("buffers reject pages naming undeclared classes") {
    PreliminaryModel model = fixture_model();
    PageDecl bogus;
    bogus.name = "BadPage";
    bogus.member_classes = {"Ghost"};
    CHECK_THROWS_AS(build_buffer({}, bogus, model), std::invalid_argument);
}

TEST_CASE("instantiation fills placeholders from the case study") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto tmpl = parse_template(template_text("researchers.tpl"), model);
    auto buffer = build_buffer(individuals, page_named(model, "ResearchersPage"), model);
    auto page = instantiate_page(tmpl, buffer, model);

    CHECK(page.user_section.find("M. Afzal") != std::string::npos);
    CHECK(page.user_section.find("Professor") != std::string::npos);
    CHECK(page.user_section.find("m.afzal@hotmail.com") != std::string::npos);
    // MS_3's rel placeholder resolves through the universe to RA_2's title
    CHECK(page.user_section.find("Data Mining") != std::string::npos);
    // no placeholder syntax survives
    CHECK(page.user_section.find("{{") == std::string::npos);
}

TEST_CASE("missing characteristic values render empty and warn") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto tmpl = parse_template(template_text("researchers.tpl"), model);
    auto buffer = build_buffer(individuals, page_named(model, "ResearchersPage"), model);
    auto page = instantiate_page(tmpl, buffer, model);
    // D_5 has no hasName/hasJobTitle/hasEmail; F_7 and MS_3 lack hasResearchArea or not
    CHECK(!page.warnings.empty());
    for (const auto& w : page.warnings) CHECK(w.code == "MISSING-VALUE");
}

TEST_CASE("the machine section is the compact form of the buffer's triples") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto tmpl = parse_template(template_text("areas.tpl"), model);
    auto buffer = build_buffer(individuals, page_named(model, "AreasPage"), model);
    auto page = instantiate_page(tmpl, buffer, model);

    std::string expected = serialize_turtle(lower_instances(buffer.individuals(), model));
    CHECK(page.machine_section == expected);
    CHECK(page.machine_section.find("uet:RA_2") != std::string::npos);
    CHECK(page.machine_section.find("\"Data Mining\"") != std::string::npos);
    // only area individuals belong on this page
    CHECK(page.machine_section.find("uet:F_7") == std::string::npos);
}

TEST_CASE("the document embeds the machine section between the markers") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto tmpl = parse_template(template_text("areas.tpl"), model);
    auto buffer = build_buffer(individuals, page_named(model, "AreasPage"), model);
    auto page = instantiate_page(tmpl, buffer, model);

    std::string doc = page.document();
    CHECK(doc.find(machine_begin_marker) != std::string::npos);
    CHECK(doc.find(machine_end_marker) != std::string::npos);
    CHECK(extract_machine_section(doc) == page.machine_section);
}

TEST_CASE("extraction fails without exactly one marker block") {
    CHECK_THROWS_AS(extract_machine_section("<html>no markers</html>"), TemplateError);
    std::string two = machine_begin_marker + "\n a \n" + machine_end_marker +
                      machine_begin_marker + "\n b \n" + machine_end_marker;
    CHECK_THROWS_AS(extract_machine_section(two), TemplateError);
}

TEST_CASE("a freshly generated page verifies as consistent") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    for (const auto& [page_name, tpl] :
         std::vector<std::pair<std::string, std::string>>{{"ResearchersPage", "researchers.tpl"},
                                                          {"AreasPage", "areas.tpl"},
                                                          {"GroupsPage", "groups.tpl"}}) {
        auto tmpl = parse_template(template_text(tpl), model);
        auto buffer = build_buffer(individuals, page_named(model, page_name), model);
        auto page = instantiate_page(tmpl, buffer, model);
        auto diags = verify_page_consistency(page.document(), buffer, model, page_name);
        CHECK(count_errors(diags) == 0);
    }
}

TEST_CASE("stale data yields exactly one inconsistency per affected page") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto tmpl = parse_template(template_text("researchers.tpl"), model);
    auto buffer = build_buffer(individuals, page_named(model, "ResearchersPage"), model);
    std::string doc = instantiate_page(tmpl, buffer, model).document();

    // the data moves on: F_7 gets promoted after the page was generated
    auto data = load_source(fixture_path("research.swi"));
    auto pos = data.content.find("\"Professor\"");
    REQUIRE(pos != std::string::npos);
    data.content.replace(pos, std::string("\"Professor\"").size(), "\"Dean\"");
    auto stale = parse_instances(data, model);
    REQUIRE(stale.ok());
    auto new_buffer = build_buffer(stale.individuals, page_named(model, "ResearchersPage"), model);

    auto diags = verify_page_consistency(doc, new_buffer, model, "ResearchersPage");
    REQUIRE(count_errors(diags) == 1);
    CHECK(diags.front().code == "INCONSISTENT-PAGE");
    CHECK(diags.front().message.find("ResearchersPage") != std::string::npos);
}

TEST_CASE("a corrupted machine section is its own error") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto tmpl = parse_template(template_text("areas.tpl"), model);
    auto buffer = build_buffer(individuals, page_named(model, "AreasPage"), model);
    std::string doc = instantiate_page(tmpl, buffer, model).document();

    auto pos = doc.find(machine_begin_marker);
    REQUIRE(pos != std::string::npos);
    doc.insert(pos + machine_begin_marker.size() + 1, "garbage that is not a triple\n");
    auto diags = verify_page_consistency(doc, buffer, model, "AreasPage");
    REQUIRE(count_errors(diags) == 1);
    CHECK(diags.front().code == "BAD-MACHINE-SECTION");
}

TEST_CASE("instantiation is deterministic") {
    auto model = fixture_model();
    auto individuals = fixture_individuals(model);
    auto tmpl = parse_template(template_text("groups.tpl"), model);
    auto buffer = build_buffer(individuals, page_named(model, "GroupsPage"), model);
    CHECK(instantiate_page(tmpl, buffer, model).document() ==
          instantiate_page(tmpl, buffer, model).document());
}
