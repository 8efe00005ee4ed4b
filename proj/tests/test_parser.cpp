#include <doctest.h>

#include "fixtures.hpp"
#include "ontoc/parser.hpp"

using namespace ontoc;
using namespace ontoc::testing;

TEST_CASE("fixture model parses with the case-study shape") {
    auto result = parse_model(load_source(fixture_path("research.swm")));
    REQUIRE(result.ok());
    const auto& m = result.model;
    CHECK(m.classes.size() == 10);
    // 6 table relationships plus hasCode from the instance slice
    CHECK(m.relationships.size() == 7);
    // 9 table characteristics plus hasJobTitle and hasJoiningDate
    CHECK(m.characteristics.size() == 11);
    CHECK(m.pages.size() == 3);

    const auto* has_id = m.find_characteristic("hasId");
    REQUIRE(has_id);
    CHECK(has_id->domain_classes.size() == 4);
    const auto* has_title = m.find_characteristic("hasTitle");
    REQUIRE(has_title);
    CHECK(has_title->domain_classes.size() == 5);
}

TEST_CASE("empty file parses to an empty model with no diagnostics") {
    auto result = parse_model({"empty.swm", ""});
    CHECK(result.diagnostics.empty());
    CHECK(result.model.classes.empty());
    CHECK(result.model.namespaces.empty());
}

TEST_CASE("duplicate characteristic keeps the first and reports one error") {
    auto result = parse_text(
        "namespace ex = <http://e.org/x#> default\n"
        "class Researcher\n"
        "characteristic hasEmail domain Researcher datatype string\n"
        "characteristic hasEmail domain Researcher datatype string\n",
        true);
    CHECK(count_errors(result.diagnostics) == 1);
    CHECK(result.diagnostics.front().code == "DUPLICATE-DECL");
    CHECK(result.model.characteristics.size() == 1);
}

TEST_CASE("unknown keywords error individually and parsing continues") {
    auto result = parse_text(
        "frobnicate everything\n"
        "class A\n"
        "mystery\n"
        "class B\n",
        true);
    CHECK(count_errors(result.diagnostics) == 2);
    CHECK(result.model.classes.size() == 2);
}

TEST_CASE("instance parse matches the director slice") {
    auto model = parse_text(
        "namespace ex = <http://e.org/x#> default\n"
        "class Director\n"
        "characteristic hasJoiningDate domain Director datatype date\n").model;
    auto result = parse_instance_text(
        "individual D_5 : Director { hasJoiningDate = 2006-01-25 }\n", model);
    REQUIRE(result.individuals.size() == 1);
    const auto& d5 = result.individuals.front();
    CHECK(d5.id == "D_5");
    CHECK(d5.classes == std::vector<std::string>{"Director"});
    CHECK(d5.object_assertions.empty());
    REQUIRE(d5.data_assertions.size() == 1);
    CHECK(d5.data_assertions.front().characteristic == "hasJoiningDate");
    CHECK(d5.data_assertions.front().value.datatype == Datatype::Date);
    CHECK(d5.data_assertions.front().value.lexical == "2006-01-25");
}

TEST_CASE("instance parse handles several string assertions") {
    auto model = fixture_model();
    auto result = parse_instance_text(
        "individual F_7x : Faculty { hasName = \"M. Afzal\" hasJobTitle = \"Professor\" }\n",
        model);
    REQUIRE(result.individuals.size() == 1);
    REQUIRE(result.individuals.front().data_assertions.size() == 2);
    for (const auto& da : result.individuals.front().data_assertions)
        CHECK(da.value.datatype == Datatype::String);
}

TEST_CASE("impossible calendar dates are malformed literals") {
    auto model = fixture_model();
    auto result = parse_instance_text(
        "individual X : Researcher { hasStartingDate = 2004-13-40 }\n", model, true);
    REQUIRE(count_errors(result.diagnostics) >= 1);
    CHECK(result.diagnostics.front().code == "MALFORMED-LITERAL");
}

TEST_CASE("duplicate individual ids are rejected") {
    auto model = fixture_model();
    auto result = parse_instance_text(
        "individual A : Researcher { }\nindividual A : Researcher { }\n", model, true);
    CHECK(count_errors(result.diagnostics) == 1);
    CHECK(result.diagnostics.front().code == "DUPLICATE-INDIVIDUAL");
    CHECK(result.individuals.size() == 1);
}

TEST_CASE("unknown names in instances warn but do not error") {
    auto model = fixture_model();
    auto result = parse_instance_text(
        "individual A : NoSuchClass { noSuchChar = 5 noSuchRel -> A }\n", model);
    CHECK(count_errors(result.diagnostics) == 0);
    CHECK(count_warnings(result.diagnostics) == 3);
}

TEST_CASE("model pretty-print round-trips structurally") {
    PreliminaryModel m = fixture_model();
    std::string printed = print_model(m);
    auto reparsed = parse_model({"printed.swm", printed});
    REQUIRE(reparsed.ok());
    CHECK(print_model(reparsed.model) == printed);
}

TEST_CASE("instance pretty-print round-trips structurally") {
    PreliminaryModel m = fixture_model();
    auto individuals = fixture_individuals(m);
    std::string printed = print_instances(individuals);
    auto reparsed = parse_instances({"printed.swi", printed}, m);
    REQUIRE(reparsed.ok());
    CHECK(print_instances(reparsed.individuals) == printed);
}

TEST_CASE("parsing is deterministic") {
    auto src = load_source(fixture_path("research.swm"));
    auto a = parse_model(src);
    auto b = parse_model(src);
    CHECK(print_model(a.model) == print_model(b.model));
    CHECK(a.diagnostics.size() == b.diagnostics.size());
}

TEST_CASE("string escapes survive a print/parse cycle") {
    auto model = parse_text(
        "namespace ex = <http://e.org/x#> default\n"
        "class C \"say \\\"hi\\\"\\nnew\\tline\"\n").model;
    REQUIRE(model.classes.size() == 1);
    CHECK(model.classes.front().description == "say \"hi\"\nnew\tline");
    auto reparsed = parse_model({"p.swm", print_model(model)});
    REQUIRE(reparsed.ok());
    CHECK(reparsed.model.classes.front().description == model.classes.front().description);
}

TEST_CASE("a class cannot be its own direct superclass") {
    auto result = parse_text("class A subclassOf A\n", true);
    CHECK(count_errors(result.diagnostics) == 1);
    CHECK(result.model.classes.empty());
}
