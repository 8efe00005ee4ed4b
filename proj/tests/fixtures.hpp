#ifndef ONTOC_TESTS_FIXTURES_HPP
#define ONTOC_TESTS_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "ontoc/parser.hpp"

namespace ontoc::testing {

inline std::string fixture_path(const std::string& name) {
    return std::string(FIXTURE_DIR) + "/" + name;
}

inline PreliminaryModel fixture_model() {
    auto result = parse_model(load_source(fixture_path("research.swm")));
    if (!result.ok()) throw std::runtime_error("fixture model does not parse");
    return result.model;
}

inline std::vector<IndividualDecl> fixture_individuals(const PreliminaryModel& model) {
    auto result = parse_instances(load_source(fixture_path("research.swi")), model);
    if (!result.ok()) throw std::runtime_error("fixture instances do not parse");
    return result.individuals;
}

// Parses inline DSL text; throws on parse errors unless `allow_errors`.
inline ParseResult parse_text(const std::string& text, bool allow_errors = false) {
    ParseResult result = parse_model({"test.swm", text});
    if (!allow_errors && !result.ok()) throw std::runtime_error("test model does not parse");
    return result;
}

inline InstanceParseResult parse_instance_text(const std::string& text,
                                               const PreliminaryModel& model,
                                               bool allow_errors = false) {
    InstanceParseResult result = parse_instances({"test.swi", text}, model);
    if (!allow_errors && !result.ok()) throw std::runtime_error("test instances do not parse");
    return result;
}

} // namespace ontoc::testing

#endif
