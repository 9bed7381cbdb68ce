#ifndef MOTIVIC_SCENARIO_HPP
#define MOTIVIC_SCENARIO_HPP

#include <map>
#include <string>
#include <vector>

#include <motivic/parser.hpp>
#include <motivic/relative.hpp>

namespace motivic {

/// One `check <identity> <args...>` request from a scenario file.
struct CheckSpec {
    std::string identity;
    std::vector<std::string> args;
    int line = 0;
};

/// A parsed relative-module scenario: stratified bases, stratified maps,
/// relative classes (fiber classes given in DSL syntax), and identity checks.
///
/// File format (line oriented, '#' comments):
///   base NAME {
///     stratum ID dim N class EXPR
///     ...
///   }
///   map NAME : SOURCE -> TARGET {
///     ID -> ID fiber EXPR
///     smooth N          # optional declared relative dimension
///   }
///   class NAME over BASE {
///     ID = EXPR
///   }
///   check IDENTITY ARG...
struct Scenario {
    RegistryPtr registry;
    std::map<std::string, BasePtr> bases;
    std::map<std::string, StratMap> maps;
    std::map<std::string, RelClass> classes;
    std::vector<CheckSpec> checks;

    const BasePtr& base(const std::string& name) const;
    const StratMap& map_named(const std::string& name) const;
    const RelClass& class_named(const std::string& name) const;
};

Scenario parse_scenario(const std::string& text);

struct CheckResult {
    std::string label;
    bool pass = false;
    std::string detail; // both sides, on failure
};

/// Runs one identity check. Unknown identity names raise DomainError.
CheckResult run_check(const Scenario& scenario, const CheckSpec& spec);

/// All identity names run_check understands.
std::vector<std::string> known_identities();

} // namespace motivic

#endif
