// Command-line front end for the motivic class calculator: evaluate variety
// expressions, apply the duality involution, compute Euler characteristics
// from SNC boundary data, and run relative-module identity suites.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <motivic/motivic.hpp>

namespace {

using namespace motivic;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json class_to_json(const MotivicClass& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [g, p] : c.coefficients()) {
        nlohmann::json coeff = nlohmann::json::array();
        for (const auto& [e, v] : p.terms())
            coeff.push_back({e, v.str()});
        terms.push_back({{"generator", c.registry()->info(g).name},
                         {"coefficient", coeff}});
    }
    return {{"class", terms}};
}

std::string render_class(const MotivicClass& c, const std::string& format) {
    if (format == "latex")
        return c.to_latex();
    if (format == "machine")
        return class_to_json(c).dump();
    return c.to_string();
}

int run_eval(const std::string& expr_text, const std::string& format) {
    RegistryPtr reg = make_registry();
    MotivicClass c = class_of(parse_expr(expr_text), reg);
    std::cout << render_class(c, format) << "\n";
    return 0;
}

int run_dual(const std::string& expr_text, const std::string& format) {
    RegistryPtr reg = make_registry();
    MotivicClass c = dual_k(class_of(parse_expr(expr_text), reg));
    std::cout << render_class(c, format) << "\n";
    return 0;
}

int run_chi(const std::string& path, const std::string& format) {
    SNCData data = parse_snc_file(read_file(path));
    RegistryPtr reg = make_registry();
    MotivicClass chi = chi_ordinary(data, reg);
    PrespaarResult check = verify_prespaar(data, reg);
    if (format == "machine") {
        nlohmann::json out = class_to_json(chi);
        out["duality_consistent"] = check.ok;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "chi = " << render_class(chi, format) << "\n";
        std::cout << "duality check: " << check.diagnostic() << "\n";
    }
    return check.ok ? 0 : 1;
}

int run_checks(const std::string& path, const std::string& only,
               const std::string& format) {
    Scenario sc = parse_scenario(read_file(path));
    int failures = 0, ran = 0;
    nlohmann::json results = nlohmann::json::array();
    for (const auto& spec : sc.checks) {
        if (!only.empty() && spec.identity != only)
            continue;
        ++ran;
        CheckResult r = run_check(sc, spec);
        if (format == "machine") {
            results.push_back(
                {{"identity", r.label}, {"pass", r.pass}, {"detail", r.detail}});
        } else {
            std::cout << (r.pass ? "PASS " : "FAIL ") << r.label;
            if (!r.pass)
                std::cout << "\n  " << r.detail;
            std::cout << "\n";
        }
        if (!r.pass)
            ++failures;
    }
    if (format == "machine")
        std::cout << results.dump() << "\n";
    if (ran == 0)
        throw DomainError(only.empty()
                              ? "scenario declares no checks"
                              : "no checks named '" + only + "' in scenario");
    return failures == 0 ? 0 : 1;
}

int run_repl(const std::string& format) {
    RegistryPtr reg = make_registry();
    std::vector<std::string> history;
    std::string line;
    std::cout << "motivic-calc repl; :dual <expr>, :history, :quit\n";
    while (true) {
        std::cout << "> " << std::flush;
        if (!std::getline(std::cin, line))
            break;
        const std::string trimmed = line;
        if (trimmed.empty())
            continue;
        if (trimmed == ":quit" || trimmed == ":q")
            break;
        history.push_back(trimmed);
        if (trimmed == ":history") {
            for (const auto& h : history)
                std::cout << h << "\n";
            continue;
        }
        try {
            if (trimmed.rfind(":dual ", 0) == 0) {
                MotivicClass c =
                    dual_k(class_of(parse_expr(trimmed.substr(6)), reg));
                std::cout << render_class(c, format) << "\n";
            } else {
                MotivicClass c = class_of(parse_expr(trimmed), reg);
                std::cout << render_class(c, format) << "\n";
            }
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symbolic calculator for the localized Grothendieck ring of "
                 "varieties"};
    app.require_subcommand(1);

    std::string format = "plain";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"plain", "latex", "machine"}))
        ->capture_default_str();

    std::string eval_expr, eval_file;
    auto* eval = app.add_subcommand("eval", "Evaluate a variety expression");
    auto* eval_e = eval->add_option("-e,--expr", eval_expr, "Inline expression");
    auto* eval_f = eval->add_option("-f,--file", eval_file, "Expression file");
    eval_e->excludes(eval_f);

    std::string dual_expr;
    auto* dual = app.add_subcommand("dual", "Duality involution of a class");
    dual->add_option("-e,--expr", dual_expr, "Inline expression")->required();

    std::string chi_file;
    auto* chi = app.add_subcommand("chi", "Euler characteristic from SNC data");
    chi->add_option("-f,--file", chi_file, "SNC data file")->required();

    std::string check_file, check_identity;
    bool check_all = false;
    auto* check = app.add_subcommand("check", "Run relative-module identities");
    check->add_option("-f,--file", check_file, "Scenario file")->required();
    auto* ident =
        check->add_option("--identity", check_identity, "Run one identity");
    check->add_flag("--all", check_all, "Run every declared check (default)")
        ->excludes(ident);

    auto* repl = app.add_subcommand("repl", "Interactive evaluation loop");

    // Let --format appear before or after the subcommand name.
    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) {
            if (eval_expr.empty() && eval_file.empty())
                throw DomainError("eval needs -e <expr> or -f <file>");
            const std::string src =
                eval_expr.empty() ? read_file(eval_file) : eval_expr;
            return run_eval(src, format);
        }
        if (dual->parsed())
            return run_dual(dual_expr, format);
        if (chi->parsed())
            return run_chi(chi_file, format);
        if (check->parsed())
            return run_checks(check_file, check_identity, format);
        if (repl->parsed())
            return run_repl(format);
    } catch (const motivic::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const motivic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
