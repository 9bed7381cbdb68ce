#include <motivic/scenario.hpp>

#include <sstream>

namespace motivic {

namespace {

std::string strip(const std::string& raw) {
    std::string s = raw;
    if (auto hash = s.find('#'); hash != std::string::npos)
        s.erase(hash);
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> words;
    std::istringstream in(s);
    std::string w;
    while (in >> w)
        words.push_back(w);
    return words;
}

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError(msg, line, 1);
}

// Semantic problems keep their domain-error identity (and exit status) but
// gain a position.
[[noreturn]] void fail_domain(int line, const std::string& msg) {
    throw DomainError(msg + " at line " + std::to_string(line));
}

MotivicClass eval_expr(const std::string& src, const RegistryPtr& reg,
                       int line) {
    try {
        return class_of(parse_expr(src), reg);
    } catch (const ParseError& e) {
        fail(line, std::string("in expression '") + src + "': " + e.what());
    }
}

} // namespace

const BasePtr& Scenario::base(const std::string& name) const {
    auto it = bases.find(name);
    if (it == bases.end())
        throw DomainError("unknown base '" + name + "'");
    return it->second;
}

const StratMap& Scenario::map_named(const std::string& name) const {
    auto it = maps.find(name);
    if (it == maps.end())
        throw DomainError("unknown map '" + name + "'");
    return it->second;
}

const RelClass& Scenario::class_named(const std::string& name) const {
    auto it = classes.find(name);
    if (it == classes.end())
        throw DomainError("unknown relative class '" + name + "'");
    return it->second;
}

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    sc.registry = make_registry();

    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string l;
        while (std::getline(in, l))
            lines.push_back(l);
    }

    std::size_t i = 0;
    auto next_body_line = [&](int opened_at) -> std::pair<std::string, int> {
        while (i < lines.size()) {
            int ln = static_cast<int>(i) + 1;
            std::string s = strip(lines[i++]);
            if (!s.empty())
                return {s, ln};
        }
        fail(opened_at, "unterminated block (missing '}')");
    };

    while (i < lines.size()) {
        const int line_no = static_cast<int>(i) + 1;
        std::string line = strip(lines[i++]);
        if (line.empty())
            continue;
        auto words = split_words(line);

        if (words[0] == "base") {
            // base NAME {
            if (words.size() != 3 || words[2] != "{")
                fail(line_no, "expected 'base NAME {'");
            const std::string name = words[1];
            std::vector<Stratum> strata;
            while (true) {
                auto [body, ln] = next_body_line(line_no);
                if (body == "}")
                    break;
                // stratum ID dim N class EXPR
                auto w = split_words(body);
                if (w.size() < 6 || w[0] != "stratum" || w[2] != "dim" ||
                    w[4] != "class")
                    fail(ln, "expected 'stratum ID dim N class EXPR'");
                int dim = 0;
                try {
                    dim = std::stoi(w[3]);
                } catch (...) {
                    fail(ln, "invalid dimension '" + w[3] + "'");
                }
                const auto expr_pos = body.find(" class ");
                const std::string expr = strip(body.substr(expr_pos + 7));
                strata.push_back(
                    {w[1], dim, eval_expr(expr, sc.registry, ln)});
            }
            try {
                sc.bases[name] = std::make_shared<Base>(name, std::move(strata));
            } catch (const DomainError& e) {
                fail_domain(line_no, e.what());
            }
        } else if (words[0] == "map") {
            // map NAME : SRC -> TGT {
            if (words.size() != 7 || words[2] != ":" || words[4] != "->" ||
                words[6] != "{")
                fail(line_no, "expected 'map NAME : SOURCE -> TARGET {'");
            const std::string name = words[1];
            BasePtr src, tgt;
            try {
                src = sc.base(words[3]);
                tgt = sc.base(words[5]);
            } catch (const DomainError& e) {
                fail_domain(line_no, e.what());
            }
            std::map<std::string, std::string> assign;
            std::map<std::string, MotivicClass> fibers;
            std::optional<int> smooth;
            while (true) {
                auto [body, ln] = next_body_line(line_no);
                if (body == "}")
                    break;
                auto w = split_words(body);
                if (w.size() == 2 && w[0] == "smooth") {
                    try {
                        smooth = std::stoi(w[1]);
                    } catch (...) {
                        fail(ln, "invalid relative dimension '" + w[1] + "'");
                    }
                    continue;
                }
                // ID -> ID fiber EXPR
                if (w.size() < 5 || w[1] != "->" || w[3] != "fiber")
                    fail(ln, "expected 'ID -> ID fiber EXPR' or 'smooth N'");
                assign[w[0]] = w[2];
                const auto expr_pos = body.find(" fiber ");
                fibers[w[0]] = eval_expr(strip(body.substr(expr_pos + 7)),
                                         sc.registry, ln);
            }
            try {
                sc.maps.emplace(name,
                                StratMap(name, src, tgt, std::move(assign),
                                         std::move(fibers), smooth));
            } catch (const DomainError& e) {
                fail_domain(line_no, e.what());
            }
        } else if (words[0] == "class") {
            // class NAME over BASE {
            if (words.size() != 5 || words[2] != "over" || words[4] != "{")
                fail(line_no, "expected 'class NAME over BASE {'");
            const std::string name = words[1];
            BasePtr base;
            try {
                base = sc.base(words[3]);
            } catch (const DomainError& e) {
                fail_domain(line_no, e.what());
            }
            std::map<std::string, MotivicClass> values;
            while (true) {
                auto [body, ln] = next_body_line(line_no);
                if (body == "}")
                    break;
                const auto eq = body.find('=');
                if (eq == std::string::npos)
                    fail(ln, "expected 'ID = EXPR'");
                const std::string id = strip(body.substr(0, eq));
                if (id.empty() || id.find(' ') != std::string::npos)
                    fail(ln, "expected 'ID = EXPR'");
                values[id] =
                    eval_expr(strip(body.substr(eq + 1)), sc.registry, ln);
            }
            try {
                sc.classes.emplace(name, RelClass(base, std::move(values)));
            } catch (const DomainError& e) {
                fail_domain(line_no, e.what());
            }
        } else if (words[0] == "check") {
            if (words.size() < 2)
                fail(line_no, "expected 'check IDENTITY ARG...'");
            CheckSpec spec;
            spec.identity = words[1];
            spec.args.assign(words.begin() + 2, words.end());
            spec.line = line_no;
            sc.checks.push_back(std::move(spec));
        } else {
            fail(line_no, "unknown directive '" + words[0] + "'");
        }
    }
    return sc;
}

namespace {

CheckResult verdict(std::string label, const RelClass& lhs,
                    const RelClass& rhs) {
    CheckResult r;
    r.label = std::move(label);
    r.pass = lhs == rhs;
    if (!r.pass)
        r.detail =
            "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string();
    return r;
}

void need_args(const CheckSpec& spec, std::size_t n) {
    if (spec.args.size() != n)
        throw DomainError("identity '" + spec.identity + "' expects " +
                          std::to_string(n) + " argument(s), got " +
                          std::to_string(spec.args.size()));
}

} // namespace

std::vector<std::string> known_identities() {
    return {
        "projection_formula", "box_pushforward",   "box_pullback",
        "base_change_shriek", "base_change_star",  "base_change_smooth",
        "dual_involution",    "dual_linearity",    "hom_adjunction_star",
        "hom_adjunction_shriek", "hom_adjunction_push", "hom_tensor",
        "hom_dualizing",      "hom_projection",    "smooth_comparison",
        "proper_pushforward", "tensor_unit",       "pullback_unit",
        "box_dual",           "box_tensor",
    };
}

CheckResult run_check(const Scenario& sc, const CheckSpec& spec) {
    const std::string& id = spec.identity;
    const RegistryPtr& reg = sc.registry;
    std::string label = id;
    for (const auto& a : spec.args)
        label += " " + a;

    if (id == "projection_formula") {
        need_args(spec, 3);
        const StratMap& f = sc.map_named(spec.args[0]);
        const RelClass& a = sc.class_named(spec.args[1]); // over target
        const RelClass& b = sc.class_named(spec.args[2]); // over source
        return verdict(label, push_shriek(f, tensor(pull_star(f, a), b)),
                       tensor(a, push_shriek(f, b)));
    }
    if (id == "box_pushforward") {
        need_args(spec, 4);
        const StratMap& f = sc.map_named(spec.args[0]);
        const StratMap& g = sc.map_named(spec.args[1]);
        const RelClass& a = sc.class_named(spec.args[2]);
        const RelClass& b = sc.class_named(spec.args[3]);
        return verdict(label, push_shriek(product_map(f, g, reg), box(a, b)),
                       box(push_shriek(f, a), push_shriek(g, b)));
    }
    if (id == "box_pullback") {
        need_args(spec, 4);
        const StratMap& f = sc.map_named(spec.args[0]);
        const StratMap& g = sc.map_named(spec.args[1]);
        const RelClass& c = sc.class_named(spec.args[2]);
        const RelClass& d = sc.class_named(spec.args[3]);
        return verdict(label, pull_star(product_map(f, g, reg), box(c, d)),
                       box(pull_star(f, c), pull_star(g, d)));
    }
    if (id == "base_change_shriek" || id == "base_change_star" ||
        id == "base_change_smooth") {
        need_args(spec, 3);
        const StratMap& f = sc.map_named(spec.args[0]);
        const StratMap& pi_prime = sc.map_named(spec.args[1]);
        const RelClass& a = sc.class_named(spec.args[2]); // over source(f)
        PullbackSquare sq = pullback_square(f, pi_prime, reg);
        if (id == "base_change_shriek")
            return verdict(label, push_shriek(sq.g, pull_star(sq.pi, a)),
                           pull_star(pi_prime, push_shriek(f, a)));
        if (id == "base_change_star")
            return verdict(label, push_star(sq.g, pull_shriek(sq.pi, a)),
                           pull_shriek(pi_prime, push_star(f, a)));
        if (!pi_prime.smooth_rel_dim())
            throw DomainError("base_change_smooth requires a declared smooth "
                              "relative dimension on '" +
                              pi_prime.name() + "'");
        return verdict(label, push_star(sq.g, pull_star(sq.pi, a)),
                       pull_star(pi_prime, push_star(f, a)));
    }
    if (id == "dual_involution") {
        need_args(spec, 1);
        const RelClass& a = sc.class_named(spec.args[0]);
        return verdict(label, rel_dual(rel_dual(a)), a);
    }
    if (id == "dual_linearity") {
        if (spec.args.size() < 2)
            throw DomainError("dual_linearity expects: CLASS EXPR");
        const RelClass& a = sc.class_named(spec.args[0]);
        std::string expr;
        for (std::size_t k = 1; k < spec.args.size(); ++k)
            expr += (k > 1 ? " " : "") + spec.args[k];
        const MotivicClass c = class_of(parse_expr(expr), reg);
        return verdict(label, rel_dual(a * c), rel_dual(a) * dual_k(c));
    }
    if (id == "hom_adjunction_star") {
        need_args(spec, 3);
        const StratMap& f = sc.map_named(spec.args[0]);
        const RelClass& a = sc.class_named(spec.args[1]); // over target
        const RelClass& b = sc.class_named(spec.args[2]); // over source
        return verdict(label, hom(a, push_star(f, b)),
                       push_star(f, hom(pull_star(f, a), b)));
    }
    if (id == "hom_adjunction_shriek") {
        need_args(spec, 3);
        const StratMap& f = sc.map_named(spec.args[0]);
        const RelClass& a = sc.class_named(spec.args[1]); // over target
        const RelClass& b = sc.class_named(spec.args[2]); // over target
        return verdict(label, hom(pull_star(f, a), pull_shriek(f, b)),
                       pull_shriek(f, hom(a, b)));
    }
    if (id == "hom_adjunction_push") {
        need_args(spec, 3);
        const StratMap& f = sc.map_named(spec.args[0]);
        const RelClass& a = sc.class_named(spec.args[1]); // over source
        const RelClass& b = sc.class_named(spec.args[2]); // over target
        return verdict(label, push_star(f, hom(a, pull_shriek(f, b))),
                       hom(push_shriek(f, a), b));
    }
    if (id == "hom_tensor") {
        need_args(spec, 3);
        const RelClass& a = sc.class_named(spec.args[0]);
        const RelClass& b = sc.class_named(spec.args[1]);
        const RelClass& c = sc.class_named(spec.args[2]);
        return verdict(label, hom(a, hom(b, c)), hom(tensor(a, b), c));
    }
    if (id == "hom_dualizing") {
        need_args(spec, 1);
        const RelClass& a = sc.class_named(spec.args[0]);
        return verdict(label, hom(a, dualizing_element(a.base(), reg)),
                       rel_dual(a));
    }
    if (id == "hom_projection") {
        need_args(spec, 4);
        const BasePtr& s = sc.base(spec.args[0]);
        const BasePtr& t = sc.base(spec.args[1]);
        const RelClass& a = sc.class_named(spec.args[2]); // over S
        const RelClass& b = sc.class_named(spec.args[3]); // over S
        StratMap p = projection_first(s, t, reg);
        return verdict(label, hom(pull_star(p, a), pull_star(p, b)),
                       pull_star(p, hom(a, b)));
    }
    if (id == "smooth_comparison") {
        need_args(spec, 2);
        const StratMap& f = sc.map_named(spec.args[0]);
        const RelClass& a = sc.class_named(spec.args[1]); // over target
        if (!f.smooth_rel_dim())
            throw DomainError("smooth_comparison requires a declared smooth "
                              "relative dimension on '" +
                              f.name() + "'");
        const MotivicClass lm = MotivicClass::scalar(
            reg, Laurent::monomial(*f.smooth_rel_dim(), 1));
        return verdict(label, pull_star(f, a), pull_shriek(f, a) * lm);
    }
    if (id == "proper_pushforward") {
        need_args(spec, 2);
        const StratMap& f = sc.map_named(spec.args[0]);
        const RelClass& a = sc.class_named(spec.args[1]); // over source
        return verdict(label, push_star(f, a), push_shriek(f, a));
    }
    if (id == "tensor_unit") {
        need_args(spec, 1);
        const RelClass& a = sc.class_named(spec.args[0]);
        return verdict(label, tensor(RelClass::unit(a.base(), reg), a), a);
    }
    if (id == "pullback_unit") {
        need_args(spec, 1);
        const StratMap& f = sc.map_named(spec.args[0]);
        return verdict(label, pull_star(f, RelClass::unit(f.target(), reg)),
                       RelClass::unit(f.source(), reg));
    }
    if (id == "box_dual") {
        need_args(spec, 2);
        const RelClass& a = sc.class_named(spec.args[0]);
        const RelClass& b = sc.class_named(spec.args[1]);
        return verdict(label, rel_dual(box(a, b)),
                       box(rel_dual(a), rel_dual(b)));
    }
    if (id == "box_tensor") {
        need_args(spec, 4);
        const RelClass& a = sc.class_named(spec.args[0]);
        const RelClass& b = sc.class_named(spec.args[1]);
        const RelClass& c = sc.class_named(spec.args[2]);
        const RelClass& d = sc.class_named(spec.args[3]);
        return verdict(label, tensor(box(a, c), box(b, d)),
                       box(tensor(a, b), tensor(c, d)));
    }
    throw DomainError("unknown identity '" + id + "'");
}

} // namespace motivic
