#include "supersym/cli.hpp"

#include "supersym/errors.hpp"
#include "supersym/expr.hpp"
#include "supersym/graphs.hpp"
#include "supersym/hopf.hpp"
#include "supersym/instances.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace supersym {

namespace {

using nlohmann::json;

std::string entries_key(const std::vector<DottedEntry>& entries)
{
    std::string s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(entries[i].value);
        if (entries[i].dotted)
            s += "~";
    }
    return s;
}

json terms_json_sym(const SymSuper& f)
{
    json terms = json::array();
    for (const auto& [sp, c] : f)
        terms.push_back({{"index", entries_key(DottedComposition::of(sp).entries)},
                         {"coeff", to_string(c)}});
    return terms;
}

json terms_json_dc(const LinearCombination<DottedComposition>& f)
{
    json terms = json::array();
    for (const auto& [alpha, c] : f)
        terms.push_back({{"index", entries_key(alpha.entries)}, {"coeff", to_string(c)}});
    return terms;
}

json terms_json_nsym(const NSymSuper& f)
{
    json terms = json::array();
    for (const auto& [alpha, c] : f)
        terms.push_back({{"index", entries_key(alpha.entries)}, {"coeff", to_string(c)}});
    return terms;
}

json terms_json_e(const EPoly& f)
{
    json terms = json::array();
    for (const auto& [idx, c] : f)
        terms.push_back({{"index", idx.to_string()}, {"coeff", to_string(c)}});
    return terms;
}

json dual_json(const DualNumber& d)
{
    return json{{"even", to_string(d.even)}, {"odd", to_string(d.odd)}};
}

struct Rendered {
    std::string basis;
    std::string text;
    json terms;
};

Rendered render_value(const Value& v, const std::string& basis)
{
    if (basis.empty()) {
        switch (v.family) {
        case Value::Family::Scalar: {
            SymSuper f;
            f.add(SuperPartition{}, v.scalar);
            return {"m", to_string(v.scalar), terms_json_sym(f)};
        }
        case Value::Family::Lambda: return {"m", render(v.sym), terms_json_sym(v.sym)};
        case Value::Family::QSym: return {"M", render(v.qsym), terms_json_dc(v.qsym)};
        case Value::Family::NSym: return {"H", render(v.nsym), terms_json_nsym(v.nsym)};
        }
    }
    if (basis == "m") {
        SymSuper f = v.as_sym();
        return {"m", render(f), terms_json_sym(f)};
    }
    if (basis == "e") {
        EPoly e = slambda::to_e(v.as_sym());
        return {"e", render(e), terms_json_e(e)};
    }
    if (basis == "M") {
        QSymSuper f = v.as_qsym();
        return {"M", render(f), terms_json_dc(f)};
    }
    throw DomainError("unknown basis '" + basis + "'");
}

GraphElement load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw DomainError("cannot open graph file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph_json(buf.str());
}

json report_json(const hopf::VerifyReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"check", c.name}, {"pass", c.pass}, {"cases", c.cases}};
        if (!c.pass)
            entry["witness"] = c.witness;
        checks.push_back(entry);
    }
    return json{{"checks", checks},
                {"cocommutative", report.cocommutative},
                {"cocommutative_witness", report.cocommutative_witness}};
}

int run_eval(const std::string& src, const std::string& basis, bool as_json, std::ostream& out)
{
    Value v = evaluate_string(src);
    Rendered r = render_value(v, basis);
    if (as_json)
        out << json{{"basis", r.basis}, {"terms", r.terms}}.dump() << "\n";
    else
        out << r.text << "\n";
    return 0;
}

int run_coproduct(const std::string& src, bool as_json, std::ostream& out)
{
    Value v = evaluate_string(src);
    if (v.family == Value::Family::NSym)
        throw DomainError("coproduct is not provided on H-expressions");
    if (v.family == Value::Family::QSym) {
        auto t = sqsym::coproduct(v.qsym);
        if (as_json) {
            json terms = json::array();
            for (const auto& [w, c] : t)
                terms.push_back({{"left", entries_key(w[0].entries)},
                                 {"right", entries_key(w[1].entries)},
                                 {"coeff", to_string(c)}});
            out << json{{"basis", "M"}, {"terms", terms}}.dump() << "\n";
        } else {
            out << render_tensor(t) << "\n";
        }
        return 0;
    }
    SymSuper f = v.as_sym();
    auto t = slambda::coproduct(f);
    if (as_json) {
        json terms = json::array();
        for (const auto& [w, c] : t)
            terms.push_back({{"left", entries_key(DottedComposition::of(w[0]).entries)},
                             {"right", entries_key(DottedComposition::of(w[1]).entries)},
                             {"coeff", to_string(c)}});
        out << json{{"basis", "m"}, {"terms", terms}}.dump() << "\n";
    } else {
        out << render_tensor(t) << "\n";
    }
    return 0;
}

int run_antipode(const std::string& src, bool as_json, std::ostream& out)
{
    Value v = evaluate_string(src);
    if (v.family == Value::Family::NSym)
        throw DomainError("antipode is not provided on H-expressions");
    Value result;
    if (v.family == Value::Family::QSym)
        result = Value::of_qsym(hopf::antipode(qsym_instance(), v.qsym));
    else
        result = Value::of_sym(hopf::antipode(lambda_instance(), v.as_sym()));
    Rendered r = render_value(result, "");
    if (as_json)
        out << json{{"basis", r.basis}, {"terms", r.terms}}.dump() << "\n";
    else
        out << r.text << "\n";
    return 0;
}

int run_counit(const std::string& src, bool as_json, std::ostream& out)
{
    Value v = evaluate_string(src);
    Rational c;
    switch (v.family) {
    case Value::Family::Scalar: c = v.scalar; break;
    case Value::Family::Lambda: c = slambda::counit(v.sym); break;
    case Value::Family::QSym: c = sqsym::counit(v.qsym); break;
    case Value::Family::NSym: c = v.nsym.coefficient(DottedComposition{}); break;
    }
    if (as_json)
        out << json{{"counit", to_string(c)}}.dump() << "\n";
    else
        out << to_string(c) << "\n";
    return 0;
}

int run_zeta(const std::string& which, const std::string& input, bool as_json, std::ostream& out)
{
    DualNumber d;
    if (which == "S")
        d = slambda::zeta_S(evaluate_string(input).as_sym());
    else if (which == "Q")
        d = sqsym::zeta_Q(evaluate_string(input).as_qsym());
    else if (which == "N")
        d = snsym::zeta_N(evaluate_string(input).as_nsym());
    else if (which == "ch")
        d = zeta_ch(load_graph(input));
    else
        throw DomainError("unknown supercharacter '" + which + "' (expected S, Q, N, or ch)");
    if (as_json)
        out << dual_json(d).dump() << "\n";
    else
        out << to_string(d) << "\n";
    return 0;
}

Rendered render_sym(const SymSuper& f, const std::string& basis)
{
    return render_value(Value::of_sym(f), basis.empty() ? "m" : basis);
}

int run_graph_psi(const std::string& path, const std::string& method, const std::string& basis,
                  bool as_json, std::ostream& out, std::ostream& err)
{
    GraphElement g = load_graph(path);
    if (method == "universal") {
        Rendered r = render_sym(psi_universal(g), basis);
        if (as_json)
            out << json{{"method", "universal"}, {"basis", r.basis}, {"terms", r.terms}}.dump()
                << "\n";
        else
            out << r.text << "\n";
        return 0;
    }
    if (method == "coloring") {
        // Throws MultiWhiteComponent outside the admissible class.
        Rendered r = render_sym(psi_coloring(g), basis);
        if (as_json)
            out << json{{"method", "coloring"}, {"basis", r.basis}, {"terms", r.terms}}.dump()
                << "\n";
        else
            out << r.text << "\n";
        return 0;
    }
    if (method != "both")
        throw DomainError("unknown method '" + method + "' (expected universal, coloring, or both)");

    SymSuper universal = psi_universal(g);
    SymSuper coloring = psi_coloring_literal(g);
    bool admissible = is_coloring_admissible(g);
    bool agree = universal == coloring;
    Rendered ru = render_sym(universal, basis);
    Rendered rc = render_sym(coloring, basis);
    if (as_json) {
        out << json{{"method", "both"},
                    {"admissible", admissible},
                    {"agree", agree},
                    {"universal", {{"basis", ru.basis}, {"terms", ru.terms}}},
                    {"coloring", {{"basis", rc.basis}, {"terms", rc.terms}}}}
                   .dump()
            << "\n";
    } else {
        out << "universal: " << ru.text << "\n";
        out << "coloring:  " << rc.text << "\n";
        out << (agree ? "methods agree" : "methods DISAGREE") << "\n";
    }
    if (!admissible) {
        err << "coloring requested outside the admissible class (a component has more than one "
               "white vertex); the universal map is authoritative\n";
        return 2;
    }
    if (!agree) {
        err << "universal and coloring expansions disagree on an admissible input\n";
        return 2;
    }
    return 0;
}

int run_verify(const std::string& algebra, int max_degree, bool as_json, std::ostream& out)
{
    hopf::VerifyReport report;
    if (algebra == "lambda")
        report = hopf::verify_hopf(lambda_instance(), max_degree);
    else if (algebra == "sqsym")
        report = hopf::verify_hopf(qsym_instance(), max_degree);
    else if (algebra == "graph")
        report = hopf::verify_hopf(graph_instance(), max_degree);
    else
        throw DomainError("unknown algebra '" + algebra + "' (expected lambda, sqsym, or graph)");

    if (as_json) {
        out << report_json(report).dump() << "\n";
    } else {
        for (const auto& c : report.checks) {
            out << c.name << ": " << (c.pass ? "pass" : "FAIL") << " (" << c.cases << " cases)";
            if (!c.pass)
                out << " witness " << c.witness;
            out << "\n";
        }
        out << "cocommutative: " << (report.cocommutative ? "true" : "false");
        if (!report.cocommutative)
            out << " witness " << report.cocommutative_witness;
        out << "\n";
    }
    return report.all_pass() ? 0 : 3;
}

int run_bases(const std::string& family, int degree, bool as_json, std::ostream& out)
{
    std::vector<std::string> labels;
    if (family == "superpartitions") {
        for (const auto& sp : superpartitions_of_degree(degree))
            labels.push_back(sp.to_string());
    } else if (family == "dotted") {
        for (const auto& a : dotted_compositions_of_degree(degree))
            labels.push_back(a.to_string());
    } else {
        throw DomainError("unknown family '" + family + "' (expected superpartitions or dotted)");
    }
    if (as_json) {
        out << json{{"family", family}, {"degree", degree}, {"labels", labels}}.dump() << "\n";
    } else {
        for (const auto& l : labels)
            out << l << "\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"exact computer algebra for symmetric functions in superspace"};
    app.name("supersym");
    app.require_subcommand(1);

    std::string expr_src, basis, zeta_which, graph_file, method = "universal";
    std::string verify_algebra, bases_family;
    int max_degree = 4, bases_degree = 0;
    bool as_json = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expr", expr_src, "expression, e.g. \"e[1]*e[1] + m[0~,1]\"")->required();
    eval_cmd->add_option("--basis", basis, "output basis: m, e, or M");
    eval_cmd->add_flag("--json", as_json, "JSON output");

    auto* cop_cmd = app.add_subcommand("coproduct", "coproduct of an expression");
    cop_cmd->add_option("expr", expr_src)->required();
    cop_cmd->add_flag("--json", as_json);

    auto* ant_cmd = app.add_subcommand("antipode", "antipode of an expression");
    ant_cmd->add_option("expr", expr_src)->required();
    ant_cmd->add_flag("--json", as_json);

    auto* cou_cmd = app.add_subcommand("counit", "counit of an expression");
    cou_cmd->add_option("expr", expr_src)->required();
    cou_cmd->add_flag("--json", as_json);

    auto* zeta_cmd = app.add_subcommand("zeta", "apply a supercharacter");
    zeta_cmd->add_option("--which", zeta_which, "S, Q, N, or ch")->required();
    zeta_cmd->add_option("input", expr_src, "expression (S/Q/N) or graph file (ch)")->required();
    zeta_cmd->add_flag("--json", as_json);

    auto* graph_cmd = app.add_subcommand("graph", "two-colored graph commands");
    auto* psi_cmd = graph_cmd->add_subcommand("psi", "chromatic symmetric function in superspace");
    psi_cmd->add_option("file", graph_file, "graph JSON file")->required();
    psi_cmd->add_option("--method", method, "universal, coloring, or both");
    psi_cmd->add_option("--basis", basis, "output basis: m or e");
    psi_cmd->add_flag("--json", as_json);

    auto* verify_cmd = app.add_subcommand("verify", "run the Hopf axiom verifier");
    verify_cmd->add_option("--algebra", verify_algebra, "lambda, sqsym, or graph")->required();
    verify_cmd->add_option("--max-degree", max_degree, "degree bound")->required();
    verify_cmd->add_flag("--json", as_json);

    auto* bases_cmd = app.add_subcommand("bases", "enumerate basis labels");
    bases_cmd->add_option("--family", bases_family, "superpartitions or dotted")->required();
    bases_cmd->add_option("--degree", bases_degree, "n-degree")->required();
    bases_cmd->add_flag("--json", as_json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (eval_cmd->parsed())
            return run_eval(expr_src, basis, as_json, out);
        if (cop_cmd->parsed())
            return run_coproduct(expr_src, as_json, out);
        if (ant_cmd->parsed())
            return run_antipode(expr_src, as_json, out);
        if (cou_cmd->parsed())
            return run_counit(expr_src, as_json, out);
        if (zeta_cmd->parsed())
            return run_zeta(zeta_which, expr_src, as_json, out);
        if (graph_cmd->parsed()) {
            if (!psi_cmd->parsed()) {
                err << "usage error: expected 'graph psi <file>'\n";
                return 1;
            }
            return run_graph_psi(graph_file, method, basis, as_json, out, err);
        }
        if (verify_cmd->parsed())
            return run_verify(verify_algebra, max_degree, as_json, out);
        if (bases_cmd->parsed())
            return run_bases(bases_family, bases_degree, as_json, out);
        err << "usage error: no subcommand\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace supersym
