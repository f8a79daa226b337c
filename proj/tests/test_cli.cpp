#include "supersym/cli.hpp"

#include "supersym/errors.hpp"
#include "supersym/expr.hpp"
#include "supersym/instances.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace supersym;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content)
{
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << content;
    return path.string();
}

} // namespace

TEST_CASE("expression parsing")
{
    auto e = parse_expression("e[1]*e[1]");
    CHECK(e->kind == Expression::Kind::Mul);

    auto p = parse_expression("m[0~,1] + M[2]");
    CHECK(p->kind == Expression::Kind::Add);
    Value v = evaluate(*p);
    CHECK(v.family == Value::Family::QSym);

    try {
        parse_expression("e[1");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.offset() == 3);
    }

    CHECK_THROWS_AS(parse_expression("q[1]"), ParseError);
    CHECK_THROWS_AS(parse_expression("e[1] + "), ParseError);

    // Rational literals, including the negative fraction form.
    CHECK(evaluate_string("-5/2").scalar == Rational(-5, 2));
    CHECK(evaluate_string("3/6").scalar == Rational(1, 2));
}

TEST_CASE("evaluation and family promotion")
{
    Value v = evaluate_string("et[0]*et[0]");
    CHECK(v.is_zero());
    CHECK(render(v) == "0");

    // m-atom entries may arrive unsorted; the sort sign applies.
    CHECK(evaluate_string("m[1~,2~]").sym == -evaluate_string("m[2~,1~]").sym);
    CHECK_THROWS_AS(evaluate_string("m[1~,1~]"), DomainError);

    // Lambda * QSym promotes to QSym.
    Value mixed = evaluate_string("et[1]*M[1]");
    CHECK(mixed.family == Value::Family::QSym);
    CHECK(mixed.qsym == sqsym::mul(sqsym::include_lambda(slambda::et(1)),
                                   sqsym::M(DottedComposition{{{1, false}}})));

    // H mixes only with scalars.
    Value h = evaluate_string("2*H[1,0~]");
    CHECK(h.family == Value::Family::NSym);
    CHECK_THROWS_AS(evaluate_string("H[1]*e[1]"), DomainError);
}

TEST_CASE("rendered output re-parses to the same value")
{
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        SymSuper f;
        for (int k = 1; k <= 5; ++k) {
            auto basis = superpartitions_of_degree(k);
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            f.add(basis[pick(rng)], coeff(rng));
        }
        CHECK(evaluate_string(render(f)).as_sym() == f);

        // Through the e-basis too.
        EPoly e = slambda::to_e(f);
        CHECK(evaluate_string(render(e)).as_sym() == f);
    }
    for (int trial = 0; trial < 20; ++trial) {
        QSymSuper f;
        for (int k = 1; k <= 4; ++k) {
            auto basis = dotted_compositions_of_degree(k);
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            f.add(basis[pick(rng)], coeff(rng));
        }
        Value v = evaluate_string(render(f));
        if (f.is_zero())
            CHECK(v.is_zero());
        else
            CHECK(v.qsym == f);
    }
}

TEST_CASE("eval command")
{
    auto r = run({"eval", "et[0]*et[0]"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");

    r = run({"eval", "e[1]*e[1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "2*m[1,1] + m[2]\n");

    r = run({"eval", "et[1]", "--basis", "M"});
    CHECK(r.code == 0);
    CHECK(r.out == "M[1,0~] + M[0~,1]\n");

    // JSON schema: basis + terms with exact p/q strings, graded-lex order.
    r = run({"eval", "1/2*e[1]*e[1]", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["basis"] == "m");
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["index"] == "1,1");
    CHECK(j["terms"][0]["coeff"] == "1");
    CHECK(j["terms"][1]["index"] == "2");
    CHECK(j["terms"][1]["coeff"] == "1/2");

    r = run({"eval", "e[1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("offset 3") != std::string::npos);

    r = run({"eval", "M[1,2]", "--basis", "m"});
    CHECK(r.code == 2); // not symmetric
}

TEST_CASE("coproduct, antipode, counit commands")
{
    auto r = run({"coproduct", "et[1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 (x) m[0~,1] + m[1] (x) m[0~] + m[0~] (x) m[1] + m[0~,1] (x) 1\n");

    r = run({"coproduct", "M[2~,1]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("M[2~] (x) M[1]") != std::string::npos);

    r = run({"antipode", "e[2]"});
    CHECK(r.code == 0);
    CHECK(r.out == "m[1,1] + m[2]\n"); // e1^2 - e2 = (m2 + 2m11) - m11... combined in m

    r = run({"counit", "7 + e[2]"});
    CHECK(r.code == 0);
    CHECK(r.out == "7\n");
}

TEST_CASE("zeta command")
{
    CHECK(run({"zeta", "--which", "S", "e[1]"}).out == "1\n");
    CHECK(run({"zeta", "--which", "S", "et[0]"}).out == "eps\n");
    CHECK(run({"zeta", "--which", "Q", "M[3]"}).out == "1\n");
    CHECK(run({"zeta", "--which", "N", "H[1,0~]"}).out == "eps\n");
    CHECK(run({"zeta", "--which", "Q", "M[1,2]"}).out == "0\n");

    auto file = write_temp("supersym_test_zeta.json", R"({"vertices":2,"white":[1]})");
    CHECK(run({"zeta", "--which", "ch", file}).out == "eps\n");
}

TEST_CASE("graph psi command")
{
    // K_{4,1}: complete graph on 4 vertices, one white.
    auto k41 = write_temp("supersym_test_k41.json",
                          R"({"vertices":4,"white":[0],"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    auto r = run({"graph", "psi", k41, "--method", "both", "--basis", "e"});
    CHECK(r.code == 0);
    CHECK(r.out.find("universal: 6*et[3]") != std::string::npos);
    CHECK(r.out.find("coloring:  6*et[3]") != std::string::npos);
    CHECK(r.out.find("methods agree") != std::string::npos);

    // The documented discrepancy: o-o-b path.
    auto wwb = write_temp("supersym_test_wwb.json",
                          R"({"vertices":3,"white":[0,1],"edges":[[0,1],[1,2]]})");
    r = run({"graph", "psi", wwb, "--method", "both"});
    CHECK(r.code == 2);
    CHECK(r.out.find("universal: 0") != std::string::npos);
    CHECK(r.out.find("coloring:  m[1~,0~]") != std::string::npos);
    CHECK(r.out.find("DISAGREE") != std::string::npos);

    r = run({"graph", "psi", wwb, "--method", "coloring"});
    CHECK(r.code == 2);
    CHECK(r.err.find("white") != std::string::npos);

    r = run({"graph", "psi", wwb, "--method", "universal"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");

    // JSON output of the discrepancy is structured.
    r = run({"graph", "psi", wwb, "--method", "both", "--json"});
    CHECK(r.code == 2);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["admissible"] == false);
    CHECK(j["agree"] == false);
    CHECK(j["universal"]["terms"].empty());
    CHECK(j["coloring"]["terms"].size() == 1);
}

TEST_CASE("verify command")
{
    auto r = run({"verify", "--algebra", "sqsym", "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("cocommutative: false") != std::string::npos);

    r = run({"verify", "--algebra", "lambda", "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("cocommutative: true") != std::string::npos);

    r = run({"verify", "--algebra", "nosuch", "--max-degree", "3"});
    CHECK(r.code == 2);
}

TEST_CASE("bases command")
{
    auto r = run({"bases", "--family", "superpartitions", "--degree", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "(;1)\n(0;)\n");

    r = run({"bases", "--family", "dotted", "--degree", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "[1]\n[0~]\n");

    r = run({"bases", "--family", "dotted", "--degree", "4", "--json"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["labels"].size() == 54);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"eval"}).code == 1);
}
