#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polybound/cli.hpp"
#include "polybound/parse.hpp"
#include "polybound/report.hpp"
#include "test_util.hpp"

using namespace polybound;
using nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream o, e;
    int c = run_cli(args, o, e);
    return {c, o.str(), e.str()};
}

json jout(const CliResult& r) { return json::parse(r.out); }

QPoly qmk(const RegistryPtr& reg, std::vector<std::pair<std::vector<int>, Rat>> terms) {
    QPoly p(reg);
    for (auto& [es, c] : terms) {
        Monomial m(reg->size());
        for (std::size_t i = 0; i < es.size(); ++i) m.e[i] = es[i];
        p.add_term(m, c);
    }
    return p;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("expressions parse to exact polynomials") {
    auto reg = make_registry({"x1", "x2"});
    QPoly x1 = QPoly::variable(reg, 0), x2 = QPoly::variable(reg, 1);
    QPoly one = QPoly::constant(reg, Rat(1));

    CHECK(parse_poly("(x1*x2-1)^2 + x2^2") == (x1 * x2 - one) * (x1 * x2 - one) + x2 * x2);
    CHECK(parse_poly("x1*x2^2 - 3*x1^2*x2^2 + 1") ==
          qmk(reg, {{{1, 2}, 1}, {{2, 2}, -3}, {{0, 0}, 1}}));
    CHECK(parse_poly("0.5*x1 + 2.25", std::vector<std::string>{"x1", "x2"}) ==
          qmk(reg, {{{1, 0}, rat(1, 2)}, {{0, 0}, rat(9, 4)}}));
    CHECK(parse_poly("3/4*x1", std::vector<std::string>{"x1", "x2"}) ==
          qmk(reg, {{{1, 0}, rat(3, 4)}}));
    CHECK(parse_poly("x1/2", std::vector<std::string>{"x1", "x2"}) ==
          qmk(reg, {{{1, 0}, rat(1, 2)}}));
    CHECK(parse_poly("(x1+1)/2", std::vector<std::string>{"x1", "x2"}) ==
          qmk(reg, {{{1, 0}, rat(1, 2)}, {{0, 0}, rat(1, 2)}}));
    CHECK(parse_poly("-x1^2", std::vector<std::string>{"x1", "x2"}) ==
          qmk(reg, {{{2, 0}, -1}}));
    CHECK(parse_poly("x1^2^3", std::vector<std::string>{"x1", "x2"}) ==
          qmk(reg, {{{8, 0}, 1}})); // right-associative exponent tower
    CHECK(parse_poly("x1 + x2*x1^2", std::vector<std::string>{"x1", "x2"}) ==
          qmk(reg, {{{1, 0}, 1}, {{2, 1}, 1}}));
    CHECK(parse_poly("2 - -3").constant_value() == 5);
    CHECK(parse_poly("x1^0", std::vector<std::string>{"x1", "x2"}) == one);

    CHECK(parse_rat("7") == 7);
    CHECK(parse_rat("-3/4") == rat(-3, 4));
    CHECK(parse_rat("2.125") == rat(17, 8));
}

TEST_CASE("parse failures carry kinds and positions") {
    CHECK_THROWS_AS(parse_poly("x1/x2"), NonPolynomial);
    CHECK_THROWS_AS(parse_poly("x1/(x2+1)"), NonPolynomial);
    CHECK_THROWS_AS(parse_poly("x1^(1/2)"), NonPolynomial);
    CHECK_THROWS_AS(parse_poly("x1^-2"), NonPolynomial);
    CHECK_THROWS_AS(parse_poly("x1^x2"), NonPolynomial);
    CHECK_THROWS_AS(parse_poly("x1/0"), DivisionByZero);
    CHECK_THROWS_AS(parse_poly("x1^9999999"), ResourceLimit);

    auto position_of = [](const std::string& text) {
        try {
            parse_poly(text);
        } catch (const SyntaxError& e) {
            return e.position;
        }
        return std::size_t{0};
    };
    CHECK(position_of("2 x1") == 3);
    CHECK(position_of("x1 + * x2") == 6);
    CHECK(position_of("(x1") == 4);
    CHECK(position_of("x1 @ x2") == 4);
    CHECK(position_of("1.") == 3);
    CHECK(position_of("") == 1);
}

TEST_CASE("variable declarations pin the order") {
    QPoly a = parse_poly("x2 + x1");
    CHECK(*a.registry() == VarRegistry{"x2", "x1"});
    QPoly b = parse_poly("x2 + x1", std::vector<std::string>{"x1", "x2"});
    CHECK(*b.registry() == VarRegistry{"x1", "x2"});
    CHECK(parse_poly("x1", std::vector<std::string>{"x1", "x2"}).nvars() == 2);

    try {
        parse_poly("x1 + x3", std::vector<std::string>{"x1", "x2"});
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(e.position == 6);
    }
    CHECK_THROWS_AS(parse_poly("x1", std::vector<std::string>{"x1", "x1"}), VariableCollision);
}

TEST_CASE("printing round-trips through the parser") {
    auto reg = make_registry({"x1", "x2", "x3"});
    testutil::Rng rng(2024);
    for (int trial = 0; trial < 30; ++trial) {
        QPoly p(reg);
        int nterms = static_cast<int>(rng.range(0, 6));
        for (int t = 0; t < nterms; ++t) {
            Monomial m(3);
            for (int v = 0; v < 3; ++v)
                m.e[static_cast<std::size_t>(v)] = static_cast<int>(rng.range(0, 4));
            p.add_term(m, testutil::random_rat(rng));
        }
        CHECK(parse_poly(p.str(), *p.registry()) == p);
    }
}

TEST_CASE("json reports keep a fixed schema") {
    CliResult r = run({"lbound", "x1 - x2", "--point", "1,3", "--json"});
    REQUIRE(r.code == 1);
    json j = jout(r);
    for (const char* key :
         {"command", "input", "vars", "point", "t_good", "theta", "phi", "deg_phi", "signs_F",
          "signs_R", "v_F", "v_R", "v", "sequence", "verdict", "retries", "timings_ms", "stats",
          "minors", "first_failure", "error"})
        CHECK(j.contains(key));
    CHECK(j["command"] == "lbound");
    CHECK(j["verdict"] == false);
    CHECK(j["v"] == 1);
    CHECK(j["deg_phi"] == 2);
    CHECK(j["phi"] == json::parse(R"([["-2","4"],["0","4"],["0","1"]])"));
    CHECK(j["theta"] == json::parse(R"([["-1","2"],["0","-4"],["0","2"]])"));
    CHECK(j["point"] == json::parse(R"(["1","3"])"));
    CHECK(j["error"].is_null());
    CHECK(j["sequence"].is_null());

    // golden file: everything except wall-clock timings is bit-stable
    std::ifstream golden(TEST_DATA_DIR "/cli_lbound.json");
    REQUIRE(golden.good());
    json g = json::parse(golden);
    g.erase("timings_ms");
    j.erase("timings_ms");
    CHECK(j == g);
}

TEST_CASE("exit codes follow the verdict contract") {
    CHECK(run({"lbound", "x1^2 + x2^2", "--point", "1,1"}).code == 0);
    CHECK(run({"lbound", "x1 - x2", "--point", "1,3"}).code == 1);

    CliResult inc = run({"lbound", "(x1*x2-1)^2 + x2^2", "--point", "0,0"});
    CHECK(inc.code == 2);
    CHECK(inc.err.find("attempt") != std::string::npos);
    CHECK(inc.out.empty()); // text mode: diagnostics on stderr only

    CliResult syn = run({"lbound", "x1 +"});
    CHECK(syn.code == 3);
    CHECK(syn.err.find("syntax error") != std::string::npos);
    CHECK(run({"lbound", "x1/x2"}).code == 3);
    CHECK(run({"nonneg", "x1^2 + x2^2 - 3*x1*x2 + 1", "--point", "1,2"}).code == 3);
    CHECK(run({"lbound", "x1^2", "--budget", "1"}).code == 4);
    CHECK(run({"sturm", "t^2 - 2*t + 1"}).code == 3);  // not square-free
    CHECK(run({"sturm", "y^2 - 1"}).code == 3);        // only t and w are declared
    CHECK(run({"badcmd", "x1"}).code == 3);
    CHECK(run({"lbound"}).code == 3);
    CHECK(run({}).code == 3);

    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("lbound") != std::string::npos);

    // json mode: failures still emit a schema-stable object
    CliResult jinc = run({"lbound", "(x1*x2-1)^2 + x2^2", "--point", "0,0", "--json"});
    CHECK(jinc.code == 2);
    json ji = jout(jinc);
    CHECK(ji["verdict"].is_null());
    CHECK(ji["error"].is_string());
}

TEST_CASE("tangency and sturm subcommands emit kernel data") {
    CliResult t = run({"tangency", "(x1*x2-1)^2 + x2^2", "--point", "1,3", "--json"});
    CHECK(t.code == 0);
    json jt = jout(t);
    CHECK(jt["t_good"] == true);
    CHECK(jt["deg_phi"] == 8);
    CHECK(jt["theta"].is_array());
    CHECK(jt["theta"].size() == 9);
    CHECK(jt["verdict"].is_null());
    CHECK(jt["v"].is_null());

    CliResult bad = run({"tangency", "(x1*x2-1)^2 + x2^2", "--point", "0,0"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("t_good no") != std::string::npos);

    CliResult s = run({"sturm", "w*t^2 + 4*w*t + 4*w - 2", "--json"});
    CHECK(s.code == 0);
    json js = jout(s);
    CHECK(js["signs_F"] == json::parse(R"(["+","-","+"])"));
    CHECK(js["signs_R"] == json::parse(R"(["-","-","+"])"));
    CHECK(js["v"] == 1);
    REQUIRE(js["sequence"].is_array());
    REQUIRE(js["sequence"].size() == 3);
    CHECK(js["sequence"][0] == json::parse(R"([["-2","4"],["0","4"],["0","1"]])"));
    CHECK(js["sequence"][1] == json::parse(R"([["2"],["1"]])"));
    CHECK(js["sequence"][2] == json::parse(R"([["1"]])"));
}

TEST_CASE("convex subcommand reports minors") {
    CliResult r = run({"convex", "x1^4 + x2^4 + 10*x1^2*x2^2", "--json"});
    CHECK(r.code == 1);
    json j = jout(r);
    CHECK(j["verdict"] == false);
    CHECK(j["first_failure"] == json::parse("[1,2]"));
    REQUIRE(j["minors"].size() == 3);
    CHECK(j["minors"][0]["verdict"] == true);
    CHECK(j["minors"][1]["verdict"] == true);
    CHECK(j["minors"][2]["index_set"] == json::parse("[1,2]"));
    CHECK(j["minors"][2]["verdict"] == false);

    CliResult text = run({"convex", "x1^4 + x2^4 + 10*x1^2*x2^2"});
    CHECK(text.out.find("first failure {1,2}") != std::string::npos);
}

TEST_CASE("seed flag, environment default, and replay determinism") {
    CliResult a = run({"lbound", "x1^2 + x2^2", "--seed", "7", "--json"});
    REQUIRE(a.code == 0);

    setenv("POLYBOUND_SEED", "7", 1);
    CliResult b = run({"lbound", "x1^2 + x2^2", "--json"});
    CliResult c = run({"lbound", "x1^2 + x2^2", "--seed", "9", "--json"});
    unsetenv("POLYBOUND_SEED");
    CliResult d = run({"lbound", "x1^2 + x2^2", "--seed", "9", "--json"});

    CHECK(jout(b)["point"] == jout(a)["point"]); // env var supplies the default
    CHECK(jout(c)["point"] == jout(d)["point"]); // but the flag wins over it

    json ja = jout(a), jrep = jout(run({"lbound", "x1^2 + x2^2", "--seed", "7", "--json"}));
    ja.erase("timings_ms");
    jrep.erase("timings_ms");
    CHECK(ja == jrep); // identical replay, wall clock aside
}

TEST_CASE("batch table mode") {
    std::istringstream in("x1^2 + x2^2\n\n# comment\nbad ++\nx1 - x2 | point=1,3\n"
                          "x2 - x1 | vars=x2,x1 | point=2,-1\n");
    std::ostringstream out, err;
    CHECK(emit_table(in, out, err, {}) == 0);
    std::string table = out.str();
    CHECK(table.find("deg phi") != std::string::npos);
    CHECK(table.find("ERROR") != std::string::npos);
    CHECK(table.find("true") != std::string::npos);
    CHECK(table.find("false") != std::string::npos);
    CHECK(err.str().find("line 4") != std::string::npos);

    std::istringstream empty("");
    std::ostringstream out2, err2;
    CHECK(emit_table(empty, out2, err2, {}) == 0);
    CHECK(out2.str().find("input") != std::string::npos); // header only
    CHECK(err2.str().empty());

    CHECK(run({"table", "/nonexistent/batch.txt"}).code == 3);
}

} // TEST_SUITE
