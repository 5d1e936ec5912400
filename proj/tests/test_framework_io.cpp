#include <doctest.h>

#include <random>

#include "argmat/errors.hpp"
#include "argmat/framework.hpp"
#include "argmat/io.hpp"
#include "support/fixtures.hpp"

using namespace argmat;
using namespace argmat::testing;

TEST_CASE("build assigns 1-based indices in declaration order") {
    const Framework f = defense6();
    CHECK(f.size() == 6);
    CHECK(f.attack_count() == 6);
    CHECK(f.name(1) == "1");
    CHECK(f.name(6) == "6");
    CHECK(f.require_index("5") == 5);
    CHECK(f.attacks(2, 1));
    CHECK(f.attacks(5, 4));
    CHECK_FALSE(f.attacks(1, 2));
}

TEST_CASE("build accepts the empty framework") {
    const Framework f = Framework::build({}, {});
    CHECK(f.size() == 0);
    CHECK(f.attack_count() == 0);
}

TEST_CASE("build accepts a single self-attacker") {
    const Framework f = Framework::build({"a"}, {{"a", "a"}});
    CHECK(f.size() == 1);
    CHECK(f.attacks(1, 1));
}

TEST_CASE("build collapses duplicate attack pairs") {
    const Framework f = Framework::build({"a", "b"}, {{"a", "b"}, {"a", "b"}});
    CHECK(f.attack_count() == 1);
}

TEST_CASE("build rejects bad input") {
    CHECK_THROWS_AS(Framework::build({"a", "a"}, {}), DuplicateNameError);
    CHECK_THROWS_AS(Framework::build({"a"}, {{"a", "b"}}), UnknownArgumentError);
    CHECK_THROWS_AS(Framework::build({""}, {}), InvalidNameError);
    CHECK_THROWS_AS(Framework::build({"a b"}, {}), InvalidNameError);
}

TEST_CASE("index/name bijection") {
    const Framework f = defense6_letters();
    for (ArgId k = 1; k <= f.size(); ++k) {
        CHECK(f.require_index(f.name(k)) == k);
    }
    CHECK_FALSE(f.index_of("zz").has_value());
}

TEST_CASE("parse_apx minimal file") {
    const Framework f = parse_apx("arg(a).\narg(b).\natt(a,b).");
    CHECK(f.size() == 2);
    CHECK(f.attacks(1, 2));
    CHECK(f.attack_count() == 1);
}

TEST_CASE("parse_apx matches the 3-cycle built by hand") {
    const Framework f = parse_apx("arg(1).\narg(2).\narg(3).\n"
                                  "att(1,2).\natt(2,3).\natt(3,1).\n");
    CHECK(f == cycle3());
}

TEST_CASE("parse_apx tolerates comments and spacing") {
    const Framework f = parse_apx("% a comment\n\n  arg( a ).\narg(b).\n att( a , b ). \n");
    CHECK(f.size() == 2);
    CHECK(f.attacks(1, 2));
}

TEST_CASE("parse_apx rejects undeclared endpoints") {
    CHECK_THROWS_AS(parse_apx("att(x,y)."), UnknownArgumentError);
}

TEST_CASE("parse_apx reports the failing line") {
    try {
        parse_apx("arg(a).\nbogus line\n");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_apx("arg(a).\narg(a)."), DuplicateNameError);
}

TEST_CASE("parse_tgf minimal file") {
    const Framework f = parse_tgf("1\n2\n#\n1 2");
    CHECK(f.size() == 2);
    CHECK(f.attacks(1, 2));
}

TEST_CASE("parse_tgf matches mutual4") {
    const Framework f = parse_tgf("1\n2\n3\n4\n#\n1 2\n1 3\n2 1\n2 3\n3 4\n");
    CHECK(f == mutual4());
}

TEST_CASE("parse_tgf requires the separator") {
    CHECK_THROWS_AS(parse_tgf("1\n2\n1 2"), SyntaxError);
    CHECK_THROWS_AS(parse_tgf("1\n2"), SyntaxError);
    CHECK_THROWS_AS(parse_tgf("1\n2\n#\n1 2 3"), SyntaxError);
}

TEST_CASE("export dot is deterministic and ordered") {
    CHECK(to_dot(Framework::build({}, {})) == "digraph af {\n}\n");

    const std::string dot = to_dot(cycle3());
    CHECK(dot == "digraph af {\n"
                 "  \"1\";\n  \"2\";\n  \"3\";\n"
                 "  \"1\" -> \"2\";\n  \"2\" -> \"3\";\n  \"3\" -> \"1\";\n"
                 "}\n");
    CHECK(to_dot(cycle3()) == dot);

    const std::string six = to_dot(defense6());
    CHECK(six.find("\"2\" -> \"1\";") != std::string::npos);
    CHECK(six.find("\"6\" -> \"3\";") != std::string::npos);
}

TEST_CASE("serialize/parse round-trips preserve the framework") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const Framework f = random_framework(1 + trial % 9, 0.3, rng);
        CHECK(parse_apx(to_apx(f)) == f);
        CHECK(parse_tgf(to_tgf(f)) == f);
    }
    const Framework letters = defense6_letters();
    CHECK(parse_apx(to_apx(letters)) == letters);
    CHECK(parse_tgf(to_tgf(letters)) == letters);
}

TEST_CASE("read_framework_file infers format from the extension") {
    CHECK_THROWS_AS(read_framework_file("/nonexistent/x.apx", InputFormat::auto_detect), IoError);
    CHECK_THROWS_AS(read_framework_file("whatever.txt", InputFormat::auto_detect), Error);
}
