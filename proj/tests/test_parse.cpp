#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncalg/parse.hpp"
#include "ncalg/presets.hpp"
#include "ncalg/rewrite.hpp"

using namespace ncalg;

TEST_CASE("presentation files round-trip through printing") {
    for (const char* name : {"T5", "T1", "T6", "Tq", "Tq(3/2)", "Tq_abc(1-q,1-q,1-q)",
                             "T6_quot(0)", "T6_quot(3)", "T5_gr_alt", "T6_gr_d1",
                             "toy_nonconfluent"}) {
        PresentationFile f = algebra_preset(name);
        std::string text = print_presentation(f.name, f.sys);
        PresentationFile g = parse_presentation(text);
        CHECK(print_presentation(g.name, g.sys) == text);
        CHECK(g.sys.alphabet() == f.sys.alphabet());
        REQUIRE(g.sys.relations().size() == f.sys.relations().size());
        for (size_t i = 0; i < f.sys.relations().size(); ++i) {
            CHECK(g.sys.relations()[i].lead == f.sys.relations()[i].lead);
            CHECK(g.sys.relations()[i].replacement == f.sys.relations()[i].replacement);
        }
        CHECK(g.sys.orientation() == f.sys.orientation());
    }
}

TEST_CASE("skew files round-trip through printing") {
    for (const char* name : {"V", "Vt", "Wq(2)", "Wq", "WQ"}) {
        SkewFile f = skew_preset(name);
        std::string text = print_skewfile(f.name, f.ctx);
        SkewFile g = parse_skewfile(text);
        CHECK(print_skewfile(g.name, g.ctx) == text);
        CHECK(g.ring == f.ring);
        CHECK(g.ctx.alpha().image() == f.ctx.alpha().image());
        CHECK(g.ctx.gamma().image() == f.ctx.gamma().image());
    }
}

TEST_CASE("the symbolic preset parses to the expected shape") {
    PresentationFile f = algebra_preset("Tq");
    CHECK(f.sys.relations().size() == 3);
    CHECK(ambiguities(f.sys).size() == 1);
    CHECK(f.sys.mode() == ScalarMode::laurent);
    CHECK(f.sys.parameter() == "q");
}

TEST_CASE("auto-orientation picks the order-largest monomial") {
    PresentationFile f = parse_presentation(R"(algebra flip
mode rational
generators x1 x2
order dlex
x2*x1 = x1*x2 - x2
)");
    REQUIRE(f.sys.relations().size() == 1);
    CHECK(f.sys.relations()[0].lead == make_word({0, 1}));
    CHECK(f.sys.relations()[0].replacement ==
          parse_poly("x2*x1 + x2", f.sys.alphabet(), ScalarMode::rational, ""));
}

TEST_CASE("orientation failures are reported") {
    CHECK_THROWS_AS(parse_presentation(R"(algebra bad
mode rational
generators x1 x2 x3
order dlex
x1*x2 = x1*x2 + x3
)"),
                    parse_error);
    // '=' has no meaning without an order
    CHECK_THROWS_AS(parse_presentation(R"(algebra bad
mode rational
generators x1 x2
order explicit
x1*x2 = x2*x1
)"),
                    parse_error);
    // non-unit leading coefficient in a parametric mode
    CHECK_THROWS_AS(parse_presentation(R"(algebra bad
mode polynomial t
generators x1 x2
order dlex
(1 + t)*x1*x2 -> x2*x1
)"),
                    parse_error);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_presentation(R"(algebra bad
mode rational
generators x1 x2
order dlex
x1*x2 -> x2*)
)");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line == 5);
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }
    try {
        parse_poly("x1 + x9", make_alphabet({"x1", "x2"}), ScalarMode::rational, "");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.column == 6);
    }
}

TEST_CASE("unknown generators and duplicate names are rejected") {
    CHECK_THROWS_AS(parse_presentation(R"(algebra bad
mode rational
generators x1 x1
order dlex
)"),
                    parse_error);
    CHECK_THROWS_AS(parse_presentation(R"(algebra bad
mode rational
generators x1 x2
order dlex
x1*zz -> x2
)"),
                    parse_error);
}

TEST_CASE("an empty relation block is a free algebra") {
    PresentationFile f = parse_presentation(R"(algebra free
mode rational
generators x1 x2 x3
order dlex
)");
    CHECK(f.sys.relations().empty());
    CHECK(check_confluence(f.sys).confluent);
    NCPoly p = parse_poly("x1*x2*x3 + x3*x2*x1", f.sys.alphabet(), ScalarMode::rational, "");
    CHECK(normal_form(f.sys, p) == p);
}

TEST_CASE("skew file validation") {
    CHECK_THROWS_AS(parse_skewfile(R"(skew bad
mode rational
base y poly
alpha y -> y + 1
alpha_inv y -> y + 1
gamma y -> -y
)"),
                    std::exception);  // declared inverse does not invert
    CHECK_THROWS_AS(parse_skewfile(R"(skew bad
mode rational
base y poly
alpha y -> y^2
alpha_inv y -> y
gamma y -> -y
)"),
                    std::exception);  // image not degree one
}

TEST_CASE("scalar text accepts the documented syntax") {
    CHECK(parse_scalar("3/2", ScalarMode::rational, "") == Scalar(rat_make(3, 2)));
    CHECK(parse_scalar("t^3", ScalarMode::polynomial, "t") ==
          Scalar::param_power(ScalarMode::polynomial, "t", 3));
    CHECK(parse_scalar("Q^-2", ScalarMode::laurent, "Q") ==
          Scalar::param_power(ScalarMode::laurent, "Q", -2));
    CHECK(parse_scalar("(1 - Q)*(1 + Q)", ScalarMode::laurent, "Q") ==
          parse_scalar("1 - Q^2", ScalarMode::laurent, "Q"));
    CHECK_THROWS_AS(parse_scalar("t^-1", ScalarMode::polynomial, "t"), parse_error);
}
