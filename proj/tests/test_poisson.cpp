#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncalg/parse.hpp"
#include "ncalg/poisson.hpp"
#include "ncalg/presets.hpp"
#include "ncalg/rewrite.hpp"

using namespace ncalg;

namespace {

std::mt19937_64 rng(5150);

CommPoly3 random_poly3(int max_deg = 3, int terms = 4) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> e(0, max_deg);
    CommPoly3 p;
    for (int t = 0; t < terms; ++t) {
        std::array<int, 3> key{e(rng), e(rng), e(rng)};
        int total = key[0] + key[1] + key[2];
        if (total > max_deg) continue;
        p.add(key, Rational(coeff(rng)));
    }
    return p;
}

LaurentPoly2 random_laurent2(std::array<bool, 2> flags, int span = 3) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    LaurentPoly2 p(flags);
    for (int t = 0; t < 4; ++t) {
        std::uniform_int_distribution<int> ex(flags[0] ? -span : 0, span);
        std::uniform_int_distribution<int> ey(flags[1] ? -span : 0, span);
        p.add({ex(rng), ey(rng)}, Rational(coeff(rng)));
    }
    return p;
}

CommPoly3 to_poly3(const NCPoly& p) {
    CommPoly3 out;
    for (const auto& [w, c] : p.terms()) {
        std::array<int, 3> e{0, 0, 0};
        for (char ch : w) e.at(static_cast<unsigned char>(ch)) += 1;
        out.add(e, c.rational_value());
    }
    return out;
}

const CommPoly3 kLocenvF = parse_poly3("x1*(4 - x3^2) + x2^2");
const CommPoly3 kQtorusF = parse_poly3("x1*x2*x3 - x1^2 - x2^2 - x3^2 + 4");

}  // namespace

TEST_CASE("exact bracket evaluations") {
    ExactBracket locenv{kLocenvF};
    CHECK(locenv.bracket(CommPoly3::var(0), CommPoly3::var(1)) == parse_poly3("-2*x1*x3"));
    CHECK(locenv.bracket(kLocenvF, random_poly3()).is_zero());

    ExactBracket qtorus{kQtorusF};
    CHECK(qtorus.bracket(CommPoly3::var(1), CommPoly3::var(2)) == parse_poly3("x2*x3 - 2*x1"));
}

TEST_CASE("hamiltonian coefficient triples") {
    ExactBracket locenv{kLocenvF};
    auto h1 = locenv.hamiltonian(CommPoly3::var(0));
    CHECK(h1[0].is_zero());
    CHECK(h1[1] == parse_poly3("-2*x1*x3"));
    CHECK(h1[2] == parse_poly3("-2*x2"));

    auto hf = locenv.hamiltonian(kLocenvF);
    CHECK(hf[0].is_zero());
    CHECK(hf[1].is_zero());
    CHECK(hf[2].is_zero());

    auto h3 = locenv.hamiltonian(CommPoly3::var(2));
    CHECK(h3[0] == parse_poly3("2*x2"));
    CHECK(h3[1] == parse_poly3("-(4 - x3^2)"));
    CHECK(h3[2].is_zero());
}

TEST_CASE("plane brackets with Laurent variables") {
    std::array<bool, 2> lflags{true, false};
    PlaneBracket locenv{LaurentPoly2::monomial(lflags, {1, 0})};
    CHECK(locenv.bracket(parse_laurent2("x^-1", lflags), parse_laurent2("y", lflags)) ==
          parse_laurent2("-x^-1", lflags));

    std::array<bool, 2> qflags{true, true};
    PlaneBracket qtorus{LaurentPoly2::monomial(qflags, {1, 1})};
    CHECK(qtorus.bracket(parse_laurent2("x^-1", qflags), parse_laurent2("y^-1", qflags)) ==
          parse_laurent2("x^-1*y^-1", qflags));

    LaurentPoly2 g = random_laurent2(qflags);
    CHECK(qtorus.bracket(g, g).is_zero());
}

TEST_CASE("hamiltonian derivations have the localized form") {
    std::array<bool, 2> lflags{true, false};
    PlaneBracket locenv{LaurentPoly2::monomial(lflags, {1, 0})};
    LaurentPoly2 x = parse_laurent2("x", lflags);
    LaurentPoly2 y = parse_laurent2("y", lflags);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly2 h = random_laurent2(lflags);
        CHECK(locenv.bracket(x, h) == x * h.partial(1));   // ham x = x d/dy
        CHECK(locenv.bracket(y, h) == -(x * h.partial(0)));  // ham y = -x d/dx
    }
    std::array<bool, 2> qflags{true, true};
    PlaneBracket qtorus{LaurentPoly2::monomial(qflags, {1, 1})};
    LaurentPoly2 xy = parse_laurent2("x*y", qflags);
    for (int i = 0; i < 50; ++i) {
        LaurentPoly2 h = random_laurent2(qflags);
        CHECK(qtorus.bracket(parse_laurent2("x", qflags), h) == xy * h.partial(1));
        CHECK(qtorus.bracket(parse_laurent2("y", qflags), h) == -(xy * h.partial(0)));
    }
}

TEST_CASE("poisson automorphism checks") {
    SurfaceModel locenv = surface_model(SurfaceCase::locenv);
    CHECK(is_poisson_automorphism(locenv.plane, locenv.pi));

    SurfaceModel qtorus = surface_model(SurfaceCase::qtorus);
    CHECK(is_poisson_automorphism(qtorus.plane, qtorus.pi));

    MonomialMap bad;
    std::array<bool, 2> lflags{true, false};
    bad.image_x = LaurentPoly2::monomial(lflags, {-1, 0});
    bad.image_y = LaurentPoly2::monomial(lflags, {0, 1});
    CHECK_FALSE(is_poisson_automorphism(locenv.plane, bad));
}

TEST_CASE("surface models verify") {
    CHECK(verify_surface_model(SurfaceCase::locenv).ok());
    CHECK(verify_surface_model(SurfaceCase::qtorus).ok());

    SurfaceModel m = surface_model(SurfaceCase::locenv);
    CHECK(m.plane.bracket(m.inv[2], m.inv[0]) == m.inv[1].scaled(Rational(2)));
    CHECK(substitute3(m.potential, m.inv).is_zero());

    SurfaceModel q = surface_model(SurfaceCase::qtorus);
    LaurentPoly2 expect = q.inv[0] * q.inv[2] - q.inv[1].scaled(Rational(2));
    CHECK(q.plane.bracket(q.inv[2], q.inv[0]) == expect);
}

TEST_CASE("poisson points on the singular surfaces") {
    ExactBracket locenv{kLocenvF};
    CHECK(locenv.is_poisson_point({0, 0, 2}));
    CHECK(locenv.is_poisson_point({0, 0, -2}));
    ExactBracket qtorus{kQtorusF};
    CHECK(qtorus.is_poisson_point({2, 2, 2}));
    CHECK_THROWS_AS(qtorus.is_poisson_point({0, 0, 0}), std::domain_error);

    // rational grid scan: exactly the listed points pass
    auto scan = [](const ExactBracket& b) {
        std::vector<std::array<Rational, 3>> found;
        for (int i = -2; i <= 2; ++i)
            for (int j = -2; j <= 2; ++j)
                for (int k = -2; k <= 2; ++k) {
                    std::array<Rational, 3> p{i, j, k};
                    if (b.potential.eval(p) != 0) continue;
                    if (b.is_poisson_point(p)) found.push_back(p);
                }
        return found;
    };
    auto le = scan(locenv);
    REQUIRE(le.size() == 2);
    CHECK(le[0] == std::array<Rational, 3>{0, 0, -2});
    CHECK(le[1] == std::array<Rational, 3>{0, 0, 2});
    auto qt = scan(qtorus);
    REQUIRE(qt.size() == 4);
    CHECK(qt[0] == std::array<Rational, 3>{-2, -2, 2});
    CHECK(qt[1] == std::array<Rational, 3>{-2, 2, -2});
    CHECK(qt[2] == std::array<Rational, 3>{2, -2, -2});
    CHECK(qt[3] == std::array<Rational, 3>{2, 2, 2});
}

TEST_CASE("weyl invariant ideal brackets") {
    WeylReport rep = weyl_invariant_ideal_check();
    CHECK(rep.sq_x_vs_xy);
    CHECK(rep.sq_x_vs_sq_y);
    CHECK(rep.xy_vs_sq_y);
    CHECK(rep.ok());
}

TEST_CASE("jacobi identity for exact brackets") {
    for (int trial = 0; trial < 100; ++trial) {
        ExactBracket b{random_poly3()};
        CommPoly3 g = random_poly3(), h = random_poly3(), k = random_poly3();
        CommPoly3 j = b.bracket(g, b.bracket(h, k)) + b.bracket(h, b.bracket(k, g)) +
                      b.bracket(k, b.bracket(g, h));
        CHECK(j.is_zero());
    }
}

TEST_CASE("jacobi identity for plane brackets") {
    for (auto flags : {std::array<bool, 2>{true, false}, std::array<bool, 2>{true, true}}) {
        PlaneBracket b{random_laurent2(flags, 1)};
        for (int trial = 0; trial < 100; ++trial) {
            LaurentPoly2 g = random_laurent2(flags), h = random_laurent2(flags),
                         k = random_laurent2(flags);
            LaurentPoly2 j = b.bracket(g, b.bracket(h, k)) + b.bracket(h, b.bracket(k, g)) +
                             b.bracket(k, b.bracket(g, h));
            CHECK(j.is_zero());
        }
    }
}

TEST_CASE("leibniz rule") {
    for (int trial = 0; trial < 100; ++trial) {
        ExactBracket b{random_poly3()};
        CommPoly3 g = random_poly3(), h = random_poly3(), k = random_poly3();
        CHECK(b.bracket(g, h * k) == b.bracket(g, h) * k + h * b.bracket(g, k));
    }
    std::array<bool, 2> flags{true, true};
    PlaneBracket p{LaurentPoly2::monomial(flags, {1, 1})};
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly2 g = random_laurent2(flags), h = random_laurent2(flags),
                     k = random_laurent2(flags);
        CHECK(p.bracket(g, h * k) == p.bracket(g, h) * k + h * p.bracket(g, k));
    }
}

TEST_CASE("semiclassical limits agree with the exact brackets") {
    struct Case {
        const char* preset;
        Rational at;
        const CommPoly3* potential;
    };
    std::vector<Case> cases = {{"T5", Rational(0), &kLocenvF}, {"T6", Rational(1), &kQtorusF}};
    for (const auto& c : cases) {
        ReductionSystem sys = algebra_preset(c.preset).sys;
        ExactBracket exact{*c.potential};
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
        for (const auto& [i, j] : pairs) {
            NCPoly lhs = induced_poisson_bracket(sys, NCPoly::gen(i), NCPoly::gen(j), c.at);
            CHECK(to_poly3(lhs) == exact.bracket(CommPoly3::var(i), CommPoly3::var(j)));
        }
    }
}

TEST_CASE("graded semiclassics recover the degenerate potentials") {
    struct Case {
        const char* preset;
        Rational at;
        const char* potential;
    };
    std::vector<Case> cases = {
        {"T5_gr_alt", Rational(0), "x2^2 - x3^2*x1"},
        {"T5_gr_heis", Rational(0), "x2^2"},
        {"T6_gr_alt", Rational(1), "x1*x2*x3 - x1^2"},
        {"T6_gr_d1", Rational(1), "x1*x2*x3 - x2^2 - x3^2"},
        {"T6_gr_d2", Rational(1), "x1*x2*x3"},
    };
    for (const auto& c : cases) {
        ReductionSystem sys = algebra_preset(c.preset).sys;
        ExactBracket exact{parse_poly3(c.potential)};
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
        for (const auto& [i, j] : pairs) {
            NCPoly lhs = induced_poisson_bracket(sys, NCPoly::gen(i), NCPoly::gen(j), c.at);
            CHECK(to_poly3(lhs) == exact.bracket(CommPoly3::var(i), CommPoly3::var(j)));
        }
    }
}
