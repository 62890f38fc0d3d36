#include "ncalg/suite.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ncalg/graded.hpp"
#include "ncalg/parse.hpp"
#include "ncalg/poisson.hpp"
#include "ncalg/presets.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/skew.hpp"

namespace ncalg {

namespace {

struct Checker {
    CheckResult result;

    explicit Checker(std::string id, std::string title) {
        result.id = std::move(id);
        result.title = std::move(title);
        result.pass = true;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) {
            result.pass = false;
            result.notes.push_back(what);
        }
    }
};

NCPoly sys_poly(const ReductionSystem& sys, const std::string& text) {
    return parse_poly(text, sys.alphabet(), sys.mode(), sys.parameter());
}

BaseElem random_base(std::mt19937_64& rng, const BaseRing& ring, int max_deg) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    std::uniform_int_distribution<int> exp(ring.laurent ? -max_deg : 0, max_deg);
    std::uniform_int_distribution<int> pexp(0, 2);
    std::uniform_int_distribution<int> terms(1, 3);
    BaseElem r;
    int n = terms(rng);
    for (int i = 0; i < n; ++i) {
        Scalar c(Rational(coeff(rng)));
        if (ring.mode != ScalarMode::rational)
            c = c * Scalar::param_power(ring.mode, ring.param, pexp(rng));
        r.add(exp(rng), c);
    }
    return r;
}

CommPoly3 random_poly3(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> e(0, 3);
    CommPoly3 p;
    for (int t = 0; t < 4; ++t) {
        std::array<int, 3> key{e(rng), e(rng), e(rng)};
        if (key[0] + key[1] + key[2] > 3) continue;
        p.add(key, Rational(coeff(rng)));
    }
    return p;
}

LaurentPoly2 random_laurent2(std::mt19937_64& rng, std::array<bool, 2> flags, int span) {
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

std::vector<SkewElem> standard_assignment(const ReversingContext& ctx, bool homogenized_pair) {
    if (homogenized_pair)
        return {parse_skew_elem("y^2", ctx), parse_skew_elem("y*x - y*x^-1", ctx),
                parse_skew_elem("x + x^-1", ctx)};
    return {parse_skew_elem("y + y^-1", ctx), parse_skew_elem("x + x^-1", ctx),
            parse_skew_elem("y*x + y^-1*x^-1", ctx)};
}

CheckResult check_reversibility() {
    Checker c("1", "reversing automorphisms exist for the four standard contexts");
    for (const char* name : {"V", "Vt", "Wq(2)", "WQ"}) {
        SkewFile f = skew_preset(name);
        c.expect(is_reversible(f.ctx.alpha(), f.ctx.gamma()), std::string(name) + " reversible");
    }
    SkewFile v = skew_preset("V");
    c.expect(!is_reversible(v.ctx.alpha(), BaseMap::identity(v.ring)),
             "identity twist control fails");
    return c.result;
}

CheckResult check_s_identities() {
    Checker c("2", "bracket identities for the invariant building blocks");
    std::mt19937_64 rng(1002);
    for (const char* name : {"V", "Vt", "Wq(2)", "WQ"}) {
        SkewFile f = skew_preset(name);
        for (int i = 0; i < 100; ++i) {
            SIdentityReport rep = verify_s_identities(f.ctx, random_base(rng, f.ring, 4),
                                                      random_base(rng, f.ring, 4));
            if (!rep.all()) {
                c.expect(false, std::string(name) + ": identity failed at sample " +
                                    std::to_string(i));
                break;
            }
        }
    }
    return c.result;
}

CheckResult check_homogenized_locenv() {
    Checker c("3", "homogenized localized-enveloping pipeline");
    ReductionSystem t5 = algebra_preset("T5").sys;
    ResolutionReport rep = check_confluence(t5);
    c.expect(rep.items.size() == 1, "exactly one overlap");
    c.expect(rep.confluent, "confluent");
    NCPoly g = preset_central_element("T5");
    NCPoly x1 = NCPoly::gen(0), x3 = NCPoly::gen(2);
    c.expect(normal_form(t5, g * x1 - x1 * g).is_zero(), "x1-commutator of g vanishes");
    c.expect(normal_form(t5, g * x3 - x3 * g).is_zero(), "x3-commutator of g vanishes");
    c.expect(is_central(t5, g).central, "g central");
    SkewFile vt = skew_preset("Vt");
    HomReport hom =
        verify_presentation_hom(t5, vt.ctx, standard_assignment(vt.ctx, true), {g});
    c.expect(hom.relations_hold, "relations vanish under the invariant assignment");
    c.expect(hom.probes_vanish, "probe maps to zero");
    c.expect(normal_form(t5, sys_poly(t5, "x1*x3^2 - x3^2*x1 + 4*t*x3*x2 + 8*t^2")).is_zero(),
             "squared-generator identity");
    return c.result;
}

CheckResult check_deformed_locenv() {
    Checker c("4", "deformed localized-enveloping pipeline at parameter one");
    ReductionSystem t1 = algebra_preset("T1").sys;
    c.expect(check_confluence(t1).confluent, "confluent");
    NCPoly p = preset_central_element("T1");
    c.expect(is_central(t1, p).central, "p central");
    SkewFile v = skew_preset("V");
    HomReport hom = verify_presentation_hom(t1, v.ctx, standard_assignment(v.ctx, true), {p});
    c.expect(hom.relations_hold, "relations vanish");
    c.expect(hom.probes_vanish, "probe maps to zero");
    return c.result;
}

CheckResult check_generic_qtorus_pbw() {
    Checker c("5", "generic quantum-torus presentation has the PBW basis");
    ReductionSystem t6 = algebra_preset("T6").sys;
    ResolutionReport rep = check_confluence(t6);
    c.expect(rep.items.size() == 1, "exactly one ambiguity");
    c.expect(rep.confluent, "confluent");
    NCPoly display = sys_poly(
        t6, "Q*x3*x2*x1 + (Q^-1 - Q)*x1^2 + (Q - Q^-1)*x2^2 + (1 - Q^2)*x3^2");
    if (!rep.items.empty()) {
        c.expect(rep.items[0].left_nf == display, "left parse hits the displayed form");
        c.expect(rep.items[0].right_nf == display, "right parse hits the displayed form");
    }
    std::vector<Word> words = irreducible_words(t6, unit_degrees(3), 6);
    c.expect(words.size() == 84, "cumulative simplex count at degree six");
    for (long d = 0; d <= 6; ++d) {
        long expected = (d + 1) * (d + 2) / 2;
        long got = 0;
        for (const Word& w : words)
            if (static_cast<long>(w.size()) == d) ++got;
        c.expect(got == expected, "degree " + std::to_string(d) + " count");
    }
    return c.result;
}

CheckResult check_central_quotient() {
    Checker c("6", "central quotient of the generic quantum torus");
    ReductionSystem t6 = algebra_preset("T6").sys;
    auto residual_zero = [&](const std::string& lhs, const std::string& rhs) {
        return normal_form(t6, sys_poly(t6, lhs) - sys_poly(t6, rhs)).is_zero();
    };
    c.expect(residual_zero("x1*x2^2", "Q^2*x2^2*x1 + (1 - Q^4)*x3*x2 + (Q^2 - 1)^2*x1"),
             "first squared identity");
    c.expect(residual_zero("x1*x3^2", "Q^-2*x3^2*x1 + (Q - Q^-3)*x3*x2 - Q^-1*(Q - Q^-1)^2*x1"),
             "second squared identity");
    c.expect(residual_zero("x2^2*x3", "Q^2*x3*x2^2 + (Q^-1 - Q^3)*x2*x1 + (Q^2 - 1)^2*x3"),
             "third squared identity");
    c.expect(residual_zero("x1^2*x3", "Q^-2*x3*x1^2 + (Q - Q^-3)*x2*x1 - (Q - Q^-1)^2*x3"),
             "fourth squared identity");
    c.expect(residual_zero("x2*x1*x3", "x3*x2*x1 + (Q^-2 - 1)*x1^2 + (1 - Q^-2)*x2^2"),
             "first cubic rearrangement");
    c.expect(residual_zero("x1*x3*x2", "x3*x2*x1 + (Q^-1 - Q)*x3^2 + (1 - Q^-2)*x2^2"),
             "second cubic rearrangement");
    c.expect(is_central(t6, preset_central_element("T6")).central, "g central");

    for (long kappa : {0L, 3L}) {
        std::string name = "T6_quot(" + std::to_string(kappa) + ")";
        ReductionSystem quot = algebra_preset(name).sys;
        ResolutionReport rep = check_confluence(quot);
        c.expect(rep.items.size() == 4, name + ": four ambiguities (self-overlap included)");
        c.expect(rep.confluent, name + ": confluent");
        std::string tail1 = kappa == 0 ? "(3*Q^4 + 1)*x1" : "x1";
        std::string tail3 = kappa == 0 ? "(3*Q^4 + 1)*x3" : "x3";
        NCPoly common1 = sys_poly(
            quot, "Q^4*x3*x2*x1^2 - Q^5*x3^2*x1 - Q^4*x1^3 + (1 - Q^4)*x3*x2 + " + tail1);
        NCPoly common3 = sys_poly(
            quot, "Q^4*x3^2*x2*x1 - Q^4*x3*x1^2 - Q^5*x3^3 + (Q^-1 - Q^3)*x2*x1 + " + tail3);
        for (const auto& item : rep.items) {
            if (item.ambiguity.site == make_word({0, 1, 1}))
                c.expect(item.left_nf == common1 && item.right_nf == common1,
                         name + ": first displayed common reduction");
            if (item.ambiguity.site == make_word({1, 1, 2}))
                c.expect(item.left_nf == common3 && item.right_nf == common3,
                         name + ": second displayed common reduction");
        }
        std::vector<Word> words = irreducible_words(quot, unit_degrees(3), 6);
        c.expect(words.size() == 49, name + ": basis count to degree six");
        for (const Word& w : words) {
            long twos = 0;
            bool sorted = true;
            for (size_t i = 0; i < w.size(); ++i) {
                if (w[i] == 1) ++twos;
                if (i + 1 < w.size() && w[i] < w[i + 1]) sorted = false;
            }
            c.expect(twos < 2 && sorted, name + ": basis word pattern");
            if (!(twos < 2 && sorted)) break;
        }
    }
    return c.result;
}

CheckResult check_invariants_hom_wq() {
    Checker c("7", "homomorphism onto the generic quantum-torus invariants");
    ReductionSystem t6 = algebra_preset("T6").sys;
    SkewFile wq = skew_preset("WQ");
    std::vector<SkewElem> a = standard_assignment(wq.ctx, false);
    HomReport hom = verify_presentation_hom(t6, wq.ctx, a, {preset_central_element("T6")});
    c.expect(hom.relations_hold, "relations vanish");
    c.expect(hom.probes_vanish, "probe maps to zero");
    Scalar Q = Scalar::param_power(ScalarMode::laurent, "Q", 1);
    SkewElem lhs = wq.ctx.mul(wq.ctx.mul(a[2], a[1]), a[0]);
    SkewElem rhs = wq.ctx.mul(a[2], a[2]).scaled(Q) +
                   wq.ctx.mul(a[1], a[1]).scaled(Q.pow(-2)) + wq.ctx.mul(a[0], a[0]) -
                   parse_skew_elem("2*(1 + Q^-2)", wq.ctx);
    c.expect(lhs == rhs, "cubic product display");
    return c.result;
}

CheckResult check_tq_pipeline() {
    Checker c("8", "deformed quantum-torus pipeline, numeric and symbolic");
    for (const char* name : {"Tq(3/2)", "Tq"}) {
        ReductionSystem tq = algebra_preset(name).sys;
        c.expect(check_confluence(tq).confluent, std::string(name) + ": confluent");
        c.expect(irreducible_words(tq, unit_degrees(3), 6).size() == 84,
                 std::string(name) + ": PBW count");
        NCPoly p = preset_central_element(name);
        c.expect(is_central(tq, p).central, std::string(name) + ": p central");
        SkewFile wq = skew_preset(std::string(name) == "Tq" ? "Wq" : "Wq(3/2)");
        HomReport hom =
            verify_presentation_hom(tq, wq.ctx, standard_assignment(wq.ctx, false), {p});
        c.expect(hom.relations_hold, std::string(name) + ": relations vanish");
        c.expect(hom.probes_vanish, std::string(name) + ": probe maps to zero");
    }
    return c.result;
}

CheckResult check_poisson_surfaces() {
    Checker c("9", "surface brackets, Jacobi, and singular points");
    c.expect(verify_surface_model(SurfaceCase::locenv).ok(), "first surface model verifies");
    c.expect(verify_surface_model(SurfaceCase::qtorus).ok(), "second surface model verifies");

    std::mt19937_64 rng(1009);
    CommPoly3 flocenv = parse_poly3("x1*(4 - x3^2) + x2^2");
    CommPoly3 fqtorus = parse_poly3("x1*x2*x3 - x1^2 - x2^2 - x3^2 + 4");
    for (const CommPoly3& f : {flocenv, fqtorus}) {
        ExactBracket b{f};
        for (int i = 0; i < 500; ++i) {
            CommPoly3 g = random_poly3(rng), h = random_poly3(rng), k = random_poly3(rng);
            CommPoly3 j = b.bracket(g, b.bracket(h, k)) + b.bracket(h, b.bracket(k, g)) +
                          b.bracket(k, b.bracket(g, h));
            if (!j.is_zero()) {
                c.expect(false, "exact-bracket Jacobi failed");
                break;
            }
        }
    }
    for (SurfaceCase sc : {SurfaceCase::locenv, SurfaceCase::qtorus}) {
        SurfaceModel m = surface_model(sc);
        for (int i = 0; i < 500; ++i) {
            auto g = random_laurent2(rng, m.plane.structure.flags(), 2);
            auto h = random_laurent2(rng, m.plane.structure.flags(), 2);
            auto k = random_laurent2(rng, m.plane.structure.flags(), 2);
            LaurentPoly2 j = m.plane.bracket(g, m.plane.bracket(h, k)) +
                             m.plane.bracket(h, m.plane.bracket(k, g)) +
                             m.plane.bracket(k, m.plane.bracket(g, h));
            if (!j.is_zero()) {
                c.expect(false, "plane-bracket Jacobi failed");
                break;
            }
        }
    }

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
    auto le = scan(ExactBracket{flocenv});
    c.expect(le.size() == 2 && le[0] == std::array<Rational, 3>{0, 0, -2} &&
                 le[1] == std::array<Rational, 3>{0, 0, 2},
             "first surface: exactly the two singular points");
    auto qt = scan(ExactBracket{fqtorus});
    c.expect(qt.size() == 4 && qt[0] == std::array<Rational, 3>{-2, -2, 2} &&
                 qt[1] == std::array<Rational, 3>{-2, 2, -2} &&
                 qt[2] == std::array<Rational, 3>{2, -2, -2} &&
                 qt[3] == std::array<Rational, 3>{2, 2, 2},
             "second surface: exactly the four singular points");
    return c.result;
}

CheckResult check_quantization_links() {
    Checker c("10", "semiclassical brackets match the exact brackets");
    struct Case {
        const char* preset;
        Rational at;
        const char* potential;
    };
    for (const Case& k : {Case{"T5", Rational(0), "x1*(4 - x3^2) + x2^2"},
                          Case{"T6", Rational(1), "x1*x2*x3 - x1^2 - x2^2 - x3^2 + 4"}}) {
        ReductionSystem sys = algebra_preset(k.preset).sys;
        ExactBracket exact{parse_poly3(k.potential)};
        const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {1, 2}, {2, 0}}};
        for (const auto& [i, j] : pairs) {
            NCPoly lhs = induced_poisson_bracket(sys, NCPoly::gen(i), NCPoly::gen(j), k.at);
            bool ok = to_poly3(lhs) == exact.bracket(CommPoly3::var(i), CommPoly3::var(j));
            c.expect(ok, std::string(k.preset) + ": generator pair (" + std::to_string(i + 1) +
                             "," + std::to_string(j + 1) + ")");
        }
    }
    return c.result;
}

CheckResult check_associated_graded() {
    Checker c("11", "associated graded presentations");
    auto expect_relations =
        [&](const char* name,
            const std::vector<std::pair<std::string, std::string>>& expect) {
            ReductionSystem sys = algebra_preset(name).sys;
            bool ok = sys.relations().size() == expect.size();
            for (size_t i = 0; ok && i < expect.size(); ++i) {
                NCPoly lead = sys_poly(sys, expect[i].first);
                ok = sys.relations()[i].lead == lead.terms().begin()->first &&
                     sys.relations()[i].replacement == sys_poly(sys, expect[i].second);
            }
            c.expect(ok, std::string(name) + ": displayed truncation");
            c.expect(check_confluence(sys).confluent, std::string(name) + ": confluent");
        };
    expect_relations("T6_gr_d1", {{"x1*x2", "Q*x2*x1 + (1 - Q^2)*x3"},
                                  {"x2*x3", "Q*x3*x2"},
                                  {"x1*x3", "Q^-1*x3*x1 + (1 - Q^-2)*x2"}});
    expect_relations("T6_gr_d2", {{"x1*x2", "Q*x2*x1"},
                                  {"x2*x3", "Q*x3*x2"},
                                  {"x1*x3", "Q^-1*x3*x1"}});
    expect_relations("T6_gr_alt", {{"x1*x2", "Q*x2*x1"},
                                   {"x2*x3", "Q*x3*x2 + (Q^-1 - Q)*x1"},
                                   {"x1*x3", "Q^-1*x3*x1"}});
    expect_relations("T5_gr_alt", {{"x1*x2", "x2*x1 - 2*t*x3*x1 + 3*t^2*x2 + 2*t^3*x3"},
                                   {"x2*x3", "x3*x2 - t*x3^2"},
                                   {"x1*x3", "x3*x1 - t^2*x3 - 2*t*x2"}});
    expect_relations("T5_gr_heis",
                     {{"x1*x2", "x2*x1"}, {"x2*x3", "x3*x2"}, {"x1*x3", "x3*x1 - 2*t*x2"}});
    expect_relations("Tq_gr_d1(3/2)", {{"x1*x2", "(3/2)*x2*x1 - (5/4)*x3"},
                                       {"x2*x3", "(3/2)*x3*x2"},
                                       {"x1*x3", "(2/3)*x3*x1 + (5/9)*x2"}});
    expect_relations("Tq_gr_unit(3/2)", {{"x1*x2", "(3/2)*x2*x1"},
                                         {"x2*x3", "(3/2)*x3*x2"},
                                         {"x1*x3", "(2/3)*x3*x1"}});

    ReductionSystem gr_alt = algebra_preset("T5_gr_alt").sys;
    c.expect(is_central(gr_alt, sys_poly(gr_alt, "-x3^2*x1 + x2^2 + 3*t*x3*x2 + t^2*x3^2"))
                 .central,
             "truncated central element");
    ReductionSystem heis = algebra_preset("T5_gr_heis").sys;
    c.expect(is_central(heis, sys_poly(heis, "x2^2")).central,
             "squared probe central in the degenerate case");
    return c.result;
}

CheckResult check_potentials() {
    Checker c("12", "noncommutative potentials recover the relations");
    ReductionSystem t1 = algebra_preset("T1").sys;
    NCPoly phi = sys_poly(
        t1, "x1*x2*x3 - x3*x2*x1 + x1*x3^2 - x2*x3 - x2^2 - (1/2)*x3^2 - 4*x1");
    c.expect(cyclic_derivative(phi, 1) == sys_poly(t1, "x3*x1 - x1*x3 - x3 - 2*x2"),
             "first displayed partial");
    c.expect(cyclic_derivative(phi, 0) == sys_poly(t1, "x2*x3 - x3*x2 + x3^2 - 4"),
             "second displayed partial");
    c.expect(cyclic_derivative(phi, 2) ==
                 sys_poly(t1, "x1*x2 - x2*x1 + x3*x1 + x1*x3 - x2 - x3"),
             "third displayed partial");

    ReductionSystem tq = algebra_preset("Tq").sys;
    NCPoly pi_q = sys_poly(
        tq, "x1*x2*x3 - q*x3*x2*x1 + (1/2)*(q - q^-1)*(x1^2 + x2^2 + q*x3^2)");
    // the partial along x3 is the first defining relation as stored
    c.expect(cyclic_derivative(pi_q, 2) == tq.relation_poly(0), "cubic partial along x3");
    c.expect(cyclic_derivative(pi_q, 0) == tq.relation_poly(1), "cubic partial along x1");
    // the partial along x2 is the third stored relation rescaled by -q
    Scalar q = Scalar::param_power(ScalarMode::laurent, "q", 1);
    c.expect(cyclic_derivative(pi_q, 1) == tq.relation_poly(2).scaled(-q),
             "cubic partial along x2 up to the recorded unit");
    return c.result;
}

CheckResult check_askey_wilson() {
    Checker c("13", "two-generator elimination");
    ReductionSystem tq = algebra_preset("Tq").sys;
    auto [rel1, rel2] = askey_wilson_eliminate(tq);
    c.expect(rel1 == sys_poly(tq, "(1 + q^2)*x2*x1*x2 - q*x2^2*x1 - q*x1*x2^2 - "
                                  "q^-1*(1 - q^2)^2*x1"),
             "first displayed relation");
    c.expect(rel2 == sys_poly(tq, "(1 + q^2)*x1*x2*x1 - q*x1^2*x2 - q*x2*x1^2 - "
                                  "q^-1*(1 - q^2)^2*x2"),
             "second displayed relation");
    c.expect(normal_form(tq, rel1).is_zero() && normal_form(tq, rel2).is_zero(),
             "both relations are consequences");
    return c.result;
}

CheckResult check_scaling_and_characters() {
    Checker c("14", "rescaling data and one-dimensional representations");
    std::mt19937_64 rng(1014);
    std::uniform_int_distribution<int> nz(1, 12);
    for (int i = 0; i < 100; ++i) {
        auto r = [&] {
            Rational v = rat_make(nz(rng), nz(rng));
            return Scalar(i % 2 ? v : Rational(-v));
        };
        ScalingData d = scaling_isomorphism_data(r(), r(), r());
        if (!d.consistent) {
            c.expect(false, "consistency identity failed on a rational triple");
            break;
        }
    }
    Scalar a = parse_scalar("1 - q^2", ScalarMode::laurent, "q");
    Scalar b = parse_scalar("q^-1 - q", ScalarMode::laurent, "q");
    ScalingData d = scaling_isomorphism_data(a, b, b);
    c.expect(d.consistent, "symbolic coefficients consistent");
    c.expect(d.lambda1_sq == parse_scalar("1/((1 - q^2)*(q^-1 - q))", ScalarMode::ratfunc, "q"),
             "first squared factor");

    ReductionSystem abc = algebra_preset("Tq_abc(1-q,1-q,1-q)").sys;
    std::vector<Scalar> zero(3, Scalar(Rational(0)));
    c.expect(verify_point_representation(abc, zero).valid, "trivial representation");
    const std::array<std::array<long, 3>, 4> chars{
        {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};
    for (const auto& ch : chars) {
        std::vector<Scalar> assign = {Scalar(Rational(ch[0])), Scalar(Rational(ch[1])),
                                      Scalar(Rational(ch[2]))};
        c.expect(verify_point_representation(abc, assign).valid,
                 "sign character (" + std::to_string(ch[0]) + "," + std::to_string(ch[1]) +
                     "," + std::to_string(ch[2]) + ")");
    }
    return c.result;
}

CheckResult check_growth() {
    Checker c("15", "growth-based dimension evidence");
    ReductionSystem t5 = algebra_preset("T5").sys;
    Filtration f5 = pbw_filtration(t5, {6, 4, 2}, CountVar{1, ExpDomain::one_sided, -1});
    GkEstimate e4 = gk_estimate(filtration_dimensions(f5, 400));
    c.expect(std::abs(e4.estimate - 4.0) <= 0.15,
             "weighted one-sided count near four (got " + std::to_string(e4.estimate) + ")");

    Filtration unit{std::nullopt,
                    {{1, ExpDomain::one_sided, -1},
                     {1, ExpDomain::one_sided, -1},
                     {1, ExpDomain::one_sided, -1}}};
    GkEstimate e3 = gk_estimate(filtration_dimensions(unit, 400));
    c.expect(std::abs(e3.estimate - 3.0) <= 0.05,
             "unit-weight count near three (got " + std::to_string(e3.estimate) + ")");

    Filtration ball{std::nullopt,
                    {{1, ExpDomain::two_sided, -1}, {1, ExpDomain::two_sided, -1}}};
    GkEstimate e2 = gk_estimate(filtration_dimensions(ball, 400));
    c.expect(std::abs(e2.estimate - 2.0) <= 0.05,
             "lattice-ball count near two (got " + std::to_string(e2.estimate) + ")");
    return c.result;
}

CheckResult check_negative_controls() {
    Checker c("16", "negative controls fail the way they should");
    ReductionSystem toy = algebra_preset("toy_nonconfluent").sys;
    ResolutionReport rep = check_confluence(toy);
    c.expect(!rep.confluent, "toy system is not confluent");
    c.expect(rep.items.size() == 1 &&
                 rep.items[0].difference == sys_poly(toy, "x3^2 - x1^2"),
             "exact difference of the failed resolution");

    bool orientation_raised = false;
    try {
        parse_presentation(R"(algebra bad
mode rational
generators x1 x2 x3
order dlex
x1*x2 = x1*x2 + x3
)");
    } catch (const parse_error&) {
        orientation_raised = true;
    }
    c.expect(orientation_raised, "orientation error raised");

    bool pole_raised = false;
    try {
        parse_scalar("Q^-1", ScalarMode::laurent, "Q").specialize(0);
    } catch (const std::domain_error&) {
        pole_raised = true;
    }
    c.expect(pole_raised, "pole error raised");
    return c.result;
}

}  // namespace

std::vector<CheckResult> run_paper_suite() {
    return {check_reversibility(),   check_s_identities(),
            check_homogenized_locenv(), check_deformed_locenv(),
            check_generic_qtorus_pbw(), check_central_quotient(),
            check_invariants_hom_wq(),  check_tq_pipeline(),
            check_poisson_surfaces(),   check_quantization_links(),
            check_associated_graded(),  check_potentials(),
            check_askey_wilson(),       check_scaling_and_characters(),
            check_growth(),             check_negative_controls()};
}

}  // namespace ncalg
