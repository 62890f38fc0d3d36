#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ncalg/graded.hpp"
#include "ncalg/parse.hpp"
#include "ncalg/poisson.hpp"
#include "ncalg/presets.hpp"
#include "ncalg/rewrite.hpp"
#include "ncalg/skew.hpp"
#include "ncalg/suite.hpp"

using namespace ncalg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

long env_step_cap() {
    const char* cap = std::getenv("NCALG_STEP_CAP");
    if (!cap) return -1;
    return std::atol(cap);
}

PresentationFile load_system(const std::string& arg) {
    PresentationFile f = arg.rfind("preset:", 0) == 0 ? algebra_preset(arg.substr(7))
                                                      : parse_presentation(read_file(arg));
    long cap = env_step_cap();
    if (cap > 0) {
        ReductionSystem recapped(f.sys.alphabet(), f.sys.mode(), f.sys.parameter(),
                                 f.sys.relations(), f.sys.orientation(),
                                 f.sys.has_declared_order()
                                     ? std::optional<MonomialOrder>(f.sys.order())
                                     : std::nullopt,
                                 cap);
        return PresentationFile{f.name, std::move(recapped)};
    }
    return f;
}

SkewFile load_skew(const std::string& arg) {
    if (arg.rfind("preset:", 0) == 0) return skew_preset(arg.substr(7));
    return parse_skewfile(read_file(arg));
}

DegreeFunction parse_degree_arg(const ReductionSystem& sys, const std::string& text) {
    DegreeFunction d = unit_degrees(sys.alphabet().size());
    std::istringstream is(text);
    std::string item;
    while (std::getline(is, item, ',')) {
        size_t colon = item.find(':');
        if (colon == std::string::npos) throw CliError("expected NAME:DEGREE in " + text);
        std::string who = item.substr(0, colon);
        long deg = std::stol(item.substr(colon + 1));
        if (who == "param") {
            d.param_degree = deg;
        } else {
            int g = sys.alphabet().index_of(who);
            if (g < 0) throw CliError("unknown generator " + who);
            d.degrees[static_cast<size_t>(g)] = deg;
        }
    }
    return d;
}

int cmd_check(const std::string& sys_arg) {
    PresentationFile f = load_system(sys_arg);
    ResolutionReport rep = check_confluence(f.sys);
    for (const auto& item : rep.items) {
        std::cout << "AMB " << word_str(item.ambiguity.site, f.sys.alphabet()) << " : ";
        if (item.resolved)
            std::cout << "RESOLVED\n";
        else
            std::cout << "FAIL "
                      << poly_str(item.difference, f.sys.alphabet(), &f.sys.order()) << "\n";
    }
    std::cout << (rep.confluent ? "CONFLUENT" : "NOT-CONFLUENT") << "\n";
    return rep.confluent ? kExitOk : kExitFail;
}

int cmd_nf(const std::string& sys_arg, const std::string& expr, const std::string& strategy,
           std::uint64_t seed) {
    PresentationFile f = load_system(sys_arg);
    StrategyChoice choice;
    if (strategy == "largest")
        choice.kind = Strategy::leftmost_largest;
    else if (strategy == "leftward")
        choice.kind = Strategy::leftmost_leftward;
    else if (strategy == "random")
        choice = {Strategy::random_site, seed};
    else
        throw CliError("unknown strategy " + strategy);
    NCPoly p = parse_poly(expr, f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    std::cout << poly_str(normal_form(f.sys, p, choice), f.sys.alphabet(), &f.sys.order())
              << "\n";
    return kExitOk;
}

int cmd_basis(const std::string& sys_arg, long bound, const std::string& degree_arg) {
    PresentationFile f = load_system(sys_arg);
    DegreeFunction d = degree_arg.empty() ? unit_degrees(f.sys.alphabet().size())
                                          : parse_degree_arg(f.sys, degree_arg);
    for (const Word& w : irreducible_words(f.sys, d, bound))
        std::cout << word_str(w, f.sys.alphabet()) << "\n";
    return kExitOk;
}

int cmd_central(const std::string& sys_arg, const std::string& expr) {
    PresentationFile f = load_system(sys_arg);
    NCPoly c = parse_poly(expr, f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    CentralityReport rep = is_central(f.sys, c);
    if (rep.central) {
        std::cout << "CENTRAL\n";
        return kExitOk;
    }
    std::cout << "NOT-CENTRAL witness "
              << f.sys.alphabet().names.at(static_cast<size_t>(rep.witness_generator)) << " : "
              << poly_str(rep.witness, f.sys.alphabet(), &f.sys.order()) << "\n";
    return kExitFail;
}

int cmd_commutator(const std::string& sys_arg, const std::string& lhs, const std::string& rhs) {
    PresentationFile f = load_system(sys_arg);
    NCPoly a = parse_poly(lhs, f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    NCPoly b = parse_poly(rhs, f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    std::cout << poly_str(normal_form(f.sys, commutator(a, b)), f.sys.alphabet(),
                          &f.sys.order())
              << "\n";
    return kExitOk;
}

int cmd_gr(const std::string& sys_arg, const std::string& degree_arg, bool recheck) {
    PresentationFile f = load_system(sys_arg);
    DegreeFunction d = parse_degree_arg(f.sys, degree_arg);
    ReductionSystem gr = associated_graded(f.sys, d);
    std::cout << print_presentation(f.name + "_gr", gr);
    if (recheck) {
        bool ok = check_confluence(gr).confluent;
        std::cout << (ok ? "CONFLUENT" : "NOT-CONFLUENT") << "\n";
        return ok ? kExitOk : kExitFail;
    }
    return kExitOk;
}

int cmd_growth(const std::string& sys_arg, const std::string& weight_arg, long param_weight,
               const std::string& lattice, long bound) {
    Filtration filt;
    if (!lattice.empty()) {
        std::istringstream is(lattice);
        std::string item;
        while (std::getline(is, item, ','))
            filt.vars.push_back({std::stol(item), ExpDomain::two_sided, -1});
    } else {
        PresentationFile f = load_system(sys_arg);
        DegreeFunction d = weight_arg.empty() ? unit_degrees(f.sys.alphabet().size())
                                              : parse_degree_arg(f.sys, weight_arg);
        std::optional<CountVar> param;
        if (param_weight > 0) param = CountVar{param_weight, ExpDomain::one_sided, -1};
        filt = pbw_filtration(f.sys, d.degrees, param);
    }
    std::vector<long long> c = filtration_dimensions(filt, bound);
    for (size_t n = 0; n < c.size(); ++n) std::cout << n << "," << c[n] << "\n";
    GkEstimate est = gk_estimate(c);
    std::cout << "GK-ESTIMATE " << est.estimate << "\n";
    return kExitOk;
}

int cmd_pbracket(const std::string& potential, const std::string& structure,
                 const std::string& flags, const std::string& lhs, const std::string& rhs) {
    if (!potential.empty()) {
        ExactBracket b{parse_poly3(potential)};
        CommPoly3 out = b.bracket(parse_poly3(lhs), parse_poly3(rhs));
        std::cout << out.str() << "\n";
        return kExitOk;
    }
    std::array<bool, 2> fl{false, false};
    if (flags == "x") fl = {true, false};
    if (flags == "xy") fl = {true, true};
    PlaneBracket b{parse_laurent2(structure, fl)};
    LaurentPoly2 out = b.bracket(parse_laurent2(lhs, fl), parse_laurent2(rhs, fl));
    std::cout << out.str() << "\n";
    return kExitOk;
}

int cmd_qbracket(const std::string& sys_arg, const std::string& lhs, const std::string& rhs,
                 const std::string& at) {
    PresentationFile f = load_system(sys_arg);
    NCPoly a = parse_poly(lhs, f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    NCPoly b = parse_poly(rhs, f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    NCPoly out = induced_poisson_bracket(f.sys, a, b, rat_parse(at));
    std::cout << poly_str(out, f.sys.alphabet()) << "\n";
    return kExitOk;
}

int cmd_rev(const std::string& skew_arg) {
    // loading verifies the maps, the involution and reversibility
    SkewFile f = load_skew(skew_arg);
    std::cout << "OK " << f.name << " gamma is an involution\n";
    std::cout << "OK " << f.name << " alpha is gamma-reversible\n";
    std::cout << "REVERSIBLE\n";
    return kExitOk;
}

int cmd_hom(const std::string& sys_arg, const std::string& skew_arg, const std::string& map_arg,
            const std::vector<std::string>& probes) {
    PresentationFile f = load_system(sys_arg);
    SkewFile s = load_skew(skew_arg);
    std::vector<SkewElem> assignment(f.sys.alphabet().size());
    std::vector<bool> assigned(f.sys.alphabet().size(), false);
    std::istringstream is(map_arg);
    std::string item;
    while (std::getline(is, item, ';')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw CliError("expected GEN=ELEMENT in map");
        std::string who = item.substr(0, eq);
        who.erase(0, who.find_first_not_of(' '));
        who.erase(who.find_last_not_of(' ') + 1);
        int g = f.sys.alphabet().index_of(who);
        if (g < 0) throw CliError("unknown generator " + who);
        assignment[static_cast<size_t>(g)] = parse_skew_elem(item.substr(eq + 1), s.ctx);
        assigned[static_cast<size_t>(g)] = true;
    }
    for (size_t i = 0; i < assigned.size(); ++i)
        if (!assigned[i]) throw CliError("generator " + f.sys.alphabet().names[i] + " unmapped");
    std::vector<NCPoly> probe_polys;
    for (const auto& p : probes)
        probe_polys.push_back(parse_poly(p, f.sys.alphabet(), f.sys.mode(), f.sys.parameter()));
    HomReport rep = verify_presentation_hom(f.sys, s.ctx, assignment, probe_polys);
    for (size_t i = 0; i < rep.relation_residuals.size(); ++i) {
        const SkewElem& r = rep.relation_residuals[i];
        std::cout << (r.is_zero() ? "OK" : "FAIL") << " relation "
                  << word_str(f.sys.relations()[i].lead, f.sys.alphabet())
                  << (r.is_zero() ? "" : " residual " + r.str(s.ring)) << "\n";
    }
    for (size_t i = 0; i < rep.probe_values.size(); ++i) {
        const SkewElem& v = rep.probe_values[i];
        std::cout << (v.is_zero() ? "OK" : "FAIL") << " probe " << i
                  << (v.is_zero() ? " in kernel" : " value " + v.str(s.ring)) << "\n";
    }
    bool ok = rep.relations_hold && rep.probes_vanish;
    std::cout << (ok ? "HOM-VERIFIED" : "HOM-FAILED") << "\n";
    return ok ? kExitOk : kExitFail;
}

int cmd_preset(bool list, const std::string& name) {
    if (list) {
        for (const auto& n : algebra_preset_names()) std::cout << n << "\n";
        for (const auto& n : skew_preset_names()) std::cout << n << "\n";
        return kExitOk;
    }
    try {
        SkewFile f = skew_preset(name);
        std::cout << print_skewfile(f.name, f.ctx);
        return kExitOk;
    } catch (const std::invalid_argument&) {
        // fall through to the algebra presets
    }
    PresentationFile f = algebra_preset(name);
    std::cout << print_presentation(f.name, f.sys);
    return kExitOk;
}

int cmd_paper_suite() {
    std::vector<CheckResult> results = run_paper_suite();
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "OK" : "FAIL") << " " << r.id << " " << r.title << "\n";
        for (const auto& note : r.notes) std::cout << "     " << note << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "SUITE-PASS" : "SUITE-FAIL") << "\n";
    return all ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for reversing automorphisms, reduction systems and "
                 "Poisson brackets"};
    app.require_subcommand(1);

    std::string sys_arg, skew_arg, expr, lhs, rhs, strategy = "largest";
    std::string degree_arg, weight_arg, lattice, at = "0", map_arg;
    std::string potential, structure, flags = "xy", preset_name;
    std::vector<std::string> probes;
    std::uint64_t seed = 0;
    long bound = 6, param_weight = 0;
    bool list = false, recheck = false;

    CLI::App* check = app.add_subcommand("check", "confluence report for a reduction system");
    check->add_option("system", sys_arg, "presentation file or preset:NAME")->required();

    CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial");
    nf->add_option("system", sys_arg)->required();
    nf->add_option("--expr", expr)->required();
    nf->add_option("--strategy", strategy, "largest|leftward|random");
    nf->add_option("--seed", seed);

    CLI::App* basis = app.add_subcommand("basis", "irreducible words up to a degree bound");
    basis->add_option("system", sys_arg)->required();
    basis->add_option("--bound", bound)->required();
    basis->add_option("--degrees", degree_arg, "e.g. x1:1,x2:1,x3:1");

    CLI::App* central = app.add_subcommand("central", "centrality test with witness");
    central->add_option("system", sys_arg)->required();
    central->add_option("--expr", expr)->required();

    CLI::App* comm = app.add_subcommand("commutator", "normal form of a commutator");
    comm->add_option("system", sys_arg)->required();
    comm->add_option("--lhs", lhs)->required();
    comm->add_option("--rhs", rhs)->required();

    CLI::App* gr = app.add_subcommand("gr", "associated graded presentation");
    gr->add_option("system", sys_arg)->required();
    gr->add_option("--degrees", degree_arg)->required();
    gr->add_flag("--recheck", recheck, "re-run the confluence check on the result");

    CLI::App* growth = app.add_subcommand("growth", "dimension counts and growth estimate");
    growth->add_option("system", sys_arg);
    growth->add_option("--weights", weight_arg, "e.g. x1:6,x2:4,x3:2");
    growth->add_option("--param-weight", param_weight, "count the parameter with this weight");
    growth->add_option("--lattice", lattice, "two-sided weights, e.g. 1,1");
    growth->add_option("--bound", bound)->required();

    CLI::App* pb = app.add_subcommand("pbracket", "exact or plane Poisson bracket");
    pb->add_option("--potential", potential, "potential in x1,x2,x3");
    pb->add_option("--structure", structure, "value of {x,y}");
    pb->add_option("--flags", flags, "Laurent variables: none|x|xy");
    pb->add_option("--lhs", lhs)->required();
    pb->add_option("--rhs", rhs)->required();

    CLI::App* qb = app.add_subcommand("qbracket", "semiclassical bracket of a quantization");
    qb->add_option("system", sys_arg)->required();
    qb->add_option("--lhs", lhs)->required();
    qb->add_option("--rhs", rhs)->required();
    qb->add_option("--at", at, "semiclassical parameter value");

    CLI::App* rev = app.add_subcommand("rev", "reversibility report for a skew context");
    rev->add_option("context", skew_arg, "skew file or preset:NAME")->required();

    CLI::App* hom = app.add_subcommand("hom", "verify a presentation homomorphism");
    hom->add_option("system", sys_arg)->required();
    hom->add_option("context", skew_arg)->required();
    hom->add_option("--map", map_arg, "x1=ELEM;x2=ELEM;...")->required();
    hom->add_option("--probe", probes, "kernel probes");

    CLI::App* preset = app.add_subcommand("preset", "print a built-in preset");
    preset->add_flag("--list", list);
    preset->add_option("name", preset_name);

    CLI::App* suite = app.add_subcommand("paper-suite", "run the full verification suite");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(sys_arg);
        if (nf->parsed()) return cmd_nf(sys_arg, expr, strategy, seed);
        if (basis->parsed()) return cmd_basis(sys_arg, bound, degree_arg);
        if (central->parsed()) return cmd_central(sys_arg, expr);
        if (comm->parsed()) return cmd_commutator(sys_arg, lhs, rhs);
        if (gr->parsed()) return cmd_gr(sys_arg, degree_arg, recheck);
        if (growth->parsed()) return cmd_growth(sys_arg, weight_arg, param_weight, lattice, bound);
        if (pb->parsed()) return cmd_pbracket(potential, structure, flags, lhs, rhs);
        if (qb->parsed()) return cmd_qbracket(sys_arg, lhs, rhs, at);
        if (rev->parsed()) return cmd_rev(skew_arg);
        if (hom->parsed()) return cmd_hom(sys_arg, skew_arg, map_arg, probes);
        if (preset->parsed()) return cmd_preset(list, preset_name);
        if (suite->parsed()) return cmd_paper_suite();
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
