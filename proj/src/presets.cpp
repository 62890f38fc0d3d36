#include "ncalg/presets.hpp"

#include <sstream>
#include <stdexcept>

#include "ncalg/graded.hpp"

namespace ncalg {

namespace {

struct PresetSpec {
    std::string name;
    std::vector<std::string> args;
};

PresetSpec split_spec(const std::string& spec) {
    PresetSpec out;
    size_t open = spec.find('(');
    if (open == std::string::npos) {
        out.name = spec;
        return out;
    }
    if (spec.back() != ')')
        throw std::invalid_argument("malformed preset arguments in '" + spec + "'");
    out.name = spec.substr(0, open);
    std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    std::string cur;
    int depth = 0;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.args.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty() || !out.args.empty() || !inner.empty()) out.args.push_back(cur);
    return out;
}

std::string subst(std::string text, const std::string& key, const std::string& value) {
    size_t pos = 0;
    while ((pos = text.find(key, pos)) != std::string::npos) {
        text.replace(pos, key.size(), value);
        pos += value.size();
    }
    return text;
}

const char* kT5 = R"(algebra T5
mode polynomial t
generators x1 x2 x3
degrees x1:6 x2:4 x3:2 param:1
order dlex
x1*x2 -> x2*x1 - 2*t*x3*x1 + 3*t^2*x2 + 2*t^3*x3
x2*x3 -> x3*x2 - t*x3^2 + 4*t
x1*x3 -> x3*x1 - t^2*x3 - 2*t*x2
)";

const char* kT1 = R"(algebra T1
mode rational
generators x1 x2 x3
order dlex
x1*x3 -> x3*x1 - x3 - 2*x2
x2*x3 -> x3*x2 - x3^2 + 4
x1*x2 -> x2*x1 - 2*x3*x1 + 3*x2 + 2*x3
)";

const char* kT6 = R"(algebra T6
mode laurent Q
generators x1 x2 x3
degrees x1:0 x2:1 x3:1
order augdlex
x1*x2 -> Q*x2*x1 + (1 - Q^2)*x3
x2*x3 -> Q*x3*x2 + (Q^-1 - Q)*x1
x1*x3 -> Q^-1*x3*x1 + (1 - Q^-2)*x2
)";

// @Q@ is replaced by the numeric value (parenthesized) or by the symbol q.
const char* kTq = R"(algebra @NAME@
mode @MODE@
generators x1 x2 x3
degrees x1:0 x2:1 x3:1
order augdlex
x1*x2 -> @Q@*x2*x1 + (1 - @Q@^2)*x3
x2*x3 -> @Q@*x3*x2 + (@Q@^-1 - @Q@)*x1
x1*x3 -> @Q@^-1*x3*x1 + (1 - @Q@^-2)*x2
)";

const char* kTqABC = R"(algebra Tq_abc
mode laurent q
generators x1 x2 x3
degrees x1:0 x2:1 x3:1
order augdlex
x1*x2 -> q*x2*x1 + (@A@)*x3
x2*x3 -> q*x3*x2 + (@B@)*x1
x1*x3 -> q^-1*x3*x1 - q^-1*(@C@)*x2
)";

const char* kV = R"(skew V
mode rational
base y poly
alpha y -> y + 1
alpha_inv y -> y - 1
gamma y -> -y
)";

const char* kVt = R"(skew Vt
mode polynomial t
base y poly
alpha y -> y + t
alpha_inv y -> y - t
gamma y -> -y
)";

const char* kWQ = R"(skew WQ
mode laurent Q
base y laurent
alpha y -> Q*y
alpha_inv y -> Q^-1*y
gamma y -> y^-1
)";

const char* kWqSym = R"(skew Wq
mode laurent q
base y laurent
alpha y -> q*y
alpha_inv y -> q^-1*y
gamma y -> y^-1
)";

const char* kWqNum = R"(skew Wq
mode rational
base y laurent
alpha y -> @Q@*y
alpha_inv y -> (1/@Q@)*y
gamma y -> y^-1
)";

Rational parse_rat_arg(const std::string& text) {
    Scalar s = parse_scalar(text, ScalarMode::rational, "");
    return s.rational_value();
}

void reject_degenerate_q(const Rational& q, bool allow) {
    if (allow) return;
    if (q == 0 || q == 1 || q == -1)
        throw std::invalid_argument(
            "q in {0, 1, -1} is outside this preset's hypotheses (use the override to force it)");
}

std::string numeric_q_text(const Rational& q) { return "(" + rat_str(q) + ")"; }

PresentationFile tq_preset(const PresetSpec& spec, bool allow_degenerate_q) {
    std::string text = kTq;
    if (spec.args.empty()) {
        text = subst(text, "@NAME@", "Tq");
        text = subst(text, "@MODE@", "laurent q");
        text = subst(text, "@Q@", "q");
    } else {
        Rational q = parse_rat_arg(spec.args.at(0));
        reject_degenerate_q(q, allow_degenerate_q);
        text = subst(text, "@NAME@", "Tq");
        text = subst(text, "@MODE@", "rational");
        text = subst(text, "@Q@", numeric_q_text(q));
    }
    return parse_presentation(text);
}

DegreeFunction named_degrees(const Alphabet& a, std::vector<long> degs, long pd) {
    DegreeFunction d;
    d.degrees = std::move(degs);
    d.param_degree = pd;
    if (d.degrees.size() != a.size()) throw std::logic_error("degree arity mismatch");
    return d;
}

}  // namespace

std::vector<std::string> algebra_preset_names() {
    return {"T5",        "T1",        "T6",        "Tq",        "Tq(q)",     "Tq_abc(a,b,c)",
            "T6_quot(k)", "T5_gr",    "T5_gr_alt", "T5_gr_heis", "T6_gr_d1", "T6_gr_d2",
            "T6_gr_alt", "Tq_gr_d1",  "Tq_gr_unit", "toy_nonconfluent"};
}

PresentationFile algebra_preset(const std::string& spec_text, bool allow_degenerate_q) {
    PresetSpec spec = split_spec(spec_text);
    const std::string& n = spec.name;
    if (n == "T5") return parse_presentation(kT5);
    if (n == "T1") return parse_presentation(kT1);
    if (n == "T6") return parse_presentation(kT6);
    if (n == "Tq") return tq_preset(spec, allow_degenerate_q);
    if (n == "Tq_abc") {
        if (spec.args.size() != 3)
            throw std::invalid_argument("Tq_abc needs three coefficients");
        std::string text = kTqABC;
        text = subst(text, "@A@", spec.args[0]);
        text = subst(text, "@B@", spec.args[1]);
        text = subst(text, "@C@", spec.args[2]);
        return parse_presentation(text);
    }
    if (n == "T6_quot") {
        Rational kappa = spec.args.empty() ? Rational(0) : parse_rat_arg(spec.args.at(0));
        PresentationFile base = parse_presentation(kT6);
        NCPoly g = preset_central_element("T6");
        NCPoly shifted = g - NCPoly::scalar(Scalar(kappa));
        ReductionSystem quot =
            adjoin_central_quotient(base.sys, shifted, make_word({1, 1}));
        return PresentationFile{"T6_quot", std::move(quot)};
    }
    if (n == "toy_nonconfluent") {
        return parse_presentation(R"(algebra toy
mode rational
generators x1 x2 x3
order dlex
x1*x2 -> x3
x2*x3 -> x1
)");
    }

    auto graded_of = [&](const char* parent_text, std::vector<long> degs, long pd,
                         const std::string& name) {
        PresentationFile parent = parse_presentation(parent_text);
        DegreeFunction d = named_degrees(parent.sys.alphabet(), std::move(degs), pd);
        return PresentationFile{name, associated_graded(parent.sys, d)};
    };
    if (n == "T5_gr") return graded_of(kT5, {6, 4, 2}, 1, "T5_gr");
    if (n == "T5_gr_alt") return graded_of(kT5, {2, 3, 2}, 1, "T5_gr_alt");
    if (n == "T5_gr_heis") return graded_of(kT5, {3, 4, 2}, 1, "T5_gr_heis");
    if (n == "T6_gr_d1") return graded_of(kT6, {0, 1, 1}, 0, "T6_gr_d1");
    if (n == "T6_gr_d2") return graded_of(kT6, {1, 1, 1}, 0, "T6_gr_d2");
    if (n == "T6_gr_alt") return graded_of(kT6, {2, 1, 1}, 0, "T6_gr_alt");
    if (n == "Tq_gr_d1" || n == "Tq_gr_unit") {
        PresentationFile parent = tq_preset(spec, allow_degenerate_q);
        std::vector<long> degs = (n == "Tq_gr_d1") ? std::vector<long>{0, 1, 1}
                                                   : std::vector<long>{1, 1, 1};
        DegreeFunction d = named_degrees(parent.sys.alphabet(), std::move(degs), 0);
        return PresentationFile{n, associated_graded(parent.sys, d)};
    }
    throw std::invalid_argument("unknown algebra preset '" + spec_text + "'");
}

std::vector<std::string> skew_preset_names() { return {"V", "Vt", "Wq", "Wq(q)", "WQ"}; }

SkewFile skew_preset(const std::string& spec_text) {
    PresetSpec spec = split_spec(spec_text);
    const std::string& n = spec.name;
    if (n == "V") return parse_skewfile(kV);
    if (n == "Vt") return parse_skewfile(kVt);
    if (n == "WQ") return parse_skewfile(kWQ);
    if (n == "Wq") {
        if (spec.args.empty()) return parse_skewfile(kWqSym);
        Rational q = parse_rat_arg(spec.args.at(0));
        if (q == 0) throw std::invalid_argument("q must be nonzero");
        return parse_skewfile(subst(kWqNum, "@Q@", "(" + rat_str(q) + ")"));
    }
    throw std::invalid_argument("unknown skew preset '" + spec_text + "'");
}

NCPoly preset_central_element(const std::string& spec_text, bool allow_degenerate_q) {
    PresetSpec spec = split_spec(spec_text);
    const std::string& n = spec.name;
    if (n == "T5") {
        PresentationFile f = algebra_preset("T5");
        return parse_poly("(4 - x3^2)*x1 + x2^2 + 3*t*x3*x2 + t^2*x3^2 + 4*t^2",
                          f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    }
    if (n == "T1") {
        PresentationFile f = algebra_preset("T1");
        return parse_poly("(4 - x3^2)*x1 + x2^2 + 3*x3*x2 + x3^2 + 4", f.sys.alphabet(),
                          f.sys.mode(), f.sys.parameter());
    }
    if (n == "T6") {
        PresentationFile f = algebra_preset("T6");
        return parse_poly("x3*x2*x1 - Q*x3^2 - Q^-2*x2^2 - x1^2 + 2*(1 + Q^-2)",
                          f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    }
    if (n == "Tq") {
        PresentationFile f = algebra_preset(spec_text, allow_degenerate_q);
        std::string qtext = spec.args.empty()
                                ? "q"
                                : numeric_q_text(parse_rat_arg(spec.args.at(0)));
        std::string text = subst(
            "x3*x2*x1 - @Q@*x3^2 - @Q@^-2*x2^2 - x1^2 + 2*(1 + @Q@^-2)", "@Q@", qtext);
        return parse_poly(text, f.sys.alphabet(), f.sys.mode(), f.sys.parameter());
    }
    throw std::invalid_argument("no central element stored for preset '" + spec_text + "'");
}

}  // namespace ncalg
