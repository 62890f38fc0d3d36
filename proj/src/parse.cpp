#include "ncalg/parse.hpp"

#include <cctype>
#include <memory>
#include <sstream>
#include <vector>

namespace ncalg {

namespace {

// ---------------------------------------------------------------------------
// Tokenizer and expression AST shared by every textual syntax.

enum class Tok { integer, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    const std::string& s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;

    void advance() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n')) {
            if (s_[i_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
            ++i_;
        }
        tok_ = Token{Tok::end, "", line_, col_};
        if (i_ >= s_.size()) return;
        char c = s_[i_];
        auto single = [&](Tok k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            ++i_;
            ++col_;
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_.kind = Tok::integer;
            tok_.text = s_.substr(i_, j - i_);
            col_ += static_cast<int>(j - i_);
            i_ = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_.kind = Tok::name;
            tok_.text = s_.substr(i_, j - i_);
            col_ += static_cast<int>(j - i_);
            i_ = j;
        } else {
            switch (c) {
                case '+': single(Tok::plus); break;
                case '-': single(Tok::minus); break;
                case '*': single(Tok::star); break;
                case '/': single(Tok::slash); break;
                case '^': single(Tok::caret); break;
                case '(': single(Tok::lparen); break;
                case ')': single(Tok::rparen); break;
                default:
                    throw parse_error(line_, col_, std::string("unexpected character '") + c + "'");
            }
        }
    }
};

struct Node {
    enum class Type { num, name, add, sub, mul, divide, neg, pow };
    Type type;
    Rational value;          // num
    std::string id;          // name
    long exponent = 0;       // pow
    std::unique_ptr<Node> a, b;
    int line = 1, col = 1;
};

using NodePtr = std::unique_ptr<Node>;

NodePtr parse_expr(Lexer& lx);

NodePtr parse_atom(Lexer& lx) {
    Token t = lx.take();
    auto node = std::make_unique<Node>();
    node->line = t.line;
    node->col = t.col;
    switch (t.kind) {
        case Tok::integer:
            node->type = Node::Type::num;
            node->value = rat_parse(t.text);
            return node;
        case Tok::name:
            node->type = Node::Type::name;
            node->id = t.text;
            return node;
        case Tok::lparen: {
            NodePtr inner = parse_expr(lx);
            Token close = lx.take();
            if (close.kind != Tok::rparen)
                throw parse_error(close.line, close.col, "expected ')'");
            return inner;
        }
        default:
            throw parse_error(t.line, t.col, "expected a number, a name or '('");
    }
}

NodePtr parse_factor(Lexer& lx) {
    NodePtr base = parse_atom(lx);
    while (lx.peek().kind == Tok::caret) {
        Token caret = lx.take();
        bool negative = false;
        if (lx.peek().kind == Tok::minus) {
            lx.take();
            negative = true;
        }
        Token e = lx.take();
        if (e.kind != Tok::integer)
            throw parse_error(e.line, e.col, "expected an integer exponent");
        auto node = std::make_unique<Node>();
        node->type = Node::Type::pow;
        node->line = caret.line;
        node->col = caret.col;
        node->exponent = std::stol(e.text) * (negative ? -1 : 1);
        node->a = std::move(base);
        base = std::move(node);
    }
    return base;
}

NodePtr parse_term(Lexer& lx) {
    NodePtr left = parse_factor(lx);
    while (lx.peek().kind == Tok::star || lx.peek().kind == Tok::slash) {
        Token op = lx.take();
        auto node = std::make_unique<Node>();
        node->type = op.kind == Tok::star ? Node::Type::mul : Node::Type::divide;
        node->line = op.line;
        node->col = op.col;
        node->a = std::move(left);
        node->b = parse_factor(lx);
        left = std::move(node);
    }
    return left;
}

NodePtr parse_expr(Lexer& lx) {
    bool lead_minus = false;
    if (lx.peek().kind == Tok::minus) {
        lx.take();
        lead_minus = true;
    } else if (lx.peek().kind == Tok::plus) {
        lx.take();
    }
    NodePtr left = parse_term(lx);
    if (lead_minus) {
        auto node = std::make_unique<Node>();
        node->type = Node::Type::neg;
        node->a = std::move(left);
        left = std::move(node);
    }
    while (lx.peek().kind == Tok::plus || lx.peek().kind == Tok::minus) {
        Token op = lx.take();
        auto node = std::make_unique<Node>();
        node->type = op.kind == Tok::plus ? Node::Type::add : Node::Type::sub;
        node->line = op.line;
        node->col = op.col;
        node->a = std::move(left);
        node->b = parse_term(lx);
        left = std::move(node);
    }
    return left;
}

NodePtr parse_full(const std::string& text) {
    Lexer lx(text);
    NodePtr n = parse_expr(lx);
    const Token& t = lx.peek();
    if (t.kind != Tok::end) throw parse_error(t.line, t.col, "trailing input: '" + t.text + "'");
    return n;
}

// Env must provide: Value, from_number, lookup, add, sub, mul, divide, neg, power.
template <typename Env>
typename Env::Value eval_node(const Node& n, const Env& env) {
    using V = typename Env::Value;
    switch (n.type) {
        case Node::Type::num: return env.from_number(n.value);
        case Node::Type::name: {
            V out;
            if (!env.lookup(n.id, out))
                throw parse_error(n.line, n.col, "unknown name '" + n.id + "'");
            return out;
        }
        case Node::Type::add: return env.add(eval_node(*n.a, env), eval_node(*n.b, env));
        case Node::Type::sub: return env.sub(eval_node(*n.a, env), eval_node(*n.b, env));
        case Node::Type::mul: return env.mul(eval_node(*n.a, env), eval_node(*n.b, env));
        case Node::Type::divide: {
            try {
                return env.divide(eval_node(*n.a, env), eval_node(*n.b, env));
            } catch (const std::domain_error& e) {
                throw parse_error(n.line, n.col, e.what());
            }
        }
        case Node::Type::neg: return env.neg(eval_node(*n.a, env));
        case Node::Type::pow: {
            try {
                return env.power(eval_node(*n.a, env), n.exponent);
            } catch (const std::domain_error& e) {
                throw parse_error(n.line, n.col, e.what());
            }
        }
    }
    throw std::logic_error("unreachable");
}

struct ScalarEnv {
    using Value = Scalar;
    ScalarMode mode;
    std::string param;

    Value from_number(const Rational& r) const { return Scalar(r); }
    bool lookup(const std::string& id, Value& out) const {
        if (mode != ScalarMode::rational && id == param) {
            out = Scalar::param_power(mode, param, 1);
            return true;
        }
        return false;
    }
    Value add(Value a, const Value& b) const { return a + b; }
    Value sub(Value a, const Value& b) const { return a - b; }
    Value mul(Value a, const Value& b) const { return a * b; }
    Value divide(const Value& a, const Value& b) const { return a * b.inv(); }
    Value neg(const Value& a) const { return -a; }
    Value power(const Value& a, long k) const { return a.pow(k); }
};

struct PolyEnv {
    using Value = NCPoly;
    const Alphabet* alphabet;
    ScalarMode mode;
    std::string param;

    Value from_number(const Rational& r) const { return NCPoly::scalar(Scalar(r)); }
    bool lookup(const std::string& id, Value& out) const {
        int g = alphabet->index_of(id);
        if (g >= 0) {
            out = NCPoly::gen(g);
            return true;
        }
        if (mode != ScalarMode::rational && id == param) {
            out = NCPoly::scalar(Scalar::param_power(mode, param, 1));
            return true;
        }
        return false;
    }
    Value add(Value a, const Value& b) const { return a + b; }
    Value sub(Value a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value divide(const Value& a, const Value& b) const {
        if (b.term_count() != 1 || !b.terms().begin()->first.empty())
            throw std::domain_error("division by a non-scalar polynomial");
        return a.scaled(b.terms().begin()->second.inv());
    }
    Value neg(const Value& a) const { return -a; }
    Value power(const Value& a, long k) const { return a.pow(k); }
};

struct BaseEnv {
    using Value = BaseElem;
    const BaseRing* ring;

    Value from_number(const Rational& r) const {
        return BaseElem::constant(Scalar(r).convert(ring->mode, ring->param));
    }
    bool lookup(const std::string& id, Value& out) const {
        if (id == ring->var) {
            out = BaseElem::var_power(1, ring->scalar_one());
            return true;
        }
        if (ring->mode != ScalarMode::rational && id == ring->param) {
            out = BaseElem::constant(Scalar::param_power(ring->mode, ring->param, 1));
            return true;
        }
        return false;
    }
    Value add(Value a, const Value& b) const { return a + b; }
    Value sub(Value a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value divide(const Value& a, const Value& b) const { return mul(a, b.pow(-1)); }
    Value neg(const Value& a) const { return -a; }
    Value power(const Value& a, long k) const {
        if (k < 0 && !ring->laurent)
            throw std::domain_error("negative power of y in a polynomial base ring");
        return a.pow(k);
    }
};

struct SkewEnv {
    using Value = SkewElem;
    const ReversingContext* ctx;
    std::string xname;

    Value from_number(const Rational& r) const {
        return SkewElem::from_base(
            BaseElem::constant(Scalar(r).convert(ctx->ring().mode, ctx->ring().param)));
    }
    bool lookup(const std::string& id, Value& out) const {
        if (id == xname) {
            out = SkewElem::x_power(1, BaseElem::constant(ctx->ring().scalar_one()));
            return true;
        }
        if (id == ctx->ring().var) {
            out = SkewElem::from_base(BaseElem::var_power(1, ctx->ring().scalar_one()));
            return true;
        }
        if (ctx->ring().mode != ScalarMode::rational && id == ctx->ring().param) {
            out = SkewElem::from_base(
                BaseElem::constant(Scalar::param_power(ctx->ring().mode, ctx->ring().param, 1)));
            return true;
        }
        return false;
    }
    Value add(Value a, const Value& b) const { return a + b; }
    Value sub(Value a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return ctx->mul(a, b); }
    Value invert(const Value& a) const {
        if (a.coeffs().size() != 1) throw std::domain_error("cannot invert a skew sum");
        long i = a.coeffs().begin()->first;
        const BaseElem& r = a.coeffs().begin()->second;
        BaseElem rinv = r.pow(-1);  // throws unless a unit monomial
        return SkewElem::x_power(-i, ctx->alpha().apply_power(rinv, -i));
    }
    Value divide(const Value& a, const Value& b) const { return mul(a, invert(b)); }
    Value neg(const Value& a) const { return -a; }
    Value power(const Value& a, long k) const {
        if (k < 0) return ctx->pow(invert(a), -k);
        return ctx->pow(a, k);
    }
};

struct Laurent2Env {
    using Value = LaurentPoly2;
    std::array<bool, 2> flags;
    std::array<std::string, 2> names;

    Value from_number(const Rational& r) const {
        return LaurentPoly2::monomial(flags, {0, 0}, r);
    }
    bool lookup(const std::string& id, Value& out) const {
        for (int i = 0; i < 2; ++i) {
            if (id == names[i]) {
                out = LaurentPoly2::monomial(flags, {i == 0 ? 1 : 0, i == 1 ? 1 : 0});
                return true;
            }
        }
        return false;
    }
    Value add(Value a, const Value& b) const { return a += b; }
    Value sub(Value a, const Value& b) const { return a -= b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value divide(const Value& a, const Value& b) const { return mul(a, b.pow(-1)); }
    Value neg(const Value& a) const { return -a; }
    Value power(const Value& a, long k) const { return a.pow(k); }
};

struct Poly3Env {
    using Value = CommPoly3;
    std::array<std::string, 3> names;

    Value from_number(const Rational& r) const { return CommPoly3::constant(r); }
    bool lookup(const std::string& id, Value& out) const {
        for (int i = 0; i < 3; ++i) {
            if (id == names[i]) {
                out = CommPoly3::var(i);
                return true;
            }
        }
        return false;
    }
    Value add(Value a, const Value& b) const { return a += b; }
    Value sub(Value a, const Value& b) const { return a -= b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value divide(const Value& a, const Value& b) const {
        if (b.terms().size() != 1 || b.terms().begin()->first != CommPoly3::Key{0, 0, 0})
            throw std::domain_error("division by a non-constant polynomial");
        return a.scaled(Rational(1) / b.terms().begin()->second);
    }
    Value neg(const Value& a) const { return -a; }
    Value power(const Value& a, long k) const {
        if (k < 0) throw std::domain_error("negative power of a polynomial");
        Value acc = CommPoly3::constant(Rational(1));
        for (long i = 0; i < k; ++i) acc = acc * a;
        return acc;
    }
};

// Lines, with '#' comments stripped.
std::vector<std::pair<int, std::string>> split_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream is(text);
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        out.emplace_back(no, line.substr(a, b - a + 1));
    }
    return out;
}

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace

Scalar parse_scalar(const std::string& text, ScalarMode mode, const std::string& param) {
    return eval_node(*parse_full(text), ScalarEnv{mode, param});
}

NCPoly parse_poly(const std::string& text, const Alphabet& alphabet, ScalarMode mode,
                  const std::string& param) {
    return eval_node(*parse_full(text), PolyEnv{&alphabet, mode, param});
}

BaseElem parse_base_elem(const std::string& text, const BaseRing& ring) {
    return eval_node(*parse_full(text), BaseEnv{&ring});
}

SkewElem parse_skew_elem(const std::string& text, const ReversingContext& ctx,
                         const std::string& xname) {
    return eval_node(*parse_full(text), SkewEnv{&ctx, xname});
}

LaurentPoly2 parse_laurent2(const std::string& text, std::array<bool, 2> flags,
                            const std::array<std::string, 2>& names) {
    return eval_node(*parse_full(text), Laurent2Env{flags, names});
}

CommPoly3 parse_poly3(const std::string& text) {
    return eval_node(*parse_full(text), Poly3Env{{"x1", "x2", "x3"}});
}

PresentationFile parse_presentation(const std::string& text) {
    std::string name;
    ScalarMode mode = ScalarMode::rational;
    std::string param;
    Alphabet alphabet;
    bool have_mode = false, have_gens = false;
    std::optional<DegreeFunction> degrees;
    std::optional<OrderKind> order_kind;
    bool explicit_orientation = false;
    std::vector<std::pair<int, std::string>> relation_lines;

    for (const auto& [no, line] : split_lines(text)) {
        std::vector<std::string> words = split_words(line);
        const std::string& key = words[0];
        if (key == "algebra") {
            if (words.size() != 2) throw parse_error(no, 1, "usage: algebra NAME");
            name = words[1];
        } else if (key == "mode") {
            if (words.size() < 2) throw parse_error(no, 1, "usage: mode KIND [PARAM]");
            if (words[1] == "rational") {
                mode = ScalarMode::rational;
            } else {
                if (words.size() != 3)
                    throw parse_error(no, 1, "parametric mode needs a parameter name");
                param = words[2];
                if (words[1] == "polynomial")
                    mode = ScalarMode::polynomial;
                else if (words[1] == "laurent")
                    mode = ScalarMode::laurent;
                else if (words[1] == "ratfunc")
                    mode = ScalarMode::ratfunc;
                else
                    throw parse_error(no, 1, "unknown mode '" + words[1] + "'");
            }
            have_mode = true;
        } else if (key == "generators") {
            if (words.size() < 2) throw parse_error(no, 1, "at least one generator required");
            for (size_t i = 1; i < words.size(); ++i) {
                if (alphabet.index_of(words[i]) >= 0)
                    throw parse_error(no, 1, "duplicate generator '" + words[i] + "'");
                alphabet.names.push_back(words[i]);
            }
            have_gens = true;
        } else if (key == "degrees") {
            if (!have_gens) throw parse_error(no, 1, "degrees must follow generators");
            DegreeFunction d;
            d.degrees.assign(alphabet.size(), 1);
            for (size_t i = 1; i < words.size(); ++i) {
                size_t colon = words[i].find(':');
                if (colon == std::string::npos)
                    throw parse_error(no, 1, "expected NAME:DEGREE");
                std::string who = words[i].substr(0, colon);
                long deg = std::stol(words[i].substr(colon + 1));
                if (who == "param") {
                    d.param_degree = deg;
                } else {
                    int g = alphabet.index_of(who);
                    if (g < 0) throw parse_error(no, 1, "unknown generator '" + who + "'");
                    d.degrees[static_cast<size_t>(g)] = deg;
                }
            }
            degrees = d;
        } else if (key == "order") {
            if (words.size() < 2) throw parse_error(no, 1, "usage: order KIND");
            size_t at = 1;
            if (words[1] == "explicit") {
                explicit_orientation = true;
                at = 2;
            }
            if (at < words.size()) {
                const std::string& k = words[at];
                if (k == "dlex")
                    order_kind = OrderKind::dlex;
                else if (k == "augdlex")
                    order_kind = OrderKind::augdlex;
                else if (k == "augdlex_low")
                    order_kind = OrderKind::augdlex_low;
                else
                    throw parse_error(no, 1, "unknown order kind '" + k + "'");
            }
            if (!explicit_orientation && !order_kind)
                throw parse_error(no, 1, "usage: order [explicit] [dlex|augdlex|augdlex_low]");
        } else {
            relation_lines.emplace_back(no, line);
        }
    }
    if (!have_mode) throw parse_error(1, 1, "missing mode line");
    if (!have_gens) throw parse_error(1, 1, "missing generators line");

    std::optional<MonomialOrder> order;
    if (order_kind) {
        DegreeFunction d = degrees ? *degrees : unit_degrees(alphabet.size());
        order = MonomialOrder{*order_kind, d};
    }
    if (!explicit_orientation && !order)
        throw parse_error(1, 1, "missing order line");

    std::vector<Relation> relations;
    for (const auto& [no, line] : relation_lines) {
        size_t arrow = line.find("->");
        try {
            if (arrow != std::string::npos) {
                NCPoly lhs = parse_poly(line.substr(0, arrow), alphabet, mode, param);
                NCPoly rhs = parse_poly(line.substr(arrow + 2), alphabet, mode, param);
                if (lhs.term_count() != 1)
                    throw parse_error(no, 1, "oriented relation needs a single leading monomial");
                const auto& [lead, coeff] = *lhs.terms().begin();
                if (lead.empty())
                    throw parse_error(no, 1, "leading monomial must contain a generator");
                if (!coeff.is_unit())
                    throw parse_error(no, 1, "leading coefficient is not a unit: " + coeff.str());
                relations.push_back({lead, rhs.scaled(coeff.inv())});
            } else {
                size_t eq = line.find('=');
                if (eq == std::string::npos)
                    throw parse_error(no, 1, "expected 'LHS -> RHS' or 'LHS = RHS'");
                if (explicit_orientation)
                    throw parse_error(no, 1,
                                      "'=' relations cannot be auto-oriented under explicit orientation");
                NCPoly lhs = parse_poly(line.substr(0, eq), alphabet, mode, param);
                NCPoly rhs = parse_poly(line.substr(eq + 1), alphabet, mode, param);
                NCPoly diff = lhs - rhs;
                if (diff.is_zero())
                    throw parse_error(no, 1, "relation is trivial");
                // the overall largest monomial must survive the subtraction
                const Word* best = nullptr;
                for (const auto& [w, c] : lhs.terms()) {
                    (void)c;
                    if (!best || order->compare(w, *best) > 0) best = &w;
                }
                for (const auto& [w, c] : rhs.terms()) {
                    (void)c;
                    if (!best || order->compare(w, *best) > 0) best = &w;
                }
                Scalar lead_coeff = diff.coeff(*best);
                if (lead_coeff.is_zero())
                    throw parse_error(
                        no, 1, "cannot orient: the largest monomial appears on both sides");
                if (!lead_coeff.is_unit())
                    throw parse_error(no, 1,
                                      "leading coefficient is not a unit: " + lead_coeff.str());
                NCPoly replacement =
                    (NCPoly::word(*best) - diff.scaled(lead_coeff.inv()));
                relations.push_back({*best, std::move(replacement)});
            }
        } catch (const parse_error& e) {
            if (e.line == no) throw;
            throw parse_error(no, e.column, e.message);
        } catch (const std::exception& e) {
            throw parse_error(no, 1, e.what());
        }
    }

    ReductionSystem sys(alphabet, mode, param, std::move(relations),
                        explicit_orientation ? Orientation::explicit_orientation
                                             : Orientation::by_order,
                        order);
    return PresentationFile{name, std::move(sys)};
}

std::string print_presentation(const std::string& name, const ReductionSystem& sys) {
    std::ostringstream os;
    os << "algebra " << (name.empty() ? "A" : name) << "\n";
    os << "mode ";
    switch (sys.mode()) {
        case ScalarMode::rational: os << "rational"; break;
        case ScalarMode::polynomial: os << "polynomial " << sys.parameter(); break;
        case ScalarMode::laurent: os << "laurent " << sys.parameter(); break;
        case ScalarMode::ratfunc: os << "ratfunc " << sys.parameter(); break;
    }
    os << "\ngenerators";
    for (const auto& g : sys.alphabet().names) os << " " << g;
    os << "\n";
    if (sys.has_declared_order()) {
        const DegreeFunction& d = sys.order().degree;
        os << "degrees";
        for (size_t i = 0; i < sys.alphabet().size(); ++i)
            os << " " << sys.alphabet().names[i] << ":" << d.degrees[i];
        if (d.param_degree != 0) os << " param:" << d.param_degree;
        os << "\n";
    }
    os << "order ";
    if (sys.orientation() == Orientation::explicit_orientation) os << "explicit";
    if (sys.has_declared_order()) {
        if (sys.orientation() == Orientation::explicit_orientation) os << " ";
        switch (sys.order().kind) {
            case OrderKind::dlex: os << "dlex"; break;
            case OrderKind::augdlex: os << "augdlex"; break;
            case OrderKind::augdlex_low: os << "augdlex_low"; break;
        }
    }
    os << "\n";
    const MonomialOrder* ord = sys.has_declared_order() ? &sys.order() : nullptr;
    for (const auto& rel : sys.relations()) {
        os << word_str(rel.lead, sys.alphabet()) << " -> "
           << poly_str(rel.replacement, sys.alphabet(), ord) << "\n";
    }
    return os.str();
}

SkewFile parse_skewfile(const std::string& text) {
    std::string name;
    BaseRing ring;
    bool have_mode = false, have_base = false;
    std::optional<BaseElem> alpha_img, alpha_inv, gamma_img, gamma_inv;

    for (const auto& [no, line] : split_lines(text)) {
        std::vector<std::string> words = split_words(line);
        const std::string& key = words[0];
        if (key == "skew") {
            if (words.size() != 2) throw parse_error(no, 1, "usage: skew NAME");
            name = words[1];
        } else if (key == "mode") {
            if (words[1] == "rational") {
                ring.mode = ScalarMode::rational;
            } else {
                if (words.size() != 3)
                    throw parse_error(no, 1, "parametric mode needs a parameter name");
                ring.param = words[2];
                if (words[1] == "polynomial")
                    ring.mode = ScalarMode::polynomial;
                else if (words[1] == "laurent")
                    ring.mode = ScalarMode::laurent;
                else
                    throw parse_error(no, 1, "unknown mode '" + words[1] + "'");
            }
            have_mode = true;
        } else if (key == "base") {
            if (words.size() != 3 || (words[2] != "laurent" && words[2] != "poly"))
                throw parse_error(no, 1, "usage: base VAR laurent|poly");
            ring.var = words[1];
            ring.laurent = (words[2] == "laurent");
            have_base = true;
        } else if (key == "alpha" || key == "alpha_inv" || key == "gamma" ||
                   key == "gamma_inv") {
            if (!have_mode || !have_base)
                throw parse_error(no, 1, "mode and base must precede the maps");
            size_t arrow = line.find("->");
            if (arrow == std::string::npos) throw parse_error(no, 1, "expected 'MAP y -> IMAGE'");
            try {
                BaseElem img = parse_base_elem(line.substr(arrow + 2), ring);
                if (key == "alpha") alpha_img = img;
                if (key == "alpha_inv") alpha_inv = img;
                if (key == "gamma") gamma_img = img;
                if (key == "gamma_inv") gamma_inv = img;
            } catch (const parse_error& e) {
                if (e.line == no) throw;
                throw parse_error(no, e.column, e.message);
            } catch (const std::exception& e) {
                throw parse_error(no, 1, e.what());
            }
        } else {
            throw parse_error(no, 1, "unknown directive '" + key + "'");
        }
    }
    if (!have_mode || !have_base) throw parse_error(1, 1, "missing mode or base line");
    if (!alpha_img || !alpha_inv) throw parse_error(1, 1, "missing alpha / alpha_inv lines");
    if (!gamma_img) throw parse_error(1, 1, "missing gamma line");
    BaseMap alpha(ring, *alpha_img, *alpha_inv);
    BaseMap gamma(ring, *gamma_img, gamma_inv ? *gamma_inv : *gamma_img);
    ReversingContext ctx(ring, alpha, gamma);
    return SkewFile{name, ring, std::move(ctx)};
}

std::string print_skewfile(const std::string& name, const ReversingContext& ctx) {
    const BaseRing& ring = ctx.ring();
    std::ostringstream os;
    os << "skew " << (name.empty() ? "S" : name) << "\n";
    os << "mode ";
    switch (ring.mode) {
        case ScalarMode::rational: os << "rational"; break;
        case ScalarMode::polynomial: os << "polynomial " << ring.param; break;
        case ScalarMode::laurent: os << "laurent " << ring.param; break;
        case ScalarMode::ratfunc: os << "ratfunc " << ring.param; break;
    }
    os << "\nbase " << ring.var << " " << (ring.laurent ? "laurent" : "poly") << "\n";
    os << "alpha " << ring.var << " -> " << ctx.alpha().image().str(ring) << "\n";
    os << "alpha_inv " << ring.var << " -> " << ctx.alpha().inverse_image().str(ring) << "\n";
    os << "gamma " << ring.var << " -> " << ctx.gamma().image().str(ring) << "\n";
    return os.str();
}

}  // namespace ncalg
