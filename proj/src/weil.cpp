#include "superfermat/weil.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace superfermat {

using Node = SmoothExpr::Node;
using Kind = SmoothExpr::Kind;

namespace {

std::shared_ptr<const Node> make_node(Node n) {
    return std::make_shared<const Node>(std::move(n));
}

bool is_const(const SmoothExpr &e, const Rational *value = nullptr) {
    if (e.kind() != Kind::Constant)
        return false;
    return value == nullptr || e.node().value == *value;
}

} // namespace

SmoothExpr SmoothExpr::constant(Rational c, Span span) {
    return SmoothExpr(make_node({Kind::Constant, std::move(c), 0, 0, nullptr, nullptr, span}));
}

SmoothExpr SmoothExpr::variable(int index, Span span) {
    if (index < 0)
        throw Error("negative variable index");
    return SmoothExpr(make_node({Kind::Variable, Rational(0), index, 0, nullptr, nullptr, span}));
}

SmoothExpr operator+(const SmoothExpr &a, const SmoothExpr &b) {
    Rational zero(0);
    if (is_const(a, &zero))
        return b;
    if (is_const(b, &zero))
        return a;
    if (is_const(a) && is_const(b))
        return SmoothExpr::constant(a.node().value + b.node().value);
    return SmoothExpr(make_node({Kind::Sum, Rational(0), 0, 0, a.node_, b.node_, {}}));
}

SmoothExpr operator*(const SmoothExpr &a, const SmoothExpr &b) {
    Rational zero(0), one(1);
    if (is_const(a, &zero) || is_const(b, &zero))
        return SmoothExpr::constant(Rational(0));
    if (is_const(a, &one))
        return b;
    if (is_const(b, &one))
        return a;
    if (is_const(a) && is_const(b))
        return SmoothExpr::constant(a.node().value * b.node().value);
    return SmoothExpr(make_node({Kind::Product, Rational(0), 0, 0, a.node_, b.node_, {}}));
}

SmoothExpr SmoothExpr::operator-() const {
    if (kind() == Kind::Constant)
        return constant(-node_->value);
    if (kind() == Kind::Negate)
        return SmoothExpr(node_->a);
    return SmoothExpr(make_node({Kind::Negate, Rational(0), 0, 0, node_, nullptr, {}}));
}

SmoothExpr operator-(const SmoothExpr &a, const SmoothExpr &b) { return a + (-b); }

SmoothExpr SmoothExpr::power(SmoothExpr base, int exponent, Span span) {
    if (exponent == 0)
        return constant(Rational(1), span);
    if (exponent == 1)
        return base;
    if (base.kind() == Kind::Constant && (exponent > 0 || !base.node().value.is_zero())) {
        Rational v(1);
        Rational b = exponent > 0 ? base.node().value : base.node().value.reciprocal();
        for (int i = 0; i < std::abs(exponent); ++i)
            v *= b;
        return constant(std::move(v), span);
    }
    return SmoothExpr(
        make_node({Kind::Power, Rational(0), 0, exponent, base.node_, nullptr, span}));
}

SmoothExpr SmoothExpr::reciprocal(SmoothExpr e, Span span) {
    if (e.kind() == Kind::Constant && !e.node().value.is_zero())
        return constant(e.node().value.reciprocal(), span);
    return SmoothExpr(make_node({Kind::Reciprocal, Rational(0), 0, 0, e.node_, nullptr, span}));
}

SmoothExpr SmoothExpr::apply_function(const std::string &name, SmoothExpr arg, Span span) {
    Kind k;
    if (name == "exp")
        k = Kind::Exp;
    else if (name == "log")
        k = Kind::Log;
    else if (name == "sin")
        k = Kind::Sin;
    else if (name == "cos")
        k = Kind::Cos;
    else
        throw UnknownFunction(name, span);
    return SmoothExpr(make_node({k, Rational(0), 0, 0, arg.node_, nullptr, span}));
}

SmoothExpr exp(const SmoothExpr &e) { return SmoothExpr::apply_function("exp", e); }
SmoothExpr log(const SmoothExpr &e) { return SmoothExpr::apply_function("log", e); }
SmoothExpr sin(const SmoothExpr &e) { return SmoothExpr::apply_function("sin", e); }
SmoothExpr cos(const SmoothExpr &e) { return SmoothExpr::apply_function("cos", e); }

int SmoothExpr::arity() const {
    switch (kind()) {
    case Kind::Constant:
        return 0;
    case Kind::Variable:
        return node_->var + 1;
    default: {
        int a = node_->a ? SmoothExpr(node_->a).arity() : 0;
        int b = node_->b ? SmoothExpr(node_->b).arity() : 0;
        return std::max(a, b);
    }
    }
}

bool SmoothExpr::is_polynomial() const {
    switch (kind()) {
    case Kind::Constant:
    case Kind::Variable:
        return true;
    case Kind::Sum:
    case Kind::Product:
        return SmoothExpr(node_->a).is_polynomial() && SmoothExpr(node_->b).is_polynomial();
    case Kind::Negate:
        return SmoothExpr(node_->a).is_polynomial();
    case Kind::Power:
        return node_->exponent >= 0 && SmoothExpr(node_->a).is_polynomial();
    default:
        return false;
    }
}

SuperPoly SmoothExpr::to_superpoly(Signature sig) const {
    switch (kind()) {
    case Kind::Constant:
        return SuperPoly::constant(sig, node_->value);
    case Kind::Variable:
        return SuperPoly::generator(sig, VariableRef::even(node_->var + 1));
    case Kind::Sum:
        return SmoothExpr(node_->a).to_superpoly(sig) + SmoothExpr(node_->b).to_superpoly(sig);
    case Kind::Product:
        return SmoothExpr(node_->a).to_superpoly(sig) * SmoothExpr(node_->b).to_superpoly(sig);
    case Kind::Negate:
        return -SmoothExpr(node_->a).to_superpoly(sig);
    case Kind::Power:
        if (node_->exponent < 0)
            throw Error("negative power is not polynomial");
        return SmoothExpr(node_->a).to_superpoly(sig).pow(node_->exponent);
    default:
        throw Error("expression is not polynomial");
    }
}

bool SmoothExpr::operator==(const SmoothExpr &o) const {
    if (node_ == o.node_)
        return true;
    if (kind() != o.kind())
        return false;
    const Node &x = *node_, &y = *o.node_;
    if (x.value != y.value || x.var != y.var || x.exponent != y.exponent)
        return false;
    auto eq = [](const std::shared_ptr<const Node> &a, const std::shared_ptr<const Node> &b) {
        if (!a || !b)
            return a == b;
        return SmoothExpr(a) == SmoothExpr(b);
    };
    return eq(x.a, y.a) && eq(x.b, y.b);
}

SmoothExpr diff(const SmoothExpr &e, int var) {
    const Node &n = e.node();
    switch (e.kind()) {
    case Kind::Constant:
        return SmoothExpr::constant(Rational(0));
    case Kind::Variable:
        return SmoothExpr::constant(Rational(n.var == var ? 1 : 0));
    case Kind::Sum:
        return diff(SmoothExpr(n.a), var) + diff(SmoothExpr(n.b), var);
    case Kind::Product:
        return diff(SmoothExpr(n.a), var) * SmoothExpr(n.b) +
               SmoothExpr(n.a) * diff(SmoothExpr(n.b), var);
    case Kind::Negate:
        return -diff(SmoothExpr(n.a), var);
    case Kind::Power: {
        SmoothExpr base(n.a);
        return SmoothExpr::constant(Rational(n.exponent)) *
               SmoothExpr::power(base, n.exponent - 1) * diff(base, var);
    }
    case Kind::Reciprocal: {
        SmoothExpr base(n.a);
        return -(diff(base, var) * SmoothExpr::reciprocal(SmoothExpr::power(base, 2)));
    }
    case Kind::Exp:
        return e * diff(SmoothExpr(n.a), var);
    case Kind::Log:
        return diff(SmoothExpr(n.a), var) * SmoothExpr::reciprocal(SmoothExpr(n.a));
    case Kind::Sin:
        return cos(SmoothExpr(n.a)) * diff(SmoothExpr(n.a), var);
    case Kind::Cos:
        return -(sin(SmoothExpr(n.a)) * diff(SmoothExpr(n.a), var));
    }
    throw Error("unreachable");
}

SmoothExpr compose(const SmoothExpr &e, const std::vector<SmoothExpr> &args) {
    const Node &n = e.node();
    switch (e.kind()) {
    case Kind::Constant:
        return e;
    case Kind::Variable:
        if (n.var >= int(args.size()))
            throw Error("composition argument missing");
        return args[n.var];
    case Kind::Sum:
        return compose(SmoothExpr(n.a), args) + compose(SmoothExpr(n.b), args);
    case Kind::Product:
        return compose(SmoothExpr(n.a), args) * compose(SmoothExpr(n.b), args);
    case Kind::Negate:
        return -compose(SmoothExpr(n.a), args);
    case Kind::Power:
        return SmoothExpr::power(compose(SmoothExpr(n.a), args), n.exponent);
    case Kind::Reciprocal:
        return SmoothExpr::reciprocal(compose(SmoothExpr(n.a), args));
    case Kind::Exp:
        return exp(compose(SmoothExpr(n.a), args));
    case Kind::Log:
        return log(compose(SmoothExpr(n.a), args));
    case Kind::Sin:
        return sin(compose(SmoothExpr(n.a), args));
    case Kind::Cos:
        return cos(compose(SmoothExpr(n.a), args));
    }
    throw Error("unreachable");
}

Numeric eval_numeric(const SmoothExpr &e, std::span<const Numeric> point) {
    const Node &n = e.node();
    Numeric v;
    switch (e.kind()) {
    case Kind::Constant:
        v = n.value.to_double();
        break;
    case Kind::Variable:
        if (n.var >= int(point.size()))
            throw Error("evaluation point has too few coordinates");
        v = point[n.var];
        break;
    case Kind::Sum:
        v = eval_numeric(SmoothExpr(n.a), point) + eval_numeric(SmoothExpr(n.b), point);
        break;
    case Kind::Product:
        v = eval_numeric(SmoothExpr(n.a), point) * eval_numeric(SmoothExpr(n.b), point);
        break;
    case Kind::Negate:
        v = -eval_numeric(SmoothExpr(n.a), point);
        break;
    case Kind::Power: {
        Numeric base = eval_numeric(SmoothExpr(n.a), point);
        if (base == 0.0 && n.exponent < 0)
            throw DomainError("zero raised to a negative power", n.span);
        v = std::pow(base, n.exponent);
        break;
    }
    case Kind::Reciprocal: {
        Numeric base = eval_numeric(SmoothExpr(n.a), point);
        if (base == 0.0)
            throw DomainError("reciprocal of zero", n.span);
        v = 1.0 / base;
        break;
    }
    case Kind::Exp:
        v = std::exp(eval_numeric(SmoothExpr(n.a), point));
        break;
    case Kind::Log: {
        Numeric base = eval_numeric(SmoothExpr(n.a), point);
        if (!(base > 0.0))
            throw DomainError("logarithm of a non-positive value", n.span);
        v = std::log(base);
        break;
    }
    case Kind::Sin:
        v = std::sin(eval_numeric(SmoothExpr(n.a), point));
        break;
    case Kind::Cos:
        v = std::cos(eval_numeric(SmoothExpr(n.a), point));
        break;
    default:
        throw Error("unreachable");
    }
    if (std::isnan(v))
        throw DomainError("evaluation produced NaN", n.span);
    return v;
}

namespace {

std::string paren(const std::string &s) { return "(" + s + ")"; }

// Precedence levels: 0 sum, 1 product, 2 prefix, 3 power/atom.
std::string print_expr(const SmoothExpr &e, int parent) {
    const Node &n = e.node();
    std::string s;
    int level;
    switch (e.kind()) {
    case Kind::Constant:
        s = n.value.to_string();
        level = n.value.sign() < 0 ? 2 : 3;
        break;
    case Kind::Variable:
        s = "u" + std::to_string(n.var + 1);
        level = 3;
        break;
    case Kind::Sum:
        // the parser is left-associative: parenthesize a right-nested operand
        s = print_expr(SmoothExpr(n.a), 0) + " + " + print_expr(SmoothExpr(n.b), 1);
        level = 0;
        break;
    case Kind::Product:
        s = print_expr(SmoothExpr(n.a), 1) + "*" + print_expr(SmoothExpr(n.b), 2);
        level = 1;
        break;
    case Kind::Negate:
        s = "-" + print_expr(SmoothExpr(n.a), 2);
        level = 2;
        break;
    case Kind::Power:
        s = print_expr(SmoothExpr(n.a), 3) + "^" + std::to_string(n.exponent);
        level = 2;
        break;
    case Kind::Reciprocal:
        s = "1/" + print_expr(SmoothExpr(n.a), 3);
        level = 1;
        break;
    case Kind::Exp:
        return "exp(" + print_expr(SmoothExpr(n.a), 0) + ")";
    case Kind::Log:
        return "log(" + print_expr(SmoothExpr(n.a), 0) + ")";
    case Kind::Sin:
        return "sin(" + print_expr(SmoothExpr(n.a), 0) + ")";
    case Kind::Cos:
        return "cos(" + print_expr(SmoothExpr(n.a), 0) + ")";
    default:
        throw Error("unreachable");
    }
    return level < parent ? paren(s) : s;
}

} // namespace

std::string SmoothExpr::to_string() const { return print_expr(*this, 0); }

std::map<std::vector<int>, Numeric>
taylor_multi_index_table(const SmoothExpr &e, std::span<const Numeric> point, int max_order) {
    if (max_order < 0)
        throw Error("negative differentiation order");
    const int p = int(point.size());
    std::map<std::vector<int>, SmoothExpr> trees;
    std::map<std::vector<int>, Numeric> values;
    std::vector<std::vector<int>> frontier{std::vector<int>(p, 0)};
    trees.emplace(frontier[0], e);
    values.emplace(frontier[0], eval_numeric(e, point));
    for (int order = 1; order <= max_order; ++order) {
        std::vector<std::vector<int>> next;
        for (const auto &alpha : frontier) {
            for (int k = 0; k < p; ++k) {
                std::vector<int> beta = alpha;
                ++beta[k];
                if (trees.count(beta))
                    continue;
                // differentiate along the smallest-index variable of beta to
                // keep one canonical derivative chain per multi-index
                int first = 0;
                while (beta[first] == 0)
                    ++first;
                std::vector<int> parent = beta;
                --parent[first];
                SmoothExpr d = diff(trees.at(parent), first);
                values.emplace(beta, eval_numeric(d, point));
                trees.emplace(beta, std::move(d));
                next.push_back(std::move(beta));
            }
        }
        frontier = std::move(next);
    }
    return values;
}

RealWeilAlgebra::RealWeilAlgebra(FinitePresentation pres, QuotientAlgebra q,
                                 std::vector<SuperMonomial> basis, int nil_index)
    : presentation_(std::move(pres)), quotient_(std::move(q)), basis_(std::move(basis)),
      nil_index_(nil_index) {
    const std::size_t dim = basis_.size();
    for (std::size_t i = 0; i < dim; ++i)
        if (basis_[i].is_unit())
            unit_index_ = i;
    products_.resize(dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i; j < dim; ++j) {
            SuperPoly prod = quotient_.multiply(SuperPoly::monomial(quotient_.signature(), basis_[i]),
                                                SuperPoly::monomial(quotient_.signature(), basis_[j]));
            std::vector<std::pair<std::size_t, Rational>> coords;
            for (const auto &[m, c] : prod.terms())
                coords.emplace_back(basis_index(m), c);
            products_[i * dim + j] = coords;
            if (i != j) {
                // basis monomials are homogeneous: swap costs the Koszul sign
                int sign = (basis_[i].parity() == Parity::Odd &&
                            basis_[j].parity() == Parity::Odd)
                               ? -1
                               : 1;
                auto swapped = coords;
                if (sign < 0)
                    for (auto &[k, c] : swapped)
                        c = -c;
                products_[j * dim + i] = std::move(swapped);
            }
        }
    }
}

RealWeilAlgebra::Ptr RealWeilAlgebra::certify(const FinitePresentation &presentation) {
    QuotientAlgebra q(presentation.ideal());
    if (!q.staircase_basis())
        throw NotFiniteDimensional();
    std::vector<SuperMonomial> basis = *q.staircase_basis();
    std::optional<int> idx = augmentation_nilpotency(q);
    if (!idx)
        throw Error("augmentation ideal is not nilpotent; not a Weil algebra");
    return Ptr(new RealWeilAlgebra(presentation, std::move(q), std::move(basis), *idx));
}

std::size_t RealWeilAlgebra::basis_index(const SuperMonomial &m) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == m)
            return i;
    throw Error("monomial is not a staircase basis element");
}

const std::vector<std::pair<std::size_t, Rational>> &
RealWeilAlgebra::product(std::size_t i, std::size_t j) const {
    return products_[i * basis_.size() + j];
}

JetElement::JetElement(RealWeilAlgebra::Ptr algebra)
    : algebra_(std::move(algebra)), coords_(algebra_->dimension(), 0.0) {}

JetElement::JetElement(RealWeilAlgebra::Ptr algebra, std::vector<Numeric> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (int(coords_.size()) != algebra_->dimension())
        throw Error("coordinate count does not match the algebra dimension");
}

JetElement JetElement::from_poly(RealWeilAlgebra::Ptr algebra, const SuperPoly &p) {
    SuperPoly nf = algebra->quotient().reduce(p);
    JetElement jet(algebra);
    for (const auto &[m, c] : nf.terms())
        jet.coords_[jet.algebra_->basis_index(m)] = c.to_double();
    return jet;
}

JetElement &JetElement::set_coordinate(std::size_t i, Numeric v) {
    coords_.at(i) = v;
    return *this;
}

bool JetElement::is_even() const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != 0.0 && algebra_->basis_parity(i) != Parity::Even)
            return false;
    return true;
}

bool JetElement::is_odd() const {
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i] != 0.0 && algebra_->basis_parity(i) != Parity::Odd)
            return false;
    return true;
}

JetElement JetElement::nilpotent_part() const {
    JetElement out = *this;
    out.coords_[algebra_->unit_index()] = 0.0;
    return out;
}

void JetElement::check_same(const JetElement &o) const {
    if (algebra_ != o.algebra_)
        throw AlgebraMismatch();
}

JetElement JetElement::operator+(const JetElement &o) const {
    check_same(o);
    JetElement out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.coords_[i] += o.coords_[i];
    return out;
}

JetElement JetElement::operator-(const JetElement &o) const {
    check_same(o);
    JetElement out = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        out.coords_[i] -= o.coords_[i];
    return out;
}

JetElement JetElement::scaled(Numeric c) const {
    JetElement out = *this;
    for (auto &v : out.coords_)
        v *= c;
    return out;
}

std::vector<Rational> jet_mul_exact(const RealWeilAlgebra &w, const std::vector<Rational> &a,
                                    const std::vector<Rational> &b) {
    std::vector<Rational> out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero())
                continue;
            Rational c = a[i] * b[j];
            for (const auto &[k, s] : w.product(i, j))
                out[k] += c * s;
        }
    }
    return out;
}

namespace {

std::vector<Rational> lift_exact(const JetElement &jet) {
    std::vector<Rational> out;
    out.reserve(jet.coordinates().size());
    for (Numeric v : jet.coordinates())
        out.push_back(Rational::from_double(v));
    return out;
}

JetElement round_to_jet(RealWeilAlgebra::Ptr algebra, const std::vector<Rational> &coords) {
    std::vector<Numeric> out;
    out.reserve(coords.size());
    for (const Rational &c : coords)
        out.push_back(c.to_double());
    return JetElement(std::move(algebra), std::move(out));
}

} // namespace

JetElement JetElement::operator*(const JetElement &o) const {
    check_same(o);
    return round_to_jet(algebra_, jet_mul_exact(*algebra_, lift_exact(*this), lift_exact(o)));
}

bool JetElement::operator==(const JetElement &o) const {
    return algebra_ == o.algebra_ && coords_ == o.coords_;
}

JetElement smooth_eval_jet(const SmoothExpr &e, const std::vector<JetElement> &args,
                           int max_order) {
    if (args.empty())
        throw AlgebraMismatch("smooth evaluation needs at least one jet argument");
    RealWeilAlgebra::Ptr w = args[0].algebra();
    for (const JetElement &a : args) {
        if (a.algebra() != w)
            throw AlgebraMismatch();
        if (!a.is_even())
            throw ParityMismatch("smooth functions apply to even jets only");
    }
    if (e.arity() > int(args.size()))
        throw Error("expression uses more variables than arguments supplied");

    const int p = int(args.size());
    const int order = max_order < 0 ? w->nil_index() - 1 : max_order;

    std::vector<Numeric> bodies;
    for (const JetElement &a : args)
        bodies.push_back(a.body());
    auto derivatives = taylor_multi_index_table(e, bodies, order);

    // Exact powers of the nilpotent parts.
    std::vector<std::vector<std::vector<Rational>>> powers(p);
    std::vector<Rational> unit_coords(w->dimension(), Rational(0));
    unit_coords[w->unit_index()] = Rational(1);
    for (int i = 0; i < p; ++i) {
        powers[i].push_back(unit_coords);
        std::vector<Rational> nil = lift_exact(args[i].nilpotent_part());
        for (int k = 1; k <= order; ++k)
            powers[i].push_back(jet_mul_exact(*w, powers[i].back(), nil));
    }

    std::vector<Rational> result(w->dimension(), Rational(0));
    for (const auto &[alpha, value] : derivatives) {
        // alpha! and the monomial n^alpha
        Rational fact(1);
        std::vector<Rational> mono = unit_coords;
        bool zero = false;
        for (int i = 0; i < p && !zero; ++i) {
            for (int r = 1; r <= alpha[i]; ++r)
                fact *= Rational(r);
            if (alpha[i] > 0) {
                mono = jet_mul_exact(*w, mono, powers[i][alpha[i]]);
                zero = std::all_of(mono.begin(), mono.end(),
                                   [](const Rational &c) { return c.is_zero(); });
            }
        }
        if (zero)
            continue;
        Rational scale = Rational::from_double(value) / fact;
        if (scale.is_zero())
            continue;
        for (std::size_t k = 0; k < result.size(); ++k)
            result[k] += scale * mono[k];
    }
    return round_to_jet(w, result);
}

ParityClass SuperFunction::parity_class() const {
    bool has_even = false, has_odd = false;
    for (const auto &[oddset, expr] : components) {
        if (is_const(expr, nullptr) && expr.node().value.is_zero())
            continue;
        (__builtin_popcountll(oddset) % 2 ? has_odd : has_even) = true;
    }
    if (has_even && has_odd)
        return ParityClass::Mixed;
    return has_odd ? ParityClass::Odd : ParityClass::Even;
}

JetElement berezin_eval(const SuperFunction &f, const std::vector<JetElement> &even_args,
                        const std::vector<JetElement> &odd_args) {
    if (int(even_args.size()) != f.signature.evens ||
        int(odd_args.size()) != f.signature.odds)
        throw SignatureMismatch("argument count does not match the function signature");
    RealWeilAlgebra::Ptr w;
    for (const JetElement &a : even_args) {
        if (!w)
            w = a.algebra();
        if (a.algebra() != w)
            throw AlgebraMismatch();
        if (!a.is_even())
            throw ParityMismatch("even argument has odd components");
    }
    for (const JetElement &a : odd_args) {
        if (!w)
            w = a.algebra();
        if (a.algebra() != w)
            throw AlgebraMismatch();
        if (!a.is_odd())
            throw ParityMismatch("odd argument has even components");
    }
    if (!w)
        throw AlgebraMismatch("no arguments to infer the Weil algebra from");

    JetElement result(w);
    for (const auto &[oddset, coefficient] : f.components) {
        JetElement term = even_args.empty()
                              ? smooth_eval_jet(coefficient, {JetElement(w)}, -1)
                              : smooth_eval_jet(coefficient, even_args, -1);
        std::uint64_t rest = oddset;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            term = term * odd_args[j];
        }
        result = result + term;
    }
    return result;
}

} // namespace superfermat
