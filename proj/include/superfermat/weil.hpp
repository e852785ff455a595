#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "superfermat/ideals.hpp"
#include "superfermat/theories.hpp"

namespace superfermat {

// Closed expression language for smooth functions of even variables, with
// symbolic differentiation to every order. Constants are exact rationals;
// all rounding happens at evaluation.
class SmoothExpr {
  public:
    enum class Kind {
        Constant,
        Variable,
        Sum,
        Product,
        Power, // integer exponent, possibly negative
        Negate,
        Reciprocal,
        Exp,
        Log,
        Sin,
        Cos
    };

    struct Node {
        Kind kind;
        Rational value;    // Constant
        int var = 0;       // Variable (0-based)
        int exponent = 0;  // Power
        std::shared_ptr<const Node> a, b;
        Span span;
    };

    SmoothExpr() : SmoothExpr(constant(Rational(0))) {}

    static SmoothExpr constant(Rational c, Span span = {});
    static SmoothExpr variable(int index, Span span = {});
    static SmoothExpr power(SmoothExpr base, int exponent, Span span = {});
    static SmoothExpr reciprocal(SmoothExpr e, Span span = {});
    static SmoothExpr apply_function(const std::string &name, SmoothExpr arg, Span span = {});

    friend SmoothExpr operator+(const SmoothExpr &a, const SmoothExpr &b);
    friend SmoothExpr operator-(const SmoothExpr &a, const SmoothExpr &b);
    friend SmoothExpr operator*(const SmoothExpr &a, const SmoothExpr &b);
    SmoothExpr operator-() const;

    Kind kind() const { return node_->kind; }
    const Node &node() const { return *node_; }
    Span span() const { return node_->span; }

    int arity() const; // 1 + largest variable index, 0 for closed expressions
    bool is_polynomial() const;
    SuperPoly to_superpoly(Signature sig) const; // variable i -> x(i+1)

    // Structural equality (used by the round-trip tests).
    bool operator==(const SmoothExpr &o) const;

    std::string to_string() const;

    // Wraps an existing node; nodes are immutable and shared.
    explicit SmoothExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  private:
    std::shared_ptr<const Node> node_;
};

SmoothExpr exp(const SmoothExpr &e);
SmoothExpr log(const SmoothExpr &e);
SmoothExpr sin(const SmoothExpr &e);
SmoothExpr cos(const SmoothExpr &e);

// Symbolic derivative with respect to variable `var` (0-based).
SmoothExpr diff(const SmoothExpr &e, int var);

// Substitutes args[i] for variable i.
SmoothExpr compose(const SmoothExpr &e, const std::vector<SmoothExpr> &args);

// IEEE evaluation. Raises DomainError (reciprocal of zero, log of a
// non-positive value, 0 to a negative power, or any NaN) instead of
// returning NaN.
Numeric eval_numeric(const SmoothExpr &e, std::span<const Numeric> point);

// All partials d^alpha e(point) for |alpha| <= max_order.
std::map<std::vector<int>, Numeric>
taylor_multi_index_table(const SmoothExpr &e, std::span<const Numeric> point, int max_order);

// Finite-dimensional quotient certified as a Weil algebra: nilpotent
// augmentation ideal with index nil_index(). Carries the staircase basis
// and the exact rational structure constants used by jet arithmetic.
class RealWeilAlgebra {
  public:
    using Ptr = std::shared_ptr<const RealWeilAlgebra>;

    // Throws NotFiniteDimensional, NoAugmentation, or Error when the
    // augmentation ideal is not nilpotent.
    static Ptr certify(const FinitePresentation &presentation);

    const FinitePresentation &presentation() const { return presentation_; }
    const QuotientAlgebra &quotient() const { return quotient_; }
    const std::vector<SuperMonomial> &basis() const { return basis_; }
    int dimension() const { return int(basis_.size()); }
    int nil_index() const { return nil_index_; }
    std::size_t unit_index() const { return unit_index_; }

    std::size_t basis_index(const SuperMonomial &m) const; // throws if absent
    Parity basis_parity(std::size_t i) const { return basis_[i].parity(); }

    // Coordinates of basis[i] * basis[j] in the staircase basis.
    const std::vector<std::pair<std::size_t, Rational>> &product(std::size_t i,
                                                                 std::size_t j) const;

  private:
    RealWeilAlgebra(FinitePresentation pres, QuotientAlgebra q,
                    std::vector<SuperMonomial> basis, int nil_index);

    FinitePresentation presentation_;
    QuotientAlgebra quotient_;
    std::vector<SuperMonomial> basis_;
    int nil_index_;
    std::size_t unit_index_ = 0;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> products_; // i*dim+j, i<=j
};

// Element of R (tensor) W: numeric coordinates over the staircase basis.
// Multiplication lifts the coordinates to exact rationals, combines them
// through the algebra's rational structure constants, and rounds once.
class JetElement {
  public:
    explicit JetElement(RealWeilAlgebra::Ptr algebra);
    JetElement(RealWeilAlgebra::Ptr algebra, std::vector<Numeric> coords);

    static JetElement from_poly(RealWeilAlgebra::Ptr algebra, const SuperPoly &p);

    const RealWeilAlgebra::Ptr &algebra() const { return algebra_; }
    const std::vector<Numeric> &coordinates() const { return coords_; }
    Numeric body() const { return coords_[algebra_->unit_index()]; }

    Numeric coordinate(std::size_t i) const { return coords_[i]; }
    JetElement &set_coordinate(std::size_t i, Numeric v);

    bool is_even() const;
    bool is_odd() const;
    JetElement nilpotent_part() const;

    JetElement operator+(const JetElement &o) const;
    JetElement operator-(const JetElement &o) const;
    JetElement operator*(const JetElement &o) const;
    JetElement scaled(Numeric c) const;

    bool operator==(const JetElement &o) const;

  private:
    RealWeilAlgebra::Ptr algebra_;
    std::vector<Numeric> coords_;
    void check_same(const JetElement &o) const;
};

// Exact-coordinate variant used internally and by the oracle tests.
std::vector<Rational> jet_mul_exact(const RealWeilAlgebra &w,
                                    const std::vector<Rational> &a,
                                    const std::vector<Rational> &b);

// Evaluates a smooth function on nilpotent arguments by exact truncated
// Taylor expansion: f(a + n) = sum_{|alpha| < nil index} d^alpha f(a)/alpha!
// n^alpha. Arguments must be even and share the algebra. max_order overrides
// the truncation bound (for the stability tests); values beyond nil_index-1
// cannot change the result.
JetElement smooth_eval_jet(const SmoothExpr &e, const std::vector<JetElement> &args,
                           int max_order = -1);

// Berezin-algebra element: sum_I f_I(x) xi^I with smooth coefficients.
struct SuperFunction {
    Signature signature; // (p|q)
    std::map<std::uint64_t, SmoothExpr> components;

    ParityClass parity_class() const;
};

// F(even args; odd args) = sum_I smooth_eval_jet(F_I, even args) *
// product_{i in I, ascending} odd args_i.
JetElement berezin_eval(const SuperFunction &f, const std::vector<JetElement> &even_args,
                        const std::vector<JetElement> &odd_args);

} // namespace superfermat
