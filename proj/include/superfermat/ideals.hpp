#pragma once

#include <optional>
#include <vector>

#include "superfermat/superpoly.hpp"

namespace superfermat {

// Two-sided ideal generated by parity-homogeneous elements. Zero generators
// are pruned; an inhomogeneous generator is rejected on construction.
struct HomogeneousIdeal {
    Signature signature;
    std::vector<SuperPoly> generators;

    HomogeneousIdeal(Signature sig, std::vector<SuperPoly> gens);
};

// A homogeneous ideal of Q[x;xi] is the K[x]-submodule of the free module
// with basis xi^I generated by {xi^J * g}. This returns that generating set,
// monic, deduplicated, with zero products dropped.
std::vector<SuperPoly> saturate_odd(const HomogeneousIdeal &ideal);

constexpr long kDefaultGroebnerStepLimit = 100000;

// Reduced module Groebner basis over K[x] with position-over-term order on
// the xi^I positions. Canonical: independent of generator order.
struct GroebnerBasis {
    static constexpr const char *kOrder =
        "position-over-term: odd subsets by (cardinality, bitmask), then grevlex "
        "on the even exponents";

    Signature signature;
    std::vector<SuperPoly> elements; // monic, auto-reduced, sorted by leading term
    const char *order = kOrder;
};

GroebnerBasis groebner(const HomogeneousIdeal &ideal,
                       long step_limit = kDefaultGroebnerStepLimit);

// Remainder of f modulo the basis: no monomial of the result is reducible,
// f - normal_form(f) lies in the ideal, and the map is K-linear and idempotent.
SuperPoly normal_form(const SuperPoly &f, const GroebnerBasis &basis);

bool ideal_member(const SuperPoly &f, const HomogeneousIdeal &ideal);

class QuotientAlgebra {
  public:
    QuotientAlgebra(HomogeneousIdeal ideal, long step_limit = kDefaultGroebnerStepLimit);

    const Signature &signature() const { return ideal_.signature; }
    const HomogeneousIdeal &ideal() const { return ideal_; }
    const GroebnerBasis &basis() const { return basis_; }

    SuperPoly reduce(const SuperPoly &f) const { return normal_form(f, basis_); }
    SuperPoly multiply(const SuperPoly &a, const SuperPoly &b) const;
    SuperPoly add(const SuperPoly &a, const SuperPoly &b) const;

    bool is_zero_algebra() const; // 1 lies in the ideal

    // Monomials outside the leading-term staircase, sorted ascending in the
    // Groebner order; nullopt when the quotient is infinite-dimensional.
    const std::optional<std::vector<SuperMonomial>> &staircase_basis() const;

  private:
    HomogeneousIdeal ideal_;
    GroebnerBasis basis_;
    mutable std::optional<std::optional<std::vector<SuperMonomial>>> staircase_;
};

SuperPoly quotient_mul(const SuperPoly &a, const SuperPoly &b, const QuotientAlgebra &q);
SuperPoly quotient_add(const SuperPoly &a, const SuperPoly &b, const QuotientAlgebra &q);

std::optional<std::vector<SuperMonomial>> staircase_basis(const QuotientAlgebra &q);

// Smallest k with M^k = 0 where M is the ideal generated by the classes of
// all generators (the augmentation ideal when it is nilpotent). nullopt when
// the powers stabilize at a nonzero space (not a Weil algebra).
// Throws NotFiniteDimensional / NoAugmentation (zero algebra).
std::optional<int> augmentation_nilpotency(const QuotientAlgebra &q);

} // namespace superfermat
