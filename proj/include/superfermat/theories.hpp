#pragma once

#include <vector>

#include "superfermat/ideals.hpp"
#include "superfermat/superpoly.hpp"

namespace superfermat {

// Which Fermat theory the algebra lives over. Poly is the exact polynomial
// theory handled by this module; Smooth is carried at jet level by the weil
// module and is only legal where an operation says so.
enum class TheoryTag { Poly, Smooth };

struct FreeAlgebra {
    TheoryTag theory = TheoryTag::Poly;
    Signature signature;
};

// Algebra map SE(p|q) -> SE(m|n) given by substitution data: one even image
// per even generator, one odd image per odd generator. Equivalently a theory
// morphism (m|n) -> (p|q).
class SuperMorphism {
  public:
    SuperMorphism(Signature source, Signature target, std::vector<SuperPoly> even_images,
                  std::vector<SuperPoly> odd_images);

    const Signature &source() const { return source_; }
    const Signature &target() const { return target_; }
    const std::vector<SuperPoly> &even_images() const { return even_images_; }
    const std::vector<SuperPoly> &odd_images() const { return odd_images_; }

    SuperPoly apply(const SuperPoly &f) const;

    bool operator==(const SuperMorphism &) const = default;

  private:
    Signature source_, target_;
    std::vector<SuperPoly> even_images_, odd_images_;
};

SuperMorphism identity_morphism(Signature sig);

// g after f; the source of g must equal the target of f.
SuperMorphism compose(const SuperMorphism &f, const SuperMorphism &g);

struct Coproduct {
    FreeAlgebra algebra;
    SuperMorphism left;  // inclusion of the first factor's generators
    SuperMorphism right; // inclusion of the second factor's generators
};

Coproduct coproduct_free(const FreeAlgebra &a, const FreeAlgebra &b);

// The universal map out of the coproduct determined by u and v.
SuperMorphism cotuple(const Coproduct &cp, const SuperMorphism &u, const SuperMorphism &v);

// Finitely presented algebra SE(m|n)/I.
struct FinitePresentation {
    TheoryTag theory = TheoryTag::Poly;
    Signature signature;
    std::vector<SuperPoly> relations;

    FinitePresentation(Signature sig, std::vector<SuperPoly> rels,
                       TheoryTag tag = TheoryTag::Poly);

    HomogeneousIdeal ideal() const { return HomogeneousIdeal(signature, relations); }
};

// A x B presented with two orthogonal idempotents e_a, e_b appended after the
// factor generator blocks: generators [a-evens, b-evens, e_a, e_b | a-odds,
// b-odds], relations e_a+e_b-1, e_a*e_b, cross annihilation, and each
// factor's relations multiplied by its idempotent.
FinitePresentation product_algebra(const FinitePresentation &a, const FinitePresentation &b);

// Presentation of the terminal (zero) algebra: the relation 1 = 0.
FinitePresentation terminal_algebra();

// An even-only presentation regarded as a superalgebra with zero odd part.
FinitePresentation iota_lower_shriek(const FinitePresentation &a);

// A -> A_rd = A/(A_1): drop the odd generators and set them to 0 in every
// relation.
FinitePresentation reduce_rd(const FinitePresentation &a);

// Morphism reduction matching reduce_rd on presentations.
SuperMorphism reduce_rd(const SuperMorphism &f);

// Verifies reduce_rd(A x B) = reduce_rd(A) x reduce_rd(B) on the matched
// staircase bases: equal bases and equal structure constants.
// Throws NotFiniteDimensional when any of the three quotients is infinite.
bool check_product_preservation(const FinitePresentation &a, const FinitePresentation &b);

} // namespace superfermat
