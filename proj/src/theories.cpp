#include "superfermat/theories.hpp"

namespace superfermat {

namespace {

std::vector<SuperPoly> generator_evens(Signature sig) {
    std::vector<SuperPoly> v;
    for (int i = 1; i <= sig.evens; ++i)
        v.push_back(SuperPoly::generator(sig, VariableRef::even(i)));
    return v;
}

std::vector<SuperPoly> generator_odds(Signature sig) {
    std::vector<SuperPoly> v;
    for (int i = 1; i <= sig.odds; ++i)
        v.push_back(SuperPoly::generator(sig, VariableRef::odd(i)));
    return v;
}

// Relabel f over `src` into `tgt`, offsetting generator indices.
SuperPoly embed(const SuperPoly &f, Signature tgt, int even_offset, int odd_offset) {
    std::vector<SuperPoly> evens, odds;
    for (int i = 1; i <= f.signature().evens; ++i)
        evens.push_back(SuperPoly::generator(tgt, VariableRef::even(even_offset + i)));
    for (int i = 1; i <= f.signature().odds; ++i)
        odds.push_back(SuperPoly::generator(tgt, VariableRef::odd(odd_offset + i)));
    return substitute(f, evens, odds, tgt);
}

} // namespace

SuperMorphism::SuperMorphism(Signature source, Signature target,
                             std::vector<SuperPoly> even_images,
                             std::vector<SuperPoly> odd_images)
    : source_(source), target_(target), even_images_(std::move(even_images)),
      odd_images_(std::move(odd_images)) {
    if (int(even_images_.size()) != source_.evens ||
        int(odd_images_.size()) != source_.odds)
        throw SignatureMismatch("image count does not match the source signature");
    for (const SuperPoly &g : even_images_) {
        if (g.signature() != target_)
            throw SignatureMismatch("image over a different signature");
        if (!g.is_even())
            throw ParityMismatch("even generator mapped to a non-even element");
    }
    for (const SuperPoly &g : odd_images_) {
        if (g.signature() != target_)
            throw SignatureMismatch("image over a different signature");
        if (!g.is_odd())
            throw ParityMismatch("odd generator mapped to a non-odd element");
    }
}

SuperPoly SuperMorphism::apply(const SuperPoly &f) const {
    if (f.signature() != source_)
        throw SignatureMismatch();
    return substitute(f, even_images_, odd_images_);
}

SuperMorphism identity_morphism(Signature sig) {
    return SuperMorphism(sig, sig, generator_evens(sig), generator_odds(sig));
}

SuperMorphism compose(const SuperMorphism &f, const SuperMorphism &g) {
    if (g.source() != f.target())
        throw SignatureMismatch("morphisms are not composable");
    std::vector<SuperPoly> evens, odds;
    for (const SuperPoly &img : f.even_images())
        evens.push_back(g.apply(img));
    for (const SuperPoly &img : f.odd_images())
        odds.push_back(g.apply(img));
    return SuperMorphism(f.source(), g.target(), std::move(evens), std::move(odds));
}

Coproduct coproduct_free(const FreeAlgebra &a, const FreeAlgebra &b) {
    if (a.theory != b.theory)
        throw Error("coproduct factors over different theories");
    Signature sig(a.signature.evens + b.signature.evens,
                  a.signature.odds + b.signature.odds);
    std::vector<SuperPoly> le, lo, re, ro;
    for (int i = 1; i <= a.signature.evens; ++i)
        le.push_back(SuperPoly::generator(sig, VariableRef::even(i)));
    for (int i = 1; i <= a.signature.odds; ++i)
        lo.push_back(SuperPoly::generator(sig, VariableRef::odd(i)));
    for (int i = 1; i <= b.signature.evens; ++i)
        re.push_back(SuperPoly::generator(sig, VariableRef::even(a.signature.evens + i)));
    for (int i = 1; i <= b.signature.odds; ++i)
        ro.push_back(SuperPoly::generator(sig, VariableRef::odd(a.signature.odds + i)));
    return Coproduct{FreeAlgebra{a.theory, sig},
                     SuperMorphism(a.signature, sig, std::move(le), std::move(lo)),
                     SuperMorphism(b.signature, sig, std::move(re), std::move(ro))};
}

SuperMorphism cotuple(const Coproduct &cp, const SuperMorphism &u, const SuperMorphism &v) {
    if (u.source() != cp.left.source() || v.source() != cp.right.source())
        throw SignatureMismatch("cotuple factors do not match the coproduct");
    if (u.target() != v.target())
        throw SignatureMismatch("cotuple factors have different targets");
    std::vector<SuperPoly> evens = u.even_images();
    evens.insert(evens.end(), v.even_images().begin(), v.even_images().end());
    std::vector<SuperPoly> odds = u.odd_images();
    odds.insert(odds.end(), v.odd_images().begin(), v.odd_images().end());
    return SuperMorphism(cp.algebra.signature, u.target(), std::move(evens), std::move(odds));
}

FinitePresentation::FinitePresentation(Signature sig, std::vector<SuperPoly> rels,
                                       TheoryTag tag)
    : theory(tag), signature(sig) {
    for (auto &r : rels) {
        if (r.signature() != sig)
            throw SignatureMismatch("relation over a different signature");
        if (r.is_zero())
            continue;
        if (!r.is_homogeneous())
            throw InhomogeneousRelation("relation is not parity-homogeneous: " +
                                        to_string(r));
        relations.push_back(std::move(r));
    }
}

FinitePresentation product_algebra(const FinitePresentation &a,
                                   const FinitePresentation &b) {
    if (a.theory != b.theory)
        throw Error("product factors over different theories");
    const Signature &sa = a.signature, &sb = b.signature;
    Signature sig(sa.evens + sb.evens + 2, sa.odds + sb.odds);
    SuperPoly ea = SuperPoly::generator(sig, VariableRef::even(sa.evens + sb.evens + 1));
    SuperPoly eb = SuperPoly::generator(sig, VariableRef::even(sa.evens + sb.evens + 2));
    SuperPoly one = SuperPoly::constant(sig, Rational(1));

    std::vector<SuperPoly> rels;
    rels.push_back(ea + eb - one);
    rels.push_back(ea * eb);
    // each idempotent annihilates the other factor's generators
    for (int i = 1; i <= sa.evens; ++i)
        rels.push_back(eb * SuperPoly::generator(sig, VariableRef::even(i)));
    for (int i = 1; i <= sa.odds; ++i)
        rels.push_back(eb * SuperPoly::generator(sig, VariableRef::odd(i)));
    for (int i = 1; i <= sb.evens; ++i)
        rels.push_back(ea * SuperPoly::generator(sig, VariableRef::even(sa.evens + i)));
    for (int i = 1; i <= sb.odds; ++i)
        rels.push_back(ea * SuperPoly::generator(sig, VariableRef::odd(sa.odds + i)));
    // factor relations, localized to their own block
    for (const SuperPoly &r : a.relations)
        rels.push_back(ea * embed(r, sig, 0, 0));
    for (const SuperPoly &r : b.relations)
        rels.push_back(eb * embed(r, sig, sa.evens, sa.odds));
    return FinitePresentation(sig, std::move(rels), a.theory);
}

FinitePresentation terminal_algebra() {
    Signature sig(0, 0);
    return FinitePresentation(sig, {SuperPoly::constant(sig, Rational(1))});
}

FinitePresentation iota_lower_shriek(const FinitePresentation &a) {
    if (a.signature.odds != 0)
        throw OddGeneratorPresent();
    return a;
}

FinitePresentation reduce_rd(const FinitePresentation &a) {
    Signature rd(a.signature.evens, 0);
    std::vector<SuperPoly> evens, odds;
    for (int i = 1; i <= a.signature.evens; ++i)
        evens.push_back(SuperPoly::generator(rd, VariableRef::even(i)));
    for (int i = 0; i < a.signature.odds; ++i)
        odds.push_back(SuperPoly::zero(rd));
    std::vector<SuperPoly> rels;
    for (const SuperPoly &r : a.relations)
        rels.push_back(substitute(r, evens, odds));
    return FinitePresentation(rd, std::move(rels), a.theory);
}

SuperMorphism reduce_rd(const SuperMorphism &f) {
    Signature src(f.source().evens, 0), tgt(f.target().evens, 0);
    std::vector<SuperPoly> tgt_evens, tgt_odds;
    for (int i = 1; i <= f.target().evens; ++i)
        tgt_evens.push_back(SuperPoly::generator(tgt, VariableRef::even(i)));
    for (int i = 0; i < f.target().odds; ++i)
        tgt_odds.push_back(SuperPoly::zero(tgt));
    std::vector<SuperPoly> images;
    for (const SuperPoly &img : f.even_images())
        images.push_back(substitute(img, tgt_evens, tgt_odds));
    return SuperMorphism(src, tgt, std::move(images), {});
}

bool check_product_preservation(const FinitePresentation &a,
                                const FinitePresentation &b) {
    auto require_finite = [](const FinitePresentation &p) {
        QuotientAlgebra q(p.ideal());
        if (!q.staircase_basis())
            throw NotFiniteDimensional();
        return q;
    };
    require_finite(a);
    require_finite(b);

    FinitePresentation prod = product_algebra(a, b);
    QuotientAlgebra lhs(reduce_rd(prod).ideal());
    QuotientAlgebra rhs(product_algebra(reduce_rd(a), reduce_rd(b)).ideal());
    if (lhs.signature() != rhs.signature())
        return false;
    const auto &sl = lhs.staircase_basis();
    const auto &sr = rhs.staircase_basis();
    if (!sl || !sr)
        throw NotFiniteDimensional();
    if (*sl != *sr)
        return false;
    // Same basis on both sides: compare the multiplication tables.
    const Signature &sig = lhs.signature();
    for (std::size_t i = 0; i < sl->size(); ++i) {
        for (std::size_t j = i; j < sl->size(); ++j) {
            SuperPoly p = SuperPoly::monomial(sig, (*sl)[i]) *
                          SuperPoly::monomial(sig, (*sl)[j]);
            if (lhs.reduce(p) != rhs.reduce(p))
                return false;
        }
    }
    return true;
}

} // namespace superfermat
