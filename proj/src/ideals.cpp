#include "superfermat/ideals.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

namespace superfermat {

namespace {

SuperPoly make_monic(SuperPoly f) {
    if (f.is_zero())
        return f;
    Rational lc = f.leading().second;
    return f.scaled(lc.reciprocal());
}

bool poly_less(const SuperPoly &a, const SuperPoly &b) {
    MonomialOrder less;
    auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
    for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
        if (ia->first != ib->first)
            return less(ia->first, ib->first);
        if (ia->second != ib->second)
            return ia->second < ib->second;
    }
    return ia == a.terms().rend() && ib != b.terms().rend();
}

// Reducer lookup by leading-term position.
struct ReducerIndex {
    std::map<std::uint64_t, std::vector<int>> by_position;

    void add(const std::vector<SuperPoly> &basis, int i) {
        by_position[basis[i].leading().first.odd].push_back(i);
    }
    void rebuild(const std::vector<SuperPoly> &basis) {
        by_position.clear();
        for (int i = 0; i < int(basis.size()); ++i)
            if (!basis[i].is_zero())
                add(basis, i);
    }
    int find(const std::vector<SuperPoly> &basis, const SuperMonomial &m,
             int skip = -1) const {
        auto it = by_position.find(m.odd);
        if (it == by_position.end())
            return -1;
        for (int i : it->second) {
            if (i == skip || basis[i].is_zero())
                continue;
            if (basis[i].leading().first.divides(m))
                return i;
        }
        return -1;
    }
};

SuperPoly reduce_against(SuperPoly f, const std::vector<SuperPoly> &basis,
                         const ReducerIndex &index, int skip = -1) {
    SuperPoly remainder(f.signature());
    while (!f.is_zero()) {
        const auto &[lm, lc] = f.leading();
        int r = index.find(basis, lm, skip);
        if (r < 0) {
            // irreducible leading term: move it to the remainder
            remainder.add_term(lm, lc);
            f.add_term(lm, -lc);
            continue;
        }
        const SuperPoly &g = basis[r];
        const SuperMonomial &glm = g.leading().first;
        SuperMonomial quot(lm.even, 0);
        for (std::size_t k = 0; k < quot.even.size(); ++k)
            quot.even[k] -= glm.even[k];
        // the multiplier is even, so no sign bookkeeping is needed
        f -= g.times_monomial(quot, lc / g.leading().second);
    }
    return remainder;
}

SuperMonomial even_lcm(const SuperMonomial &a, const SuperMonomial &b) {
    SuperMonomial out(a.even, a.odd);
    for (std::size_t i = 0; i < out.even.size(); ++i)
        out.even[i] = std::max(a.even[i], b.even[i]);
    return out;
}

bool even_coprime(const SuperMonomial &a, const SuperMonomial &b) {
    for (std::size_t i = 0; i < a.even.size(); ++i)
        if (a.even[i] > 0 && b.even[i] > 0)
            return false;
    return true;
}

bool single_position(const SuperPoly &f) {
    std::uint64_t pos = f.leading().first.odd;
    for (const auto &[m, c] : f.terms())
        if (m.odd != pos)
            return false;
    return true;
}

struct Pair {
    int i, j;
    SuperMonomial lcm;
};

} // namespace

HomogeneousIdeal::HomogeneousIdeal(Signature sig, std::vector<SuperPoly> gens)
    : signature(sig) {
    for (auto &g : gens) {
        if (g.signature() != sig)
            throw SignatureMismatch("ideal generator over a different signature");
        if (g.is_zero())
            continue;
        if (!g.is_homogeneous())
            throw InhomogeneousRelation("ideal generator is not parity-homogeneous: " +
                                        to_string(g));
        generators.push_back(std::move(g));
    }
}

std::vector<SuperPoly> saturate_odd(const HomogeneousIdeal &ideal) {
    const int n = ideal.signature.odds;
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t j = 0; j < (std::uint64_t(1) << n); ++j)
        subsets.push_back(j);
    std::sort(subsets.begin(), subsets.end(), position_less);

    std::vector<SuperPoly> out;
    for (const SuperPoly &g : ideal.generators) {
        for (std::uint64_t j : subsets) {
            SuperMonomial xiJ(std::vector<int>(ideal.signature.evens, 0), j);
            SuperPoly h = g.times_monomial(xiJ); // right multiplication g * xi^J
            if (h.is_zero())
                continue;
            if (std::find(out.begin(), out.end(), h) == out.end())
                out.push_back(std::move(h));
        }
    }
    return out;
}

GroebnerBasis groebner(const HomogeneousIdeal &ideal, long step_limit) {
    std::vector<SuperPoly> basis = saturate_odd(ideal);
    ReducerIndex index;
    index.rebuild(basis);

    auto make_pair = [&](int i, int j) {
        return Pair{i, j, even_lcm(basis[i].leading().first, basis[j].leading().first)};
    };

    std::deque<Pair> pending;
    std::set<std::pair<int, int>> treated;
    auto queue_pairs_with = [&](int j) {
        for (int i = 0; i < j; ++i) {
            if (basis[i].is_zero())
                continue;
            if (basis[i].leading().first.odd == basis[j].leading().first.odd)
                pending.push_back(make_pair(i, j));
        }
    };
    for (int j = 0; j < int(basis.size()); ++j)
        queue_pairs_with(j);

    long steps = 0;
    while (!pending.empty()) {
        // normal strategy: smallest lcm first
        auto best = pending.begin();
        MonomialOrder less;
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it)
            if (less(it->lcm, best->lcm))
                best = it;
        Pair p = *best;
        pending.erase(best);
        treated.insert({p.i, p.j});

        if (++steps > step_limit)
            throw StepLimitExceeded("Groebner step limit exceeded");

        const SuperPoly &f = basis[p.i];
        const SuperPoly &g = basis[p.j];
        const SuperMonomial &lf = f.leading().first;
        const SuperMonomial &lg = g.leading().first;

        // Coprime criterion, only in the single-position case where the
        // commutative argument applies (it fails for general module elements).
        if (even_coprime(lf, lg) && single_position(f) && single_position(g))
            continue;

        // Chain criterion: a third element whose leading term divides the lcm
        // and whose pairs with both ends are already treated.
        bool skip = false;
        for (int k = 0; k < int(basis.size()) && !skip; ++k) {
            if (k == p.i || k == p.j || basis[k].is_zero())
                continue;
            // module divisibility: same position, even part divides
            if (basis[k].leading().first.odd != p.lcm.odd)
                continue;
            if (!basis[k].leading().first.divides(p.lcm))
                continue;
            auto key = [](int a, int b) { return std::pair(std::min(a, b), std::max(a, b)); };
            if (treated.count(key(p.i, k)) && treated.count(key(p.j, k)))
                skip = true;
        }
        if (skip)
            continue;

        SuperMonomial qf(p.lcm.even, 0), qg(p.lcm.even, 0);
        for (std::size_t k = 0; k < qf.even.size(); ++k) {
            qf.even[k] -= lf.even[k];
            qg.even[k] -= lg.even[k];
        }
        SuperPoly s = f.times_monomial(qf, f.leading().second.reciprocal()) -
                      g.times_monomial(qg, g.leading().second.reciprocal());
        SuperPoly h = reduce_against(std::move(s), basis, index);
        if (h.is_zero())
            continue;
        basis.push_back(make_monic(std::move(h)));
        int j = int(basis.size()) - 1;
        index.add(basis, j);
        queue_pairs_with(j);
    }

    // Minimalize: drop elements whose leading term another one divides.
    for (int i = 0; i < int(basis.size()); ++i) {
        if (basis[i].is_zero())
            continue;
        ReducerIndex probe;
        probe.rebuild(basis);
        if (probe.find(basis, basis[i].leading().first, i) >= 0)
            basis[i] = SuperPoly(ideal.signature);
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const SuperPoly &f) { return f.is_zero(); }),
                basis.end());

    // Tail-reduce each survivor against the others.
    for (int i = 0; i < int(basis.size()); ++i) {
        ReducerIndex probe;
        probe.rebuild(basis);
        basis[i] = make_monic(reduce_against(basis[i], basis, probe, i));
    }

    std::sort(basis.begin(), basis.end(), poly_less);
    return GroebnerBasis{ideal.signature, std::move(basis)};
}

SuperPoly normal_form(const SuperPoly &f, const GroebnerBasis &basis) {
    if (f.signature() != basis.signature)
        throw SignatureMismatch();
    ReducerIndex index;
    index.rebuild(basis.elements);
    return reduce_against(f, basis.elements, index);
}

bool ideal_member(const SuperPoly &f, const HomogeneousIdeal &ideal) {
    if (f.signature() != ideal.signature)
        throw SignatureMismatch();
    return normal_form(f, groebner(ideal)).is_zero();
}

QuotientAlgebra::QuotientAlgebra(HomogeneousIdeal ideal, long step_limit)
    : ideal_(std::move(ideal)), basis_(groebner(ideal_, step_limit)) {}

SuperPoly QuotientAlgebra::multiply(const SuperPoly &a, const SuperPoly &b) const {
    return reduce(a * b);
}

SuperPoly QuotientAlgebra::add(const SuperPoly &a, const SuperPoly &b) const {
    return reduce(a + b);
}

bool QuotientAlgebra::is_zero_algebra() const {
    return reduce(SuperPoly::constant(signature(), Rational(1))).is_zero();
}

const std::optional<std::vector<SuperMonomial>> &QuotientAlgebra::staircase_basis() const {
    if (staircase_)
        return *staircase_;

    const Signature &sig = ideal_.signature;
    const int m = sig.evens;
    // Leading-term exponent sets per position.
    std::map<std::uint64_t, std::vector<std::vector<int>>> corners;
    for (const SuperPoly &g : basis_.elements)
        corners[g.leading().first.odd].push_back(g.leading().first.even);

    std::vector<SuperMonomial> result;
    for (std::uint64_t pos = 0; pos < (std::uint64_t(1) << sig.odds); ++pos) {
        auto it = corners.find(pos);
        const std::vector<std::vector<int>> *B = it == corners.end() ? nullptr : &it->second;
        if (!B || B->empty()) {
            if (m > 0) {
                staircase_.emplace(std::nullopt);
                return *staircase_;
            }
            result.emplace_back(std::vector<int>{}, pos);
            continue;
        }
        // Finite iff every even variable has a pure-power leading term here.
        std::vector<int> bound(m, -1);
        bool eliminated_all = false;
        for (const auto &beta : *B) {
            int support = -1, nonzero = 0;
            for (int k = 0; k < m; ++k)
                if (beta[k] > 0) {
                    ++nonzero;
                    support = k;
                }
            if (nonzero == 0)
                eliminated_all = true; // a constant leading term kills the position
            else if (nonzero == 1 && (bound[support] < 0 || beta[support] < bound[support]))
                bound[support] = beta[support];
        }
        if (eliminated_all)
            continue;
        bool finite = true;
        for (int k = 0; k < m; ++k)
            if (bound[k] < 0)
                finite = false;
        if (!finite) {
            staircase_.emplace(std::nullopt);
            return *staircase_;
        }
        // Enumerate the box and keep monomials no corner divides.
        std::vector<int> a(m, 0);
        for (;;) {
            bool divisible = false;
            for (const auto &beta : *B) {
                bool div = true;
                for (int k = 0; k < m && div; ++k)
                    if (beta[k] > a[k])
                        div = false;
                if (div) {
                    divisible = true;
                    break;
                }
            }
            if (!divisible)
                result.emplace_back(a, pos);
            int k = 0;
            while (k < m) {
                if (++a[k] < bound[k])
                    break;
                a[k] = 0;
                ++k;
            }
            if (k == m)
                break;
        }
    }
    MonomialOrder less;
    std::sort(result.begin(), result.end(),
              [&](const SuperMonomial &a, const SuperMonomial &b) { return less(a, b); });
    staircase_.emplace(std::move(result));
    return *staircase_;
}

SuperPoly quotient_mul(const SuperPoly &a, const SuperPoly &b, const QuotientAlgebra &q) {
    return q.multiply(a, b);
}

SuperPoly quotient_add(const SuperPoly &a, const SuperPoly &b, const QuotientAlgebra &q) {
    return q.add(a, b);
}

std::optional<std::vector<SuperMonomial>> staircase_basis(const QuotientAlgebra &q) {
    return q.staircase_basis();
}

namespace {

// Row echelon over the staircase coordinates, pivoting on the largest
// monomial (Groebner order). Rows are normal forms, stored sparsely.
class CoordinateSpan {
  public:
    explicit CoordinateSpan(Signature sig) : sig_(sig) {}

    bool insert(SuperPoly v) {
        while (!v.is_zero()) {
            auto it = pivots_.find(v.leading().first);
            if (it == pivots_.end()) {
                Rational lc = v.leading().second;
                pivots_.emplace(v.leading().first, v.scaled(lc.reciprocal()));
                return true;
            }
            v -= it->second.scaled(v.leading().second);
        }
        return false;
    }

    std::size_t dimension() const { return pivots_.size(); }
    std::vector<SuperPoly> rows() const {
        std::vector<SuperPoly> out;
        for (const auto &[m, r] : pivots_)
            out.push_back(r);
        return out;
    }

  private:
    Signature sig_;
    std::map<SuperMonomial, SuperPoly, MonomialOrder> pivots_;
};

} // namespace

std::optional<int> augmentation_nilpotency(const QuotientAlgebra &q) {
    const auto &stairs = q.staircase_basis();
    if (!stairs)
        throw NotFiniteDimensional();
    if (q.is_zero_algebra())
        throw NoAugmentation();

    const Signature &sig = q.signature();
    std::vector<SuperPoly> generator_classes;
    for (int i = 1; i <= sig.evens; ++i)
        generator_classes.push_back(q.reduce(SuperPoly::generator(sig, VariableRef::even(i))));
    for (int i = 1; i <= sig.odds; ++i)
        generator_classes.push_back(q.reduce(SuperPoly::generator(sig, VariableRef::odd(i))));

    // M = ideal generated by the generator classes, as a subspace of the
    // staircase span.
    CoordinateSpan m1(sig);
    for (const SuperMonomial &b : *stairs) {
        SuperPoly bp = SuperPoly::monomial(sig, b);
        for (const SuperPoly &g : generator_classes)
            m1.insert(q.multiply(bp, g));
    }
    if (m1.dimension() == 0)
        return 1; // M already zero: the algebra is the ground field

    std::vector<SuperPoly> m1_rows = m1.rows();
    std::vector<SuperPoly> current = m1_rows;
    std::size_t dim = m1.dimension();
    for (int k = 2;; ++k) {
        CoordinateSpan next(sig);
        for (const SuperPoly &v : current)
            for (const SuperPoly &w : m1_rows)
                next.insert(q.multiply(v, w));
        if (next.dimension() == 0)
            return k;
        if (next.dimension() >= dim)
            return std::nullopt; // stabilized at a nonzero space
        dim = next.dimension();
        current = next.rows();
    }
}

} // namespace superfermat
