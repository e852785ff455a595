#include "superfermat/calculus.hpp"

#include <bit>

namespace superfermat {

namespace {

void check_even_var(const SuperPoly &f, VariableRef x) {
    if (x.kind != Parity::Even)
        throw Error("expected an even variable");
    if (x.index < 1 || x.index > f.signature().evens)
        throw Error("even variable index out of range");
}

void check_odd_var(const SuperPoly &f, VariableRef eta) {
    if (eta.kind != Parity::Odd)
        throw Error("expected an odd variable");
    if (eta.index < 1 || eta.index > f.signature().odds)
        throw Error("odd variable index out of range");
}

std::vector<int> insert_slot(const std::vector<int> &e, int after, int value) {
    std::vector<int> out;
    out.reserve(e.size() + 1);
    out.insert(out.end(), e.begin(), e.begin() + after);
    out.push_back(value);
    out.insert(out.end(), e.begin() + after, e.end());
    return out;
}

} // namespace

SuperPoly extend_even_after(const SuperPoly &f, int after) {
    Signature sig(f.signature().evens + 1, f.signature().odds);
    SuperPoly out(sig);
    for (const auto &[m, c] : f.terms())
        out.add_term(SuperMonomial(insert_slot(m.even, after, 0), m.odd), c);
    return out;
}

SuperPoly difference_quotient(const SuperPoly &f, VariableRef x) {
    check_even_var(f, x);
    const int i = x.index - 1;
    Signature sig(f.signature().evens + 1, f.signature().odds);
    SuperPoly out(sig);
    for (const auto &[m, c] : f.terms()) {
        int k = m.even[i];
        if (k == 0)
            continue; // constant in x, the difference vanishes
        // (x^k - y^k) / (x - y) = sum_{u+v=k-1} x^u y^v on this term
        for (int u = 0; u < k; ++u) {
            std::vector<int> e = insert_slot(m.even, i + 1, k - 1 - u);
            e[i] = u;
            out.add_term(SuperMonomial(std::move(e), m.odd), c);
        }
    }
    return out;
}

SuperPoly partial_even(const SuperPoly &f, VariableRef x) {
    check_even_var(f, x);
    const int i = x.index - 1;
    SuperPoly out(f.signature());
    for (const auto &[m, c] : f.terms()) {
        int k = m.even[i];
        if (k == 0)
            continue;
        SuperMonomial d = m;
        d.even[i] = k - 1;
        out.add_term(d, c * Rational(k));
    }
    return out;
}

OddSplit odd_split(const SuperPoly &f, VariableRef eta) {
    check_odd_var(f, eta);
    const std::uint64_t bit = std::uint64_t(1) << (eta.index - 1);
    OddSplit split{SuperPoly(f.signature()), SuperPoly(f.signature())};
    for (const auto &[m, c] : f.terms()) {
        if (!(m.odd & bit)) {
            split.constant_part.add_term(m, c);
            continue;
        }
        // Move eta to the front: one transposition per odd factor before it.
        int before = std::popcount(m.odd & (bit - 1));
        SuperMonomial g = m;
        g.odd &= ~bit;
        split.derivative.add_term(g, (before & 1) ? -c : c);
    }
    return split;
}

SuperPoly partial_odd(const SuperPoly &f, VariableRef eta) {
    return odd_split(f, eta).derivative;
}

bool fermat_identity_holds(const SuperPoly &f, VariableRef x) {
    check_even_var(f, x);
    SuperPoly q = difference_quotient(f, x);
    Signature ext = q.signature();

    SuperPoly fx = extend_even_after(f, x.index); // f with the fresh slot unused
    // f(y): route x through the fresh slot instead
    std::vector<SuperPoly> evens;
    for (int i = 1; i <= ext.evens; ++i)
        evens.push_back(SuperPoly::generator(ext, VariableRef::even(i)));
    evens[x.index - 1] = SuperPoly::generator(ext, VariableRef::even(x.index + 1));
    std::vector<SuperPoly> odds;
    for (int i = 1; i <= ext.odds; ++i)
        odds.push_back(SuperPoly::generator(ext, VariableRef::odd(i)));
    SuperPoly fy = substitute(fx, evens, odds);

    SuperPoly xme = SuperPoly::generator(ext, VariableRef::even(x.index)) -
                    SuperPoly::generator(ext, VariableRef::even(x.index + 1));
    return xme * q == fx - fy;
}

std::vector<SuperPoly> taylor_coefficients(const SuperPoly &f, VariableRef x, int order) {
    if (order < 0)
        throw Error("negative Taylor order");
    check_even_var(f, x);
    std::vector<SuperPoly> out;
    out.reserve(order + 1);
    out.push_back(f);
    for (int k = 1; k <= order; ++k)
        out.push_back(partial_even(out.back(), x));
    return out;
}

} // namespace superfermat
