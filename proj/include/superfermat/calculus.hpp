#pragma once

#include "superfermat/superpoly.hpp"

namespace superfermat {

// Even difference quotient. The result lives over the signature extended by
// one fresh even variable, inserted immediately after x (indices past x shift
// up by one), and satisfies f(x,..) - f(y,..) = (x - y) * result exactly.
SuperPoly difference_quotient(const SuperPoly &f, VariableRef x);

// Embeds f over (m|n) into (m+1|n) with a fresh even slot after position
// `after` (1-based; the new variable does not occur in the image).
SuperPoly extend_even_after(const SuperPoly &f, int after);

// Hadamard partial: the diagonal y -> x of the difference quotient,
// equivalently the formal coefficientwise derivative.
SuperPoly partial_even(const SuperPoly &f, VariableRef x);

// The unique split f = h + eta * g with h, g free of eta. g carries the left
// derivative sign: a factor eta in slot k contributes (-1)^(k-1).
struct OddSplit {
    SuperPoly constant_part; // h = f at eta = 0
    SuperPoly derivative;    // g = left partial derivative
};

OddSplit odd_split(const SuperPoly &f, VariableRef eta);

SuperPoly partial_odd(const SuperPoly &f, VariableRef eta);

// Reconstructs (x - y) * Delta f / Delta x + f(y) and compares with f(x).
bool fermat_identity_holds(const SuperPoly &f, VariableRef x);

// Raw iterated partials (f, df/dx, ..., d^k f/dx^k); consumers divide by
// factorials where needed.
std::vector<SuperPoly> taylor_coefficients(const SuperPoly &f, VariableRef x, int order);

} // namespace superfermat
