#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superfermat/rational.hpp"

namespace superfermat {

// Grassmann parity, the Z_2 grading.
enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return Parity((int(a) + int(b)) % 2);
}

enum class ParityClass : int { Even = 0, Odd = 1, Mixed = 2 };

// Generator counts: m even generators x1..xm, n odd generators xi1..xin.
struct Signature {
    int evens = 0;
    int odds = 0;

    Signature() = default;
    Signature(int m, int n);
    bool operator==(const Signature &) const = default;
    auto operator<=>(const Signature &) const = default;
};

// Which generator a calculus operation acts on.
struct VariableRef {
    Parity kind = Parity::Even;
    int index = 1; // 1-based within its kind

    static VariableRef even(int i) { return {Parity::Even, i}; }
    static VariableRef odd(int i) { return {Parity::Odd, i}; }
    bool operator==(const VariableRef &) const = default;
};

// One monomial x^a * xi^I. Odd factors are kept as a bitmask (bit i-1 set
// means xi^i is present), which makes the strictly-ascending canonical order
// automatic; construction sites apply the Koszul sign of any reordering.
struct SuperMonomial {
    std::vector<int> even;  // exponents, length = signature.evens
    std::uint64_t odd = 0;  // subset of {1..n} as bits

    SuperMonomial() = default;
    SuperMonomial(std::vector<int> e, std::uint64_t o) : even(std::move(e)), odd(o) {}

    bool is_unit() const;
    int even_degree() const;
    int odd_count() const;
    int total_degree() const { return even_degree() + odd_count(); }
    Parity parity() const { return Parity(odd_count() % 2); }

    bool divides(const SuperMonomial &other) const; // componentwise, odd subset
    bool operator==(const SuperMonomial &) const = default;
};

// Odd subsets sorted by (cardinality, bitmask).
inline bool position_less(std::uint64_t a, std::uint64_t b) {
    int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
    if (ca != cb)
        return ca < cb;
    return a < b;
}

// Graded reverse lexicographic on the even exponents. Returns <0, 0, >0.
int grevlex_compare(const std::vector<int> &a, const std::vector<int> &b);

// The Groebner/storage order: position (odd subset) over term, grevlex on the
// even part within a position.
struct MonomialOrder {
    bool operator()(const SuperMonomial &a, const SuperMonomial &b) const {
        if (a.odd != b.odd)
            return position_less(a.odd, b.odd);
        return grevlex_compare(a.even, b.even) < 0;
    }
};

// Print order: even part first (grevlex descending), odd subset ascending.
bool print_before(const SuperMonomial &a, const SuperMonomial &b);

// Product of monomials with the Koszul sign. sign is +1/-1, or 0 when the
// odd subsets intersect (xi^i * xi^i = 0).
std::pair<int, SuperMonomial> mono_mul(const SuperMonomial &a, const SuperMonomial &b);

class SuperPoly;
using TermMap = std::map<SuperMonomial, Rational, MonomialOrder>;

// Element of the free supercommutative superalgebra Q[x1..xm; xi1..xin].
// Canonical form: sorted term map, no zero coefficients, odd factors
// normalized to ascending index order.
class SuperPoly {
  public:
    SuperPoly() = default;
    explicit SuperPoly(Signature sig) : sig_(sig) {}

    static SuperPoly zero(Signature sig) { return SuperPoly(sig); }
    static SuperPoly constant(Signature sig, Rational c);
    static SuperPoly generator(Signature sig, VariableRef v);
    static SuperPoly monomial(Signature sig, SuperMonomial m, Rational c = Rational(1));

    const Signature &signature() const { return sig_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    int total_degree() const; // 0 for the zero polynomial

    // Adds c * m, pruning a cancelled coefficient.
    void add_term(const SuperMonomial &m, const Rational &c);

    Rational coefficient(const SuperMonomial &m) const;

    ParityClass parity_class() const;
    bool is_even() const;  // true for 0
    bool is_odd() const;   // true for 0
    bool is_homogeneous() const { return parity_class() != ParityClass::Mixed; }

    SuperPoly even_part() const;
    SuperPoly odd_part() const;

    SuperPoly operator-() const;
    SuperPoly &operator+=(const SuperPoly &o);
    SuperPoly &operator-=(const SuperPoly &o);
    friend SuperPoly operator+(SuperPoly a, const SuperPoly &b) { return a += b; }
    friend SuperPoly operator-(SuperPoly a, const SuperPoly &b) { return a -= b; }
    friend SuperPoly operator*(const SuperPoly &a, const SuperPoly &b);
    SuperPoly &operator*=(const SuperPoly &o) { return *this = *this * o; }

    SuperPoly scaled(const Rational &c) const;
    SuperPoly times_monomial(const SuperMonomial &m, const Rational &c = Rational(1)) const;
    SuperPoly pow(int k) const; // k >= 0

    bool operator==(const SuperPoly &) const = default;

    // Leading term in the Groebner order.
    const std::pair<const SuperMonomial, Rational> &leading() const;

  private:
    Signature sig_;
    TermMap terms_;
    void check_signature(const SuperPoly &o) const;
};

SuperPoly add(const SuperPoly &f, const SuperPoly &g);
SuperPoly mul(const SuperPoly &f, const SuperPoly &g);

// f(args): the substitution homomorphism. even_args must be parity-even,
// odd_args parity-odd (zero counts as both); all over a common signature.
// The first form infers the target signature from the arguments (and needs
// at least one); the second takes it explicitly.
SuperPoly substitute(const SuperPoly &f, const std::vector<SuperPoly> &even_args,
                     const std::vector<SuperPoly> &odd_args);
SuperPoly substitute(const SuperPoly &f, const std::vector<SuperPoly> &even_args,
                     const std::vector<SuperPoly> &odd_args, Signature target);

// The unique splitting f = sum_I f^I xi^I with every f^I purely even.
struct OddDecomposition {
    Signature signature;
    std::map<std::uint64_t, SuperPoly> components; // oddSet -> even-only poly

    SuperPoly reassemble() const;
};

OddDecomposition decompose_odd(const SuperPoly &f);

ParityClass parity_of(const SuperPoly &f);

// Text rendering. Generator names default to x<k> / xi<k>; callers may
// override (the CLI renders the difference-quotient fresh variable as `y`).
struct NameScheme {
    std::vector<std::string> even_names; // empty entry -> default name
    std::vector<std::string> odd_names;

    std::string even_name(int i) const; // 1-based
    std::string odd_name(int i) const;
};

std::string to_string(const SuperMonomial &m, const NameScheme &names = {});
std::string to_string(const SuperPoly &f, const NameScheme &names = {});

} // namespace superfermat
