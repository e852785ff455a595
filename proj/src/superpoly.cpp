#include "superfermat/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace superfermat {

namespace {
constexpr int kMaxOddGenerators = 62;
} // namespace

Signature::Signature(int m, int n) : evens(m), odds(n) {
    if (m < 0 || n < 0)
        throw Error("signature counts must be non-negative");
    if (n > kMaxOddGenerators)
        throw Error("at most 62 odd generators are supported");
}

bool SuperMonomial::is_unit() const {
    if (odd != 0)
        return false;
    return std::all_of(even.begin(), even.end(), [](int e) { return e == 0; });
}

int SuperMonomial::even_degree() const {
    int d = 0;
    for (int e : even)
        d += e;
    return d;
}

int SuperMonomial::odd_count() const { return std::popcount(odd); }

bool SuperMonomial::divides(const SuperMonomial &other) const {
    if ((odd & other.odd) != odd)
        return false;
    for (std::size_t i = 0; i < even.size(); ++i)
        if (even[i] > other.even[i])
            return false;
    return true;
}

int grevlex_compare(const std::vector<int> &a, const std::vector<int> &b) {
    int da = 0, db = 0;
    for (int e : a)
        da += e;
    for (int e : b)
        db += e;
    if (da != db)
        return da < db ? -1 : 1;
    // Equal total degree: the monomial whose rightmost differing exponent is
    // smaller is the larger one.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

bool print_before(const SuperMonomial &a, const SuperMonomial &b) {
    int c = grevlex_compare(a.even, b.even);
    if (c != 0)
        return c > 0;
    return a.odd < b.odd;
}

std::pair<int, SuperMonomial> mono_mul(const SuperMonomial &a, const SuperMonomial &b) {
    if (a.even.size() != b.even.size())
        throw SignatureMismatch();
    if (a.odd & b.odd)
        return {0, SuperMonomial{}};
    SuperMonomial out;
    out.even.resize(a.even.size());
    for (std::size_t i = 0; i < a.even.size(); ++i)
        out.even[i] = a.even[i] + b.even[i];
    out.odd = a.odd | b.odd;
    // Koszul sign: inversions between a's and b's odd factors when the
    // concatenation is sorted.
    int inversions = 0;
    std::uint64_t rest = b.odd;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(a.odd >> (j + 1));
    }
    return {(inversions & 1) ? -1 : 1, out};
}

SuperPoly SuperPoly::constant(Signature sig, Rational c) {
    SuperPoly f(sig);
    if (!c.is_zero())
        f.terms_.emplace(SuperMonomial(std::vector<int>(sig.evens, 0), 0), std::move(c));
    return f;
}

SuperPoly SuperPoly::generator(Signature sig, VariableRef v) {
    SuperMonomial m(std::vector<int>(sig.evens, 0), 0);
    if (v.kind == Parity::Even) {
        if (v.index < 1 || v.index > sig.evens)
            throw Error("even generator index out of range");
        m.even[v.index - 1] = 1;
    } else {
        if (v.index < 1 || v.index > sig.odds)
            throw Error("odd generator index out of range");
        m.odd = std::uint64_t(1) << (v.index - 1);
    }
    return monomial(sig, std::move(m));
}

SuperPoly SuperPoly::monomial(Signature sig, SuperMonomial m, Rational c) {
    if (int(m.even.size()) != sig.evens)
        throw SignatureMismatch();
    if (sig.odds < 64 && (m.odd >> sig.odds) != 0)
        throw SignatureMismatch("odd factor outside signature");
    SuperPoly f(sig);
    if (!c.is_zero())
        f.terms_.emplace(std::move(m), std::move(c));
    return f;
}

int SuperPoly::total_degree() const {
    int d = 0;
    for (const auto &[m, c] : terms_)
        d = std::max(d, m.total_degree());
    return d;
}

void SuperPoly::add_term(const SuperMonomial &m, const Rational &c) {
    if (int(m.even.size()) != sig_.evens ||
        (sig_.odds < 64 && (m.odd >> sig_.odds) != 0))
        throw SignatureMismatch("monomial does not fit the signature");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational SuperPoly::coefficient(const SuperMonomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

ParityClass SuperPoly::parity_class() const {
    if (terms_.empty())
        return ParityClass::Even; // convention: 0 is even
    bool has_even = false, has_odd = false;
    for (const auto &[m, c] : terms_)
        (m.parity() == Parity::Even ? has_even : has_odd) = true;
    if (has_even && has_odd)
        return ParityClass::Mixed;
    return has_odd ? ParityClass::Odd : ParityClass::Even;
}

bool SuperPoly::is_even() const {
    for (const auto &[m, c] : terms_)
        if (m.parity() != Parity::Even)
            return false;
    return true;
}

bool SuperPoly::is_odd() const {
    for (const auto &[m, c] : terms_)
        if (m.parity() != Parity::Odd)
            return false;
    return true;
}

SuperPoly SuperPoly::even_part() const {
    SuperPoly out(sig_);
    for (const auto &[m, c] : terms_)
        if (m.parity() == Parity::Even)
            out.terms_.emplace(m, c);
    return out;
}

SuperPoly SuperPoly::odd_part() const {
    SuperPoly out(sig_);
    for (const auto &[m, c] : terms_)
        if (m.parity() == Parity::Odd)
            out.terms_.emplace(m, c);
    return out;
}

void SuperPoly::check_signature(const SuperPoly &o) const {
    if (sig_ != o.sig_)
        throw SignatureMismatch();
}

SuperPoly SuperPoly::operator-() const {
    SuperPoly out(sig_);
    for (const auto &[m, c] : terms_)
        out.terms_.emplace(m, -c);
    return out;
}

SuperPoly &SuperPoly::operator+=(const SuperPoly &o) {
    check_signature(o);
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SuperPoly &SuperPoly::operator-=(const SuperPoly &o) {
    check_signature(o);
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SuperPoly operator*(const SuperPoly &a, const SuperPoly &b) {
    a.check_signature(b);
    SuperPoly out(a.sig_);
    for (const auto &[ma, ca] : a.terms_) {
        for (const auto &[mb, cb] : b.terms_) {
            auto [sign, m] = mono_mul(ma, mb);
            if (sign == 0)
                continue;
            Rational c = ca * cb;
            if (sign < 0)
                c = -c;
            out.add_term(m, c);
        }
    }
    return out;
}

SuperPoly SuperPoly::scaled(const Rational &c) const {
    SuperPoly out(sig_);
    if (c.is_zero())
        return out;
    for (const auto &[m, coef] : terms_)
        out.terms_.emplace(m, coef * c);
    return out;
}

SuperPoly SuperPoly::times_monomial(const SuperMonomial &m, const Rational &c) const {
    SuperPoly out(sig_);
    if (c.is_zero())
        return out;
    for (const auto &[mono, coef] : terms_) {
        auto [sign, prod] = mono_mul(mono, m);
        if (sign == 0)
            continue;
        Rational v = coef * c;
        if (sign < 0)
            v = -v;
        out.add_term(prod, v);
    }
    return out;
}

SuperPoly SuperPoly::pow(int k) const {
    if (k < 0)
        throw Error("negative polynomial power");
    SuperPoly acc = constant(sig_, Rational(1));
    for (int i = 0; i < k; ++i)
        acc = acc * *this;
    return acc;
}

const std::pair<const SuperMonomial, Rational> &SuperPoly::leading() const {
    if (terms_.empty())
        throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
}

SuperPoly add(const SuperPoly &f, const SuperPoly &g) { return f + g; }
SuperPoly mul(const SuperPoly &f, const SuperPoly &g) { return f * g; }

SuperPoly substitute(const SuperPoly &f, const std::vector<SuperPoly> &even_args,
                     const std::vector<SuperPoly> &odd_args) {
    Signature target = f.signature(); // (0|0) source: constants stay put
    if (!even_args.empty())
        target = even_args.front().signature();
    else if (!odd_args.empty())
        target = odd_args.front().signature();
    return substitute(f, even_args, odd_args, target);
}

SuperPoly substitute(const SuperPoly &f, const std::vector<SuperPoly> &even_args,
                     const std::vector<SuperPoly> &odd_args, Signature target) {
    const Signature &src = f.signature();
    if (int(even_args.size()) != src.evens || int(odd_args.size()) != src.odds)
        throw SignatureMismatch("substitution argument count does not match signature");

    for (const auto &g : even_args) {
        if (g.signature() != target)
            throw SignatureMismatch("substitution arguments over different signatures");
        if (!g.is_even())
            throw ParityMismatch("even generator mapped to a non-even element");
    }
    for (const auto &g : odd_args) {
        if (g.signature() != target)
            throw SignatureMismatch("substitution arguments over different signatures");
        if (!g.is_odd())
            throw ParityMismatch("odd generator mapped to a non-odd element");
    }

    SuperPoly result(target);
    // Power cache per even argument; exponents appear repeatedly.
    std::vector<std::vector<SuperPoly>> powers(even_args.size());
    auto power_of = [&](std::size_t i, int k) -> const SuperPoly & {
        auto &cache = powers[i];
        if (cache.empty())
            cache.push_back(SuperPoly::constant(target, Rational(1)));
        while (int(cache.size()) <= k)
            cache.push_back(cache.back() * even_args[i]);
        return cache[k];
    };

    for (const auto &[m, c] : f.terms()) {
        SuperPoly acc = SuperPoly::constant(target, c);
        for (std::size_t i = 0; i < even_args.size(); ++i)
            if (m.even[i] > 0)
                acc = acc * power_of(i, m.even[i]);
        std::uint64_t rest = m.odd;
        while (rest && !acc.is_zero()) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            acc = acc * odd_args[j];
        }
        result += acc;
    }
    return result;
}

SuperPoly OddDecomposition::reassemble() const {
    SuperPoly out(signature);
    for (const auto &[oddset, comp] : components) {
        SuperMonomial xi(std::vector<int>(signature.evens, 0), oddset);
        out += comp.times_monomial(xi);
    }
    return out;
}

OddDecomposition decompose_odd(const SuperPoly &f) {
    OddDecomposition dec;
    dec.signature = f.signature();
    for (const auto &[m, c] : f.terms()) {
        SuperMonomial evenOnly(m.even, 0);
        auto [it, _] = dec.components.try_emplace(m.odd, SuperPoly(f.signature()));
        it->second.add_term(evenOnly, c);
    }
    return dec;
}

ParityClass parity_of(const SuperPoly &f) { return f.parity_class(); }

std::string NameScheme::even_name(int i) const {
    if (i >= 1 && i <= int(even_names.size()) && !even_names[i - 1].empty())
        return even_names[i - 1];
    return "x" + std::to_string(i);
}

std::string NameScheme::odd_name(int i) const {
    if (i >= 1 && i <= int(odd_names.size()) && !odd_names[i - 1].empty())
        return odd_names[i - 1];
    return "xi" + std::to_string(i);
}

std::string to_string(const SuperMonomial &m, const NameScheme &names) {
    std::string out;
    auto append = [&out](const std::string &factor) {
        if (!out.empty())
            out += "*";
        out += factor;
    };
    for (std::size_t i = 0; i < m.even.size(); ++i) {
        if (m.even[i] == 0)
            continue;
        std::string f = names.even_name(int(i) + 1);
        if (m.even[i] > 1)
            f += "^" + std::to_string(m.even[i]);
        append(f);
    }
    std::uint64_t rest = m.odd;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        append(names.odd_name(j + 1));
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const SuperPoly &f, const NameScheme &names) {
    if (f.is_zero())
        return "0";
    std::vector<const std::pair<const SuperMonomial, Rational> *> terms;
    terms.reserve(f.term_count());
    for (const auto &t : f.terms())
        terms.push_back(&t);
    std::sort(terms.begin(), terms.end(),
              [](auto *a, auto *b) { return print_before(a->first, b->first); });

    std::string out;
    for (auto *t : terms) {
        const auto &[m, c] = *t;
        Rational a = c;
        if (out.empty()) {
            if (a.sign() < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0)
                a = -a;
        }
        if (m.is_unit()) {
            out += a.to_string();
        } else if (a.is_one()) {
            out += to_string(m, names);
        } else {
            out += a.to_string() + "*" + to_string(m, names);
        }
    }
    return out;
}

} // namespace superfermat
