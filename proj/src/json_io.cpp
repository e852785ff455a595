#include "superfermat/json_io.hpp"

#include <algorithm>
#include <bit>

namespace superfermat {

Json to_json(const SuperMonomial &m) {
    Json even = Json::array();
    for (int e : m.even)
        even.push_back(e);
    Json odd = Json::array();
    std::uint64_t rest = m.odd;
    while (rest) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        odd.push_back(j + 1);
    }
    return Json{{"even", even}, {"odd", odd}};
}

SuperMonomial monomial_from_json(const Json &j, Signature sig) {
    SuperMonomial m(std::vector<int>(sig.evens, 0), 0);
    const Json &even = j.at("even");
    if (int(even.size()) != sig.evens)
        throw Error("monomial JSON: even exponent count does not match the signature");
    for (int i = 0; i < sig.evens; ++i) {
        int e = even[i].get<int>();
        if (e < 0)
            throw Error("monomial JSON: negative exponent");
        m.even[i] = e;
    }
    int previous = 0;
    for (const Json &idx : j.at("odd")) {
        int i = idx.get<int>();
        if (i <= previous)
            throw Error("monomial JSON: odd list must be strictly ascending");
        if (i < 1 || i > sig.odds)
            throw Error("monomial JSON: odd index out of range");
        m.odd |= std::uint64_t(1) << (i - 1);
        previous = i;
    }
    return m;
}

Json to_json(const SuperPoly &f) {
    Json terms = Json::array();
    std::vector<const std::pair<const SuperMonomial, Rational> *> sorted;
    for (const auto &t : f.terms())
        sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(),
              [](auto *a, auto *b) { return print_before(a->first, b->first); });
    for (auto *t : sorted) {
        Json term = to_json(t->first);
        term["coef"] = t->second.to_string();
        terms.push_back(std::move(term));
    }
    return Json{{"sig", {f.signature().evens, f.signature().odds}}, {"terms", terms}};
}

SuperPoly superpoly_from_json(const Json &j) {
    const Json &sig_json = j.at("sig");
    Signature sig(sig_json.at(0).get<int>(), sig_json.at(1).get<int>());
    SuperPoly f(sig);
    for (const Json &term : j.at("terms")) {
        Rational c = Rational::from_string(term.at("coef").get<std::string>());
        f.add_term(monomial_from_json(term, sig), c);
    }
    return f;
}

Json to_json(const FinitePresentation &p) {
    Json relations = Json::array();
    for (const SuperPoly &r : p.relations)
        relations.push_back(to_json(r));
    return Json{{"theory", p.theory == TheoryTag::Poly ? "Poly" : "Smooth"},
                {"sig", {p.signature.evens, p.signature.odds}},
                {"relations", relations}};
}

FinitePresentation presentation_from_json(const Json &j) {
    const std::string theory = j.at("theory").get<std::string>();
    if (theory != "Poly")
        throw Error("only the Poly theory has a presentation form");
    const Json &sig_json = j.at("sig");
    Signature sig(sig_json.at(0).get<int>(), sig_json.at(1).get<int>());
    std::vector<SuperPoly> relations;
    for (const Json &r : j.at("relations")) {
        SuperPoly rel = superpoly_from_json(r);
        if (rel.signature() != sig)
            throw Error("relation signature does not match the presentation");
        relations.push_back(std::move(rel));
    }
    return FinitePresentation(sig, std::move(relations));
}

Json to_json(const JetElement &jet) {
    const RealWeilAlgebra &w = *jet.algebra();
    Json coeffs = Json::array();
    for (std::size_t i = 0; i < w.basis().size(); ++i) {
        if (jet.coordinate(i) == 0.0)
            continue;
        coeffs.push_back(Json{{"basis", to_json(w.basis()[i])}, {"value", jet.coordinate(i)}});
    }
    return Json{{"weil", to_json(w.presentation())}, {"coeffs", coeffs}};
}

} // namespace superfermat
