// Command-line front end: exact super-calculus, Groebner normal forms, and
// Weil-algebra jet evaluation over the shared expression grammar.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "superfermat/calculus.hpp"
#include "superfermat/ideals.hpp"
#include "superfermat/json_io.hpp"
#include "superfermat/parser.hpp"
#include "superfermat/theories.hpp"
#include "superfermat/weil.hpp"

using namespace superfermat;

namespace {

long groebner_step_limit() {
    const char *env = std::getenv("SUPERFERMAT_MAX_GB_STEPS");
    if (!env || !*env)
        return kDefaultGroebnerStepLimit;
    long value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::string_view(env).size(), value);
    if (ec != std::errc() || *ptr != '\0' || value <= 0)
        throw Error("SUPERFERMAT_MAX_GB_STEPS must be a positive integer");
    return value;
}

// User errors exit with 2 and, when a span is known, show it in context.
struct UserError {
    std::string message;
    std::string source;
    std::optional<Span> span;
};

void print_span_context(std::ostream &os, const std::string &src, Span span) {
    os << "  " << src << "\n  ";
    for (std::size_t i = 0; i < std::min(span.begin, src.size()); ++i)
        os << (src[i] == '\t' ? '\t' : ' ');
    std::size_t width = span.end > span.begin ? span.end - span.begin : 1;
    for (std::size_t i = 0; i < width; ++i)
        os << '^';
    os << "\n";
}

// Wraps a parse so the failing source string travels with the error.
template <typename F> auto with_source(const std::string &src, F &&fn) {
    try {
        return fn();
    } catch (const ParseError &e) {
        throw UserError{e.what(), src, e.span};
    } catch (const LexError &e) {
        throw UserError{e.what(), src, e.span};
    }
}

SuperPoly parse_poly(const std::string &src, Signature sig,
                     const GeneratorScheme &scheme = {}) {
    return with_source(src, [&] { return parse_superpoly(src, sig, scheme); });
}

std::vector<SuperPoly> parse_relations(const std::vector<std::string> &rels, Signature sig,
                                       const GeneratorScheme &scheme = {}) {
    std::vector<SuperPoly> out;
    for (const std::string &r : rels) {
        if (r.empty())
            continue;
        SuperPoly p = parse_poly(r, sig, scheme);
        if (!p.is_homogeneous())
            throw UserError{"relation is not parity-homogeneous", r, Span{0, r.size()}};
        out.push_back(std::move(p));
    }
    return out;
}

VariableRef parse_variable(const std::string &name, Signature sig,
                           const GeneratorScheme &scheme = {}) {
    SuperPoly p = parse_poly(name, sig, scheme);
    if (p.term_count() == 1) {
        const auto &[m, c] = p.leading();
        if (c.is_one() && m.total_degree() == 1) {
            for (std::size_t i = 0; i < m.even.size(); ++i)
                if (m.even[i] == 1)
                    return VariableRef::even(int(i) + 1);
            return VariableRef::odd(std::countr_zero(m.odd) + 1);
        }
    }
    throw UserError{"--var must name a single generator", name, Span{0, name.size()}};
}

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

// t<k> naming for the Weil layer, plus plain `t` when there is one even
// generator.
GeneratorScheme weil_scheme(Signature sig) {
    GeneratorScheme scheme;
    scheme.even_prefix = "t";
    if (sig.evens == 1)
        scheme.even_alias = "t";
    return scheme;
}

std::string render_jet(const JetElement &jet, const NameScheme &names) {
    const RealWeilAlgebra &w = *jet.algebra();
    std::string out;
    for (int i = 0; i < w.dimension(); ++i) {
        double v = jet.coordinate(std::size_t(i));
        if (v == 0.0)
            continue;
        bool negative = std::signbit(v) && v != 0.0;
        double mag = negative ? -v : v;
        if (out.empty()) {
            if (negative)
                out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (w.basis()[std::size_t(i)].is_unit())
            out += format_double(mag);
        else
            out += format_double(mag) + "*" + to_string(w.basis()[std::size_t(i)], names);
    }
    return out.empty() ? "0" : out;
}

struct CommonPoly {
    std::string sig_text;
    std::string expr;
    std::string var;
    bool json = false;
};

void add_poly_options(CLI::App *cmd, CommonPoly &opts, bool needs_var) {
    cmd->add_option("--sig", opts.sig_text, "signature m,n")->required();
    cmd->add_option("expr", opts.expr, "polynomial expression")->required();
    if (needs_var)
        cmd->add_option("--var", opts.var, "generator to act on")->required();
    cmd->add_flag("--json", opts.json, "emit JSON");
}

struct IdealOptions {
    std::string sig_text;
    std::vector<std::string> relations;
    bool json = false;
};

void add_ideal_options(CLI::App *cmd, IdealOptions &opts) {
    cmd->add_option("--sig", opts.sig_text, "signature m,n")->required();
    cmd->add_option("--rel", opts.relations, "relation (repeatable)");
    cmd->add_flag("--json", opts.json, "emit JSON");
}

// ---- session / repl ------------------------------------------------------

struct Session {
    using Value = std::variant<SuperPoly, FinitePresentation, SmoothExpr, JetElement>;
    Signature signature{0, 0};
    std::map<std::string, SuperPoly> polys;
    std::map<std::string, FinitePresentation> presentations;
    std::map<std::string, SmoothExpr> exprs;
    std::map<std::string, JetElement> jets;
};

int run_repl() {
    Session session;
    std::string line;
    std::cout << "superfermat repl; `help` lists commands\n";
    while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
        try {
            std::istringstream in(line);
            std::string cmd;
            in >> cmd;
            if (cmd.empty())
                continue;
            if (cmd == "quit" || cmd == "exit")
                break;
            if (cmd == "help") {
                std::cout << "  sig m,n            set the active signature\n"
                          << "  let NAME = EXPR    bind a polynomial\n"
                          << "  ideal NAME = R1; R2  bind a presentation\n"
                          << "  show NAME          print a binding\n"
                          << "  list               list bindings\n"
                          << "  dx|dxi|dq EXPR VAR  derivatives\n"
                          << "  split EXPR VAR     odd split\n"
                          << "  gb NAME            Groebner basis of an ideal binding\n"
                          << "  nf NAME EXPR       normal form against a binding\n"
                          << "  quit\n";
                continue;
            }
            if (cmd == "sig") {
                std::string rest;
                std::getline(in, rest);
                session.signature = with_source(rest, [&] { return parse_signature(rest); });
                continue;
            }
            auto resolve = [&](const std::string &text) {
                auto it = session.polys.find(text);
                if (it != session.polys.end())
                    return it->second;
                return parse_poly(text, session.signature);
            };
            if (cmd == "let") {
                std::string name, eq;
                in >> name >> eq;
                std::string rest;
                std::getline(in, rest);
                if (name.empty() || eq != "=")
                    throw Error("usage: let NAME = EXPR");
                SuperPoly value = parse_poly(rest, session.signature);
                session.polys.insert_or_assign(name, std::move(value));
                continue;
            }
            if (cmd == "ideal") {
                std::string name, eq;
                in >> name >> eq;
                std::string rest;
                std::getline(in, rest);
                if (name.empty() || eq != "=")
                    throw Error("usage: ideal NAME = R1; R2; ...");
                std::vector<std::string> rel_texts;
                std::size_t start = 0;
                while (start <= rest.size()) {
                    std::size_t semi = rest.find(';', start);
                    std::string piece = rest.substr(
                        start, semi == std::string::npos ? std::string::npos : semi - start);
                    if (piece.find_first_not_of(" \t") != std::string::npos)
                        rel_texts.push_back(piece);
                    if (semi == std::string::npos)
                        break;
                    start = semi + 1;
                }
                FinitePresentation p(session.signature,
                                     parse_relations(rel_texts, session.signature));
                session.presentations.insert_or_assign(name, std::move(p));
                continue;
            }
            if (cmd == "show") {
                std::string name;
                in >> name;
                if (auto it = session.polys.find(name); it != session.polys.end()) {
                    std::cout << to_string(it->second) << "\n";
                } else if (auto pit = session.presentations.find(name);
                           pit != session.presentations.end()) {
                    std::cout << to_json(pit->second).dump() << "\n";
                } else {
                    std::cout << "unbound: " << name << "\n";
                }
                continue;
            }
            if (cmd == "list") {
                for (const auto &[name, value] : session.polys)
                    std::cout << "poly " << name << " = " << to_string(value) << "\n";
                for (const auto &[name, value] : session.presentations)
                    std::cout << "ideal " << name << " (" << value.relations.size()
                              << " relations)\n";
                continue;
            }
            if (cmd == "dx" || cmd == "dxi" || cmd == "dq" || cmd == "split") {
                std::string expr_text, var_text;
                in >> expr_text >> var_text;
                SuperPoly f = resolve(expr_text);
                VariableRef var = parse_variable(var_text, session.signature);
                if (cmd == "dx") {
                    std::cout << to_string(partial_even(f, var)) << "\n";
                } else if (cmd == "dxi") {
                    std::cout << to_string(partial_odd(f, var)) << "\n";
                } else if (cmd == "split") {
                    OddSplit s = odd_split(f, var);
                    std::cout << "h = " << to_string(s.constant_part) << "\n"
                              << "g = " << to_string(s.derivative) << "\n";
                } else {
                    SuperPoly q = difference_quotient(f, var);
                    NameScheme names;
                    for (int i = 1; i <= session.signature.evens; ++i)
                        names.even_names.push_back("x" + std::to_string(i));
                    names.even_names.insert(names.even_names.begin() + var.index, "y");
                    std::cout << to_string(q, names) << "\n";
                }
                continue;
            }
            if (cmd == "gb" || cmd == "nf") {
                std::string name;
                in >> name;
                auto it = session.presentations.find(name);
                if (it == session.presentations.end())
                    throw Error("unbound ideal: " + name);
                GroebnerBasis basis = groebner(it->second.ideal(), groebner_step_limit());
                if (cmd == "gb") {
                    for (const SuperPoly &g : basis.elements)
                        std::cout << to_string(g) << "\n";
                } else {
                    std::string expr_text;
                    std::getline(in, expr_text);
                    std::cout << to_string(normal_form(resolve(expr_text), basis)) << "\n";
                }
                continue;
            }
            throw Error("unknown command: " + cmd + " (try `help`)");
        } catch (const UserError &e) {
            std::cout << "error: " << e.message << "\n";
            if (e.span)
                print_span_context(std::cout, e.source, *e.span);
        } catch (const Error &e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    return 0;
}

// ---- subcommands ----------------------------------------------------------

int run(int argc, char **argv) {
    CLI::App app{"exact calculus in supercommutative superpolynomial algebras"};
    app.require_subcommand(1);

    CommonPoly dq_opts, dx_opts, dxi_opts, split_opts;
    auto *cmd_dq = app.add_subcommand("dq", "even difference quotient");
    add_poly_options(cmd_dq, dq_opts, true);
    auto *cmd_dx = app.add_subcommand("dx", "even partial derivative");
    add_poly_options(cmd_dx, dx_opts, true);
    auto *cmd_dxi = app.add_subcommand("dxi", "odd (left) partial derivative");
    add_poly_options(cmd_dxi, dxi_opts, true);
    auto *cmd_split = app.add_subcommand("split", "odd split f = h + eta*g");
    add_poly_options(cmd_split, split_opts, true);

    IdealOptions gb_opts, basis_opts, weil_opts, rd_opts;
    auto *cmd_gb = app.add_subcommand("gb", "reduced Groebner basis");
    add_ideal_options(cmd_gb, gb_opts);
    auto *cmd_basis = app.add_subcommand("basis", "staircase basis of the quotient");
    add_ideal_options(cmd_basis, basis_opts);
    auto *cmd_weilcheck = app.add_subcommand("weilcheck", "Weil-algebra certificate");
    add_ideal_options(cmd_weilcheck, weil_opts);
    auto *cmd_rd = app.add_subcommand("rd", "reduction A -> A_rd");
    add_ideal_options(cmd_rd, rd_opts);

    IdealOptions nf_opts, member_opts;
    std::string nf_target, member_target;
    auto *cmd_nf = app.add_subcommand("nf", "normal form modulo an ideal");
    add_ideal_options(cmd_nf, nf_opts);
    cmd_nf->add_option("expr", nf_target, "element to reduce")->required();
    auto *cmd_member = app.add_subcommand("member", "ideal membership");
    add_ideal_options(cmd_member, member_opts);
    cmd_member->add_option("expr", member_target, "element to test")->required();

    std::string prod_sig_a, prod_sig_b;
    std::vector<std::string> prod_rel_a, prod_rel_b;
    bool prod_json = false;
    auto *cmd_prod = app.add_subcommand("prodcheck",
                                        "verify rd(A x B) = rd(A) x rd(B)");
    cmd_prod->add_option("--sig-a", prod_sig_a, "signature of A")->required();
    cmd_prod->add_option("--rel-a", prod_rel_a, "relations of A");
    cmd_prod->add_option("--sig-b", prod_sig_b, "signature of B")->required();
    cmd_prod->add_option("--rel-b", prod_rel_b, "relations of B");
    cmd_prod->add_flag("--json", prod_json, "emit JSON");

    std::string jet_weil_sig = "1,0", jet_expr;
    std::vector<std::string> jet_rels, jet_args;
    std::string jet_oracle;
    bool jet_json = false;
    auto *cmd_jet = app.add_subcommand("jet", "smooth evaluation on a Weil algebra");
    cmd_jet->add_option("--weil", jet_rels, "Weil-algebra relation (repeatable)");
    cmd_jet->add_option("--weil-sig", jet_weil_sig, "Weil signature m,n (default 1,0)");
    cmd_jet->add_option("--expr", jet_expr, "smooth expression in u1..up")->required();
    cmd_jet->add_option("--arg", jet_args, "jet argument (repeatable)")->required();
    cmd_jet->add_option("--oracle", jet_oracle, "`exact`: cross-check polynomial paths");
    cmd_jet->add_flag("--json", jet_json, "emit JSON");

    std::string bz_sig = "0,0", bz_weil_sig = "0,1";
    std::vector<std::string> bz_coefs, bz_rels, bz_even_args, bz_odd_args;
    bool bz_json = false;
    auto *cmd_bz = app.add_subcommand("berezin", "Berezin-algebra evaluation");
    cmd_bz->add_option("--sig", bz_sig, "function signature p,q")->required();
    cmd_bz->add_option("--coef", bz_coefs,
                       "component `i1,i2:expr` (empty index list for the even part)")
        ->required();
    cmd_bz->add_option("--weil-sig", bz_weil_sig, "Weil signature m,n");
    cmd_bz->add_option("--weil", bz_rels, "Weil-algebra relation (repeatable)");
    cmd_bz->add_option("--even-arg", bz_even_args, "even jet argument (repeatable)");
    cmd_bz->add_option("--odd-arg", bz_odd_args, "odd jet argument (repeatable)");
    cmd_bz->add_flag("--json", bz_json, "emit JSON");

    auto *cmd_repl = app.add_subcommand("repl", "interactive session");

    CLI11_PARSE(app, argc, argv);

    const long step_limit = groebner_step_limit();

    if (cmd_repl->parsed())
        return run_repl();

    // calculus family
    for (auto [cmd, opts] : {std::pair{cmd_dq, &dq_opts}, {cmd_dx, &dx_opts},
                             {cmd_dxi, &dxi_opts}, {cmd_split, &split_opts}}) {
        if (!cmd->parsed())
            continue;
        Signature sig = with_source(opts->sig_text,
                                    [&] { return parse_signature(opts->sig_text); });
        SuperPoly f = parse_poly(opts->expr, sig);
        VariableRef var = parse_variable(opts->var, sig);
        if (cmd == cmd_dq) {
            if (var.kind != Parity::Even)
                throw UserError{"dq needs an even variable", opts->var, {}};
            SuperPoly q = difference_quotient(f, var);
            // relabel so the fresh variable is the last even generator
            Signature ext = q.signature();
            std::vector<SuperPoly> evens(ext.evens, SuperPoly(ext)), odds;
            for (int k = 1; k <= ext.evens; ++k) {
                int target = k <= var.index ? k : (k == var.index + 1 ? ext.evens : k - 1);
                evens[k - 1] = SuperPoly::generator(ext, VariableRef::even(target));
            }
            for (int k = 1; k <= ext.odds; ++k)
                odds.push_back(SuperPoly::generator(ext, VariableRef::odd(k)));
            q = substitute(q, evens, odds, ext);
            if (opts->json) {
                std::cout << to_json(q).dump() << "\n";
            } else {
                NameScheme names;
                for (int k = 1; k < ext.evens; ++k)
                    names.even_names.push_back("x" + std::to_string(k));
                names.even_names.push_back("y");
                std::cout << to_string(q, names) << "\n";
            }
        } else if (cmd == cmd_dx) {
            if (var.kind != Parity::Even)
                throw UserError{"dx needs an even variable", opts->var, {}};
            SuperPoly d = partial_even(f, var);
            std::cout << (opts->json ? to_json(d).dump() : to_string(d)) << "\n";
        } else if (cmd == cmd_dxi) {
            if (var.kind != Parity::Odd)
                throw UserError{"dxi needs an odd variable", opts->var, {}};
            SuperPoly d = partial_odd(f, var);
            std::cout << (opts->json ? to_json(d).dump() : to_string(d)) << "\n";
        } else {
            if (var.kind != Parity::Odd)
                throw UserError{"split needs an odd variable", opts->var, {}};
            OddSplit s = odd_split(f, var);
            if (opts->json)
                std::cout << Json{{"h", to_json(s.constant_part)},
                                  {"g", to_json(s.derivative)}}
                                 .dump()
                          << "\n";
            else
                std::cout << "h = " << to_string(s.constant_part) << "\n"
                          << "g = " << to_string(s.derivative) << "\n";
        }
        return 0;
    }

    auto build_presentation = [&](const std::string &sig_text,
                                  const std::vector<std::string> &rels) {
        Signature sig =
            with_source(sig_text, [&] { return parse_signature(sig_text); });
        return FinitePresentation(sig, parse_relations(rels, sig));
    };

    if (cmd_gb->parsed()) {
        FinitePresentation p = build_presentation(gb_opts.sig_text, gb_opts.relations);
        GroebnerBasis basis = groebner(p.ideal(), step_limit);
        if (gb_opts.json) {
            Json arr = Json::array();
            for (const SuperPoly &g : basis.elements)
                arr.push_back(to_json(g));
            std::cout << Json{{"sig", {p.signature.evens, p.signature.odds}},
                              {"basis", arr}}
                             .dump()
                      << "\n";
        } else {
            for (const SuperPoly &g : basis.elements)
                std::cout << to_string(g) << "\n";
        }
        return 0;
    }

    if (cmd_nf->parsed() || cmd_member->parsed()) {
        bool is_nf = cmd_nf->parsed();
        IdealOptions &opts = is_nf ? nf_opts : member_opts;
        const std::string &target = is_nf ? nf_target : member_target;
        FinitePresentation p = build_presentation(opts.sig_text, opts.relations);
        GroebnerBasis basis = groebner(p.ideal(), step_limit);
        SuperPoly f = parse_poly(target, p.signature);
        SuperPoly nf = normal_form(f, basis);
        if (is_nf)
            std::cout << (opts.json ? to_json(nf).dump() : to_string(nf)) << "\n";
        else if (opts.json)
            std::cout << Json{{"member", nf.is_zero()}}.dump() << "\n";
        else
            std::cout << (nf.is_zero() ? "true" : "false") << "\n";
        return 0;
    }

    if (cmd_basis->parsed()) {
        FinitePresentation p = build_presentation(basis_opts.sig_text, basis_opts.relations);
        QuotientAlgebra q(p.ideal(), step_limit);
        const auto &stairs = q.staircase_basis();
        if (basis_opts.json) {
            if (!stairs) {
                std::cout << Json{{"infinite", true}}.dump() << "\n";
            } else {
                Json arr = Json::array();
                for (const SuperMonomial &m : *stairs)
                    arr.push_back(to_json(m));
                std::cout << Json{{"basis", arr}, {"dim", stairs->size()}}.dump() << "\n";
            }
        } else if (!stairs) {
            std::cout << "infinite\n";
        } else {
            for (const SuperMonomial &m : *stairs)
                std::cout << to_string(m) << "\n";
            std::cout << "dim=" << stairs->size() << "\n";
        }
        return 0;
    }

    if (cmd_weilcheck->parsed()) {
        FinitePresentation p = build_presentation(weil_opts.sig_text, weil_opts.relations);
        QuotientAlgebra q(p.ideal(), step_limit);
        const auto &stairs = q.staircase_basis();
        if (!stairs)
            throw NotFiniteDimensional();
        auto index = augmentation_nilpotency(q);
        if (weil_opts.json) {
            Json j{{"dim", stairs->size()}, {"weil", index.has_value()}};
            if (index)
                j["nilindex"] = *index;
            std::cout << j.dump() << "\n";
        } else if (index) {
            std::cout << "dim=" << stairs->size() << " nilindex=" << *index << " WEIL\n";
        } else {
            std::cout << "dim=" << stairs->size() << " NOT-WEIL\n";
        }
        return 0;
    }

    if (cmd_rd->parsed()) {
        FinitePresentation p = build_presentation(rd_opts.sig_text, rd_opts.relations);
        FinitePresentation rd = reduce_rd(p);
        if (rd_opts.json) {
            std::cout << to_json(rd).dump() << "\n";
        } else {
            std::cout << "sig " << rd.signature.evens << "," << rd.signature.odds
                      << "; relations:";
            if (rd.relations.empty()) {
                std::cout << " none";
            } else {
                for (std::size_t i = 0; i < rd.relations.size(); ++i)
                    std::cout << (i ? ", " : " ") << to_string(rd.relations[i]);
            }
            std::cout << "\n";
        }
        return 0;
    }

    if (cmd_prod->parsed()) {
        FinitePresentation a = build_presentation(prod_sig_a, prod_rel_a);
        FinitePresentation b = build_presentation(prod_sig_b, prod_rel_b);
        bool ok = check_product_preservation(a, b);
        if (prod_json)
            std::cout << Json{{"preserved", ok}}.dump() << "\n";
        else
            std::cout << (ok ? "PRESERVED" : "NOT-PRESERVED") << "\n";
        return 0;
    }

    if (cmd_jet->parsed()) {
        Signature wsig =
            with_source(jet_weil_sig, [&] { return parse_signature(jet_weil_sig); });
        GeneratorScheme scheme = weil_scheme(wsig);
        FinitePresentation pres(wsig, parse_relations(jet_rels, wsig, scheme));
        RealWeilAlgebra::Ptr w = RealWeilAlgebra::certify(pres);
        SmoothExpr expr =
            with_source(jet_expr, [&] { return parse_smooth(jet_expr, int(jet_args.size())); });
        std::vector<JetElement> args;
        std::vector<SuperPoly> arg_polys;
        for (const std::string &a : jet_args) {
            SuperPoly p = parse_poly(a, wsig, scheme);
            arg_polys.push_back(p);
            args.push_back(JetElement::from_poly(w, p));
        }
        JetElement out = [&] {
            try {
                return smooth_eval_jet(expr, args);
            } catch (const DomainError &e) {
                if (e.span.end > e.span.begin && e.span.end <= jet_expr.size())
                    throw UserError{e.what(), jet_expr, e.span};
                throw;
            }
        }();
        NameScheme names = scheme.names(wsig);
        if (jet_json)
            std::cout << to_json(out).dump() << "\n";
        else
            std::cout << render_jet(out, names) << "\n";
        if (!jet_oracle.empty()) {
            if (jet_oracle != "exact")
                throw UserError{"--oracle only supports `exact`", jet_oracle, {}};
            if (!expr.is_polynomial())
                throw UserError{"--oracle exact needs a polynomial expression", jet_expr, {}};
            Signature esig(int(jet_args.size()), 0);
            SuperPoly as_poly = expr.to_superpoly(esig);
            SuperPoly substituted =
                substitute(as_poly, arg_polys, {}, wsig);
            JetElement exact = JetElement::from_poly(w, substituted);
            std::cout << (exact == out ? "MATCH" : "MISMATCH") << "\n";
        }
        return 0;
    }

    if (cmd_bz->parsed()) {
        Signature fsig = with_source(bz_sig, [&] { return parse_signature(bz_sig); });
        Signature wsig =
            with_source(bz_weil_sig, [&] { return parse_signature(bz_weil_sig); });
        GeneratorScheme scheme = weil_scheme(wsig);
        FinitePresentation pres(wsig, parse_relations(bz_rels, wsig, scheme));
        RealWeilAlgebra::Ptr w = RealWeilAlgebra::certify(pres);

        SuperFunction f;
        f.signature = fsig;
        for (const std::string &entry : bz_coefs) {
            auto colon = entry.find(':');
            if (colon == std::string::npos)
                throw UserError{"--coef needs the form `i1,i2:expr`", entry, {}};
            std::uint64_t oddset = 0;
            std::string indices = entry.substr(0, colon);
            std::istringstream idx(indices);
            std::string piece;
            int previous = 0;
            while (std::getline(idx, piece, ',')) {
                if (piece.empty())
                    continue;
                int i = 0;
                auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), i);
                if (ec != std::errc() || p != piece.data() + piece.size() || i < 1 ||
                    i > fsig.odds || i <= previous)
                    throw UserError{"--coef indices must be ascending odd indices", entry,
                                    Span{0, colon}};
                oddset |= std::uint64_t(1) << (i - 1);
                previous = i;
            }
            std::string expr_text = entry.substr(colon + 1);
            SmoothExpr coefficient =
                with_source(expr_text, [&] { return parse_smooth(expr_text, fsig.evens); });
            auto [it, inserted] = f.components.emplace(oddset, coefficient);
            if (!inserted)
                throw UserError{"--coef repeats an index set", entry, {}};
        }

        auto parse_jets = [&](const std::vector<std::string> &texts) {
            std::vector<JetElement> out;
            for (const std::string &t : texts)
                out.push_back(JetElement::from_poly(w, parse_poly(t, wsig, scheme)));
            return out;
        };
        JetElement out = berezin_eval(f, parse_jets(bz_even_args), parse_jets(bz_odd_args));
        if (bz_json)
            std::cout << to_json(out).dump() << "\n";
        else
            std::cout << render_jet(out, scheme.names(wsig)) << "\n";
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char **argv) {
    try {
        return run(argc, argv);
    } catch (const UserError &e) {
        std::cerr << "error: " << e.message << "\n";
        if (e.span)
            print_span_context(std::cerr, e.source, *e.span);
        return 2;
    } catch (const StepLimitExceeded &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const LexError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SignatureMismatch &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParityMismatch &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InhomogeneousRelation &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DivisionByZero &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotFiniteDimensional &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoAugmentation &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OddGeneratorPresent &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error &e) {
        // remaining library errors reflect bad input (non-Weil algebras,
        // out-of-range generators)
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
