#include "superfermat/parser.hpp"

#include <cctype>

namespace superfermat {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

constexpr int kMaxNesting = 200;
constexpr long long kMaxExponent = 1000000;
constexpr int kMaxExpandedPower = 64;

} // namespace

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ident_start(c)) {
            while (i < src.size() && ident_char(src[i]))
                ++i;
            out.push_back({Token::Kind::Ident, std::string(src.substr(start, i - start)),
                           {start, i}});
        } else if (digit(c)) {
            while (i < src.size() && digit(src[i]))
                ++i;
            // a rational literal p/q is a single token when the slash is
            // immediately followed by digits
            if (i + 1 < src.size() && src[i] == '/' && digit(src[i + 1])) {
                ++i;
                while (i < src.size() && digit(src[i]))
                    ++i;
            }
            out.push_back({Token::Kind::Number, std::string(src.substr(start, i - start)),
                           {start, i}});
        } else if (c == '(') {
            out.push_back({Token::Kind::LParen, "(", {start, ++i}});
        } else if (c == ')') {
            out.push_back({Token::Kind::RParen, ")", {start, ++i}});
        } else if (c == ',') {
            out.push_back({Token::Kind::Comma, ",", {start, ++i}});
        } else if (c == ';') {
            out.push_back({Token::Kind::Semicolon, ";", {start, ++i}});
        } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '=' ||
                   c == ':') {
            out.push_back({Token::Kind::Op, std::string(1, c), {start, ++i}});
        } else {
            throw LexError("unexpected character `" + std::string(1, c) + "`", {start, start + 1});
        }
    }
    return out;
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view src) : src_(src), tokens_(tokenize(src)) {}

    ExprPtr parse_full() {
        ExprPtr e = expression(0);
        if (pos_ < tokens_.size())
            throw ParseError("unexpected trailing input", tokens_[pos_].span);
        return e;
    }

  private:
    std::string_view src_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int depth_ = 0;

    Span here() const {
        if (pos_ < tokens_.size())
            return tokens_[pos_].span;
        return {src_.size(), src_.size()};
    }

    const Token *peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }

    const Token &expect(Token::Kind kind, const std::string &what) {
        const Token *t = peek();
        if (!t || t->kind != kind)
            throw ParseError("expected " + what, here());
        ++pos_;
        return tokens_[pos_ - 1];
    }

    bool accept_op(char c) {
        const Token *t = peek();
        if (t && t->kind == Token::Kind::Op && t->lexeme[0] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static ExprPtr node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

    // Precedence climbing: binary +,- (10) < *,/ (20); unary minus binds
    // between * and ^; ^ is a postfix with an integer literal exponent.
    ExprPtr expression(int min_prec) {
        struct Guard {
            int &d;
            explicit Guard(int &depth, Span span) : d(depth) {
                if (++d > kMaxNesting)
                    throw ParseError("expression is nested too deeply", span);
            }
            ~Guard() { --d; }
        } guard(depth_, here());

        ExprPtr lhs = prefix();
        for (;;) {
            const Token *t = peek();
            if (!t || t->kind != Token::Kind::Op)
                break;
            char op = t->lexeme[0];
            int prec = (op == '+' || op == '-') ? 10 : (op == '*' || op == '/') ? 20 : 0;
            if (prec == 0 || prec < min_prec)
                break;
            ++pos_;
            ExprPtr rhs = expression(prec + 1);
            ExprNode n;
            n.kind = op == '+'   ? ExprNode::Kind::Add
                     : op == '-' ? ExprNode::Kind::Sub
                     : op == '*' ? ExprNode::Kind::Mul
                                 : ExprNode::Kind::Div;
            n.span = {lhs->span.begin, rhs->span.end};
            n.lhs = lhs;
            n.rhs = rhs;
            lhs = node(std::move(n));
        }
        return lhs;
    }

    ExprPtr prefix() {
        const Token *t = peek();
        if (t && t->kind == Token::Kind::Op && t->lexeme[0] == '-') {
            Span start = t->span;
            ++pos_;
            ExprPtr operand = prefix();
            ExprNode n;
            n.kind = ExprNode::Kind::Neg;
            n.span = {start.begin, operand->span.end};
            n.lhs = operand;
            return node(std::move(n));
        }
        if (t && t->kind == Token::Kind::Op && t->lexeme[0] == '+') {
            ++pos_;
            return prefix();
        }
        return postfix();
    }

    ExprPtr postfix() {
        ExprPtr base = atom();
        while (accept_op('^')) {
            bool negative = accept_op('-');
            const Token &e = expect(Token::Kind::Number, "an integer exponent");
            if (e.lexeme.find('/') != std::string::npos)
                throw ParseError("exponent must be an integer", e.span);
            long long k;
            try {
                k = std::stoll(e.lexeme);
            } catch (const std::exception &) {
                throw ParseError("exponent out of range", e.span);
            }
            if (k > kMaxExponent)
                throw ParseError("exponent out of range", e.span);
            ExprNode n;
            n.kind = ExprNode::Kind::Pow;
            n.exponent = int(negative ? -k : k);
            n.span = {base->span.begin, e.span.end};
            n.lhs = base;
            base = node(std::move(n));
        }
        return base;
    }

    ExprPtr atom() {
        const Token *t = peek();
        if (!t)
            throw ParseError("expected an expression", here());
        if (t->kind == Token::Kind::Number) {
            ++pos_;
            ExprNode n;
            n.kind = ExprNode::Kind::Number;
            n.span = t->span;
            auto slash = t->lexeme.find('/');
            if (slash != std::string::npos && BigInt(t->lexeme.substr(slash + 1)) == 0)
                throw ParseError("zero denominator in rational literal", t->span);
            n.number = Rational::from_string(t->lexeme);
            return node(std::move(n));
        }
        if (t->kind == Token::Kind::Ident) {
            ++pos_;
            if (peek() && peek()->kind == Token::Kind::LParen) {
                ++pos_;
                ExprPtr arg = expression(0);
                const Token &close = expect(Token::Kind::RParen, "`)`");
                ExprNode n;
                n.kind = ExprNode::Kind::Call;
                n.name = t->lexeme;
                n.span = {t->span.begin, close.span.end};
                n.lhs = arg;
                return node(std::move(n));
            }
            ExprNode n;
            n.kind = ExprNode::Kind::Ident;
            n.name = t->lexeme;
            n.span = t->span;
            return node(std::move(n));
        }
        if (t->kind == Token::Kind::LParen) {
            ++pos_;
            ExprPtr inner = expression(0);
            expect(Token::Kind::RParen, "`)`");
            return inner;
        }
        throw ParseError("expected an expression", t->span);
    }
};

// Resolves x<k>/xi<k> style names against a signature.
std::optional<VariableRef> resolve_generator(const std::string &name, Signature sig,
                                             const GeneratorScheme &scheme, Span span) {
    auto parse_index = [&](const std::string &suffix) -> std::optional<int> {
        if (suffix.empty())
            return std::nullopt;
        for (char c : suffix)
            if (!digit(c))
                return std::nullopt;
        if (suffix.size() > 6)
            throw UnknownGenerator(name, span);
        return std::stoi(suffix);
    };
    if (!scheme.even_alias.empty() && name == scheme.even_alias) {
        if (sig.evens < 1)
            throw UnknownGenerator(name, span);
        return VariableRef::even(1);
    }
    if (!scheme.fresh_even_alias.empty() && name == scheme.fresh_even_alias) {
        if (sig.evens < 1)
            throw UnknownGenerator(name, span);
        return VariableRef::even(sig.evens);
    }
    // the odd prefix may extend the even one (xi vs x): try the longer first
    const bool odd_first = scheme.odd_prefix.size() > scheme.even_prefix.size();
    const std::string &first = odd_first ? scheme.odd_prefix : scheme.even_prefix;
    const std::string &second = odd_first ? scheme.even_prefix : scheme.odd_prefix;
    for (int round = 0; round < 2; ++round) {
        const std::string &prefix = round == 0 ? first : second;
        bool is_odd = (&prefix == &scheme.odd_prefix);
        if (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0) {
            auto idx = parse_index(name.substr(prefix.size()));
            if (idx) {
                int limit = is_odd ? sig.odds : sig.evens;
                if (*idx < 1 || *idx > limit)
                    throw UnknownGenerator(name, span);
                return is_odd ? VariableRef::odd(*idx) : VariableRef::even(*idx);
            }
        }
    }
    return std::nullopt;
}

SuperPoly lower_superpoly(const ExprPtr &ast, Signature sig, const GeneratorScheme &scheme) {
    switch (ast->kind) {
    case ExprNode::Kind::Number:
        return SuperPoly::constant(sig, ast->number);
    case ExprNode::Kind::Ident: {
        auto v = resolve_generator(ast->name, sig, scheme, ast->span);
        if (!v)
            throw UnknownGenerator(ast->name, ast->span);
        return SuperPoly::generator(sig, *v);
    }
    case ExprNode::Kind::Call:
        throw ParseError("function calls are not allowed in polynomial expressions",
                         ast->span);
    case ExprNode::Kind::Neg:
        return -lower_superpoly(ast->lhs, sig, scheme);
    case ExprNode::Kind::Add:
        return lower_superpoly(ast->lhs, sig, scheme) + lower_superpoly(ast->rhs, sig, scheme);
    case ExprNode::Kind::Sub:
        return lower_superpoly(ast->lhs, sig, scheme) - lower_superpoly(ast->rhs, sig, scheme);
    case ExprNode::Kind::Mul:
        return lower_superpoly(ast->lhs, sig, scheme) * lower_superpoly(ast->rhs, sig, scheme);
    case ExprNode::Kind::Div: {
        SuperPoly num = lower_superpoly(ast->lhs, sig, scheme);
        SuperPoly den = lower_superpoly(ast->rhs, sig, scheme);
        if (den.is_zero())
            throw ParseError("division by zero", ast->rhs->span);
        if (den.term_count() != 1 || !den.leading().first.is_unit())
            throw ParseError("can only divide by a nonzero constant", ast->rhs->span);
        return num.scaled(den.leading().second.reciprocal());
    }
    case ExprNode::Kind::Pow: {
        if (ast->exponent < 0)
            throw ParseError("negative exponents are not allowed here", ast->span);
        SuperPoly base = lower_superpoly(ast->lhs, sig, scheme);
        if (base.term_count() > 1 && ast->exponent > kMaxExpandedPower)
            throw ParseError("exponent too large to expand", ast->span);
        return base.pow(ast->exponent);
    }
    }
    throw ParseError("malformed expression", ast->span);
}

SmoothExpr lower_smooth(const ExprPtr &ast, int arity) {
    switch (ast->kind) {
    case ExprNode::Kind::Number:
        return SmoothExpr::constant(ast->number, ast->span);
    case ExprNode::Kind::Ident: {
        const std::string &name = ast->name;
        if (name.size() > 1 && name[0] == 'u') {
            bool digits = true;
            for (std::size_t i = 1; i < name.size(); ++i)
                if (!digit(name[i]))
                    digits = false;
            if (digits && name.size() <= 7) {
                int idx = std::stoi(name.substr(1));
                if (idx < 1 || idx > arity)
                    throw UnknownGenerator(name, ast->span);
                return SmoothExpr::variable(idx - 1, ast->span);
            }
        }
        throw UnknownGenerator(name, ast->span);
    }
    case ExprNode::Kind::Call: {
        SmoothExpr arg = lower_smooth(ast->lhs, arity);
        return SmoothExpr::apply_function(ast->name, arg, ast->span);
    }
    case ExprNode::Kind::Neg:
        return -lower_smooth(ast->lhs, arity);
    case ExprNode::Kind::Add:
        return lower_smooth(ast->lhs, arity) + lower_smooth(ast->rhs, arity);
    case ExprNode::Kind::Sub:
        return lower_smooth(ast->lhs, arity) - lower_smooth(ast->rhs, arity);
    case ExprNode::Kind::Mul:
        return lower_smooth(ast->lhs, arity) * lower_smooth(ast->rhs, arity);
    case ExprNode::Kind::Div:
        return lower_smooth(ast->lhs, arity) *
               SmoothExpr::reciprocal(lower_smooth(ast->rhs, arity), ast->span);
    case ExprNode::Kind::Pow:
        return SmoothExpr::power(lower_smooth(ast->lhs, arity), ast->exponent, ast->span);
    }
    throw ParseError("malformed expression", ast->span);
}

} // namespace

NameScheme GeneratorScheme::names(Signature sig) const {
    NameScheme out;
    for (int i = 1; i <= sig.evens; ++i)
        out.even_names.push_back(even_prefix + std::to_string(i));
    for (int i = 1; i <= sig.odds; ++i)
        out.odd_names.push_back(odd_prefix + std::to_string(i));
    if (!even_alias.empty() && sig.evens >= 1)
        out.even_names[0] = even_alias;
    if (!fresh_even_alias.empty() && sig.evens >= 1)
        out.even_names[sig.evens - 1] = fresh_even_alias;
    return out;
}

ExprPtr parse_expression(std::string_view src) { return Parser(src).parse_full(); }

SuperPoly parse_superpoly(std::string_view src, Signature sig, const GeneratorScheme &scheme) {
    return lower_superpoly(parse_expression(src), sig, scheme);
}

SmoothExpr parse_smooth(std::string_view src, int arity) {
    return lower_smooth(parse_expression(src), arity);
}

Signature parse_signature(std::string_view src) {
    auto comma = src.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("expected `m,n`", {0, src.size()});
    auto parse_count = [&](std::string_view part, std::size_t offset) {
        if (part.empty() || part.size() > 4)
            throw ParseError("bad generator count", {offset, offset + part.size()});
        int v = 0;
        for (char c : part) {
            if (!digit(c))
                throw ParseError("bad generator count", {offset, offset + part.size()});
            v = v * 10 + (c - '0');
        }
        return v;
    };
    std::string_view left = src.substr(0, comma), right = src.substr(comma + 1);
    // tolerate surrounding spaces
    while (!left.empty() && left.front() == ' ')
        left.remove_prefix(1);
    while (!left.empty() && left.back() == ' ')
        left.remove_suffix(1);
    while (!right.empty() && right.front() == ' ')
        right.remove_prefix(1);
    while (!right.empty() && right.back() == ' ')
        right.remove_suffix(1);
    return Signature(parse_count(left, 0), parse_count(right, comma + 1));
}

} // namespace superfermat
