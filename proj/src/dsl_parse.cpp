#include "sjet/dsl.hpp"

#include <cctype>
#include <set>
#include <utility>

namespace sjet {

std::string_view to_string(DiagnosticKind kind)
{
    switch (kind) {
    case DiagnosticKind::Syntax:
        return "syntax";
    case DiagnosticKind::Undeclared:
        return "undeclared";
    case DiagnosticKind::Duplicate:
        return "duplicate";
    case DiagnosticKind::Parity:
        return "parity";
    case DiagnosticKind::Coverage:
        return "coverage";
    case DiagnosticKind::Order:
        return "order";
    }
    return "?";
}

ParseError::ParseError(Diagnostic diagnostic)
    : Error("line " + std::to_string(diagnostic.span.line) + ", column " + std::to_string(diagnostic.span.column) +
            ": " + diagnostic.message)
    , diagnostic_(std::move(diagnostic))
{
}

namespace {

constexpr unsigned max_exponent = 1024;

enum class Tok { Ident, Int, Punct, Arrow, DerivOp, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

bool ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '.' || c == '@';
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

class Lexer {
public:
    explicit Lexer(std::string_view text)
        : text_(text)
    {
    }

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skip_blank();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", here(0)});
                return out;
            }
            out.push_back(next());
        }
    }

private:
    SourceSpan here(std::size_t length) const { return {line_, column_, pos_, length}; }

    void advance(std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i) {
            if (text_[pos_] == '\n') {
                ++line_;
                column_ = 1;
            } else {
                ++column_;
            }
            ++pos_;
        }
    }

    void skip_blank()
    {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance(1);
                }
            } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance(1);
            } else {
                return;
            }
        }
    }

    Token emit(Tok kind, std::size_t length)
    {
        Token t{kind, std::string(text_.substr(pos_, length)), here(length)};
        advance(length);
        return t;
    }

    std::size_t ident_length(std::size_t from) const
    {
        std::size_t end = from;
        while (end < text_.size() && ident_char(text_[end])) {
            ++end;
        }
        return end - from;
    }

    // "(name)@r" is the jet coordinate of a derived name and lexes as one
    // identifier.
    std::size_t wrapped_jet_length() const
    {
        std::size_t i = pos_ + 1;
        if (i >= text_.size() || !ident_start(text_[i])) {
            return 0;
        }
        i += ident_length(i);
        if (i + 1 >= text_.size() || text_[i] != ')' || text_[i + 1] != '@') {
            return 0;
        }
        i += 2;
        const std::size_t digits = i;
        while (i < text_.size() && is_digit(text_[i])) {
            ++i;
        }
        if (i == digits) {
            return 0;
        }
        return i - pos_ + ident_length(i);
    }

    Token next()
    {
        const char c = text_[pos_];
        const std::string_view rest = text_.substr(pos_);
        if (rest.substr(0, 3) == "d/d" && (rest.size() == 3 || !ident_char(rest[3]))) {
            return emit(Tok::DerivOp, 3);
        }
        if (ident_start(c)) {
            return emit(Tok::Ident, ident_length(pos_));
        }
        if (is_digit(c)) {
            std::size_t n = 0;
            while (pos_ + n < text_.size() && is_digit(text_[pos_ + n])) {
                ++n;
            }
            return emit(Tok::Int, n);
        }
        if (rest.substr(0, 2) == "->") {
            return emit(Tok::Arrow, 2);
        }
        if (c == '(') {
            if (const std::size_t n = wrapped_jet_length(); n != 0) {
                return emit(Tok::Ident, n);
            }
        }
        if (std::string_view("(),:;{}=+-*^/").find(c) != std::string_view::npos) {
            return emit(Tok::Punct, 1);
        }
        throw ParseError({DiagnosticKind::Syntax, "unexpected character '" + std::string(1, c) + "'", here(1)});
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

SourceSpan cover(const SourceSpan& first, const SourceSpan& last)
{
    return {first.line, first.column, first.offset, last.offset + last.length - first.offset};
}

class Parser {
public:
    explicit Parser(std::string_view text)
        : tokens_(Lexer(text).run())
    {
    }

    Document document()
    {
        Document doc;
        while (peek().kind != Tok::End) {
            declaration(doc);
        }
        return doc;
    }

    SuperPolynomial lone_expression(const AlgebraPtr& algebra)
    {
        SuperPolynomial f = expr(algebra);
        if (peek().kind != Tok::End) {
            fail(DiagnosticKind::Syntax, "unexpected '" + peek().text + "' after expression", peek().span);
        }
        return f;
    }

private:
    [[noreturn]] static void fail(DiagnosticKind kind, std::string message, const SourceSpan& span)
    {
        throw ParseError({kind, std::move(message), span});
    }

    const Token& peek() const { return tokens_[pos_]; }
    const Token& previous() const { return tokens_[pos_ - 1]; }

    bool at(std::string_view punct) const
    {
        return (peek().kind == Tok::Punct || peek().kind == Tok::Ident) && peek().text == punct;
    }

    const Token& take() { return tokens_[pos_++]; }

    static std::string describe(const Token& t)
    {
        return t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    }

    const Token& expect(std::string_view text)
    {
        const bool ok = (peek().kind == Tok::Punct || peek().kind == Tok::Ident || peek().kind == Tok::Arrow) &&
                        peek().text == text;
        if (!ok) {
            fail(DiagnosticKind::Syntax, "expected '" + std::string(text) + "' but found " + describe(peek()),
                 peek().span);
        }
        return take();
    }

    const Token& expect_ident(std::string_view what)
    {
        if (peek().kind != Tok::Ident) {
            fail(DiagnosticKind::Syntax, "expected " + std::string(what) + " but found " + describe(peek()),
                 peek().span);
        }
        return take();
    }

    unsigned expect_unsigned(std::string_view what, unsigned limit)
    {
        if (peek().kind != Tok::Int) {
            fail(DiagnosticKind::Syntax, "expected " + std::string(what) + " but found " + describe(peek()),
                 peek().span);
        }
        const Token& t = take();
        if (t.text.size() > 9 || std::stoul(t.text) > limit) {
            fail(DiagnosticKind::Order, std::string(what) + " " + t.text + " exceeds " + std::to_string(limit),
                 t.span);
        }
        return static_cast<unsigned>(std::stoul(t.text));
    }

    Parity expect_parity()
    {
        const Token& t = expect_ident("'even' or 'odd'");
        const auto p = parse_parity(t.text);
        if (!p) {
            fail(DiagnosticKind::Syntax, "expected 'even' or 'odd' but found '" + t.text + "'", t.span);
        }
        return *p;
    }

    void declaration(Document& doc)
    {
        const Token& head = peek();
        if (head.kind == Tok::Ident) {
            if (head.text == "chart") {
                return chart_decl(doc);
            }
            if (head.text == "params") {
                return params_decl(doc);
            }
            if (head.text == "morphism") {
                return morphism_decl(doc);
            }
            if (head.text == "curve") {
                return curve_decl(doc);
            }
            if (head.text == "field") {
                return field_decl(doc);
            }
        }
        fail(DiagnosticKind::Syntax, "expected a declaration but found " + describe(head), head.span);
    }

    std::vector<Generator> coordinate_list()
    {
        expect("(");
        std::vector<Generator> coords;
        std::set<std::string, std::less<>> seen;
        do {
            const Token& name = expect_ident("a coordinate name");
            if (name.text == "t") {
                fail(DiagnosticKind::Syntax, "'t' is reserved for the curve parameter", name.span);
            }
            if (!seen.insert(name.text).second) {
                fail(DiagnosticKind::Duplicate, "coordinate '" + name.text + "' declared twice", name.span);
            }
            expect(":");
            coords.push_back({name.text, expect_parity(), 0, 0});
        } while (at(",") && (take(), true));
        expect(")");
        return coords;
    }

    void chart_decl(Document& doc)
    {
        const Token& head = take();
        const Token& name = expect_ident("a chart name");
        if (doc.find_chart(name.text) != nullptr) {
            fail(DiagnosticKind::Duplicate, "chart '" + name.text + "' already declared", name.span);
        }
        auto coords = coordinate_list();
        expect(";");
        doc.add(ChartDecl{Chart(name.text, std::move(coords)), cover(head.span, previous().span)});
    }

    void params_decl(Document& doc)
    {
        const Token& head = take();
        const Token& name = expect_ident("a parameter algebra name");
        if (doc.find_params(name.text) != nullptr) {
            fail(DiagnosticKind::Duplicate, "params '" + name.text + "' already declared", name.span);
        }
        auto coords = coordinate_list();
        expect(";");
        doc.add(ParamsDecl{ParameterAlgebra(name.text, std::move(coords)), cover(head.span, previous().span)});
    }

    const ChartDecl& chart_ref(const Document& doc)
    {
        const Token& name = expect_ident("a chart name");
        const ChartDecl* decl = doc.find_chart(name.text);
        if (decl == nullptr) {
            fail(DiagnosticKind::Undeclared, "undeclared chart '" + name.text + "'", name.span);
        }
        return *decl;
    }

    // Reads "(lhs '=' expr ';')+ '}'" and returns the values indexed by
    // coordinate of `targets`, checking duplicates and parity.
    template <class Check>
    std::vector<std::optional<SuperPolynomial>> assignments(const Chart& targets, const AlgebraPtr& algebra,
                                                            bool derivative_form, Check check)
    {
        expect("{");
        std::vector<std::optional<SuperPolynomial>> values(targets.size());
        do {
            const Token& start = peek();
            if (derivative_form) {
                if (peek().kind != Tok::DerivOp) {
                    fail(DiagnosticKind::Syntax, "expected 'd/d' but found " + describe(peek()), peek().span);
                }
                take();
            }
            const Token& lhs = expect_ident("a coordinate name");
            const auto index = targets.algebra()->find(lhs.text);
            if (!index) {
                fail(DiagnosticKind::Undeclared,
                     "'" + lhs.text + "' is not a coordinate of chart '" + targets.name() + "'", lhs.span);
            }
            if (values[*index]) {
                fail(DiagnosticKind::Duplicate, "coordinate '" + lhs.text + "' assigned twice", lhs.span);
            }
            expect("=");
            SuperPolynomial value = expr(algebra);
            expect(";");
            const SourceSpan span = cover(start.span, previous().span);
            check(*index, value, span);
            values[*index] = std::move(value);
        } while (!at("}"));
        take();
        return values;
    }

    static void require_parity(const SuperPolynomial& value, Parity expected, const std::string& what,
                               const SourceSpan& span)
    {
        if (value.has_parity(expected)) {
            return;
        }
        const auto actual = value.parity();
        const std::string found = actual ? std::string(to_string(*actual)) : "of mixed parity";
        fail(DiagnosticKind::Parity, what + " must be " + std::string(to_string(expected)) + " but the expression is " +
                                         found,
             span);
    }

    void morphism_decl(Document& doc)
    {
        const Token& head = take();
        const Token& name = expect_ident("a morphism name");
        if (doc.find_morphism(name.text) != nullptr) {
            fail(DiagnosticKind::Duplicate, "morphism '" + name.text + "' already declared", name.span);
        }
        expect(":");
        const Chart source = chart_ref(doc).chart;
        expect("->");
        const Chart target = chart_ref(doc).chart;
        auto values = assignments(target, source.algebra(), false,
                                  [&](std::size_t i, const SuperPolynomial& v, const SourceSpan& span) {
                                      const auto& y = target.coordinate(i);
                                      require_parity(v, y.parity,
                                                     "assignment to " + std::string(to_string(y.parity)) +
                                                         " coordinate '" + y.name + "'",
                                                     span);
                                  });
        const SourceSpan span = cover(head.span, previous().span);
        std::vector<SuperPolynomial> images;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i]) {
                fail(DiagnosticKind::Coverage,
                     "morphism '" + name.text + "' does not assign '" + target.coordinate(i).name + "'", span);
            }
            images.push_back(std::move(*values[i]));
        }
        doc.add(MorphismDecl{name.text, Morphism(source, target, std::move(images)), span});
    }

    void curve_decl(Document& doc)
    {
        const Token& head = take();
        const Token& name = expect_ident("a curve name");
        if (doc.find_curve(name.text) != nullptr) {
            fail(DiagnosticKind::Duplicate, "curve '" + name.text + "' already declared", name.span);
        }
        expect("on");
        const Chart chart = chart_ref(doc).chart;
        expect("params");
        const Token& pname = expect_ident("a parameter algebra name");
        const ParamsDecl* pdecl = doc.find_params(pname.text);
        if (pdecl == nullptr) {
            fail(DiagnosticKind::Undeclared, "undeclared params '" + pname.text + "'", pname.span);
        }
        const ParameterAlgebra params = pdecl->params;
        expect("order");
        const unsigned order = expect_unsigned("curve order", 64);

        const AlgebraPtr with_time = curve_algebra(params.algebra);
        const std::size_t t = params.algebra->size();
        auto values = assignments(chart, with_time, false,
                                  [&](std::size_t i, const SuperPolynomial& v, const SourceSpan& span) {
                                      const auto& x = chart.coordinate(i);
                                      require_parity(v, x.parity,
                                                     "component '" + x.name + "' of a curve on " +
                                                         std::string(to_string(x.parity)) + " coordinate",
                                                     span);
                                      for (const auto& [m, c] : v.terms()) {
                                          if (m.exponent(t) > order) {
                                              fail(DiagnosticKind::Order,
                                                   "component '" + x.name + "' has degree " +
                                                       std::to_string(m.exponent(t)) + " in t, above order " +
                                                       std::to_string(order),
                                                   span);
                                          }
                                      }
                                  });
        const SourceSpan span = cover(head.span, previous().span);

        Substitution at_zero(with_time, params.algebra);
        for (std::size_t i = 0; i < t; ++i) {
            at_zero.set(i, SuperPolynomial::variable(params.algebra, i));
        }
        at_zero.set(t, SuperPolynomial(params.algebra));

        std::vector<TimeSeries> components;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (!values[i]) {
                fail(DiagnosticKind::Coverage,
                     "curve '" + name.text + "' has no component for '" + chart.coordinate(i).name + "'", span);
            }
            std::vector<SuperPolynomial> coefficients;
            SuperPolynomial derivative = *values[i];
            for (unsigned r = 0; r <= order; ++r) {
                coefficients.push_back(substitute(derivative, at_zero) * Rational(1 / factorial(r)));
                derivative = partial(derivative, t);
            }
            components.emplace_back(std::move(coefficients));
        }
        doc.add(CurveDecl{name.text, SCurve(chart, params, order, std::move(components)), span});
    }

    void field_decl(Document& doc)
    {
        const Token& head = take();
        const Token& name = expect_ident("a field name");
        if (doc.find_field(name.text) != nullptr) {
            fail(DiagnosticKind::Duplicate, "field '" + name.text + "' already declared", name.span);
        }
        expect("on");
        const Chart base = chart_ref(doc).chart;
        std::optional<unsigned> order;
        if (at("order")) {
            take();
            order = expect_unsigned("field order", 64);
        }
        expect("parity");
        const Parity parity = expect_parity();
        const Chart chart = order ? antitangent_chart(prolong_chart(base, static_cast<int>(*order)).chart()).chart()
                                  : base;
        auto values = assignments(chart, chart.algebra(), true,
                                  [&](std::size_t i, const SuperPolynomial& v, const SourceSpan& span) {
                                      const auto& x = chart.coordinate(i);
                                      require_parity(v, parity + x.parity, "value on '" + x.name + "'", span);
                                  });
        const SourceSpan span = cover(head.span, previous().span);
        std::vector<SuperPolynomial> images;
        for (auto& v : values) {
            images.push_back(v ? std::move(*v) : SuperPolynomial(chart.algebra()));
        }
        doc.add(FieldDecl{name.text, base.name(), order, VectorField(chart, parity, std::move(images)), span});
    }

    SuperPolynomial expr(const AlgebraPtr& algebra)
    {
        SuperPolynomial f = term(algebra);
        while (at("+") || at("-")) {
            const bool minus = take().text == "-";
            SuperPolynomial g = term(algebra);
            if (minus) {
                f -= g;
            } else {
                f += g;
            }
        }
        return f;
    }

    SuperPolynomial term(const AlgebraPtr& algebra)
    {
        SuperPolynomial f = unary(algebra);
        while (at("*")) {
            take();
            f = mul(f, unary(algebra));
        }
        return f;
    }

    SuperPolynomial unary(const AlgebraPtr& algebra)
    {
        if (at("-")) {
            take();
            return -unary(algebra);
        }
        return power_expr(algebra);
    }

    SuperPolynomial power_expr(const AlgebraPtr& algebra)
    {
        SuperPolynomial f = primary(algebra);
        if (at("^")) {
            take();
            f = power(f, expect_unsigned("exponent", max_exponent));
        }
        return f;
    }

    SuperPolynomial primary(const AlgebraPtr& algebra)
    {
        const Token& t = peek();
        if (t.kind == Tok::Int) {
            take();
            Rational value(mpz_class(t.text));
            if (at("/")) {
                take();
                if (peek().kind != Tok::Int) {
                    fail(DiagnosticKind::Syntax, "expected a denominator but found " + describe(peek()), peek().span);
                }
                const Token& den = take();
                const mpz_class q(den.text);
                if (q == 0) {
                    fail(DiagnosticKind::Syntax, "zero denominator", den.span);
                }
                value /= Rational(q);
            }
            return SuperPolynomial(algebra, value);
        }
        if (t.kind == Tok::Ident) {
            take();
            if (!algebra->contains(t.text)) {
                fail(DiagnosticKind::Undeclared, "undeclared identifier '" + t.text + "'", t.span);
            }
            return SuperPolynomial::variable(algebra, t.text);
        }
        if (at("(")) {
            take();
            SuperPolynomial f = expr(algebra);
            expect(")");
            return f;
        }
        fail(DiagnosticKind::Syntax, "expected an expression but found " + describe(t), t.span);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

AlgebraPtr curve_algebra(const AlgebraPtr& params)
{
    return Algebra::join(*params, *Algebra::make({{"t", Parity::Even, 0, 0}}));
}

Document parse(std::string_view text)
{
    return Parser(text).document();
}

SuperPolynomial parse_expression(std::string_view text, const AlgebraPtr& algebra)
{
    return Parser(text).lone_expression(algebra);
}

} // namespace sjet
