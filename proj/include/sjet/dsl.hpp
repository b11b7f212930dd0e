#pragma once

#include "sjet/errors.hpp"
#include "sjet/fields.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sjet {

/// Location of a parsed element. Lines and columns start at 1; offset and
/// length are in bytes.
struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t offset = 0;
    std::size_t length = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class DiagnosticKind { Syntax, Undeclared, Duplicate, Parity, Coverage, Order };

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
    DiagnosticKind kind;
    std::string message;
    SourceSpan span;
};

class ParseError : public Error {
public:
    explicit ParseError(Diagnostic diagnostic);
    const Diagnostic& diagnostic() const { return diagnostic_; }

private:
    Diagnostic diagnostic_;
};

struct ChartDecl {
    Chart chart;
    SourceSpan span{};
};

struct ParamsDecl {
    ParameterAlgebra params;
    SourceSpan span{};
};

struct MorphismDecl {
    std::string name;
    Morphism morphism;
    SourceSpan span{};
};

struct CurveDecl {
    std::string name;
    SCurve curve;
    SourceSpan span{};
};

/// A field on the declared chart `base`, or on PiT(T(order) base) when an
/// order is given.
struct FieldDecl {
    std::string name;
    std::string base;
    std::optional<unsigned> order;
    VectorField field;
    SourceSpan span{};
};

using Declaration = std::variant<ChartDecl, ParamsDecl, MorphismDecl, CurveDecl, FieldDecl>;

/// Ordered declarations. Names are unique per kind and every reference must
/// resolve to an earlier declaration; `add` throws DeclarationError otherwise.
/// Equality ignores spans.
class Document {
public:
    void add(ChartDecl decl);
    void add(ParamsDecl decl);
    void add(MorphismDecl decl);
    void add(CurveDecl decl);
    void add(FieldDecl decl);

    const std::vector<Declaration>& declarations() const { return declarations_; }

    const ChartDecl* find_chart(std::string_view name) const;
    const ParamsDecl* find_params(std::string_view name) const;
    const MorphismDecl* find_morphism(std::string_view name) const;
    const CurveDecl* find_curve(std::string_view name) const;
    const FieldDecl* find_field(std::string_view name) const;

    friend bool operator==(const Document& a, const Document& b);

private:
    template <class T>
    const T* find(std::string_view name) const;

    std::vector<Declaration> declarations_;
};

/// Algebra of curve expressions: the parameters followed by the even time
/// variable t.
AlgebraPtr curve_algebra(const AlgebraPtr& params);

/// Parses a whole document, stopping at the first error. Throws ParseError.
Document parse(std::string_view text);

/// Parses a single expression over `algebra`. Throws ParseError.
SuperPolynomial parse_expression(std::string_view text, const AlgebraPtr& algebra);

std::string print_canonical(const SuperPolynomial& f);
std::string print_canonical(const Document& doc);
/// One "y = ...;" line per target coordinate.
std::string print_canonical(const Morphism& phi);
std::string print_canonical(const VectorField& x);
/// One "x = (c0, c1, ...);" line per coordinate.
std::string print_canonical(const Jet& jet);

std::string latex_name(std::string_view coordinate);
std::string latex_symbol(CanonicalField f);
std::string emit_latex(const SuperPolynomial& f);
std::string emit_latex(const Morphism& phi);
std::string emit_latex(const Jet& jet);
/// `name` is used verbatim as the LaTeX left-hand side.
std::string emit_latex(const VectorField& x, std::string_view name = "X");
std::string emit_latex(const RelationReport& report);

} // namespace sjet
