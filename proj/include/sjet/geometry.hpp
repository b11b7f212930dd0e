#pragma once

#include "sjet/polynomial.hpp"
#include "sjet/series.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sjet {

/// Superdimension (n|m): counts of even and odd coordinates.
struct Dimension {
    std::size_t even = 0;
    std::size_t odd = 0;
    friend bool operator==(const Dimension&, const Dimension&) = default;
};

/// Local model of a supermanifold: an ordered list of parity-tagged
/// coordinates.
class Chart {
public:
    Chart(std::string name, std::vector<Generator> coordinates);
    Chart(std::string name, AlgebraPtr coordinates);

    const std::string& name() const { return name_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t size() const { return algebra_->size(); }
    const Generator& coordinate(std::size_t i) const { return (*algebra_)[i]; }
    Dimension dimension() const { return {algebra_->count(Parity::Even), algebra_->count(Parity::Odd)}; }

    /// The coordinate function x^A as an element of the chart algebra.
    SuperPolynomial function(std::string_view coordinate) const;
    SuperPolynomial function(std::size_t index) const;

    friend bool operator==(const Chart& a, const Chart& b)
    {
        return a.name_ == b.name_ && same_algebra(a.algebra_, b.algebra_);
    }

private:
    std::string name_;
    AlgebraPtr algebra_;
};

/// Concrete stand-in for the probe supermanifold S: C(S) is the free
/// supercommutative polynomial algebra on these generators.
struct ParameterAlgebra {
    std::string name;
    AlgebraPtr algebra;

    ParameterAlgebra();
    ParameterAlgebra(std::string name, std::vector<Generator> generators);
    ParameterAlgebra(std::string name, AlgebraPtr algebra);

    bool empty() const { return algebra->size() == 0; }

    friend bool operator==(const ParameterAlgebra& a, const ParameterAlgebra& b)
    {
        return a.name == b.name && same_algebra(a.algebra, b.algebra);
    }
};

/// Parity-preserving map between charts, given by the pullbacks of the
/// target coordinates. Assignments are polynomials over the source
/// coordinates followed by the (optional) parameter generators, so a
/// Morphism may also describe a family of maps parameterised by S.
class Morphism {
public:
    /// Throws CoverageError unless every target coordinate is assigned and
    /// AlgebraError when an assignment lives over another algebra. Parity is
    /// not enforced here; see validate_morphism.
    Morphism(Chart source, Chart target, std::vector<SuperPolynomial> assignments);
    Morphism(Chart source, Chart target, ParameterAlgebra params, std::vector<SuperPolynomial> assignments);

    static Morphism identity(const Chart& chart);

    const Chart& source() const { return source_; }
    const Chart& target() const { return target_; }
    const ParameterAlgebra& params() const { return params_; }
    /// Algebra of the assignments: source coordinates then parameters.
    const AlgebraPtr& domain() const { return domain_; }

    const std::vector<SuperPolynomial>& assignments() const { return assignments_; }
    const SuperPolynomial& assignment(std::size_t target_index) const { return assignments_[target_index]; }
    const SuperPolynomial& assignment(std::string_view target_coordinate) const;

    /// Pullback of a function on the target chart.
    SuperPolynomial pullback(const SuperPolynomial& g) const;

    friend bool operator==(const Morphism& a, const Morphism& b);

private:
    Chart source_;
    Chart target_;
    ParameterAlgebra params_;
    AlgebraPtr domain_;
    std::vector<SuperPolynomial> assignments_;
};

/// Domain algebra used by a morphism with the given source and parameters.
AlgebraPtr morphism_domain(const Chart& source, const ParameterAlgebra& params);

/// outer o inner. Throws CompositionError unless inner's target is outer's
/// source. Parameters of both factors are merged by name.
Morphism compose(const Morphism& outer, const Morphism& inner);

struct ValidationReport {
    struct Entry {
        std::string coordinate;
        Parity expected;
        std::optional<Parity> actual; // nullopt: mixed parity
        bool ok;
    };
    std::vector<Entry> entries;

    bool valid() const;
};

ValidationReport validate_morphism(const Morphism& phi);

/// Throws ParityError naming the first offending coordinate.
void require_valid(const Morphism& phi);

/// An S-point of a chart: one homogeneous element of C(S) per coordinate.
class SPoint {
public:
    /// Missing coordinates raise CoverageError, unknown ones
    /// DeclarationError, parity mismatches ParityError.
    SPoint(Chart chart, ParameterAlgebra params, const std::map<std::string, SuperPolynomial, std::less<>>& values);
    SPoint(Chart chart, ParameterAlgebra params, std::vector<SuperPolynomial> values);

    const Chart& chart() const { return chart_; }
    const ParameterAlgebra& params() const { return params_; }
    const std::vector<SuperPolynomial>& values() const { return values_; }

private:
    Chart chart_;
    ParameterAlgebra params_;
    std::vector<SuperPolynomial> values_;
};

/// f evaluated at an S-point: an element of C(S).
SuperPolynomial evaluate_function(const SuperPolynomial& f, const SPoint& m);

/// A curve parameterised by S, stored as the polynomial (in t) coordinate
/// expressions of degree at most `order`.
class SCurve {
public:
    SCurve(Chart chart, ParameterAlgebra params, unsigned order, std::vector<TimeSeries> components);

    const Chart& chart() const { return chart_; }
    const ParameterAlgebra& params() const { return params_; }
    unsigned order() const { return order_; }
    const std::vector<TimeSeries>& components() const { return components_; }
    const TimeSeries& component(std::size_t i) const { return components_[i]; }

    /// The curve as a series substitution for functions on the chart.
    SeriesSubstitution as_substitution() const;

    friend bool operator==(const SCurve& a, const SCurve& b)
    {
        return a.chart_ == b.chart_ && a.params_ == b.params_ && a.order_ == b.order_ &&
               a.components_ == b.components_;
    }

private:
    Chart chart_;
    ParameterAlgebra params_;
    unsigned order_;
    std::vector<TimeSeries> components_;
};

/// Normalised Taylor coefficients (1/r!) d^r/dt^r of each coordinate of a
/// curve; an S-point of the k-th order tangent bundle.
class Jet {
public:
    Jet(Chart chart, ParameterAlgebra params, unsigned order, std::vector<std::vector<SuperPolynomial>> coefficients);

    const Chart& chart() const { return chart_; }
    const ParameterAlgebra& params() const { return params_; }
    unsigned order() const { return order_; }
    const std::vector<std::vector<SuperPolynomial>>& coefficients() const { return coefficients_; }
    const SuperPolynomial& at(std::size_t coordinate, unsigned r) const { return coefficients_[coordinate][r]; }

    friend bool operator==(const Jet& a, const Jet& b)
    {
        return a.chart_ == b.chart_ && same_algebra(a.params_.algebra, b.params_.algebra) && a.order_ == b.order_ &&
               a.coefficients_ == b.coefficients_;
    }

private:
    Chart chart_;
    ParameterAlgebra params_;
    unsigned order_;
    std::vector<std::vector<SuperPolynomial>> coefficients_;
};

/// First k+1 Taylor coefficients of a polynomial series about t0.
std::vector<SuperPolynomial> series_jet(const TimeSeries& s, unsigned k, const Rational& t0);

/// Throws OrderError when k exceeds the stored order.
Jet jet_of_curve(const SCurve& gamma, unsigned k, const Rational& t0 = 0);

/// Coordinate criterion for contact to order k at t = 0. Throws
/// ComparisonError for curves on different charts or parameter algebras and
/// OrderError when either curve is stored below order k.
bool contact_equal(const SCurve& gamma, const SCurve& delta, unsigned k);

/// f o gamma as a superfunction on the line.
TimeSeries function_along(const SuperPolynomial& f, const SCurve& gamma);

/// Pulls the curve back along a parameter change psi : P -> S, given as a
/// substitution from S's generators into C(P).
SCurve reparameterise(const SCurve& gamma, const Substitution& psi, std::string target_name = {});

/// Applies a parameter change to every entry of a jet.
Jet substitute(const Jet& jet, const Substitution& psi, std::string target_name = {});

} // namespace sjet
