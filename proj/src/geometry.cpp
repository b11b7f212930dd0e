#include "sjet/geometry.hpp"

#include "sjet/errors.hpp"

#include <utility>

namespace sjet {

// ------------------------------------------------------------------- Chart

Chart::Chart(std::string name, std::vector<Generator> coordinates)
    : Chart(std::move(name), Algebra::make(std::move(coordinates)))
{
}

Chart::Chart(std::string name, AlgebraPtr coordinates)
    : name_(std::move(name))
    , algebra_(std::move(coordinates))
{
}

SuperPolynomial Chart::function(std::string_view coordinate) const
{
    return SuperPolynomial::variable(algebra_, coordinate);
}

SuperPolynomial Chart::function(std::size_t index) const
{
    return SuperPolynomial::variable(algebra_, index);
}

ParameterAlgebra::ParameterAlgebra()
    : algebra(Algebra::make({}))
{
}

ParameterAlgebra::ParameterAlgebra(std::string name_, std::vector<Generator> generators)
    : name(std::move(name_))
    , algebra(Algebra::make(std::move(generators)))
{
}

ParameterAlgebra::ParameterAlgebra(std::string name_, AlgebraPtr algebra_)
    : name(std::move(name_))
    , algebra(std::move(algebra_))
{
}

// ---------------------------------------------------------------- Morphism

AlgebraPtr morphism_domain(const Chart& source, const ParameterAlgebra& params)
{
    if (params.empty()) {
        return source.algebra();
    }
    return Algebra::join(*source.algebra(), *params.algebra);
}

Morphism::Morphism(Chart source, Chart target, std::vector<SuperPolynomial> assignments)
    : Morphism(std::move(source), std::move(target), ParameterAlgebra{}, std::move(assignments))
{
}

Morphism::Morphism(Chart source, Chart target, ParameterAlgebra params, std::vector<SuperPolynomial> assignments)
    : source_(std::move(source))
    , target_(std::move(target))
    , params_(std::move(params))
    , domain_(morphism_domain(source_, params_))
    , assignments_(std::move(assignments))
{
    if (assignments_.size() != target_.size()) {
        throw CoverageError("morphism assigns " + std::to_string(assignments_.size()) + " of " +
                            std::to_string(target_.size()) + " target coordinates");
    }
    for (auto& a : assignments_) {
        require_same_algebra(a.algebra(), domain_, "morphism assignment");
    }
}

Morphism Morphism::identity(const Chart& chart)
{
    std::vector<SuperPolynomial> assignments;
    for (std::size_t i = 0; i < chart.size(); ++i) {
        assignments.push_back(chart.function(i));
    }
    return Morphism(chart, chart, std::move(assignments));
}

const SuperPolynomial& Morphism::assignment(std::string_view target_coordinate) const
{
    return assignments_[target_.algebra()->index_of(target_coordinate)];
}

SuperPolynomial Morphism::pullback(const SuperPolynomial& g) const
{
    Substitution sigma(target_.algebra(), domain_);
    for (std::size_t i = 0; i < assignments_.size(); ++i) {
        sigma.set(i, assignments_[i]);
    }
    return substitute(g, sigma);
}

bool operator==(const Morphism& a, const Morphism& b)
{
    return same_algebra(a.source_.algebra(), b.source_.algebra()) &&
           same_algebra(a.target_.algebra(), b.target_.algebra()) && same_algebra(a.domain_, b.domain_) &&
           a.assignments_ == b.assignments_;
}

namespace {

ParameterAlgebra merge_params(const ParameterAlgebra& first, const ParameterAlgebra& second)
{
    if (second.empty() || same_algebra(first.algebra, second.algebra)) {
        return first;
    }
    if (first.empty()) {
        return second;
    }
    std::vector<Generator> merged(first.algebra->generators().begin(), first.algebra->generators().end());
    for (const auto& g : second.algebra->generators()) {
        if (auto i = first.algebra->find(g.name)) {
            if ((*first.algebra)[*i] != g) {
                throw CompositionError("parameter '" + g.name + "' declared differently in the two factors");
            }
            continue;
        }
        merged.push_back(g);
    }
    return ParameterAlgebra(first.name.empty() ? second.name : first.name, Algebra::make(std::move(merged)));
}

} // namespace

Morphism compose(const Morphism& outer, const Morphism& inner)
{
    if (!same_algebra(inner.target().algebra(), outer.source().algebra())) {
        throw CompositionError("cannot compose: target of the inner morphism is not the source of the outer one");
    }
    ParameterAlgebra params = merge_params(inner.params(), outer.params());
    const AlgebraPtr domain = morphism_domain(inner.source(), params);

    Substitution sigma(outer.domain(), domain);
    for (std::size_t i = 0; i < outer.source().size(); ++i) {
        sigma.set(i, embed(inner.assignment(i), domain));
    }
    for (std::size_t i = outer.source().size(); i < outer.domain()->size(); ++i) {
        sigma.set(i, SuperPolynomial::variable(domain, (*outer.domain())[i].name));
    }

    std::vector<SuperPolynomial> assignments;
    assignments.reserve(outer.target().size());
    for (const auto& a : outer.assignments()) {
        assignments.push_back(substitute(a, sigma));
    }
    return Morphism(inner.source(), outer.target(), std::move(params), std::move(assignments));
}

bool ValidationReport::valid() const
{
    for (const auto& e : entries) {
        if (!e.ok) {
            return false;
        }
    }
    return true;
}

ValidationReport validate_morphism(const Morphism& phi)
{
    ValidationReport report;
    for (std::size_t i = 0; i < phi.target().size(); ++i) {
        const auto& y = phi.target().coordinate(i);
        const auto& a = phi.assignment(i);
        report.entries.push_back({y.name, y.parity, a.parity(), a.has_parity(y.parity)});
    }
    return report;
}

void require_valid(const Morphism& phi)
{
    for (const auto& e : validate_morphism(phi).entries) {
        if (!e.ok) {
            throw ParityError("assignment of " + std::string(to_string(e.expected)) + " coordinate '" + e.coordinate +
                              "' is not homogeneous of that parity");
        }
    }
}

// ------------------------------------------------------------------ SPoint

namespace {

std::vector<SuperPolynomial> ordered_values(const Chart& chart,
                                            const std::map<std::string, SuperPolynomial, std::less<>>& values)
{
    for (const auto& entry : values) {
        chart.algebra()->index_of(entry.first);
    }
    std::vector<SuperPolynomial> ordered;
    for (std::size_t i = 0; i < chart.size(); ++i) {
        auto it = values.find(chart.coordinate(i).name);
        if (it == values.end()) {
            throw CoverageError("S-point leaves coordinate '" + chart.coordinate(i).name + "' unassigned");
        }
        ordered.push_back(it->second);
    }
    return ordered;
}

} // namespace

SPoint::SPoint(Chart chart, ParameterAlgebra params, const std::map<std::string, SuperPolynomial, std::less<>>& values)
    : SPoint(chart, std::move(params), ordered_values(chart, values))
{
}

SPoint::SPoint(Chart chart, ParameterAlgebra params, std::vector<SuperPolynomial> values)
    : chart_(std::move(chart))
    , params_(std::move(params))
    , values_(std::move(values))
{
    if (values_.size() != chart_.size()) {
        throw CoverageError("S-point must assign every chart coordinate");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        require_same_algebra(values_[i].algebra(), params_.algebra, "S-point value");
        const auto& x = chart_.coordinate(i);
        if (!values_[i].has_parity(x.parity)) {
            throw ParityError("S-point value of '" + x.name + "' must be " + std::string(to_string(x.parity)));
        }
    }
}

SuperPolynomial evaluate_function(const SuperPolynomial& f, const SPoint& m)
{
    require_same_algebra(f.algebra(), m.chart().algebra(), "function evaluation");
    Substitution sigma(m.chart().algebra(), m.params().algebra);
    for (std::size_t i = 0; i < m.values().size(); ++i) {
        sigma.set(i, m.values()[i]);
    }
    return substitute(f, sigma);
}

// ------------------------------------------------------------ SCurve / Jet

SCurve::SCurve(Chart chart, ParameterAlgebra params, unsigned order, std::vector<TimeSeries> components)
    : chart_(std::move(chart))
    , params_(std::move(params))
    , order_(order)
    , components_(std::move(components))
{
    if (components_.size() != chart_.size()) {
        throw CoverageError("curve must give a component for every chart coordinate");
    }
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& x = chart_.coordinate(i);
        if (components_[i].order() != order_) {
            throw OrderError("component '" + x.name + "' has order " + std::to_string(components_[i].order()) +
                             ", curve order is " + std::to_string(order_));
        }
        require_same_algebra(components_[i].algebra(), params_.algebra, "curve component");
        if (!components_[i].has_parity(x.parity)) {
            throw ParityError("component '" + x.name + "' must be " + std::string(to_string(x.parity)) +
                              " in every degree");
        }
    }
}

SeriesSubstitution SCurve::as_substitution() const
{
    SeriesSubstitution s(chart_.algebra(), params_.algebra, order_);
    for (std::size_t i = 0; i < components_.size(); ++i) {
        s.set(i, components_[i]);
    }
    return s;
}

Jet::Jet(Chart chart, ParameterAlgebra params, unsigned order, std::vector<std::vector<SuperPolynomial>> coefficients)
    : chart_(std::move(chart))
    , params_(std::move(params))
    , order_(order)
    , coefficients_(std::move(coefficients))
{
    if (coefficients_.size() != chart_.size()) {
        throw CoverageError("jet must list every chart coordinate");
    }
    for (std::size_t i = 0; i < coefficients_.size(); ++i) {
        const auto& x = chart_.coordinate(i);
        if (coefficients_[i].size() != order_ + 1) {
            throw OrderError("jet of '" + x.name + "' needs " + std::to_string(order_ + 1) + " entries");
        }
        for (const auto& c : coefficients_[i]) {
            require_same_algebra(c.algebra(), params_.algebra, "jet entry");
            if (!c.has_parity(x.parity)) {
                throw ParityError("jet entries of '" + x.name + "' must be " + std::string(to_string(x.parity)));
            }
        }
    }
}

std::vector<SuperPolynomial> series_jet(const TimeSeries& s, unsigned k, const Rational& t0)
{
    if (k > s.order()) {
        throw OrderError("jet order " + std::to_string(k) + " exceeds stored order " + std::to_string(s.order()));
    }
    // Binomial shift t -> t + t0 of the stored polynomial.
    std::vector<SuperPolynomial> out;
    out.reserve(k + 1);
    for (unsigned r = 0; r <= k; ++r) {
        SuperPolynomial c(s.algebra());
        Rational shift_power = 1;
        for (unsigned j = r; j <= s.order(); ++j) {
            c += s[j] * (binomial(j, r) * shift_power);
            shift_power *= t0;
        }
        out.push_back(std::move(c));
    }
    return out;
}

Jet jet_of_curve(const SCurve& gamma, unsigned k, const Rational& t0)
{
    std::vector<std::vector<SuperPolynomial>> coefficients;
    for (const auto& c : gamma.components()) {
        coefficients.push_back(series_jet(c, k, t0));
    }
    return Jet(gamma.chart(), gamma.params(), k, std::move(coefficients));
}

bool contact_equal(const SCurve& gamma, const SCurve& delta, unsigned k)
{
    if (!same_algebra(gamma.chart().algebra(), delta.chart().algebra())) {
        throw ComparisonError("curves live on different charts");
    }
    if (!same_algebra(gamma.params().algebra, delta.params().algebra)) {
        throw ComparisonError("curves are parameterised by different algebras");
    }
    return jet_of_curve(gamma, k).coefficients() == jet_of_curve(delta, k).coefficients();
}

TimeSeries function_along(const SuperPolynomial& f, const SCurve& gamma)
{
    return series_compose(f, gamma.as_substitution());
}

SCurve reparameterise(const SCurve& gamma, const Substitution& psi, std::string target_name)
{
    require_same_algebra(psi.source(), gamma.params().algebra, "reparameterisation");
    std::vector<TimeSeries> components;
    for (const auto& c : gamma.components()) {
        std::vector<SuperPolynomial> coefficients;
        for (const auto& a : c.coefficients()) {
            coefficients.push_back(substitute(a, psi));
        }
        components.emplace_back(std::move(coefficients));
    }
    return SCurve(gamma.chart(), ParameterAlgebra(std::move(target_name), psi.target()), gamma.order(),
                  std::move(components));
}

Jet substitute(const Jet& jet, const Substitution& psi, std::string target_name)
{
    require_same_algebra(psi.source(), jet.params().algebra, "jet substitution");
    std::vector<std::vector<SuperPolynomial>> coefficients;
    for (const auto& row : jet.coefficients()) {
        auto& out = coefficients.emplace_back();
        for (const auto& a : row) {
            out.push_back(substitute(a, psi));
        }
    }
    return Jet(jet.chart(), ParameterAlgebra(std::move(target_name), psi.target()), jet.order(),
               std::move(coefficients));
}

} // namespace sjet
