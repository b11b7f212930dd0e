#include "sjet/prolongation.hpp"

#include "sjet/errors.hpp"

#include <set>
#include <utility>

namespace sjet {

std::string jet_name(std::string_view base, unsigned r)
{
    const bool derived = base.find_first_of(".@") != std::string_view::npos;
    std::string name = derived ? "(" + std::string(base) + ")" : std::string(base);
    return name + "@" + std::to_string(r);
}

std::string differential_name(std::string_view base)
{
    return "d." + std::string(base);
}

namespace {

unsigned checked_order(int k, const char* what)
{
    if (k < 0) {
        throw DomainError(std::string(what) + " must be nonnegative, got " + std::to_string(k));
    }
    return static_cast<unsigned>(k);
}

Chart make_prolonged(const Chart& base, unsigned k)
{
    std::vector<Generator> coords;
    coords.reserve((k + 1) * base.size());
    for (unsigned r = 0; r <= k; ++r) {
        for (const auto& x : base.algebra()->generators()) {
            coords.push_back({jet_name(x.name, r), x.parity, r, x.form_degree});
        }
    }
    return Chart("T(" + std::to_string(k) + ")" + base.name(), std::move(coords));
}

Chart make_antitangent(const Chart& base)
{
    std::vector<Generator> coords(base.algebra()->generators().begin(), base.algebra()->generators().end());
    for (const auto& x : base.algebra()->generators()) {
        coords.push_back({differential_name(x.name), x.parity + Parity::Odd, x.weight, x.form_degree + 1});
    }
    return Chart("PiT(" + base.name() + ")", std::move(coords));
}

// Substitution from a morphism's domain into another algebra, sending source
// coordinate i to `images[i]` and parameters to themselves by name.
Substitution domain_substitution(const Morphism& phi, const AlgebraPtr& target, std::vector<SuperPolynomial> images)
{
    Substitution sigma(phi.domain(), target);
    for (std::size_t i = 0; i < images.size(); ++i) {
        sigma.set(i, std::move(images[i]));
    }
    for (std::size_t i = phi.source().size(); i < phi.domain()->size(); ++i) {
        sigma.set(i, SuperPolynomial::variable(target, (*phi.domain())[i].name));
    }
    return sigma;
}

} // namespace

ProlongedChart::ProlongedChart(Chart base, unsigned order)
    : base_(std::move(base))
    , order_(order)
    , chart_(make_prolonged(base_, order))
{
}

AntitangentChart::AntitangentChart(Chart base)
    : base_(std::move(base))
    , chart_(make_antitangent(base_))
{
}

ProlongedChart prolong_chart(const Chart& chart, int k)
{
    return ProlongedChart(chart, checked_order(k, "prolongation order"));
}

AntitangentChart antitangent_chart(const Chart& chart)
{
    return AntitangentChart(chart);
}

Morphism prolong_morphism(const Morphism& phi, int k)
{
    const unsigned order = checked_order(k, "prolongation order");
    require_valid(phi);
    const ProlongedChart source = prolong_chart(phi.source(), k);
    const ProlongedChart target = prolong_chart(phi.target(), k);
    const AlgebraPtr domain = morphism_domain(source.chart(), phi.params());

    SeriesSubstitution generic(phi.domain(), domain, order);
    for (std::size_t a = 0; a < phi.source().size(); ++a) {
        std::vector<SuperPolynomial> coefficients;
        for (unsigned r = 0; r <= order; ++r) {
            coefficients.push_back(SuperPolynomial::variable(domain, source.index(a, r)));
        }
        generic.set(a, TimeSeries(std::move(coefficients)));
    }
    for (std::size_t i = phi.source().size(); i < phi.domain()->size(); ++i) {
        generic.set(i, TimeSeries::constant(SuperPolynomial::variable(domain, (*phi.domain())[i].name), order));
    }

    std::vector<SuperPolynomial> assignments(target.chart().size(), SuperPolynomial(domain));
    for (std::size_t b = 0; b < phi.target().size(); ++b) {
        const TimeSeries image = series_compose(phi.assignment(b), generic);
        for (unsigned r = 0; r <= order; ++r) {
            assignments[target.index(b, r)] = image[r];
        }
    }
    return Morphism(source.chart(), target.chart(), phi.params(), std::move(assignments));
}

Morphism project(const ProlongedChart& chart, int l)
{
    if (l < 0 || static_cast<unsigned>(l) > chart.order()) {
        throw DomainError("projection order " + std::to_string(l) + " outside 0.." + std::to_string(chart.order()));
    }
    const ProlongedChart lower = prolong_chart(chart.base(), l);
    std::vector<SuperPolynomial> assignments;
    for (std::size_t i = 0; i < lower.chart().size(); ++i) {
        assignments.push_back(chart.chart().function(i));
    }
    return Morphism(chart.chart(), lower.chart(), std::move(assignments));
}

Morphism zero_section(const ProlongedChart& chart)
{
    const ProlongedChart base = prolong_chart(chart.base(), 0);
    std::vector<SuperPolynomial> assignments(chart.chart().size(), SuperPolynomial(base.chart().algebra()));
    for (std::size_t a = 0; a < chart.base().size(); ++a) {
        assignments[chart.index(a, 0)] = base.chart().function(a);
    }
    return Morphism(base.chart(), chart.chart(), std::move(assignments));
}

Morphism antitangent_morphism(const Morphism& phi)
{
    require_valid(phi);
    const AntitangentChart source = antitangent_chart(phi.source());
    const AntitangentChart target = antitangent_chart(phi.target());
    const AlgebraPtr domain = morphism_domain(source.chart(), phi.params());

    std::vector<SuperPolynomial> base_images;
    for (std::size_t a = 0; a < phi.source().size(); ++a) {
        base_images.push_back(SuperPolynomial::variable(domain, source.index(a)));
    }
    const Substitution lift = domain_substitution(phi, domain, std::move(base_images));

    std::vector<SuperPolynomial> assignments(target.chart().size(), SuperPolynomial(domain));
    for (std::size_t b = 0; b < phi.target().size(); ++b) {
        const SuperPolynomial pulled = substitute(phi.assignment(b), lift);
        SuperPolynomial differential(domain);
        for (std::size_t a = 0; a < phi.source().size(); ++a) {
            const SuperPolynomial dx = SuperPolynomial::variable(domain, source.differential_index(a));
            differential += mul(dx, partial(pulled, source.index(a)));
        }
        assignments[target.index(b)] = pulled;
        assignments[target.differential_index(b)] = std::move(differential);
    }
    return Morphism(source.chart(), target.chart(), phi.params(), std::move(assignments));
}

Morphism interchange(const Chart& chart, int k)
{
    const unsigned order = checked_order(k, "prolongation order");
    const AntitangentChart pit = antitangent_chart(chart);
    const ProlongedChart source = prolong_chart(pit.chart(), k);
    const ProlongedChart jets = prolong_chart(chart, k);
    const AntitangentChart target = antitangent_chart(jets.chart());

    std::vector<SuperPolynomial> assignments(target.chart().size(), SuperPolynomial(source.chart().algebra()));
    for (std::size_t a = 0; a < chart.size(); ++a) {
        for (unsigned r = 0; r <= order; ++r) {
            assignments[target.index(jets.index(a, r))] = source.chart().function(source.index(pit.index(a), r));
            assignments[target.differential_index(jets.index(a, r))] =
                source.chart().function(source.index(pit.differential_index(a), r));
        }
    }
    return Morphism(source.chart(), target.chart(), std::move(assignments));
}

Morphism homothety(const ProlongedChart& chart, const Rational& lambda)
{
    const AlgebraPtr scalars = Algebra::make({});
    return homothety(chart, ParameterAlgebra{}, SuperPolynomial(scalars, lambda));
}

Morphism homothety(const ProlongedChart& chart, const ParameterAlgebra& params, const SuperPolynomial& lambda)
{
    require_same_algebra(lambda.algebra(), params.algebra, "homothety scale");
    if (!lambda.has_parity(Parity::Even)) {
        throw ParityError("homothety requires an even scale");
    }
    const AlgebraPtr domain = morphism_domain(chart.chart(), params);
    const SuperPolynomial scale = embed(lambda, domain);

    std::vector<SuperPolynomial> assignments(chart.chart().size(), SuperPolynomial(domain));
    SuperPolynomial scale_power(domain, 1);
    for (unsigned r = 0; r <= chart.order(); ++r) {
        for (std::size_t a = 0; a < chart.base().size(); ++a) {
            assignments[chart.index(a, r)] = mul(scale_power, SuperPolynomial::variable(domain, chart.index(a, r)));
        }
        scale_power = mul(scale_power, scale);
    }
    return Morphism(chart.chart(), chart.chart(), params, std::move(assignments));
}

Chart product_chart(const Chart& c1, const Chart& c2)
{
    std::set<std::string, std::less<>> shared;
    for (const auto& x : c1.algebra()->generators()) {
        if (c2.algebra()->contains(x.name)) {
            shared.insert(x.name);
        }
    }
    std::string p1 = c1.name() + "_";
    std::string p2 = c2.name() + "_";
    if (p1 == p2) {
        p1 = c1.name() + "1_";
        p2 = c2.name() + "2_";
    }
    std::vector<Generator> coords;
    for (auto x : c1.algebra()->generators()) {
        if (shared.count(x.name) != 0) {
            x.name = p1 + x.name;
        }
        coords.push_back(std::move(x));
    }
    for (auto x : c2.algebra()->generators()) {
        if (shared.count(x.name) != 0) {
            x.name = p2 + x.name;
        }
        coords.push_back(std::move(x));
    }
    return Chart(c1.name() + "*" + c2.name(), std::move(coords));
}

Morphism pair_morphism(const Morphism& phi1, const Morphism& phi2)
{
    if (!phi1.params().empty() || !phi2.params().empty()) {
        throw DomainError("pair morphisms of parameterised families are not supported");
    }
    const Chart source = product_chart(phi1.source(), phi2.source());
    const Chart target = product_chart(phi1.target(), phi2.target());
    const std::size_t offset = phi1.source().size();

    Substitution left(phi1.domain(), source.algebra());
    for (std::size_t i = 0; i < phi1.source().size(); ++i) {
        left.set(i, source.function(i));
    }
    Substitution right(phi2.domain(), source.algebra());
    for (std::size_t i = 0; i < phi2.source().size(); ++i) {
        right.set(i, source.function(offset + i));
    }

    std::vector<SuperPolynomial> assignments;
    for (const auto& a : phi1.assignments()) {
        assignments.push_back(substitute(a, left));
    }
    for (const auto& a : phi2.assignments()) {
        assignments.push_back(substitute(a, right));
    }
    return Morphism(source, target, std::move(assignments));
}

Morphism product_identification(const Chart& c1, const Chart& c2, int k)
{
    const unsigned order = checked_order(k, "prolongation order");
    const ProlongedChart joint = prolong_chart(product_chart(c1, c2), k);
    const ProlongedChart jets1 = prolong_chart(c1, k);
    const ProlongedChart jets2 = prolong_chart(c2, k);
    const Chart target = product_chart(jets1.chart(), jets2.chart());

    std::vector<SuperPolynomial> assignments(target.size(), SuperPolynomial(joint.chart().algebra()));
    for (unsigned r = 0; r <= order; ++r) {
        for (std::size_t a = 0; a < c1.size(); ++a) {
            assignments[jets1.index(a, r)] = joint.chart().function(joint.index(a, r));
        }
        for (std::size_t b = 0; b < c2.size(); ++b) {
            assignments[jets1.chart().size() + jets2.index(b, r)] =
                joint.chart().function(joint.index(c1.size() + b, r));
        }
    }
    return Morphism(joint.chart(), target, std::move(assignments));
}

} // namespace sjet
