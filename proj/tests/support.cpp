#include "support.hpp"

namespace sjet::testing {

Rational Random::coefficient()
{
    int p = 0;
    while (p == 0) {
        p = integer(-3, 3);
    }
    const int q = chance(0.2) ? integer(2, 4) : 1;
    Rational c(p, q);
    c.canonicalize();
    return c;
}

Chart random_chart(Random& rng, const std::string& name, const std::string& even, const std::string& odd,
                   std::size_t max_even, std::size_t max_odd)
{
    std::size_t n = 0;
    std::size_t m = 0;
    while (n + m == 0) {
        n = static_cast<std::size_t>(rng.integer(0, static_cast<int>(max_even)));
        m = static_cast<std::size_t>(rng.integer(0, static_cast<int>(max_odd)));
    }
    std::vector<Generator> coords;
    for (std::size_t i = 1; i <= n; ++i) {
        coords.push_back({even + std::to_string(i), Parity::Even, 0, 0});
    }
    for (std::size_t i = 1; i <= m; ++i) {
        coords.push_back({odd + std::to_string(i), Parity::Odd, 0, 0});
    }
    return Chart(name, std::move(coords));
}

namespace {

SuperPolynomial random_monomial(Random& rng, const AlgebraPtr& algebra, unsigned max_degree)
{
    SuperPolynomial m(algebra, rng.coefficient());
    if (algebra->size() == 0) {
        return m;
    }
    const int degree = rng.integer(0, static_cast<int>(max_degree));
    for (int i = 0; i < degree; ++i) {
        m = mul(m, SuperPolynomial::variable(algebra, rng.index(algebra->size())));
    }
    return m;
}

} // namespace

SuperPolynomial random_polynomial(Random& rng, const AlgebraPtr& algebra, unsigned max_degree,
                                  std::size_t max_terms)
{
    SuperPolynomial f(algebra);
    const int terms = rng.integer(0, static_cast<int>(max_terms));
    for (int i = 0; i < terms; ++i) {
        f += random_monomial(rng, algebra, max_degree);
    }
    return f;
}

SuperPolynomial random_homogeneous(Random& rng, const AlgebraPtr& algebra, Parity parity, unsigned max_degree,
                                   std::size_t max_terms)
{
    SuperPolynomial f(algebra);
    const int terms = rng.integer(0, static_cast<int>(max_terms));
    for (int i = 0, attempts = 0; i < terms && attempts < 50; ++attempts) {
        SuperPolynomial m = random_monomial(rng, algebra, max_degree);
        if (!m.is_zero() && m.parity() == parity) {
            f += m;
            ++i;
        }
    }
    return f;
}

Morphism random_morphism(Random& rng, const Chart& source, const Chart& target, unsigned max_degree)
{
    std::vector<SuperPolynomial> assignments;
    for (std::size_t i = 0; i < target.size(); ++i) {
        assignments.push_back(random_homogeneous(rng, source.algebra(), target.coordinate(i).parity, max_degree, 3));
    }
    return Morphism(source, target, std::move(assignments));
}

ParameterAlgebra random_params(Random& rng, const std::string& name, const std::string& stem)
{
    std::vector<Generator> gens;
    const int count = rng.integer(1, 3);
    for (int i = 1; i <= count; ++i) {
        gens.push_back({stem + std::to_string(i), rng.chance(0.5) ? Parity::Odd : Parity::Even, 0, 0});
    }
    return ParameterAlgebra(name, std::move(gens));
}

SCurve random_curve(Random& rng, const Chart& chart, const ParameterAlgebra& params, unsigned order)
{
    std::vector<TimeSeries> components;
    for (std::size_t a = 0; a < chart.size(); ++a) {
        std::vector<SuperPolynomial> coefficients;
        for (unsigned r = 0; r <= order; ++r) {
            coefficients.push_back(random_homogeneous(rng, params.algebra, chart.coordinate(a).parity, 2, 2));
        }
        components.emplace_back(std::move(coefficients));
    }
    return SCurve(chart, params, order, std::move(components));
}

Substitution random_parameter_change(Random& rng, const ParameterAlgebra& from, const ParameterAlgebra& to)
{
    Substitution psi(from.algebra, to.algebra);
    for (std::size_t i = 0; i < from.algebra->size(); ++i) {
        psi.set(i, random_homogeneous(rng, to.algebra, (*from.algebra)[i].parity, 2, 3));
    }
    return psi;
}

VectorField random_field(Random& rng, const Chart& chart, Parity parity, unsigned max_degree)
{
    std::vector<SuperPolynomial> values;
    for (std::size_t i = 0; i < chart.size(); ++i) {
        values.push_back(random_homogeneous(rng, chart.algebra(), parity + chart.coordinate(i).parity, max_degree, 2));
    }
    return VectorField(chart, parity, std::move(values));
}

Document random_document(Random& rng)
{
    Document doc;
    std::vector<Chart> charts;
    charts.reserve(2);
    charts.push_back(random_chart(rng, "M", "x", "th"));
    if (rng.chance(0.6)) {
        charts.push_back(random_chart(rng, "N", "y", "eta"));
    }
    for (const auto& c : charts) {
        doc.add(ChartDecl{c});
    }
    std::optional<ParameterAlgebra> params;
    if (rng.chance(0.7)) {
        params = random_params(rng, "S", "s");
        doc.add(ParamsDecl{*params});
    }
    const int morphisms = rng.integer(0, 2);
    for (int i = 0; i < morphisms; ++i) {
        const Chart& src = charts[rng.index(charts.size())];
        const Chart& dst = charts[rng.index(charts.size())];
        doc.add(MorphismDecl{"f" + std::to_string(i), random_morphism(rng, src, dst, 3)});
    }
    if (params) {
        const int curves = rng.integer(0, 2);
        for (int i = 0; i < curves; ++i) {
            const Chart& c = charts[rng.index(charts.size())];
            doc.add(CurveDecl{"c" + std::to_string(i),
                              random_curve(rng, c, *params, static_cast<unsigned>(rng.integer(0, 3)))});
        }
    }
    const int fields = rng.integer(0, 2);
    for (int i = 0; i < fields; ++i) {
        const Chart& base = charts[rng.index(charts.size())];
        std::optional<unsigned> order;
        if (rng.chance(0.5)) {
            order = static_cast<unsigned>(rng.integer(0, 2));
        }
        const Chart chart =
            order ? antitangent_chart(prolong_chart(base, static_cast<int>(*order)).chart()).chart() : base;
        const Parity parity = rng.chance(0.5) ? Parity::Odd : Parity::Even;
        doc.add(FieldDecl{"X" + std::to_string(i), base.name(), order, random_field(rng, chart, parity)});
    }
    return doc;
}

Morphism second_order_rules(const Morphism& phi)
{
    const Chart& base = phi.source();
    const std::size_t n = base.size();
    std::vector<Generator> jets;
    for (unsigned r = 0; r <= 2; ++r) {
        for (const auto& x : base.algebra()->generators()) {
            jets.push_back({x.name + "@" + std::to_string(r), x.parity, r, x.form_degree});
        }
    }
    const Chart source("J2" + base.name(), jets);
    const AlgebraPtr& alg = source.algebra();
    auto jet = [&](std::size_t a, unsigned r) { return SuperPolynomial::variable(alg, r * n + a); };

    Substitution at_base(base.algebra(), alg);
    for (std::size_t a = 0; a < n; ++a) {
        at_base.set(a, jet(a, 0));
    }
    auto at = [&](const SuperPolynomial& f) { return substitute(f, at_base); };

    std::vector<Generator> target_jets;
    for (unsigned r = 0; r <= 2; ++r) {
        for (const auto& y : phi.target().algebra()->generators()) {
            target_jets.push_back({y.name + "@" + std::to_string(r), y.parity, r, y.form_degree});
        }
    }
    const std::size_t m = phi.target().size();
    std::vector<SuperPolynomial> images(3 * m, SuperPolynomial(alg));
    for (std::size_t b = 0; b < m; ++b) {
        const SuperPolynomial& f = phi.assignment(b);
        SuperPolynomial first(alg);
        SuperPolynomial second(alg);
        for (std::size_t B = 0; B < n; ++B) {
            const SuperPolynomial dB = partial(f, B);
            first += mul(jet(B, 1), at(dB));
            second += mul(jet(B, 2), at(dB));
            for (std::size_t C = 0; C < n; ++C) {
                second += mul(mul(jet(B, 1), jet(C, 1)), at(partial(dB, C))) * Rational(1, 2);
            }
        }
        images[b] = at(f);
        images[m + b] = std::move(first);
        images[2 * m + b] = std::move(second);
    }
    return Morphism(source, Chart("J2" + phi.target().name(), target_jets), std::move(images));
}

TimeSeries compose_by_differentiation(const SuperPolynomial& f, const SeriesSubstitution& curve)
{
    const AlgebraPtr& params = curve.target();
    const AlgebraPtr with_time = Algebra::join(*params, *Algebra::make({{"time", Parity::Even, 0, 0}}));
    const std::size_t t = params->size();
    const SuperPolynomial time = SuperPolynomial::variable(with_time, t);

    Substitution along(curve.source(), with_time);
    for (std::size_t i = 0; i < curve.source()->size(); ++i) {
        SuperPolynomial x(with_time);
        const TimeSeries& s = *curve.image(i);
        for (unsigned r = 0; r <= s.order(); ++r) {
            x += mul(embed(s[r], with_time), power(time, r));
        }
        along.set(i, x);
    }
    Substitution at_zero(with_time, params);
    for (std::size_t i = 0; i < t; ++i) {
        at_zero.set(i, SuperPolynomial::variable(params, i));
    }
    at_zero.set(t, SuperPolynomial(params));

    SuperPolynomial g = substitute(f, along);
    std::vector<SuperPolynomial> coefficients;
    for (unsigned r = 0; r <= curve.order(); ++r) {
        coefficients.push_back(substitute(g, at_zero) * Rational(1 / factorial(r)));
        g = partial(g, t);
    }
    return TimeSeries(std::move(coefficients));
}

} // namespace sjet::testing
