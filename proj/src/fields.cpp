#include "sjet/fields.hpp"

#include "sjet/errors.hpp"

#include <utility>

namespace sjet {

VectorField::VectorField(Chart chart, Parity parity, std::vector<SuperPolynomial> values)
    : chart_(std::move(chart))
    , parity_(parity)
    , values_(std::move(values))
{
    if (values_.size() != chart_.size()) {
        throw CoverageError("vector field must give a value on every coordinate");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        require_same_algebra(values_[i].algebra(), chart_.algebra(), "vector field value");
        const auto& x = chart_.coordinate(i);
        const Parity expected = parity_ + x.parity;
        if (!values_[i].has_parity(expected)) {
            throw ParityError("value on '" + x.name + "' must be " + std::string(to_string(expected)) + " for an " +
                              std::string(to_string(parity_)) + " field");
        }
    }
}

VectorField VectorField::zero(const Chart& chart, Parity parity)
{
    return VectorField(chart, parity, std::vector<SuperPolynomial>(chart.size(), SuperPolynomial(chart.algebra())));
}

const SuperPolynomial& VectorField::value(std::string_view coordinate) const
{
    return values_[chart_.algebra()->index_of(coordinate)];
}

bool VectorField::is_zero() const
{
    for (const auto& v : values_) {
        if (!v.is_zero()) {
            return false;
        }
    }
    return true;
}

VectorField& VectorField::operator+=(const VectorField& o)
{
    require_same_algebra(chart_.algebra(), o.chart_.algebra(), "vector field sum");
    if (parity_ != o.parity_) {
        throw ParityError("cannot add vector fields of different parity");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        values_[i] += o.values_[i];
    }
    return *this;
}

VectorField& VectorField::operator-=(const VectorField& o)
{
    return *this += -o;
}

VectorField& VectorField::operator*=(const Rational& c)
{
    for (auto& v : values_) {
        v *= c;
    }
    return *this;
}

SuperPolynomial apply(const VectorField& x, const SuperPolynomial& f)
{
    require_same_algebra(x.chart().algebra(), f.algebra(), "vector field application");
    SuperPolynomial result(f.algebra());
    for (std::size_t a = 0; a < x.values().size(); ++a) {
        if (x.value(a).is_zero() || !f.uses(a)) {
            continue;
        }
        result += mul(x.value(a), partial(f, a));
    }
    return result;
}

VectorField bracket(const VectorField& x, const VectorField& y)
{
    require_same_algebra(x.chart().algebra(), y.chart().algebra(), "bracket");
    const int sign = koszul_sign(x.parity(), y.parity());
    std::vector<SuperPolynomial> values;
    values.reserve(x.values().size());
    for (std::size_t a = 0; a < x.values().size(); ++a) {
        SuperPolynomial v = apply(x, y.value(a));
        v -= apply(y, x.value(a)) * Rational(sign);
        values.push_back(std::move(v));
    }
    return VectorField(x.chart(), x.parity() + y.parity(), std::move(values));
}

CanonicalFields canonical_fields(const Chart& chart, int k)
{
    ProlongedChart jets = prolong_chart(chart, k);
    AntitangentChart forms = antitangent_chart(jets.chart());
    const Chart& c = forms.chart();
    const std::size_t n = chart.size();
    const unsigned order = jets.order();

    auto zeros = [&] { return std::vector<SuperPolynomial>(c.size(), SuperPolynomial(c.algebra())); };
    auto d = zeros();
    auto delta1 = zeros();
    auto delta2 = zeros();
    auto j = zeros();
    for (std::size_t a = 0; a < n; ++a) {
        for (unsigned r = 0; r <= order; ++r) {
            const std::size_t x = forms.index(jets.index(a, r));
            const std::size_t dx = forms.differential_index(jets.index(a, r));
            d[x] = c.function(dx);
            delta1[dx] = c.function(dx);
            delta2[x] = c.function(x) * Rational(r);
            delta2[dx] = c.function(dx) * Rational(r);
            if (r + 1 <= order) {
                j[forms.index(jets.index(a, r + 1))] = c.function(dx);
            }
        }
    }
    VectorField d_field(c, Parity::Odd, std::move(d));
    VectorField delta1_field(c, Parity::Even, std::move(delta1));
    VectorField delta2_field(c, Parity::Even, std::move(delta2));
    VectorField delta_field = delta1_field + delta2_field;
    VectorField j_field(c, Parity::Odd, std::move(j));
    return CanonicalFields{std::move(jets),         std::move(forms),       std::move(d_field), std::move(delta1_field),
                           std::move(delta2_field), std::move(delta_field), std::move(j_field)};
}

VectorField weight_field(const ProlongedChart& chart)
{
    const Chart& c = chart.chart();
    std::vector<SuperPolynomial> values;
    for (std::size_t i = 0; i < c.size(); ++i) {
        values.push_back(c.function(i) * Rational(c.coordinate(i).weight));
    }
    return VectorField(c, Parity::Even, std::move(values));
}

std::string_view to_string(CanonicalField f)
{
    switch (f) {
    case CanonicalField::D:
        return "d";
    case CanonicalField::Delta1:
        return "Delta1";
    case CanonicalField::Delta2:
        return "Delta2";
    case CanonicalField::Delta:
        return "Delta";
    case CanonicalField::J:
        return "J";
    }
    return "?";
}

const VectorField& field(const CanonicalFields& fields, CanonicalField f)
{
    switch (f) {
    case CanonicalField::D:
        return fields.d;
    case CanonicalField::Delta1:
        return fields.delta1;
    case CanonicalField::Delta2:
        return fields.delta2;
    case CanonicalField::Delta:
        return fields.delta;
    case CanonicalField::J:
        return fields.J;
    }
    throw DomainError("unknown canonical field");
}

const std::vector<Relation>& relation_tables()
{
    using F = CanonicalField;
    static const std::vector<Relation> tables = {
        {1, F::D, F::D, 0, F::D},
        {1, F::Delta1, F::Delta2, 0, F::D},
        {1, F::Delta1, F::D, 1, F::D},
        {1, F::Delta2, F::D, 0, F::D},
        {2, F::J, F::J, 0, F::J},
        {2, F::Delta1, F::J, 1, F::J},
        {2, F::Delta2, F::J, -1, F::J},
        {2, F::D, F::J, 0, F::J},
        {3, F::D, F::D, 0, F::D},
        {3, F::Delta, F::D, 1, F::D},
        {3, F::Delta, F::J, 0, F::J},
        {3, F::D, F::J, 0, F::J},
        {3, F::J, F::J, 0, F::J},
    };
    return tables;
}

bool RelationReport::all_hold() const
{
    for (const auto& row : rows) {
        if (!row.holds) {
            return false;
        }
    }
    return true;
}

RelationReport verify_relations(const Chart& chart, int k)
{
    if (k < 1) {
        throw DomainError("relation tables need order k >= 1, got " + std::to_string(k));
    }
    const CanonicalFields fields = canonical_fields(chart, k);
    RelationReport report{chart, static_cast<unsigned>(k), {}};
    for (const auto& rel : relation_tables()) {
        const VectorField lhs = bracket(field(fields, rel.left), field(fields, rel.right));
        const bool holds = rel.sign == 0 ? lhs.is_zero() : lhs == Rational(rel.sign) * field(fields, rel.rhs);
        report.rows.push_back({rel, holds});
    }
    return report;
}

} // namespace sjet
