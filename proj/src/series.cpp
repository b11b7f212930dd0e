#include "sjet/series.hpp"

#include "sjet/errors.hpp"

#include <map>
#include <utility>

namespace sjet {

TimeSeries::TimeSeries(AlgebraPtr algebra, unsigned order)
    : algebra_(algebra)
    , coefficients_(order + 1, SuperPolynomial(algebra))
{
}

TimeSeries::TimeSeries(std::vector<SuperPolynomial> coefficients)
    : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty()) {
        throw OrderError("a time series needs at least one coefficient");
    }
    algebra_ = coefficients_.front().algebra();
    for (const auto& c : coefficients_) {
        require_same_algebra(algebra_, c.algebra(), "time series coefficient");
    }
}

TimeSeries TimeSeries::constant(const SuperPolynomial& c, unsigned order)
{
    TimeSeries s(c.algebra(), order);
    s.coefficients_[0] = c;
    return s;
}

bool TimeSeries::has_parity(Parity p) const
{
    for (const auto& c : coefficients_) {
        if (!c.has_parity(p)) {
            return false;
        }
    }
    return true;
}

TimeSeries TimeSeries::truncated(unsigned order) const
{
    TimeSeries s(algebra_, order);
    for (unsigned r = 0; r <= order && r < coefficients_.size(); ++r) {
        s.coefficients_[r] = coefficients_[r];
    }
    return s;
}

TimeSeries& TimeSeries::operator+=(const TimeSeries& o)
{
    if (o.order() != order()) {
        throw OrderError("adding time series of different orders");
    }
    for (std::size_t r = 0; r < coefficients_.size(); ++r) {
        coefficients_[r] += o.coefficients_[r];
    }
    return *this;
}

TimeSeries operator*(const TimeSeries& a, const TimeSeries& b)
{
    if (a.order() != b.order()) {
        throw OrderError("multiplying time series of different orders");
    }
    require_same_algebra(a.algebra_, b.algebra_, "time series product");
    const unsigned k = a.order();
    TimeSeries result(a.algebra_, k);
    for (unsigned i = 0; i <= k; ++i) {
        if (a.coefficients_[i].is_zero()) {
            continue;
        }
        for (unsigned j = 0; i + j <= k; ++j) {
            if (!b.coefficients_[j].is_zero()) {
                result.coefficients_[i + j] += mul(a.coefficients_[i], b.coefficients_[j]);
            }
        }
    }
    return result;
}

SeriesSubstitution::SeriesSubstitution(AlgebraPtr source, AlgebraPtr target, unsigned order)
    : source_(std::move(source))
    , target_(std::move(target))
    , order_(order)
    , images_(source_->size())
{
}

SeriesSubstitution& SeriesSubstitution::set(std::size_t index, TimeSeries series)
{
    if (index >= source_->size()) {
        throw DeclarationError("generator index out of range");
    }
    if (series.order() != order_) {
        throw OrderError("series for '" + (*source_)[index].name + "' has order " + std::to_string(series.order()) +
                         ", expected " + std::to_string(order_));
    }
    require_same_algebra(series.algebra(), target_, "series substitution");
    const auto& g = (*source_)[index];
    if (!series.has_parity(g.parity)) {
        throw ParityError("series for '" + g.name + "' is not homogeneous of parity " + std::string(to_string(g.parity)));
    }
    images_[index] = std::move(series);
    return *this;
}

SeriesSubstitution& SeriesSubstitution::set(std::string_view name, TimeSeries series)
{
    return set(source_->index_of(name), std::move(series));
}

TimeSeries series_compose(const SuperPolynomial& f, const SeriesSubstitution& curve)
{
    require_same_algebra(f.algebra(), curve.source(), "series composition");
    const unsigned k = curve.order();
    auto series_of = [&](std::uint32_t index) -> const TimeSeries& {
        const auto& s = curve.image(index);
        if (!s) {
            throw CoverageError("no series assigned to generator '" + (*curve.source())[index].name + "'");
        }
        return *s;
    };

    std::map<std::pair<std::uint32_t, std::uint32_t>, TimeSeries> powers;
    auto power_of = [&](std::uint32_t index, std::uint32_t exponent) -> const TimeSeries& {
        const auto key = std::make_pair(index, exponent);
        if (auto it = powers.find(key); it != powers.end()) {
            return it->second;
        }
        const TimeSeries& base = series_of(index);
        TimeSeries p = base;
        for (std::uint32_t e = 2; e <= exponent; ++e) {
            p = p * base;
        }
        return powers.emplace(key, std::move(p)).first->second;
    };

    TimeSeries result(curve.target(), k);
    for (const auto& [m, c] : f.terms()) {
        TimeSeries term = TimeSeries::constant(SuperPolynomial(curve.target(), c), k);
        for (const auto& e : m.even_factors()) {
            term = term * power_of(e.index, e.exponent);
        }
        for (auto o : m.odd_factors()) {
            term = term * series_of(o);
        }
        result += term;
    }
    return result;
}

} // namespace sjet
