#pragma once

#include "sjet/polynomial.hpp"

#include <optional>
#include <vector>

namespace sjet {

/// Polynomial in the even time variable t, truncated above degree k, with
/// SuperPolynomial coefficients. Index r holds the coefficient of t^r.
class TimeSeries {
public:
    /// The zero series of order k.
    TimeSeries(AlgebraPtr algebra, unsigned order);
    /// Throws OrderError for an empty coefficient list.
    explicit TimeSeries(std::vector<SuperPolynomial> coefficients);

    static TimeSeries constant(const SuperPolynomial& c, unsigned order);

    const AlgebraPtr& algebra() const { return algebra_; }
    unsigned order() const { return static_cast<unsigned>(coefficients_.size() - 1); }
    const std::vector<SuperPolynomial>& coefficients() const { return coefficients_; }
    const SuperPolynomial& operator[](unsigned r) const { return coefficients_[r]; }

    /// Every coefficient is homogeneous of parity p.
    bool has_parity(Parity p) const;

    /// Same series cut down (or zero-padded) to another order.
    TimeSeries truncated(unsigned order) const;

    TimeSeries& operator+=(const TimeSeries& o);
    friend TimeSeries operator+(TimeSeries a, const TimeSeries& b) { return a += b; }
    /// Truncated Cauchy product; operands must share order and algebra.
    friend TimeSeries operator*(const TimeSeries& a, const TimeSeries& b);

    friend bool operator==(const TimeSeries& a, const TimeSeries& b) { return a.coefficients_ == b.coefficients_; }

private:
    AlgebraPtr algebra_;
    std::vector<SuperPolynomial> coefficients_;
};

/// Assignment of a TimeSeries to each generator of a source algebra.
class SeriesSubstitution {
public:
    SeriesSubstitution(AlgebraPtr source, AlgebraPtr target, unsigned order);

    /// Throws OrderError if the order differs, ParityError if a coefficient
    /// does not match the generator's parity, AlgebraError on foreign series.
    SeriesSubstitution& set(std::size_t index, TimeSeries series);
    SeriesSubstitution& set(std::string_view name, TimeSeries series);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    unsigned order() const { return order_; }
    const std::optional<TimeSeries>& image(std::size_t index) const { return images_[index]; }

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    unsigned order_;
    std::vector<std::optional<TimeSeries>> images_;
};

/// f(x(t)) truncated at the common order: each generator of f is replaced by
/// its series and the product expanded in the truncated series ring. Throws
/// CoverageError when f uses a generator without a series.
TimeSeries series_compose(const SuperPolynomial& f, const SeriesSubstitution& curve);

} // namespace sjet
