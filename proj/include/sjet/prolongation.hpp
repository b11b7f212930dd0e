#pragma once

#include "sjet/geometry.hpp"

#include <string>
#include <string_view>

namespace sjet {

/// Name of the order-r jet coordinate of `base`: "x@r", or "(d.x)@r" when
/// the base name is itself derived.
std::string jet_name(std::string_view base, unsigned r);

/// Name of the antitangent fibre coordinate of `base`: "d.x".
std::string differential_name(std::string_view base);

/// Chart of the k-th order tangent bundle. Coordinates are ordered by jet
/// order first: all x@0, then all x@1, and so on.
class ProlongedChart {
public:
    ProlongedChart(Chart base, unsigned order);

    const Chart& base() const { return base_; }
    unsigned order() const { return order_; }
    const Chart& chart() const { return chart_; }

    std::size_t index(std::size_t base_coordinate, unsigned r) const { return r * base_.size() + base_coordinate; }
    const Generator& coordinate(std::size_t base_coordinate, unsigned r) const
    {
        return chart_.coordinate(index(base_coordinate, r));
    }

private:
    Chart base_;
    unsigned order_;
    Chart chart_;
};

/// Chart of the antitangent bundle: the base coordinates followed by their
/// parity-reversed differentials d.x.
class AntitangentChart {
public:
    explicit AntitangentChart(Chart base);

    const Chart& base() const { return base_; }
    const Chart& chart() const { return chart_; }

    std::size_t index(std::size_t base_coordinate) const { return base_coordinate; }
    std::size_t differential_index(std::size_t base_coordinate) const { return base_.size() + base_coordinate; }

private:
    Chart base_;
    Chart chart_;
};

/// Throws DomainError for negative k.
ProlongedChart prolong_chart(const Chart& chart, int k);

/// Induced map of k-jets: the generic curve x(t) = sum_r x@r t^r is pushed
/// through phi and the t^r coefficients become the images of y@r. Throws
/// ParityError for a morphism that does not preserve parity.
Morphism prolong_morphism(const Morphism& phi, int k);

/// Truncation T(k) -> T(l). Throws DomainError unless 0 <= l <= k.
Morphism project(const ProlongedChart& chart, int l);

/// T(0) -> T(k): x@0 -> x@0 and every higher jet coordinate to 0.
Morphism zero_section(const ProlongedChart& chart);

AntitangentChart antitangent_chart(const Chart& chart);

/// PiT phi: y -> phi*(y) and d.y -> sum_A d.x^A * d(phi*(y))/dx^A.
Morphism antitangent_morphism(const Morphism& phi);

/// Coordinate renaming T(k)(PiT C) -> PiT(T(k) C) sending each x@r to x@r
/// and d.x@r to (d.x)@r.
Morphism interchange(const Chart& chart, int k);

/// x@r -> lambda^r x@r for a scalar lambda.
Morphism homothety(const ProlongedChart& chart, const Rational& lambda);

/// Homothety with lambda an even element of a parameter algebra. Throws
/// ParityError for odd or mixed lambda.
Morphism homothety(const ProlongedChart& chart, const ParameterAlgebra& params, const SuperPolynomial& lambda);

/// Coordinates of c1 followed by those of c2. Coordinates whose names occur
/// in both factors are prefixed with "<chart name>_".
Chart product_chart(const Chart& c1, const Chart& c2);

/// phi1 x phi2 between product charts. Both factors must be parameter free.
Morphism pair_morphism(const Morphism& phi1, const Morphism& phi2);

/// Canonical renaming T(k)(c1 x c2) -> T(k)c1 x T(k)c2.
Morphism product_identification(const Chart& c1, const Chart& c2, int k);

} // namespace sjet
