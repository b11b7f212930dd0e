#pragma once

#include "sjet/dsl.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace sjet::testing {

class Random {
public:
    explicit Random(std::uint64_t seed)
        : engine_(seed)
    {
    }

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    bool chance(double p) { return std::bernoulli_distribution(p)(engine_); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1)); }

    /// Small nonzero rational, usually an integer.
    Rational coefficient();

private:
    std::mt19937_64 engine_;
};

/// Chart with 0..max_even even coordinates named <even>1.. and 0..max_odd odd
/// ones named <odd>1.., never empty.
Chart random_chart(Random& rng, const std::string& name, const std::string& even, const std::string& odd,
                   std::size_t max_even = 2, std::size_t max_odd = 2);

/// Random polynomial of degree <= max_degree with up to max_terms terms.
SuperPolynomial random_polynomial(Random& rng, const AlgebraPtr& algebra, unsigned max_degree,
                                  std::size_t max_terms);

/// As random_polynomial, keeping only monomials of the given parity.
SuperPolynomial random_homogeneous(Random& rng, const AlgebraPtr& algebra, Parity parity, unsigned max_degree,
                                   std::size_t max_terms);

Morphism random_morphism(Random& rng, const Chart& source, const Chart& target, unsigned max_degree = 2);

ParameterAlgebra random_params(Random& rng, const std::string& name, const std::string& stem);

SCurve random_curve(Random& rng, const Chart& chart, const ParameterAlgebra& params, unsigned order);

/// Parity-preserving substitution from the generators of `from` into C(to).
Substitution random_parameter_change(Random& rng, const ParameterAlgebra& from, const ParameterAlgebra& to);

/// Homogeneous field with a few random nonzero values.
VectorField random_field(Random& rng, const Chart& chart, Parity parity, unsigned max_degree = 2);

Document random_document(Random& rng);

/// Closed second-order transformation rules, written out independently of
/// the truncated-series machinery:
///   y@0 = f(x@0)
///   y@1 = sum_B x@1^B d_B f(x@0)
///   y@2 = sum_B x@2^B d_B f(x@0) + 1/2 sum_{B,C} x@1^B x@1^C d_C d_B f(x@0)
Morphism second_order_rules(const Morphism& phi);

/// Coefficients of f(curve(t)) computed by substituting the polynomial
/// curve into f with an explicit time generator and taking r-th t-derivatives
/// at t = 0 divided by r!.
TimeSeries compose_by_differentiation(const SuperPolynomial& f, const SeriesSubstitution& curve);

} // namespace sjet::testing

