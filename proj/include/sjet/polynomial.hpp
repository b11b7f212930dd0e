#pragma once

#include "sjet/algebra.hpp"
#include "sjet/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sjet {

/// Canonical monomial: even generators with positive exponents, and a
/// strictly ascending set of odd generators (indices into the algebra).
class Monomial {
public:
    struct EvenFactor {
        std::uint32_t index;
        std::uint32_t exponent;
        friend bool operator==(const EvenFactor&, const EvenFactor&) = default;
    };

    Monomial() = default;

    static Monomial even_power(std::uint32_t index, std::uint32_t exponent);
    static Monomial odd_generator(std::uint32_t index);
    /// Inputs must already be canonical (ascending indices, positive exponents).
    static Monomial from_canonical(std::vector<EvenFactor> even, std::vector<std::uint32_t> odd);

    std::span<const EvenFactor> even_factors() const { return even_; }
    std::span<const std::uint32_t> odd_factors() const { return odd_; }

    Parity parity() const { return odd_.size() % 2 == 0 ? Parity::Even : Parity::Odd; }
    unsigned even_degree() const;
    unsigned degree() const { return even_degree() + static_cast<unsigned>(odd_.size()); }
    bool is_unit() const { return even_.empty() && odd_.empty(); }

    /// Exponent of generator `index` (0 or 1 for odd generators).
    std::uint32_t exponent(std::uint32_t index) const;

    /// this * other in canonical form. Returns the reordering sign, or 0 when
    /// an odd generator would repeat (the product vanishes).
    int multiply(const Monomial& other, Monomial& out) const;

    /// Left derivative of the monomial with respect to a generator.
    /// Returns the scalar factor (0 if the generator is absent).
    std::int64_t differentiate(std::uint32_t index, Parity parity, Monomial& out) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<EvenFactor> even_;
    std::vector<std::uint32_t> odd_;
};

/// Printing / storage order: descending total even degree, then descending
/// lexicographic on even exponents (earlier generators heavier), then
/// ascending lexicographic on the odd index sequence.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sum of generator weights, counted with multiplicity.
unsigned total_weight(const Monomial& m, const Algebra& algebra);

/// Element of the free supercommutative polynomial algebra over Q.
class SuperPolynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    explicit SuperPolynomial(AlgebraPtr algebra);
    SuperPolynomial(AlgebraPtr algebra, const Rational& constant);

    static SuperPolynomial variable(AlgebraPtr algebra, std::size_t index);
    static SuperPolynomial variable(AlgebraPtr algebra, std::string_view name);
    static SuperPolynomial monomial(AlgebraPtr algebra, Monomial m, const Rational& c = 1);

    const AlgebraPtr& algebra() const { return algebra_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> constant_value() const;
    /// Coefficient of the unit monomial.
    Rational constant_term() const;

    /// Parity of a homogeneous element; nullopt when mixed. Zero is even.
    std::optional<Parity> parity() const;
    /// Zero has every parity.
    bool has_parity(Parity p) const;

    /// Maximum total degree (0 for zero and constants).
    unsigned degree() const;
    bool uses(std::size_t index) const;

    void add_term(const Monomial& m, const Rational& c);

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Rational& c);

    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator-(SuperPolynomial a) { return a *= Rational(-1); }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& c) { return a *= c; }
    friend SuperPolynomial operator*(const Rational& c, SuperPolynomial a) { return a *= c; }
    friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);

    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b);

private:
    AlgebraPtr algebra_;
    Terms terms_;
};

/// Unnormalised input term: coefficient times a product of generators in the
/// given order.
struct RawTerm {
    Rational coefficient;
    std::vector<std::string> factors;
};

/// Canonical form of a sum of raw products. Throws DeclarationError for
/// unknown generator names.
SuperPolynomial normalize(const AlgebraPtr& algebra, std::span<const RawTerm> terms);

/// Supercommutative product; throws AlgebraError on mismatched algebras.
SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g);

SuperPolynomial power(const SuperPolynomial& f, unsigned n);

/// Left partial derivative. For an odd generator the sign counts the odd
/// factors standing to its left.
SuperPolynomial partial(const SuperPolynomial& f, std::size_t index);
SuperPolynomial partial(const SuperPolynomial& f, std::string_view name);

/// Assignment of images (over `target`) to generators of `source`.
class Substitution {
public:
    Substitution(AlgebraPtr source, AlgebraPtr target);

    /// Every generator mapped to the generator of the same name in `target`.
    static Substitution renaming(AlgebraPtr source, AlgebraPtr target);
    static Substitution identity(const AlgebraPtr& algebra) { return renaming(algebra, algebra); }

    /// Throws ParityError for an image of the wrong parity and AlgebraError
    /// when the image does not live over the target algebra.
    Substitution& set(std::size_t index, SuperPolynomial image);
    Substitution& set(std::string_view name, SuperPolynomial image);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::optional<SuperPolynomial>& image(std::size_t index) const { return images_[index]; }

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<std::optional<SuperPolynomial>> images_;
};

/// Algebra homomorphism determined by the generator images. Throws
/// CoverageError when f uses a generator without an image.
SuperPolynomial substitute(const SuperPolynomial& f, const Substitution& sigma);

/// x -> substitute(first(x), second), for every x covered by `first`.
Substitution then(const Substitution& first, const Substitution& second);

/// Re-expresses f over `target`, matching generators by name.
SuperPolynomial embed(const SuperPolynomial& f, const AlgebraPtr& target);

} // namespace sjet
