#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sjet {

/// Z2 grading. Addition is mod 2.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

/// Sign picked up when moving an object of parity a past one of parity b.
constexpr int koszul_sign(Parity a, Parity b)
{
    return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}

std::string_view to_string(Parity p);
std::optional<Parity> parse_parity(std::string_view text);

/// A named, parity-tagged indeterminate.
///
/// `weight` is the jet order of a prolonged coordinate and `form_degree`
/// counts how many antitangent differentials built it; both are zero for
/// ordinary chart and parameter coordinates.
struct Generator {
    std::string name;
    Parity parity = Parity::Even;
    unsigned weight = 0;
    unsigned form_degree = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Ordered, immutable set of generators. The declaration order fixes the
/// canonical order of odd factors in every monomial over the algebra.
class Algebra {
public:
    /// Throws DeclarationError on empty or duplicate names.
    static AlgebraPtr make(std::vector<Generator> generators);

    /// Generators of `a` followed by those of `b`; names must be disjoint.
    static AlgebraPtr join(const Algebra& a, const Algebra& b);

    std::size_t size() const { return generators_.size(); }
    const Generator& operator[](std::size_t i) const { return generators_[i]; }
    std::span<const Generator> generators() const { return generators_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws DeclarationError for unknown names.
    std::size_t index_of(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name).has_value(); }

    std::size_t count(Parity p) const;

    // Structural equality: same generators in the same order.
    friend bool operator==(const Algebra& a, const Algebra& b)
    {
        return a.fingerprint_ == b.fingerprint_ && a.generators_ == b.generators_;
    }

private:
    explicit Algebra(std::vector<Generator> generators);

    std::vector<Generator> generators_;
    std::map<std::string, std::size_t, std::less<>> index_;
    std::size_t fingerprint_ = 0;
};

/// True when both pointers denote structurally identical algebras.
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Throws AlgebraError unless same_algebra(a, b).
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, std::string_view what);

} // namespace sjet
