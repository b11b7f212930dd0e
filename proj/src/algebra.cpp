#include "sjet/algebra.hpp"

#include "sjet/errors.hpp"

#include <functional>

namespace sjet {

std::string_view to_string(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

std::optional<Parity> parse_parity(std::string_view text)
{
    if (text == "even") {
        return Parity::Even;
    }
    if (text == "odd") {
        return Parity::Odd;
    }
    return std::nullopt;
}

Algebra::Algebra(std::vector<Generator> generators)
    : generators_(std::move(generators))
{
    std::size_t h = generators_.size();
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.name.empty()) {
            throw DeclarationError("generator names must be nonempty");
        }
        if (!index_.emplace(g.name, i).second) {
            throw DeclarationError("duplicate generator name '" + g.name + "'");
        }
        h = h * 1000003u ^ std::hash<std::string>{}(g.name);
        h = h * 31u + static_cast<std::size_t>(g.parity) + 2u * g.weight + 7u * g.form_degree;
    }
    fingerprint_ = h;
}

AlgebraPtr Algebra::make(std::vector<Generator> generators)
{
    return AlgebraPtr(new Algebra(std::move(generators)));
}

AlgebraPtr Algebra::join(const Algebra& a, const Algebra& b)
{
    std::vector<Generator> all(a.generators_);
    all.insert(all.end(), b.generators_.begin(), b.generators_.end());
    return make(std::move(all));
}

std::optional<std::size_t> Algebra::find(std::string_view name) const
{
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t Algebra::index_of(std::string_view name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw DeclarationError("undeclared generator '" + std::string(name) + "'");
}

std::size_t Algebra::count(Parity p) const
{
    std::size_t n = 0;
    for (const auto& g : generators_) {
        n += g.parity == p ? 1 : 0;
    }
    return n;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b)
{
    if (a == b) {
        return true;
    }
    return a && b && *a == *b;
}

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, std::string_view what)
{
    if (!same_algebra(a, b)) {
        throw AlgebraError(std::string(what) + ": operands belong to different algebras");
    }
}

} // namespace sjet
