#include "sjet/polynomial.hpp"

#include "sjet/errors.hpp"

#include <algorithm>
#include <utility>

namespace sjet {

namespace {

// Bubble sort of odd factors, one sign flip per adjacent transposition.
int sort_odd_factors(std::vector<std::uint32_t>& odd)
{
    int sign = 1;
    for (std::size_t pass = 0; pass < odd.size(); ++pass) {
        for (std::size_t i = 0; i + 1 < odd.size() - pass; ++i) {
            if (odd[i] > odd[i + 1]) {
                std::swap(odd[i], odd[i + 1]);
                sign = -sign;
            }
        }
    }
    return sign;
}

} // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::even_power(std::uint32_t index, std::uint32_t exponent)
{
    Monomial m;
    if (exponent > 0) {
        m.even_.push_back({index, exponent});
    }
    return m;
}

Monomial Monomial::odd_generator(std::uint32_t index)
{
    Monomial m;
    m.odd_.push_back(index);
    return m;
}

Monomial Monomial::from_canonical(std::vector<EvenFactor> even, std::vector<std::uint32_t> odd)
{
    Monomial m;
    m.even_ = std::move(even);
    m.odd_ = std::move(odd);
    return m;
}

unsigned Monomial::even_degree() const
{
    unsigned d = 0;
    for (const auto& f : even_) {
        d += f.exponent;
    }
    return d;
}

std::uint32_t Monomial::exponent(std::uint32_t index) const
{
    for (const auto& f : even_) {
        if (f.index == index) {
            return f.exponent;
        }
    }
    return std::binary_search(odd_.begin(), odd_.end(), index) ? 1 : 0;
}

int Monomial::multiply(const Monomial& other, Monomial& out) const
{
    out.even_.clear();
    out.odd_.clear();

    out.even_.reserve(even_.size() + other.even_.size());
    auto a = even_.begin();
    auto b = other.even_.begin();
    while (a != even_.end() || b != other.even_.end()) {
        if (b == other.even_.end() || (a != even_.end() && a->index < b->index)) {
            out.even_.push_back(*a++);
        } else if (a == even_.end() || b->index < a->index) {
            out.even_.push_back(*b++);
        } else {
            out.even_.push_back({a->index, a->exponent + b->exponent});
            ++a;
            ++b;
        }
    }

    // Merging two ascending odd lists: each element taken from the right
    // operand passes every remaining element of the left operand.
    std::size_t inversions = 0;
    out.odd_.reserve(odd_.size() + other.odd_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < odd_.size() || j < other.odd_.size()) {
        if (j == other.odd_.size() || (i < odd_.size() && odd_[i] < other.odd_[j])) {
            out.odd_.push_back(odd_[i++]);
        } else if (i < odd_.size() && odd_[i] == other.odd_[j]) {
            return 0;
        } else {
            inversions += odd_.size() - i;
            out.odd_.push_back(other.odd_[j++]);
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::int64_t Monomial::differentiate(std::uint32_t index, Parity parity, Monomial& out) const
{
    if (parity == Parity::Even) {
        auto it = std::find_if(even_.begin(), even_.end(), [&](const EvenFactor& f) { return f.index == index; });
        if (it == even_.end()) {
            return 0;
        }
        out = *this;
        auto& f = out.even_[static_cast<std::size_t>(it - even_.begin())];
        const std::int64_t e = f.exponent;
        if (--f.exponent == 0) {
            out.even_.erase(out.even_.begin() + (it - even_.begin()));
        }
        return e;
    }
    auto it = std::lower_bound(odd_.begin(), odd_.end(), index);
    if (it == odd_.end() || *it != index) {
        return 0;
    }
    const auto position = it - odd_.begin();
    out = *this;
    out.odd_.erase(out.odd_.begin() + position);
    return position % 2 == 0 ? 1 : -1;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned da = a.even_degree();
    const unsigned db = b.even_degree();
    if (da != db) {
        return da > db;
    }
    auto ea = a.even_factors();
    auto eb = b.even_factors();
    std::size_t i = 0;
    for (; i < ea.size() && i < eb.size(); ++i) {
        if (ea[i].index != eb[i].index) {
            // The monomial carrying the earlier generator is heavier.
            return ea[i].index < eb[i].index;
        }
        if (ea[i].exponent != eb[i].exponent) {
            return ea[i].exponent > eb[i].exponent;
        }
    }
    if (ea.size() != eb.size()) {
        return ea.size() > eb.size();
    }
    auto oa = a.odd_factors();
    auto ob = b.odd_factors();
    return std::lexicographical_compare(oa.begin(), oa.end(), ob.begin(), ob.end());
}

unsigned total_weight(const Monomial& m, const Algebra& algebra)
{
    unsigned w = 0;
    for (const auto& f : m.even_factors()) {
        w += algebra[f.index].weight * f.exponent;
    }
    for (auto i : m.odd_factors()) {
        w += algebra[i].weight;
    }
    return w;
}

// --------------------------------------------------------- SuperPolynomial

SuperPolynomial::SuperPolynomial(AlgebraPtr algebra)
    : algebra_(std::move(algebra))
{
}

SuperPolynomial::SuperPolynomial(AlgebraPtr algebra, const Rational& constant)
    : algebra_(std::move(algebra))
{
    add_term(Monomial{}, constant);
}

SuperPolynomial SuperPolynomial::variable(AlgebraPtr algebra, std::size_t index)
{
    if (index >= algebra->size()) {
        throw DeclarationError("generator index out of range");
    }
    const auto i = static_cast<std::uint32_t>(index);
    Monomial m = (*algebra)[index].parity == Parity::Even ? Monomial::even_power(i, 1) : Monomial::odd_generator(i);
    return monomial(std::move(algebra), std::move(m));
}

SuperPolynomial SuperPolynomial::variable(AlgebraPtr algebra, std::string_view name)
{
    const auto index = algebra->index_of(name);
    return variable(std::move(algebra), index);
}

SuperPolynomial SuperPolynomial::monomial(AlgebraPtr algebra, Monomial m, const Rational& c)
{
    SuperPolynomial p(std::move(algebra));
    p.add_term(m, c);
    return p;
}

std::optional<Rational> SuperPolynomial::constant_value() const
{
    if (terms_.empty()) {
        return Rational(0);
    }
    if (terms_.size() == 1 && terms_.begin()->first.is_unit()) {
        return terms_.begin()->second;
    }
    return std::nullopt;
}

Rational SuperPolynomial::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Parity> SuperPolynomial::parity() const
{
    if (terms_.empty()) {
        return Parity::Even;
    }
    const Parity p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_) {
        if (m.parity() != p) {
            return std::nullopt;
        }
    }
    return p;
}

bool SuperPolynomial::has_parity(Parity p) const
{
    return std::all_of(terms_.begin(), terms_.end(), [p](const auto& t) { return t.first.parity() == p; });
}

unsigned SuperPolynomial::degree() const
{
    unsigned d = 0;
    for (const auto& [m, c] : terms_) {
        d = std::max(d, m.degree());
    }
    return d;
}

bool SuperPolynomial::uses(std::size_t index) const
{
    const auto i = static_cast<std::uint32_t>(index);
    return std::any_of(terms_.begin(), terms_.end(), [i](const auto& t) { return t.first.exponent(i) > 0; });
}

void SuperPolynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o)
{
    require_same_algebra(algebra_, o.algebra_, "addition");
    for (const auto& [m, c] : o.terms_) {
        add_term(m, c);
    }
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o)
{
    require_same_algebra(algebra_, o.algebra_, "subtraction");
    for (const auto& [m, c] : o.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) {
        coeff *= c;
    }
    return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b)
{
    return mul(a, b);
}

bool operator==(const SuperPolynomial& a, const SuperPolynomial& b)
{
    return same_algebra(a.algebra_, b.algebra_) && a.terms_ == b.terms_;
}

// -------------------------------------------------------------- operations

SuperPolynomial normalize(const AlgebraPtr& algebra, std::span<const RawTerm> terms)
{
    SuperPolynomial result(algebra);
    for (const auto& term : terms) {
        std::map<std::uint32_t, std::uint32_t> even;
        std::vector<std::uint32_t> odd;
        for (const auto& name : term.factors) {
            const auto index = static_cast<std::uint32_t>(algebra->index_of(name));
            if ((*algebra)[index].parity == Parity::Even) {
                ++even[index];
            } else {
                odd.push_back(index);
            }
        }
        const int sign = sort_odd_factors(odd);
        if (std::adjacent_find(odd.begin(), odd.end()) != odd.end()) {
            continue;
        }
        std::vector<Monomial::EvenFactor> even_factors;
        for (const auto& [index, exponent] : even) {
            even_factors.push_back({index, exponent});
        }
        result.add_term(Monomial::from_canonical(std::move(even_factors), std::move(odd)), sign * term.coefficient);
    }
    return result;
}

SuperPolynomial mul(const SuperPolynomial& f, const SuperPolynomial& g)
{
    require_same_algebra(f.algebra(), g.algebra(), "multiplication");
    SuperPolynomial result(f.algebra());
    Monomial product;
    for (const auto& [mf, cf] : f.terms()) {
        for (const auto& [mg, cg] : g.terms()) {
            const int sign = mf.multiply(mg, product);
            if (sign != 0) {
                result.add_term(product, sign > 0 ? Rational(cf * cg) : Rational(-(cf * cg)));
            }
        }
    }
    return result;
}

SuperPolynomial power(const SuperPolynomial& f, unsigned n)
{
    SuperPolynomial result(f.algebra(), 1);
    SuperPolynomial base = f;
    while (n > 0) {
        if (n & 1u) {
            result = mul(result, base);
        }
        n >>= 1u;
        if (n > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

SuperPolynomial partial(const SuperPolynomial& f, std::size_t index)
{
    const auto& algebra = *f.algebra();
    if (index >= algebra.size()) {
        throw DeclarationError("generator index out of range");
    }
    const Parity p = algebra[index].parity;
    SuperPolynomial result(f.algebra());
    Monomial reduced;
    for (const auto& [m, c] : f.terms()) {
        const auto factor = m.differentiate(static_cast<std::uint32_t>(index), p, reduced);
        if (factor != 0) {
            result.add_term(reduced, c * Rational(static_cast<long>(factor)));
        }
    }
    return result;
}

SuperPolynomial partial(const SuperPolynomial& f, std::string_view name)
{
    return partial(f, f.algebra()->index_of(name));
}

// ------------------------------------------------------------ substitution

Substitution::Substitution(AlgebraPtr source, AlgebraPtr target)
    : source_(std::move(source))
    , target_(std::move(target))
    , images_(source_->size())
{
}

Substitution Substitution::renaming(AlgebraPtr source, AlgebraPtr target)
{
    Substitution s(source, target);
    for (std::size_t i = 0; i < source->size(); ++i) {
        const auto& g = (*source)[i];
        const auto j = target->find(g.name);
        if (!j) {
            throw CoverageError("generator '" + g.name + "' has no counterpart in the target algebra");
        }
        s.set(i, SuperPolynomial::variable(target, *j));
    }
    return s;
}

Substitution& Substitution::set(std::size_t index, SuperPolynomial image)
{
    if (index >= source_->size()) {
        throw DeclarationError("generator index out of range");
    }
    require_same_algebra(image.algebra(), target_, "substitution image");
    const auto& g = (*source_)[index];
    if (!image.has_parity(g.parity)) {
        throw ParityError("image of '" + g.name + "' is not homogeneous of parity " + std::string(to_string(g.parity)));
    }
    images_[index] = std::move(image);
    return *this;
}

Substitution& Substitution::set(std::string_view name, SuperPolynomial image)
{
    return set(source_->index_of(name), std::move(image));
}

SuperPolynomial substitute(const SuperPolynomial& f, const Substitution& sigma)
{
    require_same_algebra(f.algebra(), sigma.source(), "substitution");
    const auto& target = sigma.target();
    auto image_of = [&](std::uint32_t index) -> const SuperPolynomial& {
        const auto& img = sigma.image(index);
        if (!img) {
            throw CoverageError("no image assigned to generator '" + (*sigma.source())[index].name + "'");
        }
        return *img;
    };

    std::map<std::pair<std::uint32_t, std::uint32_t>, SuperPolynomial> powers;
    auto power_of = [&](std::uint32_t index, std::uint32_t exponent) -> const SuperPolynomial& {
        auto key = std::make_pair(index, exponent);
        auto it = powers.find(key);
        if (it == powers.end()) {
            it = powers.emplace(key, power(image_of(index), exponent)).first;
        }
        return it->second;
    };

    SuperPolynomial result(target);
    for (const auto& [m, c] : f.terms()) {
        SuperPolynomial term(target, c);
        for (const auto& e : m.even_factors()) {
            term = mul(term, power_of(e.index, e.exponent));
            if (term.is_zero()) {
                break;
            }
        }
        for (auto o : m.odd_factors()) {
            if (term.is_zero()) {
                break;
            }
            term = mul(term, image_of(o));
        }
        result += term;
    }
    return result;
}

Substitution then(const Substitution& first, const Substitution& second)
{
    require_same_algebra(first.target(), second.source(), "substitution composition");
    Substitution composed(first.source(), second.target());
    for (std::size_t i = 0; i < first.source()->size(); ++i) {
        if (const auto& img = first.image(i)) {
            composed.set(i, substitute(*img, second));
        }
    }
    return composed;
}

SuperPolynomial embed(const SuperPolynomial& f, const AlgebraPtr& target)
{
    if (same_algebra(f.algebra(), target)) {
        return f;
    }
    const auto& source = *f.algebra();
    std::vector<std::uint32_t> map(source.size(), 0);
    std::vector<bool> known(source.size(), false);
    SuperPolynomial result(target);
    for (const auto& [m, c] : f.terms()) {
        std::map<std::uint32_t, std::uint32_t> even;
        std::vector<std::uint32_t> odd;
        auto lookup = [&](std::uint32_t i) {
            if (!known[i]) {
                const auto j = target->find(source[i].name);
                if (!j) {
                    throw CoverageError("generator '" + source[i].name + "' has no counterpart in the target algebra");
                }
                if ((*target)[*j].parity != source[i].parity) {
                    throw ParityError("generator '" + source[i].name + "' changes parity under embedding");
                }
                map[i] = static_cast<std::uint32_t>(*j);
                known[i] = true;
            }
            return map[i];
        };
        for (const auto& e : m.even_factors()) {
            even[lookup(e.index)] += e.exponent;
        }
        for (auto o : m.odd_factors()) {
            odd.push_back(lookup(o));
        }
        const int sign = sort_odd_factors(odd);
        std::vector<Monomial::EvenFactor> ef;
        for (const auto& [i, e] : even) {
            ef.push_back({i, e});
        }
        result.add_term(Monomial::from_canonical(std::move(ef), std::move(odd)), sign * c);
    }
    return result;
}

} // namespace sjet
