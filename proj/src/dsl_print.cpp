#include "sjet/dsl.hpp"

#include <sstream>

namespace sjet {

namespace {

bool same_morphism_decl(const MorphismDecl& a, const MorphismDecl& b)
{
    return a.name == b.name && a.morphism.source() == b.morphism.source() &&
           a.morphism.target() == b.morphism.target() && a.morphism == b.morphism;
}

bool same_decl(const Declaration& a, const Declaration& b)
{
    if (a.index() != b.index()) {
        return false;
    }
    return std::visit(
        [&](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b);
            if constexpr (std::is_same_v<T, ChartDecl>) {
                return x.chart == y.chart;
            } else if constexpr (std::is_same_v<T, ParamsDecl>) {
                return x.params == y.params;
            } else if constexpr (std::is_same_v<T, MorphismDecl>) {
                return same_morphism_decl(x, y);
            } else if constexpr (std::is_same_v<T, CurveDecl>) {
                return x.name == y.name && x.curve == y.curve;
            } else {
                return x.name == y.name && x.base == y.base && x.order == y.order && x.field == y.field;
            }
        },
        a);
}

std::string_view decl_name(const ChartDecl& d)
{
    return d.chart.name();
}
std::string_view decl_name(const ParamsDecl& d)
{
    return d.params.name;
}
template <class T>
std::string_view decl_name(const T& d)
{
    return d.name;
}

void require_declared_chart(const Document& doc, const Chart& chart)
{
    const ChartDecl* decl = doc.find_chart(chart.name());
    if (decl == nullptr || !(decl->chart == chart)) {
        throw DeclarationError("chart '" + chart.name() + "' is not declared earlier in the document");
    }
}

} // namespace

template <class T>
const T* Document::find(std::string_view name) const
{
    for (const auto& d : declarations_) {
        if (const T* decl = std::get_if<T>(&d); decl != nullptr && decl_name(*decl) == name) {
            return decl;
        }
    }
    return nullptr;
}

const ChartDecl* Document::find_chart(std::string_view name) const
{
    return find<ChartDecl>(name);
}
const ParamsDecl* Document::find_params(std::string_view name) const
{
    return find<ParamsDecl>(name);
}
const MorphismDecl* Document::find_morphism(std::string_view name) const
{
    return find<MorphismDecl>(name);
}
const CurveDecl* Document::find_curve(std::string_view name) const
{
    return find<CurveDecl>(name);
}
const FieldDecl* Document::find_field(std::string_view name) const
{
    return find<FieldDecl>(name);
}

void Document::add(ChartDecl decl)
{
    if (find_chart(decl.chart.name()) != nullptr) {
        throw DeclarationError("chart '" + decl.chart.name() + "' already declared");
    }
    declarations_.emplace_back(std::move(decl));
}

void Document::add(ParamsDecl decl)
{
    if (find_params(decl.params.name) != nullptr) {
        throw DeclarationError("params '" + decl.params.name + "' already declared");
    }
    declarations_.emplace_back(std::move(decl));
}

void Document::add(MorphismDecl decl)
{
    if (find_morphism(decl.name) != nullptr) {
        throw DeclarationError("morphism '" + decl.name + "' already declared");
    }
    if (!decl.morphism.params().empty()) {
        throw DeclarationError("morphism '" + decl.name + "' must be parameter free");
    }
    require_declared_chart(*this, decl.morphism.source());
    require_declared_chart(*this, decl.morphism.target());
    declarations_.emplace_back(std::move(decl));
}

void Document::add(CurveDecl decl)
{
    if (find_curve(decl.name) != nullptr) {
        throw DeclarationError("curve '" + decl.name + "' already declared");
    }
    require_declared_chart(*this, decl.curve.chart());
    const ParamsDecl* params = find_params(decl.curve.params().name);
    if (params == nullptr || !(params->params == decl.curve.params())) {
        throw DeclarationError("params '" + decl.curve.params().name + "' is not declared earlier in the document");
    }
    declarations_.emplace_back(std::move(decl));
}

void Document::add(FieldDecl decl)
{
    if (find_field(decl.name) != nullptr) {
        throw DeclarationError("field '" + decl.name + "' already declared");
    }
    const ChartDecl* base = find_chart(decl.base);
    if (base == nullptr) {
        throw DeclarationError("chart '" + decl.base + "' is not declared earlier in the document");
    }
    const Chart expected =
        decl.order ? antitangent_chart(prolong_chart(base->chart, static_cast<int>(*decl.order)).chart()).chart()
                   : base->chart;
    if (!same_algebra(expected.algebra(), decl.field.chart().algebra())) {
        throw DeclarationError("field '" + decl.name + "' does not live on the chart it names");
    }
    declarations_.emplace_back(std::move(decl));
}

bool operator==(const Document& a, const Document& b)
{
    if (a.declarations_.size() != b.declarations_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.declarations_.size(); ++i) {
        if (!same_decl(a.declarations_[i], b.declarations_[i])) {
            return false;
        }
    }
    return true;
}

std::string print_canonical(const SuperPolynomial& f)
{
    if (f.is_zero()) {
        return "0";
    }
    const Algebra& alg = *f.algebra();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = sgn(c) < 0;
        const Rational magnitude = abs(c);
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (const auto& e : m.even_factors()) {
            factors += factors.empty() ? "" : "*";
            factors += alg[e.index].name;
            if (e.exponent > 1) {
                factors += "^" + std::to_string(e.exponent);
            }
        }
        for (auto o : m.odd_factors()) {
            factors += factors.empty() ? "" : "*";
            factors += alg[o].name;
        }
        if (factors.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += factors;
        } else {
            out += to_string(magnitude) + "*" + factors;
        }
    }
    return out;
}

namespace {

std::string coordinate_list(const Algebra& alg)
{
    std::string out = "(";
    for (std::size_t i = 0; i < alg.size(); ++i) {
        out += (i == 0 ? "" : ", ") + alg[i].name + ": " + std::string(to_string(alg[i].parity));
    }
    return out + ")";
}

std::string curve_component(const CurveDecl& decl, const TimeSeries& s)
{
    const AlgebraPtr& params = decl.curve.params().algebra;
    const AlgebraPtr with_time = curve_algebra(params);
    const SuperPolynomial t = SuperPolynomial::variable(with_time, params->size());
    SuperPolynomial f(with_time);
    for (unsigned r = 0; r <= s.order(); ++r) {
        f += mul(embed(s[r], with_time), power(t, r));
    }
    return print_canonical(f);
}

void print_decl(std::ostream& out, const ChartDecl& d)
{
    out << "chart " << d.chart.name() << ' ' << coordinate_list(*d.chart.algebra()) << ";\n";
}

void print_decl(std::ostream& out, const ParamsDecl& d)
{
    out << "params " << d.params.name << ' ' << coordinate_list(*d.params.algebra) << ";\n";
}

void print_decl(std::ostream& out, const MorphismDecl& d)
{
    out << "morphism " << d.name << " : " << d.morphism.source().name() << " -> " << d.morphism.target().name()
        << " {\n";
    for (std::size_t i = 0; i < d.morphism.target().size(); ++i) {
        out << "  " << d.morphism.target().coordinate(i).name << " = " << print_canonical(d.morphism.assignment(i))
            << ";\n";
    }
    out << "}\n";
}

void print_decl(std::ostream& out, const CurveDecl& d)
{
    out << "curve " << d.name << " on " << d.curve.chart().name() << " params " << d.curve.params().name
        << " order " << d.curve.order() << " {\n";
    for (std::size_t i = 0; i < d.curve.chart().size(); ++i) {
        out << "  " << d.curve.chart().coordinate(i).name << " = " << curve_component(d, d.curve.component(i))
            << ";\n";
    }
    out << "}\n";
}

void print_field_entries(std::ostream& out, const VectorField& x, std::string_view indent)
{
    bool any = false;
    for (std::size_t i = 0; i < x.values().size(); ++i) {
        if (!x.value(i).is_zero()) {
            out << indent << "d/d " << x.chart().coordinate(i).name << " = " << print_canonical(x.value(i)) << ";\n";
            any = true;
        }
    }
    if (!any) {
        out << indent << "d/d " << x.chart().coordinate(0).name << " = 0;\n";
    }
}

void print_decl(std::ostream& out, const FieldDecl& d)
{
    out << "field " << d.name << " on " << d.base;
    if (d.order) {
        out << " order " << *d.order;
    }
    out << " parity " << to_string(d.field.parity()) << " {\n";
    print_field_entries(out, d.field, "  ");
    out << "}\n";
}

} // namespace

std::string print_canonical(const Document& doc)
{
    std::ostringstream out;
    for (const auto& d : doc.declarations()) {
        std::visit([&](const auto& decl) { print_decl(out, decl); }, d);
    }
    return out.str();
}

std::string print_canonical(const Morphism& phi)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < phi.target().size(); ++i) {
        out << phi.target().coordinate(i).name << " = " << print_canonical(phi.assignment(i)) << ";\n";
    }
    return out.str();
}

std::string print_canonical(const VectorField& x)
{
    std::ostringstream out;
    print_field_entries(out, x, "");
    return out.str();
}

std::string print_canonical(const Jet& jet)
{
    std::ostringstream out;
    for (std::size_t a = 0; a < jet.chart().size(); ++a) {
        out << jet.chart().coordinate(a).name << " = (";
        for (unsigned r = 0; r <= jet.order(); ++r) {
            out << (r == 0 ? "" : ", ") << print_canonical(jet.at(a, r));
        }
        out << ");\n";
    }
    return out.str();
}

} // namespace sjet
