#include "sjet/dsl.hpp"

#include <array>
#include <cctype>
#include <sstream>

namespace sjet {

namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 26> greek = {{
    {"alpha", "\\alpha"}, {"beta", "\\beta"},   {"gamma", "\\gamma"},     {"delta", "\\delta"}, {"epsilon", "\\epsilon"},
    {"eps", "\\epsilon"}, {"zeta", "\\zeta"},   {"eta", "\\eta"},         {"theta", "\\theta"}, {"th", "\\theta"},
    {"iota", "\\iota"},   {"kappa", "\\kappa"}, {"lambda", "\\lambda"},   {"lam", "\\lambda"},  {"mu", "\\mu"},
    {"nu", "\\nu"},       {"xi", "\\xi"},       {"pi", "\\pi"},           {"rho", "\\rho"},     {"sigma", "\\sigma"},
    {"tau", "\\tau"},     {"phi", "\\phi"},     {"chi", "\\chi"},         {"psi", "\\psi"},     {"omega", "\\omega"},
    {"ups", "\\upsilon"},
}};

std::string plain_name(std::string_view name)
{
    std::size_t stem_end = name.size();
    while (stem_end > 1 && std::isdigit(static_cast<unsigned char>(name[stem_end - 1])) != 0) {
        --stem_end;
    }
    const std::string_view stem = name.substr(0, stem_end);
    const std::string_view digits = name.substr(stem_end);
    std::string out;
    for (const auto& [ascii, tex] : greek) {
        if (stem == ascii) {
            out = tex;
        }
    }
    if (out.empty()) {
        if (stem.size() == 1) {
            out = stem;
        } else {
            out = "\\mathrm{";
            for (char c : stem) {
                if (c == '_') {
                    out += "\\_";
                } else {
                    out += c;
                }
            }
            out += "}";
        }
    }
    if (!digits.empty()) {
        out += "_{" + std::string(digits) + "}";
    }
    return out;
}

std::string accent(const std::string& base, unsigned r)
{
    switch (r) {
    case 0:
        return base;
    case 1:
        return "\\dot{" + base + "}";
    case 2:
        return "\\ddot{" + base + "}";
    default:
        return base + "^{(" + std::to_string(r) + ")}";
    }
}

std::string coefficient(const Rational& magnitude)
{
    if (magnitude.get_den() == 1) {
        return magnitude.get_num().get_str();
    }
    return "\\frac{" + magnitude.get_num().get_str() + "}{" + magnitude.get_den().get_str() + "}";
}

std::string power_of(const std::string& base, unsigned e)
{
    if (e == 1) {
        return base;
    }
    const std::string b = base.find('^') != std::string::npos ? "{" + base + "}" : base;
    return b + "^{" + std::to_string(e) + "}";
}

std::string lines(const std::vector<std::string>& rows)
{
    std::string out = "\\begin{gather*}\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += rows[i] + (i + 1 < rows.size() ? " \\\\\n" : "\n");
    }
    return out + "\\end{gather*}\n";
}

} // namespace

std::string latex_name(std::string_view name)
{
    if (name.size() > 2 && name.substr(0, 2) == "d.") {
        return "d " + latex_name(name.substr(2));
    }
    const std::size_t at = name.rfind('@');
    if (at != std::string_view::npos && at + 1 < name.size() &&
        name.find_first_not_of("0123456789", at + 1) == std::string_view::npos) {
        const unsigned r = static_cast<unsigned>(std::stoul(std::string(name.substr(at + 1))));
        std::string_view base = name.substr(0, at);
        if (base.size() > 2 && base.front() == '(' && base.back() == ')') {
            base = base.substr(1, base.size() - 2);
            const std::string inner = latex_name(base);
            return accent(r == 0 ? inner : "(" + inner + ")", r);
        }
        return accent(latex_name(base), r);
    }
    return plain_name(name);
}

std::string emit_latex(const SuperPolynomial& f)
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
        std::vector<std::string> factors;
        if (m.is_unit() || magnitude != 1) {
            factors.push_back(coefficient(magnitude));
        }
        for (const auto& e : m.even_factors()) {
            factors.push_back(power_of(latex_name(alg[e.index].name), e.exponent));
        }
        for (auto o : m.odd_factors()) {
            factors.push_back(latex_name(alg[o].name));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            out += (i == 0 ? "" : "\\,") + factors[i];
        }
    }
    return out;
}

std::string emit_latex(const Morphism& phi)
{
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < phi.target().size(); ++i) {
        rows.push_back(latex_name(phi.target().coordinate(i).name) + " = " + emit_latex(phi.assignment(i)));
    }
    return lines(rows);
}

std::string emit_latex(const Jet& jet)
{
    std::vector<std::string> rows;
    for (std::size_t a = 0; a < jet.chart().size(); ++a) {
        std::string row = latex_name(jet.chart().coordinate(a).name) + " \\mapsto (";
        for (unsigned r = 0; r <= jet.order(); ++r) {
            row += (r == 0 ? "" : ", ") + emit_latex(jet.at(a, r));
        }
        rows.push_back(row + ")");
    }
    return lines(rows);
}

std::string emit_latex(const VectorField& x, std::string_view name)
{
    std::string body;
    for (std::size_t i = 0; i < x.values().size(); ++i) {
        const SuperPolynomial& v = x.value(i);
        if (v.is_zero()) {
            continue;
        }
        std::string value = emit_latex(v);
        if (v.terms().size() > 1) {
            value = "\\left(" + value + "\\right)";
        }
        std::string term = value + "\\,\\frac{\\partial}{\\partial " + latex_name(x.chart().coordinate(i).name) + "}";
        if (body.empty()) {
            body = term;
        } else if (term.front() == '-') {
            body += " - " + term.substr(1);
        } else {
            body += " + " + term;
        }
    }
    return lines({std::string(name) + " = " + (body.empty() ? "0" : body)});
}

std::string latex_symbol(CanonicalField f)
{
    switch (f) {
    case CanonicalField::D:
        return "d";
    case CanonicalField::Delta1:
        return "\\Delta_1";
    case CanonicalField::Delta2:
        return "\\Delta_2";
    case CanonicalField::Delta:
        return "\\Delta";
    case CanonicalField::J:
        return "J";
    }
    return "?";
}

std::string emit_latex(const RelationReport& report)
{
    std::ostringstream head;
    const Dimension dim = report.base.dimension();
    head << "% chart " << report.base.name() << " (" << dim.even << "|" << dim.odd << "), order " << report.order
         << "\n";
    std::vector<std::string> rows;
    for (const auto& row : report.rows) {
        const Relation& r = row.relation;
        std::string rhs = r.sign == 0 ? "0" : (r.sign < 0 ? "-" : "") + latex_symbol(r.rhs);
        rows.push_back("[" + latex_symbol(r.left) + ", " + latex_symbol(r.right) + "] = " + rhs +
                       (row.holds ? " \\;\\checkmark" : " \\;\\times"));
    }
    return head.str() + lines(rows);
}

} // namespace sjet
