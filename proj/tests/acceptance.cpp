// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "support.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace sjet;
using sjet::testing::Random;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool condition, const std::string& what)
    {
        if (!condition) {
            ok = false;
            if (failures.size() < 5) {
                failures.push_back(what);
            }
        }
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double limit_seconds; // 0: no runtime limit
    std::function<Outcome()> body;
};

Chart chart_of(std::size_t n, std::size_t m, const std::string& name = "M")
{
    std::vector<Generator> coords;
    for (std::size_t i = 1; i <= n; ++i) {
        coords.push_back({"x" + std::to_string(i), Parity::Even, 0, 0});
    }
    for (std::size_t i = 1; i <= m; ++i) {
        coords.push_back({"th" + std::to_string(i), Parity::Odd, 0, 0});
    }
    return Chart(name, std::move(coords));
}

Outcome example_reproduction()
{
    Outcome out;
    Random rng(1001);
    const int count = 60;
    for (int i = 0; i < count; ++i) {
        const Chart m = testing::random_chart(rng, "M", "x", "th");
        const Chart n = testing::random_chart(rng, "N", "y", "eta");
        const Morphism phi = testing::random_morphism(rng, m, n, 3);
        const Morphism computed = prolong_morphism(phi, 2);
        const Morphism oracle = testing::second_order_rules(phi);
        for (std::size_t j = 0; j < oracle.target().size(); ++j) {
            const std::string a = print_canonical(computed.assignment(j));
            const std::string b = print_canonical(oracle.assignment(j));
            out.require(a == b, oracle.target().coordinate(j).name + ": " + a + " != " + b);
        }
    }
    out.detail = std::to_string(count) + " morphisms, k=2, term-for-term";
    return out;
}

Outcome relation_suite()
{
    Outcome out;
    int cells = 0;
    std::size_t rows = 0;
    for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t m = 0; m <= 2; ++m) {
            if (n + m == 0) {
                continue;
            }
            for (int k = 1; k <= 4; ++k) {
                const RelationReport report = verify_relations(chart_of(n, m), k);
                ++cells;
                rows = report.rows.size();
                for (const auto& row : report.rows) {
                    out.require(row.holds, "(" + std::to_string(n) + "|" + std::to_string(m) + "), k=" +
                                               std::to_string(k) + ": [" + std::string(to_string(row.relation.left)) +
                                               ", " + std::string(to_string(row.relation.right)) + "]");
                }
            }
        }
    }
    out.detail = std::to_string(cells) + " cells x " + std::to_string(rows) + " displayed rows";
    return out;
}

Outcome functoriality_and_products()
{
    Outcome out;
    Random rng(1003);
    const int count = 120;
    for (int i = 0; i < count; ++i) {
        const Chart a = testing::random_chart(rng, "A", "x", "th");
        const Chart b = testing::random_chart(rng, "B", "y", "eta");
        const Chart c = testing::random_chart(rng, "C", "z", "ze");
        const Morphism psi = testing::random_morphism(rng, a, b);
        const Morphism phi = testing::random_morphism(rng, b, c);
        const int k = rng.integer(0, 3);
        out.require(prolong_morphism(compose(phi, psi), k) == compose(prolong_morphism(phi, k), prolong_morphism(psi, k)),
                    "composition, k=" + std::to_string(k));
        out.require(prolong_morphism(Morphism::identity(a), k) == Morphism::identity(prolong_chart(a, k).chart()),
                    "identity, k=" + std::to_string(k));

        const Chart a2 = testing::random_chart(rng, "D", "u", "om");
        const Chart b2 = testing::random_chart(rng, "E", "v", "ka");
        const Morphism chi = testing::random_morphism(rng, a2, b2);
        const Morphism left =
            compose(product_identification(b, b2, k), prolong_morphism(pair_morphism(psi, chi), k));
        const Morphism right = compose(pair_morphism(prolong_morphism(psi, k), prolong_morphism(chi, k)),
                                       product_identification(a, a2, k));
        out.require(left == right, "product, k=" + std::to_string(k));
    }
    out.detail = std::to_string(count) + " composable pairs and " + std::to_string(count) + " products, k<=3";
    return out;
}

Outcome dimension_and_grading()
{
    Outcome out;
    int dims = 0;
    for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t m = 0; m <= 2; ++m) {
            if (n + m == 0) {
                continue;
            }
            for (unsigned k = 0; k <= 4; ++k) {
                const Dimension d = prolong_chart(chart_of(n, m), static_cast<int>(k)).chart().dimension();
                out.require(d == Dimension{(k + 1) * n, (k + 1) * m}, "dimension");
                ++dims;
            }
        }
    }
    Random rng(1004);
    const int count = 100;
    for (int i = 0; i < count; ++i) {
        const Chart m = testing::random_chart(rng, "M", "x", "th");
        const Chart n = testing::random_chart(rng, "N", "y", "eta");
        const Morphism phi = testing::random_morphism(rng, m, n, 3);
        const unsigned k = static_cast<unsigned>(rng.integer(0, 3));
        const Morphism p = prolong_morphism(phi, static_cast<int>(k));
        const ProlongedChart target = prolong_chart(n, static_cast<int>(k));
        const Algebra& source = *p.domain();
        for (unsigned r = 0; r <= k; ++r) {
            for (std::size_t b = 0; b < n.size(); ++b) {
                for (const auto& [monomial, c] : p.assignment(target.index(b, r)).terms()) {
                    out.require(total_weight(monomial, source) == r, "weight of y@" + std::to_string(r));
                    for (const auto& f : monomial.even_factors()) {
                        out.require(source[f.index].weight <= r, "triangularity");
                    }
                    for (const auto index : monomial.odd_factors()) {
                        out.require(source[index].weight <= r, "triangularity");
                    }
                }
            }
        }
    }
    out.detail = std::to_string(dims) + " (n|m,k) cells, " + std::to_string(count) + " morphisms for weights";
    return out;
}

Outcome homothety_action()
{
    Outcome out;
    const ParameterAlgebra s("S", {{"lam", Parity::Even, 0, 0}, {"mu", Parity::Even, 0, 0}});
    const SuperPolynomial lam = SuperPolynomial::variable(s.algebra, "lam");
    const SuperPolynomial mu = SuperPolynomial::variable(s.algebra, "mu");
    int cells = 0;
    for (std::size_t n = 0; n <= 2; ++n) {
        for (std::size_t m = 0; m <= 2; ++m) {
            if (n + m == 0) {
                continue;
            }
            for (int k = 0; k <= 4; ++k) {
                ++cells;
                const std::string cell = "(" + std::to_string(n) + "|" + std::to_string(m) + "), k=" + std::to_string(k);
                const Chart c = chart_of(n, m);
                const ProlongedChart p = prolong_chart(c, k);
                out.require(compose(homothety(p, s, lam), homothety(p, s, mu)) == homothety(p, s, mul(lam, mu)),
                            "semigroup " + cell);
                out.require(homothety(p, 0) == compose(zero_section(p), project(p, 0)), "lambda=0 " + cell);
                out.require(homothety(p, 1) == Morphism::identity(p.chart()), "lambda=1 " + cell);

                // Derivative in lam at lam=1 of the antitangent lift of h(lam).
                const ParameterAlgebra single("S", {{"lam", Parity::Even, 0, 0}});
                const Morphism lift =
                    antitangent_morphism(homothety(p, single, SuperPolynomial::variable(single.algebra, "lam")));
                if (k == 0) {
                    continue;
                }
                const CanonicalFields f = canonical_fields(c, k);
                const AlgebraPtr& forms = f.forms.chart().algebra();
                Substitution at_one(lift.domain(), forms);
                for (std::size_t i = 0; i < forms->size(); ++i) {
                    at_one.set((*forms)[i].name, SuperPolynomial::variable(forms, i));
                }
                at_one.set("lam", SuperPolynomial(forms, 1));
                const std::size_t index = lift.domain()->index_of("lam");
                for (std::size_t i = 0; i < forms->size(); ++i) {
                    const SuperPolynomial derivative = substitute(partial(lift.assignment(i), index), at_one);
                    out.require(derivative == f.delta2.value(i), "Delta2 derivative " + cell);
                }
            }
        }
    }
    out.detail = std::to_string(cells) + " (n|m,k) cells, symbolic lam, mu";
    return out;
}

Outcome jet_naturality()
{
    Outcome out;
    Random rng(1006);
    const int count = 120;
    for (int i = 0; i < count; ++i) {
        const Chart m = testing::random_chart(rng, "M", "x", "th");
        const ParameterAlgebra from = testing::random_params(rng, "S", "s");
        const ParameterAlgebra to = testing::random_params(rng, "P", "p");
        const unsigned k = static_cast<unsigned>(rng.integer(0, 3));
        const SCurve gamma = testing::random_curve(rng, m, from, k + static_cast<unsigned>(rng.integer(0, 1)));
        const Substitution psi = testing::random_parameter_change(rng, from, to);
        out.require(jet_of_curve(reparameterise(gamma, psi, "P"), k) == substitute(jet_of_curve(gamma, k), psi, "P"),
                    "pair " + std::to_string(i));
    }
    out.detail = std::to_string(count) + " curve/substitution pairs, k<=3";
    return out;
}

Outcome contact_criterion()
{
    Outcome out;
    Random rng(1007);
    const int curves = 20;
    const int functions = 50;
    for (int i = 0; i < curves; ++i) {
        const Chart c = testing::random_chart(rng, "M", "x", "th");
        const ParameterAlgebra s = testing::random_params(rng, "S", "s");
        const unsigned k = static_cast<unsigned>(rng.integer(0, 3));
        const unsigned order = k + 2;
        const SCurve gamma = testing::random_curve(rng, c, s, order);
        std::vector<TimeSeries> comps;
        for (std::size_t a = 0; a < c.size(); ++a) {
            std::vector<SuperPolynomial> cs = gamma.component(a).coefficients();
            for (unsigned r = k + 1; r <= order; ++r) {
                cs[r] = testing::random_homogeneous(rng, s.algebra, c.coordinate(a).parity, 2, 3);
            }
            comps.emplace_back(std::move(cs));
        }
        const SCurve delta(c, s, order, std::move(comps));
        out.require(contact_equal(gamma, delta, k), "coordinate jets agree");
        for (int j = 0; j < functions; ++j) {
            const SuperPolynomial f = testing::random_polynomial(rng, c.algebra(), 3, 4);
            // Coefficients by explicit t-differentiation, independent of series_compose.
            const TimeSeries a = testing::compose_by_differentiation(f, gamma.as_substitution());
            const TimeSeries b = testing::compose_by_differentiation(f, delta.as_substitution());
            for (unsigned r = 0; r <= k; ++r) {
                out.require(a[r] == b[r], "f o gamma vs f o delta at order " + std::to_string(r));
            }
            out.require(series_jet(function_along(f, gamma), k, 0) == series_jet(function_along(f, delta), k, 0),
                        "series jets");
        }
    }
    out.detail = std::to_string(curves) + " contact pairs x " + std::to_string(functions) + " functions of degree <=3";
    return out;
}

Outcome interchange_criterion()
{
    Outcome out;
    Random rng(1008);
    const int count = 60;
    for (int i = 0; i < count; ++i) {
        const Chart a = testing::random_chart(rng, "A", "x", "th");
        const Chart b = testing::random_chart(rng, "B", "y", "eta");
        const Morphism phi = testing::random_morphism(rng, a, b);
        for (int k = 0; k <= 3; ++k) {
            out.require(compose(interchange(b, k), prolong_morphism(antitangent_morphism(phi), k)) ==
                            compose(antitangent_morphism(prolong_morphism(phi, k)), interchange(a, k)),
                        "k=" + std::to_string(k));
        }
    }
    out.detail = std::to_string(count) + " morphisms, k=0..3";
    return out;
}

// Order-1 transformation of R(0|1)-points: x = X0 + X1 t, theta = tau (U0 + U1 t).
Outcome supercurve_degeneration()
{
    Outcome out;
    Random rng(1009);
    const int count = 60;
    int constant_w = 0;
    int extra_term = 0;
    for (int trial = 0; trial < count; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.integer(0, 2));
        const std::size_t m = static_cast<std::size_t>(rng.integer(1, 3));
        const Chart c = chart_of(n, m);
        std::vector<Generator> primed;
        for (std::size_t i = 1; i <= n; ++i) {
            primed.push_back({"y" + std::to_string(i), Parity::Even, 0, 0});
        }
        for (std::size_t i = 1; i <= m; ++i) {
            primed.push_back({"eta" + std::to_string(i), Parity::Odd, 0, 0});
        }
        const Chart target("N", primed);
        // Every third morphism has x-independent w.
        const bool flat = trial % 3 == 0;
        std::vector<SuperPolynomial> images;
        for (std::size_t j = 0; j < target.size(); ++j) {
            const Parity p = target.coordinate(j).parity;
            SuperPolynomial f = testing::random_homogeneous(rng, c.algebra(), p, 3, 4);
            if (flat && p == Parity::Odd) {
                SuperPolynomial g(c.algebra());
                for (const auto& [mono, coeff] : f.terms()) {
                    if (mono.odd_factors().size() != 1 || mono.even_degree() == 0) {
                        g += SuperPolynomial::monomial(c.algebra(), mono, coeff);
                    }
                }
                f = g;
            }
            images.push_back(std::move(f));
        }
        const Morphism phi(c, target, images);
        constant_w += flat ? 1 : 0;

        std::vector<Generator> params;
        for (std::size_t i = 1; i <= n; ++i) {
            params.push_back({"X0_" + std::to_string(i), Parity::Even, 0, 0});
            params.push_back({"X1_" + std::to_string(i), Parity::Even, 0, 0});
        }
        for (std::size_t i = 1; i <= m; ++i) {
            params.push_back({"U0_" + std::to_string(i), Parity::Even, 0, 0});
            params.push_back({"U1_" + std::to_string(i), Parity::Even, 0, 0});
        }
        params.push_back({"tau", Parity::Odd, 0, 0});
        const AlgebraPtr s = Algebra::make(params);
        auto gen = [&](const std::string& name) { return SuperPolynomial::variable(s, name); };
        const SuperPolynomial tau = gen("tau");

        auto point_of = [&](const Morphism& map) {
            const Morphism p1 = prolong_morphism(map, 1);
            Substitution at(p1.domain(), s);
            for (std::size_t i = 1; i <= n; ++i) {
                const std::string x = "x" + std::to_string(i);
                at.set(x + "@0", gen("X0_" + std::to_string(i)));
                at.set(x + "@1", gen("X1_" + std::to_string(i)));
            }
            for (std::size_t i = 1; i <= m; ++i) {
                const std::string th = "th" + std::to_string(i);
                at.set(th + "@0", mul(tau, gen("U0_" + std::to_string(i))));
                at.set(th + "@1", mul(tau, gen("U1_" + std::to_string(i))));
            }
            std::vector<SuperPolynomial> values;
            for (std::size_t j = 0; j < p1.target().size(); ++j) {
                values.push_back(substitute(p1.assignment(j), at));
            }
            return values;
        };
        const std::vector<SuperPolynomial> values = point_of(phi);
        const ProlongedChart jets = prolong_chart(target, 1);

        // Independent first-order expansion about theta = 0.
        Substitution base(c.algebra(), s);
        for (std::size_t i = 1; i <= n; ++i) {
            base.set("x" + std::to_string(i), gen("X0_" + std::to_string(i)));
        }
        for (std::size_t i = 1; i <= m; ++i) {
            base.set("th" + std::to_string(i), SuperPolynomial(s));
        }
        auto ev = [&](const SuperPolynomial& f) { return substitute(f, base); };
        const std::size_t tau_index = s->index_of("tau");

        for (std::size_t j = 0; j < target.size(); ++j) {
            const std::string name = target.coordinate(j).name;
            const SuperPolynomial& f = phi.assignment(j);
            const SuperPolynomial& v0 = values[jets.index(j, 0)];
            const SuperPolynomial& v1 = values[jets.index(j, 1)];
            SuperPolynomial e0(s);
            SuperPolynomial e1(s);
            SuperPolynomial table1(s);
            if (target.coordinate(j).parity == Parity::Even) {
                e0 = ev(f);
                for (std::size_t nu = 0; nu < n; ++nu) {
                    e1 += mul(gen("X1_" + std::to_string(nu + 1)), ev(partial(f, nu)));
                }
                table1 = e1;
                for (const auto* v : {&v0, &v1}) {
                    out.require(!v->uses(tau_index), name + " is free of tau");
                }
            } else {
                for (std::size_t i = 0; i < m; ++i) {
                    const SuperPolynomial w = partial(f, n + i);
                    const SuperPolynomial u0 = mul(tau, gen("U0_" + std::to_string(i + 1)));
                    const SuperPolynomial u1 = mul(tau, gen("U1_" + std::to_string(i + 1)));
                    e0 += mul(u0, ev(w));
                    e1 += mul(u1, ev(w));
                    table1 += mul(u1, ev(w));
                    for (std::size_t nu = 0; nu < n; ++nu) {
                        e1 += mul(mul(u0, gen("X1_" + std::to_string(nu + 1))), ev(partial(w, nu)));
                    }
                }
                for (const auto* v : {&v0, &v1}) {
                    for (const auto& [mono, coeff] : v->terms()) {
                        out.require(mono.exponent(static_cast<std::uint32_t>(tau_index)) == 1,
                                    name + " is linear in tau");
                    }
                }
            }
            out.require(v0 == e0, name + "@0 matches the first-order expansion");
            out.require(v1 == e1, name + "@1 matches the first-order expansion");
            if (flat) {
                out.require(v1 == table1, name + "@1 has the displayed table form");
            } else if (v1 != table1) {
                ++extra_term;
            }
        }

        // Terms of theta-degree >= 2 in x' and >= 3 in theta' never reach the point.
        std::vector<SuperPolynomial> truncated;
        for (std::size_t j = 0; j < target.size(); ++j) {
            const std::size_t keep = target.coordinate(j).parity == Parity::Even ? 0 : 1;
            SuperPolynomial g(c.algebra());
            for (const auto& [mono, coeff] : phi.assignment(j).terms()) {
                if (mono.odd_factors().size() <= keep) {
                    g += SuperPolynomial::monomial(c.algebra(), mono, coeff);
                }
            }
            truncated.push_back(std::move(g));
        }
        out.require(point_of(Morphism(c, target, truncated)) == values, "higher theta terms do not survive");
    }
    out.detail = std::to_string(count) + " coordinate changes (" + std::to_string(constant_w) +
                 " with x-independent w, " + std::to_string(extra_term) +
                 " odd jets carrying the theta xdot dw/dx term), order 1, single odd tau";
    return out;
}

Outcome dsl_round_trip()
{
    Outcome out;
    Random rng(1010);
    const int count = 200;
    for (int i = 0; i < count; ++i) {
        const Document d = testing::random_document(rng);
        const std::string printed = print_canonical(d);
        const Document back = parse(printed);
        out.require(back == d, "document " + std::to_string(i));
        out.require(print_canonical(back) == printed, "fixed point " + std::to_string(i));
    }
    out.detail = std::to_string(count) + " random documents";
    return out;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "second-order rules reproduce the closed formulas", 10, example_reproduction},
        {"AC2", "bracket relation tables", 30, relation_suite},
        {"AC3", "functoriality and products", 30, functoriality_and_products},
        {"AC4", "dimension and weight grading", 10, dimension_and_grading},
        {"AC5", "homothety action", 5, homothety_action},
        {"AC6", "jet naturality under parameter change", 0, jet_naturality},
        {"AC7", "contact criterion", 0, contact_criterion},
        {"AC8", "interchange", 0, interchange_criterion},
        {"AC9", "supercurve degeneration", 0, supercurve_degeneration},
        {"AC10", "DSL round-trip", 5, dsl_round_trip},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.ok = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0 || seconds < c.limit_seconds;
        const bool pass = o.ok && in_time;
        all = all && pass;

        std::ostringstream line;
        line << c.id << ' ' << (pass ? "PASS" : "FAIL") << "  " << c.title << ": " << o.detail << "; exact; ";
        char time[64];
        if (c.limit_seconds > 0) {
            std::snprintf(time, sizeof time, "%.2f s (limit %.0f s)", seconds, c.limit_seconds);
        } else {
            std::snprintf(time, sizeof time, "%.2f s", seconds);
        }
        line << time;
        std::puts(line.str().c_str());
        for (const auto& f : o.failures) {
            std::printf("    %s\n", f.c_str());
        }
        if (!in_time) {
            std::puts("    runtime limit exceeded");
        }
    }
    return all ? 0 : 1;
}
