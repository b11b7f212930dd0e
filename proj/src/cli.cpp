#include "sjet/cli.hpp"

#include "sjet/dsl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

namespace sjet::cli {

namespace {

using json = nlohmann::ordered_json;

// Problems with the command line or its references into the document.
class InputError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string command;
    std::string file;
    std::string format = "text";
    std::string morphism;
    std::string chart;
    std::string curve;
    std::string left;
    std::string right;
    std::string lambda = "symbolic";
    std::string at = "0";
    std::string suite;
    int order = -1;
};

struct Output {
    json result = json::object();
    std::string text;
    std::optional<std::string> latex;
    bool verified = true;
};

Document load(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

json assignments_json(const Morphism& phi)
{
    json a = json::object();
    for (std::size_t i = 0; i < phi.target().size(); ++i) {
        a[phi.target().coordinate(i).name] = print_canonical(phi.assignment(i));
    }
    return a;
}

Output morphism_output(const Morphism& phi)
{
    Output o;
    o.result["source"] = phi.source().name();
    o.result["target"] = phi.target().name();
    if (!phi.params().empty()) {
        json p = json::object();
        for (const auto& g : phi.params().algebra->generators()) {
            p[g.name] = to_string(g.parity);
        }
        o.result["params"] = p;
    }
    o.result["assignments"] = assignments_json(phi);
    o.text = "# " + phi.source().name() + " -> " + phi.target().name() + "\n" + print_canonical(phi);
    o.latex = emit_latex(phi);
    return o;
}

const MorphismDecl& morphism_ref(const Document& doc, const std::string& name)
{
    const MorphismDecl* m = doc.find_morphism(name);
    if (m == nullptr) {
        throw InputError("no morphism named '" + name + "'");
    }
    return *m;
}

const Chart& chart_ref(const Document& doc, const std::string& name)
{
    const ChartDecl* c = doc.find_chart(name);
    if (c == nullptr) {
        throw InputError("no chart named '" + name + "'");
    }
    return c->chart;
}

std::string dimension_text(const Chart& c)
{
    const Dimension d = c.dimension();
    return std::to_string(d.even) + "|" + std::to_string(d.odd);
}

Output do_check(const Document& doc, const Options&)
{
    Output o;
    json decls = json::array();
    std::ostringstream text;
    for (const auto& d : doc.declarations()) {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                json entry;
                if constexpr (std::is_same_v<T, ChartDecl>) {
                    entry = {{"kind", "chart"}, {"name", x.chart.name()}, {"dimension", dimension_text(x.chart)}};
                    text << "chart " << x.chart.name() << " (" << dimension_text(x.chart) << ")\n";
                } else if constexpr (std::is_same_v<T, ParamsDecl>) {
                    const Chart as_chart(x.params.name, x.params.algebra);
                    entry = {{"kind", "params"}, {"name", x.params.name}, {"dimension", dimension_text(as_chart)}};
                    text << "params " << x.params.name << " (" << dimension_text(as_chart) << ")\n";
                } else if constexpr (std::is_same_v<T, MorphismDecl>) {
                    entry = {{"kind", "morphism"},
                             {"name", x.name},
                             {"source", x.morphism.source().name()},
                             {"target", x.morphism.target().name()}};
                    text << "morphism " << x.name << " : " << x.morphism.source().name() << " -> "
                         << x.morphism.target().name() << "\n";
                } else if constexpr (std::is_same_v<T, CurveDecl>) {
                    entry = {{"kind", "curve"},
                             {"name", x.name},
                             {"chart", x.curve.chart().name()},
                             {"order", x.curve.order()}};
                    text << "curve " << x.name << " on " << x.curve.chart().name() << " order " << x.curve.order()
                         << "\n";
                } else {
                    entry = {{"kind", "field"},
                             {"name", x.name},
                             {"chart", x.field.chart().name()},
                             {"parity", to_string(x.field.parity())}};
                    text << "field " << x.name << " on " << x.field.chart().name() << " ("
                         << to_string(x.field.parity()) << ")\n";
                }
                decls.push_back(entry);
            },
            d);
    }
    o.result["declarations"] = decls;
    o.text = text.str() + "ok\n";
    return o;
}

Output do_prolong(const Document& doc, const Options& opt)
{
    return morphism_output(prolong_morphism(morphism_ref(doc, opt.morphism).morphism, opt.order));
}

Output do_pit(const Document& doc, const Options& opt)
{
    return morphism_output(antitangent_morphism(morphism_ref(doc, opt.morphism).morphism));
}

Output do_interchange(const Document& doc, const Options& opt)
{
    const Chart& chart = chart_ref(doc, opt.chart);
    const Morphism swap = interchange(chart, opt.order);
    Output o = morphism_output(swap);
    json checks = json::array();
    std::string text;
    for (const auto& d : doc.declarations()) {
        const auto* m = std::get_if<MorphismDecl>(&d);
        if (m == nullptr || m->morphism.source().name() != chart.name()) {
            continue;
        }
        const Morphism& phi = m->morphism;
        const Morphism lhs =
            compose(interchange(phi.target(), opt.order), prolong_morphism(antitangent_morphism(phi), opt.order));
        const Morphism rhs = compose(antitangent_morphism(prolong_morphism(phi, opt.order)), swap);
        const bool holds = lhs == rhs;
        o.verified = o.verified && holds;
        checks.push_back({{"morphism", m->name}, {"holds", holds}});
        text += (holds ? "pass  " : "FAIL  ") + m->name + "\n";
    }
    o.result["checks"] = checks;
    if (!text.empty()) {
        o.text += "# intertwining\n" + text;
    }
    return o;
}

Output do_jet(const Document& doc, const Options& opt)
{
    const CurveDecl* c = doc.find_curve(opt.curve);
    if (c == nullptr) {
        throw InputError("no curve named '" + opt.curve + "'");
    }
    Rational t0;
    try {
        t0 = parse_rational(opt.at);
    } catch (const std::invalid_argument&) {
        throw InputError("--at expects a rational number, got '" + opt.at + "'");
    }
    const Jet jet = jet_of_curve(c->curve, static_cast<unsigned>(opt.order), t0);
    Output o;
    o.result["chart"] = jet.chart().name();
    o.result["order"] = jet.order();
    o.result["at"] = to_string(t0);
    json coefficients = json::object();
    for (std::size_t a = 0; a < jet.chart().size(); ++a) {
        json list = json::array();
        for (unsigned r = 0; r <= jet.order(); ++r) {
            list.push_back(print_canonical(jet.at(a, r)));
        }
        coefficients[jet.chart().coordinate(a).name] = list;
    }
    o.result["coefficients"] = coefficients;
    o.text = print_canonical(jet);
    o.latex = emit_latex(jet);
    return o;
}

std::optional<CanonicalField> canonical_name(std::string_view name)
{
    for (auto f : {CanonicalField::D, CanonicalField::Delta1, CanonicalField::Delta2, CanonicalField::Delta,
                   CanonicalField::J}) {
        if (to_string(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

struct ResolvedField {
    VectorField field;
    std::string latex;
};

ResolvedField resolve_field(const Document& doc, const std::string& name, const std::string& partner,
                            const Options& opt)
{
    if (const FieldDecl* f = doc.find_field(name)) {
        return {f->field, latex_name(name)};
    }
    const auto canonical = canonical_name(name);
    if (!canonical) {
        throw InputError("no field named '" + name + "'");
    }
    std::optional<std::pair<Chart, int>> context;
    if (!opt.chart.empty()) {
        if (opt.order < 0) {
            throw InputError("--chart needs --order to place canonical fields");
        }
        context.emplace(chart_ref(doc, opt.chart), opt.order);
    } else if (const FieldDecl* other = doc.find_field(partner); other != nullptr && other->order) {
        context.emplace(chart_ref(doc, other->base), static_cast<int>(*other->order));
    }
    if (!context) {
        throw InputError("canonical field '" + name +
                         "' needs a declared partner field with an order, or --chart and --order");
    }
    return {field(canonical_fields(context->first, context->second), *canonical), latex_symbol(*canonical)};
}

Output do_bracket(const Document& doc, const Options& opt)
{
    const ResolvedField x = resolve_field(doc, opt.left, opt.right, opt);
    const ResolvedField y = resolve_field(doc, opt.right, opt.left, opt);
    const VectorField z = bracket(x.field, y.field);
    Output o;
    o.result["chart"] = z.chart().name();
    o.result["parity"] = to_string(z.parity());
    json values = json::object();
    for (std::size_t i = 0; i < z.values().size(); ++i) {
        if (!z.value(i).is_zero()) {
            values[z.chart().coordinate(i).name] = print_canonical(z.value(i));
        }
    }
    o.result["components"] = values;
    o.text = "# [" + opt.left + ", " + opt.right + "] on " + z.chart().name() + ", " +
             std::string(to_string(z.parity())) + "\n" + print_canonical(z);
    o.latex = emit_latex(z, "[" + x.latex + ", " + y.latex + "]");
    return o;
}

Output do_homothety(const Document& doc, const Options& opt)
{
    const ProlongedChart jets = prolong_chart(chart_ref(doc, opt.chart), opt.order);
    if (opt.lambda == "symbolic") {
        const ParameterAlgebra params("S", {{"lam", Parity::Even, 0, 0}});
        return morphism_output(homothety(jets, params, SuperPolynomial::variable(params.algebra, "lam")));
    }
    try {
        return morphism_output(homothety(jets, parse_rational(opt.lambda)));
    } catch (const std::invalid_argument&) {
        throw InputError("--lambda expects a rational number or 'symbolic', got '" + opt.lambda + "'");
    }
}

struct Row {
    std::string subject;
    std::string check;
    bool holds;
};

std::string relation_text(const Relation& r)
{
    const std::string rhs = r.sign == 0 ? "0" : (r.sign < 0 ? "-" : "") + std::string(to_string(r.rhs));
    return "[" + std::string(to_string(r.left)) + ", " + std::string(to_string(r.right)) + "] = " + rhs;
}

std::vector<Chart> suite_charts(const Document& doc, const Options& opt)
{
    if (!opt.chart.empty()) {
        return {chart_ref(doc, opt.chart)};
    }
    std::vector<Chart> charts;
    for (const auto& d : doc.declarations()) {
        if (const auto* c = std::get_if<ChartDecl>(&d)) {
            charts.push_back(c->chart);
        }
    }
    return charts;
}

std::vector<const MorphismDecl*> declared_morphisms(const Document& doc)
{
    std::vector<const MorphismDecl*> out;
    for (const auto& d : doc.declarations()) {
        if (const auto* m = std::get_if<MorphismDecl>(&d)) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<Row> functorial_rows(const Document& doc, int k)
{
    std::vector<Row> rows;
    const auto morphisms = declared_morphisms(doc);
    for (const auto* m : morphisms) {
        const Chart& c = m->morphism.source();
        rows.push_back({"id " + c.name(), "T(k) id = id",
                        prolong_morphism(Morphism::identity(c), k) == Morphism::identity(prolong_chart(c, k).chart())});
    }
    for (const auto* inner : morphisms) {
        for (const auto* outer : morphisms) {
            if (inner->morphism.target().name() != outer->morphism.source().name()) {
                continue;
            }
            const Morphism whole = prolong_morphism(compose(outer->morphism, inner->morphism), k);
            const Morphism parts =
                compose(prolong_morphism(outer->morphism, k), prolong_morphism(inner->morphism, k));
            rows.push_back({outer->name + " o " + inner->name, "T(k)(g o f) = T(k)g o T(k)f", whole == parts});
        }
    }
    for (std::size_t i = 0; i < morphisms.size(); ++i) {
        for (std::size_t j = i; j < morphisms.size(); ++j) {
            const Morphism& f = morphisms[i]->morphism;
            const Morphism& g = morphisms[j]->morphism;
            const Morphism lhs = compose(product_identification(f.target(), g.target(), k),
                                         prolong_morphism(pair_morphism(f, g), k));
            const Morphism rhs = compose(pair_morphism(prolong_morphism(f, k), prolong_morphism(g, k)),
                                         product_identification(f.source(), g.source(), k));
            rows.push_back({morphisms[i]->name + " x " + morphisms[j]->name, "T(k)(f x g) = T(k)f x T(k)g",
                            lhs == rhs});
        }
    }
    return rows;
}

std::vector<Row> weight_rows(const Document& doc, int k)
{
    std::vector<Row> rows;
    for (const auto& c : suite_charts(doc, Options{})) {
        const ProlongedChart p = prolong_chart(c, k);
        const Dimension d = c.dimension();
        const Dimension expected{(k + 1) * d.even, (k + 1) * d.odd};
        rows.push_back({"T(k)" + c.name(), "dimension ((k+1)n|(k+1)m)", p.chart().dimension() == expected});
    }
    for (const auto* m : declared_morphisms(doc)) {
        const Morphism phi = prolong_morphism(m->morphism, k);
        const ProlongedChart target = prolong_chart(m->morphism.target(), k);
        bool weighted = true;
        bool triangular = true;
        for (std::size_t b = 0; b < m->morphism.target().size(); ++b) {
            for (unsigned r = 0; r <= static_cast<unsigned>(k); ++r) {
                for (const auto& [mono, coef] : phi.assignment(target.index(b, r)).terms()) {
                    weighted = weighted && total_weight(mono, *phi.domain()) == r;
                    for (const auto& e : mono.even_factors()) {
                        triangular = triangular && (*phi.domain())[e.index].weight <= r;
                    }
                    for (auto i : mono.odd_factors()) {
                        triangular = triangular && (*phi.domain())[i].weight <= r;
                    }
                }
            }
        }
        rows.push_back({m->name, "y@r has total weight r", weighted});
        rows.push_back({m->name, "y@r uses jets of order <= r only", triangular});
    }
    return rows;
}

Output do_verify(const Document& doc, const Options& opt)
{
    Output o;
    o.result["suite"] = opt.suite;
    o.result["order"] = opt.order;
    json rows = json::array();
    std::ostringstream text;
    std::size_t total = 0;
    std::size_t passed = 0;

    if (opt.suite == "relations") {
        const auto charts = suite_charts(doc, opt);
        if (charts.empty()) {
            throw InputError("no charts declared");
        }
        std::string latex;
        for (const auto& c : charts) {
            const RelationReport report = verify_relations(c, opt.order);
            text << "chart " << c.name() << " (" << dimension_text(c) << "), order " << opt.order << "\n";
            for (const auto& row : report.rows) {
                rows.push_back({{"chart", c.name()},
                                {"table", row.relation.table},
                                {"relation", relation_text(row.relation)},
                                {"holds", row.holds}});
                text << "  " << (row.holds ? "pass" : "FAIL") << "  " << relation_text(row.relation) << "\n";
                ++total;
                passed += row.holds ? 1 : 0;
            }
            latex += emit_latex(report);
        }
        o.latex = latex;
        text << passed << " of " << total << " relations hold\n";
    } else {
        const std::vector<Row> checks =
            opt.suite == "functorial" ? functorial_rows(doc, opt.order) : weight_rows(doc, opt.order);
        std::string latex = "\\begin{gather*}\n";
        for (const auto& row : checks) {
            rows.push_back({{"subject", row.subject}, {"check", row.check}, {"holds", row.holds}});
            text << (row.holds ? "pass" : "FAIL") << "  " << row.subject << ": " << row.check << "\n";
            latex += "\\text{" + row.subject + ": " + row.check + "}" + (row.holds ? " \\;\\checkmark" : " \\;\\times") +
                     (&row == &checks.back() ? "\n" : " \\\\\n");
            ++total;
            passed += row.holds ? 1 : 0;
        }
        o.latex = latex + "\\end{gather*}\n";
        text << passed << " of " << total << " checks hold\n";
    }
    o.result["rows"] = rows;
    o.result["passed"] = passed == total;
    o.verified = passed == total;
    o.text = text.str();
    return o;
}

json inputs_json(const Options& opt)
{
    json in = json::object();
    in["file"] = opt.file;
    auto put = [&](const char* key, const std::string& v) {
        if (!v.empty()) {
            in[key] = v;
        }
    };
    put("morphism", opt.morphism);
    put("chart", opt.chart);
    put("curve", opt.curve);
    put("left", opt.left);
    put("right", opt.right);
    put("suite", opt.suite);
    if (opt.command == "homothety") {
        in["lambda"] = opt.lambda;
    }
    if (opt.command == "jet") {
        in["at"] = opt.at;
    }
    if (opt.order >= 0) {
        in["order"] = opt.order;
    }
    return in;
}

bool color_enabled()
{
    const char* v = std::getenv("SJET_COLOR");
    return v != nullptr && std::string_view(v) == "1";
}

std::string error_prefix()
{
    return color_enabled() ? "sjet: \x1b[1;31merror\x1b[0m: " : "sjet: error: ";
}

void add_file(CLI::App* sub, Options& opt)
{
    sub->add_option("file", opt.file, "Input .sman document")->required();
}

void add_format(CLI::App* sub, Options& opt)
{
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
}

void add_order(CLI::App* sub, Options& opt, bool required)
{
    auto* o = sub->add_option("--order", opt.order, "Jet order K")->check(CLI::NonNegativeNumber);
    if (required) {
        o->required();
    }
}

} // namespace

CommandResult run(const std::vector<std::string>& args)
{
    Options opt;
    CLI::App app{"Exact jets, prolongations and canonical fields on supermanifold charts", "sjet"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Parse and validate a document");
    add_file(check, opt);
    add_format(check, opt);

    auto* prolong = app.add_subcommand("prolong", "Prolong a morphism to k-th order tangent bundles");
    add_file(prolong, opt);
    prolong->add_option("--morphism", opt.morphism, "Morphism name")->required();
    add_order(prolong, opt, true);
    add_format(prolong, opt);

    auto* pit = app.add_subcommand("pit", "Antitangent lift of a morphism");
    add_file(pit, opt);
    pit->add_option("--morphism", opt.morphism, "Morphism name")->required();
    add_format(pit, opt);

    auto* swap = app.add_subcommand("interchange", "Identify T(k)(PiT M) with PiT(T(k) M) and check naturality");
    add_file(swap, opt);
    swap->add_option("--chart", opt.chart, "Chart name")->required();
    add_order(swap, opt, true);
    add_format(swap, opt);

    auto* jet = app.add_subcommand("jet", "k-jet of a declared curve");
    add_file(jet, opt);
    jet->add_option("--curve", opt.curve, "Curve name")->required();
    add_order(jet, opt, true);
    jet->add_option("--at", opt.at, "Base point t0 (rational)");
    add_format(jet, opt);

    auto* br = app.add_subcommand("bracket", "Graded commutator of two fields");
    add_file(br, opt);
    br->add_option("--left", opt.left, "Declared field or d, J, Delta, Delta1, Delta2")->required();
    br->add_option("--right", opt.right, "Declared field or d, J, Delta, Delta1, Delta2")->required();
    br->add_option("--chart", opt.chart, "Base chart for canonical fields");
    add_order(br, opt, false);
    add_format(br, opt);

    auto* hom = app.add_subcommand("homothety", "Homothety x@r -> lambda^r x@r on T(k) M");
    add_file(hom, opt);
    hom->add_option("--chart", opt.chart, "Chart name")->required();
    add_order(hom, opt, true);
    hom->add_option("--lambda", opt.lambda, "Rational scale or 'symbolic'");
    add_format(hom, opt);

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    add_file(ver, opt);
    ver->add_option("--suite", opt.suite, "Suite to run")
        ->required()
        ->check(CLI::IsMember({"relations", "functorial", "weights"}));
    ver->add_option("--chart", opt.chart, "Restrict the relation suite to one chart");
    add_order(ver, opt, true);
    add_format(ver, opt);

    CommandResult result;
    if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
        const auto subs = app.get_subcommands({});
        const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* s) {
            return s->get_name() == args.front();
        });
        if (!known) {
            result.exit_code = exit_input_error;
            result.err = error_prefix() + "unknown subcommand '" + args.front() + "'\n\n" + app.help();
            return result;
        }
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        result.out = app.help();
        for (const auto* sub : app.get_subcommands()) {
            result.out = sub->help();
        }
        return result;
    } catch (const CLI::ParseError& e) {
        result.exit_code = exit_input_error;
        result.err = error_prefix() + e.what() + "\n\n" + app.help();
        return result;
    }
    opt.command = app.get_subcommands().front()->get_name();

    const bool as_json = opt.format == "json";
    json diagnostics = json::array();
    Output output;
    bool failed = false;
    try {
        if (opt.format == "latex" && opt.command == "check") {
            throw InputError("check has no LaTeX output");
        }
        const Document doc = load(opt.file);
        if (opt.command == "check") {
            output = do_check(doc, opt);
        } else if (opt.command == "prolong") {
            output = do_prolong(doc, opt);
        } else if (opt.command == "pit") {
            output = do_pit(doc, opt);
        } else if (opt.command == "interchange") {
            output = do_interchange(doc, opt);
        } else if (opt.command == "jet") {
            output = do_jet(doc, opt);
        } else if (opt.command == "bracket") {
            output = do_bracket(doc, opt);
        } else if (opt.command == "homothety") {
            output = do_homothety(doc, opt);
        } else {
            output = do_verify(doc, opt);
        }
    } catch (const ParseError& e) {
        const Diagnostic& d = e.diagnostic();
        const std::string message = std::string(to_string(d.kind)) + " error: " + d.message;
        diagnostics.push_back({{"message", message}, {"line", d.span.line}, {"column", d.span.column}});
        result.err = error_prefix() + opt.file + ":" + std::to_string(d.span.line) + ":" +
                     std::to_string(d.span.column) + ": " + message + "\n";
        failed = true;
    } catch (const Error& e) {
        diagnostics.push_back({{"message", e.what()}, {"line", nullptr}, {"column", nullptr}});
        result.err = error_prefix() + e.what() + "\n";
        failed = true;
    }

    if (failed) {
        result.exit_code = exit_input_error;
    } else if (!output.verified) {
        result.exit_code = exit_verification_failed;
        result.err = error_prefix() + "verification failed\n";
    }

    if (as_json) {
        json doc = json::object();
        doc["kind"] = opt.command;
        doc["inputs"] = inputs_json(opt);
        doc["result"] = failed ? json(nullptr) : output.result;
        doc["diagnostics"] = diagnostics;
        result.out = doc.dump(2) + "\n";
    } else if (!failed) {
        result.out = opt.format == "latex" ? output.latex.value_or("") : output.text;
    }
    return result;
}

} // namespace sjet::cli
