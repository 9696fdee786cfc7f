#include "wittlab/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "wittlab/axioms.hpp"
#include "wittlab/json_io.hpp"

namespace wittlab {

namespace {

using nlohmann::json;
using json_io::field;

struct Flags {
    std::string ring;
    std::uint32_t modulus = 0;
    std::uint64_t seed = 0;
    bool pretty = false;
    bool batch = false;
    std::string input;
    std::string output;
    std::string route = "auto";
    std::string complex = "nondegenerate";
    std::string to = "all";
    std::string model = "witt";
    std::uint32_t r_max = 4;
    std::uint32_t samples = 200;
};

witt::Route route_of(const std::string& s)
{
    if (s == "auto")
        return witt::Route::Auto;
    if (s == "series")
        return witt::Route::Series;
    if (s == "universal")
        return witt::Route::Universal;
    if (s == "ghost-lift")
        return witt::Route::GhostLift;
    throw SchemaError("unknown route '" + s + "'");
}

std::uint32_t uint_field(const json& j, const char* key)
{
    const auto v = json_io::integer_from_json(field(j, key));
    if (v < 0 || !v.fits_uint_p())
        throw SchemaError(std::string("'") + key + "' must be a nonnegative integer");
    return static_cast<std::uint32_t>(v.get_ui());
}

class Session {
public:
    explicit Session(const Flags& f) : flags_(f) {}

    RingPtr ring(const json& j) const
    {
        if (j.is_object() && j.contains("ring"))
            return Ring::parse(j["ring"].get<std::string>());
        if (flags_.ring.empty())
            throw SchemaError("no ring given (payload field 'ring' or --ring)");
        return Ring::parse(flags_.ring);
    }

    std::uint32_t modulus(const json& j) const
    {
        if (j.is_object() && j.contains("modulus"))
            return uint_field(j, "modulus");
        if (flags_.modulus == 0)
            throw SchemaError("no modulus given (payload field 'modulus' or --modulus)");
        return flags_.modulus;
    }

    TruncationSet truncation(const json& j) const
    {
        if (j.is_object() && j.contains("truncation"))
            return json_io::truncation_from_json(j["truncation"]);
        return TruncationSet::full(modulus(j));
    }

    /// Fills a missing ring or truncation from the flags.
    json complete(json j) const
    {
        if (!j.is_object())
            throw SchemaError("expected a JSON object, got " + j.dump());
        if (!j.contains("ring"))
            j["ring"] = ring(j)->name();
        if (!j.contains("truncation") && !j.contains("normal_form") && !j.contains("terms"))
            j["truncation"] = json_io::to_json(truncation(j));
        if ((j.contains("normal_form") || j.contains("terms")) && !j.contains("modulus"))
            j["modulus"] = modulus(j);
        return j;
    }

    WittVector witt(const json& payload, const char* key) const
    {
        return json_io::witt_from_json(complete(field(payload, key)));
    }

    GammaCycleClass cycle_class(const json& payload, const char* key) const
    {
        auto j = complete(field(payload, key));
        if (j.contains("terms"))
            return cycles::class_of(json_io::chain_from_json(j));
        return json_io::class_from_json(j);
    }

    witt::Route route() const { return route_of(flags_.route); }

    const Flags& flags() const { return flags_; }

private:
    const Flags& flags_;
};

json series_json(const TruncatedSeries& f)
{
    json c = json::array();
    for (const auto& a : f.coeffs())
        c.push_back(json_io::to_json(a));
    return {{"ring", f.ring()->name()}, {"coefficients", c}};
}

json convert(const Session& s, const json& p)
{
    std::optional<WittVector> w;
    if (p.contains("witt")) {
        w = s.witt(p, "witt");
    } else if (p.contains("series")) {
        const auto& sj = p["series"];
        const auto ring = s.ring(sj);
        const auto poly = json_io::poly_from_json(field(sj, "coefficients"), ring);
        const auto& c = field(sj, "coefficients");
        if (c.empty())
            throw SchemaError("series needs at least the constant coefficient");
        w = witt::from_series(TruncatedSeries::from_poly(poly, c.size() - 1));
    } else if (p.contains("class")) {
        w = cycles::to_witt(s.cycle_class(p, "class"));
    } else {
        throw SchemaError("convert needs one of 'witt', 'series', 'class'");
    }
    if (!w->truncation().is_full())
        throw PreconditionError("series and cycle forms need a truncation {1..m}");
    const auto& to = s.flags().to;
    json out = json::object();
    if (to == "witt" || to == "all")
        out["witt"] = json_io::to_json(*w);
    if (to == "series" || to == "all")
        out["series"] = series_json(witt::to_series(*w));
    if (to == "class" || (to == "all" && w->ring()->is_ufd()))
        out["class"] = json_io::to_json(cycles::tau(*w));
    if (out.empty())
        throw SchemaError("--to must be witt, series, class or all");
    return out;
}

json homology(const Session& s, const json& p, bool compare)
{
    if (!p.contains("faces")) {
        if (compare)
            throw SchemaError("homology compare needs a cubical group (with 'faces')");
        return json_io::homology_to_json(json_io::complex_from_json(p).homology());
    }
    const auto c = json_io::cubical_from_json(p);
    if (compare) {
        const auto cmp = compare_normalization(c);
        return {{"normalized", json_io::homology_to_json(cmp.normalized)},
                {"nondegenerate", json_io::homology_to_json(cmp.nondegenerate)},
                {"compared_degrees", cmp.compared},
                {"agree", cmp.agree}};
    }
    const auto& mode = s.flags().complex;
    if (mode == "full")
        return json_io::homology_to_json(c.full_complex().homology());
    if (mode == "nondegenerate")
        return json_io::homology_to_json(c.nondegenerate_complex().homology());
    if (mode == "normalized")
        return json_io::homology_to_json(c.normalized_subcomplex().complex.homology());
    throw SchemaError("--complex must be full, nondegenerate or normalized");
}

json witness_json(const cycles::Mod1Witness& w)
{
    json comps = json::array();
    for (const auto& [p, n] : w.components)
        comps.push_back({{"polynomial", json_io::to_json(p)}, {"text", p.to_string()}, {"multiplicity", n.get_str()}});
    return {{"ring", w.ring->name()},
            {"components", comps},
            {"face_one", json_io::to_json(w.face_one)},
            {"face_zero", json_io::to_json(w.face_zero)}};
}

json axiom_v_json(const AxiomVReport& r)
{
    auto ideal = [](const std::optional<TriangularIdeal>& i) { return i ? json_io::to_json(*i) : json(nullptr); };
    return {{"a", json_io::to_json(r.a)}, {"r", r.r},
            {"lhs", ideal(r.lhs)},        {"rhs", ideal(r.rhs)},
            {"expected", ideal(r.expected)}, {"both_zero", r.both_zero},
            {"passed", r.passed}};
}

struct ErrorInfo {
    int code;
    std::string kind;
    std::string message;
};

ErrorInfo classify(const std::exception_ptr& e)
{
    try {
        std::rethrow_exception(e);
    } catch (const SchemaError& x) {
        return {2, "schema", x.what()};
    } catch (const nlohmann::json::exception& x) {
        return {2, "schema", x.what()};
    } catch (const DescriptorMismatch& x) {
        return {3, "descriptor_mismatch", x.what()};
    } catch (const PreconditionError& x) {
        return {3, "precondition", x.what()};
    } catch (const InvariantError& x) {
        return {4, "invariant", x.what()};
    } catch (const std::exception& x) {
        return {4, "internal", x.what()};
    }
}

json error_json(const ErrorInfo& e) { return {{"error", {{"kind", e.kind}, {"message", e.message}}}}; }

} // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    Flags flags;
    CLI::App app{"Exact big Witt vectors, Gamma-cycles and cubical homology", "wittlab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--ring", flags.ring, "ring descriptor: Z, Z/n, fp:p, with [x,y] for polynomials");
    app.add_option("--modulus,--m", flags.modulus, "truncation {1..m} / cycle modulus when the payload has none");
    app.add_option("--seed", flags.seed, "seed for sampled suites");
    app.add_flag("--pretty", flags.pretty, "indent the JSON output");
    app.add_flag("--batch", flags.batch, "one JSON payload per input line, one result per output line");
    app.add_option("--input,-i", flags.input, "read the payload from a file instead of stdin");
    app.add_option("--output,-o", flags.output, "write the result to a file instead of stdout");

    Session session(flags);
    // Handler for the selected leaf command; null for commands without a payload.
    std::function<json(const json&)> handler;
    std::function<json()> standalone;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                    std::function<json(const json&)> h) {
        auto* sub = parent->add_subcommand(name, help);
        sub->callback([&handler, h] { handler = h; });
        return sub;
    };

    auto* witt_cmd = app.add_subcommand("witt", "Witt vector arithmetic");
    witt_cmd->require_subcommand(1);
    const auto& S = session;
    leaf(witt_cmd, "add", "x + y  {x, y}", [&](const json& p) {
        return json_io::to_json(witt::add(S.witt(p, "x"), S.witt(p, "y"), S.route()));
    })->add_option("--route", flags.route, "auto, series, universal or ghost-lift");
    leaf(witt_cmd, "mul", "x * y  {x, y}", [&](const json& p) {
        return json_io::to_json(witt::multiply(S.witt(p, "x"), S.witt(p, "y"), S.route()));
    })->add_option("--route", flags.route, "auto, series, universal or ghost-lift");
    leaf(witt_cmd, "neg", "-x  {x}", [&](const json& p) {
        return json_io::to_json(witt::negate(S.witt(p, "x"), S.route()));
    })->add_option("--route", flags.route, "auto, series, universal or ghost-lift");
    leaf(witt_cmd, "ghost", "ghost components  {x}",
         [&](const json& p) { return json_io::to_json(witt::ghost(S.witt(p, "x"))); });
    leaf(witt_cmd, "teich", "Teichmuller lift [a]  {a, ring?, truncation? | modulus?}", [&](const json& p) {
        return json_io::to_json(witt::teichmuller(json_io::element_from_json(field(p, "a"), S.ring(p)), S.truncation(p)));
    });
    leaf(witt_cmd, "frob", "F_r x  {r, x}", [&](const json& p) {
        return json_io::to_json(witt::frobenius(uint_field(p, "r"), S.witt(p, "x"), S.route()));
    })->add_option("--route", flags.route, "auto, series, universal or ghost-lift");
    leaf(witt_cmd, "versch", "V_r x  {r, x, target?}", [&](const json& p) {
        const auto x = S.witt(p, "x");
        const auto r = uint_field(p, "r");
        if (p.contains("target"))
            return json_io::to_json(witt::verschiebung(r, x, json_io::truncation_from_json(p["target"])));
        return json_io::to_json(witt::verschiebung(r, x));
    });
    leaf(witt_cmd, "restrict", "restriction to a smaller truncation set  {x, target}", [&](const json& p) {
        return json_io::to_json(witt::restrict_to(S.witt(p, "x"), json_io::truncation_from_json(field(p, "target"))));
    });

    auto* cyc = app.add_subcommand("cycles", "Gamma-cycle classes in TH^1(R,1;m)");
    cyc->require_subcommand(1);
    leaf(cyc, "tau", "tau of a Witt vector {x} or of a unit polynomial {series, modulus}", [&](const json& p) {
        if (p.contains("x"))
            return json_io::to_json(cycles::tau(S.witt(p, "x")));
        const auto ring = S.ring(p);
        return json_io::to_json(cycles::tau(json_io::poly_from_json(field(p, "series"), ring), S.modulus(p)));
    });
    leaf(cyc, "wedge", "product x ^ y  {x, y}",
         [&](const json& p) { return json_io::to_json(cycles::wedge(S.cycle_class(p, "x"), S.cycle_class(p, "y"))); });
    leaf(cyc, "frob", "F_r x  {r, x}", [&](const json& p) {
        return json_io::to_json(cycles::frobenius(uint_field(p, "r"), S.cycle_class(p, "x")));
    });
    leaf(cyc, "versch", "V_r x  {r, x}", [&](const json& p) {
        return json_io::to_json(cycles::verschiebung(uint_field(p, "r"), S.cycle_class(p, "x")));
    });
    leaf(cyc, "restrict", "restriction to a smaller modulus  {x, target}", [&](const json& p) {
        return json_io::to_json(cycles::restrict_to(S.cycle_class(p, "x"), uint_field(p, "target")));
    });
    leaf(cyc, "axiom-v", "ideal check of axiom (v)  {a, r, ring?}", [&](const json& p) {
        return axiom_v_json(axiom_v_check(json_io::element_from_json(field(p, "a"), S.ring(p)), uint_field(p, "r")));
    });
    leaf(cyc, "mod1-witness", "bounding chain for a chain at modulus 0  {x}", [&](const json& p) {
        auto j = S.complete(field(p, "x"));
        if (!j.contains("terms"))
            throw SchemaError("mod1-witness needs a chain {ring, modulus, terms}");
        return witness_json(cycles::mod1_collapse_witness(json_io::chain_from_json(j)));
    });

    auto* hom = app.add_subcommand("homology", "homology of integer chain complexes and cubical groups");
    hom->require_subcommand(1);
    leaf(hom, "compute", "homology of {levels, boundaries} or of a cubical group",
         [&](const json& p) { return homology(S, p, false); })
        ->add_option("--complex", flags.complex, "for cubical groups: full, nondegenerate or normalized");
    leaf(hom, "compare", "normalized vs nondegenerate homology of a cubical group",
         [&](const json& p) { return homology(S, p, true); });

    auto* ax = app.add_subcommand("axioms", "seeded axiom suites");
    ax->require_subcommand(1);
    auto suite_config = [&] {
        if (flags.ring.empty())
            throw SchemaError("axiom suites need --ring");
        return AxiomSuiteConfig{Ring::parse(flags.ring), flags.modulus ? flags.modulus : 6, flags.r_max,
                                flags.samples, flags.seed};
    };
    auto* run = ax->add_subcommand("run", "restricted Witt-complex axioms on one model");
    run->add_option("--model", flags.model, "witt or cycles");
    run->add_option("--rmax", flags.r_max, "largest operator index");
    run->add_option("--samples", flags.samples, "samples per identity");
    run->callback([&] {
        standalone = [&] { return run_axiom_suite(suite_config(), axiom_model_from_string(flags.model)).to_json(); };
    });
    auto* gh = ax->add_subcommand("ghost", "ghost-side formulas for the Witt operations");
    gh->add_option("--rmax", flags.r_max, "largest operator index");
    gh->add_option("--samples", flags.samples, "samples per identity");
    gh->callback([&] { standalone = [&] { return ghost_oracle_suite(suite_config()).to_json(); }; });

    auto* conv = leaf(&app, "convert", "between Witt coordinates, series and cycle classes  {witt | series | class}",
                      [&](const json& p) { return convert(S, p); });
    conv->add_option("--to", flags.to, "witt, series, class or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << error_json({2, "usage", e.what()}).dump() << "\n";
        return 2;
    } catch (...) {
        const auto info = classify(std::current_exception());
        err << error_json(info).dump() << "\n";
        return info.code;
    }

    std::ofstream file_out;
    std::ostream* sink = &out;
    if (!flags.output.empty()) {
        file_out.open(flags.output, std::ios::binary);
        if (!file_out) {
            err << error_json({2, "usage", "cannot open " + flags.output}).dump() << "\n";
            return 2;
        }
        sink = &file_out;
    }
    auto emit = [&](const json& j) { *sink << (flags.pretty ? j.dump(2) : j.dump()) << "\n"; };

    if (standalone) {
        try {
            emit(standalone());
            return 0;
        } catch (...) {
            const auto info = classify(std::current_exception());
            err << error_json(info).dump() << "\n";
            return info.code;
        }
    }

    std::ifstream file_in;
    std::istream* source = &in;
    if (!flags.input.empty()) {
        file_in.open(flags.input, std::ios::binary);
        if (!file_in) {
            err << error_json({2, "usage", "cannot open " + flags.input}).dump() << "\n";
            return 2;
        }
        source = &file_in;
    }

    auto process = [&](const std::string& text, int& status) {
        try {
            emit(handler(json::parse(text)));
        } catch (...) {
            const auto info = classify(std::current_exception());
            if (flags.batch)
                emit(error_json(info));
            err << error_json(info).dump() << "\n";
            if (status == 0)
                status = info.code;
        }
    };

    int status = 0;
    if (flags.batch) {
        std::string line;
        while (std::getline(*source, line))
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                process(line, status);
    } else {
        std::stringstream buffer;
        buffer << source->rdbuf();
        process(buffer.str(), status);
    }
    return status;
}

} // namespace wittlab
