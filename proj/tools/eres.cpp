// eres: command-line driver for the E-infinity resolution toolkit.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "eres/realization.hpp"
#include "eres/suites.hpp"

using namespace eres;

namespace {

struct RunConfig {
    std::string command;  // "check operad", "resolve", ...
    std::string input;
    std::string operad = "e";
    int max_degree = 0;
    int max_dim = 0;
    int max_arity = 0;
    int samples = 24;
    uint32_t seed = 7;
    std::optional<uint32_t> field;
    std::string output;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

AlgebraPresentation load(const RunConfig& cfg) {
    if (cfg.input.empty()) throw InputError("--input is required for " + cfg.command);
    std::ifstream in(cfg.input);
    if (!in) throw InputError("cannot read " + cfg.input);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str(), cfg.field);
}

// Suites without an input run over F₂ and Q unless a field is given.
std::vector<Field> fields_for(const RunConfig& cfg) {
    if (cfg.field) {
        try {
            return {Field(*cfg.field)};
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    return {Field(2), Field(0)};
}

std::string field_tag(const Field& f) { return f.rational() ? "Q" : "F" + std::to_string(f.characteristic()); }

void need_positive(int v, const char* flag) {
    if (v < 1) throw InputError(std::string(flag) + " must be at least 1");
}

// Returns true on pass; the report goes to `out`.
bool run(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "check operad" || cfg.command == "check coaction" || cfg.command == "check framing") {
        bool ok = true;
        for (const Field& f : fields_for(cfg)) {
            CheckReport r;
            if (cfg.command == "check operad") {
                need_positive(cfg.max_arity, "--max-arity");
                r = operad_axiom_suite(f, cfg.max_arity, cfg.max_degree);
            } else if (cfg.command == "check coaction") {
                need_positive(cfg.max_arity, "--max-arity");
                r = coaction_suite(f, cfg.max_dim, cfg.max_arity, cfg.max_degree);
            } else {
                r = framing_suite(f, cfg.samples, cfg.seed);
            }
            out << "[" << field_tag(f) << "]\n" << r.format();
            ok = ok && r.ok();
        }
        out << (ok ? "PASS" : "FAIL") << "\n";
        return ok;
    }

    AlgebraPresentation p = load(cfg);
    OperadMode mode = parse_mode(cfg.operad);
    need_positive(cfg.max_degree, "--max-degree");

    if (cfg.command == "resolve") {
        AlgebraModel A(p, cfg.max_degree);
        QuasiFreeModel M(A, mode, cfg.max_degree);
        out << M.dump();
        auto bad = M.dd_failures();
        for (TreeId g : bad)
            out << "FAIL D^2 = 0: " << M.gen_name(g) << " tree=" << M.resolution().name(g) << "\n";
        out << (bad.empty() ? "PASS" : "FAIL") << " D^2 = 0 on " << M.generators().size() << " generators\n";
        return bad.empty();
    }
    if (cfg.command == "homology") {
        HomologyReport r = verify_resolution(p, mode, cfg.max_degree);
        out << r.format();
        return r.ok();
    }

    CheckReport r;
    if (cfg.command == "oracle coend") {
        need_positive(cfg.max_dim, "--max-dim");
        r = compare_model_coend(p, cfg.max_dim, cfg.max_degree);
    } else if (cfg.command == "check latching") {
        need_positive(cfg.max_dim, "--max-dim");
        AlgebraModel A(p, cfg.max_degree);
        Resolution R(A);
        r = simplicial_suite(R, cfg.max_dim, cfg.max_degree);
    } else if (cfg.command == "check unitary") {
        need_positive(cfg.max_dim, "--max-dim");
        r = unitize_check(p, cfg.max_dim, cfg.max_degree);
    } else if (cfg.command == "check pushforward") {
        r = com_pushforward(p, cfg.max_degree);
    } else if (cfg.command == "check augmentation") {
        AlgebraModel A(p, cfg.max_degree);
        QuasiFreeModel M(A, mode, cfg.max_degree);
        r = model_augmentation(M);
    } else {
        throw InputError("unknown command " + cfg.command);
    }
    out << r.format() << (r.ok() ? "PASS" : "FAIL") << "\n";
    return r.ok();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-free models of E-infinity algebras over the Barratt-Eccles operad"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto input_flags = [&](CLI::App* c) {
        c->add_option("--input", cfg.input, "algebra presentation file")->check(CLI::ExistingFile);
        c->add_option("--operad", cfg.operad, "e | e-unitary | com")->capture_default_str();
    };
    auto common = [&](CLI::App* c) {
        c->add_option("--field", cfg.field, "field override: 0 for Q or a prime");
        c->add_option("--output", cfg.output, "write the report to this file");
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& command) {
        CLI::App* c = parent->add_subcommand(name, help);
        c->callback([&cfg, command] { cfg.command = command; });
        common(c);
        return c;
    };

    CLI::App* check = app.add_subcommand("check", "property-check suites");
    check->require_subcommand(1);
    {
        auto* c = leaf(check, "operad", "operad axioms on E(r)_d", "check operad");
        c->add_option("--max-arity", cfg.max_arity)->default_val(4);
        c->add_option("--max-degree", cfg.max_degree)->default_val(3);
    }
    {
        auto* c = leaf(check, "coaction", "coaction on normalized simplices", "check coaction");
        c->add_option("--max-dim", cfg.max_dim)->default_val(3);
        c->add_option("--max-arity", cfg.max_arity)->default_val(3);
        c->add_option("--max-degree", cfg.max_degree)->default_val(2);
    }
    {
        auto* c = leaf(check, "framing", "cosimplicial framing, f-sharp and the adjunction", "check framing");
        c->add_option("--samples", cfg.samples)->default_val(24);
        c->add_option("--seed", cfg.seed)->default_val(7);
    }
    {
        auto* c = leaf(check, "latching", "simplicial identities and latching split", "check latching");
        input_flags(c);
        c->add_option("--max-dim", cfg.max_dim, "maximal level")->default_val(3);
        c->add_option("--max-degree", cfg.max_degree)->default_val(6);
    }
    {
        auto* c = leaf(check, "unitary", "unitary identification per level", "check unitary");
        input_flags(c);
        c->add_option("--max-dim", cfg.max_dim, "maximal level")->default_val(3);
        c->add_option("--max-degree", cfg.max_degree)->default_val(4);
    }
    {
        auto* c = leaf(check, "pushforward", "E-model pushed to the com model", "check pushforward");
        input_flags(c);
        c->add_option("--max-degree", cfg.max_degree)->default_val(6);
    }
    {
        auto* c = leaf(check, "augmentation", "augmentation is a chain map", "check augmentation");
        input_flags(c);
        c->add_option("--max-degree", cfg.max_degree)->default_val(6);
    }
    {
        auto* c = leaf(&app, "resolve", "dump the quasi-free model and check D^2 = 0", "resolve");
        input_flags(c);
        c->add_option("--max-degree", cfg.max_degree)->default_val(6);
    }
    {
        auto* c = leaf(&app, "homology", "model homology against H(A)", "homology");
        input_flags(c);
        c->add_option("--max-degree", cfg.max_degree)->default_val(6);
    }
    CLI::App* oracle = app.add_subcommand("oracle", "independent comparisons");
    oracle->require_subcommand(1);
    {
        auto* c = leaf(oracle, "coend", "model against the coend skeleton", "oracle coend");
        input_flags(c);
        c->add_option("--max-dim", cfg.max_dim, "skeletal dimension N")->default_val(1);
        c->add_option("--max-degree", cfg.max_degree)->default_val(3);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ostringstream report;
    bool ok = false;
    try {
        ok = run(cfg, report);
    } catch (const PresentationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedStructure& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const ModeError& e) {
        std::cerr << "mode error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        std::cerr << "degenerate input: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    if (cfg.output.empty()) {
        std::cout << report.str();
    } else {
        std::ofstream f(cfg.output);
        if (!f) {
            std::cerr << "cannot write " << cfg.output << "\n";
            return 2;
        }
        f << report.str();
    }
    return ok ? 0 : 1;
}
