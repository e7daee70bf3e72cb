#include "tametilt/cli.hpp"

#include "tametilt/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace tametilt {
namespace cli {

namespace {

using io::json;

struct CommonOpts {
    std::string preset;
    std::string config_path;
    std::string output = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--preset", opts.preset, "built-in registry preset name");
    cmd->add_option("--config", opts.config_path, "registry config JSON file");
    cmd->add_option("--output", opts.output, "output format (json)");
}

std::pair<TubeRegistry, MultiplicityMap> load_registry(const CommonOpts& opts) {
    if (!opts.preset.empty() && !opts.config_path.empty())
        throw CLI::ValidationError("--preset and --config are mutually exclusive");
    if (!opts.preset.empty())
        return {TubeRegistry::preset(opts.preset), MultiplicityMap{}};
    if (!opts.config_path.empty()) {
        std::ifstream in(opts.config_path);
        if (!in)
            throw DomainError("cli/config-missing",
                              "cannot read config file '" + opts.config_path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        return io::registry_from_json(io::parse_json(buf.str(), "config file"));
    }
    throw CLI::RequiredError("--preset or --config");
}

void emit(std::ostream& out, json doc) {
    doc["schema"] = io::kSchema;
    out << doc.dump(2) << "\n";
}

TiltingDescriptor descriptor_from_opts(const TubeRegistry& reg,
                                       const std::string& pair_text,
                                       const std::string& filter_text) {
    if (!pair_text.empty() && !filter_text.empty())
        throw CLI::ValidationError("--pair and --filter are mutually exclusive");
    if (!pair_text.empty()) {
        const auto [y, l] = io::pair_from_json(io::parse_json(pair_text, "--pair"));
        return descriptor_from_pair(reg, y, l);
    }
    if (!filter_text.empty()) {
        const ResolvingFilter f = validate_filter(
            reg, io::filter_from_json(io::parse_json(filter_text, "--filter")));
        const auto [y, l] = pair_from_resolving(reg, f);
        return descriptor_from_pair(reg, y, l);
    }
    throw CLI::RequiredError("--pair or --filter");
}

std::vector<std::string> list_presets() {
    std::vector<std::string> names{"kronecker"};
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator("presets", ec)) {
        if (entry.path().extension() == ".json")
            names.push_back("presets/" + entry.path().filename().string());
    }
    std::sort(names.begin() + 1, names.end());
    return names;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"exact tube-combinatorics engine for large tilting modules"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string pair_text, filter_text, at_text, alpha_text;
    int rank_max = 4;

    CLI::App* c_branch = app.add_subcommand("branch-enumerate", "list all branch modules");
    add_common(c_branch, opts);

    CLI::App* c_classify =
        app.add_subcommand("classify", "tilting descriptor from a pair, filter or localization set");
    add_common(c_classify, opts);
    c_classify->add_option("--pair", pair_text, "pair JSON");
    c_classify->add_option("--filter", filter_text, "resolving filter JSON");
    c_classify->add_option("--at", at_text, "quasi-simple set JSON");

    CLI::App* c_dual = app.add_subcommand("dual", "cotilting dual of a descriptor");
    add_common(c_dual, opts);
    c_dual->add_option("--pair", pair_text, "pair JSON");
    c_dual->add_option("--filter", filter_text, "resolving filter JSON");

    CLI::App* c_decompose = app.add_subcommand("decompose", "per-tube summand report");
    add_common(c_decompose, opts);
    c_decompose->add_option("--pair", pair_text, "pair JSON");
    c_decompose->add_option("--filter", filter_text, "resolving filter JSON");

    CLI::App* c_localize = app.add_subcommand("localize", "localize the registry");
    add_common(c_localize, opts);
    c_localize->add_option("--at", at_text, "quasi-simple set JSON")->required();

    CLI::App* c_quotient = app.add_subcommand("quotient", "decompose R_u/R");
    add_common(c_quotient, opts);
    c_quotient->add_option("--at", at_text, "quasi-simple set JSON")->required();
    c_quotient->add_option("--alpha", alpha_text, "alpha overrides JSON");

    CLI::App* c_predicates = app.add_subcommand("predicates", "descriptor predicates");
    add_common(c_predicates, opts);
    c_predicates->add_option("--pair", pair_text, "pair JSON");
    c_predicates->add_option("--filter", filter_text, "resolving filter JSON");

    CLI::App* c_verify = app.add_subcommand("verify", "run the oracle suite");
    add_common(c_verify, opts);
    c_verify->add_option("--rank-max", rank_max, "largest tube rank to exercise");

    CLI::App* c_presets = app.add_subcommand("presets", "list known presets");
    add_common(c_presets, opts);

    std::vector<const char*> argv;
    argv.push_back("tametilt");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    }

    if (opts.output != "json")
        throw CLI::ValidationError("--output supports only 'json'");

    if (c_presets->parsed()) {
        json names = json::array();
        for (const auto& n : list_presets()) names.push_back(n);
        emit(out, json{{"presets", names}});
        return 0;
    }

    if (c_verify->parsed()) {
        oracle::OracleBounds bounds;
        bounds.rank_max = rank_max;
        std::vector<TubeRegistry> regs;
        if (!opts.preset.empty() || !opts.config_path.empty()) {
            regs.push_back(load_registry(opts).first);
        } else {
            // No config: exercise one registry per rank, each a single tube
            // plus a named homogeneous tube and the rest.
            for (int r = 2; r <= rank_max; ++r)
                regs.push_back(TubeRegistry::custom({{"a", r}}, {"h"}, true));
            regs.push_back(TubeRegistry::preset("kronecker"));
        }
        int failed = 0;
        long total = 0;
        for (const auto& reg : regs) {
            const auto rep = oracle::verify_suite(reg, bounds);
            failed += rep.failed;
            total += rep.total_instances;
            for (const auto& c : rep.checks) {
                json line = io::oracle_check_to_json(c);
                line["schema"] = io::kSchema;
                out << line.dump() << "\n";
            }
        }
        json summary{{"summary", json{{"failed", failed}, {"instances", total}}}};
        summary["schema"] = io::kSchema;
        out << summary.dump() << "\n";
        err << "verify: " << failed << " failing checks\n";
        return failed == 0 ? 0 : 1;
    }

    const auto [reg, alpha] = load_registry(opts);

    if (c_branch->parsed()) {
        emit(out, json{{"branch_modules",
                        io::branch_list_to_json(enumerate_branch_modules(reg))}});
        return 0;
    }
    if (c_classify->parsed()) {
        if (!at_text.empty()) {
            if (!pair_text.empty() || !filter_text.empty())
                throw CLI::ValidationError("--at excludes --pair/--filter");
            const QuasiSimpleSet u =
                io::qsset_from_json(reg, io::parse_json(at_text, "--at"));
            const auto pair = localization_tilting(reg, u);
            if (!pair) {
                emit(out, json{{"finite_dimensional", true}});
                return 0;
            }
            emit(out, io::descriptor_to_json(
                          descriptor_from_pair(reg, pair->first, pair->second)));
            return 0;
        }
        emit(out, io::descriptor_to_json(descriptor_from_opts(reg, pair_text, filter_text)));
        return 0;
    }
    if (c_dual->parsed()) {
        const TiltingDescriptor d = descriptor_from_opts(reg, pair_text, filter_text);
        emit(out, io::cotilting_to_json(reg, cotilting_dual(d)));
        return 0;
    }
    if (c_decompose->parsed()) {
        const TiltingDescriptor d = descriptor_from_opts(reg, pair_text, filter_text);
        emit(out, io::decompose_to_json(reg, decompose(d)));
        return 0;
    }
    if (c_predicates->parsed()) {
        const TiltingDescriptor d = descriptor_from_opts(reg, pair_text, filter_text);
        emit(out, io::predicates_to_json(reg, predicates(d)));
        return 0;
    }
    if (c_localize->parsed()) {
        const QuasiSimpleSet u = io::qsset_from_json(reg, io::parse_json(at_text, "--at"));
        emit(out, io::localized_to_json(localize_registry(reg, u)));
        return 0;
    }
    if (c_quotient->parsed()) {
        const QuasiSimpleSet u = io::qsset_from_json(reg, io::parse_json(at_text, "--at"));
        MultiplicityMap merged = alpha;
        if (!alpha_text.empty()) {
            const json doc = io::parse_json(alpha_text, "--alpha");
            if (!doc.is_object())
                throw DomainError("json/schema", "--alpha must be a JSON object");
            for (const auto& [key, value] : doc.items()) {
                if (!value.is_number_integer())
                    throw DomainError("json/schema", "alpha values must be integers");
                merged.alpha[check_qs(reg, parse_qs_key(key))] = value.get<int>();
            }
            merged.validate(reg);
        }
        emit(out, io::quotient_to_json(quotient_decomposition(reg, u, merged), merged,
                                       reg, u));
        return 0;
    }
    throw CLI::ValidationError("unknown subcommand");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const CLI::ParseError& e) {
        json doc{{"schema", io::kSchema},
                 {"error", json{{"check_id", "cli/usage"}, {"message", e.what()}}}};
        out << doc.dump(2) << "\n";
        return 2;
    } catch (const DomainError& e) {
        json doc{{"schema", io::kSchema},
                 {"error", json{{"check_id", e.check_id()}, {"message", e.what()}}}};
        out << doc.dump(2) << "\n";
        return 1;
    }
}

} // namespace cli
} // namespace tametilt
