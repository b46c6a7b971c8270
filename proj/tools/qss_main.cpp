// qss — command-line front end: seeded protocol experiments, parameter
// sweeps, and exact state verification.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qss/harness/report.hpp"
#include "qss/states/smolin.hpp"

namespace {

using namespace qss;

struct CliOptions {
    std::string variant = "secure";
    std::string strategy = "none";
    std::string cheaters = "bob,charlie";
    int copies = 64;
    double check_rate = 0.5;
    int attacked = 0;
    std::vector<int> attacked_list;
    int trials = 10000;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
    std::string attack_basis = "Z";
    std::string probe_mode = "fresh-bell";
    std::string fixed_observable;  // empty = uniform draws
    int qubit_cap = 10;
    std::string transcript_path;
};

PauliObservable parse_observable(const std::string& s) {
    if (s == "X" || s == "x") return PauliObservable::X;
    if (s == "Y" || s == "y") return PauliObservable::Y;
    if (s == "Z" || s == "z") return PauliObservable::Z;
    throw ValidationError("unknown observable: " + s);
}

protocol::PartyId parse_party(const std::string& s) {
    if (s == "bob") return protocol::PartyId::Bob;
    if (s == "charlie") return protocol::PartyId::Charlie;
    if (s == "diana") return protocol::PartyId::Diana;
    throw ValidationError("unknown cheater name: " + s + " (alice cannot cheat)");
}

harness::ExperimentSpec build_spec(const CliOptions& opt) {
    harness::ExperimentSpec spec;
    spec.protocol.variant = opt.variant == "original" ? protocol::Variant::Original
                                                      : protocol::Variant::Secure;
    if (opt.variant != "original" && opt.variant != "secure")
        throw ValidationError("unknown variant: " + opt.variant);
    spec.protocol.copies = opt.copies;
    spec.protocol.check_rate = opt.check_rate;
    spec.protocol.qubit_cap = opt.qubit_cap;
    if (!opt.fixed_observable.empty()) {
        spec.protocol.observable_policy.kind = protocol::ObservablePolicy::Kind::Fixed;
        spec.protocol.observable_policy.fixed = parse_observable(opt.fixed_observable);
    }
    spec.attacked_copies = opt.attacked;
    spec.trials = opt.trials;
    spec.master_seed = opt.seed;

    if (opt.strategy != "none") {
        adversary::CoalitionConfig coalition;
        std::stringstream names(opt.cheaters);
        std::string name;
        while (std::getline(names, name, ','))
            if (!name.empty()) coalition.members.push_back(parse_party(name));

        adversary::StrategyConfig& strat = coalition.strategy;
        if (opt.strategy == "bell-intercept") {
            strat.kind = adversary::StrategyKind::BellInterceptResend;
            if (coalition.members.size() > 1) coalition.members.resize(1);
        } else if (opt.strategy == "same-observable") {
            strat.kind = adversary::StrategyKind::SameObservableMeasureResend;
        } else if (opt.strategy == "random-basis") {
            strat.kind = adversary::StrategyKind::RandomBasisMeasureResend;
        } else if (opt.strategy == "entangle-probe") {
            strat.kind = adversary::StrategyKind::EntanglingProbe;
        } else if (opt.strategy == "cross-swap") {
            strat.kind = adversary::StrategyKind::CrossCopySwap;
        } else {
            throw ValidationError("unknown strategy: " + opt.strategy);
        }
        strat.attack_basis = parse_observable(opt.attack_basis);
        if (opt.probe_mode == "fresh-bell") strat.probe_mode = adversary::ProbeMode::FreshBell;
        else if (opt.probe_mode == "isometry") strat.probe_mode = adversary::ProbeMode::Isometry;
        else throw ValidationError("unknown probe mode: " + opt.probe_mode);
        spec.coalition = std::move(coalition);
    }
    return spec;
}

void emit_reports(const std::vector<harness::MetricsReport>& reports, const CliOptions& opt) {
    const harness::ReportFormat format = harness::parse_format(opt.format);
    if (opt.out.empty()) {
        std::cout << (format == harness::ReportFormat::Csv ? harness::render_csv(reports)
                                                           : harness::render_json(reports));
    } else {
        harness::write_report(reports, opt.out, format);
        std::cout << "wrote " << reports.size() << " report row(s) to " << opt.out << "\n";
    }
}

void maybe_write_transcript(const CliOptions& opt, const harness::ExperimentSpec& spec) {
    if (opt.transcript_path.empty()) return;
    protocol::ProtocolConfig cfg = spec.protocol;
    cfg.seed = Rng::derive(spec.master_seed, 0);  // first trial of the experiment
    cfg.record_transcript = true;
    std::optional<adversary::CoalitionConfig> coalition = spec.coalition;
    if (coalition) coalition->attacked_count = spec.attacked_copies;
    const protocol::ProtocolOutcome out = protocol::run_protocol(cfg, coalition);
    std::ofstream f(opt.transcript_path, std::ios::binary);
    f << protocol::export_transcript(out.transcript);
    std::cout << "wrote transcript of trial 0 to " << opt.transcript_path << "\n";
}

// Exact state identities and entanglement diagnostics; returns process exit code.
int verify_states() {
    int failures = 0;
    auto check = [&](const char* name, bool ok, const std::string& detail) {
        std::printf("%-42s %s  %s\n", name, ok ? "PASS" : "FAIL", detail.c_str());
        if (!ok) ++failures;
    };
    char buf[128];

    const DensityMatrix s4 = states::smolin4();
    const DensityMatrix gen2 = states::generalized_smolin(states::SmolinFamilyIndex{2});
    const DensityMatrix circ = states::smolin_via_circuit();

    const double d_gen = s4.matrix().max_abs_diff(gen2.matrix());
    const double d_circ = s4.matrix().max_abs_diff(circ.matrix());
    std::snprintf(buf, sizeof(buf), "max diff recursion=%.2e circuit=%.2e", d_gen, d_circ);
    check("state identity (mixture/recursion/circuit)", d_gen <= 1e-12 && d_circ <= 1e-12, buf);

    const std::vector<double> evals = hermitian_eigenvalues(s4.matrix());
    bool spectrum_ok = evals.size() == 16;
    for (std::size_t i = 0; i < 12 && spectrum_ok; ++i)
        spectrum_ok = std::abs(evals[i]) <= 1e-10;
    for (std::size_t i = 12; i < 16 && spectrum_ok; ++i)
        spectrum_ok = std::abs(evals[i] - 0.25) <= 1e-10;
    std::snprintf(buf, sizeof(buf), "eigenvalues %.3g..%.3g", evals.front(), evals.back());
    check("spectrum {1/4 x4, 0 x12}", spectrum_ok, buf);

    bool ppt22 = true;
    double worst22 = 1.0;
    for (const std::vector<QubitId>& cut :
         {std::vector<QubitId>{0, 1}, std::vector<QubitId>{0, 2}, std::vector<QubitId>{0, 3}}) {
        worst22 = std::min(worst22, min_eigenvalue(partial_transpose(s4, cut)));
    }
    ppt22 = worst22 >= -1e-10;
    std::snprintf(buf, sizeof(buf), "min eigenvalue %.3e", worst22);
    check("2:2 cuts positive under partial transpose", ppt22, buf);

    bool npt13 = true;
    for (std::uint32_t q = 0; q < 4 && npt13; ++q) {
        const double lo = min_eigenvalue(partial_transpose(s4, {QubitId{q}}));
        npt13 = std::abs(lo + 0.125) <= 1e-10;
    }
    check("1:3 cuts reach -1/8 under partial transpose", npt13, "all four single-qubit cuts");

    bool parity_ok = true;
    for (PauliObservable obs : kAllObservables) {
        const double even = states::joint_distribution(s4, obs).even_parity_mass();
        if (std::abs(even - 1.0) > 1e-10) parity_ok = false;
    }
    check("XOR correlation (even parity, X/Y/Z)", parity_ok, "4-qubit state");

    bool bell_ok = true;
    const auto branches = bell_outcome_distribution(s4, QubitId{2}, QubitId{3});
    for (std::size_t i = 0; i < branches.size() && bell_ok; ++i) {
        if (std::abs(branches[i].probability - 0.25) > 1e-10) bell_ok = false;
        const DensityMatrix rest = partial_trace(branches[i].post_state, {QubitId{2}, QubitId{3}});
        const DensityMatrix want = states::bell_state(kAllBellIndices[i], {QubitId{0}, QubitId{1}});
        if (rest.matrix().max_abs_diff(want.matrix()) > 1e-12) bell_ok = false;
    }
    check("Bell measurement collapse on (C,D)", bell_ok, "four branches at p=1/4");

    std::printf("%s\n", failures == 0 ? "all state checks passed" : "STATE CHECKS FAILED");
    return failures == 0 ? 0 : 1;
}

// Pull --config defaults before CLI11 parses (flags override the file).
void apply_config_file(int argc, char** argv, CliOptions& opt) {
    std::string path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") path = argv[i + 1];
    if (path.empty()) return;
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json cfg = nlohmann::json::parse(f);
    auto get = [&](const char* key, auto& slot) {
        if (cfg.contains(key)) slot = cfg.at(key).get<std::decay_t<decltype(slot)>>();
    };
    get("variant", opt.variant);
    get("strategy", opt.strategy);
    get("cheaters", opt.cheaters);
    get("copies", opt.copies);
    get("check-rate", opt.check_rate);
    get("attacked", opt.attacked);
    get("trials", opt.trials);
    get("seed", opt.seed);
    get("out", opt.out);
    get("format", opt.format);
    get("attack-basis", opt.attack_basis);
    get("probe-mode", opt.probe_mode);
    get("fixed-observable", opt.fixed_observable);
    get("qubit-cap", opt.qubit_cap);
}

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    std::string config_dummy;
    cmd->add_option("--config", config_dummy, "JSON config file mirroring the flags");
    cmd->add_option("--variant", opt.variant, "original|secure");
    cmd->add_option("--strategy", opt.strategy,
                    "none|bell-intercept|same-observable|random-basis|entangle-probe|cross-swap");
    cmd->add_option("--cheaters", opt.cheaters, "comma list from bob,charlie,diana");
    cmd->add_option("--copies", opt.copies, "copies per run (n)");
    cmd->add_option("--check-rate", opt.check_rate, "per-position check probability (p)");
    cmd->add_option("--trials", opt.trials, "Monte-Carlo trials (T)");
    cmd->add_option("--seed", opt.seed, "master seed");
    cmd->add_option("--out", opt.out, "output path (stdout when omitted)");
    cmd->add_option("--format", opt.format, "csv|json");
    cmd->add_option("--attack-basis", opt.attack_basis, "measure-resend basis (X|Y|Z)");
    cmd->add_option("--probe-mode", opt.probe_mode, "fresh-bell|isometry");
    cmd->add_option("--fixed-observable", opt.fixed_observable,
                    "pin every observable draw to X, Y or Z");
    cmd->add_option("--qubit-cap", opt.qubit_cap, "per-block qubit cap");
    cmd->add_option("--transcript", opt.transcript_path, "write trial 0 transcript here");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smolin-state secret sharing: protocol simulation and attack experiments"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* run = app.add_subcommand("run", "run one experiment configuration");
    add_common_options(run, opt);
    run->add_option("--attacked", opt.attacked, "attacked copies (m)");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "sweep the attacked-copy count");
    add_common_options(sweep_cmd, opt);
    sweep_cmd->add_option("--attacked", opt.attacked_list, "comma list of m values")
        ->delimiter(',');

    CLI::App* verify = app.add_subcommand("verify-states", "exact state and PPT checks");

    try {
        apply_config_file(argc, argv, opt);
        app.parse(argc, argv);

        if (verify->parsed()) return verify_states();
        if (run->parsed()) {
            const harness::ExperimentSpec spec = build_spec(opt);
            emit_reports({harness::run_experiment(spec)}, opt);
            maybe_write_transcript(opt, spec);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            if (opt.attacked_list.empty())
                throw ValidationError("sweep needs --attacked m1,m2,...");
            const harness::ExperimentSpec spec = build_spec(opt);
            emit_reports(harness::sweep(spec, opt.attacked_list), opt);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
