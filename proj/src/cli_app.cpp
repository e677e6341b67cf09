#include "ftsent/cli_app.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ftsent/io.hpp"
#include "ftsent/slocc.hpp"

namespace ftsent {

namespace {

struct InputOptions {
    std::string input_path;
    std::string inline_amps;
    double epsilon = 1e-9;
    bool exact = false;
    bool real = false;
    std::string format = "json";
};

void add_input_options(CLI::App* cmd, InputOptions& opt, bool with_real) {
    cmd->add_option("-i,--input", opt.input_path, "Input file (JSON array or CSV; see README formats)");
    cmd->add_option("--amps", opt.inline_amps,
                    "Inline amplitudes a000..a111: 8 or 16 comma-separated values (re[,im] pairs)");
    cmd->add_option("--epsilon", opt.epsilon, "Relative tolerance for zero tests")
        ->envname("FTS_ENTANGLE_EPSILON")
        ->default_val(1e-9);
    cmd->add_flag("--exact", opt.exact, "Exact rational mode; amplitudes must be rational strings p/q");
    if (with_real)
        cmd->add_flag("--real", opt.real, "Real-state mode: require real amplitudes, add orbit tag");
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->default_val("json");
}

std::vector<StateRecord> load_records(const InputOptions& opt) {
    if (!opt.inline_amps.empty()) return {parse_inline_amps(opt.inline_amps, opt.exact)};
    if (opt.input_path.empty()) throw ParseError("no input: provide --input FILE or --amps LIST");
    std::ifstream in(opt.input_path);
    if (!in) throw ParseError("cannot open '" + opt.input_path + "'");
    auto recs = parse_states(in);
    if (recs.empty()) throw ParseError("input '" + opt.input_path + "' contains no states");
    return recs;
}

int severity_from_flags(const ClassifierFlags& flags, bool dual_mismatch) {
    if (dual_mismatch || flags.upsilon_inconsistent) return kExitInconsistent;
    if (flags.marginal || flags.gamma_ambiguity || flags.entropy_pattern_inconsistent)
        return kExitAmbiguous;
    return kExitOk;
}

template <class F>
Classification<F> classify_record_state(const ThreeQubitState<F>& s, const InputOptions& opt,
                                        const ToleranceConfig& tol, bool* dual_mismatch) {
    Classification<F> c = opt.real ? classify_real(s, tol) : classify_fts(s, tol);
    ClassifierFlags conv_flags;
    EntanglementClass conv = classify_conventional(s, tol, &conv_flags);
    c.flags.entropy_pattern_inconsistent |= conv_flags.entropy_pattern_inconsistent;
    c.flags.marginal |= conv_flags.marginal;
    *dual_mismatch = conv != c.cls;
    return c;
}

int cmd_classify(const InputOptions& opt, std::ostream& out, std::ostream& err) {
    auto records = load_records(opt);
    if (opt.exact && opt.format == "csv")
        throw ParseError("--exact output is JSON only (rational values)");
    ToleranceConfig tol;
    tol.epsilon = opt.epsilon;

    int severity = kExitOk;
    Json arr = Json::array();
    std::ostringstream csv;
    if (opt.format == "csv") csv << classification_csv_header() << '\n';

    for (const auto& rec : records) {
        bool mismatch = false;
        if (opt.exact) {
            auto s = rec.to_exact_state();
            if (opt.real)
                for (int i = 0; i < 8; ++i)
                    if (!(s[i].im == 0))
                        throw ParseError("state '" + rec.id + "': --real requires real amplitudes");
            auto c = classify_record_state(s, opt, tol, &mismatch);
            Json j = classification_to_json(rec.id, c);
            if (mismatch) j["flags"].push_back("dual-classifier-mismatch");
            arr.push_back(j);
            severity = std::max(severity, severity_from_flags(c.flags, mismatch));
        } else {
            auto s = rec.to_state();
            if (opt.real)
                for (int i = 0; i < 8; ++i)
                    if (s[i].imag() != 0.0)
                        throw ParseError("state '" + rec.id + "': --real requires real amplitudes");
            auto c = classify_record_state(s, opt, tol, &mismatch);
            if (opt.format == "csv") {
                csv << classification_to_csv_row(rec.id, c) << '\n';
            } else {
                Json j = classification_to_json(rec.id, c);
                if (mismatch) j["flags"].push_back("dual-classifier-mismatch");
                arr.push_back(j);
            }
            severity = std::max(severity, severity_from_flags(c.flags, mismatch));
        }
        if (mismatch)
            err << "warning: state '" << rec.id << "': FTS and conventional classifiers disagree\n";
    }

    if (opt.format == "csv")
        out << csv.str();
    else
        out << arr.dump(2) << '\n';
    return severity;
}

int cmd_invariants(const InputOptions& opt, std::ostream& out, std::ostream&) {
    auto records = load_records(opt);
    if (opt.exact && opt.format == "csv")
        throw ParseError("--exact output is JSON only (rational values)");

    Json arr = Json::array();
    std::ostringstream csv;
    if (opt.format == "csv") csv << invariants_csv_header() << '\n';
    for (const auto& rec : records) {
        if (opt.exact)
            arr.push_back(invariant_report_to_json(rec.id, rec.to_exact_state()));
        else if (opt.format == "csv")
            csv << invariants_to_csv_row(rec.id, rec.to_state()) << '\n';
        else
            arr.push_back(invariant_report_to_json(rec.id, rec.to_state()));
    }
    if (opt.format == "csv")
        out << csv.str();
    else
        out << arr.dump(2) << '\n';
    return kExitOk;
}

struct FuzzOptions {
    std::string class_name;
    std::uint64_t seed = 42;
    bool seed_given = false;
    long samples = 1000;
    double spread = 1.0;
    double epsilon = 1e-9;
};

int cmd_fuzz(const FuzzOptions& opt, std::ostream& out, std::ostream& err) {
    auto cls = class_from_string(opt.class_name);
    if (!cls) throw ParseError("unknown class '" + opt.class_name + "'");
    if (!opt.seed_given) err << "warning: no --seed given, using default seed 42\n";

    ToleranceConfig tol;
    tol.epsilon = opt.epsilon;
    auto rep = class_representative<Complex>(*cls);
    Complex q_rep = quartic_norm(to_fts(rep));

    SplitMix64 master(opt.seed);
    long mismatches = 0;
    long class_changes = 0;
    long marginal = 0;
    double max_q_drift = 0.0;
    for (long k = 0; k < opt.samples; ++k) {
        auto g = random_slocc(master.next(), opt.spread);
        auto img = apply_slocc(g, rep);
        auto c1 = classify_fts(img, tol);
        ClassifierFlags conv_flags;
        auto c2 = classify_conventional(img, tol, &conv_flags);
        if (c1.cls != c2) ++mismatches;
        if (c1.cls != *cls) ++class_changes;
        if (c1.flags.marginal || conv_flags.marginal) ++marginal;

        // q is exactly invariant; measure drift relative to |q| or, for the
        // q = 0 classes, to the degree-4 scale of the image.
        double n2 = norm_sq(img);
        double drift = std::abs(c1.q - q_rep);
        double scale = std::abs(q_rep) > 0 ? std::abs(q_rep) : std::max(n2 * n2, 1e-300);
        max_q_drift = std::max(max_q_drift, drift / scale);
    }

    Json j;
    j["class"] = to_string(*cls);
    j["samples"] = opt.samples;
    j["seed"] = opt.seed;
    j["spread"] = opt.spread;
    j["mismatches"] = mismatches;
    j["class_changes"] = class_changes;
    j["tolerance_marginal"] = marginal;
    j["max_q_drift"] = max_q_drift;
    out << j.dump(2) << '\n';
    return (mismatches > 0 || class_changes > 0) ? kExitInconsistent : kExitOk;
}

struct OrbitRow {
    std::string label;
    ThreeQubitState<Complex> state;
    int expected_dim;
    int expected_stab;
    int expected_proj;
};

int cmd_orbits(bool projective, bool real, std::ostream& out, std::ostream&) {
    std::vector<OrbitRow> rows;
    auto rep = [](EntanglementClass c) { return class_representative<Complex>(c); };
    if (!real) {
        rows = {{"A-B-C (rank 1)", rep(EntanglementClass::Separable), 4, 5, 3},
                {"A-BC  (rank 2a)", rep(EntanglementClass::BiseparableA_BC), 5, 4, 4},
                {"W     (rank 3)", rep(EntanglementClass::W), 7, 2, 6},
                {"GHZ   (rank 4)", rep(EntanglementClass::GHZ), 7, 2, 7}};
    } else {
        ThreeQubitState<Complex> ghz_pos1, ghz_pos2;
        ghz_pos1[0] = 1; ghz_pos1[3] = -1; ghz_pos1[5] = 1; ghz_pos1[6] = 1;
        ghz_pos2[0] = 1; ghz_pos2[3] = 1; ghz_pos2[5] = 1; ghz_pos2[6] = -1;
        rows = {{"A-B-C (rank 1)", rep(EntanglementClass::Separable), 4, 5, -1},
                {"A-BC  (rank 2a)", rep(EntanglementClass::BiseparableA_BC), 5, 4, -1},
                {"W     (rank 3)", rep(EntanglementClass::W), 7, 2, -1},
                {"GHZ   (q<0)", rep(EntanglementClass::GHZ), 7, 2, -1},
                {"GHZ   (q>0, sig -,+,+)", ghz_pos1, 7, 2, -1},
                {"GHZ   (q>0, sig +,+,-)", ghz_pos2, 7, 2, -1}};
    }

    bool all_ok = true;
    out << (real ? "real orbit dimensions under SL(2,R)^3\n"
                 : "complex orbit dimensions under SL(2,C)^3\n");
    for (const auto& row : rows) {
        RankResult r;
        int expected;
        if (real) {
            r = real_orbit_dimension(row.state);
            expected = row.expected_dim;
        } else if (projective) {
            r = projective_orbit_dimension(row.state);
            expected = row.expected_proj;
        } else {
            r = orbit_dimension(row.state);
            expected = row.expected_dim;
        }
        bool ok = r.determinate && r.dim == expected;
        all_ok = all_ok && ok;
        out << row.label << ": dim " << r.dim << " (expected " << expected << ")";
        if (!real && !projective) {
            out << ", stabilizer " << stabilizer_dimension(r) << " (expected " << row.expected_stab
                << ")";
            ok = ok && stabilizer_dimension(r) == row.expected_stab;
            all_ok = all_ok && ok;
        }
        out << ", gap " << (std::isinf(r.gap_ratio) ? std::string("inf")
                                                    : format_double(r.gap_ratio))
            << (ok ? " [ok]" : " [MISMATCH]") << '\n';
    }
    return all_ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-qubit SLOCC entanglement classification via the Freudenthal triple system over C+C+C"};
    app.require_subcommand(1);

    InputOptions classify_opt;
    auto* classify_cmd = app.add_subcommand("classify", "Classify states by FTS rank, cross-validated");
    add_input_options(classify_cmd, classify_opt, /*with_real=*/true);

    InputOptions inv_opt;
    auto* inv_cmd = app.add_subcommand("invariants", "Report the LU invariants and residual diagnostics");
    add_input_options(inv_cmd, inv_opt, /*with_real=*/false);

    FuzzOptions fuzz_opt;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Random SLOCC invariance campaign on a class representative");
    fuzz_cmd->add_option("--class", fuzz_opt.class_name, "Class label (Null, A-B-C, A-BC, B-CA, C-AB, W, GHZ)")
        ->required();
    fuzz_cmd->add_option("--seed", fuzz_opt.seed, "Master seed")->each([&fuzz_opt](const std::string&) {
        fuzz_opt.seed_given = true;
    });
    fuzz_cmd->add_option("--samples", fuzz_opt.samples, "Number of random operators")->default_val(1000);
    fuzz_cmd->add_option("--spread", fuzz_opt.spread, "Entry scale of random factors")->default_val(1.0);
    fuzz_cmd->add_option("--epsilon", fuzz_opt.epsilon, "Relative tolerance")
        ->envname("FTS_ENTANGLE_EPSILON")
        ->default_val(1e-9);

    bool orbits_projective = false, orbits_real = false;
    auto* orbits_cmd = app.add_subcommand("orbits", "Verify orbit/stabilizer dimensions at the representatives");
    orbits_cmd->add_flag("--projective", orbits_projective, "Report projective (ray) orbit dimensions");
    orbits_cmd->add_flag("--real", orbits_real, "Real states under SL(2,R)^3");

    auto* hierarchy_cmd = app.add_subcommand("hierarchy", "Print the class stratification edge list");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitIoError;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(classify_opt, out, err);
        if (inv_cmd->parsed()) return cmd_invariants(inv_opt, out, err);
        if (fuzz_cmd->parsed()) return cmd_fuzz(fuzz_opt, out, err);
        if (orbits_cmd->parsed()) return cmd_orbits(orbits_projective, orbits_real, out, err);
        if (hierarchy_cmd->parsed()) {
            out << hierarchy_export();
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitIoError;
    }
    return kExitIoError;
}

}  // namespace ftsent
