// Copyright 2026 The qamp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "CLI11.hpp"

#include "qamp/complex_matrix.hpp"
#include "qamp/conjugator.hpp"
#include "qamp/encoder.hpp"
#include "qamp/errors.hpp"
#include "qamp/estimator.hpp"
#include "qamp/matrix_io.hpp"
#include "qamp/multiplier.hpp"
#include "qamp/registers.hpp"
#include "qamp/resources.hpp"
#include "qamp/version.hpp"

namespace qamp::cli {

namespace {

constexpr double kConjugateTolerance = 1e-12;

/// A report that was produced but whose verification failed.
class VerificationFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct ManipulationFlags {
    bool dagger_a = false;
    bool dagger_b = false;
    bool swap_order = false;

    Manipulations to_set() const { return {dagger_a, dagger_b, swap_order}; }
};

void add_manipulation_flags(CLI::App *cmd, ManipulationFlags &flags) {
    cmd->add_flag("--dagger-a", flags.dagger_a, "Use the conjugate transpose of the first input");
    cmd->add_flag("--dagger-b", flags.dagger_b,
                  "Use the conjugate transpose of the second input");
    cmd->add_flag("--swap-order", flags.swap_order, "Exchange the order of the factors");
}

json header(const std::string &command, json flags) {
    json doc = json::object();
    doc["tool"] = "qamp";
    doc["version"] = kVersion;
    doc["command"] = command;
    doc["flags"] = std::move(flags);
    return doc;
}

json manipulation_json(const ManipulationFlags &f) {
    json doc = json::object();
    doc["dagger_a"] = f.dagger_a;
    doc["dagger_b"] = f.dagger_b;
    doc["swap_order"] = f.swap_order;
    return doc;
}

json layout_json(const RegisterLayout &layout) {
    json subsystems = json::object();
    for (Subsystem s : kAllSubsystems) {
        if (!layout.has(s)) {
            continue;
        }
        const Slice sl = layout.slice(s);
        subsystems[std::string(subsystem_name(s))] =
            json::array({sl.first, sl.first + sl.width - 1});
    }
    json doc = json::object();
    doc["n"] = layout.n();
    doc["total_qubits"] = layout.total_qubits();
    doc["control_flags"] = layout.control_flags_present();
    doc["qubit_ranges"] = std::move(subsystems);
    return doc;
}

json resource_json(const ResourceReport &r) {
    json stages = json::array();
    for (const auto &s : r.stages) {
        json stage = json::object();
        stage["name"] = s.name;
        stage["gates"] = s.gates;
        stage["depth"] = s.depth;
        stages.push_back(std::move(stage));
    }
    json doc = json::object();
    doc["n"] = r.n;
    doc["with_controls"] = r.with_controls;
    doc["qubits"] = r.qubits;
    doc["w3_controls"] = r.w3_controls;
    doc["w3_toffolis"] = r.w3_toffolis;
    doc["stages"] = std::move(stages);
    doc["total_gates"] = r.total_gates;
    doc["core_depth"] = r.core_depth;
    doc["total_depth"] = r.total_depth;
    json bound = json::object();
    bound["slope"] = r.depth_slope;
    bound["intercept"] = r.depth_intercept;
    bound["form"] = "slope * n + intercept";
    doc["depth_bound"] = std::move(bound);
    return doc;
}

void emit(const std::string &path, const json &doc, std::ostream &out) {
    const std::string text = dump_json(doc);
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_text_file(path, text);
    }
}

struct PrepareArgs {
    std::string input;
    std::string output = "-";
    double c = kDefaultSlack;
    double b_phase = 0.0;
};

void cmd_prepare(const PrepareArgs &a, std::ostream &out) {
    const ComplexMatrix m = matrix_from_json(read_json_file(a.input));
    const PreparedMatrix pm = prepare(m, a.c, {a.b_phase});
    emit(a.output, prepared_to_json(pm), out);
}

struct MultiplyArgs {
    std::string a;
    std::string b;
    std::string output = "-";
    double c = kDefaultSlack;
    bool verify = true;
    bool controlled = false;
    ManipulationFlags manip;
};

std::pair<PreparedMatrix, PreparedMatrix> load_pair(const std::string &a, const std::string &b,
                                                    double c) {
    PreparedMatrix pm1 = load_prepared(read_json_file(a), c);
    PreparedMatrix pm2 = load_prepared(read_json_file(b), c);
    if (pm1.n() != pm2.n()) {
        throw DimensionError("inputs have different sizes after preparation: n = " +
                             std::to_string(pm1.n()) + " and n = " + std::to_string(pm2.n()));
    }
    return {std::move(pm1), std::move(pm2)};
}

void cmd_multiply(const MultiplyArgs &a, std::ostream &out) {
    const auto [pm1, pm2] = load_pair(a.a, a.b, a.c);
    const RegisterLayout layout = layout_for(pm1.n(), a.controlled);
    const Manipulations m = a.manip.to_set();
    const ProductResult r = run_pipeline(pm1, pm2, m, layout, {a.controlled});

    json flags = manipulation_json(a.manip);
    flags["a"] = a.a;
    flags["b"] = a.b;
    flags["c"] = a.c;
    flags["verify"] = a.verify;
    flags["controlled"] = a.controlled;
    flags["output"] = a.output;
    json doc = header("multiply", std::move(flags));
    doc["manipulations"] = m.label();
    doc["layout"] = layout_json(layout);

    json result = json::object();
    result["matrix_hat"] = matrix_to_json(r.matrix_hat)["entries"];
    result["matrix_recovered"] = matrix_to_json(r.recovered())["entries"];
    result["b_hat"] = complex_to_json(r.b_hat);
    result["b_recovered"] = complex_to_json(r.recovered_b());
    result["g_exact"] = r.g_exact;
    result["branch_probability"] = r.branch_probability;
    result["scale_back"] = r.scale_back;
    result["decode_residual"] = r.residual;
    doc["result"] = std::move(result);

    bool passed = true;
    if (a.verify) {
        passed = r.oracle_error <= kOracleTolerance && r.b_error <= kOracleTolerance;
        json v = json::object();
        v["tolerance"] = kOracleTolerance;
        v["oracle_error"] = r.oracle_error;
        v["b_error"] = r.b_error;
        v["worst_entry"] = json::array({r.worst_row, r.worst_col});
        v["passed"] = passed;
        doc["verification"] = std::move(v);
    }
    emit(a.output, doc, out);
    if (!passed) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "verification failed: max error " << r.oracle_error << " at entry ("
            << r.worst_row << ", " << r.worst_col << "), b error " << r.b_error;
        throw VerificationFailed(msg.str());
    }
}

struct ConjugateArgs {
    std::string input;
    std::string output = "-";
    double c = kDefaultSlack;
    bool verify = true;
};

void cmd_conjugate(const ConjugateArgs &a, std::ostream &out) {
    const ComplexMatrix m = matrix_from_json(read_json_file(a.input));
    const PreparedMatrix pm = prepare(m, a.c);
    const EncodedBlock block = EncodedBlock::standalone(pm.n());
    const DecodedBlock d = decode(hermitian_conjugate(encode(pm), block), block);
    if (a.verify) {
        const double err = max_abs_diff(d.matrix, dagger_oracle(pm.matrix()));
        if (err > kConjugateTolerance || d.residual > kConjugateTolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "verification failed: conjugate differs from the oracle by " << err
                << " (residual " << d.residual << ")";
            throw VerificationFailed(msg.str());
        }
    }
    emit(a.output, matrix_to_json(d.matrix.scaled(pm.scale())), out);
}

struct EstimateArgs {
    std::string a;
    std::string b;
    std::string output = "-";
    double c = kDefaultSlack;
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    ManipulationFlags manip;
};

void cmd_estimate_g(const EstimateArgs &a, std::ostream &out) {
    const auto [pm1, pm2] = load_pair(a.a, a.b, a.c);
    const GEstimate est = estimate_g(pm1, pm2, a.manip.to_set(), a.shots, a.seed);

    json flags = manipulation_json(a.manip);
    flags["a"] = a.a;
    flags["b"] = a.b;
    flags["c"] = a.c;
    flags["shots"] = a.shots;
    flags["seed"] = a.seed;
    flags["output"] = a.output;
    json doc = header("estimate-g", std::move(flags));
    doc["s1"] = est.s1;
    doc["s1_tilde_exact"] = est.s1_tilde_exact;
    doc["s1_tilde_sampled"] = est.s1_tilde_sampled;
    doc["k1_zero_count"] = est.k1_zero_count;
    doc["g_exact"] = est.g_exact;
    doc["g_hat"] = est.g_hat;
    doc["stderr"] = est.stderr_g;
    doc["deviation_in_stderr"] =
        est.stderr_g > 0.0 ? std::abs(est.g_hat - est.g_exact) / est.stderr_g : 0.0;
    doc["shots"] = est.shots;
    doc["seed"] = est.seed;
    doc["nominal_runs"] = est.nominal_runs;
    emit(a.output, doc, out);
}

struct ReportArgs {
    int n = 0;
    bool with_controls = false;
    std::string output = "-";
};

void cmd_report(const ReportArgs &a, std::ostream &out) {
    json flags = json::object();
    flags["n"] = a.n;
    flags["with_controls"] = a.with_controls;
    flags["output"] = a.output;
    json doc = header("report", std::move(flags));
    const ResourceReport r = resource_report(a.n, a.with_controls);
    doc["resources"] = resource_json(r);
    if (r.qubits <= kMaxQubits) {
        doc["layout"] = layout_json(layout_for(a.n, a.with_controls));
    } else {
        doc["layout"] = nullptr;
    }
    emit(a.output, doc, out);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Amplitude-encoded complex matrix multiplication on a statevector simulator",
                 "qamp"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    PrepareArgs prep;
    auto *prepare_cmd = app.add_subcommand("prepare", "Rescale a matrix for encoding");
    prepare_cmd->add_option("input", prep.input, "Matrix JSON file")->required();
    prepare_cmd->add_option("--c", prep.c, "Slack parameter c > 0")->capture_default_str();
    prepare_cmd->add_option("--b-phase", prep.b_phase, "Phase of the slack amplitude b")
        ->capture_default_str();
    prepare_cmd->add_option("-o,--output", prep.output, "Output path ('-' for stdout)");

    MultiplyArgs mul;
    auto *multiply_cmd = app.add_subcommand("multiply", "Multiply two matrices on the circuit");
    multiply_cmd->add_option("a", mul.a, "First matrix (raw or prepared JSON)")->required();
    multiply_cmd->add_option("b", mul.b, "Second matrix (raw or prepared JSON)")->required();
    multiply_cmd->add_option("--c", mul.c, "Slack parameter for raw inputs")
        ->capture_default_str();
    multiply_cmd->add_flag("--verify,!--no-verify", mul.verify,
                           "Compare against the classical oracle (default on)");
    multiply_cmd->add_flag("--controlled", mul.controlled,
                           "Select manipulations through control-flag qubits");
    add_manipulation_flags(multiply_cmd, mul.manip);
    multiply_cmd->add_option("-o,--output", mul.output, "Report path ('-' for stdout)");

    ConjugateArgs conj;
    auto *conjugate_cmd = app.add_subcommand("conjugate", "Hermitian conjugate via the circuit");
    conjugate_cmd->add_option("input", conj.input, "Matrix JSON file")->required();
    conjugate_cmd->add_option("--c", conj.c, "Slack parameter c > 0")->capture_default_str();
    conjugate_cmd->add_flag("--verify,!--no-verify", conj.verify,
                            "Compare against the classical conjugate transpose (default on)");
    conjugate_cmd->add_option("-o,--output", conj.output, "Output path ('-' for stdout)");

    EstimateArgs est;
    auto *estimate_cmd = app.add_subcommand("estimate-g", "Estimate G from shot statistics");
    estimate_cmd->add_option("a", est.a, "First matrix (raw or prepared JSON)")->required();
    estimate_cmd->add_option("b", est.b, "Second matrix (raw or prepared JSON)")->required();
    estimate_cmd->add_option("--c", est.c, "Slack parameter for raw inputs")
        ->capture_default_str();
    estimate_cmd->add_option("--shots", est.shots, "Number of shots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    estimate_cmd->add_option("--seed", est.seed, "Random seed")->capture_default_str();
    add_manipulation_flags(estimate_cmd, est.manip);
    estimate_cmd->add_option("-o,--output", est.output, "Report path ('-' for stdout)");

    ReportArgs rep;
    auto *report_cmd = app.add_subcommand("report", "Qubit, gate and depth counts");
    report_cmd->add_option("--n", rep.n, "Register width n (matrices are 2^n x 2^n)")
        ->required();
    report_cmd->add_flag("--with-controls", rep.with_controls,
                         "Include the three manipulation control flags");
    report_cmd->add_option("-o,--output", rep.output, "Report path ('-' for stdout)");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion &) {
        out << kVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(prepare_cmd)) {
            cmd_prepare(prep, out);
        } else if (app.got_subcommand(multiply_cmd)) {
            cmd_multiply(mul, out);
        } else if (app.got_subcommand(conjugate_cmd)) {
            cmd_conjugate(conj, out);
        } else if (app.got_subcommand(estimate_cmd)) {
            cmd_estimate_g(est, out);
        } else if (app.got_subcommand(report_cmd)) {
            cmd_report(rep, out);
        }
    } catch (const VerificationFailed &e) {
        err << "error: " << e.what() << '\n';
        return kExitVerifyFailed;
    } catch (const DimensionError &e) {
        err << "error: " << e.what() << '\n';
        return kExitDimension;
    } catch (const MethodUndefinedError &e) {
        err << "error: " << e.what() << '\n';
        return kExitEstimator;
    } catch (const EstimateUnavailableError &e) {
        err << "error: " << e.what() << '\n';
        return kExitEstimator;
    } catch (const FormatError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParameterError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LayoutError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: internal: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

} // namespace qamp::cli
