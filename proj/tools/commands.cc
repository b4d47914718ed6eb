// Copyright 2026 The qverify Authors
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

#include "commands.h"

#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qverify/algorithm_document.h"
#include "qverify/applications.h"
#include "qverify/boolean_oracle.h"
#include "qverify/query_model.h"
#include "qverify/verify_builder.h"

namespace qverify {

namespace {

using nlohmann::json;

// Raised for bad arguments that CLI11 cannot catch itself.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string vector_text(std::span<const double> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); i++) {
        out += i ? ", " : "";
        out += fixed6(v[i]);
    }
    return out + ")";
}

std::size_t checked_n(int n) {
    if (n < 2 || n % 2 != 0 || n > static_cast<int>(kMaxVerifyArity)) {
        throw UsageError("--n must be an even integer in [2, 24], got " + std::to_string(n));
    }
    return static_cast<std::size_t>(n);
}

BitString parse_bits(const std::string &text, const char *flag) {
    try {
        return BitString::parse(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

QueryAlgorithm algorithm_from(int n, const std::string &path) {
    if (!path.empty()) {
        return load_algorithm(read_file(path));
    }
    return build_algorithm(checked_n(n));
}

std::string query_text(const QuerySpec &q) {
    std::string out = "diag(";
    for (std::size_t i = 0; i < q.size(); i++) {
        out += i ? ", " : "";
        out += q[i].is_var() ? "(-1)^x" + std::to_string(q[i].var_index) : "1";
    }
    return out + ")";
}

void print_matrix(std::ostream &out, const std::string &name, const SquareMatrix &m) {
    out << name << " =\n";
    for (std::size_t i = 0; i < m.dim(); i++) {
        out << " ";
        for (std::size_t j = 0; j < m.dim(); j++) {
            std::string cell = fixed6(m.at(i, j));
            out << std::string(cell.size() < 10 ? 10 - cell.size() : 1, ' ') << cell;
        }
        out << "\n";
    }
}

std::vector<std::string> step_names(std::size_t t) {
    std::vector<std::string> names{"start"};
    for (std::size_t i = 1; i <= t; i++) {
        names.push_back("after U" + std::to_string(i));
        names.push_back("after Q" + std::to_string(i));
    }
    names.push_back("final");
    return names;
}

struct Options {
    int n = 0;
    std::string input;
    bool trace = false;
    std::string format = "json";
    std::string out_path;
    bool parallel = false;
    unsigned threads = 0;
    bool json = false;
    std::string y;
    std::string z;
    std::string algorithm;
    std::string function;
};

int cmd_build(const Options &o, std::ostream &out) {
    std::size_t n = checked_n(o.n);
    QueryAlgorithm alg = build_algorithm(n);
    std::string text;
    if (o.format == "json") {
        text = dump_algorithm(alg);
    } else {
        std::ostringstream ss;
        ss << "VERIFY_" << n << ": N=" << n << " T=" << alg.t_queries() << " K=" << alg.dim() << "\n";
        for (std::size_t i = 1; i <= alg.t_queries(); i++) {
            auto indices = index_set(i, alg.dim());
            ss << "\ni=" << i << ": IND = {";
            for (std::size_t j = 0; j < indices.size(); j++) {
                ss << (j ? "," : "") << indices[j] + 1;
            }
            ss << "}\n";
            print_matrix(ss, "U" + std::to_string(i), alg.stages()[i - 1].unitary);
            ss << "Q" << i << " = " << query_text(alg.stages()[i - 1].query) << "\n";
        }
        ss << "\n";
        print_matrix(ss, "U_final", alg.final_unitary());
        ss << "START = " << vector_text(alg.start().amplitudes()) << "\n";
        ss << "MEASUREMENT = (";
        for (std::size_t i = 0; i < alg.dim(); i++) {
            ss << (i ? ", " : "") << int(alg.labels()[i]);
        }
        ss << ")\n";
        text = ss.str();
    }
    if (o.out_path.empty()) {
        out << text;
    } else {
        write_file(o.out_path, text);
    }
    return kExitOk;
}

int cmd_run(const Options &o, std::ostream &out) {
    QueryAlgorithm alg = algorithm_from(o.n, o.algorithm);
    BitString input = parse_bits(o.input, "--input");
    if (input.size() != alg.n_vars()) {
        throw UsageError(
            "--input must have " + std::to_string(alg.n_vars()) + " bits, got " + std::to_string(input.size()));
    }
    RunTrace trace = run(alg, input);
    ComputeResult r = interpret(measure(trace.final_state(), alg.labels()));
    auto names = step_names(alg.t_queries());
    if (o.json) {
        json doc{
            {"n", alg.n_vars()},
            {"t_queries", alg.t_queries()},
            {"input", input.str()},
        };
        if (o.trace) {
            json states = json::array();
            for (std::size_t s = 0; s < trace.states.size(); s++) {
                auto amps = trace.states[s].amplitudes();
                states.push_back({{"step", names[s]}, {"amplitudes", std::vector<double>(amps.begin(), amps.end())}});
            }
            doc["states"] = states;
        }
        auto final_amps = trace.final_state().amplitudes();
        doc["final_state"] = std::vector<double>(final_amps.begin(), final_amps.end());
        doc["output"] = r.output;
        doc["probability"] = r.probability;
        doc["exact"] = r.exact;
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    out << "input " << input << "\n";
    if (o.trace) {
        for (std::size_t s = 0; s < trace.states.size(); s++) {
            std::string label = names[s];
            label.resize(std::max<std::size_t>(label.size(), 10), ' ');
            out << label << " " << vector_text(trace.states[s].amplitudes()) << "\n";
        }
    } else {
        out << "final      " << vector_text(trace.final_state().amplitudes()) << "\n";
    }
    out << "result " << r.output << " probability " << fixed6(r.probability) << (r.exact ? " exact" : " not exact")
        << "\n";
    return kExitOk;
}

int report_exactness(
    const QueryAlgorithm &alg, const BooleanFunction &f, const std::string &name, const Options &o, std::ostream &out) {
    ExactnessReport rep = check_exact(alg, f, CheckOptions{o.parallel, o.threads});
    if (o.json) {
        json doc{
            {"function", name},
            {"n", alg.n_vars()},
            {"t_queries", alg.t_queries()},
            {"inputs_tested", rep.inputs_tested},
            {"failures", rep.failures},
            {"min_correct_probability", rep.min_correct_probability},
            {"unitary", rep.unitary},
            {"exact", rep.exact},
            {"counterexample", rep.counterexample ? json(rep.counterexample->str()) : json(nullptr)},
        };
        out << doc.dump(2) << "\n";
    } else {
        out << name << ": " << (rep.exact ? "PASS" : "FAIL") << "\n";
        out << "inputs tested: " << rep.inputs_tested << "\n";
        out << "queries: " << alg.t_queries() << "\n";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12f", rep.min_correct_probability);
        out << "min correct-output probability: " << buf << "\n";
        if (!rep.unitary) {
            out << "algorithm is not unitary (defect " << alg.unitarity_defect() << ")\n";
        }
        if (rep.counterexample) {
            out << "failures: " << rep.failures << "\n";
            out << "counterexample: " << *rep.counterexample << "\n";
        }
    }
    return rep.exact ? kExitOk : kExitFailure;
}

int cmd_verify(const Options &o, std::ostream &out) {
    QueryAlgorithm alg = algorithm_from(o.n, o.algorithm);
    if (alg.n_vars() % 2 != 0 || alg.n_vars() > kMaxVerifyArity) {
        throw UsageError("VERIFY_N needs an even N <= 24; the algorithm has " + std::to_string(alg.n_vars()));
    }
    std::string name = "VERIFY_" + std::to_string(alg.n_vars());
    return report_exactness(alg, BooleanFunction::verify(alg.n_vars()), name, o, out);
}

BooleanFunction function_from(const std::string &spec, std::size_t arity) {
    if (spec == "verify") {
        if (arity % 2 != 0) {
            throw UsageError("--function verify needs an even number of variables");
        }
        return BooleanFunction::verify(arity);
    }
    if (spec.rfind("table:", 0) == 0) {
        BitString bits = parse_bits(spec.substr(6), "--function");
        std::vector<std::uint8_t> table(bits.size());
        for (std::size_t i = 0; i < bits.size(); i++) {
            table[i] = bits[i];
        }
        try {
            return BooleanFunction::truth_table(arity, std::move(table));
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("--function: ") + e.what());
        }
    }
    BooleanFunction f = load_function(read_file(spec));
    if (f.arity() != arity) {
        throw UsageError(
            "function arity " + std::to_string(f.arity()) + " does not match the algorithm's " +
            std::to_string(arity) + " variables");
    }
    return f;
}

int cmd_check(const Options &o, std::ostream &out) {
    QueryAlgorithm alg = load_algorithm(read_file(o.algorithm));
    BooleanFunction f = function_from(o.function, alg.n_vars());
    return report_exactness(alg, f, o.function == "verify" ? "VERIFY_" + std::to_string(alg.n_vars()) : "f", o, out);
}

int cmd_sensitivity(const Options &o, std::ostream &out) {
    std::size_t n = checked_n(o.n);
    if (n > kMaxSensitivityArity) {
        throw UsageError("sensitivity is capped at n = " + std::to_string(kMaxSensitivityArity));
    }
    SensitivityResult s = sensitivity(BooleanFunction::verify(n));
    if (o.json) {
        out << json{{"function", "VERIFY_" + std::to_string(n)}, {"n", n}, {"sensitivity", s.value}, {"witness", s.witness.str()}}
                   .dump(2)
            << "\n";
    } else {
        out << s.value << "\n";
        out << "witness: " << s.witness << "\n";
    }
    return kExitOk;
}

int cmd_classical(const Options &o, std::ostream &out) {
    std::size_t n = checked_n(o.n);
    BitString input = parse_bits(o.input, "--input");
    if (input.size() != n) {
        throw UsageError("--input must have " + std::to_string(n) + " bits, got " + std::to_string(input.size()));
    }
    ClassicalRunReport r = classical_verify(input);
    if (o.json) {
        out << json{{"n", n},
                    {"input", input.str()},
                    {"output", r.output},
                    {"queries_used", r.queries_used},
                    {"query_sequence", r.query_sequence}}
                   .dump(2)
            << "\n";
    } else {
        out << "output " << r.output << "\n";
        out << "queries " << r.queries_used << " (";
        for (std::size_t i = 0; i < r.query_sequence.size(); i++) {
            out << (i ? " " : "") << "x" << r.query_sequence[i];
        }
        out << ")\n";
    }
    return kExitOk;
}

int cmd_equal(const Options &o, std::ostream &out) {
    BitString y = parse_bits(o.y, "--y");
    BitString z = parse_bits(o.z, "--z");
    if (y.size() != z.size() || y.empty() || y.size() > kMaxStringLength) {
        throw UsageError("--y and --z must have the same length in [1, 12]");
    }
    StringPair pair(y, z);
    bool equal = strings_equal(pair);
    if (o.json) {
        out << json{{"y", y.str()}, {"z", z.str()}, {"interleaved", interleave(pair).str()}, {"equal", equal}}.dump(2)
            << "\n";
    } else {
        out << (equal ? "equal" : "not equal") << "\n";
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact quantum query simulator for repetition-code verification (VERIFY_N)", "qverify"};
    app.require_subcommand(1);
    Options o;

    auto *build = app.add_subcommand("build", "Construct the VERIFY_N algorithm and print or save it");
    build->add_option("--n", o.n, "Number of input bits (even, 2..24)")->required();
    build->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    build->add_option("--out", o.out_path, "Write to this file instead of stdout");

    auto *run_cmd = app.add_subcommand("run", "Run the algorithm on one input");
    auto *run_n = run_cmd->add_option("--n", o.n, "Number of input bits (even, 2..24)");
    auto *run_alg = run_cmd->add_option("--algorithm", o.algorithm, "Algorithm document to run instead of --n");
    run_n->excludes(run_alg);
    run_cmd->add_option("--input", o.input, "Input bit string x1..xN")->required();
    run_cmd->add_flag("--trace", o.trace, "Print the state after every transformation");
    run_cmd->add_flag("--json", o.json, "Machine-readable output");

    auto *verify = app.add_subcommand("verify", "Check exactness against VERIFY_N over all inputs");
    auto *verify_n = verify->add_option("--n", o.n, "Number of input bits (even, 2..24)");
    auto *verify_alg = verify->add_option("--algorithm", o.algorithm, "Algorithm document to verify instead of --n");
    verify_n->excludes(verify_alg);
    verify->add_flag("--parallel", o.parallel, "Split the input sweep across threads");
    verify->add_option("--threads", o.threads, "Worker count for --parallel (default: hardware concurrency)");
    verify->add_flag("--json", o.json, "Machine-readable output");

    auto *sens = app.add_subcommand("sensitivity", "Compute s(VERIFY_N)");
    sens->add_option("--n", o.n, "Number of input bits (even, 2..20)")->required();
    sens->add_flag("--json", o.json, "Machine-readable output");

    auto *classical = app.add_subcommand("classical", "Run the classical pair-scanning decision tree");
    classical->add_option("--n", o.n, "Number of input bits (even, 2..24)")->required();
    classical->add_option("--input", o.input, "Input bit string x1..xN")->required();
    classical->add_flag("--json", o.json, "Machine-readable output");

    auto *equal = app.add_subcommand("equal", "Test y == z with the VERIFY_2k algorithm");
    equal->add_option("--y", o.y, "First string (odd positions)")->required();
    equal->add_option("--z", o.z, "Second string (even positions)")->required();
    equal->add_flag("--json", o.json, "Machine-readable output");

    auto *check = app.add_subcommand("check", "Check an algorithm document against a Boolean function");
    check->add_option("--algorithm", o.algorithm, "Algorithm document")->required();
    check->add_option("--function", o.function, "'verify', 'table:<2^N bits>' or a truth-table JSON file")
        ->required();
    check->add_flag("--parallel", o.parallel, "Split the input sweep across threads");
    check->add_option("--threads", o.threads, "Worker count for --parallel");
    check->add_flag("--json", o.json, "Machine-readable output");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        for (auto *sub : app.get_subcommands()) {
            err << sub->help();
        }
        return kExitUsage;
    }

    try {
        if (build->parsed()) {
            return cmd_build(o, out);
        }
        if (run_cmd->parsed() || verify->parsed()) {
            if (o.algorithm.empty() && o.n == 0) {
                throw UsageError("one of --n or --algorithm is required");
            }
            return run_cmd->parsed() ? cmd_run(o, out) : cmd_verify(o, out);
        }
        if (sens->parsed()) {
            return cmd_sensitivity(o, out);
        }
        if (classical->parsed()) {
            return cmd_classical(o, out);
        }
        if (equal->parsed()) {
            return cmd_equal(o, out);
        }
        if (check->parsed()) {
            return cmd_check(o, out);
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qverify
