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

#include "qverify/query_model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace qverify {

QuerySpec::QuerySpec(std::vector<QueryEntry> diagonal) : diagonal_(std::move(diagonal)) {
    for (const auto &e : diagonal_) {
        if (e.is_var() && e.var_index == 0) {
            throw std::invalid_argument("query variable indices are 1-based; got x0");
        }
    }
}

QuerySpec QuerySpec::all_fixed(std::size_t dim) {
    return QuerySpec(std::vector<QueryEntry>(dim, QueryEntry::fixed()));
}

std::size_t QuerySpec::max_var_index() const {
    std::size_t m = 0;
    for (const auto &e : diagonal_) {
        if (e.is_var()) {
            m = std::max(m, e.var_index);
        }
    }
    return m;
}

SquareMatrix realize_query(const QuerySpec &spec, const BitString &input) {
    std::vector<double> diag(spec.size(), 1.0);
    for (std::size_t i = 0; i < spec.size(); i++) {
        if (spec[i].is_var()) {
            if (spec[i].var_index > input.size()) {
                throw std::out_of_range(
                    "query references x" + std::to_string(spec[i].var_index) + " but the input has only " +
                    std::to_string(input.size()) + " bits");
            }
            diag[i] = input.var(spec[i].var_index) ? -1.0 : 1.0;
        }
    }
    return SquareMatrix::diagonal(diag);
}

QueryAlgorithm::QueryAlgorithm(
    std::size_t n_vars,
    StateVector start,
    std::vector<Stage> stages,
    SquareMatrix final_unitary,
    std::vector<std::uint8_t> labels)
    : n_vars_(n_vars),
      start_(std::move(start)),
      stages_(std::move(stages)),
      final_unitary_(std::move(final_unitary)),
      labels_(std::move(labels)) {
    std::size_t k = start_.size();
    if (k == 0) {
        throw std::invalid_argument("algorithm needs a non-empty start state");
    }
    if (n_vars_ == 0 || n_vars_ > BitString::kMaxLength) {
        throw std::invalid_argument("n_vars must be in [1, 32], got " + std::to_string(n_vars_));
    }
    if (!start_.is_normalized()) {
        throw std::invalid_argument("start state does not have unit norm");
    }
    for (std::size_t s = 0; s < stages_.size(); s++) {
        const auto &stage = stages_[s];
        std::string where = "stage " + std::to_string(s + 1);
        if (stage.unitary.dim() != k) {
            throw std::invalid_argument(where + " unitary is not " + std::to_string(k) + "x" + std::to_string(k));
        }
        if (stage.query.size() != k) {
            throw std::invalid_argument(where + " query diagonal does not have " + std::to_string(k) + " entries");
        }
        if (stage.query.max_var_index() > n_vars_) {
            throw std::invalid_argument(
                where + " queries x" + std::to_string(stage.query.max_var_index()) + " but the algorithm has " +
                std::to_string(n_vars_) + " variables");
        }
    }
    if (final_unitary_.dim() != k) {
        throw std::invalid_argument("final unitary is not " + std::to_string(k) + "x" + std::to_string(k));
    }
    if (labels_.size() != k) {
        throw std::invalid_argument("expected " + std::to_string(k) + " measurement labels");
    }
    for (auto l : labels_) {
        if (l > 1) {
            throw std::invalid_argument("measurement labels must be 0 or 1");
        }
    }
}

double QueryAlgorithm::unitarity_defect() const {
    double worst = qverify::unitarity_defect(final_unitary_);
    for (const auto &stage : stages_) {
        worst = std::max(worst, qverify::unitarity_defect(stage.unitary));
    }
    return worst;
}

bool QueryAlgorithm::is_unitary(double tol) const {
    if (!qverify::is_unitary(final_unitary_, tol)) {
        return false;
    }
    return std::all_of(stages_.begin(), stages_.end(), [&](const Stage &s) { return qverify::is_unitary(s.unitary, tol); });
}

Probabilities measure(const StateVector &final_state, std::span<const std::uint8_t> labels) {
    if (final_state.size() != labels.size()) {
        throw std::invalid_argument("state and label list differ in length");
    }
    Probabilities p;
    for (std::size_t i = 0; i < labels.size(); i++) {
        double sq = final_state[i] * final_state[i];
        (labels[i] ? p.p1 : p.p0) += sq;
    }
    return p;
}

ComputeResult interpret(const Probabilities &p) {
    ComputeResult r;
    if (std::abs(p.p0 - p.p1) <= kProbabilityTolerance) {
        r.output = 0;
        r.probability = 0.5;
        r.exact = false;
        return r;
    }
    r.output = p.p1 > p.p0 ? 1 : 0;
    r.probability = r.output ? p.p1 : p.p0;
    r.exact = r.probability >= 1 - kProbabilityTolerance && std::abs(p.p0 + p.p1 - 1) <= kProbabilityTolerance;
    return r;
}

namespace {

// Runs the U/Q pipeline on raw buffers. One instance per thread.
class Executor {
   public:
    explicit Executor(const QueryAlgorithm &alg)
        : alg_(alg),
          dim_(alg.dim()),
          hadamard_final_(
              is_power_of_two(alg.dim()) && alg.dim() > 1 &&
              is_hadamard_power(alg.final_unitary(), log2_exact(alg.dim()))),
          state_(dim_),
          scratch_(dim_) {
        for (const auto &stage : alg.stages()) {
            std::vector<std::uint32_t> vars(dim_);
            for (std::size_t i = 0; i < dim_; i++) {
                vars[i] = stage.query[i].is_var() ? static_cast<std::uint32_t>(stage.query[i].var_index) : 0;
            }
            query_vars_.push_back(std::move(vars));
        }
    }

    // Leaves the final state in state_. Calls record(state) after every
    // transformation when provided.
    template <typename Record>
    void evolve(std::uint64_t word, Record &&record) {
        std::size_t n = alg_.n_vars();
        auto amps = alg_.start().amplitudes();
        std::copy(amps.begin(), amps.end(), state_.begin());
        record(state_);
        for (std::size_t s = 0; s < alg_.stages().size(); s++) {
            multiply(alg_.stages()[s].unitary);
            record(state_);
            const auto &vars = query_vars_[s];
            for (std::size_t i = 0; i < dim_; i++) {
                std::uint32_t k = vars[i];
                if (k != 0 && ((word >> (n - k)) & 1u)) {
                    state_[i] = -state_[i];
                }
            }
            record(state_);
        }
        if (hadamard_final_) {
            fast_hadamard_apply(state_);
        } else {
            multiply(alg_.final_unitary());
        }
        record(state_);
    }

    Probabilities measure_state() const {
        Probabilities p;
        const auto &labels = alg_.labels();
        for (std::size_t i = 0; i < dim_; i++) {
            double sq = state_[i] * state_[i];
            (labels[i] ? p.p1 : p.p0) += sq;
        }
        return p;
    }

   private:
    void multiply(const SquareMatrix &m) {
        for (std::size_t i = 0; i < dim_; i++) {
            auto cols = m.row_columns(i);
            auto vals = m.row_values(i);
            double acc = 0;
            for (std::size_t e = 0; e < cols.size(); e++) {
                acc += vals[e] * state_[cols[e]];
            }
            scratch_[i] = acc;
        }
        state_.swap(scratch_);
    }

    const QueryAlgorithm &alg_;
    std::size_t dim_;
    bool hadamard_final_;
    std::vector<std::vector<std::uint32_t>> query_vars_;
    std::vector<double> state_;
    std::vector<double> scratch_;
};

void check_input(const QueryAlgorithm &alg, const BitString &input) {
    if (input.size() != alg.n_vars()) {
        throw std::invalid_argument(
            "input has " + std::to_string(input.size()) + " bits but the algorithm expects " +
            std::to_string(alg.n_vars()));
    }
}

struct SweepPart {
    std::uint64_t tested = 0;
    std::uint64_t failures = 0;
    std::optional<std::uint64_t> first_failure;
    double min_correct = 1;
};

SweepPart sweep(const QueryAlgorithm &alg, const BooleanFunction &f, bool unitary, std::uint64_t begin, std::uint64_t end) {
    Executor exec(alg);
    SweepPart part;
    std::size_t n = alg.n_vars();
    for (std::uint64_t w = begin; w < end; w++) {
        exec.evolve(w, [](const std::vector<double> &) {});
        Probabilities p = exec.measure_state();
        ComputeResult r = interpret(p);
        int expected = f.eval(BitString::from_word(w, n));
        part.tested++;
        part.min_correct = std::min(part.min_correct, expected ? p.p1 : p.p0);
        if (!unitary || !r.exact || r.output != expected) {
            part.failures++;
            if (!part.first_failure) {
                part.first_failure = w;
            }
        }
    }
    return part;
}

}  // namespace

RunTrace run(const QueryAlgorithm &alg, const BitString &input) {
    check_input(alg, input);
    RunTrace trace;
    trace.states.reserve(2 * alg.t_queries() + 2);
    Executor exec(alg);
    exec.evolve(input.word(), [&](const std::vector<double> &state) { trace.states.emplace_back(state); });
    return trace;
}

ComputeResult compute(const QueryAlgorithm &alg, const BitString &input) {
    check_input(alg, input);
    Executor exec(alg);
    exec.evolve(input.word(), [](const std::vector<double> &) {});
    return interpret(exec.measure_state());
}

ExactnessReport check_exact(const QueryAlgorithm &alg, const BooleanFunction &f, const CheckOptions &options) {
    if (alg.n_vars() != f.arity()) {
        throw std::invalid_argument(
            "algorithm has " + std::to_string(alg.n_vars()) + " variables but the function has arity " +
            std::to_string(f.arity()));
    }
    if (f.arity() > kMaxExhaustiveArity) {
        throw std::invalid_argument(
            "exhaustive check is capped at " + std::to_string(kMaxExhaustiveArity) + " variables");
    }
    bool unitary = alg.is_unitary(kMatrixTolerance);
    std::uint64_t total = std::uint64_t{1} << f.arity();

    unsigned workers = 1;
    if (options.parallel) {
        workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));
    }

    std::vector<SweepPart> parts(workers);
    if (workers == 1) {
        parts[0] = sweep(alg, f, unitary, 0, total);
    } else {
        std::vector<std::thread> threads;
        std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned t = 0; t < workers; t++) {
            std::uint64_t begin = std::min(total, t * chunk);
            std::uint64_t end = std::min(total, begin + chunk);
            threads.emplace_back([&, t, begin, end] { parts[t] = sweep(alg, f, unitary, begin, end); });
        }
        for (auto &th : threads) {
            th.join();
        }
    }

    ExactnessReport report;
    report.unitary = unitary;
    std::optional<std::uint64_t> first;
    for (const auto &part : parts) {
        report.inputs_tested += part.tested;
        report.failures += part.failures;
        report.min_correct_probability = std::min(report.min_correct_probability, part.min_correct);
        if (part.first_failure && (!first || *part.first_failure < *first)) {
            first = part.first_failure;
        }
    }
    report.exact = report.failures == 0;
    if (first) {
        report.counterexample = BitString::from_word(*first, f.arity());
    }
    return report;
}

}  // namespace qverify
