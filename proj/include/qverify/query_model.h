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

#ifndef QVERIFY_QUERY_MODEL_H
#define QVERIFY_QUERY_MODEL_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qverify/bitstring.h"
#include "qverify/boolean_oracle.h"
#include "qverify/linalg.h"

namespace qverify {

/// One diagonal entry of a query transformation: either a fixed +1 or the
/// phase (-1)^{x_k} for a 1-based variable index k.
struct QueryEntry {
    enum class Kind { Fixed, Var };

    Kind kind = Kind::Fixed;
    std::size_t var_index = 0;

    static QueryEntry fixed() {
        return {Kind::Fixed, 0};
    }
    static QueryEntry var(std::size_t k) {
        return {Kind::Var, k};
    }
    bool is_var() const {
        return kind == Kind::Var;
    }
    bool operator==(const QueryEntry &) const = default;
};

/// Per-basis-state description of a query; realized against an input it is a
/// diagonal +-1 matrix and so always unitary.
class QuerySpec {
   public:
    QuerySpec() = default;
    explicit QuerySpec(std::vector<QueryEntry> diagonal);

    static QuerySpec all_fixed(std::size_t dim);

    std::size_t size() const {
        return diagonal_.size();
    }
    const QueryEntry &operator[](std::size_t i) const {
        return diagonal_[i];
    }
    std::span<const QueryEntry> entries() const {
        return diagonal_;
    }
    /// 0 when every entry is Fixed.
    std::size_t max_var_index() const;

    bool operator==(const QuerySpec &) const = default;

   private:
    std::vector<QueryEntry> diagonal_;
};

/// diag(d_0, ..., d_{K-1}) with d_i = +1 for Fixed and (-1)^{input[k-1]} for Var(k).
/// Throws std::out_of_range if a Var index exceeds input.size().
SquareMatrix realize_query(const QuerySpec &spec, const BitString &input);

struct Stage {
    SquareMatrix unitary;
    QuerySpec query;
};

/// |start> -> U_1 -> Q_1 -> ... -> U_T -> Q_T -> U_final -> measure.
///
/// Construction validates the structure: every matrix and query spec is K x K,
/// K is a power of two, the start state has unit norm, every Var index lies in
/// [1, n_vars] and labels are 0/1. Unitarity of the matrices is not enforced
/// here because hand-edited documents need to be loadable in order to be
/// rejected by `check_exact`; use `unitarity_defect()` to inspect it.
class QueryAlgorithm {
   public:
    QueryAlgorithm(
        std::size_t n_vars,
        StateVector start,
        std::vector<Stage> stages,
        SquareMatrix final_unitary,
        std::vector<std::uint8_t> labels);

    std::size_t n_vars() const {
        return n_vars_;
    }
    std::size_t t_queries() const {
        return stages_.size();
    }
    std::size_t dim() const {
        return start_.size();
    }
    const StateVector &start() const {
        return start_;
    }
    const std::vector<Stage> &stages() const {
        return stages_;
    }
    const SquareMatrix &final_unitary() const {
        return final_unitary_;
    }
    const std::vector<std::uint8_t> &labels() const {
        return labels_;
    }

    /// Largest unitarity defect over every U_i and U_final.
    double unitarity_defect() const;
    bool is_unitary(double tol = kMatrixTolerance) const;

   private:
    std::size_t n_vars_;
    StateVector start_;
    std::vector<Stage> stages_;
    SquareMatrix final_unitary_;
    std::vector<std::uint8_t> labels_;
};

/// states[0] is the start state, then for each stage the state after U_i and
/// after Q_i, and finally the state after U_final: 2T + 2 states in total.
struct RunTrace {
    std::vector<StateVector> states;

    const StateVector &final_state() const {
        return states.back();
    }
    /// State after stage i's query (1-based stage).
    const StateVector &after_stage(std::size_t stage) const {
        return states.at(2 * stage);
    }
};

/// Throws std::invalid_argument when input.size() != alg.n_vars().
RunTrace run(const QueryAlgorithm &alg, const BitString &input);

struct Probabilities {
    double p0 = 0;
    double p1 = 0;
};

/// p_j = sum of final[i]^2 over basis states labelled j.
/// Throws std::invalid_argument on length mismatch.
Probabilities measure(const StateVector &final_state, std::span<const std::uint8_t> labels);

struct ComputeResult {
    int output = 0;
    double probability = 0;
    bool exact = false;
};

/// Output is the more likely label. `exact` requires that probability to be
/// >= 1 - 1e-9 and the total p0 + p1 to be within 1e-9 of one. A tie reports
/// output 0 with probability 0.5 and exact = false.
ComputeResult interpret(const Probabilities &p);
ComputeResult compute(const QueryAlgorithm &alg, const BitString &input);

struct CheckOptions {
    bool parallel = false;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct ExactnessReport {
    bool exact = false;
    /// Lexicographically first input on which the algorithm is not exactly correct.
    std::optional<BitString> counterexample;
    std::uint64_t inputs_tested = 0;
    std::uint64_t failures = 0;
    /// Smallest probability of the correct output f(x) over all inputs.
    double min_correct_probability = 1;
    /// False when some U_i or U_final fails is_unitary at 1e-12; such an object
    /// is not a quantum query algorithm, so every input counts as a failure.
    bool unitary = true;
};

/// Def.-4 exactness, checked exhaustively over all 2^N inputs.
/// Throws std::invalid_argument when alg.n_vars() != f.arity() or the arity
/// exceeds kMaxExhaustiveArity. Parallel and serial runs return identical reports.
ExactnessReport check_exact(const QueryAlgorithm &alg, const BooleanFunction &f, const CheckOptions &options = {});

}  // namespace qverify

#endif
