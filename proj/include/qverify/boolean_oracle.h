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

#ifndef QVERIFY_BOOLEAN_ORACLE_H
#define QVERIFY_BOOLEAN_ORACLE_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "qverify/bitstring.h"

namespace qverify {

/// Largest arity accepted for exhaustive work (2^24 inputs).
inline constexpr std::size_t kMaxExhaustiveArity = 24;
/// Largest arity accepted by `sensitivity` (cost N * 2^N evaluations).
inline constexpr std::size_t kMaxSensitivityArity = 20;

/// A total Boolean function f : {0,1}^N -> {0,1}.
///
/// Either the built-in VERIFY_N (1 iff x_{2j-1} == x_{2j} for every pair) or an
/// explicit truth table. Truth tables are indexed by `BitString::word()`, so
/// entry 0 is f(00...0) and entry 2^N - 1 is f(11...1).
class BooleanFunction {
   public:
    enum class Kind { VerifyN, TruthTable };

    /// Throws std::invalid_argument unless n is even and in [2, kMaxExhaustiveArity].
    static BooleanFunction verify(std::size_t n);
    /// Throws std::invalid_argument unless table.size() == 2^arity and every entry is 0 or 1.
    static BooleanFunction truth_table(std::size_t arity, std::vector<std::uint8_t> table);

    std::size_t arity() const {
        return arity_;
    }
    Kind kind() const {
        return kind_;
    }
    const std::vector<std::uint8_t> &table() const {
        return table_;
    }

    /// Throws std::invalid_argument when input.size() != arity().
    int eval(const BitString &input) const;

   private:
    BooleanFunction(std::size_t arity, Kind kind, std::vector<std::uint8_t> table)
        : arity_(arity), kind_(kind), table_(std::move(table)) {
    }

    std::size_t arity_ = 0;
    Kind kind_ = Kind::VerifyN;
    std::vector<std::uint8_t> table_;
};

/// VERIFY_N on a packed word; no validation. Used by the hot loops.
bool verify_pairs_equal(std::uint64_t word, std::size_t n);

struct SensitivityResult {
    std::size_t value = 0;
    /// Lexicographically smallest input attaining `value`.
    BitString witness;
};

/// s(f) = max_x #{i : f(x) != f(x with bit i flipped)}.
/// Throws std::invalid_argument when arity exceeds kMaxSensitivityArity.
SensitivityResult sensitivity(const BooleanFunction &f);

/// Sensitivity of f on a single input, s_x(f).
std::size_t sensitivity_at(const BooleanFunction &f, const BitString &x);

struct ClassicalRunReport {
    int output = 0;
    std::size_t queries_used = 0;
    /// 1-based variable indices in the order they were asked.
    std::vector<std::size_t> query_sequence;
};

/// Oracle callback: given a 1-based variable index k, returns x_k.
using BitOracle = std::function<bool(std::size_t)>;

/// Deterministic decision tree for VERIFY_n: asks x1, x2, then x3, x4, ... and
/// stops with output 0 at the first unequal pair. Accepting inputs cost exactly
/// n queries. Exceptions thrown by the oracle propagate.
ClassicalRunReport classical_verify(const BitOracle &oracle, std::size_t n);

/// classical_verify against a concrete input.
ClassicalRunReport classical_verify(const BitString &input);

}  // namespace qverify

#endif
