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

#include "qverify/boolean_oracle.h"

#include <stdexcept>
#include <string>

namespace qverify {

namespace {

void check_verify_arity(std::size_t n) {
    if (n < 2 || n % 2 != 0 || n > kMaxExhaustiveArity) {
        throw std::invalid_argument(
            "VERIFY_N needs an even N in [2, " + std::to_string(kMaxExhaustiveArity) + "], got " +
            std::to_string(n));
    }
}

}  // namespace

BooleanFunction BooleanFunction::verify(std::size_t n) {
    check_verify_arity(n);
    return BooleanFunction(n, Kind::VerifyN, {});
}

BooleanFunction BooleanFunction::truth_table(std::size_t arity, std::vector<std::uint8_t> table) {
    if (arity < 1 || arity > kMaxExhaustiveArity) {
        throw std::invalid_argument(
            "truth table arity must be in [1, " + std::to_string(kMaxExhaustiveArity) + "], got " +
            std::to_string(arity));
    }
    if (table.size() != (std::size_t{1} << arity)) {
        throw std::invalid_argument(
            "truth table for arity " + std::to_string(arity) + " needs " +
            std::to_string(std::size_t{1} << arity) + " entries, got " + std::to_string(table.size()));
    }
    for (auto v : table) {
        if (v > 1) {
            throw std::invalid_argument("truth table entries must be 0 or 1");
        }
    }
    return BooleanFunction(arity, Kind::TruthTable, std::move(table));
}

bool verify_pairs_equal(std::uint64_t word, std::size_t n) {
    // Pair (x_{2j-1}, x_{2j}) occupies bits (n-2j+1, n-2j); compare each pair's
    // high bit against its low bit in one shift.
    std::uint64_t low_mask = 0;
    for (std::size_t j = 0; j < n; j += 2) {
        low_mask |= std::uint64_t{1} << j;
    }
    return ((word ^ (word >> 1)) & low_mask) == 0;
}

int BooleanFunction::eval(const BitString &input) const {
    if (input.size() != arity_) {
        throw std::invalid_argument(
            "input has " + std::to_string(input.size()) + " bits, function arity is " + std::to_string(arity_));
    }
    if (kind_ == Kind::VerifyN) {
        return verify_pairs_equal(input.word(), arity_) ? 1 : 0;
    }
    return table_[input.word()];
}

std::size_t sensitivity_at(const BooleanFunction &f, const BitString &x) {
    int value = f.eval(x);
    std::size_t count = 0;
    for (std::size_t i = 0; i < x.size(); i++) {
        if (f.eval(x.with_flipped(i)) != value) {
            count++;
        }
    }
    return count;
}

SensitivityResult sensitivity(const BooleanFunction &f) {
    std::size_t n = f.arity();
    if (n > kMaxSensitivityArity) {
        throw std::invalid_argument(
            "sensitivity is capped at arity " + std::to_string(kMaxSensitivityArity) + ", got " + std::to_string(n));
    }
    SensitivityResult best{0, BitString::from_word(0, n)};
    std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t w = 0; w < count; w++) {
        auto x = BitString::from_word(w, n);
        std::size_t s = sensitivity_at(f, x);
        if (s > best.value) {
            best = {s, x};
            if (s == n) {
                break;
            }
        }
    }
    return best;
}

ClassicalRunReport classical_verify(const BitOracle &oracle, std::size_t n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("classical VERIFY needs an even arity >= 2, got " + std::to_string(n));
    }
    ClassicalRunReport report;
    auto ask = [&](std::size_t k) {
        report.query_sequence.push_back(k);
        report.queries_used++;
        return oracle(k);
    };
    for (std::size_t k = 1; k < n; k += 2) {
        bool first = ask(k);
        bool second = ask(k + 1);
        if (first != second) {
            report.output = 0;
            return report;
        }
    }
    report.output = 1;
    return report;
}

ClassicalRunReport classical_verify(const BitString &input) {
    return classical_verify([&](std::size_t k) { return input.var(k); }, input.size());
}

}  // namespace qverify
