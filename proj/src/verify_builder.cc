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

#include "qverify/verify_builder.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qverify {

std::vector<std::size_t> index_set(std::size_t stage, std::size_t dim) {
    if (dim == 0 || !is_power_of_two(dim)) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    std::size_t qubits = static_cast<std::size_t>(log2_exact(dim));
    if (stage < 1 || stage > qubits) {
        throw std::invalid_argument(
            "stage " + std::to_string(stage) + " needs K / 2^i >= 1 with K = " + std::to_string(dim));
    }
    std::size_t count = std::size_t{1} << stage;
    std::size_t spacing = dim / count;
    std::vector<std::size_t> out(count);
    for (std::size_t j = 0; j < count; j++) {
        out[j] = j * spacing;
    }
    return out;
}

StagePlan plan_stage(std::size_t stage, std::size_t dim) {
    StagePlan plan;
    plan.stage = stage;
    plan.indices = index_set(stage, dim);
    for (std::size_t j = 0; j + 1 < plan.indices.size(); j += 2) {
        plan.pairs.emplace_back(plan.indices[j], plan.indices[j + 1]);
    }
    return plan;
}

SquareMatrix build_stage_unitary(std::size_t stage, std::size_t dim) {
    StagePlan plan = plan_stage(stage, dim);
    const double h = std::sqrt(0.5);
    // Row r's partner within its pair, or r itself if untouched.
    std::vector<std::size_t> partner(dim);
    std::vector<bool> is_second(dim, false);
    for (std::size_t r = 0; r < dim; r++) {
        partner[r] = r;
    }
    for (auto [t1, t2] : plan.pairs) {
        partner[t1] = t2;
        partner[t2] = t1;
        is_second[t2] = true;
    }
    MatrixBuilder b(dim, 2 * dim);
    for (std::size_t r = 0; r < dim; r++) {
        if (partner[r] == r) {
            b.push(static_cast<std::uint32_t>(r), 1.0);
        } else if (!is_second[r]) {
            b.push(static_cast<std::uint32_t>(r), h);
            b.push(static_cast<std::uint32_t>(partner[r]), h);
        } else {
            b.push(static_cast<std::uint32_t>(partner[r]), h);
            b.push(static_cast<std::uint32_t>(r), -h);
        }
        b.end_row();
    }
    return std::move(b).finish();
}

QuerySpec build_stage_query(std::size_t stage, std::size_t dim) {
    StagePlan plan = plan_stage(stage, dim);
    std::vector<QueryEntry> diag(dim, QueryEntry::fixed());
    for (auto [t1, t2] : plan.pairs) {
        diag[t1] = QueryEntry::var(2 * stage - 1);
        diag[t2] = QueryEntry::var(2 * stage);
    }
    return QuerySpec(std::move(diag));
}

QueryAlgorithm build_algorithm(std::size_t n) {
    if (n < 2 || n % 2 != 0 || n > kMaxVerifyArity) {
        throw std::invalid_argument(
            "VERIFY_N builder needs an even N in [2, " + std::to_string(kMaxVerifyArity) + "], got " +
            std::to_string(n));
    }
    std::size_t t = n / 2;
    std::size_t dim = std::size_t{1} << t;
    std::vector<Stage> stages;
    stages.reserve(t);
    for (std::size_t i = 1; i <= t; i++) {
        stages.push_back({build_stage_unitary(i, dim), build_stage_query(i, dim)});
    }
    std::vector<std::uint8_t> labels(dim, 0);
    labels[0] = 1;
    return QueryAlgorithm(
        n, StateVector::basis(dim, 0), std::move(stages), hadamard_power(static_cast<int>(t)), std::move(labels));
}

}  // namespace qverify
