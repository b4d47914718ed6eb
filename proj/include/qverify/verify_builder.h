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

#ifndef QVERIFY_VERIFY_BUILDER_H
#define QVERIFY_VERIFY_BUILDER_H

#include <cstddef>
#include <utility>
#include <vector>

#include "qverify/linalg.h"
#include "qverify/query_model.h"

namespace qverify {

/// Largest N the builder accepts (K = 4096 amplitudes).
inline constexpr std::size_t kMaxVerifyArity = 24;

/// Basis indices touched by stage i and how they pair up into 2x2 blocks.
struct StagePlan {
    std::size_t stage = 0;
    /// 0-based, indices[j] = j * K / 2^i.
    std::vector<std::size_t> indices;
    /// (indices[0], indices[1]), (indices[2], indices[3]), ...
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

/// {j * K / 2^i : j = 0 .. 2^i - 1}, 0-based. The 1-based form used in
/// printed matrices is this plus one.
/// Throws std::invalid_argument unless K is a power of two and 1 <= i <= log2(K).
std::vector<std::size_t> index_set(std::size_t stage, std::size_t dim);

StagePlan plan_stage(std::size_t stage, std::size_t dim);

/// Identity with a 2x2 Hadamard block [[1,1],[1,-1]]/sqrt(2) on rows and
/// columns (t1, t2) of every pair in plan_stage(stage, dim).
SquareMatrix build_stage_unitary(std::size_t stage, std::size_t dim);

/// Var(2i-1) at each pair's t1, Var(2i) at each pair's t2, Fixed elsewhere.
QuerySpec build_stage_query(std::size_t stage, std::size_t dim);

/// The N/2-query exact algorithm for VERIFY_N.
///
/// T = N/2 stages (build_stage_unitary(i, 2^T), build_stage_query(i, 2^T)),
/// final transform H^{(x)T}, start |0...0>, and label 1 on basis state 0 only.
/// Throws std::invalid_argument unless n is even and in [2, kMaxVerifyArity].
QueryAlgorithm build_algorithm(std::size_t n);

}  // namespace qverify

#endif
