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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace qverify;
using namespace qverify::testing;

namespace {

std::vector<std::size_t> one_based(std::vector<std::size_t> v) {
    for (auto &x : v) x += 1;
    return v;
}

// Six-variable reference listings, 0 for fixed entries, k for (-1)^{x_k}.
const double s = std::sqrt(0.5);

const Dense kU1 = {
    {s, 0, 0, 0, s, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0},
    {s, 0, 0, 0, -s, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 0, 0, 1},
};
const Dense kU2 = {
    {s, 0, s, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0, 0}, {s, 0, -s, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, s, 0, s, 0}, {0, 0, 0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, s, 0, -s, 0}, {0, 0, 0, 0, 0, 0, 0, 1},
};
const Dense kU3 = {
    {s, s, 0, 0, 0, 0, 0, 0}, {s, -s, 0, 0, 0, 0, 0, 0}, {0, 0, s, s, 0, 0, 0, 0}, {0, 0, s, -s, 0, 0, 0, 0},
    {0, 0, 0, 0, s, s, 0, 0}, {0, 0, 0, 0, s, -s, 0, 0}, {0, 0, 0, 0, 0, 0, s, s}, {0, 0, 0, 0, 0, 0, s, -s},
};
const std::vector<std::size_t> kQ1 = {1, 0, 0, 0, 2, 0, 0, 0};
const std::vector<std::size_t> kQ2 = {3, 0, 4, 0, 3, 0, 4, 0};
const std::vector<std::size_t> kQ3 = {5, 6, 5, 6, 5, 6, 5, 6};

std::vector<std::size_t> placements(const QuerySpec &q) {
    std::vector<std::size_t> out;
    for (const auto &e : q.entries()) out.push_back(e.is_var() ? e.var_index : 0);
    return out;
}

}  // namespace

TEST(index_set, examples) {
    ASSERT_EQ(one_based(index_set(1, 8)), (std::vector<std::size_t>{1, 5}));
    ASSERT_EQ(one_based(index_set(2, 8)), (std::vector<std::size_t>{1, 3, 5, 7}));
    ASSERT_EQ(one_based(index_set(1, 4)), (std::vector<std::size_t>{1, 3}));
    // The formula, not the 7-element listing, defines the last stage.
    ASSERT_EQ(one_based(index_set(3, 8)), (std::vector<std::size_t>{1, 2, 3, 4, 5, 6, 7, 8}));
}

TEST(index_set, errors) {
    ASSERT_THROW(index_set(0, 8), std::invalid_argument);
    ASSERT_THROW(index_set(4, 8), std::invalid_argument);
    ASSERT_THROW(index_set(1, 6), std::invalid_argument);
    ASSERT_THROW(build_stage_unitary(3, 4), std::invalid_argument);
    ASSERT_THROW(build_stage_query(2, 2), std::invalid_argument);
}

TEST(plan_stage, pairs_partition_indices) {
    for (std::size_t k : {2u, 4u, 8u, 64u}) {
        for (std::size_t i = 1; (std::size_t{1} << i) <= k; i++) {
            auto plan = plan_stage(i, k);
            ASSERT_EQ(plan.indices.size(), std::size_t{1} << i);
            ASSERT_EQ(plan.pairs.size(), plan.indices.size() / 2);
            for (std::size_t j = 0; j < plan.indices.size(); j++) {
                ASSERT_EQ(plan.indices[j], j * k / (std::size_t{1} << i));
            }
            for (std::size_t p = 0; p < plan.pairs.size(); p++) {
                ASSERT_EQ(plan.pairs[p].first, plan.indices[2 * p]);
                ASSERT_EQ(plan.pairs[p].second, plan.indices[2 * p + 1]);
            }
        }
    }
}

TEST(build_stage_unitary, matches_six_variable_listing) {
    ASSERT_LE(max_abs_diff(to_dense(build_stage_unitary(1, 8)), kU1), 1e-12);
    ASSERT_LE(max_abs_diff(to_dense(build_stage_unitary(2, 8)), kU2), 1e-12);
    ASSERT_LE(max_abs_diff(to_dense(build_stage_unitary(3, 8)), kU3), 1e-12);
}

TEST(build_stage_unitary, single_pair_is_hadamard) {
    ASSERT_EQ(build_stage_unitary(1, 2), hadamard_power(1));
}

TEST(build_stage_query, matches_six_variable_listing) {
    ASSERT_EQ(placements(build_stage_query(1, 8)), kQ1);
    ASSERT_EQ(placements(build_stage_query(2, 8)), kQ2);
    ASSERT_EQ(placements(build_stage_query(3, 8)), kQ3);
}

TEST(build_stage_query, uses_consecutive_variable_pairs) {
    // Stage i always queries x_{2i-1} and x_{2i}, never x_{2^{i-1}} / x_{2^i}.
    for (std::size_t i = 1; i <= 6; i++) {
        auto q = build_stage_query(i, 64);
        std::set<std::size_t> vars;
        for (const auto &e : q.entries())
            if (e.is_var()) vars.insert(e.var_index);
        ASSERT_EQ(vars, (std::set<std::size_t>{2 * i - 1, 2 * i}));
    }
}

TEST(build_algorithm, six_variable_final_transform) {
    auto alg = build_algorithm(6);
    Dense h3 = naive_kron(naive_kron(naive_hadamard(), naive_hadamard()), naive_hadamard());
    ASSERT_LE(max_abs_diff(to_dense(alg.final_unitary()), h3), 1e-12);
    for (std::size_t j = 0; j < 8; j++) {
        ASSERT_NEAR(alg.final_unitary().at(0, j), 1 / (2 * std::sqrt(2.0)), 1e-12);
    }
}

TEST(build_algorithm, printed_final_transform_errata) {
    // Sign patterns of the reference listing's U_final. Rows 4, 6 and 7 do not
    // match H^{(x)3}; the tensor definition is what the builder produces.
    const int printed[8][8] = {
        {1, 1, 1, 1, 1, 1, 1, 1},     {1, -1, 1, -1, 1, -1, 1, -1}, {1, 1, -1, -1, 1, 1, -1, -1},
        {1, -1, -1, 1, 1, -1, -1, 1}, {1, 1, 1, 1, -1, -1, 1, -1},  {1, -1, 1, -1, -1, 1, -1, 1},
        {1, 1, -1, -1, 1, 1, -1, -1}, {1, -1, 1, -1, -1, -1, 1, 1},
    };
    auto u = build_algorithm(6).final_unitary();
    std::vector<std::size_t> mismatched;
    for (std::size_t i = 0; i < 8; i++) {
        bool same = true;
        for (std::size_t j = 0; j < 8; j++) {
            same &= std::abs(u.at(i, j) - printed[i][j] / (2 * std::sqrt(2.0))) <= 1e-12;
        }
        if (!same) mismatched.push_back(i);
    }
    ASSERT_EQ(mismatched, (std::vector<std::size_t>{4, 6, 7}));
}

TEST(build_algorithm, six_variable_stages) {
    auto alg = build_algorithm(6);
    const Dense *us[] = {&kU1, &kU2, &kU3};
    const std::vector<std::size_t> *qs[] = {&kQ1, &kQ2, &kQ3};
    for (std::size_t i = 0; i < 3; i++) {
        ASSERT_LE(max_abs_diff(to_dense(alg.stages()[i].unitary), *us[i]), 1e-12);
        ASSERT_EQ(placements(alg.stages()[i].query), *qs[i]);
    }
}

TEST(build_algorithm, two_variables) {
    auto alg = build_algorithm(2);
    ASSERT_EQ(alg.dim(), 2u);
    ASSERT_EQ(alg.t_queries(), 1u);
    ASSERT_EQ(alg.stages()[0].unitary, hadamard_power(1));
    ASSERT_EQ(placements(alg.stages()[0].query), (std::vector<std::size_t>{1, 2}));
    ASSERT_EQ(alg.final_unitary(), hadamard_power(1));
    // Hand simulation: 00 and 11 land on |0>, 01 and 10 on |1>.
    const std::pair<const char *, int> cases[] = {{"00", 1}, {"01", 0}, {"10", 0}, {"11", 1}};
    for (auto [x, want] : cases) {
        auto r = compute(alg, BitString::parse(x));
        ASSERT_EQ(r.output, want) << x;
        ASSERT_TRUE(r.exact) << x;
    }
}

TEST(build_algorithm, dimension_law) {
    for (std::size_t n = 2; n <= 20; n += 2) {
        auto alg = build_algorithm(n);
        ASSERT_EQ(alg.n_vars(), n);
        ASSERT_EQ(alg.t_queries(), n / 2);
        ASSERT_EQ(alg.dim(), std::size_t{1} << (n / 2));
        ASSERT_EQ(alg.start(), StateVector::basis(alg.dim(), 0));
        ASSERT_EQ(alg.labels()[0], 1);
        for (std::size_t i = 1; i < alg.dim(); i++) ASSERT_EQ(alg.labels()[i], 0);
    }
}

TEST(build_algorithm, errors) {
    ASSERT_THROW(build_algorithm(0), std::invalid_argument);
    ASSERT_THROW(build_algorithm(5), std::invalid_argument);
    ASSERT_THROW(build_algorithm(26), std::invalid_argument);
}

TEST(build_algorithm, matrices_unitary) {
    for (std::size_t n = 2; n <= 16; n += 2) {
        auto alg = build_algorithm(n);
        ASSERT_TRUE(alg.is_unitary(1e-12)) << "n=" << n;
    }
}

namespace {

void check_ladder(const QueryAlgorithm &alg, const BitString &x) {
    auto trace = run(alg, x);
    std::size_t k = alg.dim();
    for (std::size_t i = 1; i <= alg.t_queries(); i++) {
        const auto &state = trace.after_stage(i);
        auto idx = index_set(i, k);
        std::set<std::size_t> where(idx.begin(), idx.end());
        double magnitude = std::pow(2.0, -static_cast<double>(i) / 2);
        std::size_t nonzeros = 0;
        for (std::size_t b = 0; b < k; b++) {
            if (std::abs(state[b]) > 1e-9) {
                nonzeros++;
                ASSERT_TRUE(where.count(b)) << x << " stage " << i << " index " << b;
                ASSERT_NEAR(std::abs(state[b]), magnitude, 1e-9);
            }
        }
        ASSERT_EQ(nonzeros, std::size_t{1} << i) << x << " stage " << i;
    }
    const auto &last = trace.after_stage(alg.t_queries());
    std::size_t positive = 0;
    for (std::size_t b = 0; b < k; b++) positive += last[b] > 0;
    if (verify_pairs_equal(x.word(), x.size())) {
        ASSERT_TRUE(positive == 0 || positive == k) << x;
    } else {
        ASSERT_EQ(2 * positive, k) << x;
        ASSERT_NEAR(trace.final_state()[0], 0, 1e-9) << x;
    }
}

}  // namespace

TEST(amplitude_ladder, exhaustive_to_twelve) {
    for (std::size_t n = 2; n <= 12; n += 2) {
        auto alg = build_algorithm(n);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); w++) {
            check_ladder(alg, BitString::from_word(w, n));
            if (::testing::Test::HasFatalFailure()) return;
        }
    }
}

TEST(amplitude_ladder, sampled_at_sixteen) {
    auto alg = build_algorithm(16);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; trial++) {
        std::uint64_t w = rng() & 0xFFFF;
        if (trial % 2 == 0) {
            // Force an accepting input: copy each pair's high bit into its low bit.
            w = (w & 0xAAAA) | ((w & 0xAAAA) >> 1);
        }
        check_ladder(alg, BitString::from_word(w, 16));
        if (::testing::Test::HasFatalFailure()) return;
    }
}
