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

#include "qverify/algorithm_document.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qverify/verify_builder.h"

using namespace qverify;

TEST(format_real, seventeen_significant_digits) {
    ASSERT_EQ(format_real(1.0), "1");
    ASSERT_EQ(format_real(0.0), "0");
    ASSERT_EQ(format_real(std::sqrt(0.5)), "0.70710678118654757");
    ASSERT_EQ(format_real(-0.5), "-0.5");
}

TEST(algorithm_document, roundtrip_preserves_everything) {
    for (std::size_t n : {2u, 4u, 6u, 8u}) {
        auto alg = build_algorithm(n);
        std::string text = dump_algorithm(alg);
        auto loaded = load_algorithm(text);
        ASSERT_EQ(loaded.n_vars(), alg.n_vars());
        ASSERT_EQ(loaded.start(), alg.start());
        ASSERT_EQ(loaded.final_unitary(), alg.final_unitary());
        ASSERT_EQ(loaded.labels(), alg.labels());
        for (std::size_t i = 0; i < alg.t_queries(); i++) {
            ASSERT_EQ(loaded.stages()[i].unitary, alg.stages()[i].unitary);
            ASSERT_EQ(loaded.stages()[i].query, alg.stages()[i].query);
        }
        ASSERT_EQ(dump_algorithm(loaded), text);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); w++) {
            auto x = BitString::from_word(w, n);
            ASSERT_EQ(run(loaded, x).states, run(alg, x).states);
        }
    }
}

TEST(algorithm_document, two_variable_layout) {
    std::string text = dump_algorithm(build_algorithm(2));
    ASSERT_EQ(text,
              "{\n"
              "  \"schema_version\": 1,\n"
              "  \"n_vars\": 2,\n"
              "  \"t_queries\": 1,\n"
              "  \"dim\": 2,\n"
              "  \"start\": [1, 0],\n"
              "  \"stages\": [\n"
              "    {\n"
              "      \"unitary\": [0.70710678118654757, 0.70710678118654757,\n"
              "                  0.70710678118654757, -0.70710678118654757],\n"
              "      \"query_diagonal\": [{\"var\": 1}, {\"var\": 2}]\n"
              "    }\n"
              "  ],\n"
              "  \"final_unitary\": [0.70710678118654757, 0.70710678118654757,\n"
              "                    0.70710678118654757, -0.70710678118654757],\n"
              "  \"labels\": [1, 0]\n"
              "}\n");
}

TEST(algorithm_document, rejects_malformed) {
    std::string good = dump_algorithm(build_algorithm(2));
    auto mutate = [&](const std::string &from, const std::string &to) {
        std::string s = good;
        auto pos = s.find(from);
        EXPECT_NE(pos, std::string::npos) << from;
        return s.replace(pos, from.size(), to);
    };
    ASSERT_THROW(load_algorithm("{"), DocumentError);
    ASSERT_THROW(load_algorithm("[]"), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("\"schema_version\": 1", "\"schema_version\": 2")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("\"t_queries\": 1", "\"t_queries\": 2")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("\"dim\": 2", "\"dim\": 3")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("\"start\": [1, 0]", "\"start\": [1, 1]")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("\"start\": [1, 0]", "\"start\": [1]")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("{\"var\": 2}", "{\"var\": 3}")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("{\"var\": 2}", "{\"var\": 0}")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("{\"var\": 2}", "\"fixed\"")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("\"labels\": [1, 0]", "\"labels\": [1, 2]")), DocumentError);
    ASSERT_THROW(load_algorithm(mutate("\"labels\": [1, 0]", "\"labels\": [1]")), DocumentError);
    ASSERT_NO_THROW(load_algorithm(mutate("{\"var\": 2}", "{\"fixed\": true}")));
}

TEST(algorithm_document, loads_non_unitary_matrices) {
    // Structure is valid, so loading succeeds; exactness checking rejects it.
    std::string text = dump_algorithm(build_algorithm(2));
    auto pos = text.find("0.70710678118654757");
    text.replace(pos, 19, "-0.70710678118654757");
    auto alg = load_algorithm(text);
    ASSERT_FALSE(alg.is_unitary());
}

TEST(function_document, roundtrip_and_errors) {
    auto f = BooleanFunction::verify(4);
    auto loaded = load_function(dump_function(f));
    ASSERT_EQ(loaded.kind(), BooleanFunction::Kind::TruthTable);
    for (std::uint64_t w = 0; w < 16; w++) {
        auto x = BitString::from_word(w, 4);
        ASSERT_EQ(loaded.eval(x), f.eval(x));
    }
    ASSERT_THROW(load_function("{\"arity\": 2, \"table\": [0, 1, 1]}"), DocumentError);
    ASSERT_THROW(load_function("{\"arity\": 0, \"table\": [0]}"), DocumentError);
    ASSERT_THROW(load_function("{\"table\": [0, 1]}"), DocumentError);
    ASSERT_THROW(load_function("{\"arity\": 1, \"table\": [0, 3]}"), DocumentError);
}
