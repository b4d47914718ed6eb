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

#include "qverify/applications.h"

#include <random>

#include "gtest/gtest.h"
#include "qverify/boolean_oracle.h"

using namespace qverify;

namespace {

StringPair pair_of(const char *y, const char *z) {
    return StringPair(BitString::parse(y), BitString::parse(z));
}

}  // namespace

TEST(interleave, examples) {
    ASSERT_EQ(interleave(pair_of("10", "11")).str(), "1101");
    ASSERT_EQ(interleave(pair_of("0", "0")).str(), "00");
    auto w = interleave(pair_of("101", "101"));
    ASSERT_EQ(w.str(), "110011");
    ASSERT_EQ(BooleanFunction::verify(6).eval(w), 1);
}

TEST(interleave, errors) {
    ASSERT_THROW(pair_of("10", "1"), std::invalid_argument);
    ASSERT_THROW(pair_of("", ""), std::invalid_argument);
    ASSERT_THROW(deinterleave(BitString::parse("101")), std::invalid_argument);
}

TEST(interleave, roundtrip) {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 500; trial++) {
        std::size_t k = 1 + rng() % 16;
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        auto p = StringPair(BitString::from_word(rng() & mask, k), BitString::from_word(rng() & mask, k));
        ASSERT_EQ(deinterleave(interleave(p)), p);
    }
}

TEST(strings_equal, examples) {
    ASSERT_TRUE(strings_equal(pair_of("11", "11")));
    ASSERT_EQ(interleave(pair_of("10", "01")).str(), "1001");
    ASSERT_FALSE(strings_equal(pair_of("10", "01")));
    ASSERT_FALSE(strings_equal(pair_of("0", "1")));
}

TEST(strings_equal, length_cap) {
    ASSERT_THROW(strings_equal(pair_of("1010101010101", "1010101010101")), std::invalid_argument);
}

TEST(strings_equal, exhaustive_to_six) {
    for (std::size_t k = 1; k <= 6; k++) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << k); y++) {
            for (std::uint64_t z = 0; z < (std::uint64_t{1} << k); z++) {
                auto p = StringPair(BitString::from_word(y, k), BitString::from_word(z, k));
                ASSERT_EQ(strings_equal(p), y == z) << p.y() << " " << p.z();
            }
        }
    }
}
