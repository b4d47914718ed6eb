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

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "qverify/query_model.h"
#include "qverify/verify_builder.h"

namespace qverify {

StringPair::StringPair(BitString y, BitString z) : y_(y), z_(z) {
    if (y_.size() != z_.size()) {
        throw std::invalid_argument(
            "strings differ in length (" + std::to_string(y_.size()) + " vs " + std::to_string(z_.size()) + ")");
    }
    if (y_.empty() || y_.size() > BitString::kMaxLength / 2) {
        throw std::invalid_argument("string length must be in [1, 16]");
    }
}

BitString interleave(const StringPair &p) {
    std::uint64_t word = 0;
    for (std::size_t j = 0; j < p.length(); j++) {
        word = (word << 2) | (std::uint64_t{p.y()[j]} << 1) | std::uint64_t{p.z()[j]};
    }
    return BitString::from_word(word, 2 * p.length());
}

StringPair deinterleave(const BitString &word) {
    if (word.empty() || word.size() % 2 != 0) {
        throw std::invalid_argument("interleaved word must have a positive even length");
    }
    std::size_t k = word.size() / 2;
    std::uint64_t y = 0;
    std::uint64_t z = 0;
    for (std::size_t j = 0; j < k; j++) {
        y = (y << 1) | std::uint64_t{word[2 * j]};
        z = (z << 1) | std::uint64_t{word[2 * j + 1]};
    }
    return StringPair(BitString::from_word(y, k), BitString::from_word(z, k));
}

namespace {

// Building the k = 12 algorithm materializes a 4096 x 4096 H^{(x)12}; keep one
// per length.
const QueryAlgorithm &cached_algorithm(std::size_t k) {
    static std::array<std::unique_ptr<const QueryAlgorithm>, kMaxStringLength + 1> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[k]) {
        cache[k] = std::make_unique<const QueryAlgorithm>(build_algorithm(2 * k));
    }
    return *cache[k];
}

}  // namespace

bool strings_equal(const StringPair &p) {
    if (p.length() > kMaxStringLength) {
        throw std::invalid_argument(
            "string equality is capped at " + std::to_string(kMaxStringLength) + " bits, got " +
            std::to_string(p.length()));
    }
    ComputeResult r = compute(cached_algorithm(p.length()), interleave(p));
    if (!r.exact) {
        throw std::logic_error("VERIFY simulation returned a non-exact outcome");
    }
    return r.output == 1;
}

}  // namespace qverify
