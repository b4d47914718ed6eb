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

#ifndef QVERIFY_APPLICATIONS_H
#define QVERIFY_APPLICATIONS_H

#include <cstddef>

#include "qverify/bitstring.h"

namespace qverify {

inline constexpr std::size_t kMaxStringLength = 12;

/// Two k-bit strings. Y takes the odd positions x1 x3 x5 ... of the combined
/// word and Z the even positions x2 x4 x6 ...
class StringPair {
   public:
    /// Throws std::invalid_argument unless |y| == |z| and 1 <= k <= 16.
    StringPair(BitString y, BitString z);

    const BitString &y() const {
        return y_;
    }
    const BitString &z() const {
        return z_;
    }
    std::size_t length() const {
        return y_.size();
    }
    bool operator==(const StringPair &) const = default;

   private:
    BitString y_;
    BitString z_;
};

/// x_{2j-1} = y_j, x_{2j} = z_j.
BitString interleave(const StringPair &p);
/// Inverse of interleave. Throws std::invalid_argument for odd or empty words.
StringPair deinterleave(const BitString &word);

/// Answers y == z by running the VERIFY_{2k} algorithm on interleave(p).
/// Throws std::invalid_argument when k > kMaxStringLength, and
/// std::logic_error if the simulated outcome is not exact.
bool strings_equal(const StringPair &p);

}  // namespace qverify

#endif
