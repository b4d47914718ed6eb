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

#ifndef QVERIFY_BITSTRING_H
#define QVERIFY_BITSTRING_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qverify {

/// A Boolean input word x_1 x_2 ... x_n of at most 32 bits.
///
/// The word is packed with x_1 in the most significant position, so the numeric
/// value of `word()` orders inputs exactly as their strings order
/// lexicographically ("0000" < "0001" < ... < "1111"). Exhaustive sweeps iterate
/// `from_word(0, n) ... from_word(2^n - 1, n)` and therefore visit inputs in
/// lexicographic order.
class BitString {
   public:
    static constexpr std::size_t kMaxLength = 32;

    BitString() = default;

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument on
    /// any other character or when longer than kMaxLength.
    static BitString parse(std::string_view text);
    /// Throws std::invalid_argument if `word` has bits set above `length`.
    static BitString from_word(std::uint64_t word, std::size_t length);

    std::size_t size() const {
        return length_;
    }
    bool empty() const {
        return length_ == 0;
    }
    std::uint64_t word() const {
        return word_;
    }

    /// 0-based position; position 0 is x_1.
    bool operator[](std::size_t pos) const {
        return (word_ >> (length_ - 1 - pos)) & 1u;
    }
    /// 1-based variable access, x_k.
    bool var(std::size_t k) const;

    BitString with_flipped(std::size_t pos) const;
    std::string str() const;

    bool operator==(const BitString &other) const = default;

   private:
    BitString(std::uint64_t word, std::size_t length) : word_(word), length_(length) {
    }

    std::uint64_t word_ = 0;
    std::size_t length_ = 0;
};

std::ostream &operator<<(std::ostream &out, const BitString &bits);

}  // namespace qverify

#endif
