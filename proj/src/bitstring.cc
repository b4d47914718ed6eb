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

#include "qverify/bitstring.h"

#include <ostream>
#include <stdexcept>

namespace qverify {

BitString BitString::parse(std::string_view text) {
    if (text.size() > kMaxLength) {
        throw std::invalid_argument("bit string longer than " + std::to_string(kMaxLength) + " bits");
    }
    std::uint64_t word = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain '0' and '1', got '" + std::string(text) + "'");
        }
        word = (word << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(word, text.size());
}

BitString BitString::from_word(std::uint64_t word, std::size_t length) {
    if (length > kMaxLength) {
        throw std::invalid_argument("bit string longer than " + std::to_string(kMaxLength) + " bits");
    }
    if (length < 64 && (word >> length) != 0) {
        throw std::invalid_argument("word does not fit in " + std::to_string(length) + " bits");
    }
    return BitString(word, length);
}

bool BitString::var(std::size_t k) const {
    if (k < 1 || k > length_) {
        throw std::out_of_range(
            "variable index x" + std::to_string(k) + " outside [1, " + std::to_string(length_) + "]");
    }
    return (*this)[k - 1];
}

BitString BitString::with_flipped(std::size_t pos) const {
    if (pos >= length_) {
        throw std::out_of_range("bit position out of range");
    }
    return BitString(word_ ^ (std::uint64_t{1} << (length_ - 1 - pos)), length_);
}

std::string BitString::str() const {
    std::string out(length_, '0');
    for (std::size_t i = 0; i < length_; i++) {
        if ((*this)[i]) {
            out[i] = '1';
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const BitString &bits) {
    return out << bits.str();
}

}  // namespace qverify
