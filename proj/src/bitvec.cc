// Copyright 2026 The dqimc Authors
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

#include "dqimc/bitvec.h"

#include <stdexcept>

namespace dqimc {

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t word = words_[w];
        while (word) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
    return out;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("BitVector xor: size mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector BitVector::from_word(std::size_t size, std::uint64_t word) {
    BitVector r(size);
    if (size < 64) {
        word &= (std::uint64_t{1} << size) - 1;
    }
    if (!r.words_.empty()) {
        r.words_[0] = word;
    }
    return r;
}

std::string BitVector::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::size_t digits = (size_ + 3) / 4;
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        unsigned nibble = 0;
        for (std::size_t b = 0; b < 4; ++b) {
            std::size_t i = d * 4 + b;
            if (i < size_ && get(i)) {
                nibble |= 1u << b;
            }
        }
        out[digits - 1 - d] = kDigits[nibble];
    }
    return out;
}

BitVector BitVector::from_hex(std::size_t size, std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) {
        hex.remove_prefix(2);
    }
    BitVector r(size);
    std::size_t d = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++d) {
        char c = *it;
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nibble = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            nibble = static_cast<unsigned>(c - 'A' + 10);
        } else {
            throw std::invalid_argument("invalid hex digit '" + std::string(1, c) + "'");
        }
        for (std::size_t b = 0; b < 4; ++b) {
            if (!((nibble >> b) & 1)) {
                continue;
            }
            std::size_t i = d * 4 + b;
            if (i >= size) {
                throw std::invalid_argument("hex value has bits beyond length " + std::to_string(size));
            }
            r.set(i);
        }
    }
    return r;
}

std::string BitVector::to_bitstring() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

}  // namespace dqimc
