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

#ifndef DQIMC_BITVEC_H
#define DQIMC_BITVEC_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dqimc {

/// Fixed-length GF(2) vector packed into 64-bit words. Bit i lives in word
/// i / 64 at position i % 64; unused high bits of the last word stay zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {
    }

    std::size_t size() const {
        return size_;
    }

    bool get(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i, bool bit = true) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (bit) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }
    bool none() const {
        for (auto w : words_) {
            if (w) {
                return false;
            }
        }
        return true;
    }

    /// Indices of set bits in increasing order.
    std::vector<std::size_t> ones() const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    /// Lowest 64 bits, for vectors used as enumeration indices.
    std::uint64_t low_word() const {
        return words_.empty() ? 0 : words_[0];
    }
    static BitVector from_word(std::size_t size, std::uint64_t word);

    /// Hex rendering of the vector read as an integer whose bit i is entry i:
    /// most significant nibble first, exactly ceil(size/4) digits.
    std::string to_hex() const;
    /// Inverse of to_hex. Accepts an optional "0x" prefix and fewer digits than
    /// ceil(size/4); throws std::invalid_argument on bits beyond size.
    static BitVector from_hex(std::size_t size, std::string_view hex);

    /// '0'/'1' characters, entry 0 first.
    std::string to_bitstring() const;

   private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// BitVector bound to an index space, so edge and vertex vectors don't mix.
template <class Tag>
class TaggedBits : public BitVector {
   public:
    using BitVector::BitVector;
    TaggedBits() = default;
    explicit TaggedBits(BitVector bits) : BitVector(std::move(bits)) {
    }

    TaggedBits& operator^=(const TaggedBits& other) {
        BitVector::operator^=(other);
        return *this;
    }
    friend TaggedBits operator^(TaggedBits a, const TaggedBits& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const TaggedBits&, const TaggedBits&) = default;
};

struct EdgeIndexTag;
struct VertexIndexTag;

/// Subgraph indicator over edge indices (bit e set iff edge e is present).
using EdgeVector = TaggedBits<EdgeIndexTag>;
/// Indicator over vertex indices.
using VertexVector = TaggedBits<VertexIndexTag>;

}  // namespace dqimc

#endif
