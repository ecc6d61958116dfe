// Copyright 2026 The initfree Authors
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

#include "initfree/bits.hpp"

#include <stdexcept>

namespace initfree {

BitString::BitString(unsigned width, std::uint64_t value) : width_(width), value_(value) {
    if (width > kMaxBits) {
        throw std::invalid_argument("BitString: width " + std::to_string(width) +
                                    " exceeds maximum " + std::to_string(kMaxBits));
    }
    if (value >= pow2(width)) {
        throw std::invalid_argument("BitString: value " + std::to_string(value) +
                                    " does not fit in " + std::to_string(width) + " bits");
    }
}

BitString BitString::parse(std::string_view bits) {
    if (bits.empty() || bits.size() > kMaxBits) {
        throw std::invalid_argument("BitString::parse: bad length");
    }
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString::parse: '" + std::string(bits) +
                                        "' is not a binary string");
        }
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(static_cast<unsigned>(bits.size()), v);
}

std::string BitString::to_string() const {
    std::string s(width_, '0');
    for (unsigned i = 0; i < width_; ++i) {
        if (bit(i)) s[width_ - 1 - i] = '1';
    }
    return s;
}

BitString BitString::operator^(const BitString& other) const {
    if (width_ != other.width_) {
        throw std::invalid_argument("BitString xor: width mismatch");
    }
    return BitString(width_, value_ ^ other.value_);
}

int dot(const BitString& x, const BitString& y) {
    if (x.width() != y.width()) {
        throw std::invalid_argument("dot: width mismatch (" + std::to_string(x.width()) + " vs " +
                                    std::to_string(y.width()) + ")");
    }
    return parity(x.value() & y.value());
}

} // namespace initfree
