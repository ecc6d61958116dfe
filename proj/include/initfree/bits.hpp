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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace initfree {

/// Largest register width supported anywhere in the library.
inline constexpr unsigned kMaxBits = 30;

/// Fixed-width binary word. Element of (Z_2^n, xor) or an index into Z_N.
///
/// Textual form is most-significant bit first, so "110" has value 6 and
/// bit x_0 is the least significant bit. The bilinear form is symmetric in
/// the bit order so the convention only matters for printing.
class BitString {
  public:
    BitString() = default;
    BitString(unsigned width, std::uint64_t value);

    /// Parses a string of '0'/'1' characters. Throws on anything else.
    static BitString parse(std::string_view bits);

    unsigned width() const noexcept { return width_; }
    std::uint64_t value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }
    bool bit(unsigned i) const noexcept { return (value_ >> i) & 1U; }

    std::string to_string() const;

    BitString operator^(const BitString& other) const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend auto operator<=>(const BitString&, const BitString&) = default;

  private:
    unsigned width_ = 0;
    std::uint64_t value_ = 0;
};

inline int parity(std::uint64_t v) noexcept { return std::popcount(v) & 1; }

/// x.y = x_0 y_0 xor ... xor x_{n-1} y_{n-1}. Throws on width mismatch.
int dot(const BitString& x, const BitString& y);

/// Same form on raw words; callers guarantee matching widths.
inline int dot(std::uint64_t x, std::uint64_t y) noexcept { return parity(x & y); }

inline std::uint64_t pow2(unsigned bits) noexcept { return std::uint64_t{1} << bits; }

} // namespace initfree
