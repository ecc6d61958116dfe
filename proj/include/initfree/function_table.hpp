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

#include <cstdint>
#include <filesystem>
#include <vector>

#include <json.hpp>

#include "initfree/bits.hpp"

namespace initfree {

/// Explicit black-box function from [0, 2^domain_bits) to [0, 2^codomain_bits).
///
/// JSON form: {"domain_bits": n, "codomain_bits": m, "values": [...]}.
class FunctionTable {
  public:
    FunctionTable(unsigned domain_bits, unsigned codomain_bits, std::vector<std::uint64_t> values);

    unsigned domain_bits() const noexcept { return domain_bits_; }
    unsigned codomain_bits() const noexcept { return codomain_bits_; }
    std::uint64_t domain_size() const noexcept { return pow2(domain_bits_); }
    const std::vector<std::uint64_t>& values() const noexcept { return values_; }

    std::uint64_t operator()(std::uint64_t x) const { return values_.at(x); }

    friend bool operator==(const FunctionTable&, const FunctionTable&) = default;

  private:
    unsigned domain_bits_;
    unsigned codomain_bits_;
    std::vector<std::uint64_t> values_;
};

void to_json(nlohmann::json& j, const FunctionTable& f);
FunctionTable function_table_from_json(const nlohmann::json& j);

FunctionTable load_function_table(const std::filesystem::path& path);
void save_function_table(const FunctionTable& f, const std::filesystem::path& path);

} // namespace initfree
