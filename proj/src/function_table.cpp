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

#include "initfree/function_table.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace initfree {

FunctionTable::FunctionTable(unsigned domain_bits, unsigned codomain_bits, std::vector<std::uint64_t> values)
    : domain_bits_(domain_bits), codomain_bits_(codomain_bits), values_(std::move(values)) {
    if (domain_bits > kMaxBits || codomain_bits > kMaxBits) {
        throw std::invalid_argument("FunctionTable: register too wide");
    }
    if (values_.size() != pow2(domain_bits)) {
        throw std::invalid_argument("FunctionTable: expected " + std::to_string(pow2(domain_bits)) +
                                    " values, got " + std::to_string(values_.size()));
    }
    for (std::size_t x = 0; x < values_.size(); ++x) {
        if (values_[x] >= pow2(codomain_bits)) {
            throw std::invalid_argument("FunctionTable: value f(" + std::to_string(x) + ") = " +
                                        std::to_string(values_[x]) + " does not fit in " +
                                        std::to_string(codomain_bits) + " bits");
        }
    }
}

void to_json(nlohmann::json& j, const FunctionTable& f) {
    j = nlohmann::json{{"domain_bits", f.domain_bits()},
                       {"codomain_bits", f.codomain_bits()},
                       {"values", f.values()}};
}

FunctionTable function_table_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("function table: expected a JSON object");
    for (const char* key : {"domain_bits", "codomain_bits", "values"}) {
        if (!j.contains(key)) throw std::invalid_argument(std::string("function table: missing \"") + key + "\"");
    }
    try {
        return FunctionTable(j.at("domain_bits").get<unsigned>(), j.at("codomain_bits").get<unsigned>(),
                             j.at("values").get<std::vector<std::uint64_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("function table: ") + e.what());
    }
}

FunctionTable load_function_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open function file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("function file " + path.string() + ": " + e.what());
    }
    return function_table_from_json(j);
}

void save_function_table(const FunctionTable& f, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << nlohmann::json(f).dump(2) << '\n';
}

} // namespace initfree
