// Copyright 2026 The tripleunc Authors
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

#include "tripleunc_cli/io.hpp"

#include <gtest/gtest.h>

#include <cstring>

#include "tripleunc/error.hpp"
#include "tripleunc/sampling.hpp"

using namespace tripleunc;
using namespace tripleunc::cli;

namespace {

std::string message_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const InputError &e) {
        return e.what();
    }
    ADD_FAILURE() << "no InputError raised";
    return {};
}

bool same_bits(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) return false;
    return std::memcmp(a.entries().data(), b.entries().data(), a.entries().size_bytes()) == 0;
}

}  // namespace

TEST(dump, seventeen_significant_digits) {
    EXPECT_EQ(dump(Json(0.1), -1), "0.10000000000000001\n");
    EXPECT_EQ(dump(Json(2.0), -1), "2.0\n");
    EXPECT_EQ(dump(Json(1.0 / 3.0), -1), "0.33333333333333331\n");
    EXPECT_EQ(dump(Json(-1e-300), -1), "-1e-300\n");
    EXPECT_EQ(dump(Json{{"a", 1}, {"b", "x"}}, -1), "{\"a\":1,\"b\":\"x\"}\n");
    EXPECT_THROW(dump(Json(std::nan(""))), Error);
}

TEST(documents, bit_exact_round_trip) {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const std::size_t d = 1 + s % 5;
        const auto t = random_hermitian_triple(SampleConfig{s, d, {}, 1.0});
        const auto back = triple_from_json(parse_document(dump(triple_to_json(t)), "mem"), "$");
        for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(same_bits(t[j].matrix(), back[j].matrix()));

        const auto rho = ginibre_density(SampleConfig{s, d, {}, 1.0});
        const auto rho2 = state_from_json(parse_document(dump(state_to_json(rho)), "mem"), "$");
        EXPECT_FALSE(rho2.is_pure());
        EXPECT_TRUE(same_bits(rho.density(), rho2.density()));

        const auto psi = haar_pure(SampleConfig{s, d, {}, 1.0});
        const auto psi2 = state_from_json(parse_document(dump(state_to_json(psi)), "mem"), "$");
        ASSERT_TRUE(psi2.is_pure());
        EXPECT_TRUE(std::equal(psi.amplitudes().begin(), psi.amplitudes().end(), psi2.amplitudes().begin()));
    }
    const ComplexMatrix m{{1.0, Complex(0.0, -1.0 / 3.0)}, {Complex(0.0, 1.0 / 3.0), 2.0}};
    EXPECT_TRUE(same_bits(m, matrix_from_json(parse_document(dump(matrix_to_json(m)), "mem"), "$")));
}

TEST(documents, floor_round_trip) {
    const FloorEstimate f{0.125, QuantumState::basis(3, 1), QuantumState::basis(2, 0), 7, true, 0xdeadbeef01ULL, 0.5};
    const auto back = floor_from_json(parse_document(dump(floor_to_json(f)), "mem"), "$");
    EXPECT_EQ(back.c, f.c);
    EXPECT_EQ(back.restarts, 7);
    EXPECT_TRUE(back.converged);
    EXPECT_EQ(back.fingerprint, f.fingerprint);
    ASSERT_TRUE(back.grid_value.has_value());
    EXPECT_EQ(*back.grid_value, 0.5);
    EXPECT_EQ(back.argmin_mu.dim(), 3u);
    EXPECT_EQ(fingerprint_hex(0xdeadbeef01ULL), "000000deadbeef01");
}

TEST(diagnostics, syntax_errors_report_line_and_column) {
    const auto msg = message_of([] { parse_document("{\n  \"dim\": 2,\n  \"kind\" \"pure\"\n}", "f.json"); });
    EXPECT_EQ(msg.rfind("f.json:3:", 0), 0u) << msg;
}

TEST(diagnostics, schema_errors_name_the_field) {
    EXPECT_NE(message_of([] {
                  state_from_json(Json::parse(R"({"dim": 2, "kind": "pure", "entries": [[1, 0], [0, "x"]]})"), "$");
              }).find("$.entries[1][1]"),
              std::string::npos);
    EXPECT_NE(message_of([] { state_from_json(Json::parse(R"({"dim": 2, "kind": "pure"})"), "$"); })
                  .find("missing field 'entries'"),
              std::string::npos);
    EXPECT_NE(message_of([] {
                  state_from_json(Json::parse(R"({"dim": 0, "kind": "pure", "entries": []})"), "$");
              }).find("$.dim"),
              std::string::npos);
    EXPECT_NE(message_of([] {
                  state_from_json(Json::parse(R"({"dim": 2, "kind": "pure", "entries": [[1, 0], [1, 0]]})"), "$");
              }).find("InvalidState"),
              std::string::npos);
    EXPECT_NE(message_of([] {
                  triple_from_json(Json::parse(R"({"dim": 1, "kind": "triple", "entries": [[[[1, 0]]]]})"), "$");
              }).find("three matrices"),
              std::string::npos);
    EXPECT_NE(message_of([] {
                  matrix_from_json(Json::parse(R"({"dim": 1, "kind": "pure", "entries": [[[1, 0]]]})"), "$");
              }).find("$.kind"),
              std::string::npos);
    EXPECT_NE(message_of([] {
                  matrix_from_json(Json::parse(R"({"dim": 2, "kind": "matrix", "entries": [[[1, 0]]]})"), "$");
              }).find("expected 2 rows"),
              std::string::npos);
}
