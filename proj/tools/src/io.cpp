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

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tripleunc/error.hpp"

namespace tripleunc::cli {

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &what) {
    throw InputError(field + ": " + what);
}

const Json &require(const Json &doc, const std::string &field, const char *key) {
    if (!doc.is_object()) fail(field, "expected an object");
    auto it = doc.find(key);
    if (it == doc.end()) fail(field, std::string("missing field '") + key + "'");
    return *it;
}

double number_at(const Json &v, const std::string &field) {
    if (!v.is_number()) fail(field, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(field, "non-finite number");
    return x;
}

Complex complex_at(const Json &v, const std::string &field) {
    if (!v.is_array() || v.size() != 2) fail(field, "expected [re, im]");
    return {number_at(v[0], field + "[0]"), number_at(v[1], field + "[1]")};
}

std::size_t size_at(const Json &v, const std::string &field) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1) fail(field, "expected a positive integer");
    return static_cast<std::size_t>(v.get<std::int64_t>());
}

std::string kind_of(const Json &doc, const std::string &field) {
    const Json &k = require(doc, field, "kind");
    if (!k.is_string()) fail(field + ".kind", "expected a string");
    return k.get<std::string>();
}

void expect_kind(const Json &doc, const std::string &field, std::string_view want) {
    const auto k = kind_of(doc, field);
    if (k != want) fail(field + ".kind", "expected \"" + std::string(want) + "\", got \"" + k + "\"");
}

std::vector<Complex> vector_at(const Json &v, std::size_t dim, const std::string &field) {
    if (!v.is_array() || v.size() != dim) fail(field, "expected " + std::to_string(dim) + " complex numbers");
    std::vector<Complex> out;
    out.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) out.push_back(complex_at(v[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

ComplexMatrix rows_at(const Json &v, std::size_t dim, const std::string &field) {
    if (!v.is_array() || v.size() != dim) fail(field, "expected " + std::to_string(dim) + " rows");
    std::vector<Complex> flat;
    flat.reserve(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        auto row = vector_at(v[r], dim, field + "[" + std::to_string(r) + "]");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix::from_row_major(dim, std::move(flat));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json rows_to_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

void dump_into(std::string &out, const Json &v, int indent, int depth) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out.push_back('\n');
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    // Arrays of scalars stay on one line to keep [re, im] pairs readable.
    const auto flat_array = [](const Json &a) {
        for (const auto &e : a) {
            if (e.is_structured()) return false;
        }
        return true;
    };
    switch (v.type()) {
        case Json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out.push_back('{');
            bool first = true;
            for (const auto &[k, e] : v.items()) {
                if (!first) out.push_back(',');
                first = false;
                newline(depth + 1);
                out += Json(k).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(out, e, indent, depth + 1);
            }
            newline(depth);
            out.push_back('}');
            return;
        }
        case Json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            const bool flat = flat_array(v);
            out.push_back('[');
            bool first = true;
            for (const auto &e : v) {
                if (!first) out += flat && indent >= 0 ? ", " : ",";
                first = false;
                if (!flat) newline(depth + 1);
                dump_into(out, e, indent, depth + 1);
            }
            if (!flat) newline(depth);
            out.push_back(']');
            return;
        }
        case Json::value_t::number_float: {
            const double x = v.get<double>();
            if (!std::isfinite(x)) throw Error(ErrorCode::NonFinite, "cannot serialize a non-finite number");
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", x);
            out += buf;
            // Keep floats recognizable as floats on re-read.
            if (std::string_view(buf).find_first_of(".eE") == std::string_view::npos) out += ".0";
            return;
        }
        default:
            out += v.dump();
    }
}

}  // namespace

Json parse_document(std::string_view text, std::string_view origin) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string what = e.what();
        // Drop nlohmann's "[json.exception.parse_error.101] parse error at ...:" preamble.
        if (auto pos = what.rfind(": "); pos != std::string::npos) what = what.substr(pos + 2);
        throw InputError(std::string(origin) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                         ": syntax error: " + what);
    }
}

Json read_document(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string() + ": cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_document(ss.str(), path.string());
}

std::string dump(const Json &doc, int indent) {
    std::string out;
    dump_into(out, doc, indent, 0);
    out.push_back('\n');
    return out;
}

void emit(const std::string &text, const std::optional<std::filesystem::path> &path) {
    if (!path) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw InputError(path->string() + ": cannot open for writing");
    out << text;
    if (!out) throw InputError(path->string() + ": write failed");
}

Json matrix_to_json(const ComplexMatrix &m) {
    return Json{{"dim", m.dim()}, {"kind", "matrix"}, {"entries", rows_to_json(m)}};
}

Json state_to_json(const QuantumState &s) {
    if (s.is_pure()) {
        Json amps = Json::array();
        for (const auto &z : s.amplitudes()) amps.push_back(complex_to_json(z));
        return Json{{"dim", s.dim()}, {"kind", "pure"}, {"entries", std::move(amps)}};
    }
    return Json{{"dim", s.dim()}, {"kind", "mixed"}, {"entries", rows_to_json(s.density())}};
}

Json triple_to_json(const ObservableTriple &t) {
    Json ms = Json::array();
    for (const auto &h : t.members()) ms.push_back(rows_to_json(h.matrix()));
    return Json{{"dim", t.dim()}, {"kind", "triple"}, {"entries", std::move(ms)}};
}

Json floor_to_json(const FloorEstimate &f) {
    Json doc{{"kind", "floor"},
             {"c", f.c},
             {"restarts", f.restarts},
             {"converged", f.converged},
             {"fingerprint", fingerprint_hex(f.fingerprint)},
             {"argmin_mu", state_to_json(f.argmin_mu)},
             {"argmin_nu", state_to_json(f.argmin_nu)}};
    doc["grid_value"] = f.grid_value ? Json(*f.grid_value) : Json(nullptr);
    return doc;
}

ComplexMatrix matrix_from_json(const Json &doc, const std::string &field) {
    expect_kind(doc, field, "matrix");
    const std::size_t dim = size_at(require(doc, field, "dim"), field + ".dim");
    return rows_at(require(doc, field, "entries"), dim, field + ".entries");
}

QuantumState state_from_json(const Json &doc, const std::string &field) {
    const auto kind = kind_of(doc, field);
    const std::size_t dim = size_at(require(doc, field, "dim"), field + ".dim");
    const Json &entries = require(doc, field, "entries");
    try {
        if (kind == "pure") return QuantumState::pure(vector_at(entries, dim, field + ".entries"));
        if (kind == "mixed") return QuantumState::mixed(rows_at(entries, dim, field + ".entries"));
    } catch (const Error &e) {
        fail(field, e.what());
    }
    fail(field + ".kind", "expected \"pure\" or \"mixed\", got \"" + kind + "\"");
}

ObservableTriple triple_from_json(const Json &doc, const std::string &field) {
    expect_kind(doc, field, "triple");
    const std::size_t dim = size_at(require(doc, field, "dim"), field + ".dim");
    const Json &entries = require(doc, field, "entries");
    if (!entries.is_array() || entries.size() != 3) fail(field + ".entries", "expected three matrices");
    std::vector<Observable> hs;
    for (std::size_t j = 0; j < 3; ++j) {
        const std::string f = field + ".entries[" + std::to_string(j) + "]";
        try {
            hs.emplace_back(rows_at(entries[j], dim, f));
        } catch (const Error &e) {
            fail(f, e.what());
        }
    }
    return ObservableTriple(hs[0], hs[1], hs[2]);
}

FloorEstimate floor_from_json(const Json &doc, const std::string &field) {
    expect_kind(doc, field, "floor");
    const Json &fp = require(doc, field, "fingerprint");
    if (!fp.is_string()) fail(field + ".fingerprint", "expected a hex string");
    std::uint64_t fingerprint = 0;
    try {
        std::size_t used = 0;
        fingerprint = std::stoull(fp.get<std::string>(), &used, 16);
        if (used != fp.get<std::string>().size()) throw std::invalid_argument("trailing");
    } catch (const std::exception &) {
        fail(field + ".fingerprint", "expected a hex string");
    }
    const Json &restarts = require(doc, field, "restarts");
    if (!restarts.is_number_integer()) fail(field + ".restarts", "expected an integer");
    const Json &converged = require(doc, field, "converged");
    if (!converged.is_boolean()) fail(field + ".converged", "expected a boolean");
    std::optional<double> grid;
    if (auto it = doc.find("grid_value"); it != doc.end() && !it->is_null()) {
        grid = number_at(*it, field + ".grid_value");
    }
    return FloorEstimate{number_at(require(doc, field, "c"), field + ".c"),
                         state_from_json(require(doc, field, "argmin_mu"), field + ".argmin_mu"),
                         state_from_json(require(doc, field, "argmin_nu"), field + ".argmin_nu"),
                         restarts.get<int>(),
                         converged.get<bool>(),
                         fingerprint,
                         grid};
}

namespace {

template <typename F>
auto load(const std::filesystem::path &path, F &&from_json) {
    const Json doc = read_document(path);
    try {
        return from_json(doc, "$");
    } catch (const InputError &e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

}  // namespace

ObservableTriple load_triple(const std::filesystem::path &path) { return load(path, triple_from_json); }

QuantumState load_state(const std::filesystem::path &path) { return load(path, state_from_json); }

FloorEstimate load_floor(const std::filesystem::path &path) { return load(path, floor_from_json); }

std::string fingerprint_hex(std::uint64_t fp) {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, fp);
    return buf;
}

}  // namespace tripleunc::cli
