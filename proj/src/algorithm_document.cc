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

#include "qverify/algorithm_document.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qverify {

using nlohmann::json;

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

void append_reals(std::string &out, std::span<const double> values, std::size_t per_line, const char *indent) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); i++) {
        if (i > 0) {
            out += ',';
            if (per_line && i % per_line == 0) {
                out += '\n';
                out += indent;
            } else {
                out += ' ';
            }
        }
        out += format_real(values[i]);
    }
    out += ']';
}

void append_query(std::string &out, const QuerySpec &q) {
    out += '[';
    for (std::size_t i = 0; i < q.size(); i++) {
        if (i > 0) {
            out += ", ";
        }
        if (q[i].is_var()) {
            out += "{\"var\": " + std::to_string(q[i].var_index) + "}";
        } else {
            out += "{\"fixed\": true}";
        }
    }
    out += ']';
}

const json &field(const json &obj, const char *name) {
    if (!obj.is_object() || !obj.contains(name)) {
        throw DocumentError(std::string("missing field \"") + name + "\"");
    }
    return obj.at(name);
}

std::size_t read_count(const json &obj, const char *name) {
    const json &v = field(obj, name);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw DocumentError(std::string("field \"") + name + "\" must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::vector<double> read_reals(const json &obj, const char *name, std::size_t expected) {
    const json &v = field(obj, name);
    if (!v.is_array() || v.size() != expected) {
        throw DocumentError(
            std::string("field \"") + name + "\" must be an array of " + std::to_string(expected) + " numbers");
    }
    std::vector<double> out;
    out.reserve(expected);
    for (const auto &x : v) {
        if (!x.is_number()) {
            throw DocumentError(std::string("field \"") + name + "\" contains a non-number");
        }
        out.push_back(x.get<double>());
    }
    return out;
}

std::vector<std::uint8_t> read_bits(const json &obj, const char *name, std::size_t expected) {
    const json &v = field(obj, name);
    if (!v.is_array() || v.size() != expected) {
        throw DocumentError(
            std::string("field \"") + name + "\" must be an array of " + std::to_string(expected) + " bits");
    }
    std::vector<std::uint8_t> out;
    out.reserve(expected);
    for (const auto &x : v) {
        if (!x.is_number_integer() || (x.get<long long>() != 0 && x.get<long long>() != 1)) {
            throw DocumentError(std::string("field \"") + name + "\" entries must be 0 or 1");
        }
        out.push_back(static_cast<std::uint8_t>(x.get<int>()));
    }
    return out;
}

QuerySpec read_query(const json &stage, std::size_t dim) {
    const json &v = field(stage, "query_diagonal");
    if (!v.is_array() || v.size() != dim) {
        throw DocumentError("query_diagonal must have " + std::to_string(dim) + " entries");
    }
    std::vector<QueryEntry> entries;
    entries.reserve(dim);
    for (const auto &e : v) {
        if (e.is_object() && e.size() == 1 && e.contains("var")) {
            const json &k = e.at("var");
            if (!k.is_number_integer() || k.get<long long>() < 1) {
                throw DocumentError("query variable index must be an integer >= 1");
            }
            entries.push_back(QueryEntry::var(k.get<std::size_t>()));
        } else if (e.is_object() && e.size() == 1 && e.contains("fixed") && e.at("fixed") == true) {
            entries.push_back(QueryEntry::fixed());
        } else {
            throw DocumentError("query_diagonal entries must be {\"fixed\": true} or {\"var\": k}, got " + e.dump());
        }
    }
    return QuerySpec(std::move(entries));
}

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

std::string dump_algorithm(const QueryAlgorithm &alg) {
    std::size_t k = alg.dim();
    std::string out;
    out += "{\n";
    out += "  \"schema_version\": " + std::to_string(kSchemaVersion) + ",\n";
    out += "  \"n_vars\": " + std::to_string(alg.n_vars()) + ",\n";
    out += "  \"t_queries\": " + std::to_string(alg.t_queries()) + ",\n";
    out += "  \"dim\": " + std::to_string(k) + ",\n";
    out += "  \"start\": ";
    append_reals(out, alg.start().amplitudes(), 0, "");
    out += ",\n  \"stages\": [";
    for (std::size_t s = 0; s < alg.stages().size(); s++) {
        const auto &stage = alg.stages()[s];
        out += s ? ",\n    {\n" : "\n    {\n";
        out += "      \"unitary\": ";
        append_reals(out, stage.unitary.dense(), k, "                  ");
        out += ",\n      \"query_diagonal\": ";
        append_query(out, stage.query);
        out += "\n    }";
    }
    out += alg.stages().empty() ? "],\n" : "\n  ],\n";
    out += "  \"final_unitary\": ";
    append_reals(out, alg.final_unitary().dense(), k, "                    ");
    out += ",\n  \"labels\": [";
    for (std::size_t i = 0; i < k; i++) {
        out += i ? ", " : "";
        out += alg.labels()[i] ? '1' : '0';
    }
    out += "]\n}\n";
    return out;
}

QueryAlgorithm load_algorithm(std::string_view text) {
    json doc = parse(text);
    if (!doc.is_object()) {
        throw DocumentError("algorithm document must be a JSON object");
    }
    std::size_t version = read_count(doc, "schema_version");
    if (version != static_cast<std::size_t>(kSchemaVersion)) {
        throw DocumentError("unsupported schema_version " + std::to_string(version));
    }
    std::size_t n_vars = read_count(doc, "n_vars");
    std::size_t t = read_count(doc, "t_queries");
    std::size_t k = read_count(doc, "dim");
    if (k == 0 || k > kMaxDimension || !is_power_of_two(k)) {
        throw DocumentError("dim must be a power of two in [1, 65536]");
    }
    const json &stages_json = field(doc, "stages");
    if (!stages_json.is_array() || stages_json.size() != t) {
        throw DocumentError("stages must be an array of t_queries = " + std::to_string(t) + " entries");
    }
    std::vector<Stage> stages;
    stages.reserve(t);
    for (const auto &s : stages_json) {
        stages.push_back({SquareMatrix::from_dense(k, read_reals(s, "unitary", k * k)), read_query(s, k)});
    }
    auto final_unitary = SquareMatrix::from_dense(k, read_reals(doc, "final_unitary", k * k));
    try {
        return QueryAlgorithm(
            n_vars,
            StateVector(read_reals(doc, "start", k)),
            std::move(stages),
            std::move(final_unitary),
            read_bits(doc, "labels", k));
    } catch (const std::invalid_argument &e) {
        throw DocumentError(e.what());
    }
}

BooleanFunction load_function(std::string_view text) {
    json doc = parse(text);
    std::size_t arity = read_count(doc, "arity");
    if (arity < 1 || arity > kMaxExhaustiveArity) {
        throw DocumentError("arity must be in [1, " + std::to_string(kMaxExhaustiveArity) + "]");
    }
    try {
        return BooleanFunction::truth_table(arity, read_bits(doc, "table", std::size_t{1} << arity));
    } catch (const std::invalid_argument &e) {
        throw DocumentError(e.what());
    }
}

std::string dump_function(const BooleanFunction &f) {
    std::vector<int> table;
    std::uint64_t count = std::uint64_t{1} << f.arity();
    table.reserve(count);
    for (std::uint64_t w = 0; w < count; w++) {
        table.push_back(f.eval(BitString::from_word(w, f.arity())));
    }
    json doc{{"arity", f.arity()}, {"table", table}};
    return doc.dump() + "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << contents;
    if (!out) {
        throw std::runtime_error("failed writing " + path);
    }
}

}  // namespace qverify
