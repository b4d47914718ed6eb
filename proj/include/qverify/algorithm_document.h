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

#ifndef QVERIFY_ALGORITHM_DOCUMENT_H
#define QVERIFY_ALGORITHM_DOCUMENT_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "qverify/boolean_oracle.h"
#include "qverify/query_model.h"

namespace qverify {

inline constexpr int kSchemaVersion = 1;

/// Raised for malformed or structurally invalid documents.
struct DocumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Serializes an algorithm as a schema_version 1 JSON document.
///
///     {
///       "schema_version": 1,
///       "n_vars": N, "t_queries": T, "dim": K,
///       "start": [K reals],
///       "stages": [{"unitary": [K*K reals, row-major],
///                   "query_diagonal": [{"fixed": true} | {"var": k}, ...]}, ...],
///       "final_unitary": [K*K reals, row-major],
///       "labels": [K bits]
///     }
///
/// Variable indices are 1-based (x1 is {"var": 1}). Reals are printed with 17
/// significant digits so that loading reproduces every double bit for bit.
std::string dump_algorithm(const QueryAlgorithm &alg);

/// Parses and validates a document. Throws DocumentError.
QueryAlgorithm load_algorithm(std::string_view json);

/// Truth-table function document: {"arity": N, "table": [2^N bits]}, entry w
/// holding f of the input whose bits x1..xN spell w in binary (x1 most
/// significant). Throws DocumentError.
BooleanFunction load_function(std::string_view json);
std::string dump_function(const BooleanFunction &f);

/// "%.17g".
std::string format_real(double value);

std::string read_file(const std::string &path);
void write_file(const std::string &path, std::string_view contents);

}  // namespace qverify

#endif
