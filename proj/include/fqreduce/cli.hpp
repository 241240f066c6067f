/*
   Copyright 2026 The fqreduce Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FQREDUCE_CLI_HPP
#define FQREDUCE_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqreduce/gf.hpp"
#include "fqreduce/poly.hpp"
#include "fqreduce/table.hpp"

namespace fqr::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 1,
    kNoFreeMatrix = 2,
    kVerificationFailure = 3,
    kResourceLimit = 4,
};

enum class FileMode { affine, projective, table };

/**
 * Parsed system description.
 *
 *     field <literal>
 *     mode affine|projective|table
 *     vars x y ...          (affine, projective)
 *     poly <expression>     (one per line)
 *     points p1 p2 ...      (table)
 *     row v1 v2 ...         (one per line)
 *
 * '#' starts a comment; blank lines are ignored.
 */
struct SystemFile {
    FieldSpec field;
    FileMode mode;
    std::vector<std::string> vars;
    std::vector<std::string> poly_sources;
    std::vector<MultiPoly> polys;
    std::vector<std::string> points;
    std::vector<Row> rows;
};

/// Throws ParseError with 1-based line and column.
SystemFile parse_system_file(std::string_view content);

struct ReduceFlags {
    bool verify = false;
    bool strict = false;
    std::optional<std::size_t> target;
    unsigned jobs = 1;
};

struct WitnessFlags {
    bool exhaustive = false;
    std::optional<std::uint64_t> limit;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

struct LemmaFlags {
    bool list = false;
};

/// Reduces the system in `content`. Errors go to `err`; the return value is the exit code.
int run_reduce(std::string_view content, const ReduceFlags& flags, std::ostream& out, std::ostream& err);
/// Reads `path` and calls run_reduce.
int cmd_reduce(const std::string& path, const ReduceFlags& flags, std::ostream& out, std::ostream& err);
int cmd_witness(std::string_view field, std::size_t n, const WitnessFlags& flags, std::ostream& out, std::ostream& err);
int cmd_lemma(std::string_view field, std::size_t n, const LemmaFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace fqr::cli

#endif  // FQREDUCE_CLI_HPP
