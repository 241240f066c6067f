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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "fqreduce/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Reduce systems of functions over finite fields to n scalar combinations with the same zero set"};
    app.require_subcommand(1);

    fqr::cli::ReduceFlags reduce_flags;
    std::string input;
    std::size_t target = 0;
    auto* reduce = app.add_subcommand("reduce", "Reduce the system described in a file");
    reduce->add_option("input", input, "System file")->required();
    reduce->add_flag("--verify", reduce_flags.verify, "Certify the result with the brute-force oracle");
    reduce->add_flag("--strict", reduce_flags.strict, "Refuse inputs exceeding the cardinality bound");
    auto* target_opt = reduce->add_option("--target", target, "Number of output functions")->check(CLI::PositiveNumber);
    reduce->add_option("--jobs", reduce_flags.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string field;
    std::size_t n = 0;
    fqr::cli::WitnessFlags witness_flags;
    std::uint64_t limit = 0;
    auto* witness = app.add_subcommand("witness", "Verify that the extremal instance X_n admits no reduction");
    witness->add_option("--field", field, "Field literal, e.g. 3 or \"2^2 modulus {1,1,1}\"")->required();
    witness->add_option("--n", n, "Projective dimension")->required()->check(CLI::PositiveNumber);
    witness->add_flag("--exhaustive", witness_flags.exhaustive, "Sweep every n x (n+1) matrix");
    auto* limit_opt = witness->add_option("--limit", limit, "Exhaustive cap, or number of random matrices");
    witness->add_option("--seed", witness_flags.seed, "Seed for random matrices");
    witness->add_option("--jobs", witness_flags.jobs, "Worker threads")->check(CLI::PositiveNumber);

    fqr::cli::LemmaFlags lemma_flags;
    auto* lemma = app.add_subcommand("lemma", "Self-test the point <-> RREF matrix bijection");
    lemma->add_option("--field", field, "Field literal")->required();
    lemma->add_option("--n", n, "Projective dimension")->required()->check(CLI::PositiveNumber);
    lemma->add_flag("--list", lemma_flags.list, "List every matrix with its point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : fqr::cli::kParseError;
    }

    if (*reduce) {
        if (*target_opt) reduce_flags.target = target;
        return fqr::cli::cmd_reduce(input, reduce_flags, std::cout, std::cerr);
    }
    if (*witness) {
        if (*limit_opt) witness_flags.limit = limit;
        return fqr::cli::cmd_witness(field, n, witness_flags, std::cout, std::cerr);
    }
    return fqr::cli::cmd_lemma(field, n, lemma_flags, std::cout, std::cerr);
}
