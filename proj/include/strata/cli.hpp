/*
   Copyright 2026 The strata-forge Authors

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

#ifndef STRATA_CLI_HPP
#define STRATA_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strata/census.hpp"
#include "strata/clutching.hpp"

namespace strata {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum ExitCode : int { kExitOk = 0, kExitValidation = 1, kExitBudget = 2, kExitFailed = 3 };

/* Resolved settings of one invocation; embedded in every emitted report. */
struct RunConfig {
    std::string command;
    unsigned p = 0;
    unsigned n = 1;
    unsigned g = 1;
    unsigned f = 0;
    unsigned l = 3;
    std::string experiment;
    std::optional<std::uint64_t> samples;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 1;
    std::uint64_t budget = kDefaultCensusBudget;
    std::uint64_t enumeration_cap = 10'000'000;
    std::uint64_t baseline_samples = 200'000;
    std::optional<std::string> cache_dir;
    bool use_cache = true;
    std::optional<std::string> output;
    std::optional<double> tolerance;
    double band = 5;
    std::vector<std::uint64_t> q_list;

    json to_json() const;
    static RunConfig from_json(const json& j);
};

/* Comma-separated coefficients, constant term first. Elements are integers (reduced mod p
   when n = 1, packed indices when n > 1) or coordinate tokens "c0:c1:...". */
std::vector<elem_t> parse_coefficients(const Field& F, const std::string& text);

/* "single:G", "path:g1,g2,...", "star:C;l1,l2,...", or "tree:g0,g1,...;a-b,c-d,...". */
ClutchingTree parse_tree(const std::string& text);
std::string format_tree(const ClutchingTree& t);

/* q = p^n with p prime; throws ValidationError otherwise. */
Field field_from_order(std::uint64_t q);

/* Arguments exclude the program name. Returns an ExitCode. */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace strata

#endif
