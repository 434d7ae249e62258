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

#ifndef STRATA_EXPERIMENTS_HPP
#define STRATA_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strata/census.hpp"
#include "strata/galois.hpp"
#include "strata/symplectic.hpp"

namespace strata {

/* Anything that can replay a stream of census records into a sink. */
using RecordSource = std::function<void(const RecordSink&)>;

RecordSource census_source(unsigned g, const Field& field, const CensusMode& mode, const CensusOptions& opts = {});
RecordSource vector_source(const std::vector<CensusRecord>& records);

/* One checked comparison. Criteria with asserted = false are reported only. */
struct Criterion {
    std::string name;
    double observed = 0;
    std::optional<double> baseline;
    std::string baseline_source;
    std::optional<double> tolerance;
    std::string comparison;
    bool asserted = true;
    bool pass = false;
};

struct ExperimentReport {
    std::string id;
    json parameters = json::object();
    json sample_sizes = json::object();
    json statistics = json::object();
    std::vector<Criterion> criteria;
    std::uint64_t seed = 0;
    double runtime_seconds = 0;
    std::vector<std::string> notes;
    json witness;

    /* Every asserted criterion passes. */
    bool passed() const;
    json to_json() const;
    static ExperimentReport from_json(const json& j);
    /* Human-readable summary, one criterion per line. */
    std::string render() const;
};

struct RatioCheck {
    unsigned f = 0;
    std::optional<double> ratio;
    double low = 0;
    double high = 0;
    bool pass = false;
};

struct PRankDistribution {
    std::uint64_t q = 0;
    std::vector<std::uint64_t> counts;
    std::uint64_t total = 0;
    /* ratio count(f-1)/count(f) for f = 1..g against [1/(c q), c/q] */
    std::vector<RatioCheck> ratios;
    bool all_nonempty = false;
};

/* Throws ValidationError on an empty census. */
PRankDistribution prank_distribution(const std::vector<std::uint64_t>& counts_by_rank, std::uint64_t q,
                                     double c = 5);

ExperimentReport distribution_experiment(unsigned g, const Field& field, const RecordSource& source,
                                         double c = 5);

struct WitnessOptions {
    /* Fields with q^{2g+1} above this use sample mode. */
    std::uint64_t exhaustive_limit = 1'000'000;
    std::uint64_t samples = 100'000;
    std::uint64_t seed = 1;
    CensusOptions census;
};

/* First record with p-rank 0 whose polygon is not supersingular, searching the fields in order. */
ExperimentReport not_supersingular_witness(unsigned g, const std::vector<Field>& fields,
                                           const WitnessOptions& opts = {});

struct BaselineOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    std::uint64_t samples = 200'000;
    std::uint64_t seed = 1;
};

struct ClassGroupOptions {
    /* Default max(0.08, 3 / sqrt(q * stratum)). */
    std::optional<double> tolerance;
    BaselineOptions baseline;
};

ExperimentReport class_group_experiment(unsigned g, unsigned f, const Field& field, unsigned l,
                                        const RecordSource& source, const ClassGroupOptions& opts = {});

ExperimentReport splitting_field_experiment(unsigned g, unsigned f, const Field& field, const RecordSource& source);

ExperimentReport absolutely_simple_search(unsigned g, unsigned f, const Field& field, const RecordSource& source);

struct ChebotarevOptions {
    double tolerance = 0.10;
    /* Below this stratum size (or for sampled censuses) the distance is reported, not asserted. */
    std::uint64_t min_stratum = 500;
    bool exhaustive = true;
    BaselineOptions baseline;
};

ExperimentReport chebotarev_experiment(unsigned g, unsigned f, const Field& field, unsigned l,
                                       const RecordSource& source, const ChebotarevOptions& opts = {});

/* Total-variation distance between two count tables (each normalised to 1). */
double total_variation(const std::map<ModlPoly, std::uint64_t>& a, const std::map<ModlPoly, std::uint64_t>& b);

}  // namespace strata

#endif
