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

#ifndef STRATA_CENSUS_HPP
#define STRATA_CENSUS_HPP

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "strata/prank.hpp"

namespace strata {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "strata-forge/1";

/* Per-curve invariants; p_rank equals the slope-0 length of np (checked at creation). */
struct CensusRecord {
    unsigned p = 0;
    unsigned n = 0;
    unsigned g = 0;
    std::vector<elem_t> f;
    std::vector<std::uint64_t> counts;
    LPolynomial L;
    unsigned p_rank = 0;
    NewtonPolygon np;
    NpClass cls = NpClass::other;
    BigInt picard_order;
};

/* Throws ConsistencyError when the two p-rank routes disagree. */
CensusRecord make_record(const HyperellipticCurve& c, const PointCounter& counter);

struct CensusMode {
    enum class Kind { exhaustive, sample };
    Kind kind = Kind::exhaustive;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static CensusMode exhaustive() { return {}; }
    static CensusMode sample(std::uint64_t n, std::uint64_t seed) { return {Kind::sample, n, seed}; }
    std::string describe() const;
};

inline constexpr std::uint64_t kDefaultCensusBudget = 10'000'000;

struct CensusOptions {
    unsigned workers = 1;
    /* Cap on q^{2g+1} (exhaustive) or on the sample count. */
    std::uint64_t budget = kDefaultCensusBudget;
    /* When set, records are read from / written to a JSON-lines file in this directory. */
    std::optional<std::filesystem::path> cache_dir;
};

using RecordSink = std::function<void(const CensusRecord&)>;

/*
 * Streams records over monic squarefree f of degree 2g+1: every such f once in enumeration
 * order (exhaustive), or `samples` draws where draw i depends only on (seed, i) and is
 * uniform over squarefree monic polynomials (rejection sampling). Output order never
 * depends on the worker count.
 */
void census_each(unsigned g, const Field& field, const CensusMode& mode, const CensusOptions& opts,
                 const RecordSink& sink);

std::vector<CensusRecord> census(unsigned g, const Field& field, const CensusMode& mode,
                                 const CensusOptions& opts = {});

/* census_p{p}_n{n}_g{g}.jsonl, with a _s{seed}_N{N} suffix in sample mode. */
std::string cache_file_name(unsigned p, unsigned n, unsigned g, const CensusMode& mode);

/* $STRATA_FORGE_CACHE when set, else ".strata-cache". */
std::filesystem::path default_cache_dir();

/* Integers below 2^53 in magnitude as numbers, larger ones as decimal strings. */
json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const json& j);

/* Field element as an integer (n = 1) or its coordinate list (n > 1). */
json element_to_json(const Field& F, elem_t a);
elem_t element_from_json(const Field& F, const json& j);

json polygon_to_json(const NewtonPolygon& np);
NewtonPolygon polygon_from_json(const json& j);

json record_to_json(const CensusRecord& r);
/* Recomputes nothing; validates shape and the two-route invariant. */
CensusRecord record_from_json(const json& j);

}  // namespace strata

#endif
