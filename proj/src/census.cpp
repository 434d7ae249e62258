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

#include "strata/census.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <mutex>
#include <thread>

#include "strata/error.hpp"
#include "strata/symplectic.hpp"

namespace strata {

namespace {

constexpr std::uint64_t kChunk = 2048;

NpClass class_from_string(const std::string& s) {
    if (s == "ordinary") return NpClass::ordinary;
    if (s == "supersingular") return NpClass::supersingular;
    if (s == "other") return NpClass::other;
    throw ValidationError("unknown Newton polygon class '" + s + "'");
}

/* Records for work items [begin, end) of the stream. */
std::vector<CensusRecord> run_chunk(unsigned g, const Field& F, const CensusMode& mode, const PointCounter& pc,
                                    std::uint64_t total, std::uint64_t begin, std::uint64_t end) {
    std::vector<CensusRecord> out;
    const std::size_t d = 2 * std::size_t{g} + 1;
    for (std::uint64_t i = begin; i < end; ++i) {
        if (mode.kind == CensusMode::Kind::exhaustive) {
            FqPoly f = monic_at(F, d, i);
            if (!squarefree(f)) continue;
            out.push_back(make_record(HyperellipticCurve(F, std::move(f)), pc));
        } else {
            std::mt19937_64 rng(substream_seed(mode.seed, i));
            std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
            for (;;) {
                FqPoly f = monic_at(F, d, pick(rng));
                if (!squarefree(f)) continue;
                out.push_back(make_record(HyperellipticCurve(F, std::move(f)), pc));
                break;
            }
        }
    }
    return out;
}

}  // namespace

CensusRecord make_record(const HyperellipticCurve& c, const PointCounter& counter) {
    const Field& F = c.field();
    CensusRecord r;
    r.p = F.p();
    r.n = F.n();
    r.g = c.genus();
    r.f = c.f().coeffs();
    auto all = counter.counts(c.f());
    if (all.size() < r.g) throw ValidationError("point counter does not reach the genus");
    r.counts.assign(all.begin(), all.begin() + r.g);
    r.L = l_polynomial_from_counts(F.q(), r.g, r.counts);
    r.np = newton_polygon(r.L, r.p, r.n);
    r.p_rank = p_rank(c);
    if (r.p_rank != slope_zero_length(r.np))
        throw ConsistencyError("Hasse-Witt p-rank disagrees with the Newton polygon");
    r.cls = classify(r.np);
    r.picard_order = r.L.at_one();
    return r;
}

std::string CensusMode::describe() const {
    if (kind == Kind::exhaustive) return "exhaustive";
    return "sample(" + std::to_string(samples) + ", " + std::to_string(seed) + ")";
}

std::string cache_file_name(unsigned p, unsigned n, unsigned g, const CensusMode& mode) {
    std::string s = "census_p" + std::to_string(p) + "_n" + std::to_string(n) + "_g" + std::to_string(g);
    if (mode.kind == CensusMode::Kind::sample)
        s += "_s" + std::to_string(mode.seed) + "_N" + std::to_string(mode.samples);
    return s + ".jsonl";
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("STRATA_FORGE_CACHE"); env && *env) return env;
    return ".strata-cache";
}

void census_each(unsigned g, const Field& field, const CensusMode& mode, const CensusOptions& opts,
                 const RecordSink& sink) {
    if (g < 1) throw ValidationError("census: g >= 1");
    const std::size_t d = 2 * std::size_t{g} + 1;
    const std::uint64_t total = monic_count(field, d);
    std::uint64_t items;
    if (mode.kind == CensusMode::Kind::exhaustive) {
        if (total > opts.budget)
            throw BudgetError("census: q^" + std::to_string(d) + " = " + std::to_string(total) + " exceeds the budget");
        items = total;
    } else {
        if (mode.samples > opts.budget) throw BudgetError("census: sample count exceeds the budget");
        items = mode.samples;
    }

    std::filesystem::path cache, tmp;
    std::ofstream out;
    if (opts.cache_dir) {
        cache = *opts.cache_dir / cache_file_name(field.p(), field.n(), g, mode);
        if (std::filesystem::exists(cache)) {
            std::ifstream in(cache);
            std::string line;
            while (std::getline(in, line))
                if (!line.empty()) sink(record_from_json(json::parse(line)));
            return;
        }
        std::filesystem::create_directories(*opts.cache_dir);
        tmp = cache;
        tmp += ".tmp";
        out.open(tmp);
        if (!out) throw ValidationError("census: cannot write " + tmp.string());
    }
    auto emit = [&](const std::vector<CensusRecord>& rs) {
        for (const auto& r : rs) {
            if (out.is_open()) out << record_to_json(r).dump() << '\n';
            sink(r);
        }
    };

    const PointCounter pc(field, g);
    const unsigned workers = std::max(1u, opts.workers);
    for (std::uint64_t start = 0; start < items; start += kChunk * workers) {
        std::vector<std::vector<CensusRecord>> parts(workers);
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex mu;
        auto job = [&](unsigned w) {
            const std::uint64_t b = start + w * kChunk;
            if (b >= items) return;
            try {
                parts[w] = run_chunk(g, field, mode, pc, total, b, std::min(items, b + kChunk));
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!failure) failure = std::current_exception();
            }
        };
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(job, w);
        job(0);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
        for (const auto& part : parts) emit(part);
    }
    if (out.is_open()) {
        out.close();
        std::filesystem::rename(tmp, cache);
    }
}

std::vector<CensusRecord> census(unsigned g, const Field& field, const CensusMode& mode, const CensusOptions& opts) {
    std::vector<CensusRecord> out;
    census_each(g, field, mode, opts, [&](const CensusRecord& r) { out.push_back(r); });
    return out;
}

json bigint_to_json(const BigInt& x) {
    static const BigInt limit = BigInt(1) << 53;
    if (abs(x) < limit) return json(x.get_si());
    return json(x.get_str());
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        BigInt x;
        if (x.set_str(j.get<std::string>(), 10) != 0) throw ValidationError("malformed integer string");
        return x;
    }
    throw ValidationError("expected an integer");
}

json element_to_json(const Field& F, elem_t a) {
    if (F.n() == 1) return json(a);
    json arr = json::array();
    for (elem_t c : F.coords(a)) arr.push_back(c);
    return arr;
}

elem_t element_from_json(const Field& F, const json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= F.q()) throw ValidationError("field element out of range");
        return static_cast<elem_t>(v);
    }
    if (j.is_array()) {
        if (j.size() > F.n()) throw ValidationError("too many coordinates for the field");
        std::vector<elem_t> c(F.n(), 0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            const long long v = j[i].get<long long>();
            if (v < 0 || v >= static_cast<long long>(F.p())) throw ValidationError("coordinate out of range");
            c[i] = static_cast<elem_t>(v);
        }
        return F.from_coords(c);
    }
    throw ValidationError("expected a field element");
}

json polygon_to_json(const NewtonPolygon& np) {
    json arr = json::array();
    for (const auto& s : np.segments) arr.push_back({s.slope.num(), s.slope.den(), s.length});
    return arr;
}

NewtonPolygon polygon_from_json(const json& j) {
    NewtonPolygon np;
    for (const auto& s : j) {
        if (!s.is_array() || s.size() != 3) throw ValidationError("polygon segment must be [num, den, len]");
        np.segments.push_back({Rational(s[0].get<long long>(), s[1].get<long long>()), s[2].get<unsigned>()});
    }
    return np;
}

json record_to_json(const CensusRecord& r) {
    const Field F = Field::make(r.p, r.n);
    json f = json::array();
    for (elem_t a : r.f) f.push_back(element_to_json(F, a));
    json L = json::array();
    for (const auto& a : r.L.a) L.push_back(bigint_to_json(a));
    return {{"p", r.p},
            {"n", r.n},
            {"modulus", F.modulus()},
            {"g", r.g},
            {"f", f},
            {"counts", r.counts},
            {"L", L},
            {"p_rank", r.p_rank},
            {"newton_polygon", polygon_to_json(r.np)},
            {"class", to_string(r.cls)},
            {"picard_order", bigint_to_json(r.picard_order)}};
}

CensusRecord record_from_json(const json& j) {
    try {
        CensusRecord r;
        r.p = j.at("p").get<unsigned>();
        r.n = j.at("n").get<unsigned>();
        r.g = j.at("g").get<unsigned>();
        const Field F = Field::make(r.p, r.n);
        if (j.contains("modulus") && j.at("modulus").get<std::vector<elem_t>>() != F.modulus())
            throw ValidationError("record modulus differs from the canonical modulus");
        for (const auto& a : j.at("f")) r.f.push_back(element_from_json(F, a));
        r.counts = j.at("counts").get<std::vector<std::uint64_t>>();
        r.L.q = F.q();
        r.L.g = r.g;
        for (const auto& a : j.at("L")) r.L.a.push_back(bigint_from_json(a));
        r.p_rank = j.at("p_rank").get<unsigned>();
        r.np = polygon_from_json(j.at("newton_polygon"));
        r.cls = class_from_string(j.at("class").get<std::string>());
        r.picard_order = bigint_from_json(j.at("picard_order"));
        if (r.L.a.size() != 2 * std::size_t{r.g} + 1) throw ValidationError("record L has the wrong length");
        if (r.p_rank != slope_zero_length(r.np))
            throw ConsistencyError("record p-rank disagrees with its Newton polygon");
        return r;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed census record: ") + e.what());
    }
}

}  // namespace strata
