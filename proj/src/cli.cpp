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

#include "strata/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "strata/error.hpp"
#include "strata/experiments.hpp"
#include "strata/symplectic.hpp"

namespace strata {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

long long parse_int(const std::string& raw, const char* what) {
    const std::string s = trim(raw);
    long long v = 0;
    const char* first = s.data();
    if (!s.empty() && s[0] == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw ValidationError(std::string("bad ") + what + " '" + raw + "'");
    return v;
}

unsigned parse_unsigned(const std::string& s, const char* what) {
    const long long v = parse_int(s, what);
    if (v < 0 || v > 0xffffffffLL) throw ValidationError(std::string("bad ") + what + " '" + s + "'");
    return static_cast<unsigned>(v);
}

std::vector<unsigned> parse_list(const std::string& s, const char* what) {
    std::vector<unsigned> out;
    for (const auto& t : split(s, ',')) out.push_back(parse_unsigned(t, what));
    if (out.empty()) throw ValidationError(std::string("empty ") + what);
    return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
    return s;
}

template <typename T>
std::string join_numbers(const std::vector<T>& xs) {
    std::vector<std::string> s;
    for (const auto& x : xs) {
        std::ostringstream o;
        o << x;
        s.push_back(o.str());
    }
    return join(s, ",");
}

std::string format_element(const Field& F, elem_t a) {
    if (F.n() == 1) return std::to_string(a);
    std::vector<std::string> c;
    for (elem_t x : F.coords(a)) c.push_back(std::to_string(x));
    return join(c, ":");
}

std::string format_coefficients(const Field& F, const std::vector<elem_t>& f) {
    std::vector<std::string> s;
    for (elem_t a : f) s.push_back(format_element(F, a));
    return join(s, ",");
}

std::string format_polygon(const NewtonPolygon& np) {
    std::vector<std::string> s;
    for (const auto& seg : np.segments) {
        std::string slope = std::to_string(seg.slope.num());
        if (seg.slope.den() != 1) slope += "/" + std::to_string(seg.slope.den());
        s.push_back(slope + " x" + std::to_string(seg.length));
    }
    return join(s, ", ");
}

std::string format_labeling(const PRankLabeling& l) { return join_numbers(l); }

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << text;
    if (!out) throw ValidationError("failed writing " + path);
}

CensusOptions census_options(const RunConfig& cfg) {
    CensusOptions o;
    o.workers = cfg.workers;
    o.budget = cfg.budget;
    if (cfg.use_cache) o.cache_dir = cfg.cache_dir ? std::filesystem::path(*cfg.cache_dir) : default_cache_dir();
    return o;
}

CensusMode census_mode(const RunConfig& cfg) {
    return cfg.samples ? CensusMode::sample(*cfg.samples, cfg.seed) : CensusMode::exhaustive();
}

HyperellipticCurve curve_from(const RunConfig& cfg, const std::string& coeffs) {
    const Field F = Field::make(cfg.p, cfg.n);
    return HyperellipticCurve(F, FqPoly(F, parse_coefficients(F, coeffs)));
}

ExperimentReport run_experiment(const RunConfig& cfg) {
    const auto opts = census_options(cfg);
    if (cfg.experiment == "notss") {
        WitnessOptions w;
        w.samples = cfg.samples.value_or(100'000);
        w.seed = cfg.seed;
        w.census = opts;
        std::vector<Field> fields;
        for (auto q : cfg.q_list) fields.push_back(field_from_order(q));
        return not_supersingular_witness(cfg.g, fields, w);
    }
    const Field F = Field::make(cfg.p, cfg.n);
    const RecordSource source = census_source(cfg.g, F, census_mode(cfg), opts);
    BaselineOptions base{cfg.enumeration_cap, cfg.baseline_samples, cfg.seed};
    if (cfg.experiment == "distribution") return distribution_experiment(cfg.g, F, source, cfg.band);
    if (cfg.experiment == "class-group") return class_group_experiment(cfg.g, cfg.f, F, cfg.l, source, {cfg.tolerance, base});
    if (cfg.experiment == "splitting") return splitting_field_experiment(cfg.g, cfg.f, F, source);
    if (cfg.experiment == "simple") return absolutely_simple_search(cfg.g, cfg.f, F, source);
    if (cfg.experiment == "chebotarev") {
        ChebotarevOptions c;
        if (cfg.tolerance) c.tolerance = *cfg.tolerance;
        c.exhaustive = !cfg.samples;
        c.baseline = base;
        return chebotarev_experiment(cfg.g, cfg.f, F, cfg.l, source, c);
    }
    throw ValidationError("unknown experiment '" + cfg.experiment + "'");
}

}  // namespace

json RunConfig::to_json() const {
    json j = {{"schema", kSchemaVersion},
              {"command", command},
              {"p", p},
              {"n", n},
              {"g", g},
              {"f", f},
              {"l", l},
              {"experiment", experiment},
              {"samples", samples ? json(*samples) : json(nullptr)},
              {"seed", seed},
              {"workers", workers},
              {"budget", budget},
              {"enumeration_cap", enumeration_cap},
              {"baseline_samples", baseline_samples},
              {"cache_dir", cache_dir ? json(*cache_dir) : json(nullptr)},
              {"use_cache", use_cache},
              {"output", output ? json(*output) : json(nullptr)},
              {"tolerance", tolerance ? json(*tolerance) : json(nullptr)},
              {"band", band},
              {"q_list", q_list}};
    return j;
}

RunConfig RunConfig::from_json(const json& j) {
    try {
        RunConfig c;
        c.command = j.at("command").get<std::string>();
        c.p = j.at("p").get<unsigned>();
        c.n = j.at("n").get<unsigned>();
        c.g = j.at("g").get<unsigned>();
        c.f = j.at("f").get<unsigned>();
        c.l = j.at("l").get<unsigned>();
        c.experiment = j.at("experiment").get<std::string>();
        if (!j.at("samples").is_null()) c.samples = j.at("samples").get<std::uint64_t>();
        c.seed = j.at("seed").get<std::uint64_t>();
        c.workers = j.at("workers").get<unsigned>();
        c.budget = j.at("budget").get<std::uint64_t>();
        c.enumeration_cap = j.at("enumeration_cap").get<std::uint64_t>();
        c.baseline_samples = j.at("baseline_samples").get<std::uint64_t>();
        if (!j.at("cache_dir").is_null()) c.cache_dir = j.at("cache_dir").get<std::string>();
        c.use_cache = j.at("use_cache").get<bool>();
        if (!j.at("output").is_null()) c.output = j.at("output").get<std::string>();
        if (!j.at("tolerance").is_null()) c.tolerance = j.at("tolerance").get<double>();
        c.band = j.at("band").get<double>();
        c.q_list = j.at("q_list").get<std::vector<std::uint64_t>>();
        return c;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed run config: ") + e.what());
    }
}

std::vector<elem_t> parse_coefficients(const Field& F, const std::string& text) {
    std::vector<elem_t> out;
    if (trim(text).empty()) throw ValidationError("empty coefficient list");
    for (const auto& tok : split(text, ',')) {
        if (tok.find(':') != std::string::npos) {
            const auto parts = split(tok, ':');
            if (parts.size() > F.n()) throw ValidationError("too many coordinates in '" + tok + "'");
            std::vector<elem_t> c(F.n(), 0);
            for (std::size_t i = 0; i < parts.size(); ++i) {
                const long long v = parse_int(parts[i], "coordinate");
                const long long p = F.p();
                c[i] = static_cast<elem_t>(((v % p) + p) % p);
            }
            out.push_back(F.from_coords(c));
            continue;
        }
        const long long v = parse_int(tok, "coefficient");
        if (F.n() == 1) {
            out.push_back(F.from_int(v));
        } else {
            if (v < 0 || static_cast<std::uint64_t>(v) >= F.q())
                throw ValidationError("element index '" + tok + "' out of range for F_" + std::to_string(F.q()));
            out.push_back(static_cast<elem_t>(v));
        }
    }
    return out;
}

ClutchingTree parse_tree(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ValidationError("tree spec needs a kind prefix: '" + text + "'");
    const std::string kind = text.substr(0, colon);
    const std::string body = text.substr(colon + 1);
    if (kind == "single") return ClutchingTree::single(parse_unsigned(body, "genus"));
    if (kind == "path") {
        auto genera = parse_list(body, "genus list");
        return ClutchingTree::path(std::move(genera));
    }
    const auto semi = body.find(';');
    if (kind == "star") {
        if (semi == std::string::npos) throw ValidationError("star spec is star:CENTER;LEAVES");
        return ClutchingTree::star(parse_unsigned(body.substr(0, semi), "genus"),
                                   parse_list(body.substr(semi + 1), "genus list"));
    }
    if (kind == "tree") {
        auto genera = parse_list(body.substr(0, semi), "genus list");
        std::vector<Edge> edges;
        if (semi != std::string::npos && !trim(body.substr(semi + 1)).empty()) {
            for (const auto& e : split(body.substr(semi + 1), ',')) {
                const auto dash = e.find('-');
                if (dash == std::string::npos) throw ValidationError("edge '" + e + "' must be a-b");
                edges.emplace_back(parse_unsigned(e.substr(0, dash), "vertex"),
                                   parse_unsigned(e.substr(dash + 1), "vertex"));
            }
        }
        return ClutchingTree(std::move(genera), std::move(edges));
    }
    throw ValidationError("unknown tree kind '" + kind + "'");
}

std::string format_tree(const ClutchingTree& t) {
    std::vector<std::string> e;
    for (auto [a, b] : t.edges()) e.push_back(std::to_string(a) + "-" + std::to_string(b));
    return "tree:" + join_numbers(t.genera()) + ";" + join(e, ",");
}

Field field_from_order(std::uint64_t q) {
    if (q < 2) throw ValidationError("field order must be a prime power");
    std::uint64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    unsigned n = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
        r /= p;
        ++n;
    }
    if (r != 1) throw ValidationError(std::to_string(q) + " is not a prime power");
    return Field::make(static_cast<unsigned>(p), n);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants and experiments for hyperelliptic curves over finite fields", "strata-forge"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 ok, 1 invalid input, 2 budget exceeded, 3 criterion not met.\n"
               "Coefficients are comma-separated, constant term first.");

    RunConfig cfg;
    std::string coeffs, lcoeffs, tree, q_list = "3,5,7", l_list = "3,5", report_path;
    std::size_t edge = 0;
    unsigned g_max = 2;
    bool as_json = false, no_cache = false;
    std::uint64_t samples = 0;
    std::string cache_dir_arg;

    auto field_opts = [&](CLI::App* s, bool required) {
        auto* o = s->add_option("--p", cfg.p, "characteristic (odd prime)");
        if (required) o->required();
        s->add_option("--n", cfg.n, "extension degree")->capture_default_str();
    };
    auto census_opts = [&](CLI::App* s) {
        s->add_option("--sample", samples, "sample N curves instead of the exhaustive census");
        s->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
        s->add_option("--workers", cfg.workers, "worker threads")->capture_default_str();
        s->add_option("--budget", cfg.budget, "cap on q^(2g+1) or the sample count")->capture_default_str();
        s->add_option("--cache-dir", cache_dir_arg, "census cache directory (default $STRATA_FORGE_CACHE or .strata-cache)");
        s->add_flag("--no-cache", no_cache, "do not read or write the census cache");
    };

    auto* prank = app.add_subcommand("prank", "p-rank of y^2 = f(x) via the Hasse-Witt matrix");
    auto* lpoly = app.add_subcommand("lpoly", "L-polynomial coefficients a_0..a_2g");
    auto* np = app.add_subcommand("np", "Newton polygon and classification");
    for (auto* s : {prank, lpoly, np}) {
        field_opts(s, true);
        s->add_option("--f", coeffs, "coefficients of f, constant term first");
    }
    prank->get_option("--f")->required();
    lpoly->get_option("--f")->required();
    np->add_option("--L", lcoeffs, "integer L-polynomial coefficients instead of --f");

    auto* cen = app.add_subcommand("census", "enumerate curves as JSON lines");
    field_opts(cen, true);
    cen->add_option("--g", cfg.g, "genus")->required();
    census_opts(cen);
    cen->add_option("--output", cfg.output, "write records here instead of stdout");

    auto* clutch = app.add_subcommand("clutch", "clutching-tree calculators");
    clutch->require_subcommand(1);
    auto* c_lab = clutch->add_subcommand("labelings", "admissible p-rank labelings");
    auto* c_dim = clutch->add_subcommand("dim", "stratum dimension g + f - |vertices|");
    auto* c_coal = clutch->add_subcommand("coalesce", "contract one edge");
    auto* c_cat = clutch->add_subcommand("catalog", "boundary divisors of the compactified moduli space");
    auto* c_wit = clutch->add_subcommand("witness", "tree of elliptic curves, f of them ordinary");
    for (auto* s : {c_lab, c_dim, c_coal}) s->add_option("--tree", tree, "single:G | path:G,.. | star:C;L,.. | tree:G,..;a-b,..")->required();
    for (auto* s : {c_lab, c_dim}) s->add_option("--f", cfg.f, "p-rank")->required();
    c_coal->add_option("--edge", edge, "edge index")->required();
    c_cat->add_option("--g", cfg.g, "genus")->required();
    c_wit->add_option("--g", cfg.g, "genus")->required();
    c_wit->add_option("--f", cfg.f, "p-rank")->required();
    field_opts(c_wit, true);

    auto* mono = app.add_subcommand("mono", "symplectic monodromy groups");
    mono->require_subcommand(1);
    auto* m_ord = mono->add_subcommand("sp-order", "order of Sp_2g(Z/l)");
    auto* m_bfs = mono->add_subcommand("bfs", "order of the group generated by transvections, by enumeration");
    auto* m_base = mono->add_subcommand("baseline", "fixed-vector proportions as CSV");
    for (auto* s : {m_ord, m_bfs}) {
        s->add_option("--g", cfg.g, "genus")->required();
        s->add_option("--l", cfg.l, "odd prime l")->required();
    }
    m_bfs->add_option("--cap", cfg.enumeration_cap, "enumeration cap")->capture_default_str();
    m_base->add_option("--g-max", g_max, "largest genus")->capture_default_str();
    m_base->add_option("--l-list", l_list, "primes l")->capture_default_str();
    m_base->add_option("--cap", cfg.enumeration_cap, "exact enumeration cap")->capture_default_str();
    m_base->add_option("--samples", cfg.baseline_samples, "Monte Carlo samples above the cap")->capture_default_str();
    m_base->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    m_base->add_option("--output", cfg.output, "write the CSV here");

    auto* exp = app.add_subcommand("experiment", "run an experiment and emit a report");
    exp->add_option("name", cfg.experiment, "class-group | splitting | simple | chebotarev | notss | distribution")
        ->required()
        ->check(CLI::IsMember({"class-group", "splitting", "simple", "chebotarev", "notss", "distribution"}));
    field_opts(exp, false);
    auto* g_opt = exp->add_option("--g", cfg.g, "genus");
    exp->add_option("--f", cfg.f, "p-rank stratum");
    exp->add_option("--l", cfg.l, "odd prime l")->capture_default_str();
    census_opts(exp);
    exp->add_option("--tolerance", cfg.tolerance, "override the default tolerance");
    exp->add_option("--band", cfg.band, "ratio band factor c for the distribution experiment")->capture_default_str();
    exp->add_option("--q-list", q_list, "field orders searched by notss")->capture_default_str();
    exp->add_option("--cap", cfg.enumeration_cap, "exact enumeration cap for baselines")->capture_default_str();
    exp->add_option("--baseline-samples", cfg.baseline_samples, "Monte Carlo baseline samples")->capture_default_str();
    exp->add_option("--output", cfg.output, "write the JSON report here");
    exp->add_flag("--json", as_json, "print the JSON report instead of text");

    auto* rep = app.add_subcommand("report", "re-render a saved JSON report");
    rep->add_option("file", report_path, "report file")->required();
    rep->add_flag("--json", as_json, "print JSON instead of text");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitValidation;
    }

    try {
        if (*prank || *lpoly || (*np && lcoeffs.empty())) {
            if (*np && coeffs.empty()) throw ValidationError("np needs --f or --L");
            const auto c = curve_from(cfg, coeffs);
            if (*prank) {
                out << p_rank(c) << '\n';
            } else {
                const auto L = l_polynomial(c);
                if (*lpoly) {
                    out << join_numbers(L.a) << '\n';
                } else {
                    const auto poly = newton_polygon(L, cfg.p, cfg.n);
                    out << format_polygon(poly) << " (" << to_string(classify(poly)) << ")\n";
                }
            }
            return kExitOk;
        }
        if (*np) {
            const Field F = Field::make(cfg.p, cfg.n);
            LPolynomial L{F.q(), 0, {}};
            for (const auto& t : split(lcoeffs, ',')) L.a.emplace_back(static_cast<long>(parse_int(t, "coefficient")));
            if (L.a.size() < 3 || L.a.size() % 2 == 0) throw ValidationError("L must have 2g+1 coefficients, g >= 1");
            L.g = static_cast<unsigned>(L.a.size() / 2);
            if (L.a[0] != 1) throw ValidationError("L must have constant term 1");
            const auto poly = newton_polygon(L, cfg.p, cfg.n);
            out << format_polygon(poly) << " (" << to_string(classify(poly)) << ")\n";
            return kExitOk;
        }
        if (*cen) {
            cfg.command = "census";
            if (samples) cfg.samples = samples;
            if (!cache_dir_arg.empty()) cfg.cache_dir = cache_dir_arg;
            cfg.use_cache = !no_cache;
            const Field F = Field::make(cfg.p, cfg.n);
            std::ofstream file;
            if (cfg.output) {
                file.open(*cfg.output);
                if (!file) throw ValidationError("cannot write " + *cfg.output);
            }
            std::ostream& sink = cfg.output ? file : out;
            std::uint64_t count = 0;
            census_each(cfg.g, F, census_mode(cfg), census_options(cfg), [&](const CensusRecord& r) {
                sink << record_to_json(r).dump() << '\n';
                ++count;
            });
            if (cfg.output) out << count << " records written to " << *cfg.output << '\n';
            return kExitOk;
        }
        if (*c_lab) {
            for (const auto& l : labelings(parse_tree(tree), cfg.f)) out << format_labeling(l) << '\n';
            return kExitOk;
        }
        if (*c_dim) {
            out << stratum_dim(parse_tree(tree), cfg.f) << '\n';
            return kExitOk;
        }
        if (*c_coal) {
            out << format_tree(coalesce(parse_tree(tree), edge)) << '\n';
            return kExitOk;
        }
        if (*c_cat) {
            for (const auto& d : boundary_catalog(cfg.g)) {
                std::vector<long> dims;
                for (unsigned f = 0; f < cfg.g; ++f) dims.push_back(d.stratum_dim(f));
                out << d.name() << "  components " << join_numbers(d.component_genera()) << "  dim(f=0.."
                    << cfg.g - 1 << ") " << join_numbers(dims) << '\n';
            }
            return kExitOk;
        }
        if (*c_wit) {
            const Field F = Field::make(cfg.p, cfg.n);
            const auto w = degeneration_witness(cfg.g, cfg.f, F);
            out << format_tree(w.tree) << '\n';
            out << "p-ranks " << format_labeling(w.labeling) << '\n';
            for (std::size_t i = 0; i < w.curves.size(); ++i)
                out << "vertex " << i << ": y^2 = f(x), f = " << format_coefficients(F, w.curves[i].f().coeffs())
                    << '\n';
            return kExitOk;
        }
        if (*m_ord) {
            out << sp_order(cfg.g, cfg.l).get_str() << '\n';
            return kExitOk;
        }
        if (*m_bfs) {
            const auto order = group_bfs(standard_generators(cfg.g, cfg.l), cfg.enumeration_cap);
            if (!order) throw BudgetError("group exceeds the enumeration cap");
            out << *order << '\n';
            return kExitOk;
        }
        if (*m_base) {
            std::vector<BaselineRow> rows;
            for (unsigned g = 1; g <= g_max; ++g)
                for (unsigned l : parse_list(l_list, "prime list"))
                    for (std::uint32_t m = 1; m < l; ++m) {
                        BaselineRow row{g, l, m, std::nullopt, std::nullopt};
                        if (sp_order(g, l) <= BigInt(static_cast<unsigned long>(cfg.enumeration_cap)))
                            row.exact = fixed_vector_proportion_exact(g, l, m, cfg.enumeration_cap);
                        else
                            row.estimate = fixed_vector_proportion_mc(g, l, m, cfg.baseline_samples, cfg.seed);
                        rows.push_back(row);
                    }
            const std::string csv = baseline_csv(rows);
            if (cfg.output) {
                write_file(*cfg.output, csv);
                out << rows.size() << " rows written to " << *cfg.output << '\n';
            } else {
                out << csv;
            }
            return kExitOk;
        }
        if (*exp) {
            cfg.command = "experiment";
            if (samples) cfg.samples = samples;
            if (!cache_dir_arg.empty()) cfg.cache_dir = cache_dir_arg;
            cfg.use_cache = !no_cache;
            if (cfg.experiment == "notss") {
                if (!g_opt->count()) cfg.g = 3;
                cfg.q_list.clear();
                for (unsigned q : parse_list(q_list, "field order list")) cfg.q_list.push_back(q);
            } else if (cfg.p == 0) {
                throw ValidationError("experiment " + cfg.experiment + " needs --p");
            }
            auto report = run_experiment(cfg);
            report.parameters["config"] = cfg.to_json();
            if (cfg.output) write_file(*cfg.output, report.to_json().dump(2) + "\n");
            out << (as_json ? report.to_json().dump(2) + "\n" : report.render());
            return report.passed() ? kExitOk : kExitFailed;
        }
        if (*rep) {
            std::ifstream in(report_path);
            if (!in) throw ValidationError("cannot read " + report_path);
            json j;
            try {
                j = json::parse(in);
            } catch (const json::exception& e) {
                throw ValidationError(std::string("report is not JSON: ") + e.what());
            }
            const auto report = ExperimentReport::from_json(j);
            out << (as_json ? report.to_json().dump(2) + "\n" : report.render());
            return report.passed() ? kExitOk : kExitFailed;
        }
    } catch (const BudgetError& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const ConsistencyError& e) {
        err << "consistency check failed: " << e.what() << '\n';
        return kExitFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    err << app.help();
    return kExitValidation;
}

}  // namespace strata
