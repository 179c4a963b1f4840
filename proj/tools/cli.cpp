// cli.cpp

#include "cli.hpp"

#include "experiments.hpp"

#include "romanoff/arith.hpp"
#include "romanoff/congruence.hpp"
#include "romanoff/floorpow.hpp"
#include "romanoff/represent.hpp"
#include "romanoff/sawtooth.hpp"
#include "romanoff/sieve.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <regex>
#include <sstream>
#include <thread>

namespace romanoff::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { Plain, Json, Csv };

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

// RFC 4180: quote fields holding a comma, quote or line break.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
    out << "\r\n";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) parts.push_back(cur);
    if (!s.empty() && s.back() == ',') parts.emplace_back();
    return parts;
}

RationalExp parse_rational(const std::string& text, const std::string& flag) {
    try {
        return RationalExp::parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError(flag + ": malformed rational '" + text + "'");
    }
}

ExponentSpec parse_spec(const std::string& text, const std::string& flag) {
    ExponentSpec spec;
    for (const auto& part : split_csv(text)) spec.rs.push_back(parse_rational(part, flag));
    if (spec.rs.empty()) throw UsageError(flag + ": empty exponent list");
    return spec;
}

// "q=3" or "kappa,lambda" with rational entries.
ExponentPair parse_pair(const std::string& text) {
    if (text.rfind("q=", 0) == 0) {
        const u64 q = parse_count(text.substr(2), "--pair");
        if (q < 1 || q > 60) throw DomainError("--pair: q must lie in [1, 60]");
        return pair_family(static_cast<unsigned>(q));
    }
    const auto parts = split_csv(text);
    if (parts.size() != 2) throw UsageError("--pair: expected q=N or kappa,lambda, got '" + text + "'");
    auto part = [&](const std::string& p) -> Rational {
        if (p == "0") return 0;
        return parse_rational(p, "--pair").value();
    };
    ExponentPair pair{part(parts[0]), part(parts[1])};
    if (!pair.in_box()) throw DomainError("--pair: " + pair.str() + " lies outside 0 <= kappa <= 1/2 <= lambda <= 1");
    return pair;
}

Json pair_json(const ExponentPair& p) {
    return Json{{"kappa", to_string(p.kappa)}, {"lambda", to_string(p.lambda_)}};
}

Json report_json(const DensityReport& r) {
    return Json{{"x", r.x},
                {"odd_total", r.odd_total},
                {"representable", r.representable},
                {"density", r.density},
                {"representable_all", r.representable_all},
                {"density_all", r.density_all},
                {"sum_r", r.sum_r},
                {"sum_r2", r.sum_r2},
                {"cs_lower", r.cs_lower},
                {"sumset_size", r.sumset_size}};
}

std::vector<std::string> report_fields(const DensityReport& r) {
    return {std::to_string(r.x),        std::to_string(r.odd_total),         std::to_string(r.representable),
            fmt(r.density),             std::to_string(r.representable_all), fmt(r.density_all),
            std::to_string(r.sum_r),    std::to_string(r.sum_r2),            fmt(r.cs_lower),
            std::to_string(r.sumset_size)};
}

const std::vector<std::string> kReportHeader = {"x",         "odd_total",         "representable", "density",
                                                "representable_all", "density_all", "sum_r", "sum_r2",
                                                "cs_lower",  "sumset_size"};

const std::vector<std::string> kScanHeader = {"alpha", "Y", "theta", "K", "sum", "bound", "ratio"};

Json row_json(const ScanRow& r) {
    return Json{{"alpha", r.alpha.str()}, {"Y", r.Y.str()}, {"theta", r.theta}, {"K", r.K},
                {"sum", r.sum},           {"bound", r.bound}, {"ratio", r.ratio}};
}

std::vector<std::string> row_fields(const ScanRow& r) {
    return {r.alpha.str(), r.Y.str(), fmt(r.theta), fmt(r.K), fmt(r.sum), fmt(r.bound), fmt(r.ratio)};
}

std::string bigint_str(const BigInt& v) { return v.str(); }

// Options shared by every subcommand.
struct Common {
    bool json = false;
    bool csv = false;
    std::string threads = "1";
    std::string segment_size;

    Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Plain; }

    DensityOptions density_options() const {
        DensityOptions o;
        if (threads == "auto") {
            o.threads = std::max(1u, std::thread::hardware_concurrency());
        } else {
            const u64 t = parse_count(threads, "--threads");
            if (t == 0 || t > 1024) throw UsageError("--threads: expected 1..1024 or auto, got '" + threads + "'");
            o.threads = static_cast<unsigned>(t);
        }
        if (!segment_size.empty()) {
            o.segment_size = parse_count(segment_size, "--segment-size");
            if (o.segment_size == 0) throw UsageError("--segment-size: must be positive");
        }
        return o;
    }
};

void add_common(CLI::App* sub, Common& c) {
    auto* j = sub->add_flag("--json", c.json, "JSON output");
    auto* v = sub->add_flag("--csv", c.csv, "CSV output with a header line");
    j->excludes(v);
    sub->add_option("--threads", c.threads, "Worker threads (positive integer or auto)");
    sub->add_option("--segment-size", c.segment_size, "Sieve segment size in numbers");
}

}  // namespace

u64 parse_count(const std::string& text, const std::string& flag) {
    static const std::regex power(R"(^\s*([0-9]+)\^([0-9]+)\s*$)");
    static const std::regex sci(R"(^\s*([0-9]*)(?:\.([0-9]*))?(?:[eE]\+?([0-9]+))?\s*$)");
    std::smatch m;
    BigInt value;
    if (std::regex_match(text, m, power)) {
        const unsigned e = static_cast<unsigned>(std::min<unsigned long>(std::stoul(m[2].str()), 1000));
        value = boost::multiprecision::pow(BigInt(m[1].str()), e);
    } else if (std::regex_match(text, m, sci) && (m[1].length() + m[2].length()) > 0) {
        const std::string digits = m[1].str() + m[2].str();
        long exp10 = m[3].matched ? std::stol(m[3].str().substr(0, 6)) : 0;
        exp10 -= static_cast<long>(m[2].length());
        value = BigInt(digits);
        if (exp10 >= 0) {
            if (exp10 > 1000) throw DomainError(flag + ": value " + text + " exceeds 2^62");
            value *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exp10));
        } else {
            const BigInt div = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-exp10));
            if (value % div != 0) throw UsageError(flag + ": '" + text + "' is not an integer");
            value /= div;
        }
    } else {
        throw UsageError(flag + ": malformed integer '" + text + "'");
    }
    if (value > BigInt(kMaxBound)) throw DomainError(flag + ": value " + text + " exceeds 2^62");
    return value.convert_to<u64>();
}

double parse_real(const std::string& text, const std::string& flag) {
    auto whole = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v))
            throw UsageError(flag + ": malformed number '" + text + "'");
        return v;
    };
    if (text.rfind("e^", 0) == 0) return std::exp(whole(text.substr(2)));
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const double d = whole(text.substr(slash + 1));
        if (d == 0) throw UsageError(flag + ": zero denominator in '" + text + "'");
        return whole(text.substr(0, slash)) / d;
    }
    return whole(text);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Experiments on primes plus sums of powers of two with floor-power exponents", "romanoff"};
    app.require_subcommand(1);
    Common c;

    // density
    std::string d_r, d_x, d_grid;
    auto* density = app.add_subcommand("density", "Representation density report");
    density->add_option("--r", d_r, "Exponent list, e.g. 2,2 or 3/2,5/2")->required();
    density->add_option("--x", d_x, "Bound x");
    density->add_option("--grid", d_grid, "Increasing list of bounds, e.g. 1e5,1e6");
    add_common(density, c);

    // check
    std::string ch_n, ch_r;
    auto* check = app.add_subcommand("check", "Is n = p + 2^e1 + ... + 2^et representable?");
    check->add_option("--n", ch_n, "Integer to test")->required();
    check->add_option("--r", ch_r, "Exponent list")->required();
    add_common(check, c);

    // sparse
    std::string sp_r, sp_x;
    bool sp_list = false;
    auto* sparse = app.add_subcommand("sparse", "Thinned exponent-sum set of the split");
    sparse->add_option("--r", sp_r, "Exponent list")->required();
    sparse->add_option("--x", sp_x, "Bound x")->required();
    sparse->add_flag("--list", sp_list, "Print the values, one per line");
    add_common(sparse, c);

    // split
    std::string sl_r;
    auto* split = app.add_subcommand("split", "Split index s and thinning exponent lambda");
    split->add_option("--r", sl_r, "Exponent list")->required();
    add_common(split, c);

    // order
    std::string o_d;
    auto* order = app.add_subcommand("order", "Multiplicative order of 2 mod odd d");
    order->add_option("--d", o_d, "Odd modulus")->required();
    add_common(order, c);

    // congcount
    std::string cc_d, cc_g, cc_r, cc_k;
    bool cc_oracle = false;
    auto* congcount = app.add_subcommand("congcount", "Count k <= kmax with 2^floor(k^r) = g mod d");
    congcount->add_option("--d", cc_d, "Odd modulus")->required();
    congcount->add_option("--g", cc_g, "Residue; omit for the maximum over all residue classes");
    congcount->add_option("--r", cc_r, "Exponent r")->required();
    congcount->add_option("--kmax", cc_k, "Largest k")->required();
    congcount->add_flag("--oracle", cc_oracle, "Also run the direct count");
    add_common(congcount, c);

    // etsum
    std::string et_n, et_eps;
    bool et_exact = false;
    auto* etsum = app.add_subcommand("etsum", "Partial sums of sum_{odd d} 1/(d e2(d)^eps)");
    etsum->add_option("--n", et_n, "Largest d")->required();
    etsum->add_option("--eps", et_eps, "Exponent eps > 0")->required();
    etsum->add_flag("--exact", et_exact, "Exact rational value (integer eps only)");
    add_common(etsum, c);

    // wsums
    std::string w_x, w_r1, w_pair;
    auto* wsums = app.add_subcommand("wsums", "Weighted d-sums W1, W2, W3");
    wsums->add_option("--x", w_x, "Scale X >= e^e (accepts e^t)")->required();
    wsums->add_option("--r1", w_r1, "Exponent r1 > 1")->required();
    wsums->add_option("--pair", w_pair, "Exponent pair: q=N or kappa,lambda (default q = floor(r1) + 1)");
    add_common(wsums, c);

    // psisum
    std::string ps_alpha, ps_y, ps_theta = "0", ps_k, ps_pair = "q=1";
    auto* psisum = app.add_subcommand("psisum", "sum_{K <= k < 2K} psi(Y k^alpha + theta)");
    psisum->add_option("--alpha", ps_alpha, "Non-integer rational alpha")->required();
    psisum->add_option("--y", ps_y, "Positive rational Y")->required();
    psisum->add_option("--theta", ps_theta, "Shift, |theta| <= 1");
    psisum->add_option("--k", ps_k, "K >= 3")->required();
    psisum->add_option("--pair", ps_pair, "Exponent pair for the bound column");
    add_common(psisum, c);

    // pairs
    std::string pr_q, pr_r1;
    auto* pairs = app.add_subcommand("pairs", "Exponent pair (1/(4Q-2), 1-(q+1)/(4Q-2)), Q = 2^q");
    pairs->add_option("--q", pr_q, "Family index q >= 1");
    pairs->add_option("--r1", pr_r1, "Check r1 kappa + lambda < 1 (q defaults to floor(r1) + 1)");
    add_common(pairs, c);

    // lemma1
    std::string l_scan = "default", l_alphas, l_ys, l_thetas, l_ks, l_pair = "q=1";
    auto* lemma1 = app.add_subcommand("lemma1", "Ratio |sum psi| / bound over a parameter grid");
    lemma1->add_option("--scan", l_scan, "Grid name (default)");
    lemma1->add_option("--alphas", l_alphas, "Override alpha list");
    lemma1->add_option("--ys", l_ys, "Override Y list");
    lemma1->add_option("--thetas", l_thetas, "Override theta list");
    lemma1->add_option("--ks", l_ks, "Override K list");
    lemma1->add_option("--pair", l_pair, "Exponent pair");
    add_common(lemma1, c);

    // pi, pi2, mertens
    std::string pi_x, p2_x, p2_h, m_z;
    auto* pi = app.add_subcommand("pi", "Prime counting function");
    pi->add_option("--x", pi_x, "Bound x")->required();
    add_common(pi, c);
    auto* pi2 = app.add_subcommand("pi2", "Prime pairs (p, p + h) with p + h <= x");
    pi2->set_help_flag("--help", "Print this help message and exit");  // frees -h for the shift
    pi2->add_option("--x", p2_x, "Bound x")->required();
    pi2->add_option("--h", p2_h, "Nonzero shift h")->required();
    add_common(pi2, c);
    auto* mertens = app.add_subcommand("mertens", "sum and product over primes 2 < p < z");
    mertens->add_option("--z", m_z, "Bound z")->required();
    add_common(mertens, c);

    // repro
    std::string rp_name, rp_dir = "reports";
    auto* repro = app.add_subcommand("repro", "Run a named acceptance experiment and write reports/<name>.json");
    repro->add_option("name", rp_name, "Experiment name, 'all' or 'list'")->required();
    repro->add_option("--out-dir", rp_dir, "Report directory");
    add_common(repro, c);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const Format f = c.format();

        if (*density) {
            const ExponentSpec spec = parse_spec(d_r, "--r");
            const DensityOptions opts = c.density_options();
            if (d_x.empty() == d_grid.empty()) throw UsageError("density: give exactly one of --x or --grid");
            std::vector<u64> grid;
            if (!d_x.empty()) {
                grid.push_back(parse_count(d_x, "--x"));
            } else {
                for (const auto& g : split_csv(d_grid)) grid.push_back(parse_count(g, "--grid"));
            }
            for (u64 x : grid)
                if (x < 4) throw DomainError("density: x must be at least 4");
            const auto reports = dichotomy_experiment(spec, grid, opts);
            if (f == Format::Json) {
                if (!d_x.empty()) {
                    emit(out, report_json(reports.front()));
                } else {
                    Json arr = Json::array();
                    for (const auto& r : reports) arr.push_back(report_json(r));
                    emit(out, arr);
                }
            } else if (f == Format::Csv) {
                csv_row(out, kReportHeader);
                for (const auto& r : reports) csv_row(out, report_fields(r));
            } else {
                for (const auto& r : reports) {
                    const auto v = report_fields(r);
                    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << kReportHeader[i] << '=' << v[i];
                    out << '\n';
                }
            }
            return kExitOk;
        }

        if (*check) {
            const u64 n = parse_count(ch_n, "--n");
            const ExponentSpec spec = parse_spec(ch_r, "--r");
            const auto w = find_witness(n, spec);
            if (f == Format::Json) {
                Json j{{"n", n}, {"r", spec.str()}, {"representable", w.has_value()}};
                if (w) {
                    Json ks = Json::array();
                    for (const auto& k : w->ks) ks.push_back(bigint_str(k));
                    j["witness"] = Json{{"p", w->p}, {"a", w->a}, {"exponents", w->exponents}, {"ks", ks}};
                } else {
                    j["witness"] = nullptr;
                }
                emit(out, j);
            } else if (f == Format::Csv) {
                csv_row(out, {"n", "r", "representable", "p", "exponents"});
                std::string exps;
                if (w)
                    for (std::size_t i = 0; i < w->exponents.size(); ++i)
                        exps += (i ? " " : "") + std::to_string(w->exponents[i]);
                csv_row(out, {std::to_string(n), spec.str(), w ? "true" : "false", w ? std::to_string(w->p) : "",
                              exps});
            } else if (!w) {
                out << n << " is not representable\n";
            } else {
                out << n << " is representable: " << n << " = " << w->p;
                for (u64 e : w->exponents) out << " + 2^" << e;
                out << " (k =";
                for (const auto& k : w->ks) out << ' ' << k;
                out << ")\n";
            }
            return kExitOk;
        }

        if (*sparse) {
            const ExponentSpec spec = parse_spec(sp_r, "--r");
            const u64 x = parse_count(sp_x, "--x");
            const Split s = split_lambda(spec);
            if (s.kind != SplitKind::Split)
                throw DomainError("sparse: exponent list is " + to_string(s.kind) + ", no thinned set exists");
            const u64 count = static_cast<u64>(count_sparse(s, spec, x));
            std::vector<u64> values;
            if (sp_list) values = gen_sparse_set(s, spec, x).values;
            if (f == Format::Json) {
                Json j{{"x", x}, {"r", spec.str()}, {"s", s.s}, {"lambda", s.lambda.str()}, {"count", count}};
                if (sp_list) j["values"] = values;
                emit(out, j);
            } else if (f == Format::Csv) {
                if (sp_list) {
                    csv_row(out, {"value"});
                    for (u64 v : values) csv_row(out, {std::to_string(v)});
                } else {
                    csv_row(out, {"x", "count"});
                    csv_row(out, {std::to_string(x), std::to_string(count)});
                }
            } else if (sp_list) {
                for (u64 v : values) out << v << '\n';
            } else {
                out << "count=" << count << '\n';
            }
            return kExitOk;
        }

        if (*split) {
            const ExponentSpec spec = parse_spec(sl_r, "--r");
            const Split s = split_lambda(spec);
            const bool has = s.kind == SplitKind::Split;
            if (f == Format::Json) {
                Json j{{"r", spec.str()}, {"inverse_sum", to_string(spec.inverse_sum())}, {"kind", to_string(s.kind)}};
                j["s"] = has ? Json(s.s) : Json(nullptr);
                j["lambda"] = has ? Json(s.lambda.str()) : Json(nullptr);
                j["lambda_decimal"] = has ? Json(s.lambda.to_double()) : Json(nullptr);
                emit(out, j);
            } else if (f == Format::Csv) {
                csv_row(out, {"kind", "s", "lambda", "lambda_decimal"});
                csv_row(out, {to_string(s.kind), has ? std::to_string(s.s) : "", has ? s.lambda.str() : "",
                              has ? fmt(s.lambda.to_double()) : ""});
            } else if (has) {
                out << "kind=split s=" << s.s << " lambda=" << s.lambda.str() << " (" << fmt(s.lambda.to_double())
                    << ")\n";
            } else {
                out << "kind=" << to_string(s.kind) << " inverse_sum=" << to_string(spec.inverse_sum()) << '\n';
            }
            return kExitOk;
        }

        if (*order) {
            const auto rec = order_record(parse_count(o_d, "--d"));
            if (f == Format::Json) {
                emit(out, Json{{"d", rec.d}, {"e2", rec.e2}, {"pplus", rec.pplus}, {"mu", rec.mu}});
            } else if (f == Format::Csv) {
                csv_row(out, {"d", "e2", "pplus", "mu"});
                csv_row(out, {std::to_string(rec.d), std::to_string(rec.e2), std::to_string(rec.pplus),
                              std::to_string(rec.mu)});
            } else {
                out << "d=" << rec.d << " e2=" << rec.e2 << " pplus=" << rec.pplus << " mu=" << rec.mu << '\n';
            }
            return kExitOk;
        }

        if (*congcount) {
            const u64 d = parse_count(cc_d, "--d");
            const RationalExp r = parse_rational(cc_r, "--r");
            const u64 kmax = parse_count(cc_k, "--kmax");
            if (d % 2 == 0) throw DomainError("congcount: d must be odd");
            Json j{{"d", d}, {"r", r.str()}, {"k_max", kmax}, {"e2", mult_order2(d)}};
            std::vector<std::pair<std::string, std::string>> plain;
            if (!cc_g.empty()) {
                const u64 g = parse_count(cc_g, "--g");
                if (g >= d) throw DomainError("congcount: g must be reduced mod d");
                const auto red = reduce_congruence(d, g);
                const u64 count = red ? count_solutions_reduced(d, red->ell, r, kmax) : 0;
                j["g"] = g;
                j["solvable"] = red.has_value();
                j["ell"] = red ? Json(red->ell) : Json(nullptr);
                j["count"] = count;
                if (cc_oracle) {
                    const u64 brute = count_solutions_bruteforce({d, g, r, kmax});
                    j["oracle_count"] = brute;
                    j["agree"] = brute == count;
                }
            } else {
                const auto rc = residue_counts(d, r, kmax);
                j["max_count"] = rc.max_count;
                j["argmax_ell"] = rc.argmax_ell;
                j["argmax_g"] = pow_mod(2, rc.argmax_ell, d);
                if (cc_oracle) {
                    const u64 brute = count_solutions_bruteforce({d, pow_mod(2, rc.argmax_ell, d), r, kmax});
                    j["oracle_count"] = brute;
                    j["agree"] = brute == rc.max_count;
                }
            }
            if (f == Format::Json) {
                emit(out, j);
            } else {
                std::vector<std::string> keys, vals;
                for (const auto& [k, v] : j.items()) {
                    keys.push_back(k);
                    vals.push_back(v.is_string() ? v.get<std::string>() : v.is_null() ? "" : v.dump());
                }
                if (f == Format::Csv) {
                    csv_row(out, keys);
                    csv_row(out, vals);
                } else {
                    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? " " : "") << keys[i] << '=' << vals[i];
                    out << '\n';
                }
            }
            return kExitOk;
        }

        if (*etsum) {
            const u64 n = parse_count(et_n, "--n");
            const double eps = parse_real(et_eps, "--eps");
            const auto e = et_partial_sum(n, eps);
            std::string exact;
            if (et_exact) {
                if (eps != std::floor(eps) || eps < 1 || eps > 16)
                    throw UsageError("--exact needs an integer eps in [1, 16]");
                exact = to_string(et_partial_sum_exact(n, static_cast<unsigned>(eps)));
            }
            if (f == Format::Json) {
                Json blocks = Json::array();
                for (const auto& b : e.blocks)
                    blocks.push_back(Json{{"lo", b.lo}, {"hi", b.hi}, {"increment", b.increment}, {"complete", b.complete}});
                Json j{{"n", n}, {"eps", eps}, {"partial", e.partial}};
                if (et_exact) j["exact"] = exact;
                j["blocks"] = blocks;
                emit(out, j);
            } else if (f == Format::Csv) {
                csv_row(out, {"lo", "hi", "increment", "complete"});
                for (const auto& b : e.blocks)
                    csv_row(out, {std::to_string(b.lo), std::to_string(b.hi), fmt(b.increment), b.complete ? "true" : "false"});
            } else {
                out << "partial=" << fmt(e.partial) << '\n';
                if (et_exact) out << "exact=" << exact << '\n';
                for (const auto& b : e.blocks)
                    out << "block (" << b.lo << ", " << b.hi << "] increment=" << fmt(b.increment)
                        << (b.complete ? "" : " (cut at n)") << '\n';
            }
            return kExitOk;
        }

        if (*wsums) {
            const double X = parse_real(w_x, "--x");
            const RationalExp r1 = parse_rational(w_r1, "--r1");
            const ExponentPair pair = w_pair.empty() ? pair_family(default_pair_q(r1)) : parse_pair(w_pair);
            const auto w = weighted_sums(X, r1, pair);
            if (f == Format::Json) {
                emit(out, Json{{"X", w.X},
                               {"r1", w.r1.str()},
                               {"pair", pair_json(w.pair)},
                               {"w1", w.w1},
                               {"w2", w.w2},
                               {"w3", w.w3},
                               {"order_cutoff", w.order_cutoff},
                               {"admissible_d", w.admissible_d}});
            } else if (f == Format::Csv) {
                csv_row(out, {"X", "r1", "kappa", "lambda", "w1", "w2", "w3", "order_cutoff", "admissible"});
                csv_row(out, {fmt(w.X), w.r1.str(), to_string(w.pair.kappa), to_string(w.pair.lambda_), fmt(w.w1),
                              fmt(w.w2), fmt(w.w3), fmt(w.order_cutoff), std::to_string(w.admissible_d.size())});
            } else {
                out << "X=" << fmt(w.X) << " r1=" << w.r1.str() << " pair=" << w.pair.str() << '\n'
                    << "w1=" << fmt(w.w1) << " w2=" << fmt(w.w2) << " w3=" << fmt(w.w3) << '\n'
                    << "order_cutoff=" << fmt(w.order_cutoff) << " admissible_d=";
                for (std::size_t i = 0; i < w.admissible_d.size(); ++i) out << (i ? "," : "") << w.admissible_d[i];
                out << '\n';
            }
            return kExitOk;
        }

        if (*psisum) {
            const RationalExp alpha = parse_rational(ps_alpha, "--alpha");
            const PositiveRational Y = parse_rational(ps_y, "--y");
            const double theta = parse_real(ps_theta, "--theta");
            const double K = parse_real(ps_k, "--k");
            if (std::abs(theta) > 1) throw DomainError("psisum: |theta| must be at most 1");
            const auto rows = lemma1_ratio_scan({alpha}, {Y}, {theta}, {K}, parse_pair(ps_pair));
            if (f == Format::Json) {
                emit(out, row_json(rows.front()));
            } else {
                csv_row(out, kScanHeader);
                csv_row(out, row_fields(rows.front()));
            }
            return kExitOk;
        }

        if (*pairs) {
            if (pr_q.empty() && pr_r1.empty()) throw UsageError("pairs: give --q, --r1 or both");
            std::optional<RationalExp> r1;
            if (!pr_r1.empty()) r1 = parse_rational(pr_r1, "--r1");
            const u64 q = pr_q.empty() ? default_pair_q(*r1) : parse_count(pr_q, "--q");
            if (q < 1 || q > 60) throw DomainError("pairs: q must lie in [1, 60]");
            const ExponentPair p = pair_family(static_cast<unsigned>(q));
            Json j{{"q", q}, {"kappa", to_string(p.kappa)}, {"lambda", to_string(p.lambda_)}, {"in_box", p.in_box()}};
            if (r1) {
                const auto cond = pair_condition(*r1, p);
                j["r1"] = r1->str();
                j["value"] = to_string(cond.value);
                j["satisfied"] = cond.satisfied;
            }
            if (f == Format::Json) {
                emit(out, j);
            } else {
                std::vector<std::string> keys, vals;
                for (const auto& [k, v] : j.items()) {
                    keys.push_back(k);
                    vals.push_back(v.is_string() ? v.get<std::string>() : v.dump());
                }
                if (f == Format::Csv) {
                    csv_row(out, keys);
                    csv_row(out, vals);
                } else {
                    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? " " : "") << keys[i] << '=' << vals[i];
                    out << '\n';
                }
            }
            return kExitOk;
        }

        if (*lemma1) {
            if (l_scan != "default") throw UsageError("--scan: only 'default' is defined, got '" + l_scan + "'");
            ScanGrid g = default_scan_grid();
            if (!l_alphas.empty()) {
                g.alphas.clear();
                for (const auto& s : split_csv(l_alphas)) g.alphas.push_back(parse_rational(s, "--alphas"));
            }
            if (!l_ys.empty()) {
                g.ys.clear();
                for (const auto& s : split_csv(l_ys)) g.ys.push_back(parse_rational(s, "--ys"));
            }
            if (!l_thetas.empty()) {
                g.thetas.clear();
                for (const auto& s : split_csv(l_thetas)) g.thetas.push_back(parse_real(s, "--thetas"));
            }
            if (!l_ks.empty()) {
                g.ks.clear();
                for (const auto& s : split_csv(l_ks)) g.ks.push_back(parse_real(s, "--ks"));
            }
            const ExponentPair pair = parse_pair(l_pair);
            const auto rows = lemma1_ratio_scan(g.alphas, g.ys, g.thetas, g.ks, pair);
            if (f == Format::Json) {
                double mx = 0;
                Json arr = Json::array();
                for (const auto& r : rows) {
                    mx = std::max(mx, r.ratio);
                    arr.push_back(row_json(r));
                }
                emit(out, Json{{"pair", pair_json(pair)}, {"max_ratio", mx}, {"rows", arr}});
            } else {
                csv_row(out, kScanHeader);
                for (const auto& r : rows) csv_row(out, row_fields(r));
            }
            return kExitOk;
        }

        if (*pi) {
            const u64 x = parse_count(pi_x, "--x");
            const u64 count = prime_count(x, c.density_options().segment_size);
            if (f == Format::Json) {
                emit(out, Json{{"x", x}, {"count", count}});
            } else if (f == Format::Csv) {
                csv_row(out, {"x", "count"});
                csv_row(out, {std::to_string(x), std::to_string(count)});
            } else {
                out << count << '\n';
            }
            return kExitOk;
        }

        if (*pi2) {
            const u64 x = parse_count(p2_x, "--x");
            const double hd = parse_real(p2_h, "--h");
            if (hd != std::floor(hd) || std::abs(hd) > 1e15) throw UsageError("--h: expected an integer, got '" + p2_h + "'");
            const i64 h = static_cast<i64>(hd);
            const u64 count = prime_pairs_count(x, h);
            const double lx = x > 1 ? std::log(static_cast<double>(x)) : 0;
            const double ratio = x > 0 ? static_cast<double>(count) * lx * lx /
                                             (static_cast<double>(x) * to_double(singular_product(h)))
                                       : 0;
            if (f == Format::Json) {
                emit(out, Json{{"x", x}, {"h", h}, {"count", count}, {"bound_ratio", ratio}});
            } else if (f == Format::Csv) {
                csv_row(out, {"x", "h", "count", "bound_ratio"});
                csv_row(out, {std::to_string(x), std::to_string(h), std::to_string(count), fmt(ratio)});
            } else {
                out << count << '\n';
            }
            return kExitOk;
        }

        if (*mertens) {
            const double z = parse_real(m_z, "--z");
            if (!(z > 1) || z > static_cast<double>(kMaxBound)) throw DomainError("mertens: z must lie in (1, 2^62]");
            const double s = prime_recip_sum(z);
            const double prod = odd_prime_product(z);
            const double ratio = std::exp(s) / std::log(z);
            if (f == Format::Json) {
                emit(out, Json{{"z", z}, {"recip_sum", s}, {"product", prod}, {"exp_recip_sum", std::exp(s)},
                               {"log_z", std::log(z)}, {"ratio", ratio}});
            } else if (f == Format::Csv) {
                csv_row(out, {"z", "recip_sum", "product", "exp_recip_sum", "log_z", "ratio"});
                csv_row(out, {fmt(z), fmt(s), fmt(prod), fmt(std::exp(s)), fmt(std::log(z)), fmt(ratio)});
            } else {
                out << "recip_sum=" << fmt(s) << " product=" << fmt(prod) << " exp(recip_sum)/log(z)=" << fmt(ratio)
                    << '\n';
            }
            return kExitOk;
        }

        if (*repro) {
            std::vector<const repro::Experiment*> chosen;
            if (rp_name == "list") {
                for (const auto& e : repro::experiments())
                    out << e.criterion << ' ' << e.name << "  " << e.title << '\n';
                return kExitOk;
            }
            if (rp_name == "all") {
                for (const auto& e : repro::experiments()) chosen.push_back(&e);
            } else if (const auto* e = repro::find_experiment(rp_name)) {
                chosen.push_back(e);
            } else {
                std::string names;
                for (const auto& ex : repro::experiments()) names += " " + ex.name;
                throw UsageError("repro: unknown experiment '" + rp_name + "'; known:" + names);
            }
            std::filesystem::create_directories(rp_dir);
            for (const auto* e : chosen) {
                const auto res = repro::run_experiment(*e);
                const auto path = std::filesystem::path(rp_dir) / (e->name + ".json");
                std::ofstream file(path);
                if (!file) throw std::runtime_error("repro: cannot write " + path.string());
                file << res.to_json().dump(2) << '\n';
                out << repro::status_line(res) << "  -> " << path.string() << '\n';
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}

}  // namespace romanoff::cli
