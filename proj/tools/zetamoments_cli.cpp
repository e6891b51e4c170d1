// zetamoments: moment polynomial coefficients, cross-method checks and
// conjecture-against-data tables from the command line.
//
// Exit codes: 0 success, 1 cross-method disagreement, 2 bad request,
// 3 numerical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "zetamoments/determinants.hpp"
#include "zetamoments/errors.hpp"
#include "zetamoments/local_factors.hpp"
#include "zetamoments/method1.hpp"
#include "zetamoments/method2.hpp"
#include "zetamoments/shapes.hpp"
#include "zetamoments/verifier.hpp"

using namespace zm;

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;
constexpr mpfr_prec_t kParseBits = 256;

struct RunConfig {
    std::vector<std::string> ks;
    int rmax = -1;
    int digits = 30;
    std::string method = "auto";
    std::uint64_t prime_cutoff = 0;
    int epsilon = 0;
    std::string format = "csv";
    std::string out;
    std::string cache_dir;
    int threads = 1;
    // verify and figure-data
    std::optional<double> from, to;
    std::vector<std::string> intervals;
    std::string blocks;
    bool allow_long = false;
    bool no_data = false;
    int data_digits = 10;
    std::string figure_out;
    // poly
    std::vector<std::string> xs;
    // crosscheck
    double threshold = 15;
    // nk-cache
    int weight = kMethod1MaxOrder;
};

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty() || cfg.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw ConfigurationError("cannot write " + cfg.out);
    f << text;
}

std::unique_ptr<NkCache> open_cache(const RunConfig& cfg) {
    if (cfg.cache_dir.empty()) return nullptr;
    return std::make_unique<NkCache>(std::filesystem::path(cfg.cache_dir) / "nk_cache.json");
}

void check_common(const RunConfig& cfg) {
    if (cfg.digits < 15) throw ConfigurationError("--digits must be at least 15");
    if (cfg.format != "csv" && cfg.format != "json") throw ConfigurationError("--format must be csv or json");
    if (cfg.threads < 1) throw ConfigurationError("--threads must be positive");
    if (cfg.ks.empty()) throw ConfigurationError("--k is required");
}

BigComplex parse_k(const std::string& text) { return parse_complex(text, kParseBits); }

int positive_integer_k(const BigComplex& k, const std::string& text) {
    const long n = integer_value(k);
    if (n <= 0) throw ConfigurationError("the shift method needs a positive integer k, got " + text);
    if (n > kMethod2MaxK) throw ConfigurationError("the shift method supports k <= " + std::to_string(kMethod2MaxK));
    return static_cast<int>(n);
}

// "auto" resolves to the determinant method unless integer k needs more
// coefficients than it provides.
std::string resolve_method(const std::string& method, const BigComplex& k, int rmax) {
    if (method != "auto") return method;
    const long n = integer_value(k);
    if (n > 0 && std::min<long>(rmax < 0 ? n * n : rmax, n * n) > kMethod1MaxOrder) return "2";
    return "1";
}

MomentPolynomial method1_poly(const RunConfig& cfg, const BigComplex& k, NkCache* cache) {
    Method1Options opt;
    if (cfg.prime_cutoff) opt.prime_cutoff = cfg.prime_cutoff;
    const int order = cfg.rmax < 0 ? default_order(k) : cfg.rmax;
    std::cerr << "method 1: k = " << format_complex_double({k.re().to_double(), k.im().to_double()}, 17) << ", r <= " << order << ", " << cfg.digits
              << " digits\n";
    return build_polynomial(k, order, cfg.digits, opt, cache);
}

MomentPolynomial method2_poly(const RunConfig& cfg, const BigComplex& k, const std::string& text, int digits) {
    const int n = positive_integer_k(k, text);
    Method2Options opt;
    if (cfg.prime_cutoff) opt.prime_cutoff = cfg.prime_cutoff;
    opt.epsilon_exponent = cfg.epsilon;
    std::cerr << "method 2: k = " << n << ", " << xi_permutations(n).size() << " permutations, D = " << digits
              << "\n";
    MomentPolynomial p = coefficients_via_shifts(n, digits, opt);
    if (cfg.rmax >= 0) {
        if (cfg.rmax > p.order()) throw ConfigurationError("--rmax is beyond the degree k^2");
        p.coefficients.resize(cfg.rmax + 1);
        p.is_full = false;
    }
    return p;
}

std::string coefficient_text(const BigComplex& c, const BigComplex& k, int digits) {
    return k.is_real() ? c.re().to_string(digits) : format_complex(c, digits);
}

// ------------------------------------------------------------------ commands

int cmd_coeffs(const RunConfig& cfg) {
    check_common(cfg);
    auto cache = open_cache(cfg);
    std::ostringstream csv;
    nlohmann::json docs = nlohmann::json::array();
    csv << (cfg.method == "both" ? "k,r,method1,method2,agreement_digits\n" : "k,r,c_r\n");
    for (const std::string& text : cfg.ks) {
        const BigComplex k = parse_k(text);
        const std::string method = resolve_method(cfg.method, k, cfg.rmax);
        if (method == "both") {
            positive_integer_k(k, text);
            MomentPolynomial m1 = method1_poly(cfg, k, cache.get());
            MomentPolynomial m2 = method2_poly(cfg, k, text, cfg.digits);
            for (int r = 0; r <= m1.order() && r <= m2.order(); ++r)
                csv << text << ',' << r << ',' << coefficient_text(m1.coefficients[r], k, m1.digits) << ','
                    << coefficient_text(m2.coefficients[r], k, m2.digits) << ','
                    << format_double(agreeing_digits(m1.coefficients[r], m2.coefficients[r], 99), 4) << '\n';
            docs.push_back(nlohmann::json::parse(to_json(m1)));
            docs.push_back(nlohmann::json::parse(to_json(m2)));
            continue;
        }
        MomentPolynomial p;
        if (method == "1")
            p = method1_poly(cfg, k, cache.get());
        else if (method == "2")
            p = method2_poly(cfg, k, text, cfg.digits);
        else
            throw ConfigurationError("--method must be 1, 2 or both");
        for (int r = 0; r <= p.order(); ++r)
            csv << text << ',' << r << ',' << coefficient_text(p.coefficients[r], k, p.digits) << '\n';
        docs.push_back(nlohmann::json::parse(to_json(p)));
    }
    if (cache) cache->flush();
    write_output(cfg, cfg.format == "csv" ? csv.str() : (docs.size() == 1 ? docs[0] : docs).dump(2) + "\n");
    return 0;
}

int cmd_poly(const RunConfig& cfg) {
    check_common(cfg);
    if (cfg.xs.empty()) throw ConfigurationError("--x is required");
    auto cache = open_cache(cfg);
    std::ostringstream csv;
    nlohmann::json rows = nlohmann::json::array();
    csv << "k,x,P_k(x)\n";
    for (const std::string& text : cfg.ks) {
        const BigComplex k = parse_k(text);
        const std::string method = resolve_method(cfg.method, k, cfg.rmax);
        if (method != "1" && method != "2") throw ConfigurationError("--method must be 1 or 2 for poly");
        MomentPolynomial p = method == "1" ? method1_poly(cfg, k, cache.get()) : method2_poly(cfg, k, text, cfg.digits);
        for (const std::string& xs : cfg.xs) {
            const BigReal x = parse_complex(xs, digits_to_bits(p.digits + 10)).re();
            const std::string v = coefficient_text(evaluate_pk(p, x), k, p.digits);
            csv << text << ',' << xs << ',' << v << '\n';
            rows.push_back({{"k", text}, {"x", xs}, {"value", v}});
        }
    }
    if (cache) cache->flush();
    nlohmann::json doc = {{"format", "zetamoments.evaluation"}, {"version", 1}, {"rows", rows}};
    write_output(cfg, cfg.format == "csv" ? csv.str() : doc.dump(2) + "\n");
    return 0;
}

std::vector<std::tuple<int, double, double>> parse_intervals(const RunConfig& cfg) {
    std::vector<std::tuple<int, double, double>> out;
    auto number = [](const std::string& s) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ConfigurationError("cannot parse interval bound '" + s + "'");
        }
    };
    auto split = [](const std::string& s) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw ConfigurationError("intervals are written C:D, got '" + s + "'");
        return std::pair{s.substr(0, colon), s.substr(colon + 1)};
    };
    if (cfg.from || cfg.to) {
        if (!cfg.from || !cfg.to) throw ConfigurationError("--from and --to go together");
        out.emplace_back(0, *cfg.from, *cfg.to);
    }
    for (const std::string& s : cfg.intervals) {
        const auto [c, d] = split(s);
        out.emplace_back(static_cast<int>(out.size()), number(c), number(d));
    }
    if (!cfg.blocks.empty()) {
        const auto [a, b] = split(cfg.blocks);
        const auto blocks = block_intervals(static_cast<int>(number(a)), static_cast<int>(number(b)));
        out.insert(out.end(), blocks.begin(), blocks.end());
    }
    if (out.empty()) throw ConfigurationError("give --from/--to, --intervals or --blocks");
    for (const auto& [n, c, d] : out) {
        if (!(c >= 0 && d > c)) throw ConfigurationError("interval bounds must satisfy 0 <= C < D");
        if (!cfg.no_data && d > kDeskScaleHeight && !cfg.allow_long)
            throw ConfigurationError("D = " + format_double(d) +
                                     " is above the desk-scale height 1e5; pass --allow-long to integrate it");
    }
    return out;
}

std::vector<IntervalResult> verification_rows(const RunConfig& cfg) {
    check_common(cfg);
    const auto intervals = parse_intervals(cfg);
    auto cache = open_cache(cfg);
    TableOptions opt;
    opt.R = cfg.rmax;
    opt.with_data = !cfg.no_data;
    opt.data.digits = cfg.data_digits;
    opt.data.threads = cfg.threads;
    opt.data.allow_long = cfg.allow_long;
    std::vector<MomentPolynomial> polys;
    for (const std::string& text : cfg.ks) {
        const BigComplex k = parse_k(text);
        const std::string method = resolve_method(cfg.method, k, cfg.rmax);
        if (method == "1") {
            polys.push_back(method1_poly(cfg, k, cache.get()));
        } else if (method == "2") {
            RunConfig c2 = cfg;
            c2.rmax = -1;
            polys.push_back(method2_poly(c2, k, text, cfg.digits));
        } else {
            throw ConfigurationError("--method must be 1 or 2 for verify");
        }
    }
    if (cache) cache->flush();
    std::vector<IntervalResult> rows;
    for (const MomentPolynomial& p : polys) {
        for (const auto& iv : intervals) {
            const auto [n, c, d] = iv;
            std::cerr << "k = " << format_complex(p.k, 17) << ", [" << format_double(c) << ", " << format_double(d)
                      << "]\n";
            TableOptions one = opt;
            int last = -1;
            one.data.progress = [&last](double f) {
                const int pct = static_cast<int>(f * 100);
                if (pct / 10 != last) {
                    last = pct / 10;
                    std::cerr << "  data side " << pct << "%\n";
                }
            };
            auto r = run_table(std::vector<MomentPolynomial>{p}, {iv}, one);
            rows.insert(rows.end(), r.begin(), r.end());
        }
    }
    return rows;
}

int cmd_verify(const RunConfig& cfg) {
    const auto rows = verification_rows(cfg);
    write_output(cfg, cfg.format == "csv" ? results_to_csv(rows) : results_to_json(rows));
    if (!cfg.figure_out.empty()) {
        std::ofstream f(cfg.figure_out, std::ios::binary);
        if (!f) throw ConfigurationError("cannot write " + cfg.figure_out);
        f << figure_data_csv(rows);
    }
    return 0;
}

int cmd_figure_data(const RunConfig& cfg) {
    if (cfg.no_data) throw ConfigurationError("figure data needs the data side");
    write_output(cfg, figure_data_csv(verification_rows(cfg)));
    return 0;
}

int cmd_crosscheck(const RunConfig& cfg) {
    check_common(cfg);
    auto cache = open_cache(cfg);
    bool pass = true;
    std::ostringstream csv;
    csv << "k,r,method1,method2,agreement_digits,pass\n";
    nlohmann::json rows = nlohmann::json::array();
    for (const std::string& text : cfg.ks) {
        const BigComplex k = parse_k(text);
        const int n = positive_integer_k(k, text);
        RunConfig c1 = cfg;
        c1.rmax = std::min<int>(cfg.rmax < 0 ? n * n : cfg.rmax, std::min(n * n, kMethod1MaxOrder));
        MomentPolynomial m1 = method1_poly(c1, k, cache.get());
        // shift coefficients come rounded to D - 5 digits; keep that margin
        // well above the threshold
        RunConfig c2 = cfg;
        c2.rmax = -1;
        const int d2 = std::max(20, static_cast<int>(std::ceil(cfg.threshold)) + 10);
        MomentPolynomial m2 = method2_poly(c2, k, text, d2);
        for (int r = 0; r <= m1.order(); ++r) {
            const double agree = agreeing_digits(m1.coefficients[r], m2.coefficients[r], 99);
            const bool ok = agree >= cfg.threshold;
            pass = pass && ok;
            csv << text << ',' << r << ',' << coefficient_text(m1.coefficients[r], k, m1.digits) << ','
                << coefficient_text(m2.coefficients[r], k, m2.digits) << ',' << format_double(agree, 4) << ','
                << (ok ? "yes" : "no") << '\n';
            rows.push_back({{"k", text}, {"r", r}, {"agreement_digits", format_double(agree, 4)}, {"pass", ok}});
        }
    }
    if (cache) cache->flush();
    nlohmann::json doc = {{"format", "zetamoments.crosscheck"}, {"version", 1}, {"threshold", cfg.threshold},
                          {"pass", pass}, {"rows", rows}};
    write_output(cfg, cfg.format == "csv" ? csv.str() : doc.dump(2) + "\n");
    std::cerr << (pass ? "agreement at or above " : "agreement below ") << cfg.threshold << " digits\n";
    return pass ? 0 : kExitDisagree;
}

int cmd_nk_cache(const RunConfig& cfg) {
    if (cfg.cache_dir.empty()) throw ConfigurationError("--cache-dir is required");
    if (cfg.weight < 0 || cfg.weight > kMethod1MaxOrder)
        throw ConfigurationError("--weight must lie in 0.." + std::to_string(kMethod1MaxOrder));
    auto cache = open_cache(cfg);
    const auto basis = shape_basis(cfg.weight, cfg.weight);
    for (std::size_t i = 0; i < basis->size(); ++i) {
        cache->get(basis->shape(i));
        if ((i + 1) % 50 == 0 || i + 1 == basis->size())
            std::cerr << "N_k polynomials: " << i + 1 << " / " << basis->size() << "\n";
    }
    cache->flush();
    std::cerr << "wrote " << (std::filesystem::path(cfg.cache_dir) / "nk_cache.json").string() << "\n";
    return 0;
}

// ------------------------------------------------------------------ options

void coefficient_options(CLI::App* app, RunConfig& cfg) {
    app->add_option("--k", cfg.ks, "moment parameter: a, a+bi or a-bi (repeatable)")->required();
    app->add_option("--rmax", cfg.rmax, "highest coefficient index");
    app->add_option("--digits", cfg.digits, "target decimal digits (at least 15)");
    app->add_option("--method", cfg.method, "1 (determinants), 2 (shifts, integer k), both, or auto");
    app->add_option("--prime-cutoff", cfg.prime_cutoff, "primes up to this bound are treated exactly");
    app->add_option("--epsilon", cfg.epsilon, "shift method: exponent e of the shift scale 10^-e");
    app->add_option("--cache-dir", cfg.cache_dir, "directory holding nk_cache.json");
}

void io_options(CLI::App* app, RunConfig& cfg) {
    app->add_option("--format", cfg.format, "csv or json");
    app->add_option("--out", cfg.out, "output file (standard output by default)");
    app->add_option("--threads", cfg.threads, "worker threads for the data side");
}

void interval_options(CLI::App* app, RunConfig& cfg) {
    app->add_option("--from", cfg.from, "lower end of a single interval");
    app->add_option("--to", cfg.to, "upper end of a single interval");
    app->add_option("--intervals", cfg.intervals, "intervals C:D (repeatable, comma separated)")->delimiter(',');
    app->add_option("--blocks", cfg.blocks, "blocks [50000 n, 50000 (n + 1)] for n in a:b");
    app->add_flag("--allow-long", cfg.allow_long, "integrate data above t = 1e5");
    app->add_option("--data-digits", cfg.data_digits, "relative tolerance digits of the data side (at most 12)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moment polynomials of the Riemann zeta function"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* coeffs = app.add_subcommand("coeffs", "coefficients c_r(k)");
    coefficient_options(coeffs, cfg);
    io_options(coeffs, cfg);

    auto* poly = app.add_subcommand("poly", "evaluate P_k(x)");
    coefficient_options(poly, cfg);
    io_options(poly, cfg);
    poly->add_option("--x", cfg.xs, "evaluation points (repeatable, comma separated)")->required()->delimiter(',');

    auto* verify = app.add_subcommand("verify", "conjectured against measured moments");
    coefficient_options(verify, cfg);
    io_options(verify, cfg);
    interval_options(verify, cfg);
    verify->add_flag("--no-data", cfg.no_data, "conjecture side only");
    verify->add_option("--figure-out", cfg.figure_out, "also write (n, relative error) series here");

    auto* figure = app.add_subcommand("figure-data", "relative error series for plotting");
    coefficient_options(figure, cfg);
    io_options(figure, cfg);
    interval_options(figure, cfg);

    auto* cross = app.add_subcommand("crosscheck", "compare both methods for integer k");
    coefficient_options(cross, cfg);
    io_options(cross, cfg);
    cross->add_option("--threshold", cfg.threshold, "required agreement in digits");

    auto* nk = app.add_subcommand("nk-cache", "precompute N_k polynomials into the cache directory");
    nk->add_option("--cache-dir", cfg.cache_dir, "output directory")->required();
    nk->add_option("--weight", cfg.weight, "highest shape weight");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*coeffs) return cmd_coeffs(cfg);
        if (*poly) return cmd_poly(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*figure) return cmd_figure_data(cfg);
        if (*cross) return cmd_crosscheck(cfg);
        if (*nk) return cmd_nk_cache(cfg);
    } catch (const ConfigurationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ComputationError& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kExitCompute;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return kExitCompute;
    }
    return kExitConfig;
}
