#include "gpc/cli.hpp"

#include "gpc/json_io.hpp"
#include "gpc/montecarlo.hpp"
#include "gpc/mub.hpp"
#include "gpc/regions.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gpc::cli {

using nlohmann::json;

namespace {

// Invalid input detected after parsing; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Command ran but a verification failed; maps to exit code 1.
struct Outcome {
    std::string text;
    bool verified = true;
};

constexpr const char* kCsvHeader = "d,N,class,num,den,decimal\n";

void csv_row(std::ostringstream& os, int d, int n, const std::string& cls, const Rational& q) {
    os << d << ',' << n << ',' << cls << ',' << q.get_num().get_str() << ',' << q.get_den().get_str() << ','
       << to_decimal_string(q) << '\n';
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int checked_n(int d, NMode mode) {
    const int n = n_for(d, mode);
    try {
        validate_dimensions(d, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!supported(d, n)) throw UsageError("unsupported (d, N) = (" + std::to_string(d) + ", " + std::to_string(n) + ")");
    if (d > dimension_cap())
        throw UsageError("d=" + std::to_string(d) + " exceeds the dimension cap " + std::to_string(dimension_cap()) +
                         " (set PV_MAX_D to raise it)");
    return n;
}

void require_json(const RunConfig& cfg) {
    if (cfg.format != Format::json) throw UsageError(cfg.subcommand + " only supports --format json");
}

std::vector<ClassTag> classes_or(const RunConfig& cfg, std::vector<ClassTag> fallback) {
    return cfg.classes.empty() ? fallback : cfg.classes;
}

Outcome cmd_ratios(const RunConfig& cfg) {
    std::vector<RatioRow> rows;
    for (int d = cfg.dims.lo; d <= cfg.dims.hi; ++d) {
        checked_n(d, cfg.n_mode);
        rows.push_back(ratio_row(d, cfg.n_mode));
    }
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << kCsvHeader;
        for (const auto& r : rows) {
            csv_row(os, r.d, r.n_bases, "cp/p", r.cp_over_p);
            csv_row(os, r.d, r.n_bases, "g/cp", r.g_over_cp);
            csv_row(os, r.d, r.n_bases, "eb/g", r.eb_over_g);
        }
        return {os.str()};
    }
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(to_json(r));
    return {dump(json{{"n_mode", to_string(cfg.n_mode)}, {"rows", arr}})};
}

Outcome cmd_volume(const RunConfig& cfg) {
    const auto classes = classes_or(cfg, {ClassTag::p, ClassTag::cp, ClassTag::g, ClassTag::eb});
    std::vector<VolumeResult> results;
    for (int d = cfg.dims.lo; d <= cfg.dims.hi; ++d) {
        const int n = checked_n(d, cfg.n_mode);
        for (ClassTag t : classes) results.push_back(class_volume(d, n, t));
    }
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << kCsvHeader;
        for (const auto& v : results) {
            csv_row(os, v.d, v.n_bases, to_string(v.class_tag) + ":lambda", v.lambda_volume);
            csv_row(os, v.d, v.n_bases, to_string(v.class_tag) + ":hs-squared", v.hs_volume.signed_square());
        }
        return {os.str()};
    }
    json arr = json::array();
    for (const auto& v : results) arr.push_back(to_json(v));
    return {dump(json{{"volumes", arr}})};
}

Outcome cmd_classify(const RunConfig& cfg) {
    if (cfg.dims.lo != cfg.dims.hi) throw UsageError("classify takes a single --d");
    const int d = cfg.dims.lo;
    const int n = n_for(d, cfg.n_mode);
    try {
        validate_dimensions(d, n);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::vector<Rational> lambdas;
    try {
        lambdas = parse_lambda_list(cfg.lambdas);
    } catch (const std::exception& e) {
        throw UsageError(std::string("cannot parse --lambda: ") + e.what());
    }
    if (n == d + 1 && lambdas.size() == static_cast<size_t>(n)) lambdas.emplace_back(0);
    ChannelSpec c;
    try {
        c = ChannelSpec::make(d, n, std::move(lambdas));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << kCsvHeader;
        auto flag = [](bool b) { return Rational(b ? 1 : 0); };
        csv_row(os, d, n, "p", flag(is_positive_necessary(c)));
        csv_row(os, d, n, "cp", flag(is_cp(c)));
        csv_row(os, d, n, "g", flag(is_generator_achievable(c)));
        const EbVerdict eb = is_eb_necessary(c);
        csv_row(os, d, n, "eb", flag(eb.holds));
        csv_row(os, d, n, "eb-known-sufficient", flag(eb.known_sufficient));
        csv_row(os, d, n, "min-output-overlap", min_output_overlap(c));
        return {os.str()};
    }
    return {dump(classification_json(c))};
}

Outcome cmd_mc(const RunConfig& cfg) {
    if (cfg.samples < 10000) throw UsageError("--samples must be at least 10000");
    const auto classes = classes_or(cfg, {ClassTag::cp});
    std::vector<std::pair<McEstimate, SurdValue>> runs;
    bool all_consistent = true;
    for (int d = cfg.dims.lo; d <= cfg.dims.hi; ++d) {
        const int n = checked_n(d, cfg.n_mode);
        for (ClassTag t : classes) {
            const McEstimate e = mc_volume(d, n, t, cfg.samples, cfg.seed);
            const SurdValue exact = class_volume(d, n, t).hs_volume;
            all_consistent = all_consistent && e.consistent_with(exact.to_double());
            runs.emplace_back(e, exact);
        }
    }
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << kCsvHeader;
        for (const auto& [e, exact] : runs) {
            Rational fraction(Integer(std::to_string(e.hits)), Integer(std::to_string(e.samples)));
            fraction.canonicalize();
            csv_row(os, e.d, e.n_bases, to_string(e.class_tag) + ":hit-fraction", fraction);
        }
        return {os.str(), all_consistent};
    }
    json arr = json::array();
    for (const auto& [e, exact] : runs) arr.push_back(to_json(e, exact));
    return {dump(json{{"runs", arr}, {"all_consistent", all_consistent}}), all_consistent};
}

Outcome cmd_check_conjectures(const RunConfig& cfg) {
    for (int d = cfg.dims.lo; d <= cfg.dims.hi; ++d) checked_n(d, cfg.n_mode);
    const ConjectureReport report = check_conjectures(cfg.dims.lo, cfg.dims.hi, cfg.n_mode);
    if (cfg.format == Format::csv) {
        std::ostringstream os;
        os << kCsvHeader;
        for (const auto& row : report.rows)
            for (const auto& c : row.ratios) {
                csv_row(os, row.d, row.n_bases, c.name, c.computed);
                csv_row(os, row.d, row.n_bases, c.name + ":expected", c.expected);
            }
        return {os.str(), report.all_hold()};
    }
    return {dump(to_json(report)), report.all_hold()};
}

Outcome cmd_dump_regions(const RunConfig& cfg) {
    require_json(cfg);
    const auto classes = classes_or(cfg, {ClassTag::cp});
    json arr = json::array();
    for (int d = cfg.dims.lo; d <= cfg.dims.hi; ++d) {
        const int n = checked_n(d, cfg.n_mode);
        for (ClassTag t : classes) arr.push_back(to_json(chambers_for(d, n, t)));
    }
    return {dump(json{{"chamber_sets", arr}})};
}

Outcome cmd_mub_verify(const RunConfig& cfg) {
    require_json(cfg);
    if (!(cfg.tolerance > 0)) throw UsageError("--tol must be positive");
    json arr = json::array();
    bool all_pass = true;
    for (int d = cfg.dims.lo; d <= cfg.dims.hi; ++d) {
        // A range covers its primes; a single non-prime d is an error below.
        if (cfg.dims.lo != cfg.dims.hi && !is_prime(d)) continue;
        MubSet m;
        try {
            m = build_weyl_mubs(d);
        } catch (const std::domain_error& e) {
            throw UsageError(e.what());
        }
        json j = to_json(verify_unbiased(m, cfg.tolerance));
        j["d"] = d;
        j["bases"] = m.count();
        j["tolerance"] = cfg.tolerance;
        all_pass = all_pass && j["pass"].get<bool>();
        arr.push_back(std::move(j));
    }
    if (arr.empty()) throw UsageError("no prime d in the range");
    return {dump(json{{"reports", arr}, {"all_pass", all_pass}}), all_pass};
}

Outcome dispatch(const RunConfig& cfg) {
    if (cfg.subcommand == "ratios") return cmd_ratios(cfg);
    if (cfg.subcommand == "volume") return cmd_volume(cfg);
    if (cfg.subcommand == "classify") return cmd_classify(cfg);
    if (cfg.subcommand == "mc") return cmd_mc(cfg);
    if (cfg.subcommand == "check-conjectures") return cmd_check_conjectures(cfg);
    if (cfg.subcommand == "dump-regions") return cmd_dump_regions(cfg);
    if (cfg.subcommand == "mub-verify") return cmd_mub_verify(cfg);
    throw UsageError("unknown subcommand '" + cfg.subcommand + "'");
}

}  // namespace

DimensionRange parse_dimension_range(const std::string& text) {
    auto to_int = [&text](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad dimension range '" + text + "' (expected D or LO..HI)");
        return std::stoi(s);
    };
    DimensionRange r;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        r.lo = r.hi = to_int(text);
    } else {
        r.lo = to_int(text.substr(0, dots));
        r.hi = to_int(text.substr(dots + 2));
    }
    if (r.lo > r.hi) throw std::invalid_argument("empty dimension range '" + text + "'");
    return r;
}

std::vector<Rational> parse_lambda_list(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\n");
    if (first != std::string::npos && text[first] == '[') return rationals_from_json(json::parse(text));
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw std::invalid_argument("no eigenvalues given");
    return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hilbert-Schmidt volumes of generalized Pauli channels", "gpc"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string dims_text = "2";
    std::string mode_text = "max";
    std::vector<std::string> class_texts;
    std::string format_text = "json";
    std::string out_path;

    struct Spec {
        const char* name;
        const char* help;
        bool classes, samples, lambdas, tol;
    };
    const Spec specs[] = {
        {"ratios", "exact V_CP/V_P, V_G/V_CP and V_EB/V_G per dimension", false, false, false, false},
        {"volume", "exact class volumes (eigenvalue and Hilbert-Schmidt)", true, false, false, false},
        {"classify", "class membership of one channel given by its eigenvalues", false, false, true, false},
        {"mc", "Monte Carlo volume estimate checked against the exact value", true, true, false, false},
        {"check-conjectures", "compare exact ratios with the closed-form formulas", false, false, false, false},
        {"dump-regions", "emit the integration chambers as JSON", true, false, false, false},
        {"mub-verify", "build the Weyl MUBs and check unbiasedness", false, false, false, true},
    };
    for (const auto& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--d", dims_text, "dimension or range LO..HI")->required();
        if (std::string(s.name) != "mub-verify") {
            sub->add_option("--n-mode", mode_text, "number of bases: max (d+1), d, or 3")
                ->check(CLI::IsMember({"max", "d", "3"}));
        }
        if (s.classes)
            sub->add_option("--class", class_texts, "class tag(s): p, cp, g, eb")
                ->delimiter(',')
                ->check(CLI::IsMember({"p", "cp", "g", "eb"}, CLI::ignore_case));
        if (s.samples) {
            sub->add_option("--samples", cfg.samples, "number of samples");
            sub->add_option("--seed", cfg.seed, "64-bit seed");
        }
        if (s.lambdas) sub->add_option("--lambda", cfg.lambdas, "eigenvalues as JSON array or comma list")->required();
        if (s.tol) sub->add_option("--tol", cfg.tolerance, "unbiasedness tolerance");
        sub->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "write output to PATH instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        cfg.subcommand = app.get_subcommands().front()->get_name();
        cfg.dims = parse_dimension_range(dims_text);
        cfg.n_mode = parse_n_mode(mode_text);
        for (const auto& c : class_texts) cfg.classes.push_back(parse_class_tag(c));
        cfg.format = format_text == "csv" ? Format::csv : Format::json;
        if (!out_path.empty()) cfg.out_path = out_path;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Outcome result;
    try {
        result = dispatch(cfg);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ChamberInconsistency& e) {
        err << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (cfg.out_path) {
        std::ofstream file(*cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open '" << *cfg.out_path << "' for writing\n";
            return kExitUsage;
        }
        file << result.text;
    } else {
        out << result.text;
    }
    if (!result.verified) err << "verification failed\n";
    return result.verified ? kExitOk : kExitMismatch;
}

}  // namespace gpc::cli
