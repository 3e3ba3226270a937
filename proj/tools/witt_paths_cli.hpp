#ifndef WITTPATHS_TOOLS_CLI_HPP
#define WITTPATHS_TOOLS_CLI_HPP

// Command-line front end: witt-paths <count|oracle|dims|verify> [flags].
//
// Exit codes: 0 success or pass, 1 verification failure or internal
// inconsistency, 2 usage error (bad arguments, bound violations).
// Exact values are always printed as strings: "p/q" or an integer.

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <wittpaths/wittpaths.hpp>

namespace wittpaths::cli
{

using json = nlohmann::ordered_json;

inline constexpr int exit_ok = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

/// One command's output; rendered either as JSON or as "key: value" lines.
struct OutputRecord
{
    std::string command;
    json input = json::object();
    std::vector<std::pair<std::string, std::string>> results;
    std::string status = "ok";
    std::optional<json> mismatch;
    std::vector<std::string> notices;
    std::vector<std::string> listing;
    std::optional<long long> elapsed_ms;

    void add(std::string name, std::string value)
    {
        results.emplace_back(std::move(name), std::move(value));
    }

    json to_json() const
    {
        json out;
        out["command"] = command;
        out["input"] = input;
        json res = json::object();
        for (const auto &[k, v] : results) {
            res[k] = v;
        }
        out["results"] = res;
        out["status"] = status;
        if (mismatch) {
            out["mismatch"] = *mismatch;
        }
        if (!notices.empty()) {
            out["notices"] = notices;
        }
        if (!listing.empty()) {
            out["listing"] = listing;
        }
        if (elapsed_ms) {
            out["elapsed_ms"] = *elapsed_ms;
        }
        return out;
    }

    void print_plain(std::ostream &os) const
    {
        os << "command: " << command << '\n';
        for (const auto &[k, v] : input.items()) {
            os << "input." << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
        for (const std::string &n : notices) {
            os << "notice: " << n << '\n';
        }
        for (const auto &[k, v] : results) {
            os << k << ": " << v << '\n';
        }
        for (const std::string &line : listing) {
            os << "  " << line << '\n';
        }
        if (mismatch) {
            for (const auto &[k, v] : mismatch->items()) {
                os << "mismatch." << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
            }
        }
        os << "status: " << status << '\n';
        if (elapsed_ms) {
            os << "elapsed_ms: " << *elapsed_ms << '\n';
        }
    }
};

/// Parses "2,0,2" into raw entries; throws std::invalid_argument when malformed.
inline std::vector<unsigned> parse_entries(const std::string &text)
{
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
            throw std::invalid_argument("expected comma-separated nonnegative integers, got '" + text + "'");
        }
        out.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    if (out.empty() || text.back() == ',') {
        throw std::invalid_argument("expected comma-separated nonnegative integers, got '" + text + "'");
    }
    return out;
}

/// Multidegree from user text; zero entries are dropped and reported.
inline MultiDegree parse_multidegree(const std::string &text, OutputRecord &record)
{
    std::vector<unsigned> raw = parse_entries(text);
    MultiDegree m = MultiDegree::strip_zeros(raw);
    if (m.size() != raw.size()) {
        record.notices.push_back("zero entries stripped: " + text + " -> " + to_string(m));
    }
    return m;
}

inline json exponent_json(const Exponent &e)
{
    json arr = json::array();
    for (unsigned x : e) {
        arr.push_back(x);
    }
    return arr;
}

inline json mismatch_json(const VerificationReport &report)
{
    json out;
    out["identity"] = report.identity;
    if (report.first_mismatch) {
        out["exponent"] = exponent_json(report.first_mismatch->exponent);
        out["lhs"] = to_string(report.first_mismatch->lhs);
        out["rhs"] = to_string(report.first_mismatch->rhs);
    }
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    return out;
}

struct CommonOptions
{
    bool json_output = false;
    bool no_timing = false;
};

/// Runs the CLI with argv-style arguments; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact path, necklace and free Lie algebra counts on bouquet graphs", "witt-paths"};
    app.require_subcommand(1);
    CommonOptions common;
    app.add_flag("--json", common.json_output, "Emit one JSON object instead of key: value lines");
    app.add_flag("--no-timing", common.no_timing, "Omit the elapsed-time field");

    std::string m_text;
    auto *count = app.add_subcommand("count", "Closed-form counters for a multidegree");
    count->add_option("-m,--multidegree", m_text, "Comma-separated edge multiplicities, e.g. 2,2")->required();

    std::string which;
    bool list = false;
    unsigned max_n = OracleLimits{}.max_total;
    auto *oracle = app.add_subcommand("oracle", "Brute-force enumeration");
    oracle->add_option("which", which, "words | necklaces | signed-necklaces")
        ->required()
        ->check(CLI::IsMember({"words", "necklaces", "signed-necklaces"}));
    oracle->add_option("-m,--multidegree", m_text, "Comma-separated edge multiplicities")->required();
    oracle->add_option("--max-n", max_n, "Enumeration bound on N")->capture_default_str();
    oracle->add_flag("--list", list, "Print canonical representatives of the nonperiodic classes");

    std::string kind_text;
    std::string k_text;
    unsigned series_bound = DimsSeriesLimits{}.max_degree;
    auto *dims = app.add_subcommand("dims", "Generator dimensions by two independent routes");
    dims->add_option("--kind", kind_text, "Witt partition function: F | G | H")
        ->required()
        ->check(CLI::IsMember({"F", "G", "H"}));
    dims->add_option("-k", k_text, "Comma-separated multidegree")->required();
    dims->add_option("--degree", series_bound, "Largest total degree for series extraction")->capture_default_str();

    std::string identity;
    unsigned edges = 2;
    unsigned degree = 6;
    std::string corrupt_text;
    std::string corrupt_target = "plus";
    int corrupt_delta = 1;
    std::string witt_kind = "F";
    auto *verify = app.add_subcommand("verify", "Coefficientwise check of a product identity");
    verify->add_option("identity", identity, "sherman | cancellation | gen-witt | plus-minus | witt-classical")
        ->required()
        ->check(CLI::IsMember({"sherman", "cancellation", "gen-witt", "plus-minus", "witt-classical"}));
    verify->add_option("--edges", edges, "Number of loops / variables (>= 2)")->capture_default_str();
    verify->add_option("--degree", degree, "Total degree bound D (>= 1)")->capture_default_str();
    verify->add_option("--kind", witt_kind, "Witt partition function for gen-witt")
        ->check(CLI::IsMember({"F", "F_PRIME", "G", "H", "F_C"}))
        ->capture_default_str();
    verify->add_option("--corrupt", corrupt_text, "Testing aid: perturb the exponent at this vector");
    verify->add_option("--corrupt-target", corrupt_target, "Exponent family to perturb: plus | minus")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    verify->add_option("--corrupt-delta", corrupt_delta, "Amount added by --corrupt")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    OutputRecord record;
    int code = exit_ok;
    auto emit = [&]() {
        if (!common.no_timing) {
            record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                                       start)
                                    .count();
        }
        if (common.json_output) {
            out << record.to_json().dump(2) << '\n';
        } else {
            record.print_plain(out);
        }
    };

    try {
        if (count->parsed()) {
            record.command = "count";
            MultiDegree m = parse_multidegree(m_text, record);
            record.input["m"] = exponent_json(m.entries());
            record.add("theta", to_string(theta(m)));
            record.add("theta_plus", to_string(theta_plus(m)));
            record.add("theta_minus", to_string(theta_minus(m)));
            if (m.size() >= 2) {
                record.add("F", to_string(witt_F(m)));
                record.add("F_prime", to_string(witt_F_prime(m)));
                record.add("G", to_string(witt_G(m)));
                record.add("H", to_string(h_value(m)));
                record.add("P", to_string(p_value(m)));
            }
            record.add("M", to_string(witt_M(m)));
        } else if (oracle->parsed()) {
            record.command = "oracle " + which;
            MultiDegree m = parse_multidegree(m_text, record);
            record.input["m"] = exponent_json(m.entries());
            record.input["max_n"] = max_n;
            const OracleLimits limits{max_n};
            if (which == "words") {
                WordCensus census = word_census(m, limits, list);
                record.add("total_words", to_string(census.total_words));
                record.add("nonperiodic_classes", to_string(census.nonperiodic_classes));
                for (const Word &w : census.representatives) {
                    record.listing.push_back(w.to_string());
                }
            } else {
                BigInt n = 0;
                auto visit = [&](const NecklaceColouring &c) {
                    n += 1;
                    if (list) {
                        record.listing.push_back(c.to_string());
                    }
                };
                if (which == "necklaces") {
                    for_each_necklace(m, visit, limits);
                } else {
                    for_each_signed_necklace(m, visit, limits);
                }
                record.add("nonperiodic_classes", to_string(n));
            }
        } else if (dims->parsed()) {
            record.command = "dims";
            const WittFunctionKind kind = *parse_witt_kind(kind_text);
            MultiDegree k = parse_multidegree(k_text, record);
            record.input["kind"] = kind_text;
            record.input["k"] = exponent_json(k.entries());
            BigRational faa = dims_faa(kind, k);
            BigRational series = dims_series(kind, k, DimsSeriesLimits{series_bound});
            record.add("faa", to_string(faa));
            record.add("series", to_string(series));
            record.add("agree", faa == series ? "true" : "false");
            if (faa != series) {
                record.status = "fail";
                code = exit_fail;
            }
        } else if (verify->parsed()) {
            record.command = "verify " + identity;
            if (edges < 2 || degree < 1) {
                throw std::invalid_argument("verify needs --edges >= 2 and --degree >= 1");
            }
            record.input["edges"] = edges;
            record.input["degree"] = degree;
            std::optional<Corruption> corruption;
            if (!corrupt_text.empty()) {
                Exponent at = parse_entries(corrupt_text);
                if (at.size() != edges) {
                    throw std::invalid_argument("--corrupt needs exactly --edges entries");
                }
                corruption = Corruption{at, corrupt_delta,
                                        corrupt_target == "minus" ? CorruptionTarget::Secondary
                                                                  : CorruptionTarget::Primary};
                record.input["corrupt"] = exponent_json(at);
                record.input["corrupt_target"] = corrupt_target;
                record.input["corrupt_delta"] = corrupt_delta;
            }
            std::vector<VerificationReport> reports;
            if (identity == "sherman") {
                reports.push_back(verify_sherman(edges, degree, corruption));
            } else if (identity == "cancellation") {
                reports.push_back(verify_cancellation(edges, degree, corruption));
            } else if (identity == "plus-minus") {
                PlusMinusReports pm = verify_plus_minus_products(edges, degree, corruption);
                reports.push_back(pm.plus);
                reports.push_back(pm.minus);
            } else if (identity == "gen-witt") {
                record.input["kind"] = witt_kind;
                reports.push_back(verify_gen_witt(*parse_witt_kind(witt_kind), edges, degree, corruption));
            } else {
                reports.push_back(verify_witt_classical(edges, degree, corruption));
            }
            for (const VerificationReport &r : reports) {
                record.add(r.identity, r.passed ? "pass" : "fail");
                if (!r.passed && !record.mismatch) {
                    record.mismatch = mismatch_json(r);
                    record.status = "fail";
                    code = exit_fail;
                }
            }
        }
    } catch (const ResourceLimitError &e) {
        record.status = "error";
        record.notices.push_back(e.what());
        emit();
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        record.status = "error";
        record.notices.push_back(e.what());
        emit();
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error &e) {
        // IntegralityError / ConsistencyError: an internal bug signal.
        record.status = "error";
        record.notices.push_back(e.what());
        emit();
        err << "internal error: " << e.what() << '\n';
        return exit_fail;
    }
    emit();
    return code;
}

inline int run(int argc, char **argv, std::ostream &out = std::cout, std::ostream &err = std::cerr)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(std::move(args), out, err);
}

} // namespace wittpaths::cli

#endif
