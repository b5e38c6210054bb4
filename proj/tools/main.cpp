// phidescent: decides insolubility of c*y^l = Phi_p(x) and inspects the
// machinery behind the decision (Gauss pairs, class groups, brute force).
//
// Exit codes: 0 proven insoluble / success, 10 inconclusive, 2 usage error,
// 1 internal failure.

#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "phidescent/phidescent.hpp"
#include "phidescent/render.hpp"
#include "phidescent/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 10;

constexpr const char* kVersion = "phi-descent 1.0.0";

struct RunConfig {
    std::string format = "text"; // json, csv, text
    std::string out_path;
    long disc_bound = 1'000'000;
    bool meta = false;
};

void emit(const RunConfig& cfg, const std::string& command,
          const std::string& body) {
    std::string payload;
    if (cfg.meta && cfg.format == "text")
        payload = std::string("# ") + kVersion + " " + command + "\n";
    payload += body;
    if (cfg.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out)
        throw phidescent::InvalidArgument("cannot open output file: " +
                                          cfg.out_path);
    out << payload;
}

std::string dump(const phidescent::cli::json& j) { return j.dump(2) + "\n"; }

std::vector<long> parse_l_set(const std::string& spec) {
    std::vector<long> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const long v = std::stol(item, &pos);
        if (pos != item.size())
            throw phidescent::InvalidArgument("bad l-set entry: " + item);
        if (v < 2)
            throw phidescent::InvalidArgument(
                "l-set entries must be >= 2, got " + item);
        out.push_back(v);
    }
    if (out.empty())
        throw phidescent::InvalidArgument("l-set must not be empty");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void reject_csv(const RunConfig& cfg, const char* cmd) {
    if (cfg.format == "csv")
        throw phidescent::InvalidArgument(
            std::string(cmd) + ": csv output is only defined for scan");
}

int cmd_check(const RunConfig& cfg, long p, long c, long l) {
    using namespace phidescent;
    reject_csv(cfg, "check");
    const ntheory::Triple t(p, c, l);
    const auto v = criteria::verdict(t, mpz_class(cfg.disc_bound));
    if (cfg.format == "json")
        emit(cfg, "check", dump(cli::to_json(v)));
    else
        emit(cfg, "check", cli::verdict_text(v));
    return v.status == criteria::Status::NoSolutions ? kExitOk
                                                     : kExitInconclusive;
}

int cmd_scan(const RunConfig& cfg, long p_max, long c_max,
             const std::string& l_spec) {
    using namespace phidescent;
    if (p_max < 5)
        throw InvalidArgument("scan: --p-max must be >= 5");
    if (c_max < 3)
        throw InvalidArgument("scan: --c-max must be >= 3");
    if (p_max > 1'000'000 || c_max > 1'000'000)
        throw InvalidArgument("scan: bounds above 10^6 are not supported");
    const auto l_set = parse_l_set(l_spec);

    std::vector<cli::ScanRow> rows;
    for (long p = 5; p <= p_max; ++p) {
        if (!ntheory::is_prime(mpz_class(p))) continue;
        for (long c = 3; c <= c_max; c += 2) {
            if (c == p || !ntheory::is_prime(mpz_class(c))) continue;
            for (long l : l_set) {
                const ntheory::Triple t(p, c, l);
                const auto v = criteria::verdict(t, mpz_class(cfg.disc_bound));
                rows.push_back(cli::ScanRow{p, c, l, v.status, v.criterion});
            }
        }
    }
    if (cfg.format == "json")
        emit(cfg, "scan", dump(cli::scan_to_json(rows)));
    else if (cfg.format == "csv")
        emit(cfg, "scan", cli::scan_csv(rows));
    else
        emit(cfg, "scan", cli::scan_text(rows));
    return kExitOk;
}

int cmd_gauss(const RunConfig& cfg, long p) {
    using namespace phidescent;
    reject_csv(cfg, "gauss");
    const auto gp = gauss::gauss_pair(p);
    if (cfg.format == "json")
        emit(cfg, "gauss", dump(cli::to_json(gp)));
    else
        emit(cfg, "gauss", cli::gauss_text(gp));
    return kExitOk;
}

int cmd_classgroup(const RunConfig& cfg, long p) {
    using namespace phidescent;
    reject_csv(cfg, "classgroup");
    const auto d = quadforms::discriminant(p);
    const auto group = quadforms::class_group(d, mpz_class(cfg.disc_bound));
    if (cfg.format == "json")
        emit(cfg, "classgroup", dump(cli::to_json(group)));
    else
        emit(cfg, "classgroup", cli::class_group_text(group));
    return kExitOk;
}

int cmd_search(const RunConfig& cfg, long p, long c, long l, long x_bound) {
    using namespace phidescent;
    reject_csv(cfg, "search");
    const ntheory::Triple t(p, c, l);
    const auto records = search::search_solutions(t, x_bound);
    if (cfg.format == "json")
        emit(cfg, "search", dump(cli::search_to_json(t, x_bound, records)));
    else
        emit(cfg, "search", cli::search_text(t, x_bound, records));
    return kExitOk;
}

int cmd_selftest(const RunConfig& cfg) {
    const auto results = phidescent::selftest::run_all();
    std::string body;
    bool all_passed = true;
    for (const auto& r : results) {
        body += std::string(r.passed ? "PASS" : "FAIL") + "  " + r.name +
                "  [" + r.detail + "]\n";
        all_passed = all_passed && r.passed;
    }
    body += all_passed ? "all acceptance checks passed\n"
                       : "ACCEPTANCE FAILURES PRESENT\n";
    emit(cfg, "selftest", body);
    return all_passed ? kExitOk : kExitInternal;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"insolubility certificates for c*y^l = Phi_p(x)"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "write output to a file");
    app.add_option("--disc-bound", cfg.disc_bound,
                   "largest |D| for class group construction")
        ->envname("PHI_DESCENT_DISC_BOUND")
        ->check(CLI::PositiveNumber);
    app.add_flag("--meta", cfg.meta, "provenance header (text mode only)");

    long p = 0, c = 0, l = 0;
    long p_max = 0, c_max = 0, x_bound = 100;
    std::string l_spec;

    auto* check = app.add_subcommand("check", "decide one triple (p, c, l)");
    check->fallthrough();
    check->add_option("--p", p, "prime p >= 5")->required();
    check->add_option("--c", c, "odd prime c != p")->required();
    check->add_option("--l", l, "exponent l >= 2")->required();

    auto* scan = app.add_subcommand("scan", "decide every triple in a box");
    scan->fallthrough();
    scan->add_option("--p-max", p_max, "largest p")->required();
    scan->add_option("--c-max", c_max, "largest c")->required();
    scan->add_option("--l-set", l_spec, "comma separated exponents")->required();

    auto* gauss_cmd = app.add_subcommand("gauss", "print the Gauss pair for p");
    gauss_cmd->fallthrough();
    gauss_cmd->add_option("--p", p, "prime p >= 5")->required();

    auto* classgroup = app.add_subcommand(
        "classgroup", "print the form class group of Q(sqrt(delta p))");
    classgroup->fallthrough();
    classgroup->add_option("--p", p, "odd prime")->required();

    auto* search_cmd =
        app.add_subcommand("search", "brute-force scan for solutions");
    search_cmd->fallthrough();
    search_cmd->add_option("--p", p, "prime p >= 5")->required();
    search_cmd->add_option("--c", c, "odd prime c != p")->required();
    search_cmd->add_option("--l", l, "exponent l >= 2")->required();
    search_cmd->add_option("--x-bound", x_bound, "scan |x| <= x_bound")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    selftest->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(cfg, p, c, l);
        if (scan->parsed()) return cmd_scan(cfg, p_max, c_max, l_spec);
        if (gauss_cmd->parsed()) return cmd_gauss(cfg, p);
        if (classgroup->parsed()) return cmd_classgroup(cfg, p);
        if (search_cmd->parsed()) return cmd_search(cfg, p, c, l, x_bound);
        if (selftest->parsed()) return cmd_selftest(cfg);
        std::cerr << "no subcommand given\n";
        return kExitUsage;
    } catch (const phidescent::BoundExceeded& e) {
        std::cerr << "error: " << e.what()
                  << " (raise --disc-bound or PHI_DESCENT_DISC_BOUND)\n";
        return kExitUsage;
    } catch (const phidescent::InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const phidescent::Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
