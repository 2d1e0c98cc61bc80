// hecke-dft: spectra, kernels and transforms of the deformed (M+1)-point DFT,
// plus the verification suites.
//
// Exit codes: 0 ok, 1 verification failure, 2 configuration error,
// 3 signal length mismatch, 4 parse error.

#include "hecke_dft/io.hpp"
#include "hecke_dft/transform.hpp"
#include "hecke_dft/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace io = hecke_dft::io;
namespace verify = hecke_dft::verify;

enum Exit : int { ok = 0, verification_failed = 1, config_error = 2, length_mismatch = 3, parse_error = 4 };

struct CommonFlags {
    int M = 0;
    double tau = 0.0;
    std::string format = "json";
    int precision = 15;
};

void add_common(CLI::App& cmd, CommonFlags& flags, bool lattice_required) {
    auto* m = cmd.add_option("--M", flags.M, "lattice size, M > 1");
    auto* t = cmd.add_option("--tau", flags.tau, "deformation parameter in (0, 1)");
    if (lattice_required) {
        m->required();
        t->required();
    }
    cmd.add_option("--precision", flags.precision, "significant digits of numeric output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

verify::KernelTamper parse_tamper(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("--tamper-kernel expects m,n,delta");
    verify::KernelTamper tamper;
    tamper.m = std::stoi(parts[0]);
    tamper.n = std::stoi(parts[1]);
    tamper.delta = std::stod(parts[2]);
    return tamper;
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& entries) {
    std::map<std::string, double> out;
    const auto& names = verify::suite_names();
    for (const auto& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--tol expects suite=value (got '" + entry + "')");
        const std::string suite = entry.substr(0, eq);
        if (std::find(names.begin(), names.end(), suite) == names.end()) {
            throw std::invalid_argument("--tol names unknown suite '" + suite + "'");
        }
        const double value = std::stod(entry.substr(eq + 1));
        if (!(value > 0.0)) throw std::invalid_argument("--tol value for '" + suite + "' must be positive");
        out[suite] = value;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Deformed discrete Fourier transform of the A1 double affine Hecke algebra at q = 1"};
    app.require_subcommand(1);

    CommonFlags spectrum_flags;
    auto* spectrum = app.add_subcommand("spectrum", "Bethe roots, parities, eigenvalues and dual weights");
    add_common(*spectrum, spectrum_flags, true);
    spectrum->add_option("--format", spectrum_flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CommonFlags kernel_flags;
    auto* kernel = app.add_subcommand("kernel", "Kernel matrix Phi with node and dual weights");
    add_common(*kernel, kernel_flags, true);
    kernel->add_option("--format", kernel_flags.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CommonFlags transform_flags;
    std::string input_path;
    std::string direction = "forward";
    auto* transform = app.add_subcommand("transform", "Apply the forward or inverse transform to a signal file");
    add_common(*transform, transform_flags, true);
    transform->add_option("--input", input_path, "signal file (JSON [[re, im], ...] or CSV re,im)")->required();
    transform->add_option("--direction", direction, "forward or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}))
        ->capture_default_str();

    CommonFlags verify_flags;
    verify_flags.M = 4;
    verify_flags.tau = 0.5;
    verify_flags.format = "text";
    std::string suite = "all";
    long long window = 0;
    std::uint64_t seed = 1;
    std::vector<std::string> tolerance_args;
    std::string tamper_arg;
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and report deviations");
    add_common(*verify_cmd, verify_flags, false);
    verify_cmd->get_option("--M")->capture_default_str();
    verify_cmd->get_option("--tau")->capture_default_str();
    verify_cmd->add_option("--format", verify_flags.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.push_back("all");
    verify_cmd->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suite_choices))->capture_default_str();
    verify_cmd->add_option("--window", window, "window radius N for lattice identities (default 6M)")
        ->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    verify_cmd->add_option("--tol", tolerance_args, "tolerance override suite=value (repeatable)");
    verify_cmd->add_option("--tamper-kernel", tamper_arg, "perturb kernel entry m,n by delta")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return config_error;
    }

    std::cout.imbue(std::locale::classic());
    try {
        if (*spectrum) {
            const hecke_dft::LatticeConfig cfg(spectrum_flags.M, spectrum_flags.tau);
            const hecke_dft::SpectrumTable table(cfg);
            std::cout << io::write_spectrum(table, io::parse_format(spectrum_flags.format), spectrum_flags.precision);
            return ok;
        }
        if (*kernel) {
            const hecke_dft::LatticeConfig cfg(kernel_flags.M, kernel_flags.tau);
            const auto k = hecke_dft::spherical_kernel(cfg);
            std::cout << io::write_kernel(io::to_table(k), io::parse_format(kernel_flags.format), kernel_flags.precision);
            return ok;
        }
        if (*transform) {
            const hecke_dft::LatticeConfig cfg(transform_flags.M, transform_flags.tau);
            const std::string text = read_file(input_path);
            io::ParsedSignal parsed;
            try {
                parsed = io::parse_signal(text);
            } catch (const io::ParseError& e) {
                std::cerr << "parse error in '" << input_path << "': " << e.what() << '\n';
                return parse_error;
            }
            const auto expected = static_cast<Eigen::Index>(cfg.M()) + 1;
            if (parsed.values.size() != expected) {
                std::cerr << "length mismatch: expected M+1 = " << expected << " values (indices 0.." << expected - 1
                          << "), got " << parsed.values.size();
                if (parsed.values.size() < expected) {
                    std::cerr << "; first missing index " << parsed.values.size();
                } else {
                    std::cerr << "; first extra index " << expected;
                }
                std::cerr << '\n';
                return length_mismatch;
            }
            const auto k = hecke_dft::spherical_kernel(cfg);
            const hecke_dft::Signal out =
                direction == "forward" ? hecke_dft::forward(k, parsed.values) : hecke_dft::inverse(k, parsed.values);
            std::cout << io::write_signal(out, parsed.format, transform_flags.precision);
            return ok;
        }
        if (*verify_cmd) {
            const hecke_dft::LatticeConfig cfg(verify_flags.M, verify_flags.tau);
            verify::Options opts;
            opts.window = window;
            opts.seed = seed;
            opts.tolerance = parse_tolerances(tolerance_args);
            if (!tamper_arg.empty()) opts.tamper = parse_tamper(tamper_arg);
            const verify::Report report = verify::run_suite(suite, cfg, opts);
            if (verify_flags.format == "text") {
                std::cout << io::write_report_text(report, verify_flags.precision);
            } else {
                std::cout << io::write_report(report, cfg, io::parse_format(verify_flags.format), verify_flags.precision);
            }
            return report.passed() ? ok : verification_failed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return config_error;
    } catch (const std::out_of_range& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return config_error;
    }
    return config_error;
}
