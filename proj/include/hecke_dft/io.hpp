// io.hpp - text formats for spectra, kernels, signals and verification reports
//
// Numbers are written with std::to_chars (shortest general form at a fixed
// number of significant digits), so output never depends on the C locale.
// JSON is parsed with nlohmann::json; CSV is RFC-style with a header row.

#pragma once

#include "hecke_dft/transform.hpp"
#include "hecke_dft/verification.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace hecke_dft::io {

enum class Format { json, csv };

inline Format parse_format(std::string_view name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected json or csv)");
}

/// Malformed input; the message names the offending entry.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Significant digits in [1, 17] rendered in the shortest general form.
inline std::string format_number(double value, int precision) {
    if (precision < 1 || precision > 17) throw std::invalid_argument("precision must lie in [1, 17]");
    if (!std::isfinite(value)) throw std::domain_error("non-finite value cannot be serialized");
    if (value == 0.0) value = 0.0;  // drop the sign of negative zero
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, precision);
    if (res.ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Spectrum

inline std::string write_spectrum(const SpectrumTable& table, Format format, int precision) {
    const auto num = [precision](double v) { return format_number(v, precision); };
    std::ostringstream os;
    if (format == Format::csv) {
        os << "m,xi,epsilon,eigenvalue,delta_hat\n";
        for (const auto& p : table.points()) {
            os << p.m << ',' << num(p.xi) << ',' << p.parity_epsilon << ',' << num(p.eigenvalue) << ','
               << num(p.dual_weight) << '\n';
        }
        return os.str();
    }
    os << "{\"M\":" << table.config().M() << ",\"tau\":" << num(table.config().tau()) << ",\"points\":[";
    bool first = true;
    for (const auto& p : table.points()) {
        if (!first) os << ',';
        first = false;
        os << "{\"m\":" << p.m << ",\"xi\":" << num(p.xi) << ",\"epsilon\":" << p.parity_epsilon
           << ",\"eigenvalue\":" << num(p.eigenvalue) << ",\"delta_hat\":" << num(p.dual_weight) << '}';
    }
    os << "]}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Kernel

/// Plain-data view of a kernel as it appears on disk. The CSV form does not carry tau.
struct KernelTable {
    int M = 0;
    std::optional<double> tau;
    std::vector<std::vector<double>> phi;  // phi[m][n]
    std::vector<double> delta;
    std::vector<double> delta_hat;

    bool operator==(const KernelTable&) const = default;
};

inline KernelTable to_table(const KernelMatrix& k) {
    KernelTable t;
    t.M = k.cfg.M();
    t.tau = k.cfg.tau();
    for (int m = 0; m < k.size(); ++m) {
        std::vector<double> row;
        for (int n = 0; n < k.size(); ++n) row.push_back(k.phi(m, n));
        t.phi.push_back(std::move(row));
        t.delta.push_back(k.node_weights(m));
        t.delta_hat.push_back(k.dual_weights(m));
    }
    return t;
}

inline std::string write_kernel(const KernelTable& t, Format format, int precision) {
    const auto num = [precision](double v) { return format_number(v, precision); };
    std::ostringstream os;
    const int size = t.M + 1;
    if (format == Format::csv) {
        os << "row,delta,delta_hat";
        for (int n = 0; n < size; ++n) os << ",phi_" << n;
        os << '\n';
        for (int i = 0; i < size; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            os << i << ',' << num(t.delta[idx]) << ',' << num(t.delta_hat[idx]);
            for (double v : t.phi[idx]) os << ',' << num(v);
            os << '\n';
        }
        return os.str();
    }
    auto list = [&](const std::vector<double>& v) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << num(v[i]);
        os << ']';
    };
    os << "{\"M\":" << t.M << ",\"tau\":" << (t.tau ? num(*t.tau) : std::string("null")) << ",\"phi\":[";
    for (std::size_t m = 0; m < t.phi.size(); ++m) {
        if (m) os << ',';
        list(t.phi[m]);
    }
    os << "],\"delta\":";
    list(t.delta);
    os << ",\"delta_hat\":";
    list(t.delta_hat);
    os << "}\n";
    return os.str();
}

namespace detail {

inline std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    for (auto& line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back(std::move(line));
    }
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
}

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

inline double parse_double(std::string_view field, const std::string& where) {
    const std::string s = trim(field);
    double value = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw ParseError(where + ": '" + s + "' is not a number");
    }
    return value;
}

inline double json_number(const nlohmann::json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(where + ": expected a number");
    return v.get<double>();
}

inline nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
}

inline bool looks_like_json(std::string_view text) {
    const auto b = text.find_first_not_of(" \t\r\n");
    return b != std::string_view::npos && (text[b] == '[' || text[b] == '{');
}

}  // namespace detail

inline KernelTable parse_kernel(std::string_view text) {
    KernelTable t;
    if (detail::looks_like_json(text)) {
        const nlohmann::json j = detail::parse_json(text);
        if (!j.is_object()) throw ParseError("kernel: expected a JSON object");
        for (const char* key : {"M", "phi", "delta", "delta_hat"}) {
            if (!j.contains(key)) throw ParseError(std::string("kernel: missing field '") + key + "'");
        }
        if (!j["M"].is_number_integer()) throw ParseError("kernel: field 'M' must be an integer");
        t.M = j["M"].get<int>();
        if (j.contains("tau") && !j["tau"].is_null()) t.tau = detail::json_number(j["tau"], "kernel field 'tau'");
        const auto size = static_cast<std::size_t>(t.M + 1);
        auto vec = [&](const char* key) {
            const auto& a = j[key];
            if (!a.is_array() || a.size() != size) {
                throw ParseError(std::string("kernel: field '") + key + "' must hold M+1 numbers");
            }
            std::vector<double> out;
            for (std::size_t i = 0; i < a.size(); ++i) {
                out.push_back(detail::json_number(a[i], std::string(key) + "[" + std::to_string(i) + "]"));
            }
            return out;
        };
        t.delta = vec("delta");
        t.delta_hat = vec("delta_hat");
        const auto& rows = j["phi"];
        if (!rows.is_array() || rows.size() != size) throw ParseError("kernel: field 'phi' must hold M+1 rows");
        for (std::size_t m = 0; m < size; ++m) {
            if (!rows[m].is_array() || rows[m].size() != size) {
                throw ParseError("kernel: phi[" + std::to_string(m) + "] must hold M+1 numbers");
            }
            std::vector<double> row;
            for (std::size_t n = 0; n < size; ++n) {
                row.push_back(detail::json_number(rows[m][n], "phi[" + std::to_string(m) + "][" + std::to_string(n) + "]"));
            }
            t.phi.push_back(std::move(row));
        }
        return t;
    }
    const auto lines = detail::lines_of(text);
    if (lines.empty()) throw ParseError("kernel: empty CSV");
    const auto header = detail::split(lines[0], ',');
    if (header.size() < 4 || header[0] != "row" || header[1] != "delta" || header[2] != "delta_hat") {
        throw ParseError("kernel: CSV header must start with row,delta,delta_hat");
    }
    const std::size_t size = header.size() - 3;
    if (lines.size() != size + 1) {
        throw ParseError("kernel: expected " + std::to_string(size) + " data rows, found " +
                         std::to_string(lines.size() - 1));
    }
    t.M = static_cast<int>(size) - 1;
    for (std::size_t i = 0; i < size; ++i) {
        const auto fields = detail::split(lines[i + 1], ',');
        const std::string where = "row " + std::to_string(i);
        if (fields.size() != size + 3) throw ParseError(where + ": expected " + std::to_string(size + 3) + " fields");
        if (detail::trim(fields[0]) != std::to_string(i)) throw ParseError(where + ": row index out of sequence");
        t.delta.push_back(detail::parse_double(fields[1], where + " delta"));
        t.delta_hat.push_back(detail::parse_double(fields[2], where + " delta_hat"));
        std::vector<double> row;
        for (std::size_t n = 0; n < size; ++n) {
            row.push_back(detail::parse_double(fields[n + 3], where + " phi_" + std::to_string(n)));
        }
        t.phi.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Signals

inline std::string write_signal(const Signal& s, Format format, int precision) {
    const auto num = [precision](double v) { return format_number(v, precision); };
    std::ostringstream os;
    if (format == Format::csv) {
        os << "re,im\n";
        for (Eigen::Index i = 0; i < s.size(); ++i) os << num(s(i).real()) << ',' << num(s(i).imag()) << '\n';
        return os.str();
    }
    os << '[';
    for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << '[' << num(s(i).real()) << ',' << num(s(i).imag()) << ']';
    }
    os << "]\n";
    return os.str();
}

struct ParsedSignal {
    Signal values;
    Format format = Format::json;
};

/// JSON array of [re, im] pairs, or CSV with header re,im; detected by a leading '['.
inline ParsedSignal parse_signal(std::string_view text) {
    ParsedSignal out;
    std::vector<Complex> values;
    if (detail::looks_like_json(text)) {
        out.format = Format::json;
        const nlohmann::json j = detail::parse_json(text);
        if (!j.is_array()) throw ParseError("signal: expected a JSON array of [re, im] pairs");
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string where = "entry " + std::to_string(i);
            if (!j[i].is_array() || j[i].size() != 2) throw ParseError(where + ": expected an [re, im] pair");
            values.emplace_back(detail::json_number(j[i][0], where + " re"), detail::json_number(j[i][1], where + " im"));
        }
    } else {
        out.format = Format::csv;
        const auto lines = detail::lines_of(text);
        if (lines.empty() || detail::trim(lines[0]) != "re,im") throw ParseError("signal: CSV header must be re,im");
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const std::string where = "entry " + std::to_string(i - 1);
            const auto fields = detail::split(lines[i], ',');
            if (fields.size() != 2) throw ParseError(where + ": expected two fields re,im");
            values.emplace_back(detail::parse_double(fields[0], where + " re"), detail::parse_double(fields[1], where + " im"));
        }
    }
    out.values = Eigen::Map<const Signal>(values.data(), static_cast<Eigen::Index>(values.size()));
    return out;
}

// ---------------------------------------------------------------------------
// Verification reports

inline std::string write_report(const verify::Report& report, const LatticeConfig& cfg, Format format, int precision) {
    const auto num = [precision](double v) { return format_number(v, precision); };
    auto status = [](const verify::Check& c) { return c.passed ? "PASS" : "FAIL"; };
    auto bound = [&](const verify::Check& c) {
        if (c.exact) return std::string("exact");
        return std::string(c.lower_bound ? ">" : "<=") + num(c.tolerance);
    };
    std::ostringstream os;
    if (format == Format::csv) {
        os << "status,suite,check,deviation,bound,note\n";
        for (const auto& c : report.checks) {
            os << status(c) << ',' << c.suite << ',' << c.name << ',' << num(c.deviation) << ',' << bound(c) << ",\""
               << c.note << "\"\n";
        }
        return os.str();
    }
    if (format == Format::json) {
        nlohmann::ordered_json j;
        j["M"] = cfg.M();
        j["tau"] = num(cfg.tau());
        j["xhat_indexing"] = report.xhat_convention;
        j["passed"] = report.passed();
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : report.checks) {
            nlohmann::ordered_json e;
            e["status"] = status(c);
            e["suite"] = c.suite;
            e["check"] = c.name;
            e["deviation"] = num(c.deviation);
            e["bound"] = bound(c);
            e["note"] = c.note;
            j["checks"].push_back(std::move(e));
        }
        return j.dump(2) + "\n";
    }
    return {};
}

/// Human-readable report: one line per check, then the X^ indexing and a summary.
inline std::string write_report_text(const verify::Report& report, int precision) {
    const auto num = [precision](double v) { return format_number(v, precision); };
    std::ostringstream os;
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        failed += !c.passed;
        os << (c.passed ? "PASS " : "FAIL ") << c.suite << '.' << c.name << "  ";
        if (c.exact) {
            os << "mismatches=" << num(c.deviation) << " (exact)";
        } else {
            os << (c.lower_bound ? "value=" : "deviation=") << num(c.deviation) << (c.lower_bound ? " > " : " <= ")
               << num(c.tolerance);
        }
        os << "  " << c.note << '\n';
    }
    os << "xhat-indexing: " << report.xhat_convention << '\n';
    os << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                       : std::to_string(failed) + " of " + std::to_string(report.checks.size()) + " checks failed")
       << '\n';
    return os.str();
}

}  // namespace hecke_dft::io
