#ifndef WRHERMITE_TOOLS_CLI_HPP
#define WRHERMITE_TOOLS_CLI_HPP

#include "verify_suite.hpp"
#include "wrhermite/wrhermite.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrhermite::cli {

enum ExitCode : int { ok = 0, math_violation = 1, usage_error = 2, numerical_failure = 3 };

inline constexpr const char* schema = "wrhermite/1";

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

/// Fixed 12-significant-digit rendering used for every floating value.
inline std::string fmt12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

inline double round12(double v) { return std::strtod(fmt12(v).c_str(), nullptr); }

inline Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("malformed partition '" + text + "'");
        parts.push_back(std::stoi(item));
    }
    if (parts.empty())
        throw UsageError("malformed partition '" + text + "'");
    try {
        Partition p(parts);
        if (p.empty())
            throw UsageError("partition must have a positive part");
        return p;
    } catch (const std::invalid_argument& e) {
        throw UsageError("malformed partition '" + text + "': " + e.what());
    }
}

inline Json partition_json(const Partition& p)
{
    Json arr = Json::array();
    for (int v : p)
        arr.push_back(v);
    return arr;
}

inline std::string partition_label(const Partition& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.length(); ++i)
        s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

/// RFC-4180 field quoting.
inline std::string csv_field(const std::string& f)
{
    if (f.find_first_of(",\"\r\n") == std::string::npos)
        return f;
    std::string out = "\"";
    for (char c : f) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline void csv_row(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i)
        out << (i ? "," : "") << csv_field(fields[i]);
    out << "\r\n";
}

struct GlobalOptions {
    std::string format;
    double tol = 1e-7;
    int jobs = 1;
};

inline std::string resolved_format(const GlobalOptions& g, const char* fallback)
{
    return g.format.empty() ? fallback : g.format;
}

// ---- expand ---------------------------------------------------------------

struct ExpandOptions {
    std::string partition;
    int q = 2;
    std::string basis = "monomial";
    std::string method = "wronskian";
};

inline BasisExpansion compute_expansion(const Partition& lambda, int q, const std::string& basis,
                                        const std::string& method)
{
    if (q < 2)
        throw UsageError("--q must be at least 2");
    if (method == "kostka" && basis != "hermite")
        throw UsageError("method kostka requires --basis hermite");
    if (method == "kostka")
        return q == 2 ? he_lambda_hermite_expansion(lambda) : q_lambda_expansion(lambda, q);
    BasisExpansion mono = method == "wronskian"
                              ? monomial_expansion(q == 2 ? he_lambda_wronskian(lambda)
                                                          : q_lambda_wronskian(lambda, q),
                                                   q)
                              : q_lambda_monomial_coeffs(lambda, q);
    return basis == "hermite" ? base_change(mono, q) : mono;
}

inline int cmd_expand(const ExpandOptions& o, const GlobalOptions& g, std::ostream& out)
{
    const Partition lambda = parse_partition(o.partition);
    const BasisExpansion e = compute_expansion(lambda, o.q, o.basis, o.method);
    const std::string format = resolved_format(g, "json");
    if (format == "csv") {
        csv_row(out, {"k", "power", "coefficient"});
        for (std::size_t k = 0; k < e.coeffs.size(); ++k)
            csv_row(out, {std::to_string(k), std::to_string(e.degree - e.stride * static_cast<int>(k)),
                          e.coeffs[k].str()});
        return ok;
    }
    if (format == "text") {
        const char* family = e.stride == 2 ? "He_" : "Q_";
        std::string line;
        for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
            if (e.coeffs[k] == 0)
                continue;
            const int power = e.degree - e.stride * static_cast<int>(k);
            line += (line.empty() ? "" : " + ") + e.coeffs[k].str() + "*" +
                    (e.basis == Basis::hermite_like ? family + std::to_string(power)
                                                    : "x^" + std::to_string(power));
        }
        out << line << "\n";
        return ok;
    }
    Json j;
    j["schema"] = schema;
    j["command"] = "expand";
    j["partition"] = partition_json(lambda);
    j["n"] = e.degree;
    j["q"] = o.q;
    j["basis"] = o.basis;
    j["method"] = o.method;
    Json coeffs = Json::array(), powers = Json::array();
    for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
        coeffs.push_back(e.coeffs[k].str());
        powers.push_back(e.degree - e.stride * static_cast<int>(k));
    }
    j["coefficients"] = coeffs;
    j["powers"] = powers;
    out << j.dump() << "\n";
    return ok;
}

// ---- verify ---------------------------------------------------------------

struct VerifyOptions {
    int n_max = 0;
    int q = 2;
    std::string checks = "all";
};

inline int cmd_verify(const VerifyOptions& o, const GlobalOptions& g, std::ostream& out)
{
    if (o.n_max < 1)
        throw UsageError("--n-max must be at least 1");
    if (o.q < 2)
        throw UsageError("--q must be at least 2");
    std::vector<const CheckSpec*> selected;
    if (o.checks == "all") {
        for (const auto& c : all_checks())
            selected.push_back(&c);
    } else {
        std::stringstream ss(o.checks);
        std::string name;
        while (std::getline(ss, name, ',')) {
            const CheckSpec* spec = find_check(name);
            if (!spec)
                throw UsageError("unknown check '" + name + "'");
            selected.push_back(spec);
        }
        if (selected.empty())
            throw UsageError("no checks selected");
    }

    const CheckContext ctx{o.q, g.tol};
    std::vector<CheckResult> results;
    for (const CheckSpec* spec : selected)
        results.push_back(run_check(*spec, o.n_max, ctx, g.jobs));
    bool all_ok = true;
    for (const auto& r : results)
        all_ok = all_ok && r.ok();

    const std::string format = resolved_format(g, "text");
    auto unit = [](const CheckResult& r) { return r.scope == Scope::degrees ? "degrees" : "partitions"; };
    if (format == "json") {
        Json j;
        j["schema"] = schema;
        j["command"] = "verify";
        j["n_max"] = o.n_max;
        j["q"] = o.q;
        Json arr = Json::array();
        for (const auto& r : results) {
            Json c;
            c["name"] = r.name;
            c["unit"] = unit(r);
            c["checked"] = r.checked;
            c["failed"] = r.failures.size();
            Json fails = Json::array();
            for (const auto& f : r.failures)
                fails.push_back(Json{{"subject", f.subject}, {"detail", f.detail}});
            c["failures"] = fails;
            arr.push_back(c);
        }
        j["checks"] = arr;
        j["ok"] = all_ok;
        out << j.dump() << "\n";
    } else if (format == "csv") {
        csv_row(out, {"check", "unit", "checked", "failed", "first_failure"});
        for (const auto& r : results)
            csv_row(out, {r.name, unit(r), std::to_string(r.checked), std::to_string(r.failures.size()),
                          r.ok() ? "" : r.failures.front().subject + ": " + r.failures.front().detail});
    } else {
        for (const auto& r : results) {
            if (r.ok()) {
                out << r.name << ": " << r.checked << " " << unit(r) << " OK\n";
            } else {
                out << r.name << ": FAILED " << r.failures.size() << " of " << r.checked << " " << unit(r) << "\n";
                for (const auto& f : r.failures)
                    out << "  " << f.subject << " q=" << o.q << ": " << f.detail << "\n";
            }
        }
    }
    return all_ok ? ok : math_violation;
}

// ---- bounds / roots ---------------------------------------------------------

struct PartitionOptions {
    std::string partition;
    int q = 2;
};

inline ExactPoly polynomial_for(const Partition& lambda, int q)
{
    if (q < 2)
        throw UsageError("--q must be at least 2");
    return q == 2 ? he_lambda_wronskian(lambda) : q_lambda_wronskian(lambda, q);
}

inline int cmd_bounds(const PartitionOptions& o, const GlobalOptions& g, std::ostream& out)
{
    const Partition lambda = parse_partition(o.partition);
    if (o.q < 2)
        throw UsageError("--q must be at least 2");
    const BoundReport rep = verify_bounds(lambda, o.q, g.tol);
    const std::string format = resolved_format(g, "json");
    if (format == "csv") {
        csv_row(out, {"bound", "observed", "value", "observed_max", "margin", "roots_checked", "strict", "violated"});
        for (const auto& c : rep.checks)
            csv_row(out, {c.bound, c.observed, fmt12(c.value), fmt12(c.observed_max), fmt12(c.margin()),
                          std::to_string(c.roots_checked), c.strict ? "true" : "false",
                          c.violated ? "true" : "false"});
    } else {
        Json j;
        j["schema"] = schema;
        j["command"] = "bounds";
        j["partition"] = partition_json(lambda);
        j["n"] = lambda.weight();
        j["q"] = o.q;
        j["tol"] = g.tol;
        Json b = Json::object();
        for (const auto& [name, v] : rep.bounds)
            b[name] = round12(v);
        j["bounds"] = b;
        j["observed"] = Json{{"max_modulus", round12(rep.max_modulus)},
                             {"max_real_modulus", round12(rep.max_real_modulus)},
                             {"max_imag_modulus", round12(rep.max_imag_modulus)},
                             {"max_star_modulus", round12(rep.max_star_modulus)}};
        Json checks = Json::array();
        for (const auto& c : rep.checks)
            checks.push_back(Json{{"bound", c.bound},
                                  {"observed", c.observed},
                                  {"value", round12(c.value)},
                                  {"observed_max", round12(c.observed_max)},
                                  {"margin", round12(c.margin())},
                                  {"roots_checked", c.roots_checked},
                                  {"strict", c.strict},
                                  {"violated", c.violated}});
        j["checks"] = checks;
        j["ok"] = rep.ok();
        out << j.dump() << "\n";
    }
    return rep.ok() ? ok : math_violation;
}

inline int cmd_roots(const PartitionOptions& o, const GlobalOptions& g, std::ostream& out)
{
    const Partition lambda = parse_partition(o.partition);
    const RootReport rep = classify(all_roots(polynomial_for(lambda, o.q)), o.q, g.tol);
    const std::string format = resolved_format(g, "json");
    if (format == "csv") {
        csv_row(out, {"re", "im", "modulus", "residual", "kind", "ray"});
        for (std::size_t i = 0; i < rep.roots.size(); ++i)
            csv_row(out, {fmt12(rep.roots[i].real()), fmt12(rep.roots[i].imag()), fmt12(std::abs(rep.roots[i])),
                          fmt12(rep.residuals[i]), to_string(rep.tags[i].kind),
                          std::to_string(rep.tags[i].ray)});
        return ok;
    }
    Json j;
    j["schema"] = schema;
    j["command"] = "roots";
    j["partition"] = partition_json(lambda);
    j["n"] = lambda.weight();
    j["q"] = o.q;
    j["tol"] = g.tol;
    Json arr = Json::array();
    for (std::size_t i = 0; i < rep.roots.size(); ++i)
        arr.push_back(Json{{"re", round12(rep.roots[i].real())},
                           {"im", round12(rep.roots[i].imag())},
                           {"modulus", round12(std::abs(rep.roots[i]))},
                           {"residual", round12(rep.residuals[i])},
                           {"kind", to_string(rep.tags[i].kind)},
                           {"ray", rep.tags[i].ray}});
    j["roots"] = arr;
    out << j.dump() << "\n";
    return ok;
}

// ---- table ------------------------------------------------------------------

struct TableOptions {
    std::string kind;
    int n = 0;
};

inline int cmd_table(const TableOptions& o, const GlobalOptions& g, std::ostream& out)
{
    if (o.kind != "character" && o.kind != "kostka")
        throw UsageError("table kind must be character or kostka");
    if (o.n > 8)
        throw UsageError("table too large");
    if (o.n < 1)
        throw UsageError("table size must be at least 1");
    // Rows are lambda in canonical order. Kostka columns use the same order
    // (the matrix is then unitriangular); character columns list the classes
    // from the identity (1^n) up to the n-cycle, as in classical tables.
    const auto parts = partitions_of(o.n);
    std::vector<Partition> cols = parts;
    if (o.kind == "character")
        std::reverse(cols.begin(), cols.end());
    std::vector<std::vector<std::string>> rows;
    for (const auto& lambda : parts) {
        std::vector<std::string> row;
        for (const auto& mu : cols)
            row.push_back((o.kind == "character" ? character(lambda, mu) : kostka(lambda, mu)).str());
        rows.push_back(std::move(row));
    }
    const std::string format = resolved_format(g, "json");
    if (format == "csv") {
        std::vector<std::string> header{"lambda"};
        for (const auto& mu : cols)
            header.push_back(partition_label(mu));
        csv_row(out, header);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            std::vector<std::string> fields{partition_label(parts[i])};
            fields.insert(fields.end(), rows[i].begin(), rows[i].end());
            csv_row(out, fields);
        }
        return ok;
    }
    Json j;
    j["schema"] = schema;
    j["command"] = "table";
    j["kind"] = o.kind;
    j["n"] = o.n;
    Json labels = Json::array();
    for (const auto& p : parts)
        labels.push_back(partition_json(p));
    j["partitions"] = labels;
    Json col_labels = Json::array();
    for (const auto& p : cols)
        col_labels.push_back(partition_json(p));
    j["columns"] = col_labels;
    j["rows"] = rows;
    out << j.dump() << "\n";
    return ok;
}

// ---- entry point --------------------------------------------------------------

/// Parses argv and runs one subcommand. Exit codes: 0 success, 1 mathematical
/// violation, 2 usage error, 3 numerical failure.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wronskian Hermite polynomials: construction, expansion and root bounds", "wrhermite"};
    app.require_subcommand(1);
    // Global flags may also follow the subcommand.
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--tol", g.tol, "Classification and violation tolerance")->check(CLI::PositiveNumber);
    app.add_option("--jobs", g.jobs, "Worker threads for verification sweeps")->check(CLI::PositiveNumber);

    ExpandOptions eo;
    auto* expand = app.add_subcommand("expand", "Coefficients of He_lambda / Q_lambda in a basis");
    expand->add_option("-p,--partition", eo.partition, "Comma-separated parts")->required();
    expand->add_option("--q", eo.q, "Stride q (2: Hermite)");
    expand->add_option("--basis", eo.basis)->check(CLI::IsMember({"monomial", "hermite"}));
    expand->add_option("--method", eo.method)->check(CLI::IsMember({"wronskian", "character", "kostka"}));

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Run identity and bound checks over all partitions up to n-max");
    verify->add_option("--n-max", vo.n_max)->required();
    verify->add_option("--q", vo.q);
    verify->add_option("--checks", vo.checks, "Comma list of checks, or all");

    PartitionOptions bo;
    auto* bounds = app.add_subcommand("bounds", "Root-modulus bounds against computed roots");
    bounds->add_option("-p,--partition", bo.partition)->required();
    bounds->add_option("--q", bo.q);

    PartitionOptions ro;
    auto* roots = app.add_subcommand("roots", "Classified roots of He_lambda / Q_lambda");
    roots->add_option("-p,--partition", ro.partition)->required();
    roots->add_option("--q", ro.q);

    TableOptions to;
    auto* table = app.add_subcommand("table", "Character or Kostka table of S_n");
    table->add_option("kind", to.kind)->required();
    table->add_option("n", to.n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*expand)
            return cmd_expand(eo, g, out);
        if (*verify)
            return cmd_verify(vo, g, out);
        if (*bounds)
            return cmd_bounds(bo, g, out);
        if (*roots)
            return cmd_roots(ro, g, out);
        return cmd_table(to, g, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const RootFindingError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return numerical_failure;
    } catch (const InexactDivision& e) {
        err << "internal error: " << e.what() << "\n";
        return math_violation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace wrhermite::cli

#endif
