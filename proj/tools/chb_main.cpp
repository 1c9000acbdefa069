// chb: exact Castelnuovo-Halphen bound calculator.
//
// Subcommands: bound, ci, sharp, regime, hilbert, scan. All arithmetic is
// exact rational/big-integer; outputs are deterministic for identical inputs.
// Exit codes: 0 success, 2 domain/precondition error, 3 strict-regime
// failure, 4 property violation (scan check or failed sharpness).

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chb/chb.hpp"

using namespace chb;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitDomainError = 2;
constexpr int kExitRegime = 3;
constexpr int kExitViolation = 4;

struct GlobalOptions {
    std::string format = "table";
    bool strict_regime = false;
    bool trace = false;
};

// Raw string values of the numeric options a subcommand accepted; only the
// ones the user actually set are kept.
class ParamBag {
public:
    void attach(CLI::App* cmd, const std::vector<std::string>& names,
                const std::string& range_hint = "") {
        for (const auto& name : names) {
            storage_[name];
            std::string help = range_hint.empty()
                                   ? "integer value"
                                   : "integer value" + range_hint;
            cmd->add_option("--" + name, storage_[name], help);
        }
    }

    bool has(const std::string& name) const {
        auto it = storage_.find(name);
        return it != storage_.end() && !it->second.empty();
    }

    Integer integer(const std::string& name) const {
        if (!has(name))
            throw DomainError("missing required option --" + name);
        return parse_integer(storage_.at(name));
    }

    std::vector<std::pair<std::string, Range>> ranges() const {
        std::vector<std::pair<std::string, Range>> out;
        for (const auto& [name, value] : storage_)
            if (!value.empty())
                out.emplace_back(name, parse_range(value));
        return out;
    }

    std::vector<Integer> flag_degrees() const {
        std::vector<Integer> out;
        for (int i = 1; i <= 6; ++i) {
            std::string key = "s" + std::to_string(i);
            if (!has(key))
                break;
            out.push_back(integer(key));
        }
        return out;
    }

private:
    std::map<std::string, std::string> storage_;
};

ordered_json rational_json(const Rational& value) {
    return ordered_json{{"num", value.num().get_str()}, {"den", value.den().get_str()}};
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
            out += sep;
        out += parts[i];
    }
    return out;
}

void emit_kv_table(const std::vector<std::pair<std::string, std::string>>& fields) {
    std::size_t width = 0;
    for (const auto& [key, value] : fields)
        width = std::max(width, key.size());
    for (const auto& [key, value] : fields)
        std::cout << key << std::string(width - key.size() + 2, ' ') << value << "\n";
}

void emit_csv_line(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            std::cout << ',';
        bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
        if (!quote) {
            std::cout << cells[i];
            continue;
        }
        std::cout << '"';
        for (char c : cells[i]) {
            if (c == '"')
                std::cout << '"';
            std::cout << c;
        }
        std::cout << '"';
    }
    std::cout << "\n";
}

// ---------------------------------------------------------------- scan/bound

int finish_scan(const ScanResult& result, const GlobalOptions& global) {
    if (global.format == "json") {
        std::cout << render_json(result);
    } else if (global.format == "csv") {
        std::cout << render_csv(result);
        std::cerr << render_summary(result);
    } else {
        std::cout << render_table(result);
    }
    if (!result.violations.empty())
        return kExitViolation;
    if (global.strict_regime)
        for (const auto& row : result.rows)
            if (row.regime && !row.regime->satisfied)
                return kExitRegime;
    return 0;
}

void warn_regimes(const ScanResult& result, const GlobalOptions& global) {
    if (global.strict_regime)
        return;
    for (const auto& row : result.rows)
        if (row.regime && !row.regime->satisfied)
            std::cerr << "warning: regime not satisfied (failed: "
                      << join(row.regime->failed_clauses(), "; ") << ")\n";
}

int run_bound(const std::string& model_text, const ParamBag& params,
              const GlobalOptions& global) {
    ScanSpec spec;
    spec.model = parse_model(model_text);
    spec.grid = params.ranges();
    spec.trace = global.trace;
    ScanResult result = run_scan(spec);
    warn_regimes(result, global);
    return finish_scan(result, global);
}

int run_scan_command(const std::string& spec_file, const std::string& model_text,
                     const std::vector<std::string>& ranges,
                     const std::vector<std::string>& checks,
                     const std::string& max_rows, const GlobalOptions& global) {
    ScanSpec spec;
    if (!spec_file.empty()) {
        if (!model_text.empty() || !ranges.empty() || !checks.empty())
            throw DomainError("scan: use either --spec or the flag form, not both");
        std::ifstream in(spec_file);
        if (!in)
            throw DomainError("scan: cannot open spec file '" + spec_file + "'");
        std::ostringstream text;
        text << in.rdbuf();
        spec = parse_scan_spec(text.str());
    } else {
        if (model_text.empty())
            throw DomainError("scan: --model is required without --spec");
        spec.model = parse_model(model_text);
        for (const auto& item : ranges) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw DomainError("scan: --range expects name=range, got '" + item +
                                  "'");
            spec.grid.emplace_back(item.substr(0, eq),
                                   parse_range(item.substr(eq + 1)));
        }
        for (const auto& name : checks)
            spec.checks.push_back(parse_check(name));
    }
    if (!max_rows.empty())
        spec.max_rows = parse_integer(max_rows);
    if (global.trace)
        spec.trace = true;
    {
        ScanSpec probe = spec;
        validate_spec(probe);
        std::cerr << "scan grid: " << str(grid_size(probe)) << " point(s)\n";
    }
    ScanResult result = run_scan(spec);
    return finish_scan(result, global);
}

// ------------------------------------------------------------------ ci/sharp

int run_ci(const std::string& r_text, const std::string& degrees_text,
           const GlobalOptions& global) {
    std::vector<Integer> degrees;
    std::istringstream items(degrees_text);
    std::string item;
    while (std::getline(items, item, ','))
        if (!item.empty())
            degrees.push_back(parse_integer(item));
    CIType ci(parse_integer(r_text), degrees);
    CIInvariants inv = ci_invariants(ci);

    std::vector<std::string> flag;
    for (const auto& f : inv.flag_degrees)
        flag.push_back(str(f));

    if (global.format == "json") {
        ordered_json degrees_json = ordered_json::array();
        for (const auto& a : ci.multidegree())
            degrees_json.push_back(str(a));
        ordered_json flag_json = ordered_json::array();
        for (const auto& f : inv.flag_degrees)
            flag_json.push_back(str(f));
        std::cout << ordered_json{{"r", str(ci.r())},
                                  {"degrees", degrees_json},
                                  {"degree", str(inv.degree)},
                                  {"speciality", str(inv.speciality)},
                                  {"genus", str(inv.genus)},
                                  {"flag_degrees", flag_json},
                                  {"has_linear_entry", inv.has_linear_entry}}
                         .dump()
                  << "\n";
    } else if (global.format == "csv") {
        emit_csv_line({"r", "degrees", "degree", "speciality", "genus",
                       "flag_degrees", "has_linear_entry"});
        emit_csv_line({str(ci.r()), ci.str(), str(inv.degree), str(inv.speciality),
                       str(inv.genus), join(flag, " "),
                       inv.has_linear_entry ? "true" : "false"});
    } else {
        emit_kv_table({{"type", "P^" + str(ci.r()) + " complete intersection " +
                                    ci.str()},
                       {"degree", str(inv.degree)},
                       {"speciality", str(inv.speciality)},
                       {"genus", str(inv.genus)},
                       {"flag_degrees", join(flag, " ")},
                       {"has_linear_entry", inv.has_linear_entry ? "true" : "false"}});
    }
    return 0;
}

int run_sharp(const std::string& model_text, const ParamBag& params,
              const GlobalOptions& global) {
    Model model = parse_model(model_text);
    SharpResult res = [&] {
        switch (model) {
        case Model::ThmA:
            return verify_sharp(SharpModel::ThmA,
                                {params.integer("d"), params.integer("s")});
        case Model::ThmB:
            return verify_sharp(SharpModel::ThmB,
                                {params.integer("d"), params.integer("s"),
                                 params.integer("t"), params.integer("u")});
        case Model::Prop1ii: {
            std::vector<Integer> args{params.integer("r")};
            for (const auto& deg : params.flag_degrees())
                args.push_back(deg);
            return verify_sharp(SharpModel::Prop1ii, args);
        }
        case Model::Prop2:
            return verify_sharp(SharpModel::Prop2,
                                {params.integer("r"), params.integer("d"),
                                 params.integer("s")});
        default:
            throw DomainError("sharp: model must be one of thmA, thmB, prop1ii, prop2");
        }
    }();

    if (global.format == "json") {
        ordered_json degrees = ordered_json::array();
        for (const auto& a : res.ci.multidegree())
            degrees.push_back(str(a));
        std::cout << ordered_json{{"model", model_name(model)},
                                  {"bound", rational_json(res.bound)},
                                  {"ci", ordered_json{{"r", str(res.ci.r())},
                                                      {"degrees", degrees}}},
                                  {"attained", res.attained}}
                         .dump()
                  << "\n";
    } else if (global.format == "csv") {
        emit_csv_line({"model", "bound", "ci", "attained"});
        emit_csv_line({model_name(model), res.bound.str(), res.ci.str(),
                       res.attained ? "true" : "false"});
    } else {
        emit_kv_table({{"model", model_name(model)},
                       {"bound", res.bound.str()},
                       {"witness", "P^" + str(res.ci.r()) + " CI " + res.ci.str()},
                       {"attained", res.attained ? "true" : "false"}});
    }
    return res.attained ? 0 : kExitViolation;
}

// -------------------------------------------------------------------- regime

int run_regime(const std::string& model_text, const ParamBag& params,
               const GlobalOptions& global) {
    std::string key = model_text;
    RegimeReport report;
    if (key == "thmb" || key == "thmB" || key == "ThmB") {
        report = regime_p5(params.integer("d"), params.integer("s"),
                           params.integer("t"), params.integer("u"));
    } else if (key == "prop1") {
        report = regime_flag(
            FlagCondition(params.integer("r"), params.flag_degrees()));
    } else if (key == "prop1iii") {
        report = regime_via_genus_report(params.integer("r"), params.integer("s1"),
                                         params.integer("s2"));
    } else if (key == "prop2" || key == "lemma1") {
        report = regime_flag2_report(params.integer("r"), params.integer("d"),
                                     params.integer("s"));
        if (key == "lemma1")
            report.note = "regime printed as d > 2s^4/(r-2); the source text's "
                          "ungrouped denominator is read with the parentheses";
    } else if (key == "ineq8") {
        Integer d = params.integer("d"), s = params.integer("s"),
                t = params.integer("t"), u = params.integer("u");
        bool ok = genus_gap_check(d, s, t, u);
        RegimeClause c;
        c.name = "(3/4)(d/2) + 33s^3/t^2 < (d/2)(t/(u(u+1)) - 3u)";
        c.actual = Rational(3, 4) * Rational(d, 2) + Rational(33 * ipow(s, 3), t * t);
        c.threshold = Rational(d, 2) * (Rational(t, u * (u + 1)) - Rational(3 * u));
        c.strict = true;
        c.satisfied = ok;
        report.clauses.push_back(c);
        report.satisfied = ok;
    } else {
        throw DomainError(
            "regime: model must be one of thmb, prop1, prop1iii, prop2, lemma1, ineq8");
    }

    if (global.format == "json") {
        ordered_json clauses = ordered_json::array();
        for (const auto& c : report.clauses)
            clauses.push_back(ordered_json{{"name", c.name},
                                           {"satisfied", c.satisfied},
                                           {"actual", rational_json(c.actual)},
                                           {"threshold", rational_json(c.threshold)}});
        std::cout << ordered_json{{"model", key},
                                  {"satisfied", report.satisfied},
                                  {"clauses", clauses},
                                  {"note", report.note}}
                         .dump()
                  << "\n";
    } else if (global.format == "csv") {
        emit_csv_line({"clause", "satisfied", "actual", "threshold"});
        for (const auto& c : report.clauses)
            emit_csv_line({c.name, c.satisfied ? "true" : "false", c.actual.str(),
                           c.threshold.str()});
    } else {
        for (const auto& c : report.clauses)
            emit_kv_table({{"clause", c.name},
                           {"satisfied", c.satisfied ? "true" : "false"},
                           {"actual", c.actual.str()},
                           {"threshold", c.threshold.str()}});
        if (!report.note.empty())
            std::cout << "note: " << report.note << "\n";
        std::cout << "regime: " << (report.satisfied ? "satisfied" : "unsatisfied")
                  << "\n";
    }
    if (!report.satisfied && global.strict_regime)
        return kExitRegime;
    return 0;
}

// ------------------------------------------------------------------- hilbert

int run_hilbert(const std::string& n_text, const std::string& s_text,
                bool with_speciality, const GlobalOptions& global) {
    Integer n = parse_integer(n_text);
    Integer s = parse_integer(s_text);
    HilbertFunction h = castelnuovo_hilbert(n, s);
    Integer genus = genus_from_hilbert(s, h);

    std::vector<std::string> values;
    for (const auto& v : h.values())
        values.push_back(str(v));

    std::string speciality;
    if (with_speciality)
        speciality = str(acm_speciality(h, s));

    if (global.format == "json") {
        ordered_json values_json = ordered_json::array();
        for (const auto& v : values)
            values_json.push_back(v);
        ordered_json obj{{"n", str(n)},      {"s", str(s)},
                         {"values", values_json}, {"cap", str(h.cap())},
                         {"genus", str(genus)}};
        if (with_speciality)
            obj["speciality"] = speciality;
        std::cout << obj.dump() << "\n";
    } else if (global.format == "csv") {
        std::vector<std::string> header{"n", "s", "values", "cap", "genus"};
        std::vector<std::string> row{str(n), str(s), join(values, " "),
                                     str(h.cap()), str(genus)};
        if (with_speciality) {
            header.push_back("speciality");
            row.push_back(speciality);
        }
        emit_csv_line(header);
        emit_csv_line(row);
    } else {
        std::vector<std::pair<std::string, std::string>> fields{
            {"h", join(values, " ") + " (then " + str(h.cap()) + ")"},
            {"genus", str(genus)}};
        if (with_speciality)
            fields.push_back({"speciality", speciality});
        emit_kv_table(fields);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Castelnuovo-Halphen genus and speciality bounds"};
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_option("--format", global.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--strict-regime", global.strict_regime,
                 "treat regime failures as errors (exit 3)");
    app.add_flag("--trace", global.trace, "emit the Euclidean decomposition columns");

    const std::vector<std::string> all_params{"r",  "d",  "s",  "t",  "u",
                                              "s1", "s2", "s3", "s4", "s5",
                                              "s6", "snext", "pi", "kt", "g"};

    // bound
    auto* bound_cmd = app.add_subcommand(
        "bound", "evaluate a bound model on one point or a small grid");
    bound_cmd->fallthrough();
    std::string bound_model;
    bound_cmd->add_option("model", bound_model, "halphen|thmA|thmB|prop1i|prop1ii|prop1iii|prop2|lemma1|lemma2|remarkiii")
        ->required();
    ParamBag bound_params;
    bound_params.attach(bound_cmd, all_params, " or range lo..hi:step");

    // ci
    auto* ci_cmd = app.add_subcommand("ci", "invariants of a complete intersection");
    ci_cmd->fallthrough();
    std::string ci_r, ci_degrees;
    ci_cmd->add_option("--r", ci_r, "ambient projective space P^r")->required();
    ci_cmd->add_option("--degrees", ci_degrees, "comma-separated multidegree")
        ->required();

    // sharp
    auto* sharp_cmd =
        app.add_subcommand("sharp", "build and verify the canonical CI witness");
    sharp_cmd->fallthrough();
    std::string sharp_model;
    sharp_cmd->add_option("model", sharp_model, "thmA|thmB|prop1ii|prop2")->required();
    ParamBag sharp_params;
    sharp_params.attach(sharp_cmd, all_params);

    // regime
    auto* regime_cmd =
        app.add_subcommand("regime", "check the explicit numerical hypotheses");
    regime_cmd->fallthrough();
    std::string regime_model;
    regime_cmd->add_option("model", regime_model, "thmb|prop1|prop1iii|prop2|lemma1|ineq8")
        ->required();
    ParamBag regime_params;
    regime_params.attach(regime_cmd, all_params);

    // hilbert
    auto* hilbert_cmd = app.add_subcommand(
        "hilbert", "extremal section Hilbert function of a maximal-genus curve");
    hilbert_cmd->fallthrough();
    std::string hilbert_n, hilbert_s;
    bool hilbert_spec = false;
    hilbert_cmd->add_option("--n", hilbert_n, "ambient dimension")->required();
    hilbert_cmd->add_option("--s", hilbert_s, "curve degree")->required();
    hilbert_cmd->add_flag("--speciality", hilbert_spec,
                          "also print the ACM speciality");

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "grid scan with property checks");
    scan_cmd->fallthrough();
    std::string scan_spec_file, scan_model, scan_max_rows;
    std::vector<std::string> scan_ranges, scan_checks;
    scan_cmd->add_option("--spec", scan_spec_file, "key=value spec file");
    scan_cmd->add_option("--model", scan_model, "bound model");
    scan_cmd->add_option("--range", scan_ranges, "name=lo..hi:step (repeatable)");
    scan_cmd->add_option("--check", scan_checks,
                         "integrality|r-magnitude|equality-equivalence|sharpness|identity-14");
    scan_cmd->add_option("--max-rows", scan_max_rows, "grid size cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound_cmd->parsed())
            return run_bound(bound_model, bound_params, global);
        if (ci_cmd->parsed())
            return run_ci(ci_r, ci_degrees, global);
        if (sharp_cmd->parsed())
            return run_sharp(sharp_model, sharp_params, global);
        if (regime_cmd->parsed())
            return run_regime(regime_model, regime_params, global);
        if (hilbert_cmd->parsed())
            return run_hilbert(hilbert_n, hilbert_s, hilbert_spec, global);
        if (scan_cmd->parsed())
            return run_scan_command(scan_spec_file, scan_model, scan_ranges,
                                    scan_checks, scan_max_rows, global);
    } catch (const RegimeError& e) {
        std::cerr << "regime error: " << e.what() << "\n";
        return kExitRegime;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return 0;
}
