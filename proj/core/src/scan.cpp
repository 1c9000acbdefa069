#include "chb/scan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "chb/halphen.hpp"
#include "chb/hilbert.hpp"

namespace chb {

using ordered_json = nlohmann::ordered_json;

namespace {

struct ModelNames {
    Model model;
    const char* name;
};

constexpr ModelNames kModels[] = {
    {Model::Halphen, "halphen"},   {Model::ThmA, "thmA"},
    {Model::ThmB, "thmB"},         {Model::Prop1i, "prop1i"},
    {Model::Prop1ii, "prop1ii"},   {Model::Prop1iii, "prop1iii"},
    {Model::Prop2, "prop2"},       {Model::Lemma1, "lemma1"},
    {Model::Lemma2, "lemma2"},     {Model::RemarkIII, "remarkiii"},
};

struct CheckNames {
    Check check;
    const char* name;
};

constexpr CheckNames kChecks[] = {
    {Check::Integrality, "integrality"},
    {Check::RMagnitude, "r-magnitude"},
    {Check::EqualityEquivalence, "equality-equivalence"},
    {Check::Sharpness, "sharpness"},
    {Check::Identity14, "identity-14"},
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

const Integer& input(const ScanRow& row, const char* name) {
    for (const auto& [key, value] : row.inputs)
        if (key == name)
            return value;
    throw DomainError(std::string("scan: missing parameter '") + name + "'");
}

const Integer* find_input(const ScanRow& row, const char* name) {
    for (const auto& [key, value] : row.inputs)
        if (key == name)
            return &value;
    return nullptr;
}

std::vector<Integer> flag_degrees_of(const ScanRow& row) {
    std::vector<Integer> degrees;
    for (int i = 1; i <= 6; ++i) {
        const Integer* v = find_input(row, ("s" + std::to_string(i)).c_str());
        if (!v)
            break;
        degrees.push_back(*v);
    }
    return degrees;
}

BoundReport plain_report(Rational value) {
    BoundReport out;
    out.value = std::move(value);
    out.floor = out.value.floor();
    out.is_integer = out.value.is_integer();
    return out;
}

void evaluate_row(Model model, ScanRow& row, bool want_trace) {
    switch (model) {
    case Model::Halphen: {
        const Integer &r = input(row, "r"), &s = input(row, "s"), &d = input(row, "d");
        BoundReport report = plain_report(halphen_value(r, d, s));
        if (want_trace)
            report.decomposition = decompose(r, d, s);
        row.extras.emplace_back("R", halphen_remainder(r, d, s));
        row.regime = regime_flag2_report(r, d, s);
        row.report = std::move(report);
        return;
    }
    case Model::ThmA: {
        row.report = bound_p3(input(row, "d"), input(row, "s"));
        return;
    }
    case Model::ThmB: {
        const Integer &d = input(row, "d"), &s = input(row, "s"), &t = input(row, "t"),
                      &u = input(row, "u");
        row.report = bound_p5(d, s, t, u);
        row.regime = regime_p5(d, s, t, u);
        return;
    }
    case Model::Prop1i: {
        FlagCondition flag(input(row, "r"), flag_degrees_of(row));
        const Integer* snext = find_input(row, "snext");
        row.report = flag_bound_slack(
            flag, snext ? std::optional<Integer>(*snext) : std::nullopt);
        try {
            row.regime = regime_flag(flag);
        } catch (const Error&) {
            // no regime clause is defined for this flag shape
        }
        return;
    }
    case Model::Prop1ii: {
        FlagCondition flag(input(row, "r"), flag_degrees_of(row));
        row.report = flag_bound_divisible(flag);
        try {
            row.regime = regime_flag(flag);
        } catch (const Error&) {
        }
        return;
    }
    case Model::Prop1iii: {
        const Integer &s1 = input(row, "s1"), &s2 = input(row, "s2"),
                      &g = input(row, "g");
        row.report = plain_report(flag_bound_via_genus(s1, s2, g));
        if (const Integer* r = find_input(row, "r"))
            row.regime = regime_via_genus_report(*r, s1, s2);
        return;
    }
    case Model::Prop2: {
        const Integer &r = input(row, "r"), &d = input(row, "d"), &s = input(row, "s");
        BoundReport report = flag2_bound(r, d, s);
        if (!want_trace)
            report.decomposition.reset();
        row.extras.emplace_back("R", halphen_remainder(r, d, s));
        row.regime = regime_flag2_report(r, d, s);
        row.report = std::move(report);
        return;
    }
    case Model::Lemma1: {
        const Integer &r = input(row, "r"), &d = input(row, "d"), &s = input(row, "s"),
                      &pi = input(row, "pi");
        row.report = plain_report(genus_bound_on_surface(r, d, s, pi));
        row.extras.emplace_back(
            "e_bound", speciality_bound_on_surface(r, d, s, pi, /*enforce=*/false));
        row.regime = regime_flag2_report(r, d, s);
        return;
    }
    case Model::Lemma2: {
        const Integer &d = input(row, "d"), &s = input(row, "s"), &t = input(row, "t"),
                      &kt = input(row, "kt");
        BoundReport report = liaison_bound(d, s, t, kt);
        if (report.is_integer)
            row.extras.emplace_back(
                "residual_at_bound",
                Rational(liaison_residual(d, s, t, kt, report.value.num())));
        row.report = std::move(report);
        return;
    }
    case Model::RemarkIII: {
        row.report = nondegenerate_bound(input(row, "r"), input(row, "d"));
        return;
    }
    }
    throw DomainError("scan: unknown model");
}

void check_witness_attains(const ScanRow& row, std::vector<Violation>& out) {
    if (!row.report || !row.report->witness)
        return; // nothing to attain: no canonical witness at this point
    CIInvariants inv = ci_invariants(*row.report->witness);
    if (Rational(inv.speciality) != row.report->value)
        out.push_back({Check::Sharpness, row.inputs,
                       "witness " + row.report->witness->str() + " has speciality " +
                           str(inv.speciality) + ", bound is " +
                           row.report->value.str()});
    else if (speciality_from_genus(inv.degree, inv.genus) != inv.speciality)
        out.push_back({Check::Sharpness, row.inputs,
                       "witness " + row.report->witness->str() +
                           " fails the subcanonical identity"});
}

void run_checks(Model model, const std::vector<Check>& checks, const ScanRow& row,
                std::vector<Violation>& out) {
    for (Check check : checks) {
        switch (check) {
        case Check::Integrality: {
            if (!row.report->is_integer)
                out.push_back({check, row.inputs,
                               "value " + row.report->value.str() + " is not an integer"});
            break;
        }
        case Check::RMagnitude: {
            const Integer &r = input(row, "r"), &s = input(row, "s");
            const Rational& R = row.extras.front().second;
            Rational limit(ipow(s, 3), r - 2);
            if (abs(R) > limit)
                out.push_back({check, row.inputs,
                               "|R| = " + abs(R).str() + " exceeds s^3/(r-2) = " +
                                   limit.str()});
            break;
        }
        case Check::EqualityEquivalence: {
            const Integer &r = input(row, "r"), &d = input(row, "d"),
                          &s = input(row, "s");
            bool integral = row.report->is_integer;
            bool eq_case = flag2_equality_case(r, d, s);
            if (integral != eq_case) {
                out.push_back({check, row.inputs,
                               std::string("value integrality (") +
                                   (integral ? "true" : "false") +
                                   ") disagrees with the equality case (" +
                                   (eq_case ? "true" : "false") + ")"});
            } else if (eq_case && halphen_remainder(r, d, s) != Rational(1)) {
                out.push_back({check, row.inputs,
                               "equality case holds but R = " +
                                   halphen_remainder(r, d, s).str() + " != 1"});
            }
            break;
        }
        case Check::Sharpness: {
            check_witness_attains(row, out);
            break;
        }
        case Check::Identity14: {
            const Integer &r = input(row, "r"), &d = input(row, "d"),
                          &s = input(row, "s");
            Rational g = halphen_value(r, d, s);
            Rational R = halphen_remainder(r, d, s);
            Integer G = castelnuovo_bound(r - 1, s);
            Rational lhs = (Rational(2) * g - Rational(2)) / Rational(d);
            Rational rhs = Rational(d, s) + Rational(2 * G - 2 - s, s) +
                           Rational(2) * (R - Rational(1)) / Rational(d);
            if (lhs != rhs)
                out.push_back({check, row.inputs,
                               "(2G-2)/d = " + lhs.str() + " but bound + 2(R-1)/d = " +
                                   rhs.str()});
            break;
        }
        }
    }
}

struct ParamInfo {
    std::string name;
    bool required;
};

std::vector<ParamInfo> parameter_table(Model m) {
    switch (m) {
    case Model::Halphen:
        return {{"r", true}, {"s", true}, {"d", true}};
    case Model::ThmA:
        return {{"d", true}, {"s", true}};
    case Model::ThmB:
        return {{"d", true}, {"s", true}, {"t", true}, {"u", true}};
    case Model::Prop1i:
        return {{"r", true},  {"s1", true},  {"s2", false}, {"s3", false},
                {"s4", false}, {"s5", false}, {"s6", false}, {"snext", false}};
    case Model::Prop1ii:
        return {{"r", true},  {"s1", true},  {"s2", false}, {"s3", false},
                {"s4", false}, {"s5", false}, {"s6", false}};
    case Model::Prop1iii:
        return {{"r", false}, {"s1", true}, {"s2", true}, {"g", true}};
    case Model::Prop2:
        return {{"r", true}, {"d", true}, {"s", true}};
    case Model::Lemma1:
        return {{"r", true}, {"d", true}, {"s", true}, {"pi", true}};
    case Model::Lemma2:
        return {{"d", true}, {"s", true}, {"t", true}, {"kt", true}};
    case Model::RemarkIII:
        return {{"r", true}, {"d", true}};
    }
    return {};
}

std::vector<Check> allowed_checks(Model m) {
    switch (m) {
    case Model::Halphen:
        return {Check::Integrality, Check::RMagnitude, Check::Identity14};
    case Model::Prop2:
        return {Check::EqualityEquivalence, Check::Sharpness, Check::Identity14};
    case Model::ThmA:
    case Model::ThmB:
    case Model::Prop1ii:
        return {Check::Sharpness};
    default:
        return {};
    }
}

} // namespace

const char* model_name(Model m) {
    for (const auto& entry : kModels)
        if (entry.model == m)
            return entry.name;
    return "?";
}

Model parse_model(const std::string& name) {
    std::string key = lower(name);
    for (const auto& entry : kModels)
        if (lower(entry.name) == key)
            return entry.model;
    throw DomainError("unknown model '" + name + "'");
}

const char* check_name(Check c) {
    for (const auto& entry : kChecks)
        if (entry.check == c)
            return entry.name;
    return "?";
}

Check parse_check(const std::string& name) {
    std::string key = lower(name);
    for (const auto& entry : kChecks)
        if (entry.name == key)
            return entry.check;
    throw DomainError("unknown check '" + name + "'");
}

Integer Range::count() const {
    if (step < 1 || hi < lo)
        return 0;
    return (hi - lo) / step + 1;
}

Range parse_range(const std::string& text) {
    if (text.empty())
        throw DomainError("parse_range: empty range");
    Range out;
    auto dots = text.find("..", 1); // skip position 0 so "-1..2" parses
    if (dots == std::string::npos) {
        out.lo = parse_integer(text);
        out.hi = out.lo;
        return out;
    }
    out.lo = parse_integer(text.substr(0, dots));
    std::string rest = text.substr(dots + 2);
    auto colon = rest.find(':');
    if (colon == std::string::npos) {
        out.hi = parse_integer(rest);
    } else {
        out.hi = parse_integer(rest.substr(0, colon));
        out.step = parse_integer(rest.substr(colon + 1));
    }
    return out;
}

std::vector<std::string> model_parameters(Model m) {
    std::vector<std::string> out;
    for (const auto& p : parameter_table(m))
        out.push_back(p.name);
    return out;
}

void validate_spec(ScanSpec& spec) {
    auto table = parameter_table(spec.model);
    std::map<std::string, Range> given;
    for (const auto& [name, range] : spec.grid) {
        if (given.count(name))
            throw DomainError("scan: duplicate parameter '" + name + "'");
        if (range.step < 1)
            throw DomainError("scan: step must be >= 1 for '" + name + "'");
        if (range.count() == 0)
            throw DomainError("scan: empty range for '" + name + "' (" +
                              str(range.lo) + ".." + str(range.hi) + ")");
        given.emplace(name, range);
    }
    std::vector<std::pair<std::string, Range>> ordered;
    for (const auto& p : table) {
        auto it = given.find(p.name);
        if (it == given.end()) {
            if (p.required)
                throw DomainError("scan: model " + std::string(model_name(spec.model)) +
                                  " requires parameter '" + p.name + "'");
            continue;
        }
        ordered.emplace_back(it->first, it->second);
        given.erase(it);
    }
    if (!given.empty())
        throw DomainError("scan: parameter '" + given.begin()->first +
                          "' is not used by model " + model_name(spec.model));
    // Flag degrees must be contiguous s1..sk.
    if (spec.model == Model::Prop1i || spec.model == Model::Prop1ii) {
        bool gap = false;
        for (int i = 2; i <= 6; ++i) {
            bool have = std::any_of(ordered.begin(), ordered.end(), [&](const auto& p) {
                return p.first == "s" + std::to_string(i);
            });
            if (have && gap)
                throw DomainError("scan: flag degrees must be contiguous s1..sk");
            if (!have)
                gap = true;
        }
    }
    spec.grid = std::move(ordered);
    auto allowed = allowed_checks(spec.model);
    std::vector<Check> checks;
    for (Check c : spec.checks) {
        if (std::find(allowed.begin(), allowed.end(), c) == allowed.end())
            throw DomainError(std::string("scan: check '") + check_name(c) +
                              "' does not apply to model " + model_name(spec.model));
        if (std::find(checks.begin(), checks.end(), c) == checks.end())
            checks.push_back(c);
    }
    spec.checks = std::move(checks);
    Integer total = grid_size(spec);
    if (total > spec.max_rows)
        throw DomainError("scan: grid has " + str(total) + " points, above max-rows = " +
                          str(spec.max_rows));
}

Integer grid_size(const ScanSpec& spec) {
    Integer total = 1;
    for (const auto& [name, range] : spec.grid)
        total *= range.count();
    return total;
}

ScanSpec parse_scan_spec(const std::string& text) {
    ScanSpec spec;
    bool have_model = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        auto end = line.find_last_not_of(" \t\r");
        line = line.substr(begin, end - begin + 1);
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError("scan spec: expected key=value, got '" + line + "'");
        std::string key = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (key.empty() || value.empty())
            throw DomainError("scan spec: malformed line '" + line + "'");
        if (key == "model") {
            spec.model = parse_model(value);
            have_model = true;
        } else if (key == "checks") {
            std::istringstream items(value);
            std::string item;
            while (std::getline(items, item, ','))
                if (!item.empty())
                    spec.checks.push_back(parse_check(item));
        } else if (key == "trace") {
            spec.trace = (value == "true" || value == "1");
        } else if (key == "max-rows") {
            spec.max_rows = parse_integer(value);
        } else {
            spec.grid.emplace_back(key, parse_range(value));
        }
    }
    if (!have_model)
        throw DomainError("scan spec: missing 'model=' line");
    return spec;
}

std::vector<std::string> extra_columns(Model m) {
    switch (m) {
    case Model::Halphen:
    case Model::Prop2:
        return {"R"};
    case Model::Lemma1:
        return {"e_bound"};
    case Model::Lemma2:
        return {"residual_at_bound"};
    default:
        return {};
    }
}

ScanResult run_scan(const ScanSpec& spec_in) {
    ScanResult result;
    result.spec = spec_in;
    validate_spec(result.spec);
    const ScanSpec& spec = result.spec;

    std::vector<Integer> current;
    for (const auto& [name, range] : spec.grid)
        current.push_back(range.lo);

    bool done = spec.grid.empty();
    while (!done) {
        ScanRow row;
        for (std::size_t i = 0; i < current.size(); ++i)
            row.inputs.emplace_back(spec.grid[i].first, current[i]);
        try {
            evaluate_row(spec.model, row, spec.trace);
            run_checks(spec.model, spec.checks, row, result.violations);
        } catch (const Error& e) {
            row = ScanRow{};
            for (std::size_t i = 0; i < current.size(); ++i)
                row.inputs.emplace_back(spec.grid[i].first, current[i]);
            row.error = e.what();
            ++result.error_rows;
        }
        result.rows.push_back(std::move(row));

        // Odometer step, last parameter fastest.
        std::size_t dim = current.size();
        while (dim > 0) {
            --dim;
            current[dim] += spec.grid[dim].second.step;
            if (current[dim] <= spec.grid[dim].second.hi)
                break;
            current[dim] = spec.grid[dim].second.lo;
            if (dim == 0)
                done = true;
        }
    }
    return result;
}

namespace {

const char* const kStandardColumns[] = {"value", "floor", "is_integer",
                                        "equality_possible", "witness"};
const char* const kTraceColumns[] = {"m", "eps", "w", "v", "branch", "k", "delta"};

bool model_has_regime(Model m) {
    switch (m) {
    case Model::ThmA:
    case Model::Lemma2:
    case Model::RemarkIII:
        return false;
    default:
        return true;
    }
}

bool model_has_trace(Model m) { return m == Model::Halphen || m == Model::Prop2; }

std::vector<std::string> all_columns(const ScanSpec& spec) {
    std::vector<std::string> cols;
    for (const auto& [name, range] : spec.grid)
        cols.push_back(name);
    for (const char* c : kStandardColumns)
        cols.push_back(c);
    for (const auto& c : extra_columns(spec.model))
        cols.push_back(c);
    if (model_has_regime(spec.model)) {
        cols.push_back("regime_satisfied");
        cols.push_back("regime_failed");
    }
    if (spec.trace && model_has_trace(spec.model))
        for (const char* c : kTraceColumns)
            cols.push_back(c);
    cols.push_back("error");
    return cols;
}

std::vector<std::string> trace_cells(const ScanRow& row) {
    if (!row.report || !row.report->decomposition)
        return {"", "", "", "", "", "", ""};
    const Decomposition& dec = *row.report->decomposition;
    return {str(dec.m), str(dec.eps), str(dec.w),    str(dec.v),
            branch_name(dec.branch),  str(dec.k), str(dec.delta)};
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

std::vector<std::string> row_cells(const ScanSpec& spec, const ScanRow& row) {
    std::vector<std::string> cells;
    for (const auto& [name, value] : row.inputs)
        cells.push_back(str(value));
    if (row.report) {
        const BoundReport& rep = *row.report;
        cells.push_back(rep.value.str());
        cells.push_back(str(rep.floor));
        cells.push_back(rep.is_integer ? "true" : "false");
        cells.push_back(rep.equality_possible ? "true" : "false");
        cells.push_back(rep.witness ? rep.witness->str() : "");
    } else {
        cells.insert(cells.end(), 5, "");
    }
    for (const auto& name : extra_columns(spec.model)) {
        std::string cell;
        for (const auto& [key, value] : row.extras)
            if (key == name)
                cell = value.str();
        cells.push_back(cell);
    }
    if (model_has_regime(spec.model)) {
        if (row.regime) {
            cells.push_back(row.regime->satisfied ? "true" : "false");
            cells.push_back(join(row.regime->failed_clauses(), "; "));
        } else {
            cells.push_back("");
            cells.push_back("");
        }
    }
    if (spec.trace && model_has_trace(spec.model))
        for (auto& cell : trace_cells(row))
            cells.push_back(std::move(cell));
    cells.push_back(row.error);
    return cells;
}

std::string csv_quote(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos)
        return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

ordered_json rational_json(const Rational& value) {
    return ordered_json{{"num", value.num().get_str()}, {"den", value.den().get_str()}};
}

ordered_json inputs_json(const ScanRow& row) {
    ordered_json out = ordered_json::object();
    for (const auto& [name, value] : row.inputs)
        out[name] = str(value);
    return out;
}

ordered_json row_json(const ScanSpec& spec, const ScanRow& row) {
    ordered_json obj;
    obj["model"] = model_name(spec.model);
    obj["inputs"] = inputs_json(row);
    if (row.report) {
        const BoundReport& rep = *row.report;
        obj["value"] = rational_json(rep.value);
        obj["floor"] = str(rep.floor);
        obj["is_integer"] = rep.is_integer;
        obj["equality_possible"] = rep.equality_possible;
        if (rep.witness) {
            ordered_json degrees = ordered_json::array();
            for (const auto& a : rep.witness->multidegree())
                degrees.push_back(str(a));
            obj["witness"] = ordered_json{{"r", str(rep.witness->r())},
                                          {"degrees", degrees}};
        } else {
            obj["witness"] = nullptr;
        }
    } else {
        obj["value"] = nullptr;
        obj["floor"] = nullptr;
        obj["is_integer"] = nullptr;
        obj["equality_possible"] = nullptr;
        obj["witness"] = nullptr;
    }
    for (const auto& name : extra_columns(spec.model)) {
        obj[name] = nullptr;
        for (const auto& [key, value] : row.extras)
            if (key == name)
                obj[name] = rational_json(value);
    }
    if (model_has_regime(spec.model)) {
        if (row.regime) {
            ordered_json failed = ordered_json::array();
            for (const auto& name : row.regime->failed_clauses())
                failed.push_back(name);
            obj["regime"] =
                ordered_json{{"satisfied", row.regime->satisfied},
                             {"failed_clauses", failed}};
        } else {
            obj["regime"] = nullptr;
        }
    }
    if (spec.trace && model_has_trace(spec.model)) {
        if (row.report && row.report->decomposition) {
            const Decomposition& dec = *row.report->decomposition;
            obj["trace"] = ordered_json{
                {"m", str(dec.m)},         {"eps", str(dec.eps)}, {"w", str(dec.w)},
                {"v", str(dec.v)},         {"branch", branch_name(dec.branch)},
                {"k", str(dec.k)},         {"delta", str(dec.delta)}};
        } else {
            obj["trace"] = nullptr;
        }
    }
    obj["error"] = row.error.empty() ? ordered_json(nullptr) : ordered_json(row.error);
    return obj;
}

ordered_json summary_json(const ScanResult& result) {
    ordered_json violations = ordered_json::array();
    for (const auto& v : result.violations) {
        ordered_json inputs = ordered_json::object();
        for (const auto& [name, value] : v.inputs)
            inputs[name] = str(value);
        violations.push_back(ordered_json{{"check", check_name(v.check)},
                                          {"inputs", inputs},
                                          {"detail", v.detail}});
    }
    ordered_json checks = ordered_json::array();
    for (Check c : result.spec.checks)
        checks.push_back(check_name(c));
    return ordered_json{{"summary",
                         ordered_json{{"model", model_name(result.spec.model)},
                                      {"rows", result.rows.size()},
                                      {"errors", result.error_rows},
                                      {"checks", checks},
                                      {"violations", violations}}}};
}

} // namespace

std::string render_csv(const ScanResult& result) {
    std::string out;
    auto columns = all_columns(result.spec);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i)
            out += ',';
        out += csv_quote(columns[i]);
    }
    out += '\n';
    for (const auto& row : result.rows) {
        auto cells = row_cells(result.spec, row);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out += ',';
            out += csv_quote(cells[i]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const ScanResult& result) {
    std::string out;
    for (const auto& row : result.rows) {
        out += row_json(result.spec, row).dump();
        out += '\n';
    }
    out += summary_json(result).dump();
    out += '\n';
    return out;
}

std::string render_summary(const ScanResult& result) {
    std::string out = "rows=" + std::to_string(result.rows.size()) +
                      " errors=" + std::to_string(result.error_rows) +
                      " violations=" + std::to_string(result.violations.size()) + "\n";
    for (const auto& v : result.violations) {
        std::vector<std::string> inputs;
        for (const auto& [name, value] : v.inputs)
            inputs.push_back(name + "=" + str(value));
        out += std::string("violation ") + check_name(v.check) + " at " +
               join(inputs, ",") + ": " + v.detail + "\n";
    }
    return out;
}

std::string render_table(const ScanResult& result) {
    auto columns = all_columns(result.spec);
    std::vector<std::vector<std::string>> grid;
    grid.push_back(columns);
    for (const auto& row : result.rows) {
        auto cells = row_cells(result.spec, row);
        for (auto& cell : cells)
            if (cell.empty())
                cell = "-";
        grid.push_back(std::move(cells));
    }
    std::vector<std::size_t> widths(columns.size(), 0);
    for (const auto& row : grid)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    std::string out = "model=" + std::string(model_name(result.spec.model)) +
                      " rows=" + std::to_string(result.rows.size()) + "\n";
    for (const auto& row : grid) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                line += "  ";
            line += row[i];
            if (i + 1 < row.size())
                line.append(widths[i] - row[i].size(), ' ');
        }
        out += line;
        out += '\n';
    }
    out += render_summary(result);
    return out;
}

} // namespace chb
