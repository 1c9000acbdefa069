#ifndef CHB_SCAN_HPP
#define CHB_SCAN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chb/numeric.hpp"
#include "chb/regimes.hpp"
#include "chb/speciality.hpp"

namespace chb {

/// Bound models addressable from scans and the CLI.
enum class Model {
    Halphen,
    ThmA,
    ThmB,
    Prop1i,
    Prop1ii,
    Prop1iii,
    Prop2,
    Lemma1,
    Lemma2,
    RemarkIII,
};

const char* model_name(Model m);
Model parse_model(const std::string& name); // case-insensitive

/// Property checks a scan can run per grid point. Each check is only
/// meaningful for some models; validation rejects mismatches.
enum class Check {
    Integrality,         // halphen: the genus formula evaluates to an integer
    RMagnitude,          // halphen: |R| <= s^3/(r-2)
    EqualityEquivalence, // prop2: value integral <=> equality case, then R = 1
    Sharpness,           // thmA/thmB/prop1ii/prop2: the witness attains the bound
    Identity14,          // halphen/prop2: (2G-2)/d = flag2 value + 2(R-1)/d
};

const char* check_name(Check c);
Check parse_check(const std::string& name);

/// Inclusive integer range with step >= 1.
struct Range {
    Integer lo;
    Integer hi;
    Integer step = 1;

    Integer count() const;
};

/// Parses "18", "18..60" or "18..60:2" (negative endpoints allowed).
Range parse_range(const std::string& text);

struct ScanSpec {
    Model model = Model::Halphen;
    /// Parameter ranges; validation reorders them into the model's canonical
    /// parameter order, which is also the lexicographic row order.
    std::vector<std::pair<std::string, Range>> grid;
    std::vector<Check> checks;
    bool trace = false;
    /// Hard cap on the grid size, rejected up front when exceeded.
    Integer max_rows = 1000000;
};

/// Canonical parameter order for a model. Parameters in [] are optional:
///   halphen   r, s, d            thmA      d, s
///   thmB      d, s, t, u         prop1i    r, s1..s6, [snext]
///   prop1ii   r, s1..s6          prop1iii  [r], s1, s2, g
///   prop2     r, d, s            lemma1    r, d, s, pi
///   lemma2    d, s, t, kt        remarkiii r, d
std::vector<std::string> model_parameters(Model m);

/// Checks parameter names and checks against the model, validates every
/// range to be nonempty, reorders the grid canonically and enforces
/// max_rows. Throws DomainError; never starts evaluating.
void validate_spec(ScanSpec& spec);

/// Product of the range counts (after validation).
Integer grid_size(const ScanSpec& spec);

/// Parses the plain key=value scan-spec format: `model=`, `checks=` (comma
/// separated), `trace=`, `max-rows=`, and one `name=range` line per grid
/// parameter. '#' starts a comment.
ScanSpec parse_scan_spec(const std::string& text);

struct ScanRow {
    std::vector<std::pair<std::string, Integer>> inputs;
    std::optional<BoundReport> report;
    std::vector<std::pair<std::string, Rational>> extras; // model-specific columns
    std::optional<RegimeReport> regime;
    std::string error; // nonempty when the point violated a precondition
};

struct Violation {
    Check check = Check::Integrality;
    std::vector<std::pair<std::string, Integer>> inputs;
    std::string detail;
};

struct ScanResult {
    ScanSpec spec;
    std::vector<ScanRow> rows;
    std::vector<Violation> violations;
    std::size_t error_rows = 0;
};

/// Evaluates the grid in lexicographic order. Per-row domain errors become
/// error rows; property violations are collected into the summary. Identical
/// specs produce identical results (and byte-identical renderings).
ScanResult run_scan(const ScanSpec& spec);

/// Extra value columns a model contributes beyond the standard ones.
std::vector<std::string> extra_columns(Model m);

/// Aligned human-readable table, including the summary.
std::string render_table(const ScanResult& result);

/// CSV with a header row; rationals serialized as "p/q". The summary is not
/// part of the CSV stream (see render_summary).
std::string render_csv(const ScanResult& result);

/// JSON Lines: one object per row, then one {"summary": ...} object.
std::string render_json(const ScanResult& result);

/// Short plain-text summary (row/error/violation counts plus one line per
/// violation).
std::string render_summary(const ScanResult& result);

} // namespace chb

#endif
