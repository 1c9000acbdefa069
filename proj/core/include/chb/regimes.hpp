#ifndef CHB_REGIMES_HPP
#define CHB_REGIMES_HPP

#include <string>
#include <vector>

#include "chb/flag.hpp"
#include "chb/numeric.hpp"

namespace chb {

/// One clause of a numerical-hypothesis check: `name` states the inequality
/// as written, `threshold` its exact right-hand side, `actual` the tested
/// quantity. All comparisons are exact; no epsilon slack anywhere.
struct RegimeClause {
    std::string name;
    Rational actual;
    Rational threshold;
    bool strict = true; // strict '>' (as opposed to '>=')
    bool satisfied = false;
};

struct RegimeReport {
    bool satisfied = false;
    std::vector<RegimeClause> clauses;
    std::string note;

    std::vector<std::string> failed_clauses() const;
};

/// Explicit numerical hypotheses under which the P^5 speciality bound is
/// asserted. For u >= 2:
///   d > (2/3)s^4,  s > (2/3)t^4,  t > 408(u+1)^3;
/// for u = 1:
///   d > max{(2/3)s^4, 12(s+1)^2},  s > t^2 - t,  t >= 2.
/// Requires d >= s >= t >= u >= 1.
RegimeReport regime_p5(const Integer& d, const Integer& s, const Integer& t,
                       const Integer& u);

/// The additional hypothesis quoted for the general flag bound:
///   s_1 > 2(r-l)(l^2+2l+9) * (s_2^3/s_3^2) * s_2*...*s_l,
/// with s_3 := r-3 when l = 2. This clause is necessary but not a complete
/// set of hypotheses (the report's note records that); requires l >= 2, and
/// l = 2 with r = 3 is rejected (s_3 would be 0).
RegimeReport regime_flag(const FlagCondition& flag);

/// s1 > 2*s2^4/(r-2), exactly. Requires r >= 3.
bool regime_via_genus(const Integer& r, const Integer& s1, const Integer& s2);

/// d > 2*s^4/(r-2), exactly. Requires r >= 3.
bool regime_flag2(const Integer& r, const Integer& d, const Integer& s);

/// Clause-form reports of the two checks above.
RegimeReport regime_via_genus_report(const Integer& r, const Integer& s1,
                                     const Integer& s2);
RegimeReport regime_flag2_report(const Integer& r, const Integer& d, const Integer& s);

/// Worst-case sufficient check that the genus gap stays below the flag
/// threshold: (3/4)(d/2) + 33 s^3/t^2 < (d/2)(t/(u(u+1)) - 3u), with the
/// error terms at their extreme magnitudes. Requires d >= s >= t >= u >= 1.
bool genus_gap_check(const Integer& d, const Integer& s, const Integer& t,
                     const Integer& u);

} // namespace chb

#endif
