#ifndef CHB_SPECIALITY_HPP
#define CHB_SPECIALITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chb/ci.hpp"
#include "chb/decompose.hpp"
#include "chb/flag.hpp"
#include "chb/numeric.hpp"

namespace chb {

/// A speciality bound together with everything needed to act on it: the
/// exact rational value, its floor (the actual integer bound on e(C)),
/// whether the value itself is an integer, whether equality is numerically
/// possible, and — when one exists — the canonical complete-intersection
/// witness attaining it. `decomposition` carries the Euclidean trace for
/// bounds that are driven by one.
struct BoundReport {
    Rational value;
    bool is_integer = false;
    Integer floor;
    bool equality_possible = false;
    std::optional<CIType> witness;
    std::optional<Decomposition> decomposition;
    std::vector<std::pair<std::string, std::string>> params; // input echo
};

/// Largest speciality index compatible with d*e <= 2*pa - 2, i.e.
/// floor((2*pa - 2)/d). Requires d >= 1.
Integer speciality_from_genus(const Integer& d, const Integer& pa);

/// Speciality bound for an integral degree-d space curve not contained in
/// any surface of degree < s:  e <= d/s + s - 4. Equality is possible
/// exactly when s | d, attained by the complete intersection (s, d/s).
BoundReport bound_p3(const Integer& d, const Integer& s);

/// Speciality bound for an integral degree-d curve in P^5 not contained in
/// any surface of degree < s, threefold of degree < t, fourfold of degree
/// < u:  e <= d/s + s/t + t/u + u - 6. Equality is possible exactly when
/// u | t, t | s, s | d, attained by the complete intersection
/// (u, t/u, s/t, d/s). Requires d >= s >= t >= u >= 1.
BoundReport bound_p5(const Integer& d, const Integer& s, const Integer& t,
                     const Integer& u);

/// Genus forced by a speciality at the bound_p5 value:
/// pa >= d^2/(2s) + (d/2)(s/t + t/u + u - 6) + 1.
Rational genus_threshold_p5(const Integer& d, const Integer& s, const Integer& t,
                            const Integer& u);

/// General flag-condition bound with slack term:
///   e <= sum_{i=1..l} s_i/s_{i+1} - l - 2/(r-l) + 3/4,
/// where s_{l+1} defaults to r - l (the minimal degree of a nondegenerate
/// (l+1)-fold in P^r) and may be overridden. Never claimed sharp.
BoundReport flag_bound_slack(const FlagCondition& flag,
                             std::optional<Integer> s_next = std::nullopt);

/// Full-length flag bound under the divisibility chain s_i | s_{i-1}:
///   e <= sum_{i=1..r-2} s_i/s_{i+1} + s_{r-1} - (r+1),
/// sharp, attained by the complete intersection
/// (s_{r-1}, s_{r-2}/s_{r-1}, ..., s_1/s_2). Requires l = r-1.
BoundReport flag_bound_divisible(const FlagCondition& flag);

/// Flag bound through the maximal genus G of the one-dimension-lower flag:
///   e <= s1/s2 + (2G - 2 - s2)/s2.
Rational flag_bound_via_genus(const Integer& s1, const Integer& s2, const Integer& G);

/// Speciality bound for length-2 flag conditions in P^r (curve of degree d
/// not on surfaces of degree < s):
///   e <= d/s + (2*castelnuovo_bound(r-1, s) - 2 - s)/s.
/// equality_possible reports flag2_equality_case; the witness, when one
/// exists, is a complete intersection through a maximal-genus curve of
/// degree s in P^{r-1}. Requires s >= r-1 >= 2 and d >= s.
BoundReport flag2_bound(const Integer& r, const Integer& d, const Integer& s);

/// Equality criterion for flag2_bound, equivalent to its value being an
/// integer: v = 0 and eps = w, or v >= 1 and eps = w(r-1-v) + 1. When it
/// holds, halphen_remainder(r, d, s) = 1.
bool flag2_equality_case(const Integer& r, const Integer& d, const Integer& s);

/// Canonical complete-intersection witness for flag2_bound, when one
/// exists: requires s | d and a factorization of s into r-2 degrees whose
/// complete intersection in P^{r-1} has genus castelnuovo_bound(r-1, s).
/// The search trial-divides s for r >= 4, so it is meant for moderate s.
std::optional<CIType> flag2_witness(const Integer& r, const Integer& d,
                                    const Integer& s);

/// Genus bound for a degree-d curve on an integral nondegenerate surface of
/// degree s in P^r with sectional genus pi:
///   pa <= d^2/(2s) + (d/(2s))(2*pi - 2 - s) + s^3/(r-2).
/// Requires r >= 3, s >= r-1, d >= s^2.
Rational genus_bound_on_surface(const Integer& r, const Integer& d, const Integer& s,
                                const Integer& pi);

/// Speciality bound on the same surface, valid in the regime
/// d > 2 s^4/(r-2):  e <= d/s + (2*pi - 2 - s)/s. With enforce_regime the
/// regime failure throws RegimeError; otherwise the caller downgrades it to
/// a warning and the formula is evaluated anyway.
Rational speciality_bound_on_surface(const Integer& r, const Integer& d,
                                     const Integer& s, const Integer& pi,
                                     bool enforce_regime = true);

/// Speciality bound for a curve on a surface S of degree s, complete
/// intersection on an ACM subcanonical threefold T of degree t with
/// omega_T = O_T(kT):  e <= d/s + s/t + kT. Equality is possible exactly
/// when s | d (the curve is then cut on S by one hypersurface).
/// Requires t | s and s >= t >= 1.
BoundReport liaison_bound(const Integer& d, const Integer& s, const Integer& t,
                          const Integer& kT);

/// Degree of the residual scheme in the linkage behind liaison_bound:
///   d - s*(e - kT - s/t);
/// nonnegative exactly when e is at most the liaison_bound value.
Integer liaison_residual(const Integer& d, const Integer& s, const Integer& t,
                         const Integer& kT, const Integer& e);

/// Genus bound from the Hodge index theorem for curves on a smooth
/// subcanonical surface of degree s with sectional genus pi:
///   pa <= d^2/(2s) + (d/(2s))(2*pi - 2 - s) + 1.
Rational hodge_bound(const Integer& d, const Integer& s, const Integer& pi);

/// Speciality bound for any integral nondegenerate degree-d curve in P^r:
///   e <= (d - r - 1)/(r - 1),
/// with equality possible exactly when d == 2 mod (r-1) (attained by
/// maximal-genus curves of that degree). Requires d >= r >= 3.
BoundReport nondegenerate_bound(const Integer& r, const Integer& d);

/// Maximal speciality composition across one flag extension:
///   e(r; s1, ..., sl) = s1/s2 + e(r-1; s2, ..., sl) - 1.
/// s2 | s1 is recommended; the caller is expected to warn otherwise.
Rational compose_speciality(const Integer& s1, const Integer& s2,
                            const Rational& e_prev);

} // namespace chb

#endif
