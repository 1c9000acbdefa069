#ifndef CHB_HALPHEN_HPP
#define CHB_HALPHEN_HPP

#include "chb/decompose.hpp"
#include "chb/numeric.hpp"

namespace chb {

/// An exact enclosure [lo, hi] around a center value, used for genus bounds
/// whose correction term is only known through a magnitude estimate.
struct IntervalBound {
    Rational lo;
    Rational center;
    Rational hi;

    Rational width() const { return hi - lo; }
};

/// The remainder term R of the maximal-genus formula for degree-d curves in
/// P^r not lying on surfaces of degree < s:
///
///   R = (1+eps)/(2s) * (s+1-eps-2G) + w(eps-delta) - k*C(w+1,2) + C(delta,2)
///
/// with G = castelnuovo_bound(r-1, s) and (m, eps, w, v, k, delta) the
/// Euclidean data of decompose(r, d, s). R depends on d only through eps.
Rational halphen_remainder(const Integer& r, const Integer& d, const Integer& s);

/// The Halphen genus bound G(r; d, s) as an exact rational:
///
///   d^2/(2s) + d/(2s) * (2*castelnuovo_bound(r-1,s) - 2 - s) + R.
Rational halphen_value(const Integer& r, const Integer& d, const Integer& s);

/// halphen_value as an integer. Throws IntegralityError when the rational
/// evaluates to a non-integer instead of flooring; a fractional value would
/// signal a formula misuse, not a curve.
Integer halphen_bound(const Integer& r, const Integer& d, const Integer& s);

/// Maximal genus for curves in P^4 under the flag condition (4; s, t, u) in
/// the doubly divisible case u | t, t | s:
///
///   s^2/(2t) + (s/2)(t/u + u - 5) + 1.
///
/// Always an integer (it is the genus of the complete intersection of type
/// (u, t/u, s/t)). Requires s >= t >= u >= 1.
Integer genus_bound_p4(const Integer& s, const Integer& t, const Integer& u);

/// Enclosure of the maximal genus G(4; s, t, u) for arbitrary s >= t >= u >= 1.
/// The center is the closed-form part
///
///   s^2/(2t) + (s/2)(t/u + u - 5 - (u-1-beta)(1+beta)(u-1)/(ut)) + 1
///
/// with t-1 = alpha*u + beta; the residual correction rho_1 satisfies
/// |rho_1 + 1| <= t^3/3, giving lo/hi = center - 1 -/+ t^3/3. When u >= 2
/// divides t, rho_1 <= 0 tightens hi to the center; when additionally t | s,
/// rho_1 = 0 and the enclosure collapses onto genus_bound_p4.
IntervalBound genus_interval_p4(const Integer& s, const Integer& t, const Integer& u);

/// Enclosure of the maximal genus for curves in P^5 under the flag condition
/// (5; d, s, t, u): center = d^2/(2s) + (d/2)(s/t + t/u + u - 6) + 1 with
/// half-width (3/4)(d/2) + 33 s^3/t^2. Requires d >= s >= t >= u >= 1.
IntervalBound genus_interval_p5(const Integer& d, const Integer& s, const Integer& t,
                                const Integer& u);

} // namespace chb

#endif
