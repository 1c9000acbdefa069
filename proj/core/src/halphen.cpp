#include "chb/halphen.hpp"

#include "chb/hilbert.hpp"

namespace chb {

Rational halphen_remainder(const Integer& r, const Integer& d, const Integer& s) {
    Decomposition dec = decompose(r, d, s);
    Integer G = castelnuovo_bound(r - 1, s);
    Rational head = Rational(1 + dec.eps, 2 * s) * Rational(s + 1 - dec.eps - 2 * G);
    return head + Rational(dec.w * (dec.eps - dec.delta)) -
           Rational(dec.k * binom2(dec.w + 1)) + Rational(binom2(dec.delta));
}

Rational halphen_value(const Integer& r, const Integer& d, const Integer& s) {
    Integer G = castelnuovo_bound(r - 1, s);
    return Rational(d * d, 2 * s) + Rational(d, 2 * s) * Rational(2 * G - 2 - s) +
           halphen_remainder(r, d, s);
}

Integer halphen_bound(const Integer& r, const Integer& d, const Integer& s) {
    Rational value = halphen_value(r, d, s);
    if (!value.is_integer())
        throw IntegralityError("halphen_bound(" + str(r) + ", " + str(d) + ", " +
                               str(s) + ") is not an integer: " + value.str());
    return value.num();
}

namespace {

void check_stu(const Integer& s, const Integer& t, const Integer& u) {
    if (u < 1 || t < u || s < t)
        throw DomainError("need s >= t >= u >= 1, got s = " + str(s) + ", t = " +
                          str(t) + ", u = " + str(u));
}

Rational p4_center(const Integer& s, const Integer& t, const Integer& u,
                   const Integer& beta) {
    Rational penalty =
        Rational((u - 1 - beta) * (1 + beta) * (u - 1), u * t);
    Rational bracket = Rational(t, u) + Rational(u - 5) - penalty;
    return Rational(s * s, 2 * t) + Rational(s, 2) * bracket + Rational(1);
}

} // namespace

Integer genus_bound_p4(const Integer& s, const Integer& t, const Integer& u) {
    check_stu(s, t, u);
    if (t % u != 0)
        throw DivisibilityError("genus_bound_p4: u = " + str(u) +
                                " does not divide t = " + str(t));
    if (s % t != 0)
        throw DivisibilityError("genus_bound_p4: t = " + str(t) +
                                " does not divide s = " + str(s));
    Rational value =
        Rational(s * s, 2 * t) + Rational(s, 2) * (Rational(t, u) + Rational(u - 5)) +
        Rational(1);
    if (!value.is_integer())
        throw IntegralityError("genus_bound_p4(" + str(s) + ", " + str(t) + ", " +
                               str(u) + ") is not an integer: " + value.str());
    return value.num();
}

IntervalBound genus_interval_p4(const Integer& s, const Integer& t, const Integer& u) {
    check_stu(s, t, u);
    TUDecomposition tu = decompose_tu(t, u);
    IntervalBound out;
    out.center = p4_center(s, t, u, tu.beta);
    bool u_div_t = (t % u == 0);
    bool t_div_s = (s % t == 0);
    if (u_div_t && t_div_s) {
        // rho_1 = 0 exactly; the enclosure collapses.
        out.lo = out.center;
        out.hi = out.center;
        return out;
    }
    Rational spread = Rational(t * t * t, 3);
    out.lo = out.center - Rational(1) - spread;
    out.hi = out.center - Rational(1) + spread;
    // For u >= 2 the sign fact rho_1 <= 0 under u | t caps the top end.
    if (u >= 2 && u_div_t)
        out.hi = out.center;
    return out;
}

IntervalBound genus_interval_p5(const Integer& d, const Integer& s, const Integer& t,
                                const Integer& u) {
    if (u < 1 || t < u || s < t || d < s)
        throw DomainError("genus_interval_p5: need d >= s >= t >= u >= 1");
    IntervalBound out;
    Rational bracket = Rational(s, t) + Rational(t, u) + Rational(u - 6);
    out.center = Rational(d * d, 2 * s) + Rational(d, 2) * bracket + Rational(1);
    Rational half = Rational(3, 4) * Rational(d, 2) + Rational(33 * s * s * s, t * t);
    out.lo = out.center - half;
    out.hi = out.center + half;
    return out;
}

} // namespace chb
