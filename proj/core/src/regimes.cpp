#include "chb/regimes.hpp"

namespace chb {

namespace {

RegimeClause clause(std::string name, Rational actual, Rational threshold,
                    bool strict = true) {
    RegimeClause c;
    c.name = std::move(name);
    c.actual = std::move(actual);
    c.threshold = std::move(threshold);
    c.strict = strict;
    c.satisfied = strict ? (c.actual > c.threshold) : (c.actual >= c.threshold);
    return c;
}

RegimeReport finish(std::vector<RegimeClause> clauses, std::string note = {}) {
    RegimeReport out;
    out.clauses = std::move(clauses);
    out.note = std::move(note);
    out.satisfied = true;
    for (const auto& c : out.clauses)
        out.satisfied = out.satisfied && c.satisfied;
    return out;
}

} // namespace

std::vector<std::string> RegimeReport::failed_clauses() const {
    std::vector<std::string> out;
    for (const auto& c : clauses)
        if (!c.satisfied)
            out.push_back(c.name);
    return out;
}

RegimeReport regime_p5(const Integer& d, const Integer& s, const Integer& t,
                       const Integer& u) {
    if (u < 1 || t < u || s < t || d < s)
        throw DomainError("regime_p5: need d >= s >= t >= u >= 1");
    std::vector<RegimeClause> clauses;
    if (u >= 2) {
        clauses.push_back(clause("d > (2/3)s^4", Rational(d),
                                 Rational(2 * ipow(s, 4), 3)));
        clauses.push_back(clause("s > (2/3)t^4", Rational(s),
                                 Rational(2 * ipow(t, 4), 3)));
        clauses.push_back(clause("t > 408(u+1)^3", Rational(t),
                                 Rational(408 * ipow(u + 1, 3))));
    } else {
        Rational a(2 * ipow(s, 4), 3);
        Rational b(12 * (s + 1) * (s + 1));
        clauses.push_back(clause("d > max{(2/3)s^4, 12(s+1)^2}", Rational(d),
                                 a > b ? a : b));
        clauses.push_back(clause("s > t^2 - t", Rational(s), Rational(t * t - t)));
        clauses.push_back(clause("t >= 2", Rational(t), Rational(2), false));
    }
    return finish(std::move(clauses));
}

RegimeReport regime_flag(const FlagCondition& flag) {
    const auto& deg = flag.degrees();
    const Integer r = flag.r();
    const Integer l(static_cast<unsigned long>(deg.size()));
    if (l < 2)
        throw DomainError("regime_flag: need a flag of length >= 2");
    Integer s3;
    std::string note =
        "necessary clause only; the base hypotheses of the underlying flag-genus "
        "bound are assumed separately";
    if (l == 2) {
        if (r == 3)
            throw DomainError("regime_flag: l = 2 with r = 3 puts s3 = r-3 = 0");
        s3 = r - 3;
        note += "; s3 taken as r-3 = " + str(s3) + " by convention for l = 2";
    } else {
        s3 = deg[2];
    }
    Integer tail_product = 1; // s_2 * ... * s_l
    for (std::size_t i = 1; i < deg.size(); ++i)
        tail_product *= deg[i];
    Rational threshold = Rational(2 * (r - l) * (l * l + 2 * l + 9)) *
                         Rational(ipow(deg[1], 3), s3 * s3) * Rational(tail_product);
    std::vector<RegimeClause> clauses{
        clause("s1 > 2(r-l)(l^2+2l+9)(s2^3/s3^2)s2...sl", Rational(deg[0]),
               std::move(threshold))};
    return finish(std::move(clauses), std::move(note));
}

RegimeReport regime_via_genus_report(const Integer& r, const Integer& s1,
                                     const Integer& s2) {
    if (r < 3)
        throw DomainError("regime_via_genus: need r >= 3, got r = " + str(r));
    return finish({clause("s1 > 2s2^4/(r-2)", Rational(s1),
                          Rational(2 * ipow(s2, 4), r - 2))});
}

RegimeReport regime_flag2_report(const Integer& r, const Integer& d, const Integer& s) {
    if (r < 3)
        throw DomainError("regime_flag2: need r >= 3, got r = " + str(r));
    return finish({clause("d > 2s^4/(r-2)", Rational(d),
                          Rational(2 * ipow(s, 4), r - 2))});
}

bool regime_via_genus(const Integer& r, const Integer& s1, const Integer& s2) {
    return regime_via_genus_report(r, s1, s2).satisfied;
}

bool regime_flag2(const Integer& r, const Integer& d, const Integer& s) {
    return regime_flag2_report(r, d, s).satisfied;
}

bool genus_gap_check(const Integer& d, const Integer& s, const Integer& t,
                     const Integer& u) {
    if (u < 1 || t < u || s < t || d < s)
        throw DomainError("genus_gap_check: need d >= s >= t >= u >= 1");
    Rational lhs = Rational(3, 4) * Rational(d, 2) + Rational(33 * ipow(s, 3), t * t);
    Rational rhs = Rational(d, 2) * (Rational(t, u * (u + 1)) - Rational(3 * u));
    return lhs < rhs;
}

} // namespace chb
