#include "chb/speciality.hpp"

#include "chb/hilbert.hpp"

namespace chb {

namespace {

BoundReport make_report(Rational value,
                        std::vector<std::pair<std::string, std::string>> params) {
    BoundReport out;
    out.value = std::move(value);
    out.floor = out.value.floor();
    out.is_integer = out.value.is_integer();
    out.params = std::move(params);
    return out;
}

std::pair<std::string, std::string> echo(const std::string& name, const Integer& v) {
    return {name, str(v)};
}

// Nondecreasing factorizations of n into exactly `parts` factors >= min_factor.
void factorizations_rec(const Integer& n, std::size_t parts, const Integer& min_factor,
                        std::vector<Integer>& prefix,
                        std::vector<std::vector<Integer>>& out) {
    if (parts == 1) {
        if (n >= min_factor) {
            prefix.push_back(n);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    // In a nondecreasing factorization the leading factor satisfies a^2 <= n.
    for (Integer a = min_factor; a * a <= n; ++a) {
        if (n % a != 0)
            continue;
        prefix.push_back(a);
        factorizations_rec(n / a, parts - 1, a, prefix, out);
        prefix.pop_back();
    }
}

std::vector<std::vector<Integer>> factorizations(const Integer& n, std::size_t parts) {
    std::vector<std::vector<Integer>> out;
    std::vector<Integer> prefix;
    factorizations_rec(n, parts, 1, prefix, out);
    return out;
}

} // namespace

Integer speciality_from_genus(const Integer& d, const Integer& pa) {
    if (d < 1)
        throw DomainError("speciality_from_genus: need d >= 1, got d = " + str(d));
    return Rational(2 * pa - 2, d).floor();
}

BoundReport bound_p3(const Integer& d, const Integer& s) {
    if (d < 1 || s < 1)
        throw DomainError("bound_p3: need d >= 1 and s >= 1");
    BoundReport out =
        make_report(Rational(d, s) + Rational(s - 4), {echo("d", d), echo("s", s)});
    if (d % s == 0) {
        out.equality_possible = true;
        out.witness = CIType(3, {s, d / s});
    }
    return out;
}

BoundReport bound_p5(const Integer& d, const Integer& s, const Integer& t,
                     const Integer& u) {
    if (u < 1 || t < u || s < t || d < s)
        throw DomainError("bound_p5: need d >= s >= t >= u >= 1");
    Rational value = Rational(d, s) + Rational(s, t) + Rational(t, u) + Rational(u - 6);
    BoundReport out = make_report(
        std::move(value), {echo("d", d), echo("s", s), echo("t", t), echo("u", u)});
    if (t % u == 0 && s % t == 0 && d % s == 0) {
        out.equality_possible = true;
        out.witness = CIType(5, {u, t / u, s / t, d / s});
    }
    return out;
}

Rational genus_threshold_p5(const Integer& d, const Integer& s, const Integer& t,
                            const Integer& u) {
    if (u < 1 || t < u || s < t || d < s)
        throw DomainError("genus_threshold_p5: need d >= s >= t >= u >= 1");
    Rational bracket = Rational(s, t) + Rational(t, u) + Rational(u - 6);
    return Rational(d * d, 2 * s) + Rational(d, 2) * bracket + Rational(1);
}

BoundReport flag_bound_slack(const FlagCondition& flag, std::optional<Integer> s_next) {
    const auto& deg = flag.degrees();
    const Integer l(static_cast<unsigned long>(deg.size()));
    Integer tail = s_next.value_or(flag.r() - l);
    if (tail < 1)
        throw DomainError("flag_bound_slack: need s_{l+1} >= 1, got " + str(tail));
    Rational sum = 0;
    for (std::size_t i = 0; i + 1 < deg.size(); ++i)
        sum += Rational(deg[i], deg[i + 1]);
    sum += Rational(deg.back(), tail);
    Rational value = sum - Rational(l) - Rational(2, flag.r() - l) + Rational(3, 4);
    std::vector<std::pair<std::string, std::string>> params{echo("r", flag.r())};
    for (std::size_t i = 0; i < deg.size(); ++i)
        params.push_back(echo("s" + std::to_string(i + 1), deg[i]));
    params.push_back(echo("s_next", tail));
    return make_report(std::move(value), std::move(params));
}

BoundReport flag_bound_divisible(const FlagCondition& flag) {
    const auto& deg = flag.degrees();
    const Integer l(static_cast<unsigned long>(deg.size()));
    if (l != flag.r() - 1)
        throw DomainError("flag_bound_divisible: need a full flag (l = r-1), got l = " +
                          str(l) + " with r = " + str(flag.r()));
    std::vector<Integer> witness_degrees{deg.back()};
    Rational sum = 0;
    for (std::size_t i = 0; i + 1 < deg.size(); ++i) {
        if (deg[i] % deg[i + 1] != 0)
            throw DivisibilityError("flag_bound_divisible: s_" + std::to_string(i + 2) +
                                    " = " + str(deg[i + 1]) + " does not divide s_" +
                                    std::to_string(i + 1) + " = " + str(deg[i]));
        sum += Rational(deg[i], deg[i + 1]);
        witness_degrees.push_back(deg[i] / deg[i + 1]);
    }
    Rational value = sum + Rational(deg.back()) - Rational(flag.r() + 1);
    std::vector<std::pair<std::string, std::string>> params{echo("r", flag.r())};
    for (std::size_t i = 0; i < deg.size(); ++i)
        params.push_back(echo("s" + std::to_string(i + 1), deg[i]));
    BoundReport out = make_report(std::move(value), std::move(params));
    out.equality_possible = true;
    out.witness = CIType(flag.r(), std::move(witness_degrees));
    return out;
}

Rational flag_bound_via_genus(const Integer& s1, const Integer& s2, const Integer& G) {
    if (s2 < 1)
        throw DomainError("flag_bound_via_genus: need s2 >= 1, got " + str(s2));
    if (G < 0)
        throw DomainError("flag_bound_via_genus: need G >= 0, got " + str(G));
    return Rational(s1, s2) + Rational(2 * G - 2 - s2, s2);
}

bool flag2_equality_case(const Integer& r, const Integer& d, const Integer& s) {
    Decomposition dec = decompose(r, d, s);
    if (dec.v == 0)
        return dec.eps == dec.w;
    return dec.eps == dec.w * (r - 1 - dec.v) + 1;
}

std::optional<CIType> flag2_witness(const Integer& r, const Integer& d,
                                    const Integer& s) {
    if (d % s != 0)
        return std::nullopt;
    Integer target_genus = castelnuovo_bound(r - 1, s);
    // A factorization of s into r-2 degrees realizes the witness exactly when
    // the complete-intersection curve it cuts in P^{r-1} has maximal genus.
    std::size_t parts = static_cast<std::size_t>(Integer(r - 2).get_ui());
    for (auto& factors : factorizations(s, parts)) {
        Integer sum = 0;
        for (const auto& a : factors)
            sum += a;
        Integer genus_num = 2 + s * (sum - r); // 2 * genus of the CI curve in P^{r-1}
        if (genus_num == 2 * target_genus) {
            factors.push_back(d / s);
            return CIType(r, std::move(factors));
        }
    }
    return std::nullopt;
}

BoundReport flag2_bound(const Integer& r, const Integer& d, const Integer& s) {
    if (d < s)
        throw DomainError("flag2_bound: need d >= s, got d = " + str(d) +
                          ", s = " + str(s));
    Decomposition dec = decompose(r, d, s); // validates r >= 3, s >= r-1
    Integer G = castelnuovo_bound(r - 1, s);
    Rational value = Rational(d, s) + Rational(2 * G - 2 - s, s);
    BoundReport out =
        make_report(std::move(value), {echo("r", r), echo("d", d), echo("s", s)});
    out.equality_possible = flag2_equality_case(r, d, s);
    out.witness = flag2_witness(r, d, s);
    out.decomposition = dec;
    return out;
}

Rational genus_bound_on_surface(const Integer& r, const Integer& d, const Integer& s,
                                const Integer& pi) {
    if (r < 3)
        throw DomainError("genus_bound_on_surface: need r >= 3, got r = " + str(r));
    if (s < r - 1)
        throw DomainError("genus_bound_on_surface: need s >= r-1, got s = " + str(s));
    if (d < s * s)
        throw DomainError("genus_bound_on_surface: need d >= s^2, got d = " + str(d) +
                          ", s^2 = " + str(s * s));
    return Rational(d * d, 2 * s) + Rational(d, 2 * s) * Rational(2 * pi - 2 - s) +
           Rational(ipow(s, 3), r - 2);
}

Rational speciality_bound_on_surface(const Integer& r, const Integer& d,
                                     const Integer& s, const Integer& pi,
                                     bool enforce_regime) {
    if (r < 3 || s < 1 || d < 1)
        throw DomainError("speciality_bound_on_surface: need r >= 3, d >= 1, s >= 1");
    if (enforce_regime && !(Rational(d) > Rational(2 * ipow(s, 4), r - 2)))
        throw RegimeError("speciality_bound_on_surface: regime d > 2s^4/(r-2) fails: d = " +
                          str(d) + ", threshold = " + Rational(2 * ipow(s, 4), r - 2).str());
    return Rational(d, s) + Rational(2 * pi - 2 - s, s);
}

BoundReport liaison_bound(const Integer& d, const Integer& s, const Integer& t,
                          const Integer& kT) {
    if (t < 1 || s < t)
        throw DomainError("liaison_bound: need s >= t >= 1");
    if (s % t != 0)
        throw DivisibilityError("liaison_bound: t = " + str(t) +
                                " does not divide s = " + str(s));
    Rational value = Rational(d, s) + Rational(s, t) + Rational(kT);
    BoundReport out = make_report(
        std::move(value), {echo("d", d), echo("s", s), echo("t", t), echo("kT", kT)});
    out.equality_possible = (d % s == 0);
    return out;
}

Integer liaison_residual(const Integer& d, const Integer& s, const Integer& t,
                         const Integer& kT, const Integer& e) {
    if (t < 1 || s < t)
        throw DomainError("liaison_residual: need s >= t >= 1");
    if (s % t != 0)
        throw DivisibilityError("liaison_residual: t = " + str(t) +
                                " does not divide s = " + str(s));
    return d - s * (e - kT - s / t);
}

Rational hodge_bound(const Integer& d, const Integer& s, const Integer& pi) {
    if (d < 1 || s < 1)
        throw DomainError("hodge_bound: need d >= 1 and s >= 1");
    return Rational(d * d, 2 * s) + Rational(d, 2 * s) * Rational(2 * pi - 2 - s) +
           Rational(1);
}

BoundReport nondegenerate_bound(const Integer& r, const Integer& d) {
    if (r < 3)
        throw DomainError("nondegenerate_bound: need r >= 3, got r = " + str(r));
    if (d < r)
        throw DomainError("nondegenerate_bound: need d >= r, got d = " + str(d));
    BoundReport out =
        make_report(Rational(d - r - 1, r - 1), {echo("r", r), echo("d", d)});
    out.equality_possible = ((d - 2) % (r - 1) == 0);
    return out;
}

Rational compose_speciality(const Integer& s1, const Integer& s2,
                            const Rational& e_prev) {
    if (s2 < 1)
        throw DomainError("compose_speciality: need s2 >= 1, got " + str(s2));
    return Rational(s1, s2) + e_prev - Rational(1);
}

} // namespace chb
