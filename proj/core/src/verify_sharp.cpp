#include "chb/ci.hpp"
#include "chb/speciality.hpp"

namespace chb {

namespace {

SharpResult check_attained(Rational bound, CIType ci) {
    CIInvariants inv = ci_invariants(ci);
    bool attained = (Rational(inv.speciality) == bound) &&
                    speciality_from_genus(inv.degree, inv.genus) == inv.speciality;
    return SharpResult{std::move(bound), std::move(ci), attained};
}

} // namespace

SharpResult verify_sharp_p3(const Integer& d, const Integer& s) {
    if (s < 1 || d < 1)
        throw DomainError("verify_sharp_p3: need d >= 1 and s >= 1");
    if (d % s != 0)
        throw DivisibilityError("verify_sharp_p3: s = " + str(s) +
                                " does not divide d = " + str(d));
    return check_attained(bound_p3(d, s).value, CIType(3, {s, d / s}));
}

SharpResult verify_sharp_p5(const Integer& d, const Integer& s, const Integer& t,
                            const Integer& u) {
    BoundReport report = bound_p5(d, s, t, u);
    if (!report.witness)
        throw DivisibilityError("verify_sharp_p5: need u | t, t | s, s | d");
    return check_attained(report.value, *report.witness);
}

SharpResult verify_sharp_flag_divisible(const Integer& r,
                                        const std::vector<Integer>& degrees) {
    BoundReport report = flag_bound_divisible(FlagCondition(r, degrees));
    return check_attained(report.value, *report.witness);
}

SharpResult verify_sharp_flag2(const Integer& r, const Integer& d, const Integer& s) {
    BoundReport report = flag2_bound(r, d, s);
    if (!report.witness)
        throw DivisibilityError(
            "verify_sharp_flag2: no canonical complete-intersection witness for (r, d, s) = (" +
            str(r) + ", " + str(d) + ", " + str(s) + ")");
    return check_attained(report.value, *report.witness);
}

SharpResult verify_sharp(SharpModel model, const std::vector<Integer>& params) {
    auto need = [&](std::size_t n, const char* what) {
        if (params.size() != n)
            throw DomainError(std::string("verify_sharp: ") + what + " takes " +
                              std::to_string(n) + " parameters, got " +
                              std::to_string(params.size()));
    };
    switch (model) {
    case SharpModel::ThmA:
        need(2, "thmA {d, s}");
        return verify_sharp_p3(params[0], params[1]);
    case SharpModel::ThmB:
        need(4, "thmB {d, s, t, u}");
        return verify_sharp_p5(params[0], params[1], params[2], params[3]);
    case SharpModel::Prop1ii: {
        if (params.size() < 3)
            throw DomainError("verify_sharp: prop1ii takes {r, s1, ..., s_{r-1}}");
        std::vector<Integer> degrees(params.begin() + 1, params.end());
        return verify_sharp_flag_divisible(params[0], degrees);
    }
    case SharpModel::Prop2:
        need(3, "prop2 {r, d, s}");
        return verify_sharp_flag2(params[0], params[1], params[2]);
    }
    throw DomainError("verify_sharp: unknown model");
}

} // namespace chb
