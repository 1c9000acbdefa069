#include "chb/ci.hpp"

#include <algorithm>

namespace chb {

CIType::CIType(const Integer& r, std::vector<Integer> multidegree)
    : r_(r), multidegree_(std::move(multidegree)) {
    if (r_ < 3)
        throw DomainError("CIType: need r >= 3, got r = " + chb::str(r_));
    if (Integer(static_cast<unsigned long>(multidegree_.size())) != r_ - 1)
        throw DomainError("CIType: a complete intersection curve in P^" + chb::str(r_) +
                          " needs " + chb::str(r_ - 1) + " degrees, got " +
                          std::to_string(multidegree_.size()));
    for (const auto& a : multidegree_)
        if (a < 1)
            throw DomainError("CIType: degrees must be >= 1, got " + chb::str(a));
    std::sort(multidegree_.begin(), multidegree_.end());
}

std::string CIType::str() const {
    std::string out;
    for (std::size_t i = 0; i < multidegree_.size(); ++i) {
        if (i)
            out += 'x';
        out += chb::str(multidegree_[i]);
    }
    return out;
}

CIInvariants ci_invariants(const CIType& ci) {
    CIInvariants inv;
    inv.degree = 1;
    Integer degree_sum = 0;
    for (const auto& a : ci.multidegree()) {
        inv.degree *= a;
        degree_sum += a;
        inv.flag_degrees.push_back(inv.degree);
        if (a == 1)
            inv.has_linear_entry = true;
    }
    inv.speciality = degree_sum - ci.r() - 1;
    // degree * speciality is always even: if every a_i is odd the degree sum
    // is congruent to r-1 mod 2, making the speciality even.
    inv.genus = 1 + inv.degree * inv.speciality / 2;
    return inv;
}

std::vector<CIType> enumerate_ci_for_flag(const Integer& r,
                                          std::vector<Integer> flag_degrees) {
    if (r < 3)
        throw DomainError("enumerate_ci_for_flag: need r >= 3, got r = " + str(r));
    if (Integer(static_cast<unsigned long>(flag_degrees.size())) != r - 1)
        throw DomainError("enumerate_ci_for_flag: need a full chain of " + str(r - 1) +
                          " degrees, got " + std::to_string(flag_degrees.size()));
    for (const auto& deg : flag_degrees)
        if (deg < 1)
            throw DomainError("enumerate_ci_for_flag: degrees must be >= 1, got " +
                              str(deg));
    // Normalize to ascending (hypersurface first).
    if (flag_degrees.front() > flag_degrees.back())
        std::reverse(flag_degrees.begin(), flag_degrees.end());
    if (!std::is_sorted(flag_degrees.begin(), flag_degrees.end()))
        return {};
    std::vector<Integer> quotients;
    quotients.push_back(flag_degrees[0]);
    for (std::size_t i = 1; i < flag_degrees.size(); ++i) {
        if (flag_degrees[i] % flag_degrees[i - 1] != 0)
            return {};
        quotients.push_back(flag_degrees[i] / flag_degrees[i - 1]);
    }
    return {CIType(r, std::move(quotients))};
}

} // namespace chb
