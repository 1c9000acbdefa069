#include "chb/flag.hpp"

namespace chb {

FlagCondition::FlagCondition(const Integer& r, std::vector<Integer> degrees)
    : r_(r), degrees_(std::move(degrees)) {
    if (r_ < 3)
        throw DomainError("FlagCondition: need r >= 3, got r = " + str(r_));
    const auto l = degrees_.size();
    if (l < 1 || Integer(static_cast<unsigned long>(l)) > r_ - 1)
        throw DomainError("FlagCondition: need 1 <= l <= r-1, got l = " +
                          std::to_string(l) + " with r = " + str(r_));
    for (std::size_t i = 1; i < l; ++i)
        if (degrees_[i - 1] < degrees_[i])
            throw DomainError("FlagCondition: degrees must be nonincreasing (s_" +
                              std::to_string(i) + " < s_" + std::to_string(i + 1) + ")");
    Integer min_last = r_ - Integer(static_cast<unsigned long>(l)) + 1;
    if (degrees_.back() < min_last)
        throw DomainError("FlagCondition: need s_l >= r-l+1 = " + str(min_last) +
                          ", got s_l = " + str(degrees_.back()));
}

} // namespace chb
