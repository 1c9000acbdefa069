#ifndef CHB_FLAG_HPP
#define CHB_FLAG_HPP

#include <vector>

#include "chb/numeric.hpp"

namespace chb {

/// A flag condition (r; s_1, ..., s_l) on a curve in P^r: the curve has
/// degree s_1 and, for i = 2..l, is not contained in any integral subvariety
/// of dimension i and degree < s_i.
///
/// Validated invariants: 3 <= r, 1 <= l <= r-1, s_1 >= s_2 >= ... >= s_l,
/// and s_l >= r - l + 1.
class FlagCondition {
public:
    FlagCondition(const Integer& r, std::vector<Integer> degrees);

    const Integer& r() const { return r_; }
    const std::vector<Integer>& degrees() const { return degrees_; }
    std::size_t length() const { return degrees_.size(); }

    /// 1-based access: degree(i) = s_i.
    const Integer& degree(std::size_t i) const { return degrees_.at(i - 1); }

private:
    Integer r_;
    std::vector<Integer> degrees_;
};

} // namespace chb

#endif
