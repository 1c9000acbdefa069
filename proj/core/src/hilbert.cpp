#include "chb/hilbert.hpp"

namespace chb {

HilbertFunction::HilbertFunction(std::vector<Integer> values, Integer cap)
    : values_(std::move(values)), cap_(std::move(cap)) {
    if (values_.empty())
        throw DomainError("HilbertFunction: need at least h(0)");
    if (values_[0] != 1)
        throw DomainError("HilbertFunction: h(0) must be 1, got " + str(values_[0]));
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > cap_)
            throw DomainError("HilbertFunction: h(" + std::to_string(i) +
                              ") = " + str(values_[i]) + " exceeds cap " + str(cap_));
        if (i > 0 && values_[i] < values_[i - 1])
            throw DomainError("HilbertFunction: not nondecreasing at i = " +
                              std::to_string(i));
    }
}

namespace {

void check_curve_args(const Integer& n, const Integer& s) {
    if (n < 2)
        throw DomainError("castelnuovo: need n >= 2, got n = " + str(n));
    if (s < n)
        throw DomainError("castelnuovo: need s >= n (nondegenerate curve), got s = " +
                          str(s) + ", n = " + str(n));
}

} // namespace

Integer castelnuovo_bound(const Integer& n, const Integer& s) {
    check_curve_args(n, s);
    Integer w = (s - 1) / (n - 1);
    Integer v = (s - 1) % (n - 1);
    return binom2(w) * (n - 1) + w * v;
}

HilbertFunction castelnuovo_hilbert(const Integer& n, const Integer& s) {
    check_curve_args(n, s);
    std::vector<Integer> values;
    for (Integer i = 0;; ++i) {
        Integer h = i * (n - 1) + 1;
        if (h >= s) {
            values.push_back(s);
            break;
        }
        values.push_back(h);
    }
    return HilbertFunction(std::move(values), s);
}

Integer genus_from_hilbert(const Integer& d, const HilbertFunction& h) {
    if (h.cap() != d)
        throw DomainError("genus_from_hilbert: cap " + str(h.cap()) +
                          " does not match degree " + str(d));
    Integer genus = 0;
    for (std::size_t i = 1; i < h.values().size(); ++i)
        genus += d - h.values()[i];
    return genus;
}

Integer acm_speciality(const HilbertFunction& h, const Integer& d) {
    if (h.cap() != d)
        throw DomainError("acm_speciality: cap " + str(h.cap()) +
                          " does not match degree " + str(d));
    bool found = false;
    std::size_t max_index = 0;
    for (std::size_t i = 0; i < h.values().size(); ++i) {
        if (h.values()[i] < d) {
            max_index = i;
            found = true;
        }
    }
    if (!found) // only possible for d = 1, where the index is undefined
        throw DomainError("acm_speciality: no index with h(i) < d (d = " + str(d) + ")");
    return Integer(static_cast<unsigned long>(max_index)) - 1;
}

} // namespace chb
