#ifndef CHB_HILBERT_HPP
#define CHB_HILBERT_HPP

#include <cstddef>
#include <vector>

#include "chb/numeric.hpp"

namespace chb {

/// Hilbert function of the general hyperplane section of a curve: a
/// nondecreasing sequence h(0) = 1, h(1), ... that becomes constant at
/// `cap` (the degree of the curve). Only the prefix up to the first cap
/// value needs to be stored; at(i) returns `cap` beyond it.
///
/// The type is generic on purpose: acm_speciality() accepts arbitrary
/// user-supplied section data, not just the Castelnuovo extremal function.
class HilbertFunction {
public:
    HilbertFunction(std::vector<Integer> values, Integer cap);

    const Integer& cap() const { return cap_; }
    const std::vector<Integer>& values() const { return values_; }

    /// h(i); equal to cap() for i beyond the stored prefix.
    const Integer& at(std::size_t i) const {
        return i < values_.size() ? values_[i] : cap_;
    }

private:
    std::vector<Integer> values_;
    Integer cap_;
};

/// Maximal arithmetic genus of an integral nondegenerate degree-s curve in
/// P^n: with s-1 = w(n-1) + v, 0 <= v <= n-2, the bound is
/// C(w,2)(n-1) + wv. Requires n >= 2 and s >= n.
Integer castelnuovo_bound(const Integer& n, const Integer& s);

/// Hilbert function of the general hyperplane section of a Castelnuovo
/// (maximal-genus) curve of degree s in P^n: h(i) = min(s, i(n-1)+1).
/// Requires n >= 2 and s >= n.
HilbertFunction castelnuovo_hilbert(const Integer& n, const Integer& s);

/// Arithmetic genus of an ACM curve of degree d from its section Hilbert
/// function: sum over i >= 1 of (d - h(i)). Requires h.cap() == d.
Integer genus_from_hilbert(const Integer& d, const HilbertFunction& h);

/// Speciality index of an ACM curve of degree d with section Hilbert
/// function h: max{ i : h(i) < d } - 1. A section that spans immediately
/// (h(1) = d) gives -1. Requires h.cap() == d and d >= 2.
Integer acm_speciality(const HilbertFunction& h, const Integer& d);

} // namespace chb

#endif
