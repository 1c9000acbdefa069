#include "chb/decompose.hpp"

namespace chb {

const char* branch_name(Branch b) { return b == Branch::Low ? "low" : "high"; }

Decomposition decompose(const Integer& r, const Integer& d, const Integer& s) {
    if (r < 3)
        throw DomainError("decompose: need r >= 3, got r = " + str(r));
    if (s < r - 1)
        throw DomainError("decompose: need s >= r-1, got s = " + str(s) +
                          " with r = " + str(r));
    if (d < 1)
        throw DomainError("decompose: need d >= 1, got d = " + str(d));

    Decomposition out;
    out.r = r;
    out.d = d;
    out.s = s;
    // All dividends are nonnegative, so truncated division is Euclidean here.
    out.m = (d - 1) / s;
    out.eps = (d - 1) % s;
    out.w = (s - 1) / (r - 2);
    out.v = (s - 1) % (r - 2);
    // s >= r-1 gives w >= 1, so the Low division below is well defined.
    if (out.eps < out.w * (r - 1 - out.v)) {
        out.branch = Branch::Low;
        out.k = out.eps / out.w;
        out.delta = out.eps % out.w;
    } else {
        out.branch = Branch::High;
        Integer lhs = out.eps + r - 2 - out.v;
        out.k = lhs / (out.w + 1);
        out.delta = lhs % (out.w + 1);
    }
    return out;
}

TUDecomposition decompose_tu(const Integer& t, const Integer& u) {
    if (u < 1)
        throw DomainError("decompose_tu: need u >= 1, got u = " + str(u));
    if (t < u)
        throw DomainError("decompose_tu: need t >= u, got t = " + str(t) +
                          ", u = " + str(u));
    TUDecomposition out;
    out.t = t;
    out.u = u;
    out.alpha = (t - 1) / u;
    out.beta = (t - 1) % u;
    return out;
}

} // namespace chb
