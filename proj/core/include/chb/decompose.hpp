#ifndef CHB_DECOMPOSE_HPP
#define CHB_DECOMPOSE_HPP

#include "chb/numeric.hpp"

namespace chb {

/// Which division rule produced (k, delta); see decompose().
enum class Branch { Low, High };

const char* branch_name(Branch b);

/// The Euclidean data attached to a triple (r, d, s) that every genus and
/// speciality formula for length-2 flag conditions consumes:
///
///   d - 1 = m*s + eps,           0 <= eps <= s-1
///   s - 1 = w*(r-2) + v,         0 <= v <= r-2
///
/// and, depending on the branch,
///
///   Low  (eps <  w*(r-1-v)):  eps = k*w + delta,                0 <= delta < w
///   High (eps >= w*(r-1-v)):  eps + r-2-v = (w+1)*k + delta,    0 <= delta < w+1
struct Decomposition {
    Integer r;
    Integer d;
    Integer s;
    Integer m;
    Integer eps;
    Integer w;
    Integer v;
    Branch branch = Branch::Low;
    Integer k;
    Integer delta;
};

/// Computes the unique Decomposition of (r, d, s).
/// Requires r >= 3, s >= r-1 (which forces w >= 1) and d >= 1.
Decomposition decompose(const Integer& r, const Integer& d, const Integer& s);

/// Euclidean data for a pair (t, u): t - 1 = alpha*u + beta, 0 <= beta < u.
struct TUDecomposition {
    Integer t;
    Integer u;
    Integer alpha;
    Integer beta;

    /// beta == u-1, i.e. u | t.
    bool u_divides_t() const { return beta == u - 1; }
};

/// Requires u >= 1 and t >= u.
TUDecomposition decompose_tu(const Integer& t, const Integer& u);

} // namespace chb

#endif
