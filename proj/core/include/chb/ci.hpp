#ifndef CHB_CI_HPP
#define CHB_CI_HPP

#include <string>
#include <vector>

#include "chb/numeric.hpp"

namespace chb {

/// A complete-intersection curve in P^r, given by the multidegree
/// (a_1, ..., a_{r-1}) of the hypersurfaces cutting it out. Multidegrees are
/// canonicalized sorted nondecreasing; degree-1 entries are permitted
/// (linear sections) and flagged in the derived invariants.
class CIType {
public:
    CIType(const Integer& r, std::vector<Integer> multidegree);

    const Integer& r() const { return r_; }
    const std::vector<Integer>& multidegree() const { return multidegree_; }

    /// "a1 x a2 x ... x ak" rendering, e.g. "2x3x4x5".
    std::string str() const;

    friend bool operator==(const CIType& a, const CIType& b) {
        return a.r_ == b.r_ && a.multidegree_ == b.multidegree_;
    }

private:
    Integer r_;
    std::vector<Integer> multidegree_; // sorted nondecreasing
};

/// Exact invariants of a complete intersection:
///   degree      = product of the multidegree,
///   speciality  = sum of the multidegree - r - 1,
///   genus       = 1 + degree * speciality / 2 (an integer by parity),
///   flag_degrees = prefix products of the sorted multidegree, i.e. the
///                  nominal degrees of the flag of complete intersections
///                  containing the curve, from hypersurface down to the
///                  curve itself (ascending).
struct CIInvariants {
    Integer degree;
    Integer speciality;
    Integer genus;
    std::vector<Integer> flag_degrees;
    bool has_linear_entry = false;
};

CIInvariants ci_invariants(const CIType& ci);

/// All complete intersections in P^r whose flag of prefix-product degrees
/// matches the given chain of the curve, surface, ..., hypersurface degrees.
/// The chain may be given curve-first (descending) or hypersurface-first
/// (ascending); it must have exactly r-1 entries. When every degree divides
/// the previous one the result is the single canonical type; an empty list
/// signals infeasibility.
std::vector<CIType> enumerate_ci_for_flag(const Integer& r,
                                          std::vector<Integer> flag_degrees);

/// Bound models that come with a canonical complete-intersection witness.
enum class SharpModel { ThmA, ThmB, Prop1ii, Prop2 };

struct SharpResult {
    Rational bound;
    CIType ci;
    bool attained = false;
};

/// Builds the canonical witness for the model, evaluates the model's bound,
/// and reports whether the witness's speciality attains it exactly. The
/// subcanonical identity (speciality from genus via degree*e = 2g-2) is
/// re-checked as part of `attained`.
///
/// Parameter layout: ThmA {d, s}; ThmB {d, s, t, u}; Prop1ii {r, s1, ..,
/// s_{r-1}}; Prop2 {r, d, s}. Throws DivisibilityError when no canonical
/// witness exists.
SharpResult verify_sharp(SharpModel model, const std::vector<Integer>& params);

SharpResult verify_sharp_p3(const Integer& d, const Integer& s);
SharpResult verify_sharp_p5(const Integer& d, const Integer& s, const Integer& t,
                            const Integer& u);
SharpResult verify_sharp_flag_divisible(const Integer& r,
                                        const std::vector<Integer>& degrees);
SharpResult verify_sharp_flag2(const Integer& r, const Integer& d, const Integer& s);

} // namespace chb

#endif
