#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "fol/projforms.hpp"

namespace fol {

// Weights of a multiplicative action on P^3 together with the Lie-derivative
// eigenvalue n: v = a x0 d/dx0 + b x1 d/dx1 + c x2 d/dx2, L_v w = n w.
struct WeightData {
    long a = 0, b = 0, c = 1;
    long n = 0;

    WeightData() = default;
    WeightData(long a, long b, long c, long n);  // validates 0<=a<=b<=c!=0, gcd 1

    bool degenerate() const {  // codimension-one zeros of the weight field
        return (a == 0 && b == 0 && c == 1) || (a == 1 && b == 1 && c == 1);
    }

    auto operator<=>(const WeightData&) const = default;
};

std::string to_string(const WeightData& w);

using ChiPoint = std::array<long, 3>;

struct CharMonomialSet {
    std::set<ChiPoint> points;
};

PolyVField weight_field(const WeightData& w);  // on C^4

// V_d(a,b,c;n): simultaneous kernel of i_v and L_v - n inside the twisted
// form space.
std::vector<TwistedOneForm> eigenspace(int d, const WeightData& w);

// Independent combinatorial route: per lattice point of the hyperplane
// a alpha + b beta + c gamma = n inside Delta_d, count the admissible dlog
// coefficient directions. Cross-checks dim eigenspace.
std::size_t eigenspace_dim_affine(int d, const WeightData& w);
std::vector<ChiPoint> achievable_chi_points(int d, const WeightData& w);

// iota_d(a,b,c;n) = (c-b, c-a, c; c(d+2)-n); nullopt if the image violates
// the WeightData invariants.
std::optional<WeightData> involution(int d, const WeightData& w);

// dim { v linear : [v, v0] ^ v0 = 0 } modulo the radial field.
std::size_t normalizer_dim_field(const PolyVField& v0);
std::size_t normalizer_dim(const WeightData& w);  // hard error on degenerate weights

// 15 + (dim V - 1) - normalizer dim; hard error on empty eigenspace.
std::size_t tm_dim(int d, const WeightData& w);

CharMonomialSet char_monomials(const PolyForm& affine_one_form);
bool chi_collinear(const CharMonomialSet& s);
// A point with all coordinates >= 1 and total degree < d+2.
bool chi_interior(int d, const CharMonomialSet& s);

// All hyperplanes a alpha + b beta + c gamma = n with 0 <= a <= b <= c != 0,
// gcd(a,b,c) = 1, meeting Delta_d in at least three non-collinear lattice
// points; built from point triples with primitive integral normals.
std::vector<WeightData> enumerate_candidates(int d);

struct QuadrupleCertificate {
    WeightData w;
    std::size_t eigen_dim = 0;
    bool codim_two = false;          // witnessed gcd of coefficients = 1
    std::size_t pif_kernel_dim = 0;  // min over seeds
    bool chi_spanning = false;       // >= 3 non-collinear achievable chi points
    bool kept = false;
};

// Keeps the candidates whose general member has codimension-two zeros and an
// empty integrating-factor kernel (witness seeds, minimum rule); the
// degenerate weight fields of Remark-type (0,0,1), (1,1,1) are excluded.
std::vector<QuadrupleCertificate> longlist_certificates(int d, const std::vector<WeightData>& candidates,
                                                        const Rng& rng, int trials);
std::vector<WeightData> longlist_filter(int d, const std::vector<WeightData>& candidates,
                                        const Rng& rng, int trials);

// Rationality of the eigenvalue ratio of an invertible 2x2 linear part,
// decided exactly from trace and determinant.
bool eigen_ratio_rational(const RatMatrix& J);

// Arithmetic finiteness criterion for non-Kupka singularities (families with
// parameters (r, k, m, gamma)), tested for w and iota_d(w). The reconciled
// family constants reproduce the known 12-item list at d = 3; the literal
// transcription is kept alongside for comparison reports.
bool kupka_arithmetic(int d, const WeightData& w);
bool kupka_families_as_printed(int d, const WeightData& w);
// The three extra degenerate-weight cases with finitely many non-Kupka
// singularities, recorded classification data.
std::vector<WeightData> extra_kupka_cases(int d);

enum class ProbeVerdict { finite, infinite, inconclusive };

// Graded Macaulay probe: dimensions of the quotient by the ideal generated
// by quasi-homogeneous gens, per quasi-degree up to bound. "finite" when a
// trailing window of width max(generator degree, max weight) vanishes.
ProbeVerdict quasi_homog_zero_dim_probe(const std::vector<MPoly>& gens,
                                        const std::vector<long>& weights, long bound);

// Non-Kupka ideal of a member in the chart x3 = 1: the four homogeneous
// coefficients plus the three coefficients of the affine d omega.
std::vector<MPoly> non_kupka_ideal_affine(const TwistedOneForm& w);

// Numeric classifiers of the weighted-projective interpretation:
// n < a+b+c: rational fibration; n = a+b+c: closed rational 1-form;
// n-(a+b+c) > 0 outside the semigroup <a,b,c>: Darboux trichotomy case.
enum class WeightClass { rational_fibration, closed_rational, darboux, semigroup_case };
WeightClass weight_classify(const WeightData& w);
bool in_semigroup(long x, long a, long b, long c);

// Eigenvalue-ratio verdicts at the rational singular points of a general
// member on the torus-fixed locus: the three vertices plus the rational
// roots along the coordinate curves (points where every coefficient of the
// affine 1-form vanishes). Reports per candidate point, without claiming
// exhaustiveness; the transverse linear part is taken in the slice through
// the point.
struct SingularPointVerdict {
    std::array<Rational, 4> point{Rational(0), Rational(0), Rational(0), Rational(0)};
    bool invertible = false;
    bool ratio_rational = true;
};
std::vector<SingularPointVerdict> rigid_irrationality_scan(int d, const WeightData& w,
                                                           const Rng& rng);

}  // namespace fol
