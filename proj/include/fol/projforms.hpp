#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fol/linalg.hpp"
#include "fol/polyform.hpp"
#include "fol/rng.hpp"

namespace fol {

// Homogeneous polynomial 1-form on C^{n+1} with coefficients of degree d+1,
// annihilated by the radial field; the global model of a degree-d foliation
// candidate on P^n.
struct TwistedOneForm {
    int n = 0;
    int d = 0;
    PolyForm form;  // degree-1 form in n+1 variables

    TwistedOneForm() = default;
    // Validates homogeneity and radial annihilation.
    TwistedOneForm(int n, int d, PolyForm f);

    bool is_zero() const { return form.is_zero(); }
    TwistedOneForm operator+(const TwistedOneForm& o) const;
    TwistedOneForm operator*(const Rational& c) const;
    bool operator==(const TwistedOneForm& o) const = default;
};

// Coordinates of polynomials and forms over fixed monomial bases, used to
// express the linear operators of the theory as RatMatrix instances.
std::size_t monomial_count(int vars, int degree);
RatVector poly_coords(const MPoly& p, int degree);
// k-form with homogeneous coefficients of the given degree; components
// enumerated over increasing index tuples in lexicographic order.
RatVector form_coords(const PolyForm& a, int coeff_degree);
std::vector<IdxTuple> increasing_tuples(int vars, int k);

// Basis of H^0(P^n, Omega^1(d+2)) = kernel of the radial contraction on
// (n+1)-tuples of degree-(d+1) polynomials.
class FormSpaceBasis {
public:
    FormSpaceBasis(int n, int d);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<TwistedOneForm>& basis() const { return basis_; }

    // Both directions of the coordinate map; round trip is the identity.
    RatVector coords(const TwistedOneForm& w) const;
    TwistedOneForm member(const RatVector& coords) const;

    TwistedOneForm random_member(Rng& rng) const;

private:
    int n_, d_;
    std::vector<TwistedOneForm> basis_;
    std::vector<std::size_t> free_cols_;  // coefficient positions carrying coordinates
};

bool is_integrable(const TwistedOneForm& w);

// GCD of the coefficient polynomials; the unit 1 exactly when sing(w) has
// codimension >= 2. Hard error on the zero form.
MPoly codim_one_zero_divisor(const TwistedOneForm& w);

// Dimension of { w1 : w /\ d w1 + w1 /\ d w = 0 } / C.w  at an integrable w.
std::size_t zariski_tangent_dim(const TwistedOneForm& w);

// Kernel of delta_w : P -> dP /\ w - P dw  on H^0(O(d+2)); nonempty exactly
// when w admits a polynomial integrating factor.
std::vector<MPoly> integrating_factor_kernel(const TwistedOneForm& w);

// Linear vector fields on P^n (degree-1 fields modulo the radial field).
// fix = { v : i_v w = 0 },  aut = { v : L_v w /\ w = 0 }.
std::vector<PolyVField> fix_algebra(const TwistedOneForm& w);
std::vector<PolyVField> aut_algebra(const TwistedOneForm& w);

// Stabilizer of the hypersurface germ data: { v : v(P_i) = 0 mod P_i for
// all i }, again modulo the radial field.
std::size_t divisor_stabilizer_dim(const std::vector<MPoly>& hypersurfaces);

// dP /\ w has every coefficient divisible by P (hypersurface invariance);
// accepts the homogeneous or the affine presentation.
bool is_invariant(const TwistedOneForm& w, const MPoly& P);
bool is_invariant(const PolyForm& affine_one_form, const MPoly& P);

// w /\ (q g df - p f dg) = 0, the cleared form of w /\ d(f^q / g^p) = 0.
bool verify_first_integral(const TwistedOneForm& w, const MPoly& f, const MPoly& g, long p, long q);
bool verify_first_integral(const PolyForm& affine_one_form, const MPoly& f, const MPoly& g, long p,
                           long q);

// P dw = s dP /\ w identically.
bool check_transversely_affine_relation(const PolyForm& one_form, const MPoly& P, const Rational& s);

// Passage between the affine chart x3 = 1 (paper coordinates (x,y,z)) and
// the homogeneous model; mutual inverses on forms with no zero divisor at
// infinity.
PolyForm dehomogenize(const TwistedOneForm& w);
// Same, for an arbitrary chart x_chart = 1; affine variables keep their
// relative order.
PolyForm dehomogenize_chart(const TwistedOneForm& w, int chart);
TwistedOneForm homogenize_affine(const PolyForm& affine_one_form, int d);

// Span dimension of a family of twisted forms (rank over coefficient
// coordinates).
std::size_t span_dim(const std::vector<TwistedOneForm>& forms);

// Basis spaces are reused by every eigenspace or tangent computation.
const FormSpaceBasis& cached_space_basis(int n, int d);

// Kernel of a linear condition on the 16-dimensional space of linear vector
// fields, reduced modulo the radial field (which must satisfy the
// condition). Shared by the fix/aut/normalizer computations.
std::vector<PolyVField> linear_field_kernel_mod_radial(
    int vars, const std::function<RatVector(const PolyVField&)>& condition, std::size_t rows);

}  // namespace fol
