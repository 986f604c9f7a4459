#pragma once

#include "fol/projforms.hpp"

namespace fol {

// Nilpotent generators of algebraic C-actions on P^3:
// v_(a,b) = x1 d/dx0 + a x2 d/dx1 + b x3 d/dx2 with a, b in {0,1}.
struct NilpotentData {
    int a = 0, b = 0;

    NilpotentData() = default;
    NilpotentData(int a_, int b_) : a(a_), b(b_) {
        if ((a != 0 && a != 1) || (b != 0 && b != 1))
            throw std::invalid_argument("nilpotent parameters must be 0 or 1");
    }

    // v_(0,0) has codimension-one zeros; foliations tangent to it are the
    // linear pull-backs.
    bool is_linear_pullback_case() const { return a == 0 && b == 0; }

    auto operator<=>(const NilpotentData&) const = default;
};

PolyVField nilpotent_field(const NilpotentData& p);

// A_d(1,a,b): twisted forms with i_v w = 0 and L_v w = 0.
std::vector<TwistedOneForm> additive_space(int d, const NilpotentData& p);

// 15 + (dim A - 1) - dim of the normalizer algebra; hard error for (0,0).
std::size_t ta_dim(int d, const NilpotentData& p);

// Kernel of beta_eps(w) = (i_{v_eps} w, L_{v_eps} w - (2d+1) eps w) with
// v_eps = v_(1,1) + eps v_(1,2,3): the degeneration joining A_d(1,1,1) at
// eps = 0 to (a conjugate of) V_d(1,2,3;2d+1) at eps != 0.
std::vector<TwistedOneForm> beta_kernel(int d, const Rational& eps);

// Tangency of a twisted form to the fibration (L1 : L2 : Q): the wedge with
// dL1 ^ dL2 ^ dQ vanishes, so the form is a pull-back away from the
// degeneracy locus.
bool tangent_to_quadric_fibration(const TwistedOneForm& w, const MPoly& L1, const MPoly& L2,
                                  const MPoly& Q);

}  // namespace fol
