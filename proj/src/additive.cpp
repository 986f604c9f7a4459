#include "fol/additive.hpp"

#include "fol/torus.hpp"

namespace fol {

PolyVField nilpotent_field(const NilpotentData& p) {
    PolyVField v(4);
    v.components[0] = MPoly::variable(4, 1);
    if (p.a) v.components[1] = MPoly::variable(4, 2);
    if (p.b) v.components[2] = MPoly::variable(4, 3);
    return v;
}

namespace {

// simultaneous kernel of i_v and (L_v - lambda) inside the twisted form space
std::vector<TwistedOneForm> joint_kernel(int d, const PolyVField& v, const Rational& lambda) {
    const FormSpaceBasis& basis = cached_space_basis(3, d);
    std::size_t rows1 = monomial_count(4, d + 2);
    std::size_t rows2 = 4 * monomial_count(4, d + 1);
    RatMatrix m(rows1 + rows2, basis.dim());
    for (std::size_t j = 0; j < basis.dim(); ++j) {
        const PolyForm& b = basis.basis()[j].form;
        MPoly iv = contract(v, b).component({});
        if (!iv.is_zero()) {
            RatVector c1 = poly_coords(iv, d + 2);
            for (std::size_t r = 0; r < rows1; ++r)
                if (c1[r] != 0) m.at(r, j) = c1[r];
        }
        PolyForm lv = lie(v, b) - b * lambda;
        RatVector c2 = form_coords(lv, d + 1);
        for (std::size_t r = 0; r < rows2; ++r)
            if (c2[r] != 0) m.at(rows1 + r, j) = c2[r];
    }
    std::vector<TwistedOneForm> out;
    for (const auto& k : kernel_basis(m)) out.push_back(basis.member(k));
    return out;
}

}  // namespace

std::vector<TwistedOneForm> additive_space(int d, const NilpotentData& p) {
    return joint_kernel(d, nilpotent_field(p), Rational(0));
}

std::size_t ta_dim(int d, const NilpotentData& p) {
    if (p.is_linear_pullback_case())
        throw std::invalid_argument("ta_dim: v_(0,0) is the linear pull-back case");
    auto A = additive_space(d, p);
    if (A.empty()) throw std::logic_error("ta_dim: empty additive space");
    return 15 + (A.size() - 1) - normalizer_dim_field(nilpotent_field(p));
}

std::vector<TwistedOneForm> beta_kernel(int d, const Rational& eps) {
    PolyVField v = nilpotent_field(NilpotentData(1, 1)) +
                   weight_field(WeightData(1, 2, 3, 0)) * eps;
    return joint_kernel(d, v, Rational(2 * d + 1) * eps);
}

bool tangent_to_quadric_fibration(const TwistedOneForm& w, const MPoly& L1, const MPoly& L2,
                                  const MPoly& Q) {
    auto exterior = [](const MPoly& f) {
        std::vector<MPoly> grad;
        for (int i = 0; i < f.vars(); ++i) grad.push_back(f.derivative(i));
        return PolyForm::one_form(grad);
    };
    PolyForm top = wedge(wedge(exterior(L1), exterior(L2)), exterior(Q));
    return wedge(w.form, top).is_zero();
}

}  // namespace fol
