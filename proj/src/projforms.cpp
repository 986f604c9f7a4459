#include "fol/projforms.hpp"

#include <functional>
#include <memory>
#include <stdexcept>

namespace fol {

namespace {

// monomial index within monomials_of_degree(vars, degree), grlex order
std::size_t monomial_index(const Monomial& m, int degree) {
    static thread_local std::map<std::pair<int, int>, std::map<Monomial, std::size_t>> cache;
    int vars = static_cast<int>(m.size());
    auto key = std::make_pair(vars, degree);
    auto it = cache.find(key);
    if (it == cache.end()) {
        std::map<Monomial, std::size_t> idx;
        auto monos = monomials_of_degree(vars, degree);
        for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
        it = cache.emplace(key, std::move(idx)).first;
    }
    auto jt = it->second.find(m);
    if (jt == it->second.end()) throw std::logic_error("monomial_index: degree mismatch");
    return jt->second;
}

void check_homogeneous_coeffs(const PolyForm& f, int degree) {
    for (const auto& [idx, c] : f.components()) {
        if (!c.is_homogeneous() || c.degree() != degree)
            throw std::invalid_argument("form coefficients not homogeneous of expected degree");
    }
}

}  // namespace

TwistedOneForm::TwistedOneForm(int n_, int d_, PolyForm f) : n(n_), d(d_), form(std::move(f)) {
    if (form.vars() != n + 1 || form.degree() != 1)
        throw std::invalid_argument("twisted form must be a 1-form in n+1 variables");
    if (!form.is_zero()) {
        check_homogeneous_coeffs(form, d + 1);
        if (!contract(PolyVField::radial(n + 1), form).is_zero())
            throw std::invalid_argument("twisted form must be annihilated by the radial field");
    }
}

TwistedOneForm TwistedOneForm::operator+(const TwistedOneForm& o) const {
    if (n != o.n || d != o.d) throw std::invalid_argument("twisted form shape mismatch");
    TwistedOneForm out;
    out.n = n;
    out.d = d;
    out.form = form + o.form;
    return out;
}

TwistedOneForm TwistedOneForm::operator*(const Rational& c) const {
    TwistedOneForm out;
    out.n = n;
    out.d = d;
    out.form = form * c;
    return out;
}

std::size_t monomial_count(int vars, int degree) {
    // C(degree + vars - 1, vars - 1)
    std::size_t num = 1, den = 1;
    for (int i = 1; i < vars; ++i) {
        num *= degree + i;
        den *= i;
    }
    return num / den;
}

RatVector poly_coords(const MPoly& p, int degree) {
    RatVector v(monomial_count(p.vars(), degree), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        if (total_degree(m) != degree) throw std::invalid_argument("poly_coords: degree mismatch");
        v[monomial_index(m, degree)] = c;
    }
    return v;
}

std::vector<IdxTuple> increasing_tuples(int vars, int k) {
    std::vector<IdxTuple> out;
    IdxTuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < vars; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

RatVector form_coords(const PolyForm& a, int coeff_degree) {
    auto tuples = increasing_tuples(a.vars(), a.degree());
    std::size_t block = monomial_count(a.vars(), coeff_degree);
    RatVector v(tuples.size() * block, Rational(0));
    std::map<IdxTuple, std::size_t> tuple_index;
    for (std::size_t i = 0; i < tuples.size(); ++i) tuple_index[tuples[i]] = i;
    for (const auto& [idx, c] : a.components()) {
        std::size_t base = tuple_index.at(idx) * block;
        for (const auto& [m, coeff] : c.terms()) {
            if (total_degree(m) != coeff_degree)
                throw std::invalid_argument("form_coords: coefficient degree mismatch");
            v[base + monomial_index(m, coeff_degree)] = coeff;
        }
    }
    return v;
}

FormSpaceBasis::FormSpaceBasis(int n, int d) : n_(n), d_(d) {
    if (n < 2 || d < 0) throw std::invalid_argument("space_basis needs n >= 2, d >= 0");
    int vars = n + 1;
    auto monos = monomials_of_degree(vars, d + 1);
    std::size_t block = monos.size();
    std::size_t rows = monomial_count(vars, d + 2);
    // radial contraction: (a_0, ..., a_n) -> sum x_i a_i
    RatMatrix m(rows, vars * block);
    for (int i = 0; i < vars; ++i) {
        for (std::size_t j = 0; j < block; ++j) {
            Monomial prod = monos[j];
            prod[i] += 1;
            m.at(monomial_index(prod, d + 2), i * block + j) = 1;
        }
    }
    auto kernel = kernel_basis(m, &free_cols_);
    basis_.reserve(kernel.size());
    for (const auto& v : kernel) {
        std::vector<MPoly> coeffs(vars, MPoly(vars));
        for (int i = 0; i < vars; ++i)
            for (std::size_t j = 0; j < block; ++j)
                if (v[i * block + j] != 0)
                    coeffs[i] += MPoly::monomial(vars, monos[j], v[i * block + j]);
        basis_.push_back(TwistedOneForm(n, d, PolyForm::one_form(coeffs)));
    }
}

RatVector FormSpaceBasis::coords(const TwistedOneForm& w) const {
    if (w.n != n_ || w.d != d_) throw std::invalid_argument("coords: wrong space");
    RatVector full = form_coords(w.form, d_ + 1);
    RatVector c(free_cols_.size(), Rational(0));
    for (std::size_t k = 0; k < free_cols_.size(); ++k) c[k] = full[free_cols_[k]];
    return c;
}

TwistedOneForm FormSpaceBasis::member(const RatVector& coords) const {
    if (coords.size() != basis_.size()) throw std::invalid_argument("member: wrong coordinate count");
    TwistedOneForm acc;
    acc.n = n_;
    acc.d = d_;
    acc.form = PolyForm(n_ + 1, 1);
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        acc.form = acc.form + basis_[i].form * coords[i];
    }
    return acc;
}

TwistedOneForm FormSpaceBasis::random_member(Rng& rng) const {
    RatVector c(basis_.size());
    for (auto& x : c) x = rng.coefficient();
    return member(c);
}

bool is_integrable(const TwistedOneForm& w) { return wedge(w.form, d(w.form)).is_zero(); }

MPoly codim_one_zero_divisor(const TwistedOneForm& w) {
    if (w.is_zero()) throw std::invalid_argument("zero divisor of the zero form");
    MPoly g(w.form.vars());
    for (const auto& [idx, c] : w.form.components()) g = poly_gcd(g, c);
    return g;
}

const FormSpaceBasis& cached_space_basis(int n, int d) {
    static std::map<std::pair<int, int>, std::unique_ptr<FormSpaceBasis>> cache;
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_unique<FormSpaceBasis>(n, d)).first;
    return *it->second;
}

std::size_t zariski_tangent_dim(const TwistedOneForm& w) {
    if (!is_integrable(w)) throw std::invalid_argument("zariski_tangent_dim: form not integrable");
    const FormSpaceBasis& basis = cached_space_basis(w.n, w.d);
    PolyForm dw = d(w.form);
    int target_degree = 2 * w.d + 1;  // 3-form coefficients
    std::size_t cols = basis.dim();
    std::size_t rows = increasing_tuples(w.n + 1, 3).size() * monomial_count(w.n + 1, target_degree);
    RatMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        const PolyForm& b = basis.basis()[j].form;
        PolyForm img = wedge(w.form, d(b)) + wedge(b, dw);
        RatVector col = form_coords(img, target_degree);
        for (std::size_t r = 0; r < rows; ++r)
            if (col[r] != 0) m.at(r, j) = col[r];
    }
    std::size_t kdim = cols - rank(m);
    if (kdim == 0) throw std::logic_error("zariski kernel misses omega itself");
    return kdim - 1;  // quotient by C.omega
}

std::vector<MPoly> integrating_factor_kernel(const TwistedOneForm& w) {
    int vars = w.n + 1;
    auto monos = monomials_of_degree(vars, w.d + 2);
    PolyForm dw = d(w.form);
    int target_degree = 2 * w.d + 2;  // 2-form coefficients
    std::size_t rows = increasing_tuples(vars, 2).size() * monomial_count(vars, target_degree);
    RatMatrix m(rows, monos.size());
    for (std::size_t j = 0; j < monos.size(); ++j) {
        MPoly P = MPoly::monomial(vars, monos[j], Rational(1));
        std::vector<MPoly> grad(vars, MPoly(vars));
        for (int i = 0; i < vars; ++i) grad[i] = P.derivative(i);
        PolyForm dP = PolyForm::one_form(grad);
        PolyForm img = wedge(dP, w.form) - dw * P;
        RatVector col = form_coords(img, target_degree);
        for (std::size_t r = 0; r < rows; ++r)
            if (col[r] != 0) m.at(r, j) = col[r];
    }
    std::vector<MPoly> out;
    for (const auto& v : kernel_basis(m)) {
        MPoly P(vars);
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (v[j] != 0) P += MPoly::monomial(vars, monos[j], v[j]);
        out.push_back(P);
    }
    return out;
}

namespace {

// basis of linear vector fields x_j d/dx_i, flattened as i * vars + j
PolyVField linear_field_from_coords(int vars, const RatVector& c) {
    PolyVField v(vars);
    for (int i = 0; i < vars; ++i)
        for (int j = 0; j < vars; ++j)
            if (c[i * vars + j] != 0)
                v.components[i] += MPoly::variable(vars, j) * c[i * vars + j];
    return v;
}

}  // namespace

std::vector<PolyVField> linear_field_kernel_mod_radial(
    int vars, const std::function<RatVector(const PolyVField&)>& condition,
    std::size_t target_size) {
    RatMatrix m(target_size, vars * vars);
    for (int i = 0; i < vars; ++i) {
        for (int j = 0; j < vars; ++j) {
            PolyVField e(vars);
            e.components[i] = MPoly::variable(vars, j);
            RatVector col = condition(e);
            for (std::size_t r = 0; r < target_size; ++r)
                if (col[r] != 0) m.at(r, i * vars + j) = col[r];
        }
    }
    auto kernel = kernel_basis(m);
    // quotient by the radial field: keep the kernel vectors that extend a
    // basis of span{radial}
    RatMatrix span(kernel.size() + 1, vars * vars);
    for (int i = 0; i < vars; ++i) span.at(0, i * vars + i) = 1;  // radial coordinates
    std::size_t r = 1;
    std::vector<PolyVField> out;
    for (const auto& v : kernel) {
        for (std::size_t c = 0; c < v.size(); ++c) span.at(r, c) = v[c];
        if (rank(span) > r) {
            out.push_back(linear_field_from_coords(vars, v));
            ++r;
        } else {
            for (std::size_t c = 0; c < v.size(); ++c) span.at(r, c) = 0;
        }
    }
    if (out.size() + 1 != kernel.size())
        throw std::logic_error("field kernel does not contain the radial field");
    return out;
}

std::vector<PolyVField> fix_algebra(const TwistedOneForm& w) {
    int vars = w.n + 1;
    std::size_t rows = monomial_count(vars, w.d + 2);
    return linear_field_kernel_mod_radial(
        vars,
        [&](const PolyVField& v) {
            PolyForm c = contract(v, w.form);
            return poly_coords(c.component({}), w.d + 2);
        },
        rows);
}

std::vector<PolyVField> aut_algebra(const TwistedOneForm& w) {
    int vars = w.n + 1;
    int target_degree = 2 * w.d + 2;
    std::size_t rows = increasing_tuples(vars, 2).size() * monomial_count(vars, target_degree);
    return linear_field_kernel_mod_radial(
        vars,
        [&](const PolyVField& v) {
            PolyForm img = wedge(lie(v, w.form), w.form);
            return form_coords(img, target_degree);
        },
        rows);
}

std::size_t divisor_stabilizer_dim(const std::vector<MPoly>& hypersurfaces) {
    if (hypersurfaces.empty()) throw std::invalid_argument("stabilizer of empty divisor");
    int vars = hypersurfaces.front().vars();
    // v(P) = 0 mod P for each P: v(P) is homogeneous of the same degree as P;
    // v(P) = c P is allowed, so the condition is rank-based per hypersurface.
    // Encode v(P) - t_P * P = 0 with one auxiliary unknown per hypersurface.
    std::size_t extra = hypersurfaces.size();
    std::size_t rows = 0;
    for (const auto& P : hypersurfaces) rows += monomial_count(vars, P.degree());
    RatMatrix m(rows, vars * vars + extra);
    std::size_t row0 = 0;
    for (std::size_t h = 0; h < hypersurfaces.size(); ++h) {
        const MPoly& P = hypersurfaces[h];
        std::size_t block = monomial_count(vars, P.degree());
        for (int i = 0; i < vars; ++i) {
            for (int j = 0; j < vars; ++j) {
                MPoly vp = MPoly::variable(vars, j) * P.derivative(i);
                RatVector col = vp.is_zero() ? RatVector(block, Rational(0))
                                             : poly_coords(vp, P.degree());
                for (std::size_t r = 0; r < block; ++r)
                    if (col[r] != 0) m.at(row0 + r, i * vars + j) = col[r];
            }
        }
        RatVector pc = poly_coords(P, P.degree());
        for (std::size_t r = 0; r < block; ++r)
            if (pc[r] != 0) m.at(row0 + r, vars * vars + h) = -pc[r];
        row0 += block;
    }
    // v(P) = t P with one scalar unknown t per hypersurface; the t's are
    // determined by v, so the solution dimension counts fields. The radial
    // field satisfies R(P) = deg(P) P and is quotiented out.
    std::size_t sol = m.cols() - rank(m);
    return sol - 1;
}

bool is_invariant(const TwistedOneForm& w, const MPoly& P) {
    if (P.is_zero()) throw std::invalid_argument("is_invariant: zero polynomial");
    std::vector<MPoly> grad;
    for (int i = 0; i < P.vars(); ++i) grad.push_back(P.derivative(i));
    PolyForm dP = PolyForm::one_form(grad);
    PolyForm num = wedge(dP, w.form);
    return num.divide_exact_by(P).has_value();
}

bool is_invariant(const PolyForm& affine_one_form, const MPoly& P) {
    if (P.is_zero()) throw std::invalid_argument("is_invariant: zero polynomial");
    std::vector<MPoly> grad;
    for (int i = 0; i < P.vars(); ++i) grad.push_back(P.derivative(i));
    PolyForm dP = PolyForm::one_form(grad);
    PolyForm num = wedge(dP, affine_one_form);
    return num.divide_exact_by(P).has_value();
}

namespace {

bool first_integral_impl(const PolyForm& w, const MPoly& f, const MPoly& g, long p, long q) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("first integral with zero factor");
    std::vector<MPoly> df, dg;
    for (int i = 0; i < f.vars(); ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    PolyForm eta = PolyForm::one_form(df) * (g * Rational(q)) -
                   PolyForm::one_form(dg) * (f * Rational(p));
    return wedge(w, eta).is_zero();
}

}  // namespace

bool verify_first_integral(const TwistedOneForm& w, const MPoly& f, const MPoly& g, long p, long q) {
    return first_integral_impl(w.form, f, g, p, q);
}

bool verify_first_integral(const PolyForm& w, const MPoly& f, const MPoly& g, long p, long q) {
    return first_integral_impl(w, f, g, p, q);
}

bool check_transversely_affine_relation(const PolyForm& one_form, const MPoly& P,
                                        const Rational& s) {
    if (P.is_zero()) throw std::invalid_argument("transversely affine relation: zero P");
    std::vector<MPoly> grad;
    for (int i = 0; i < P.vars(); ++i) grad.push_back(P.derivative(i));
    PolyForm dP = PolyForm::one_form(grad);
    PolyForm lhs = d(one_form) * P;
    PolyForm rhs = wedge(dP, one_form) * s;
    return lhs == rhs;
}

PolyForm dehomogenize(const TwistedOneForm& w) { return dehomogenize_chart(w, w.n); }

PolyForm dehomogenize_chart(const TwistedOneForm& w, int chart) {
    int vars = w.n + 1;
    if (chart < 0 || chart >= vars) throw std::invalid_argument("dehomogenize: bad chart");
    std::vector<MPoly> images;
    int pos = 0;
    for (int i = 0; i < vars; ++i) {
        if (i == chart)
            images.push_back(MPoly(vars - 1, Rational(1)));
        else
            images.push_back(MPoly::variable(vars - 1, pos++));
    }
    std::vector<MPoly> coeffs(vars - 1, MPoly(vars - 1));
    pos = 0;
    for (int i = 0; i < vars; ++i) {
        if (i == chart) continue;
        coeffs[pos++] = w.form.component({i}).substitute(images);
    }
    return PolyForm::one_form(coeffs);
}

TwistedOneForm homogenize_affine(const PolyForm& affine, int d) {
    if (affine.degree() != 1) throw std::invalid_argument("homogenize: need a 1-form");
    int m = affine.vars();
    int vars = m + 1;
    // A_i(x) -> x_last^{d+1} A_i(x_0/x_last, ...); requires deg A_i <= d+1
    std::vector<MPoly> coeffs(vars, MPoly(vars));
    for (int i = 0; i < m; ++i) {
        const MPoly a = affine.component({i});
        if (a.degree() > d + 1) throw std::invalid_argument("homogenize: coefficient degree too big");
        MPoly hom(vars);
        for (const auto& [mono, c] : a.terms()) {
            Monomial hm(vars, 0);
            for (int k = 0; k < m; ++k) hm[k] = mono[k];
            hm[m] = d + 1 - total_degree(mono);
            hom += MPoly::monomial(vars, hm, c);
        }
        coeffs[i] = hom;
    }
    // radial correction: a_last = -(x_0 a_0 + ... + x_{m-1} a_{m-1}) / x_last
    MPoly num(vars);
    for (int i = 0; i < m; ++i) num += MPoly::variable(vars, i) * coeffs[i];
    auto q = divide_exact(-num, MPoly::variable(vars, m));
    if (!q)
        throw std::invalid_argument(
            "homogenize: top-degree part is not annihilated by the affine radial field");
    coeffs[m] = *q;
    return TwistedOneForm(m, d, PolyForm::one_form(coeffs));
}

std::size_t span_dim(const std::vector<TwistedOneForm>& forms) {
    if (forms.empty()) return 0;
    int deg = forms.front().d + 1;
    std::size_t cols = 0;
    std::vector<RatVector> rows;
    for (const auto& w : forms) {
        RatVector v = form_coords(w.form, deg);
        cols = v.size();
        rows.push_back(std::move(v));
    }
    RatMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.at(r, c) = rows[r][c];
    return rank(m);
}

}  // namespace fol
