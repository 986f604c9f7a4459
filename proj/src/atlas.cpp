#include "fol/atlas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fol {

namespace {

PolyForm exterior(const MPoly& f) {
    std::vector<MPoly> grad;
    for (int i = 0; i < f.vars(); ++i) grad.push_back(f.derivative(i));
    return PolyForm::one_form(grad);
}

MPoly rand_homog(Rng& rng, int vars, int degree) {
    MPoly p(vars);
    for (const auto& m : monomials_of_degree(vars, degree))
        p += MPoly::monomial(vars, m, rng.coefficient());
    return p;
}

// the sixteen Lie-derivative directions L_v w for the linear fields x_j d/dx_i
std::vector<PolyForm> aut_directions(const PolyForm& w) {
    std::vector<PolyForm> dirs;
    int vars = w.vars();
    for (int i = 0; i < vars; ++i)
        for (int j = 0; j < vars; ++j) {
            PolyVField e(vars);
            e.components[i] = MPoly::variable(vars, j);
            dirs.push_back(lie(e, w));
        }
    return dirs;
}

// coefficient of t (last variable) of each component free of dt, projected
// back to the parameter-free ring
PolyForm t_linear_part(const PolyForm& pulled) {
    int m = pulled.vars() - 1;
    PolyForm jet(m, pulled.degree());
    for (const auto& [idx, c] : pulled.components()) {
        bool has_dt = false;
        for (int i : idx)
            if (i == m) has_dt = true;
        if (has_dt) continue;
        MPoly linear(m + 1);
        for (const auto& [mono, coeff] : c.terms()) {
            if (mono[m] != 1) continue;
            Monomial base = mono;
            base[m] = 0;
            linear += MPoly::monomial(m + 1, base, coeff);
        }
        if (!linear.is_zero()) jet.add_component(idx, linear.project_last());
    }
    return jet;
}

}  // namespace

LogPartition::LogPartition(std::vector<int> p, int d) : parts(std::move(p)) {
    if (parts.size() < 2) throw std::invalid_argument("log partition needs at least two parts");
    if (!std::is_sorted(parts.begin(), parts.end()))
        throw std::invalid_argument("log partition must be sorted");
    int sum = std::accumulate(parts.begin(), parts.end(), 0);
    if (sum != d + 2) throw std::invalid_argument("log partition must sum to d+2");
    for (int di : parts)
        if (di < 1) throw std::invalid_argument("log partition parts must be positive");
}

std::string LogPartition::name() const {
    std::ostringstream os;
    os << "Log(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

TwistedOneForm log_member(const LogPartition& partition, const std::vector<Rational>& lambda,
                          const std::vector<MPoly>& f) {
    std::size_t k = partition.parts.size();
    if (lambda.size() != k || f.size() != k)
        throw std::invalid_argument("log_member: need one residue and one polynomial per part");
    Rational residue(0);
    for (std::size_t i = 0; i < k; ++i) residue += lambda[i] * Rational(partition.parts[i]);
    if (residue != 0) throw std::invalid_argument("log_member: residue relation violated");
    int d = std::accumulate(partition.parts.begin(), partition.parts.end(), 0) - 2;
    for (std::size_t i = 0; i < k; ++i) {
        if (f[i].vars() != 4 || f[i].is_zero() || !f[i].is_homogeneous() ||
            f[i].degree() != partition.parts[i])
            throw std::invalid_argument("log_member: wrong factor degree");
    }
    PolyForm acc(4, 1);
    for (std::size_t i = 0; i < k; ++i) {
        MPoly outer(4, Rational(1));
        for (std::size_t j = 0; j < k; ++j)
            if (j != i) outer = outer * f[j];
        acc = acc + exterior(f[i]) * (outer * lambda[i]);
    }
    return TwistedOneForm(3, d, acc);
}

std::size_t component_dim_generic_rank(const TangentFrame& frame) {
    int coeff_degree = frame.at.d + 1;
    std::vector<RatVector> rows;
    for (const auto& dir : frame.directions) rows.push_back(form_coords(dir, coeff_degree));
    rows.push_back(form_coords(frame.at.form, coeff_degree));
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (rows[r][c] != 0) m.at(r, c) = rows[r][c];
    std::size_t rk = rank(m);
    if (rk == 0) throw std::logic_error("generic rank of an empty frame");
    return rk - 1;
}

TangentFrame log_frame(const LogPartition& partition, int d, Rng& rng) {
    std::size_t k = partition.parts.size();
    // random residues in the hyperplane sum lambda_i d_i = 0, all nonzero
    std::vector<Rational> lambda(k);
    while (true) {
        Rational acc(0);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            lambda[i] = rng.nonzero_coefficient();
            acc += lambda[i] * Rational(partition.parts[i]);
        }
        lambda[k - 1] = -acc / Rational(partition.parts[k - 1]);
        for (const auto& l : lambda)
            if (l == 0) ok = false;
        if (ok) break;
    }
    std::vector<MPoly> f;
    for (std::size_t i = 0; i < k; ++i) f.push_back(rand_homog(rng, 4, partition.parts[i]));

    TangentFrame frame;
    frame.at = log_member(partition, lambda, f);

    // residue directions: a basis of the hyperplane Lambda
    for (std::size_t j = 0; j + 1 < k; ++j) {
        std::vector<Rational> mu(k, Rational(0));
        mu[j] = Rational(partition.parts[k - 1]);
        mu[k - 1] = Rational(-partition.parts[j]);
        frame.directions.push_back(log_member(partition, mu, f).form);
    }
    // factor directions: vary f_i by each monomial of its degree
    for (std::size_t i = 0; i < k; ++i) {
        for (const auto& mono : monomials_of_degree(4, partition.parts[i])) {
            MPoly h = MPoly::monomial(4, mono, Rational(1));
            MPoly outer_i(4, Rational(1));
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) outer_i = outer_i * f[j];
            PolyForm dir = exterior(h) * (outer_i * lambda[i]);
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i) continue;
                MPoly outer_ij(4, Rational(1));
                for (std::size_t l = 0; l < k; ++l)
                    if (l != i && l != j) outer_ij = outer_ij * f[l];
                dir = dir + exterior(f[j]) * (outer_ij * h * lambda[j]);
            }
            frame.directions.push_back(dir);
        }
    }
    return frame;
}

MPoly cede_quartic() {
    return parse_poly("x0*x4^3 - (2*x1*x3 + x2^2)*x4^2 + 2*x2*x3^2*x4 - (1/2)*x3^4", 5);
}

MPoly cede_cubic() { return parse_poly("x1*x4^2 - x2*x3*x4 + (1/3)*x3^3", 5); }

TwistedOneForm cede_p4_form() {
    MPoly A = cede_quartic(), B = cede_cubic();
    PolyForm raw = exterior(A) * (B * Rational(3)) - exterior(B) * (A * Rational(4));
    MPoly x4sq = MPoly::variable(5, 4) * MPoly::variable(5, 4);
    auto divided = raw.divide_exact_by(x4sq);
    if (!divided) throw std::logic_error("the P^4 form must have zero divisor x4^2");
    return TwistedOneForm(4, 3, *divided);
}

namespace {

const TwistedOneForm& cede_cached() {
    static TwistedOneForm form = cede_p4_form();
    return form;
}

std::vector<MPoly> phi_images(const RatMatrix& phi, int target_vars) {
    if (phi.cols() != static_cast<std::size_t>(target_vars))
        throw std::invalid_argument("morphism matrix has wrong column count");
    std::vector<MPoly> images;
    for (std::size_t i = 0; i < phi.rows(); ++i) {
        MPoly im(target_vars);
        for (int j = 0; j < target_vars; ++j)
            if (phi.at(i, j) != 0) im += MPoly::variable(target_vars, j) * phi.at(i, j);
        images.push_back(im);
    }
    return images;
}

std::size_t matrix_rank(const RatMatrix& m) { return rank(m); }

}  // namespace

TwistedOneForm slog34_member(const RatMatrix& phi) {
    if (phi.rows() != 5 || phi.cols() != 4) throw std::invalid_argument("slog34: phi must be 5x4");
    if (matrix_rank(phi) != 4) throw std::invalid_argument("slog34: phi must have rank 4");
    PolyForm pulled = pullback(cede_cached().form, phi_images(phi, 4));
    return TwistedOneForm(3, 3, pulled);
}

TangentFrame slog34_frame(Rng& rng) {
    RatMatrix phi(5, 4);
    do {
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 4; ++j) phi.at(i, j) = Rational(rng.uniform(-9, 9));
    } while (matrix_rank(phi) != 4);

    TangentFrame frame;
    frame.at = slog34_member(phi);
    // one t-jet per matrix entry: pull back along phi + t E_{ij}
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<MPoly> images;
            for (std::size_t r = 0; r < 5; ++r) {
                MPoly im(5);
                for (int c = 0; c < 4; ++c)
                    if (phi.at(r, c) != 0) im += MPoly::variable(5, c) * phi.at(r, c);
                if (r == i) im += MPoly::variable(5, static_cast<int>(j)) * MPoly::variable(5, 4);
                images.push_back(im);
            }
            frame.directions.push_back(t_linear_part(pullback(cede_cached().form, images)));
        }
    }
    return frame;
}

std::vector<MPoly> slog25_family_basis() {
    static const char* texts[11] = {
        "-5*x0^3*x1*x3 + x0^5 + (15/2)*x0*x1^2*x3^2",
        "x0*x3^4",
        "x0*x2*x3^3",
        "x0*x1*x3^3",
        "x0^2*x3^3",
        "x3^5",
        "x2*x3^4",
        "x2^2*x3^3",
        "x1*x3^4",
        "x1*x2*x3^3",
        "x1^2*x3^3",
    };
    std::vector<MPoly> out;
    for (const char* t : texts) out.push_back(parse_poly(t, 4));
    return out;
}

MPoly slog25_quadric() { return parse_poly("x0^2 - 2*x1*x3", 4); }

TwistedOneForm slog25_member(const RatVector& c) {
    auto basis = slog25_family_basis();
    if (c.size() != basis.size()) throw std::invalid_argument("slog25: need 11 coefficients");
    MPoly f(4);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (c[i] != 0) f += basis[i] * c[i];
    MPoly g = slog25_quadric();
    PolyForm raw = exterior(g) * (f * Rational(5)) - exterior(f) * (g * Rational(2));
    MPoly x3sq = MPoly::variable(4, 3) * MPoly::variable(4, 3);
    auto divided = raw.divide_exact_by(x3sq);
    if (!divided)
        throw std::invalid_argument("slog25: 5 f dg - 2 g df is not divisible by x3^2");
    return TwistedOneForm(3, 3, *divided);
}

std::vector<MPoly> slog25_rederive_family() {
    MPoly g = slog25_quadric();
    PolyForm dg = exterior(g);
    auto quintics = monomials_of_degree(4, 5);
    // conditions: every coefficient monomial of the 1-form 5 f dg - 2 g df
    // with x3-exponent <= 1 vanishes
    auto tuples = increasing_tuples(4, 1);
    std::size_t block = monomial_count(4, 6);
    std::vector<RatVector> cols;
    for (const auto& mono : quintics) {
        MPoly f = MPoly::monomial(4, mono, Rational(1));
        PolyForm raw = dg * (f * Rational(5)) - exterior(f) * (g * Rational(2));
        cols.push_back(form_coords(raw, 6));
    }
    // row filter: positions whose monomial has x3-degree <= 1
    auto monos6 = monomials_of_degree(4, 6);
    std::vector<std::size_t> keep;
    for (std::size_t t = 0; t < tuples.size(); ++t)
        for (std::size_t m = 0; m < monos6.size(); ++m)
            if (monos6[m][3] <= 1) keep.push_back(t * block + m);
    RatMatrix matrix(keep.size(), quintics.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < quintics.size(); ++c)
            if (cols[c][keep[r]] != 0) matrix.at(r, c) = cols[c][keep[r]];
    std::vector<MPoly> out;
    for (const auto& v : kernel_basis(matrix)) {
        MPoly f(4);
        for (std::size_t i = 0; i < quintics.size(); ++i)
            if (v[i] != 0) f += MPoly::monomial(4, quintics[i], v[i]);
        out.push_back(f);
    }
    return out;
}

TangentFrame slog25_frame(Rng& rng) {
    RatVector c(11);
    for (auto& x : c) x = rng.coefficient();
    TangentFrame frame;
    frame.at = slog25_member(c);
    for (std::size_t i = 0; i < 11; ++i) {
        RatVector e(11, Rational(0));
        e[i] = 1;
        frame.directions.push_back(slog25_member(e).form);
    }
    for (auto& dir : aut_directions(frame.at.form)) frame.directions.push_back(std::move(dir));
    return frame;
}

TwistedOneForm lpb_member(const RatVector& plane_coords, const RatMatrix& projection) {
    const FormSpaceBasis& plane = cached_space_basis(2, 3);
    if (projection.rows() != 3 || projection.cols() != 4)
        throw std::invalid_argument("lpb: projection must be 3x4");
    if (matrix_rank(projection) != 3) throw std::invalid_argument("lpb: projection must have rank 3");
    TwistedOneForm w2 = plane.member(plane_coords);
    PolyForm pulled = pullback(w2.form, phi_images(projection, 4));
    return TwistedOneForm(3, 3, pulled);
}

TangentFrame lpb_frame(Rng& rng) {
    const FormSpaceBasis& plane = cached_space_basis(2, 3);
    RatVector c(plane.dim());
    for (auto& x : c) x = rng.coefficient();
    RatMatrix proj(3, 4);
    do {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 4; ++j) proj.at(i, j) = Rational(rng.uniform(-9, 9));
    } while (matrix_rank(proj) != 3);

    TangentFrame frame;
    frame.at = lpb_member(c, proj);
    auto images = phi_images(proj, 4);
    for (std::size_t i = 0; i < plane.dim(); ++i) {
        RatVector e(plane.dim(), Rational(0));
        e[i] = 1;
        frame.directions.push_back(pullback(plane.member(e).form, images));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            std::vector<MPoly> jet_images;
            for (std::size_t r = 0; r < 3; ++r) {
                MPoly im(5);
                for (int col = 0; col < 4; ++col)
                    if (proj.at(r, col) != 0) im += MPoly::variable(5, col) * proj.at(r, col);
                if (r == i) im += MPoly::variable(5, static_cast<int>(j)) * MPoly::variable(5, 4);
                jet_images.push_back(im);
            }
            frame.directions.push_back(t_linear_part(pullback(plane.member(c).form, jet_images)));
        }
    }
    return frame;
}

namespace {

TwistedOneForm random_span_member(const std::vector<TwistedOneForm>& basis, Rng& rng) {
    TwistedOneForm m;
    m.n = 3;
    m.d = basis.front().d;
    m.form = PolyForm(4, 1);
    for (const auto& b : basis) m.form = m.form + b.form * rng.coefficient();
    return m;
}

// minimum Zariski tangent dimension over seeded general members of a span
long sampled_zdim(const std::vector<TwistedOneForm>& basis, const Rng& rng, int trials,
                  const std::string& label) {
    long best = -1;
    Rng base = rng.split(label);
    for (int t = 0; t < trials; ++t) {
        Rng trial = base.split(t);
        TwistedOneForm m = random_span_member(basis, trial);
        if (m.is_zero() || codim_one_zero_divisor(m).degree() != 0) continue;
        long z = static_cast<long>(zariski_tangent_dim(m));
        if (best < 0 || z < best) best = z;
    }
    return best;
}

std::string tm_name(const WeightData& w) {
    std::ostringstream os;
    os << "TM(" << w.a << "," << w.b << "," << w.c << ";" << w.n << ")";
    return os.str();
}

std::string iota_alias(int d, const WeightData& w) {
    auto iw = involution(d, w);
    if (!iw || *iw == w) return "";
    return tm_name(*iw);
}

ComponentDescriptor tm_row(int d, const WeightData& w, const Rng& rng, int trials,
                           const std::string& comment) {
    ComponentDescriptor row;
    row.name = tm_name(w);
    row.kind = "tm";
    row.aliases = iota_alias(d, w);
    row.comment = comment;
    row.dim = static_cast<long>(tm_dim(d, w));
    row.zdim = sampled_zdim(eigenspace(d, w), rng, trials, row.name);
    row.generically_reduced = row.dim == row.zdim;
    row.has_rational_first_integral = weight_classify(w) == WeightClass::rational_fibration;
    row.has_integrating_factor = false;  // longlist members have empty delta kernel
    return row;
}

}  // namespace

AtlasReport build_tables(const Rng& rng, int trials) {
    AtlasReport rep;

    // ---- logarithmic table -------------------------------------------------
    const std::vector<std::vector<int>> partitions = {
        {1, 1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 3}, {1, 2, 2}, {1, 4}, {2, 3}};
    for (const auto& parts : partitions) {
        LogPartition part(parts, 3);
        ComponentDescriptor row;
        row.name = part.name();
        row.kind = "log";
        long best_rank = -1;
        long best_z = -1;
        Rng base = rng.split(row.name);
        for (int t = 0; t < trials; ++t) {
            Rng trial = base.split(t);
            TangentFrame frame = log_frame(part, 3, trial);
            long rk = static_cast<long>(component_dim_generic_rank(frame));
            best_rank = std::max(best_rank, rk);  // generic rank is the maximum
            if (codim_one_zero_divisor(frame.at).degree() == 0) {
                long z = static_cast<long>(zariski_tangent_dim(frame.at));
                if (best_z < 0 || z < best_z) best_z = z;
            }
        }
        row.dim = best_rank;
        row.zdim = best_z;
        row.generically_reduced = row.dim == row.zdim;
        row.has_integrating_factor = true;  // the product of the factors
        row.has_rational_first_integral = parts.size() == 2;
        if (parts.size() == 2)
            row.leaf_degree = parts[0] * parts[1] / std::gcd(parts[0], parts[1]);
        rep.log_rows.push_back(row);
    }
    {
        ComponentDescriptor row;
        row.name = "SLog(2,5)";
        row.kind = "slog";
        row.comment = "Previously unknown.";
        long best_rank = -1, best_z = -1;
        Rng base = rng.split(row.name);
        for (int t = 0; t < trials; ++t) {
            Rng trial = base.split(t);
            TangentFrame frame = slog25_frame(trial);
            best_rank = std::max(best_rank, static_cast<long>(component_dim_generic_rank(frame)));
            if (codim_one_zero_divisor(frame.at).degree() == 0) {
                long z = static_cast<long>(zariski_tangent_dim(frame.at));
                if (best_z < 0 || z < best_z) best_z = z;
            }
        }
        row.dim = best_rank;
        row.zdim = best_z;
        row.generically_reduced = row.dim == row.zdim;
        row.has_rational_first_integral = true;  // f^2/g^5
        row.has_integrating_factor = false;
        row.leaf_degree = 10;
        rep.log_rows.push_back(row);
    }
    {
        ComponentDescriptor row;
        row.name = "SLog(3,4)";
        row.kind = "slog";
        row.comment = "Previously unknown.";
        long best_rank = -1, best_z = -1;
        Rng base = rng.split(row.name);
        for (int t = 0; t < trials; ++t) {
            Rng trial = base.split(t);
            TangentFrame frame = slog34_frame(trial);
            best_rank = std::max(best_rank, static_cast<long>(component_dim_generic_rank(frame)));
            if (codim_one_zero_divisor(frame.at).degree() == 0) {
                long z = static_cast<long>(zariski_tangent_dim(frame.at));
                if (best_z < 0 || z < best_z) best_z = z;
            }
        }
        row.dim = best_rank;
        row.zdim = best_z;
        row.generically_reduced = row.dim == row.zdim;
        row.has_rational_first_integral = true;  // A^3/B^4 pulled back
        row.has_integrating_factor = false;
        row.leaf_degree = 12;
        rep.log_rows.push_back(row);
    }

    // ---- split tangent sheaf table ----------------------------------------
    rep.split_rows.push_back(tm_row(3, WeightData(0, 1, 2, 3), rng, trials,
                                    "Previously unknown example."));
    rep.split_rows.push_back(tm_row(3, WeightData(1, 2, 3, 7), rng, trials, ""));
    rep.split_rows.push_back(tm_row(3, WeightData(1, 2, 4, 7), rng, trials,
                                    "Closed rational 1-form."));
    rep.split_rows.push_back(tm_row(3, WeightData(1, 2, 4, 9), rng, trials, ""));
    rep.split_rows.push_back(tm_row(3, WeightData(1, 3, 7, 10), rng, trials,
                                    "Rational fibration."));
    rep.split_rows.push_back(tm_row(3, WeightData(1, 4, 6, 13), rng, trials, ""));
    rep.split_rows.push_back(tm_row(3, WeightData(2, 3, 7, 16), rng, trials, ""));

    // ---- non-rigid, no rational first integral ----------------------------
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(0, 1, 1, 2), rng, trials,
                                       "Riccati foliation."));
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(0, 1, 2, 3), rng, trials,
                                       "Appears in the split table."));
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(1, 1, 2, 5), rng, trials,
                                       "General element without algebraic leaves."));
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(1, 2, 3, 6), rng, trials, ""));
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(1, 2, 3, 7), rng, trials,
                                       "Appears in the split table."));
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(1, 2, 4, 7), rng, trials,
                                       "Appears in the split table."));
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(1, 2, 4, 9), rng, trials,
                                       "Appears in the split table."));
    rep.nonrigid_rows.push_back(tm_row(3, WeightData(1, 3, 4, 10), rng, trials, ""));

    // ---- rigid, no rational first integral --------------------------------
    rep.rigid_rows.push_back(tm_row(3, WeightData(1, 2, 5, 11), rng, trials, ""));
    rep.rigid_rows.push_back(tm_row(3, WeightData(1, 2, 5, 12), rng, trials, ""));
    rep.rigid_rows.push_back(tm_row(3, WeightData(1, 4, 6, 13), rng, trials,
                                    "Appears in the split table."));
    rep.rigid_rows.push_back(tm_row(3, WeightData(2, 3, 5, 11), rng, trials,
                                    "Virtually transversely additive."));
    rep.rigid_rows.push_back(tm_row(3, WeightData(2, 3, 7, 16), rng, trials,
                                    "Appears in the split table."));

    // ---- candidates with rational first integrals -------------------------
    auto contained_row = [&](const WeightData& w, const std::string& comment, long leaf) {
        ComponentDescriptor row = tm_row(3, w, rng, trials, comment);
        row.kind = "contained";
        row.has_rational_first_integral = true;
        row.leaf_degree = leaf;
        return row;
    };
    rep.contained_rows.push_back(contained_row(WeightData(1, 2, 5, 7),
                                               "Contained in SLog(2,5).", -1));
    rep.contained_rows.push_back(contained_row(WeightData(1, 3, 4, 7),
                                               "Contained in SLog(3,4).", -1));
    rep.contained_rows.push_back(contained_row(WeightData(1, 3, 5, 11),
                                               "Contained in SLog(2,5).", -1));
    rep.contained_rows.push_back(contained_row(WeightData(1, 3, 7, 10),
                                               "Appears in the split table.", -1));
    rep.contained_rows.push_back(contained_row(WeightData(1, 3, 5, 8),
                                               "Containing component unknown.", 15));

    // ---- additive rows ------------------------------------------------------
    for (const NilpotentData p : {NilpotentData(1, 0), NilpotentData(0, 1)}) {
        ComponentDescriptor row;
        std::ostringstream os;
        os << "TA(1," << p.a << "," << p.b << ")";
        row.name = os.str();
        row.kind = "ta";
        row.dim = static_cast<long>(ta_dim(3, p));
        row.zdim = sampled_zdim(additive_space(3, p), rng, trials, row.name);
        row.generically_reduced = row.dim == row.zdim;
        row.comment = p.a == 1 ? "Contained in TM(1,1,2;5)." : "Contained in TM(1,1,2;5).";
        rep.additive_rows.push_back(row);
    }

    // ---- linear pull-back component ----------------------------------------
    {
        ComponentDescriptor row;
        row.name = "LPB(3)";
        row.kind = "lpb";
        row.comment = "Linear pull-backs of degree-3 foliations on the plane; "
                      "dimension computed, no reference value.";
        long best_rank = -1, best_z = -1;
        Rng base = rng.split(row.name);
        for (int t = 0; t < trials; ++t) {
            Rng trial = base.split(t);
            TangentFrame frame = lpb_frame(trial);
            best_rank = std::max(best_rank, static_cast<long>(component_dim_generic_rank(frame)));
            if (codim_one_zero_divisor(frame.at).degree() == 0) {
                long z = static_cast<long>(zariski_tangent_dim(frame.at));
                if (best_z < 0 || z < best_z) best_z = z;
            }
        }
        row.dim = best_rank;
        row.zdim = best_z;
        row.generically_reduced = row.dim == row.zdim;
        rep.lpb_row = row;
    }

    // ---- aggregates ----------------------------------------------------------
    // distinct TM classes across the three tables, identified along iota
    std::set<std::string> tm_no_rfi, tm_rfi;
    auto classify = [&](const ComponentDescriptor& row, const WeightData& w) {
        auto iw = involution(3, w);
        WeightData rep_w = (iw && *iw < w) ? *iw : w;
        if (row.has_rational_first_integral)
            tm_rfi.insert(tm_name(rep_w));
        else
            tm_no_rfi.insert(tm_name(rep_w));
    };
    const std::vector<std::vector<ComponentDescriptor>*> tm_tables = {
        &rep.split_rows, &rep.nonrigid_rows, &rep.rigid_rows};
    const std::vector<std::vector<WeightData>> tm_weights = {
        {{0, 1, 2, 3}, {1, 2, 3, 7}, {1, 2, 4, 7}, {1, 2, 4, 9}, {1, 3, 7, 10}, {1, 4, 6, 13},
         {2, 3, 7, 16}},
        {{0, 1, 1, 2}, {0, 1, 2, 3}, {1, 1, 2, 5}, {1, 2, 3, 6}, {1, 2, 3, 7}, {1, 2, 4, 7},
         {1, 2, 4, 9}, {1, 3, 4, 10}},
        {{1, 2, 5, 11}, {1, 2, 5, 12}, {1, 4, 6, 13}, {2, 3, 5, 11}, {2, 3, 7, 16}}};
    for (std::size_t t = 0; t < tm_tables.size(); ++t)
        for (std::size_t i = 0; i < tm_tables[t]->size(); ++i)
            classify((*tm_tables[t])[i], tm_weights[t][i]);

    int log_no_rfi = 0, log_rfi = 0;
    for (const auto& row : rep.log_rows) {
        if (row.kind != "log") continue;
        if (row.has_rational_first_integral)
            ++log_rfi;
        else
            ++log_no_rfi;
    }
    rep.components_without_first_integral =
        1 /* LPB */ + log_no_rfi + static_cast<int>(tm_no_rfi.size());
    rep.total_catalogued_components =
        rep.components_without_first_integral + log_rfi + 2 /* SLog */ +
        static_cast<int>(tm_rfi.size()) + 1 /* component containing TM(1,3,5;8) */;
    return rep;
}

}  // namespace fol
