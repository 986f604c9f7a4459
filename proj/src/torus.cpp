#include "fol/torus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fol {

namespace {

long gcd3(long a, long b, long c) { return std::gcd(std::gcd(a, b), c); }

std::vector<long> divisors(long x) {
    std::vector<long> out;
    for (long k = 1; k <= x; ++k)
        if (x % k == 0) out.push_back(k);
    return out;
}

}  // namespace

WeightData::WeightData(long a_, long b_, long c_, long n_) : a(a_), b(b_), c(c_), n(n_) {
    if (!(0 <= a && a <= b && b <= c && c != 0))
        throw std::invalid_argument("weights must satisfy 0 <= a <= b <= c != 0");
    if (gcd3(a, b, c) != 1) throw std::invalid_argument("weights must be coprime");
}

std::string to_string(const WeightData& w) {
    std::ostringstream os;
    os << "(" << w.a << "," << w.b << "," << w.c << ";" << w.n << ")";
    return os.str();
}

PolyVField weight_field(const WeightData& w) {
    PolyVField v(4);
    v.components[0] = MPoly::variable(4, 0) * Rational(w.a);
    v.components[1] = MPoly::variable(4, 1) * Rational(w.b);
    v.components[2] = MPoly::variable(4, 2) * Rational(w.c);
    return v;
}

std::vector<TwistedOneForm> eigenspace(int d, const WeightData& w) {
    const FormSpaceBasis& basis = cached_space_basis(3, d);
    PolyVField v = weight_field(w);
    std::size_t rows1 = monomial_count(4, d + 2);
    std::size_t rows2 = 4 * monomial_count(4, d + 1);
    RatMatrix m(rows1 + rows2, basis.dim());
    for (std::size_t j = 0; j < basis.dim(); ++j) {
        const PolyForm& b = basis.basis()[j].form;
        MPoly iv = contract(v, b).component({});
        PolyForm lv = lie(v, b) - b * Rational(w.n);
        RatVector c2 = form_coords(lv, d + 1);
        if (!iv.is_zero()) {
            RatVector c1 = poly_coords(iv, d + 2);
            for (std::size_t r = 0; r < rows1; ++r)
                if (c1[r] != 0) m.at(r, j) = c1[r];
        }
        for (std::size_t r = 0; r < rows2; ++r)
            if (c2[r] != 0) m.at(rows1 + r, j) = c2[r];
    }
    std::vector<TwistedOneForm> out;
    for (const auto& k : kernel_basis(m)) out.push_back(basis.member(k));
    return out;
}

namespace {

// admissible dlog directions at one lattice point of the chi hyperplane
std::size_t point_contribution(int d, const WeightData& w, const ChiPoint& p) {
    std::vector<int> support;
    const long weights[3] = {w.a, w.b, w.c};
    for (int h = 0; h < 3; ++h)
        if (p[h] >= 1) support.push_back(h);
    if (support.empty()) return 0;
    bool top = (p[0] + p[1] + p[2] == d + 2);
    RatMatrix m(top ? 2 : 1, support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
        m.at(0, i) = Rational(weights[support[i]]);
        if (top) m.at(1, i) = 1;
    }
    return support.size() - rank(m);
}

std::vector<ChiPoint> hyperplane_points(int d, const WeightData& w) {
    std::vector<ChiPoint> out;
    for (long al = 0; al <= d + 2; ++al)
        for (long be = 0; al + be <= d + 2; ++be)
            for (long ga = 0; al + be + ga <= d + 2; ++ga)
                if (w.a * al + w.b * be + w.c * ga == w.n) out.push_back({al, be, ga});
    return out;
}

bool points_collinear(const std::vector<ChiPoint>& pts) {
    if (pts.size() <= 2) return true;
    const ChiPoint& p0 = pts[0];
    ChiPoint u{0, 0, 0};
    std::size_t base = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        u = {pts[i][0] - p0[0], pts[i][1] - p0[1], pts[i][2] - p0[2]};
        if (u != ChiPoint{0, 0, 0}) {
            base = i;
            break;
        }
    }
    if (base == 0) return true;
    for (std::size_t i = base + 1; i < pts.size(); ++i) {
        ChiPoint v{pts[i][0] - p0[0], pts[i][1] - p0[1], pts[i][2] - p0[2]};
        ChiPoint cr{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                    u[0] * v[1] - u[1] * v[0]};
        if (cr != ChiPoint{0, 0, 0}) return false;
    }
    return true;
}

}  // namespace

std::size_t eigenspace_dim_affine(int d, const WeightData& w) {
    std::size_t dim = 0;
    for (const auto& p : hyperplane_points(d, w)) dim += point_contribution(d, w, p);
    return dim;
}

std::vector<ChiPoint> achievable_chi_points(int d, const WeightData& w) {
    std::vector<ChiPoint> out;
    for (const auto& p : hyperplane_points(d, w))
        if (point_contribution(d, w, p) > 0) out.push_back(p);
    return out;
}

std::optional<WeightData> involution(int d, const WeightData& w) {
    long a = w.c - w.b, b = w.c - w.a, c = w.c;
    long n = w.c * (d + 2) - w.n;
    if (!(0 <= a && a <= b && b <= c && c != 0)) return std::nullopt;
    if (gcd3(a, b, c) != 1) return std::nullopt;
    return WeightData(a, b, c, n);
}

std::size_t normalizer_dim_field(const PolyVField& v0) {
    int vars = v0.vars;
    auto tuples = increasing_tuples(vars, 2);
    std::size_t block = monomial_count(vars, 2);
    return linear_field_kernel_mod_radial(
               vars,
               [&](const PolyVField& v) {
                   PolyVField br = bracket(v, v0);
                   RatVector out(tuples.size() * block, Rational(0));
                   for (std::size_t t = 0; t < tuples.size(); ++t) {
                       int i = tuples[t][0], j = tuples[t][1];
                       MPoly comp = br.components[i] * v0.components[j] -
                                    br.components[j] * v0.components[i];
                       if (comp.is_zero()) continue;
                       RatVector c = poly_coords(comp, 2);
                       for (std::size_t r = 0; r < block; ++r) out[t * block + r] = c[r];
                   }
                   return out;
               },
               tuples.size() * block)
        .size();
}

std::size_t normalizer_dim(const WeightData& w) {
    if (w.degenerate())
        throw std::invalid_argument("normalizer_dim: weight field has codimension-one zeros");
    return normalizer_dim_field(weight_field(w));
}

std::size_t tm_dim(int d, const WeightData& w) {
    auto V = eigenspace(d, w);
    if (V.empty()) throw std::invalid_argument("tm_dim: empty eigenspace");
    return 15 + (V.size() - 1) - normalizer_dim(w);
}

CharMonomialSet char_monomials(const PolyForm& affine) {
    if (affine.vars() != 3 || affine.degree() != 1)
        throw std::invalid_argument("char_monomials: need an affine 1-form in 3 variables");
    CharMonomialSet s;
    for (const auto& [idx, coeff] : affine.components()) {
        int h = idx[0];
        for (const auto& [m, c] : coeff.terms()) {
            ChiPoint p{m[0], m[1], m[2]};
            p[h] += 1;
            s.points.insert(p);
        }
    }
    return s;
}

bool chi_collinear(const CharMonomialSet& s) {
    return points_collinear(std::vector<ChiPoint>(s.points.begin(), s.points.end()));
}

bool chi_interior(int d, const CharMonomialSet& s) {
    for (const auto& p : s.points)
        if (p[0] >= 1 && p[1] >= 1 && p[2] >= 1 && p[0] + p[1] + p[2] < d + 2) return true;
    return false;
}

std::vector<WeightData> enumerate_candidates(int d) {
    if (d < 1) throw std::invalid_argument("enumerate_candidates: d >= 1");
    std::vector<ChiPoint> pts;
    for (long al = 0; al <= d + 2; ++al)
        for (long be = 0; al + be <= d + 2; ++be)
            for (long ga = 0; al + be + ga <= d + 2; ++ga) pts.push_back({al, be, ga});

    std::set<std::array<long, 4>> seen;
    std::size_t npts = pts.size();
    for (std::size_t i = 0; i < npts; ++i) {
        for (std::size_t j = i + 1; j < npts; ++j) {
            ChiPoint u{pts[j][0] - pts[i][0], pts[j][1] - pts[i][1], pts[j][2] - pts[i][2]};
            for (std::size_t k = j + 1; k < npts; ++k) {
                ChiPoint v{pts[k][0] - pts[i][0], pts[k][1] - pts[i][1], pts[k][2] - pts[i][2]};
                std::array<long, 3> N{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                      u[0] * v[1] - u[1] * v[0]};
                if (N == std::array<long, 3>{0, 0, 0}) continue;  // collinear triple
                if (N[0] <= 0 && N[1] <= 0 && N[2] <= 0) N = {-N[0], -N[1], -N[2]};
                if (N[0] < 0 || N[1] < 0 || N[2] < 0) continue;  // mixed signs
                long g = gcd3(N[0], N[1], N[2]);
                N = {N[0] / g, N[1] / g, N[2] / g};
                long n = N[0] * pts[i][0] + N[1] * pts[i][1] + N[2] * pts[i][2];
                std::sort(N.begin(), N.end());
                seen.insert({N[0], N[1], N[2], n});
            }
        }
    }
    std::vector<WeightData> out;
    for (const auto& [a, b, c, n] : seen) out.push_back(WeightData(a, b, c, n));
    return out;
}

std::vector<QuadrupleCertificate> longlist_certificates(int d,
                                                        const std::vector<WeightData>& candidates,
                                                        const Rng& rng, int trials) {
    std::vector<QuadrupleCertificate> out;
    for (const auto& w : candidates) {
        QuadrupleCertificate cert;
        cert.w = w;
        cert.eigen_dim = eigenspace_dim_affine(d, w);
        if (w.degenerate() || cert.eigen_dim == 0) {
            out.push_back(cert);
            continue;
        }
        auto chi = achievable_chi_points(d, w);
        cert.chi_spanning = chi.size() >= 3 && !points_collinear(chi);
        if (!cert.chi_spanning) {
            // chi contained in a line forces a polynomial integrating factor
            // (or codimension-one zeros); either way the candidate dies
            out.push_back(cert);
            continue;
        }
        auto V = eigenspace(d, w);
        if (V.size() != cert.eigen_dim)
            throw std::logic_error("eigenspace dimension mismatch between routes at " +
                                   to_string(w));
        bool gcd_ok = false;
        bool pif_empty = false;
        std::size_t min_kernel = SIZE_MAX;
        Rng base = rng.split(to_string(w));
        for (int t = 0; t < trials && !(gcd_ok && pif_empty); ++t) {
            Rng trial = base.split(t);
            RatVector c(V.size());
            for (auto& x : c) x = trial.coefficient();
            TwistedOneForm member;
            member.n = 3;
            member.d = d;
            member.form = PolyForm(4, 1);
            for (std::size_t i = 0; i < V.size(); ++i)
                if (c[i] != 0) member.form = member.form + V[i].form * c[i];
            if (member.is_zero()) continue;
            if (!gcd_ok) gcd_ok = codim_one_zero_divisor(member).degree() == 0;
            if (!pif_empty) {
                std::size_t kd = integrating_factor_kernel(member).size();
                min_kernel = std::min(min_kernel, kd);
                pif_empty = kd == 0;
            }
        }
        cert.codim_two = gcd_ok;
        cert.pif_kernel_dim = min_kernel == SIZE_MAX ? 0 : min_kernel;
        cert.kept = gcd_ok && pif_empty;
        out.push_back(cert);
    }
    return out;
}

std::vector<WeightData> longlist_filter(int d, const std::vector<WeightData>& candidates,
                                        const Rng& rng, int trials) {
    std::vector<WeightData> out;
    for (const auto& cert : longlist_certificates(d, candidates, rng, trials))
        if (cert.kept) out.push_back(cert.w);
    return out;
}

bool eigen_ratio_rational(const RatMatrix& J) {
    if (J.rows() != 2 || J.cols() != 2)
        throw std::invalid_argument("eigen_ratio_rational: need 2x2");
    Rational t = J.at(0, 0) + J.at(1, 1);
    Rational q = J.at(0, 0) * J.at(1, 1) - J.at(0, 1) * J.at(1, 0);
    if (q == 0) throw std::invalid_argument("eigen_ratio_rational: singular linear part");
    // the ratio r solves r^2 - ((t^2-2q)/q) r + 1 = 0; rational iff the
    // discriminant is a rational square
    Rational s = (t * t - Rational(2) * q) / q;
    return is_rational_square(s * s - Rational(4));
}

namespace {

// family membership for one normalized quadruple; constants reconciled
// against the known degree-3 classification
bool kupka_families_reconciled(long d, long a, long b, long c, long n) {
    // (r, r+1, d) with 1 <= r < d-1
    if (b == a + 1 && c == d && a >= 1 && a + 1 < d && n == d * (a + 1) + 2 * a) return true;
    // (m, m+d, kd) for even k | d+1
    for (long k : divisors(d + 1)) {
        if (k % 2 != 0) continue;
        if (c == k * d && b == a + d && a >= 1 && a < d * (k - 1) && std::gcd(a, d) == 1 &&
            n == a * (d + 1) + k * d * d / 2)
            return true;
    }
    // multiset {m(d-1), m(d+1), gamma}, gamma | d^2
    // multiset {m(d-1), m d, gamma},   gamma | d^2-1 or d^2-d+1
    const std::array<std::array<long, 3>, 3> picks{{{a, b, c}, {b, a, c}, {c, a, b}}};
    for (const auto& pick : picks) {
        long gamma = pick[0], u = pick[1], v = pick[2];
        if (gamma < 1 || u > v) continue;
        if (u % (d - 1) != 0) continue;
        long m = u / (d - 1);
        if (m < 1) continue;
        if (v == m * (d + 1) && (d * d) % gamma == 0 && std::gcd(m, gamma) == 1 &&
            n == m * (d * d - 1) + gamma)
            return true;
        if (v == m * d && ((d * d - 1) % gamma == 0 || (d * d - d + 1) % gamma == 0) &&
            std::gcd(m, gamma) == 1 && n == m * d * d + gamma)
            return true;
    }
    return false;
}

bool kupka_families_printed(long d, long a, long b, long c, long n) {
    // literal transcription: (r, r+1, d; d(r+1)+2r+1)
    if (b == a + 1 && c == d && a >= 1 && a + 1 < d && n == d * (a + 1) + 2 * a + 1) return true;
    const std::array<std::array<long, 3>, 3> picks{{{a, b, c}, {b, a, c}, {c, a, b}}};
    // (md, md+k, kd; md^2+2md+kd+k), k | d+1, gcd(m,k)=1
    for (long k : divisors(d + 1)) {
        for (const auto& pick : picks) {
            long e = pick[0], u = pick[1], v = pick[2];
            if (e != k * d || u > v) continue;
            if (u % d != 0) continue;
            long m = u / d;
            if (m >= 1 && v == u + k && std::gcd(m, k) == 1 &&
                n == m * d * d + 2 * m * d + k * d + k)
                return true;
        }
    }
    for (const auto& pick : picks) {
        long gamma = pick[0], u = pick[1], v = pick[2];
        if (gamma < 1 || u > v) continue;
        // (md, m(d+1), gamma; m(d+1)^2 + gamma), gamma | d^2 or d^2+d+1
        if (u % d == 0) {
            long m = u / d;
            if (m >= 1 && v == m * (d + 1) &&
                ((d * d) % gamma == 0 || (d * d + d + 1) % gamma == 0) &&
                std::gcd(m, gamma) == 1 && n == m * (d + 1) * (d + 1) + gamma)
                return true;
        }
        // (m(d-1), md, gamma; m(d^2+d-1)+gamma), gamma | d^2, d^2-1 or d^2-d
        if (u % (d - 1) == 0) {
            long m = u / (d - 1);
            if (m >= 1 && v == m * d &&
                ((d * d) % gamma == 0 || (d * d - 1) % gamma == 0 ||
                 (d * d - d) % gamma == 0) &&
                std::gcd(m, gamma) == 1 && n == m * (d * d + d - 1) + gamma)
                return true;
        }
    }
    return false;
}

void check_kupka_pre(int d, const WeightData& w) {
    if (!(1 <= w.a && w.a < w.b && w.b < w.c))
        throw std::invalid_argument("kupka criterion needs 1 <= a < b < c");
    if (d < 3) throw std::invalid_argument("kupka criterion needs d >= 3");
}

}  // namespace

bool kupka_arithmetic(int d, const WeightData& w) {
    check_kupka_pre(d, w);
    if (kupka_families_reconciled(d, w.a, w.b, w.c, w.n)) return true;
    auto iw = involution(d, w);
    return iw && kupka_families_reconciled(d, iw->a, iw->b, iw->c, iw->n);
}

bool kupka_families_as_printed(int d, const WeightData& w) {
    check_kupka_pre(d, w);
    if (kupka_families_printed(d, w.a, w.b, w.c, w.n)) return true;
    auto iw = involution(d, w);
    return iw && kupka_families_printed(d, iw->a, iw->b, iw->c, iw->n);
}

std::vector<WeightData> extra_kupka_cases(int d) {
    if (d != 3) return {};
    return {WeightData(0, 1, 2, 3), WeightData(1, 1, 2, 5), WeightData(1, 2, 2, 7)};
}

namespace {

std::vector<Monomial> quasi_monomials(long qdeg, const std::vector<long>& weights) {
    std::vector<Monomial> out;
    Monomial m(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, long rem) -> void {
        if (pos == weights.size()) {
            if (rem == 0) out.push_back(m);
            return;
        }
        for (long e = 0; e * weights[pos] <= rem; ++e) {
            m[pos] = e;
            self(self, pos + 1, rem - e * weights[pos]);
        }
        m[pos] = 0;
    };
    rec(rec, 0, qdeg);
    return out;
}

}  // namespace

ProbeVerdict quasi_homog_zero_dim_probe(const std::vector<MPoly>& gens,
                                        const std::vector<long>& weights, long bound) {
    if (gens.empty()) throw std::invalid_argument("probe: no generators");
    for (long w : weights)
        if (w <= 0) throw std::invalid_argument("probe: weights must be positive");
    std::vector<MPoly> gs;
    std::vector<long> qdeg;
    long maxq = 0;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        auto wd = g.weighted_degree(weights);
        if (!wd) throw std::invalid_argument("probe: generator not quasi-homogeneous");
        gs.push_back(g);
        qdeg.push_back(*wd);
        maxq = std::max(maxq, *wd);
    }
    if (gs.empty()) throw std::invalid_argument("probe: all generators zero");
    long window = std::max(maxq, *std::max_element(weights.begin(), weights.end()));
    if (bound < window + 1) return ProbeVerdict::inconclusive;

    std::vector<std::size_t> dims(bound + 1, 0);
    for (long s = 0; s <= bound; ++s) {
        auto basis = quasi_monomials(s, weights);
        if (basis.empty()) {
            dims[s] = 0;
            continue;
        }
        std::map<Monomial, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        std::vector<RatVector> rows;
        for (std::size_t gi = 0; gi < gs.size(); ++gi) {
            if (qdeg[gi] > s) continue;
            for (const auto& mu : quasi_monomials(s - qdeg[gi], weights)) {
                MPoly prod = gs[gi] * MPoly::monomial(gs[gi].vars(), mu, Rational(1));
                RatVector row(basis.size(), Rational(0));
                for (const auto& [m, c] : prod.terms()) row[index.at(m)] = c;
                rows.push_back(std::move(row));
            }
        }
        RatMatrix m(rows.size(), basis.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < basis.size(); ++c)
                if (rows[r][c] != 0) m.at(r, c) = rows[r][c];
        dims[s] = basis.size() - rank(m);
    }

    bool all_zero = true, non_decreasing = true;
    for (long s = bound - window + 1; s <= bound; ++s) {
        if (dims[s] != 0) all_zero = false;
        if (s > bound - window + 1 && dims[s] < dims[s - 1]) non_decreasing = false;
    }
    if (all_zero) return ProbeVerdict::finite;
    if (non_decreasing && dims[bound] > 0) return ProbeVerdict::infinite;
    return ProbeVerdict::inconclusive;
}

std::vector<MPoly> non_kupka_ideal_affine(const TwistedOneForm& w) {
    std::vector<MPoly> gens;
    std::vector<MPoly> at1;
    for (int i = 0; i < 3; ++i) at1.push_back(MPoly::variable(3, i));
    at1.push_back(MPoly(3, Rational(1)));
    for (int i = 0; i < 4; ++i) {
        MPoly g = w.form.component({i}).substitute(at1);
        if (!g.is_zero()) gens.push_back(g);
    }
    PolyForm dw = d(dehomogenize(w));
    for (const auto& [idx, c] : dw.components()) gens.push_back(c);
    return gens;
}

WeightClass weight_classify(const WeightData& w) {
    long s = w.a + w.b + w.c;
    if (w.n < s) return WeightClass::rational_fibration;
    if (w.n == s) return WeightClass::closed_rational;
    if (!in_semigroup(w.n - s, w.a, w.b, w.c)) return WeightClass::darboux;
    return WeightClass::semigroup_case;
}

bool in_semigroup(long x, long a, long b, long c) {
    if (x < 0) return false;
    std::vector<char> reach(x + 1, 0);
    reach[0] = 1;
    for (long g : {a, b, c}) {
        if (g <= 0) continue;
        for (long s = g; s <= x; ++s)
            if (reach[s - g]) reach[s] = 1;
    }
    return reach[x];
}

namespace {

// rational roots of a univariate polynomial, exact for degree <= 2; higher
// degrees contribute nothing (the scan does not claim exhaustiveness)
std::vector<Rational> rational_roots(const MPoly& u) {
    std::vector<Rational> roots;
    if (u.is_zero()) return roots;
    int deg = u.degree_in(0);
    auto coeff = [&](int k) {
        Monomial m{k};
        return u.coeff(m);
    };
    if (deg == 1) {
        roots.push_back(-coeff(0) / coeff(1));
    } else if (deg == 2) {
        Rational a = coeff(2), b = coeff(1), c = coeff(0);
        Rational disc = b * b - Rational(4) * a * c;
        if (is_rational_square(disc)) {
            Integer sn, sd;
            mpz_sqrt(sn.get_mpz_t(), numerator(disc).get_mpz_t());
            mpz_sqrt(sd.get_mpz_t(), denominator(disc).get_mpz_t());
            Rational root_disc(sn, sd);
            root_disc.canonicalize();
            roots.push_back((-b + root_disc) / (Rational(2) * a));
            roots.push_back((-b - root_disc) / (Rational(2) * a));
        }
    }
    return roots;
}

}  // namespace

std::vector<SingularPointVerdict> rigid_irrationality_scan(int d, const WeightData& w,
                                                           const Rng& rng) {
    std::vector<SingularPointVerdict> out;
    auto V = eigenspace(d, w);
    if (V.empty()) return out;
    Rng local = rng.split(to_string(w));
    RatVector c(V.size());
    for (auto& x : c) x = local.coefficient();
    TwistedOneForm member;
    member.n = 3;
    member.d = d;
    member.form = PolyForm(4, 1);
    for (std::size_t i = 0; i < V.size(); ++i)
        if (c[i] != 0) member.form = member.form + V[i].form * c[i];
    if (member.is_zero()) return out;

    const long wt[4] = {w.a, w.b, w.c, 0};
    std::vector<MPoly> hom(4, MPoly(4));
    for (int i = 0; i < 4; ++i) hom[i] = member.form.component({i});

    // candidate rational points on the torus-invariant locus: orbits inside
    // coordinate planes, normalized so that all but one nonzero coordinate
    // equals 1; common rational roots of the restricted coefficients
    std::set<std::array<Rational, 4>> candidates;
    std::vector<std::vector<int>> zero_sets;
    for (int i = 0; i < 4; ++i) zero_sets.push_back({i});
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) zero_sets.push_back({i, j});
    for (const auto& Z : zero_sets) {
        for (int tpos = 0; tpos < 4; ++tpos) {
            if (std::find(Z.begin(), Z.end(), tpos) != Z.end()) continue;
            std::vector<MPoly> images;
            for (int i = 0; i < 4; ++i) {
                if (std::find(Z.begin(), Z.end(), i) != Z.end())
                    images.push_back(MPoly(1));
                else if (i == tpos)
                    images.push_back(MPoly::variable(1, 0));
                else
                    images.push_back(MPoly(1, Rational(1)));
            }
            MPoly g(1);
            bool all_zero = true;
            for (int i = 0; i < 4; ++i) {
                MPoly r = hom[i].substitute(images);
                if (!r.is_zero()) all_zero = false;
                g = poly_gcd(g, r);
            }
            std::vector<Rational> roots;
            if (all_zero) {
                roots.push_back(Rational(1));  // whole invariant curve singular
            } else if (!g.is_constant()) {
                // strip the monomial factor t^k; t = 0 is covered by larger
                // zero sets
                int val = 0;
                for (const auto& [m, cf] : g.terms()) val = m[0];  // last term has min degree
                if (val > 0) {
                    MPoly t_pow = MPoly::monomial(1, Monomial{val}, Rational(1));
                    g = *divide_exact(g, t_pow);
                }
                roots = rational_roots(g);
            }
            for (const Rational& t : roots) {
                if (t == 0) continue;
                std::array<Rational, 4> p{Rational(0), Rational(0), Rational(0), Rational(0)};
                for (int i = 0; i < 4; ++i) {
                    if (std::find(Z.begin(), Z.end(), i) != Z.end()) continue;
                    p[i] = (i == tpos) ? t : Rational(1);
                }
                // canonical projective representative
                for (int i = 0; i < 4; ++i) {
                    if (p[i] != 0) {
                        Rational s = p[i];
                        for (auto& x : p) x /= s;
                        break;
                    }
                }
                candidates.insert(p);
            }
        }
    }

    for (const auto& p : candidates) {
        std::vector<Rational> full(p.begin(), p.end());
        bool singular = true;
        for (int i = 0; i < 4; ++i)
            if (hom[i].evaluate(full) != 0) singular = false;
        if (!singular) continue;
        int chart = -1;
        for (int i = 0; i < 4; ++i)
            if (p[i] == 1) chart = i;
        if (chart < 0) continue;
        // affine coordinates in the chart, order preserved
        std::vector<Rational> aff_pt;
        std::vector<long> aff_wt;
        for (int i = 0; i < 4; ++i) {
            if (i == chart) continue;
            aff_pt.push_back(p[i]);
            aff_wt.push_back(wt[i] - wt[chart]);
        }
        int slice = -1;
        for (int i = 0; i < 3; ++i)
            if (Rational(aff_wt[i]) * aff_pt[i] != 0) slice = i;
        if (slice < 0) continue;  // fixed point of the action
        PolyForm aff = dehomogenize_chart(member, chart);
        int u = (slice + 1) % 3, v2 = (slice + 2) % 3;
        if (u > v2) std::swap(u, v2);
        const MPoly A = aff.component({u});
        const MPoly C = aff.component({v2});
        SingularPointVerdict verdict;
        verdict.point = p;
        RatMatrix J(2, 2);
        J.at(0, 0) = -C.derivative(u).evaluate(aff_pt);
        J.at(0, 1) = -C.derivative(v2).evaluate(aff_pt);
        J.at(1, 0) = A.derivative(u).evaluate(aff_pt);
        J.at(1, 1) = A.derivative(v2).evaluate(aff_pt);
        Rational det = J.at(0, 0) * J.at(1, 1) - J.at(0, 1) * J.at(1, 0);
        verdict.invertible = det != 0;
        if (verdict.invertible) verdict.ratio_rational = eigen_ratio_rational(J);
        out.push_back(verdict);
    }
    return out;
}

}  // namespace fol
