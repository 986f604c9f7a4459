#include "fol/mpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fol {

namespace {

void check_same_ring(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars())
        throw std::invalid_argument("polynomial ring mismatch: " + std::to_string(a.vars()) +
                                    " vs " + std::to_string(b.vars()) + " variables");
}

}  // namespace

MPoly::MPoly(int vars, const Rational& c) : vars_(vars) {
    if (c != 0) terms_[Monomial(vars, 0)] = c;
}

MPoly MPoly::variable(int vars, int index) {
    if (index < 0 || index >= vars) throw std::out_of_range("variable index");
    Monomial m(vars, 0);
    m[index] = 1;
    return monomial(vars, m, Rational(1));
}

MPoly MPoly::monomial(int vars, const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != vars) throw std::invalid_argument("monomial length");
    MPoly p(vars);
    if (c != 0) p.terms_[m] = c;
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int MPoly::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.begin()->first);  // grlex leading term has max degree
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return terms_.empty() ? -1 : d;
}

bool MPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return false;
    return true;
}

Rational MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& MPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.begin()->first;
}

Rational MPoly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.begin()->second;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out(vars_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_same_ring(*this, o);
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_same_ring(*this, o);
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_same_ring(*this, o);
    MPoly out(vars_);
    Monomial prod(vars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            for (int i = 0; i < vars_; ++i) prod[i] = ma[i] + mb[i];
            out.add_term(prod, ca * cb);
        }
    }
    return out;
}

MPoly MPoly::operator*(const Rational& c) const {
    MPoly out(vars_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

MPoly MPoly::derivative(int var) const {
    MPoly out(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        dm[var] -= 1;
        out.add_term(dm, c * Rational(m[var]));
    }
    return out;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    if (static_cast<int>(images.size()) != vars_)
        throw std::invalid_argument("substitute: need one image per variable");
    for (const auto& img : images) check_same_ring(images.front(), img);
    int target_vars = images.empty() ? 0 : images.front().vars();

    // memoized powers per variable
    std::vector<std::vector<MPoly>> powers(vars_);
    for (int i = 0; i < vars_; ++i) powers[i].push_back(MPoly(target_vars, Rational(1)));

    MPoly out(target_vars);
    for (const auto& [m, c] : terms_) {
        MPoly term(target_vars, c);
        for (int i = 0; i < vars_ && !term.is_zero(); ++i) {
            while (static_cast<int>(powers[i].size()) <= m[i])
                powers[i].push_back(powers[i].back() * images[i]);
            if (m[i] > 0) term = term * powers[i][m[i]];
        }
        out += term;
    }
    return out;
}

Rational MPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != vars_)
        throw std::invalid_argument("evaluate: point dimension mismatch");
    Rational out(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < vars_; ++i)
            for (int e = 0; e < m[i]; ++e) t *= point[i];
        out += t;
    }
    return out;
}

std::optional<long> MPoly::weighted_degree(const std::vector<long>& w) const {
    if (static_cast<int>(w.size()) != vars_)
        throw std::invalid_argument("weighted_degree: weight vector length mismatch");
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
        long d = 0;
        for (int i = 0; i < vars_; ++i) d += w[i] * m[i];
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;  // nullopt only for p = 0 if no terms... zero poly: any degree
}

MPoly MPoly::extend(int extra) const {
    MPoly out(vars_ + extra);
    for (const auto& [m, c] : terms_) {
        Monomial em = m;
        em.resize(vars_ + extra, 0);
        out.terms_[em] = c;
    }
    return out;
}

MPoly MPoly::project_last() const {
    if (vars_ == 0) throw std::logic_error("project_last on 0-variable ring");
    MPoly out(vars_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.back() != 0) throw std::logic_error("project_last: variable occurs");
        Monomial pm(m.begin(), m.end() - 1);
        out.terms_[pm] = c;
    }
    return out;
}

std::string MPoly::str() const { return to_string(*this); }

Rational content(const MPoly& p) {
    if (p.is_zero()) return Rational(0);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        num_gcd = gcd(num_gcd, numerator(c));
        den_lcm = lcm(den_lcm, denominator(c));
    }
    Rational cont(num_gcd, den_lcm);
    cont.canonicalize();
    if (sign(p.leading_coeff()) < 0) cont = -cont;
    return cont;
}

MPoly normalized(const MPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / content(p));
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
    check_same_ring(p, q);
    if (q.is_zero()) return std::nullopt;
    MPoly rem = p;
    MPoly quot(p.vars());
    const Monomial& lq = q.leading_monomial();
    const Rational lc = q.leading_coeff();
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial();
        Monomial ratio(p.vars());
        for (int i = 0; i < p.vars(); ++i) {
            ratio[i] = lr[i] - lq[i];
            if (ratio[i] < 0) return std::nullopt;
        }
        MPoly t = MPoly::monomial(p.vars(), ratio, rem.leading_coeff() / lc);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

namespace {

// Univariate view in the main variable: coefficients are polynomials in the
// same ring with main-variable exponent zero.
using UPoly = std::vector<MPoly>;  // index = degree in main var

UPoly to_univariate(const MPoly& p, int var) {
    UPoly u(std::max(p.degree_in(var), 0) + 1, MPoly(p.vars()));
    for (const auto& [m, c] : p.terms()) {
        Monomial base = m;
        int e = base[var];
        base[var] = 0;
        u[e].add_term(base, c);
    }
    while (u.size() > 1 && u.back().is_zero()) u.pop_back();
    return u;
}

MPoly from_univariate(const UPoly& u, int var) {
    int vars = u.front().vars();
    MPoly out(vars);
    for (std::size_t e = 0; e < u.size(); ++e) {
        MPoly xe = MPoly::variable(vars, var);
        MPoly pw(vars, Rational(1));
        for (std::size_t k = 0; k < e; ++k) pw = pw * xe;
        out += u[e] * pw;
    }
    return out;
}

int udeg(const UPoly& u) {
    for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
        if (!u[d].is_zero()) return d;
    return -1;
}

bool uzero(const UPoly& u) { return udeg(u) < 0; }

UPoly umul_coeff(const UPoly& u, const MPoly& f) {
    UPoly out = u;
    for (auto& c : out) c = c * f;
    return out;
}

// Pseudo-remainder of a by b in the main variable: lc(b)^(da-db+1) a = q b + r.
UPoly pseudo_rem(UPoly a, const UPoly& b) {
    int db = udeg(b);
    const MPoly& lb = b[db];
    int da = udeg(a);
    while (da >= db && !uzero(a)) {
        MPoly la = a[da];
        // a = lc(b) * a - la * x^(da-db) * b
        for (auto& c : a) c = c * lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
        while (a.size() > 1 && a.back().is_zero()) a.pop_back();
        int nda = udeg(a);
        if (nda == da) throw std::logic_error("pseudo_rem: no degree drop");
        da = nda;
    }
    return a;
}

MPoly ucontent(const UPoly& u) {
    MPoly c(u.front().vars());
    for (const auto& coeff : u)
        if (!coeff.is_zero()) c = poly_gcd(c, coeff);
    return c;
}

UPoly uprimitive(const UPoly& u, const MPoly& cont) {
    UPoly out = u;
    for (auto& c : out) {
        if (c.is_zero()) continue;
        auto q = divide_exact(c, cont);
        if (!q) throw std::logic_error("uprimitive: content does not divide");
        c = *q;
    }
    return out;
}

MPoly coeff_pow(const MPoly& p, int e) {
    MPoly out(p.vars(), Rational(1));
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

// Subresultant polynomial remainder sequence on primitive inputs.
UPoly subresultant_gcd(UPoly a, UPoly b, int vars) {
    if (udeg(a) < udeg(b)) std::swap(a, b);
    MPoly g(vars, Rational(1)), h(vars, Rational(1));
    while (true) {
        int d = udeg(a) - udeg(b);
        UPoly r = pseudo_rem(a, b);
        if (uzero(r)) break;
        if (udeg(r) == 0) return UPoly{MPoly(vars, Rational(1))};  // coprime in main var
        a = b;
        MPoly divisor = g * coeff_pow(h, d);
        b = r;
        for (auto& c : b) {
            if (c.is_zero()) continue;
            auto q = divide_exact(c, divisor);
            if (!q) throw std::logic_error("subresultant: inexact division");
            c = *q;
        }
        g = a[udeg(a)];
        if (d > 0) {
            // h = g^d / h^(d-1), exact in the subresultant scheme
            auto q = divide_exact(coeff_pow(g, d), coeff_pow(h, d - 1));
            if (!q) throw std::logic_error("subresultant: inexact h update");
            h = *q;
        }
    }
    MPoly cont = ucontent(b);
    return uprimitive(b, cont);
}

}  // namespace

MPoly poly_gcd(const MPoly& p, const MPoly& q) {
    check_same_ring(p, q);
    if (p.is_zero()) return normalized(q);
    if (q.is_zero()) return normalized(p);
    if (p.is_constant() || q.is_constant()) return MPoly(p.vars(), Rational(1));

    // main variable: highest-index variable occurring in either
    int var = -1;
    for (int i = p.vars() - 1; i >= 0; --i) {
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) {
            var = i;
            break;
        }
    }
    UPoly up = to_univariate(p, var), uq = to_univariate(q, var);
    MPoly cp = ucontent(up), cq = ucontent(uq);
    MPoly cont_gcd = poly_gcd(cp, cq);
    UPoly g = subresultant_gcd(uprimitive(up, cp), uprimitive(uq, cq), p.vars());
    return normalized(from_univariate(g, var) * cont_gcd);
}

std::vector<Monomial> monomials_of_degree(int vars, int degree) {
    std::vector<Monomial> out;
    Monomial m(vars, 0);
    // lexicographic descent; grlex and lex agree within one total degree
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == vars - 1) {
            m[pos] = rem;
            out.push_back(m);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            m[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    if (vars == 0) {
        if (degree == 0) out.push_back({});
        return out;
    }
    rec(rec, 0, degree);
    return out;
}

std::string to_string(const MPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (sign(a) < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (sign(a) < 0 ? " - " : " + ");
            if (sign(a) < 0) a = -a;
        }
        first = false;
        bool has_vars = total_degree(m) > 0;
        if (a != 1 || !has_vars) {
            os << a.get_str();
            if (has_vars) os << "*";
        }
        bool first_var = true;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << i;
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    int vars;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
    }

    MPoly parse_expr() {
        MPoly acc = parse_term();
        while (true) {
            skip_ws();
            if (eat('+'))
                acc += parse_term();
            else if (eat('-'))
                acc -= parse_term();
            else
                break;
        }
        return acc;
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                acc = acc * parse_factor();
            } else if (pos < text.size() &&
                       (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '(')) {
                acc = acc * parse_factor();  // implicit product, e.g. "3x0"
            } else {
                break;
            }
        }
        return acc;
    }

    MPoly parse_factor() {
        MPoly base = parse_base();
        skip_ws();
        if (eat('^')) {
            long e = parse_integer();
            if (e < 0) fail("negative exponent");
            MPoly out(vars, Rational(1));
            for (long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    MPoly parse_base() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            MPoly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (c == '-') {
            ++pos;
            return -parse_factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_variable();
        fail("unexpected character");
    }

    long parse_integer() {
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        long v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            v = v * 10 + (text[pos++] - '0');
        return neg ? -v : v;
    }

    MPoly parse_number() {
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        Integer num(digits, 10);
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            // fraction only when followed by digits (coefficients like 15/2)
            std::size_t save = pos;
            ++pos;
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string den;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    den += text[pos++];
                Rational q(num, Integer(den, 10));
                q.canonicalize();
                return MPoly(vars, q);
            }
            pos = save;
        }
        return MPoly(vars, Rational(num));
    }

    MPoly parse_variable() {
        char c = text[pos];
        if (c == 'x' && pos + 1 < text.size() &&
            std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
            ++pos;
            int idx = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                idx = idx * 10 + (text[pos++] - '0');
            if (idx >= vars) fail("variable index out of range");
            return MPoly::variable(vars, idx);
        }
        int idx;
        switch (c) {
            case 'x': idx = 0; break;
            case 'y': idx = 1; break;
            case 'z': idx = 2; break;
            case 'w': idx = 3; break;
            default: fail("unknown variable");
        }
        ++pos;
        if (idx >= vars) fail("variable index out of range");
        return MPoly::variable(vars, idx);
    }
};

}  // namespace

MPoly parse_poly(const std::string& text, int vars) {
    Parser p{text, 0, vars};
    MPoly out = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return out;
}

}  // namespace fol
