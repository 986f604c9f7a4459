#include "fol/polyform.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace fol {

PolyVField::PolyVField(int m, std::vector<MPoly> comps) : vars(m), components(std::move(comps)) {
    if (static_cast<int>(components.size()) != m)
        throw std::invalid_argument("vector field needs one component per variable");
    for (const auto& c : components)
        if (c.vars() != m) throw std::invalid_argument("vector field component ring mismatch");
}

PolyVField PolyVField::radial(int m) {
    PolyVField v(m);
    for (int i = 0; i < m; ++i) v.components[i] = MPoly::variable(m, i);
    return v;
}

PolyVField PolyVField::operator+(const PolyVField& o) const {
    if (vars != o.vars) throw std::invalid_argument("vector field ring mismatch");
    PolyVField out(vars);
    for (int i = 0; i < vars; ++i) out.components[i] = components[i] + o.components[i];
    return out;
}

PolyVField PolyVField::operator*(const Rational& c) const {
    PolyVField out(vars);
    for (int i = 0; i < vars; ++i) out.components[i] = components[i] * c;
    return out;
}

PolyVField bracket(const PolyVField& v, const PolyVField& w) {
    if (v.vars != w.vars) throw std::invalid_argument("bracket: ring mismatch");
    PolyVField out(v.vars);
    for (int i = 0; i < v.vars; ++i) {
        MPoly acc(v.vars);
        for (int j = 0; j < v.vars; ++j) {
            acc += w.components[i].derivative(j) * v.components[j];
            acc -= v.components[i].derivative(j) * w.components[j];
        }
        out.components[i] = acc;
    }
    return out;
}

PolyForm::PolyForm(int vars, int degree) : vars_(vars), degree_(degree) {
    if (degree < 0 || degree > vars) throw std::invalid_argument("form degree out of range");
}

PolyForm PolyForm::one_form(const std::vector<MPoly>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("one_form: no coefficients");
    int m = static_cast<int>(coeffs.size());
    PolyForm a(m, 1);
    for (int i = 0; i < m; ++i) {
        if (coeffs[i].vars() != m) throw std::invalid_argument("one_form: ring mismatch");
        a.add_component({i}, coeffs[i]);
    }
    return a;
}

PolyForm PolyForm::from_poly(const MPoly& p) {
    PolyForm a(p.vars(), 0);
    a.add_component({}, p);
    return a;
}

MPoly PolyForm::component(const IdxTuple& idx) const {
    auto it = components_.find(idx);
    return it == components_.end() ? MPoly(vars_) : it->second;
}

void PolyForm::add_component(const IdxTuple& idx, const MPoly& coeff) {
    if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("index tuple length");
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= vars_) throw std::invalid_argument("index out of range");
        if (i + 1 < idx.size() && idx[i] >= idx[i + 1])
            throw std::invalid_argument("index tuple not strictly increasing");
    }
    if (coeff.is_zero()) return;
    if (coeff.vars() != vars_) throw std::invalid_argument("component ring mismatch");
    auto [it, fresh] = components_.emplace(idx, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) components_.erase(it);
    }
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
    if (vars_ != o.vars_ || degree_ != o.degree_)
        throw std::invalid_argument("form addition: shape mismatch");
    PolyForm out = *this;
    for (const auto& [idx, c] : o.components_) out.add_component(idx, c);
    return out;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

PolyForm PolyForm::operator-() const {
    PolyForm out(vars_, degree_);
    for (const auto& [idx, c] : components_) out.components_[idx] = -c;
    return out;
}

PolyForm PolyForm::operator*(const Rational& c) const {
    PolyForm out(vars_, degree_);
    if (c == 0) return out;
    for (const auto& [idx, f] : components_) out.components_[idx] = f * c;
    return out;
}

PolyForm PolyForm::operator*(const MPoly& p) const {
    PolyForm out(vars_, degree_);
    for (const auto& [idx, f] : components_) {
        MPoly prod = f * p;
        if (!prod.is_zero()) out.components_[idx] = prod;
    }
    return out;
}

std::optional<PolyForm> PolyForm::divide_exact_by(const MPoly& p) const {
    PolyForm out(vars_, degree_);
    for (const auto& [idx, f] : components_) {
        auto q = divide_exact(f, p);
        if (!q) return std::nullopt;
        out.components_[idx] = *q;
    }
    return out;
}

int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            if ((a.size() - i) % 2 == 1) sign = -sign;
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return sign;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    if (a.vars() != b.vars()) throw std::invalid_argument("wedge: ring mismatch");
    if (a.degree() + b.degree() > a.vars()) throw std::invalid_argument("wedge: degree overflow");
    PolyForm out(a.vars(), a.degree() + b.degree());
    IdxTuple merged;
    for (const auto& [ia, ca] : a.components()) {
        for (const auto& [ib, cb] : b.components()) {
            int s = merge_sign(ia, ib, merged);
            if (s == 0) continue;
            out.add_component(merged, ca * cb * Rational(s));
        }
    }
    return out;
}

PolyForm d(const PolyForm& a) {
    // d of a top-degree form vanishes identically; returned as a zero form of
    // the same shape since degree vars+1 is not representable
    if (a.degree() == a.vars()) return PolyForm(a.vars(), a.degree());
    PolyForm out(a.vars(), a.degree() + 1);
    IdxTuple merged;
    for (const auto& [idx, c] : a.components()) {
        for (int v = 0; v < a.vars(); ++v) {
            MPoly dc = c.derivative(v);
            if (dc.is_zero()) continue;
            int s = merge_sign({v}, idx, merged);
            if (s == 0) continue;
            out.add_component(merged, dc * Rational(s));
        }
    }
    return out;
}

PolyForm contract(const PolyVField& v, const PolyForm& a) {
    if (v.vars != a.vars()) throw std::invalid_argument("contract: ring mismatch");
    if (a.degree() == 0) throw std::invalid_argument("contract: cannot contract a 0-form");
    PolyForm out(a.vars(), a.degree() - 1);
    for (const auto& [idx, c] : a.components()) {
        for (std::size_t pos = 0; pos < idx.size(); ++pos) {
            const MPoly& comp = v.components[idx[pos]];
            if (comp.is_zero()) continue;
            IdxTuple rest;
            rest.reserve(idx.size() - 1);
            for (std::size_t k = 0; k < idx.size(); ++k)
                if (k != pos) rest.push_back(idx[k]);
            Rational s(pos % 2 == 0 ? 1 : -1);
            out.add_component(rest, comp * c * s);
        }
    }
    return out;
}

PolyForm lie(const PolyVField& v, const PolyForm& a) {
    if (a.degree() == 0) {
        // L_v f = v(f)
        MPoly acc(a.vars());
        MPoly f = a.component({});
        for (int i = 0; i < a.vars(); ++i) acc += v.components[i] * f.derivative(i);
        return PolyForm::from_poly(acc);
    }
    if (a.degree() == a.vars()) return d(contract(v, a));  // i_v d a = 0 at top degree
    return contract(v, d(a)) + d(contract(v, a));
}

PolyVField curl3(const PolyForm& a) {
    if (a.vars() != 3 || a.degree() != 2)
        throw std::invalid_argument("curl3 needs a 2-form in 3 variables");
    PolyVField w(3);
    w.components[0] = a.component({1, 2});
    w.components[1] = -a.component({0, 2});
    w.components[2] = a.component({0, 1});
    return w;
}

PolyForm pullback(const PolyForm& a, const std::vector<MPoly>& images) {
    if (static_cast<int>(images.size()) != a.vars())
        throw std::invalid_argument("pullback: one image per source variable");
    int target = images.front().vars();
    for (const auto& img : images)
        if (img.vars() != target) throw std::invalid_argument("pullback: image ring mismatch");
    // d(images[i]) as target one-forms
    std::vector<PolyForm> dimg;
    dimg.reserve(images.size());
    for (const auto& img : images) {
        std::vector<MPoly> comps(target, MPoly(target));
        for (int j = 0; j < target; ++j) comps[j] = img.derivative(j);
        dimg.push_back(PolyForm::one_form(comps));
    }
    PolyForm out(target, a.degree());
    for (const auto& [idx, c] : a.components()) {
        PolyForm term = PolyForm::from_poly(c.substitute(images));
        // successive wedges raise degree from 0 to k
        PolyForm acc(target, 0);
        bool started = false;
        for (int i : idx) {
            if (!started) {
                acc = dimg[i] * term.component({});
                started = true;
            } else {
                acc = wedge(acc, dimg[i]);
            }
        }
        if (!started)
            out = out + term;  // 0-form case
        else
            out = out + acc;
    }
    return out;
}

std::string form_to_json(const PolyForm& a) {
    nlohmann::ordered_json j;
    j["vars"] = a.vars();
    j["degree"] = a.degree();
    nlohmann::ordered_json comps = nlohmann::ordered_json::object();
    for (const auto& [idx, c] : a.components()) {
        std::ostringstream key;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i) key << ",";
            key << idx[i];
        }
        comps[key.str()] = to_string(c);
    }
    j["components"] = comps;
    return j.dump(2);
}

PolyForm form_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int vars = j.at("vars").get<int>();
    int degree = j.at("degree").get<int>();
    PolyForm a(vars, degree);
    for (const auto& [key, value] : j.at("components").items()) {
        IdxTuple idx;
        std::istringstream is(key);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (!tok.empty()) idx.push_back(std::stoi(tok));
        }
        a.add_component(idx, parse_poly(value.get<std::string>(), vars));
    }
    return a;
}

}  // namespace fol
