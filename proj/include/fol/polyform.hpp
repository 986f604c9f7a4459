#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fol/mpoly.hpp"

namespace fol {

// Strictly increasing tuple of variable indices; keys the components of a
// differential form.
using IdxTuple = std::vector<int>;

// Polynomial vector field in m variables.
struct PolyVField {
    int vars = 0;
    std::vector<MPoly> components;

    PolyVField() = default;
    explicit PolyVField(int m) : vars(m), components(m, MPoly(m)) {}
    PolyVField(int m, std::vector<MPoly> comps);

    static PolyVField radial(int m);

    PolyVField operator+(const PolyVField& o) const;
    PolyVField operator*(const Rational& c) const;
    bool operator==(const PolyVField& o) const = default;
};

// Lie bracket [v, w] = (Dw) v - (Dv) w.
PolyVField bracket(const PolyVField& v, const PolyVField& w);

// Polynomial differential k-form; only nonzero components are stored, keyed
// by strictly increasing index tuples. All sign bookkeeping goes through
// merge_sign below.
class PolyForm {
public:
    PolyForm() : vars_(0), degree_(0) {}
    PolyForm(int vars, int degree);

    static PolyForm one_form(const std::vector<MPoly>& coeffs);
    static PolyForm from_poly(const MPoly& p);  // 0-form

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return components_.empty(); }
    const std::map<IdxTuple, MPoly>& components() const { return components_; }

    MPoly component(const IdxTuple& idx) const;
    void add_component(const IdxTuple& idx, const MPoly& coeff);

    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator-(const PolyForm& o) const;
    PolyForm operator-() const;
    PolyForm operator*(const Rational& c) const;
    PolyForm operator*(const MPoly& p) const;
    bool operator==(const PolyForm& o) const = default;

    // Every coefficient divisible by p, or nullopt.
    std::optional<PolyForm> divide_exact_by(const MPoly& p) const;

private:
    int vars_;
    int degree_;
    std::map<IdxTuple, MPoly> components_;
};

inline PolyForm operator*(const MPoly& p, const PolyForm& a) { return a * p; }

// Sign of merging two disjoint increasing tuples into one increasing tuple
// (parity of transpositions); 0 if they share an index.
int merge_sign(const IdxTuple& a, const IdxTuple& b, IdxTuple& merged);

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm d(const PolyForm& a);
PolyForm contract(const PolyVField& v, const PolyForm& a);
// Cartan formula: L_v = i_v d + d i_v.
PolyForm lie(const PolyVField& v, const PolyForm& a);

// In 3 variables, the unique w with i_w (dx0^dx1^dx2) = a for a 2-form a.
PolyVField curl3(const PolyForm& a);

// Pull-back along the polynomial map x_i = images[i](new coordinates).
PolyForm pullback(const PolyForm& a, const std::vector<MPoly>& images);

// Interchange format: {"vars": m, "degree": k, "components": {"0,2": "..."}}.
std::string form_to_json(const PolyForm& a);
PolyForm form_from_json(const std::string& text);

}  // namespace fol
