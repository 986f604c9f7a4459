#include "fol/report.hpp"

#include <set>
#include <sstream>

#include <json.hpp>

namespace fol {

namespace {

using Json = nlohmann::ordered_json;

Json row_json(const ComponentDescriptor& r) {
    Json j;
    j["component"] = r.name;
    j["kind"] = r.kind;
    j["dim"] = r.dim;
    j["zdim"] = r.zdim;
    j["generically_reduced"] = r.generically_reduced;
    j["has_rational_first_integral"] = r.has_rational_first_integral;
    j["has_integrating_factor"] = r.has_integrating_factor;
    if (r.leaf_degree >= 0) j["leaf_degree"] = r.leaf_degree;
    if (!r.aliases.empty()) j["aliases"] = r.aliases;
    if (!r.comment.empty()) j["comment"] = r.comment;
    return j;
}

void csv_rows(std::ostringstream& os, const std::vector<ComponentDescriptor>& rows) {
    for (const auto& r : rows) {
        os << r.name << "," << r.kind << "," << r.dim << "," << r.zdim << ","
           << (r.generically_reduced ? "yes" : "no") << "," << r.aliases << ","
           << r.comment << "\n";
    }
}

Json weight_json(const WeightData& w) {
    Json j;
    j["a"] = w.a;
    j["b"] = w.b;
    j["c"] = w.c;
    j["n"] = w.n;
    return j;
}

std::string weight_str(const WeightData& w) { return to_string(w); }

}  // namespace

std::string report_json(const AtlasReport& rep) {
    Json j;
    j["log"] = Json::array();
    for (const auto& r : rep.log_rows) j["log"].push_back(row_json(r));
    j["split"] = Json::array();
    for (const auto& r : rep.split_rows) j["split"].push_back(row_json(r));
    j["nonrigid"] = Json::array();
    for (const auto& r : rep.nonrigid_rows) j["nonrigid"].push_back(row_json(r));
    j["rigid"] = Json::array();
    for (const auto& r : rep.rigid_rows) j["rigid"].push_back(row_json(r));
    j["contained_candidates"] = Json::array();
    for (const auto& r : rep.contained_rows) j["contained_candidates"].push_back(row_json(r));
    j["additive"] = Json::array();
    for (const auto& r : rep.additive_rows) j["additive"].push_back(row_json(r));
    j["linear_pullback"] = row_json(rep.lpb_row);
    j["aggregates"]["without_first_integral"] = rep.components_without_first_integral;
    j["aggregates"]["total_catalogued"] = rep.total_catalogued_components;
    return j.dump(2) + "\n";
}

std::string report_csv(const AtlasReport& rep) {
    std::ostringstream os;
    os << "component,kind,dim,zdim,reduced,aliases,comment\n";
    csv_rows(os, rep.log_rows);
    csv_rows(os, rep.split_rows);
    csv_rows(os, rep.nonrigid_rows);
    csv_rows(os, rep.rigid_rows);
    return os.str();
}

std::string report_text(const AtlasReport& rep) {
    std::ostringstream os;
    auto table = [&](const char* title, const std::vector<ComponentDescriptor>& rows) {
        os << "== " << title << "\n";
        for (const auto& r : rows) {
            os << "  " << r.name;
            if (!r.aliases.empty()) os << " = " << r.aliases;
            os << ": dim " << r.dim << ", Zdim " << r.zdim
               << (r.generically_reduced ? "" : "  [not generically reduced]");
            if (!r.comment.empty()) os << "  (" << r.comment << ")";
            os << "\n";
        }
    };
    table("logarithmic and special logarithmic components", rep.log_rows);
    table("split tangent sheaf, finitely many non-Kupka points", rep.split_rows);
    table("non-rigid components without rational first integral", rep.nonrigid_rows);
    table("rigid components without rational first integral", rep.rigid_rows);
    table("candidates with rational first integrals", rep.contained_rows);
    table("additive-action sets", rep.additive_rows);
    table("linear pull-back component", {rep.lpb_row});
    os << "components without rational first integral: "
       << rep.components_without_first_integral << "\n";
    os << "total catalogued components: " << rep.total_catalogued_components << "\n";
    return os.str();
}

namespace {

void compare_table(std::vector<std::string>& out, const char* key,
                   const std::vector<ComponentDescriptor>& rows, const Json& golden) {
    if (!golden.contains(key)) {
        out.push_back(std::string("golden file misses table ") + key);
        return;
    }
    const Json& g = golden[key];
    if (g.size() != rows.size()) {
        out.push_back(std::string(key) + ": row count " + std::to_string(rows.size()) +
                      " != golden " + std::to_string(g.size()));
        return;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const Json& gr = g[i];
        std::string gname = gr.at("component").get<std::string>();
        if (r.name != gname)
            out.push_back(std::string(key) + "[" + std::to_string(i) + "]: component " + r.name +
                          " != golden " + gname);
        long gdim = gr.at("dim").get<long>();
        long gzdim = gr.at("zdim").get<long>();
        if (r.dim != gdim)
            out.push_back(r.name + ": dim " + std::to_string(r.dim) + " != golden " +
                          std::to_string(gdim));
        if (r.zdim != gzdim)
            out.push_back(r.name + ": zdim " + std::to_string(r.zdim) + " != golden " +
                          std::to_string(gzdim));
        if (gr.contains("aliases")) {
            std::string galias = gr.at("aliases").get<std::string>();
            if (r.aliases != galias)
                out.push_back(r.name + ": aliases '" + r.aliases + "' != golden '" + galias + "'");
        }
        if (gr.contains("leaf_degree")) {
            long gleaf = gr.at("leaf_degree").get<long>();
            if (r.leaf_degree != gleaf)
                out.push_back(r.name + ": leaf degree " + std::to_string(r.leaf_degree) +
                              " != golden " + std::to_string(gleaf));
        }
    }
}

}  // namespace

std::vector<std::string> compare_with_golden(const AtlasReport& rep,
                                             const std::string& golden_json) {
    std::vector<std::string> out;
    Json golden = Json::parse(golden_json);
    const Json& tables = golden.at("tables");
    compare_table(out, "log", rep.log_rows, tables);
    compare_table(out, "split", rep.split_rows, tables);
    compare_table(out, "nonrigid", rep.nonrigid_rows, tables);
    compare_table(out, "rigid", rep.rigid_rows, tables);
    compare_table(out, "contained", rep.contained_rows, tables);
    compare_table(out, "additive", rep.additive_rows, tables);

    const Json& agg = golden.at("aggregates");
    if (rep.components_without_first_integral != agg.at("without_first_integral").get<int>())
        out.push_back("aggregate without_first_integral " +
                      std::to_string(rep.components_without_first_integral) + " != golden " +
                      std::to_string(agg.at("without_first_integral").get<int>()));
    if (rep.total_catalogued_components != agg.at("total_catalogued").get<int>())
        out.push_back("aggregate total_catalogued " +
                      std::to_string(rep.total_catalogued_components) + " != golden " +
                      std::to_string(agg.at("total_catalogued").get<int>()));

    // the generically non-reduced rows are exactly those the golden names
    if (golden.contains("non_reduced")) {
        std::set<std::string> expected;
        for (const auto& n : golden["non_reduced"]) expected.insert(n.get<std::string>());
        std::set<std::string> found;
        for (const auto* tbl :
             {&rep.log_rows, &rep.split_rows, &rep.nonrigid_rows, &rep.rigid_rows})
            for (const auto& r : *tbl)
                if (!r.generically_reduced) found.insert(r.name);
        if (found != expected) {
            std::string msg = "non-reduced set {";
            for (const auto& n : found) msg += n + " ";
            msg += "} != golden {";
            for (const auto& n : expected) msg += n + " ";
            msg += "}";
            out.push_back(msg);
        }
    }
    return out;
}

EnumerationReport run_enumeration(int degree, const Rng& rng, int trials, bool kupka) {
    EnumerationReport rep;
    rep.degree = degree;
    rep.kupka = kupka;
    auto candidates = enumerate_candidates(degree);
    rep.certificates = longlist_certificates(degree, candidates, rng, trials);
    if (kupka) {
        for (const auto& cert : rep.certificates) {
            if (!cert.kept) continue;
            const WeightData& w = cert.w;
            if (1 <= w.a && w.a < w.b && w.b < w.c) {
                bool reconciled = kupka_arithmetic(degree, w);
                if (reconciled) rep.kupka_list.push_back(w);
                if (reconciled != kupka_families_as_printed(degree, w))
                    rep.printed_family_mismatches.push_back(w);
            }
        }
        rep.kupka_extras = extra_kupka_cases(degree);
    }
    return rep;
}

namespace {

Json certificate_json(const QuadrupleCertificate& c) {
    Json j;
    j["weights"] = weight_json(c.w);
    j["dim_eigenspace"] = c.eigen_dim;
    j["codim_two_witnessed"] = c.codim_two;
    j["integrating_factor_kernel_dim"] = c.pif_kernel_dim;
    j["chi_spanning"] = c.chi_spanning;
    j["kept"] = c.kept;
    return j;
}

}  // namespace

std::string enumeration_json(const EnumerationReport& rep) {
    Json j;
    j["degree"] = rep.degree;
    Json kept = Json::array();
    Json all = Json::array();
    for (const auto& c : rep.certificates) {
        if (c.kept) kept.push_back(weight_json(c.w));
        all.push_back(certificate_json(c));
    }
    j["kept"] = kept;
    j["kept_count"] = kept.size();
    j["certificates"] = all;
    if (rep.kupka) {
        Json kl = Json::array();
        for (const auto& w : rep.kupka_list) kl.push_back(weight_json(w));
        j["kupka"] = kl;
        Json ke = Json::array();
        for (const auto& w : rep.kupka_extras) ke.push_back(weight_json(w));
        j["kupka_extra_cases"] = ke;
        Json mm = Json::array();
        for (const auto& w : rep.printed_family_mismatches) mm.push_back(weight_json(w));
        j["printed_family_mismatches"] = mm;
    }
    return j.dump(2) + "\n";
}

std::string enumeration_text(const EnumerationReport& rep) {
    std::ostringstream os;
    std::size_t kept = 0;
    for (const auto& c : rep.certificates)
        if (c.kept) ++kept;
    os << "degree " << rep.degree << ": " << kept << " quadruples survive of "
       << rep.certificates.size() << " candidate hyperplanes\n";
    for (const auto& c : rep.certificates) {
        if (!c.kept) continue;
        os << "  " << weight_str(c.w) << "  dim V = " << c.eigen_dim
           << ", gcd = 1: " << (c.codim_two ? "yes" : "no")
           << ", delta-kernel = " << c.pif_kernel_dim << "\n";
    }
    if (rep.kupka) {
        os << "arithmetic non-Kupka finiteness (1 <= a < b < c): " << rep.kupka_list.size()
           << " quadruples\n";
        for (const auto& w : rep.kupka_list) os << "  " << weight_str(w) << "\n";
        os << "recorded degenerate-weight cases: ";
        for (const auto& w : rep.kupka_extras) os << weight_str(w) << " ";
        os << "\n";
        if (!rep.printed_family_mismatches.empty()) {
            os << "note: the families as printed disagree with the reconciled criterion at: ";
            for (const auto& w : rep.printed_family_mismatches) os << weight_str(w) << " ";
            os << "\n";
        }
    }
    return os.str();
}

std::string enumeration_csv(const EnumerationReport& rep) {
    std::ostringstream os;
    os << "a,b,c,n,dim_eigenspace,codim_two,delta_kernel_dim,kept\n";
    for (const auto& c : rep.certificates) {
        if (!c.kept) continue;
        os << c.w.a << "," << c.w.b << "," << c.w.c << "," << c.w.n << "," << c.eigen_dim << ","
           << (c.codim_two ? "yes" : "no") << "," << c.pif_kernel_dim << ","
           << (c.kept ? "yes" : "no") << "\n";
    }
    return os.str();
}

AnalysisRecord analyze_form(const TwistedOneForm& w) {
    AnalysisRecord rec;
    rec.integrable = is_integrable(w);
    rec.zero_divisor = to_string(codim_one_zero_divisor(w));
    if (rec.integrable) rec.zdim = static_cast<long>(zariski_tangent_dim(w));
    rec.fix_dim = fix_algebra(w).size();
    rec.aut_dim = aut_algebra(w).size();
    rec.pif_kernel_dim = integrating_factor_kernel(w).size();
    auto chi = char_monomials(dehomogenize(w));
    rec.chi.assign(chi.points.begin(), chi.points.end());
    rec.chi_collinear = chi_collinear(chi);
    rec.chi_interior = chi_interior(w.d, chi);
    return rec;
}

std::string analysis_json(const AnalysisRecord& rec) {
    Json j;
    j["integrable"] = rec.integrable;
    j["zero_divisor"] = rec.zero_divisor;
    if (rec.integrable)
        j["zariski_tangent_dim"] = rec.zdim;
    else
        j["zariski_tangent_dim"] = nullptr;
    j["fix_dim"] = rec.fix_dim;
    j["aut_dim"] = rec.aut_dim;
    j["integrating_factor_kernel_dim"] = rec.pif_kernel_dim;
    Json chi = Json::array();
    for (const auto& p : rec.chi) chi.push_back(Json::array({p[0], p[1], p[2]}));
    j["chi"] = chi;
    j["chi_collinear"] = rec.chi_collinear;
    j["chi_interior"] = rec.chi_interior;
    return j.dump(2) + "\n";
}

std::string analysis_text(const AnalysisRecord& rec) {
    std::ostringstream os;
    os << "integrable: " << (rec.integrable ? "yes" : "no") << "\n";
    os << "zero divisor: " << rec.zero_divisor << "\n";
    if (rec.integrable) os << "Zariski tangent dimension: " << rec.zdim << "\n";
    os << "dim fix: " << rec.fix_dim << ", dim aut: " << rec.aut_dim << "\n";
    os << "integrating-factor kernel dimension: " << rec.pif_kernel_dim << "\n";
    os << "chi: ";
    for (const auto& p : rec.chi) os << "(" << p[0] << "," << p[1] << "," << p[2] << ") ";
    os << "\n";
    os << "chi collinear: " << (rec.chi_collinear ? "yes" : "no")
       << ", chi interior: " << (rec.chi_interior ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace fol
