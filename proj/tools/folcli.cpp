#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fol/report.hpp"

namespace {

int cmd_tables(std::uint64_t seed, int trials, const std::string& output,
               const std::string& golden_path) {
    std::ifstream golden_file(golden_path);
    if (!golden_file) {
        std::cerr << "cannot open golden fixture: " << golden_path << "\n";
        return 2;
    }
    std::stringstream golden;
    golden << golden_file.rdbuf();

    fol::Rng rng(seed);
    fol::AtlasReport rep = fol::build_tables(rng, trials);
    if (output == "json")
        std::cout << fol::report_json(rep);
    else if (output == "csv")
        std::cout << fol::report_csv(rep);
    else
        std::cout << fol::report_text(rep);

    std::vector<std::string> diff;
    try {
        diff = fol::compare_with_golden(rep, golden.str());
    } catch (const std::exception& e) {
        std::cerr << "golden fixture unreadable: " << e.what() << "\n";
        return 2;
    }
    if (!diff.empty()) {
        std::cerr << "mismatches against " << golden_path << ":\n";
        for (const auto& m : diff) std::cerr << "  " << m << "\n";
        return 1;
    }
    return 0;
}

int cmd_enumerate(std::uint64_t seed, int trials, const std::string& output, int degree,
                  bool kupka, long probe_bound) {
    fol::Rng rng(seed);
    fol::EnumerationReport rep = fol::run_enumeration(degree, rng, trials, kupka);
    if (output == "json")
        std::cout << fol::enumeration_json(rep);
    else if (output == "csv")
        std::cout << fol::enumeration_csv(rep);
    else
        std::cout << fol::enumeration_text(rep);

    if (kupka && probe_bound > 0) {
        std::cout << "graded probe of the non-Kupka ideal (chart x3 = 1, bound " << probe_bound
                  << "):\n";
        for (const auto& cert : rep.certificates) {
            if (!cert.kept || cert.w.a < 1) continue;
            auto V = fol::eigenspace(degree, cert.w);
            fol::Rng local = rng.split("probe:" + fol::to_string(cert.w));
            fol::TwistedOneForm m;
            m.n = 3;
            m.d = degree;
            m.form = fol::PolyForm(4, 1);
            for (const auto& b : V) m.form = m.form + b.form * local.coefficient();
            auto verdict = fol::quasi_homog_zero_dim_probe(
                fol::non_kupka_ideal_affine(m), {cert.w.a, cert.w.b, cert.w.c}, probe_bound);
            const char* text = verdict == fol::ProbeVerdict::finite
                                   ? "finite"
                                   : (verdict == fol::ProbeVerdict::infinite ? "infinite"
                                                                             : "inconclusive");
            std::cout << "  " << fol::to_string(cert.w) << ": " << text << "\n";
        }
    }
    return 0;
}

int cmd_analyze(const std::string& path, const std::string& output) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open form file: " << path << "\n";
        return 2;
    }
    std::stringstream text;
    text << in.rdbuf();

    fol::TwistedOneForm w;
    try {
        nlohmann::json j = nlohmann::json::parse(text.str());
        fol::PolyForm form = fol::form_from_json(text.str());
        if (form.degree() != 1) throw std::invalid_argument("input must be a 1-form");
        if (j.contains("n") && j.contains("d")) {
            int n = j.at("n").get<int>();
            int d = j.at("d").get<int>();
            if (n != 3) throw std::invalid_argument("analysis supports n = 3");
            w = fol::TwistedOneForm(n, d, form);
        } else if (form.vars() == 4) {
            int deg = -1;
            for (const auto& [idx, c] : form.components()) deg = std::max(deg, c.degree());
            w = fol::TwistedOneForm(3, deg - 1, form);
        } else if (form.vars() == 3) {
            int deg = -1;
            for (const auto& [idx, c] : form.components()) deg = std::max(deg, c.degree());
            try {
                w = fol::homogenize_affine(form, deg - 1);
            } catch (const std::invalid_argument&) {
                w = fol::homogenize_affine(form, deg);
            }
        } else {
            throw std::invalid_argument("expected a form in 3 or 4 variables");
        }
    } catch (const std::exception& e) {
        std::cerr << "cannot read form: " << e.what() << "\n";
        return 2;
    }

    fol::AnalysisRecord rec = fol::analyze_form(w);
    if (output == "json")
        std::cout << fol::analysis_json(rec);
    else
        std::cout << fol::analysis_text(rec);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification engine for degree-three codimension-one foliations on P^3"};
    app.require_subcommand(1);

    std::uint64_t seed = 42;
    int trials = 3;
    std::string output = "text";
    app.add_option("--seed", seed, "seed for all randomized member choices")
        ->capture_default_str();
    app.add_option("--trials", trials, "seeds per genericity-sensitive value")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output", output, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.fallthrough();

    auto* tables = app.add_subcommand("tables", "compute the component tables and compare "
                                                "against the golden fixture");
    std::string golden_path = "data/golden_tables.json";
    tables->add_option("--golden", golden_path, "golden fixture path")->capture_default_str();

    auto* enumerate = app.add_subcommand(
        "enumerate", "enumerate the eigenspace quadruples surviving the filters");
    int degree = 3;
    bool kupka = false;
    long probe_bound = 0;
    enumerate->add_option("--degree", degree, "foliation degree")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    enumerate->add_flag("--kupka", kupka, "also run the non-Kupka finiteness criterion");
    enumerate->add_option("--probe-bound", probe_bound,
                          "quasi-degree bound for the graded probe cross-check (0 = off)");

    auto* analyze = app.add_subcommand("analyze", "analyze a single 1-form from a JSON file");
    std::string form_path;
    analyze->add_option("file", form_path, "form file (PolyForm JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (tables->parsed()) return cmd_tables(seed, trials, output, golden_path);
        if (enumerate->parsed())
            return cmd_enumerate(seed, trials, output, degree, kupka, probe_bound);
        if (analyze->parsed()) return cmd_analyze(form_path, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
