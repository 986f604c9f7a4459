#pragma once

#include <string>
#include <vector>

#include "fol/atlas.hpp"

namespace fol {

// Canonical machine-readable forms of the atlas report. Row order is fixed,
// so identical (seed, trials) give byte-identical output.
std::string report_json(const AtlasReport& rep);
std::string report_csv(const AtlasReport& rep);   // the four tables, 28 rows
std::string report_text(const AtlasReport& rep);

// Comparison against the versioned golden fixture; one message per
// mismatching value.
std::vector<std::string> compare_with_golden(const AtlasReport& rep,
                                             const std::string& golden_json);

struct EnumerationReport {
    int degree = 3;
    std::vector<QuadrupleCertificate> certificates;
    bool kupka = false;                    // include the finiteness analysis
    std::vector<WeightData> kupka_list;    // arithmetic criterion over the kept list
    std::vector<WeightData> kupka_extras;  // recorded degenerate-weight cases
    // quadruples where the literal family transcription disagrees with the
    // reconciled criterion
    std::vector<WeightData> printed_family_mismatches;
};

EnumerationReport run_enumeration(int degree, const Rng& rng, int trials, bool kupka);
std::string enumeration_json(const EnumerationReport& rep);
std::string enumeration_text(const EnumerationReport& rep);
std::string enumeration_csv(const EnumerationReport& rep);

// Analysis record of a single form (the analyze subcommand).
struct AnalysisRecord {
    bool integrable = false;
    std::string zero_divisor;   // gcd of the coefficients
    long zdim = -1;             // only when integrable
    std::size_t fix_dim = 0;
    std::size_t aut_dim = 0;
    std::size_t pif_kernel_dim = 0;
    std::vector<ChiPoint> chi;
    bool chi_collinear = false;
    bool chi_interior = false;
};

AnalysisRecord analyze_form(const TwistedOneForm& w);
std::string analysis_json(const AnalysisRecord& rec);
std::string analysis_text(const AnalysisRecord& rec);

}  // namespace fol
