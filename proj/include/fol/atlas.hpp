#pragma once

#include <string>

#include "fol/additive.hpp"
#include "fol/torus.hpp"

namespace fol {

// Ordered partition (d_1 <= ... <= d_k) of d+2 with at least two parts,
// indexing a logarithmic component.
struct LogPartition {
    std::vector<int> parts;

    LogPartition(std::vector<int> parts, int d);
    std::string name() const;  // "Log(1,1,3)"
};

// The twisted form sum_i lambda_i (prod_{j != i} f_j) df_i. Requires the
// residue relation sum lambda_i d_i = 0 and deg f_i = d_i.
TwistedOneForm log_member(const LogPartition& partition, const std::vector<Rational>& lambda,
                          const std::vector<MPoly>& f);

// A parameterized family member together with the directional derivatives
// of the parameterization at that point; feeds the generic-rank dimension
// computation.
struct TangentFrame {
    TwistedOneForm at;
    std::vector<PolyForm> directions;
};

// Projective dimension of the image: rank of the directions together with
// the member itself, minus one.
std::size_t component_dim_generic_rank(const TangentFrame& frame);

TangentFrame log_frame(const LogPartition& partition, int d, Rng& rng);

// The explicit degree-3 foliation on P^4 behind SLog(3,4): the quartic A and
// cubic B of the d log(A^3/B^4) form, and the twisted form
// (3B dA - 4A dB)/x4^2 with its codimension-one divisor removed.
MPoly cede_quartic();
MPoly cede_cubic();
TwistedOneForm cede_p4_form();

// Pull-back of the P^4 foliation along a generically injective linear
// morphism P^3 -> P^4 (rows of phi = coordinate images); hard error when
// rank phi < 4.
TwistedOneForm slog34_member(const RatMatrix& phi);
TangentFrame slog34_frame(Rng& rng);

// The 11-parameter quintic family f with x3^2 | 5 f dg - 2 g df for the
// fixed quadric g = x0^2 - 2 x1 x3, and the member (5 f dg - 2 g df)/x3^2.
std::vector<MPoly> slog25_family_basis();
MPoly slog25_quadric();
TwistedOneForm slog25_member(const RatVector& c);
// Independent re-derivation: solve the divisibility conditions over all
// quintics; returns a basis of the solution space.
std::vector<MPoly> slog25_rederive_family();
TangentFrame slog25_frame(Rng& rng);

// Linear pull-backs of degree-3 foliations on P^2.
TwistedOneForm lpb_member(const RatVector& plane_coords, const RatMatrix& projection);
TangentFrame lpb_frame(Rng& rng);

// One catalogued irreducible-component candidate.
struct ComponentDescriptor {
    std::string name;
    std::string kind;  // "log", "slog", "tm", "ta", "lpb", "contained"
    long dim = -1;
    long zdim = -1;
    bool generically_reduced = false;
    bool has_rational_first_integral = false;
    bool has_integrating_factor = false;
    long leaf_degree = -1;  // general leaf degree where recorded, else -1
    std::string aliases;    // iota-partner, e.g. "TM(1,2,3;8)"
    std::string comment;
};

struct AtlasReport {
    std::vector<ComponentDescriptor> log_rows;       // Table of Log/SLog components
    std::vector<ComponentDescriptor> split_rows;     // split tangent sheaf table
    std::vector<ComponentDescriptor> nonrigid_rows;  // non-rigid, no first integral
    std::vector<ComponentDescriptor> rigid_rows;     // rigid, no first integral
    std::vector<ComponentDescriptor> contained_rows; // first-integral candidates
    std::vector<ComponentDescriptor> additive_rows;  // TA rows
    ComponentDescriptor lpb_row;
    int components_without_first_integral = 0;
    int total_catalogued_components = 0;
};

// Computes every catalogued row: dims by formula or generic rank, Zdims by
// the seeded minimum rule, flags, aliases and the aggregate counts.
AtlasReport build_tables(const Rng& rng, int trials);

}  // namespace fol
