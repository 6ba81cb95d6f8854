#pragma once

#include "permaspin/model.hpp"

namespace permaspin {

// Low-temperature configuration-class sums for the S3/destat ring.

enum class FieldCase { Zero, Positive, Negative };
const char* field_case_name(FieldCase f);

struct LowTempReport {
    double z_uniform = 0.0;      // all spins equal
    double z_domain_wall = 0.0;  // exactly two maximal constant arcs
    double z_approx = 0.0;       // dominant-term combination for the field case
    double z_exact = 0.0;        // ring trace
    double ln_ratio = 0.0;       // ln(z_approx) / ln(z_exact)
    FieldCase field_case = FieldCase::Zero;
};

// e^{n beta J} (e^{-n beta H} + 4 + e^{n beta H}): the six uniform
// configurations, exactly.
double uniform_contribution(int n, const ModelParams& p);

// (n e^{beta J (n-2)} / 2) * [ (8 + 4 e^{-2 beta J})(n-1)
//   + 8 sum_{k=1}^{n-1} (e^{k beta H} + e^{-k beta H})
//   + 2 e^{-2 beta J} sum_{k=1}^{n-1} e^{(n-2k) beta H} ]:
// the two-arc (single domain-wall pair) class, exactly. n >= 2.
double domain_wall_contribution(int n, const ModelParams& p);

// Class sums plus the dominant-term approximation selected by sign(H),
// compared against the exact ring trace. n >= 3.
LowTempReport lowtemp_z(int n, const ModelParams& p);

struct LowTempFVariants {
    double f_simple = 0.0;        // -(J + |H|)
    double f_lambda4 = 0.0;       // -(J+H) - ln(lambda4)/beta, validated a,b convention
    double f_lambda4_alt = 0.0;   // same shape under the alternative c = e^{-2 beta H}, d = e^{-2 beta J}
};

// The two low-temperature free-energy predictions (plus the alternative-
// convention evaluation of the second, kept for comparison). Meaningful for
// large beta.
LowTempFVariants lowtemp_f_variants(const ModelParams& p);

}  // namespace permaspin
