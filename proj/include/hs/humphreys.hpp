#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hs/alcoves.hpp"
#include "hs/cells_typeA.hpp"
#include "hs/nilpotent_gln.hpp"

namespace hs {

struct HumphreysCalibration {
    OrbitCalibration orbits;
    Partition zero_prediction;       // for mu = 0
    Partition steinberg_prediction;  // for mu = (p-1) rho
    std::string lower_closure = "n_a p <= <x+rho,a^vee> < (n_a+1) p";
    nlohmann::json to_json() const;
};

struct HumphreysReport {
    int n = 0;
    Int p = 0;
    Vec mu;
    BlockLabelResult labels;
    std::vector<Partition> label_orbits;  // per label
    Partition cell_shape;
    Partition orbit;
    int orbit_dim = 0;
    RankConditions rank;
    HumphreysCalibration calibration;
    std::vector<std::string> warnings;
    nlohmann::json to_json(const AffineWeyl& aw) const;
};

// Prediction without the anchor check; throws InvariantBreach if two labels disagree.
HumphreysReport humphreys_raw(const AffineWeyl& aw, Int p, const Vec& mu, const OrbitCalibration& cal);
// Runs both anchors first; throws CalibrationError if either fails.
HumphreysCalibration calibrate_humphreys(const AffineWeyl& aw, Int p);
// Needs the GL_n datum, p prime with p > n >= 2 and mu dominant.
HumphreysReport humphreys(const AffineWeyl& aw, Int p, const Vec& mu);

}  // namespace hs
