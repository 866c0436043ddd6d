#include "hs/humphreys.hpp"

#include "hs/errors.hpp"

namespace hs {

namespace {

bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

void check_input(const AffineWeyl& aw, Int p, const Vec& mu) {
    const auto& d = aw.datum();
    if (d.kind() != RootDatum::Kind::GL) throw InputError("the pipeline needs a GL_n datum");
    if (d.n() < 2) throw InputError("n must be at least 2");
    if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
    if (p <= d.n()) throw InputError("p must exceed n");
    if (static_cast<int>(mu.size()) != d.dim()) throw InputError("mu has the wrong length");
    if (!d.is_dominant(mu)) throw InputError("mu = " + vec_str(mu) + " is not dominant");
}

}  // namespace

nlohmann::json HumphreysCalibration::to_json() const {
    return {{"orientation", orbits.transposed() ? "transpose" : "identity"},
            {"zero_weight_prediction", orbits.zero_weight_shape},
            {"antidominant_prediction", orbits.antidominant_shape},
            {"anchor_trivial", zero_prediction},
            {"anchor_steinberg", steinberg_prediction},
            {"lower_closure", lower_closure}};
}

nlohmann::json HumphreysReport::to_json(const AffineWeyl& aw) const {
    nlohmann::json j;
    j["input"] = {{"n", n}, {"p", p}, {"mu", mu}};
    auto arr = nlohmann::json::array();
    for (std::size_t i = 0; i < labels.labels.size(); ++i) {
        const auto& b = labels.labels[i];
        auto nf = aw.coxeter_normal_form(b.w);
        arr.push_back({{"lambda", b.lam},
                       {"w_word", nf.word},
                       {"omega", nf.omega_label},
                       {"length", aw.length(b.w)},
                       {"exact", b.exact},
                       {"orbit", label_orbits[i]}});
    }
    j["block_labels"] = arr;
    j["search_box"] = labels.box;
    j["cell_shape"] = cell_shape;
    j["orbit"] = orbit;
    j["orbit_dim"] = orbit_dim;
    auto rc = nlohmann::json::array();
    for (auto& c : rank.all)
        rc.push_back({{"k", c.k}, {"rank_at_most", c.r}, {"generators", c.generators.get_str()}, {"vacuous_on_N", c.vacuous_on_N}});
    j["rank_conditions"] = rc;
    j["calibration"] = calibration.to_json();
    j["warnings"] = warnings;
    return j;
}

HumphreysReport humphreys_raw(const AffineWeyl& aw, Int p, const Vec& mu, const OrbitCalibration& cal) {
    check_input(aw, p, mu);
    HumphreysReport r;
    r.n = aw.datum().n();
    r.p = p;
    r.mu = mu;
    r.labels = block_labels(aw, mu, p);
    if (r.labels.labels.empty()) throw InvariantBreach("no block label for " + vec_str(mu));
    if (r.labels.box_exhausted) r.warnings.push_back("block label search reached the box boundary");
    for (auto& b : r.labels.labels) r.label_orbits.push_back(orbit_of_weight(aw, b.lam, cal));
    for (auto& o : r.label_orbits)
        if (o != r.label_orbits[0]) throw InvariantBreach("block labels of " + vec_str(mu) + " predict different orbits");
    r.orbit = r.label_orbits[0];
    r.cell_shape = cal.transposed() ? transpose(r.orbit) : r.orbit;
    r.orbit_dim = orbit_dim(r.orbit);
    r.rank = rank_conditions(r.orbit);
    return r;
}

HumphreysCalibration calibrate_humphreys(const AffineWeyl& aw, Int p) {
    const auto& d = aw.datum();
    check_input(aw, p, d.zero());
    HumphreysCalibration c;
    c.orbits = calibrate_orbits(aw);
    c.zero_prediction = humphreys_raw(aw, p, d.zero(), c.orbits).orbit;
    c.steinberg_prediction = humphreys_raw(aw, p, vscale(p - 1, d.rho()), c.orbits).orbit;
    if (c.zero_prediction != Partition{d.n()})
        throw CalibrationError("trivial weight predicts " + partition_str(c.zero_prediction));
    if (c.steinberg_prediction != Partition(d.n(), 1))
        throw CalibrationError("Steinberg weight predicts " + partition_str(c.steinberg_prediction));
    return c;
}

HumphreysReport humphreys(const AffineWeyl& aw, Int p, const Vec& mu) {
    check_input(aw, p, mu);
    auto cal = calibrate_humphreys(aw, p);
    auto r = humphreys_raw(aw, p, mu, cal.orbits);
    r.calibration = cal;
    return r;
}

}  // namespace hs
