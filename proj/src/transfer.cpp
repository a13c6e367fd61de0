#include "sectorshift/transfer.hpp"

#include <algorithm>
#include <cmath>

namespace sectorshift {

void EconomyYear::validate() const {
    const bool ok = gdp > 0.0 && employment > 0.0 && agri_gdp > 0.0 && agri_employment > 0.0 &&
                    agri_gdp < gdp && agri_employment < employment &&
                    std::isfinite(gdp) && std::isfinite(employment) && std::isfinite(agri_gdp) &&
                    std::isfinite(agri_employment);
    if (!ok)
        throw Error(errc::invariant_violation,
                    "sector slice must lie strictly inside the totals at year " + std::to_string(year),
                    year);
}

double productivity_multiplier(double agri_gdp_share, double agri_employment_share) {
    if (agri_gdp_share <= 0.0 || agri_gdp_share >= 1.0 || agri_employment_share <= 0.0 ||
        agri_employment_share >= 1.0)
        throw Error(errc::degenerate_share, "shares must lie strictly inside (0, 1)");
    return ((1.0 - agri_gdp_share) / (1.0 - agri_employment_share)) /
           (agri_gdp_share / agri_employment_share);
}

ProductivityState productivity_state(const EconomyYear& snapshot) {
    snapshot.validate();
    ProductivityState st;
    st.overall = snapshot.gdp / snapshot.employment;
    st.agri = snapshot.agri_gdp / snapshot.agri_employment;
    st.rest = snapshot.rest_gdp() / snapshot.rest_employment();
    st.multiplier = st.rest / st.agri;
    return st;
}

double transfer_gdp_change(const ProductivityState& state, double employment, double share_shift) {
    return (state.rest - state.agri) * employment * share_shift;
}

double relative_growth_per_share(double multiplier, double mean_share_ratio,
                                 double share_shift_percent) {
    if (multiplier <= 0.0) throw Error(errc::degenerate_share, "multiplier must be positive");
    if (mean_share_ratio <= 0.0)
        throw Error(errc::degenerate_share, "mean share ratio must be positive");
    return (multiplier - 1.0) * mean_share_ratio * share_shift_percent;
}

TransferResult attribution(std::span<const EconomyYear> rows, int year_from, int year_to) {
    if (year_from == year_to)
        throw Error(errc::usage_error, "attribution needs two distinct years");
    const EconomyYear* a = nullptr;
    const EconomyYear* b = nullptr;
    for (const auto& r : rows) {
        if (r.year == year_from) a = &r;
        if (r.year == year_to) b = &r;
    }
    if (!a) throw Error(errc::missing_year, "no snapshot for year " + std::to_string(year_from), year_from);
    if (!b) throw Error(errc::missing_year, "no snapshot for year " + std::to_string(year_to), year_to);

    const ProductivityState sa = productivity_state(*a);
    const ProductivityState sb = productivity_state(*b);
    const double mid_agri = (sa.agri + sb.agri) / 2.0;
    const double mid_rest = (sa.rest + sb.rest) / 2.0;

    TransferResult res;
    res.year_from = year_from;
    res.year_to = year_to;
    res.transferred_workers = a->agri_employment - b->agri_employment;
    res.share_shift = a->agri_employment_share() - b->agri_employment_share();
    res.multiplier = mid_rest / mid_agri;
    res.predicted_gdp_change = res.transferred_workers * (mid_rest - mid_agri);
    res.observed_gdp_change = b->gdp - a->gdp;
    // Growth sign judged in ascending-year orientation so that swapping the
    // endpoints flips both changes and leaves the fraction unchanged.
    const double ascending_growth = year_from < year_to ? res.observed_gdp_change : -res.observed_gdp_change;
    if (ascending_growth <= 0.0) {
        res.non_positive_growth = true;
    } else {
        res.attribution_fraction = res.predicted_gdp_change / res.observed_gdp_change;
    }
    return res;
}

CounterfactualBound counterfactual_share_bound(double e1_start, double e1_end, double multiplier,
                                               double observed_multiplier) {
    if (e1_start < 0.0 || e1_start > 1.0 || e1_end < 0.0 || e1_end > 1.0)
        throw Error(errc::degenerate_share, "shares must lie in [0, 1]");
    if (multiplier < 1.0) throw Error(errc::usage_error, "multiplier ceiling must be >= 1");
    if (observed_multiplier <= 1.0)
        throw Error(errc::usage_error, "observed growth multiple must exceed 1");
    CounterfactualBound out;
    out.ratio = (e1_end + multiplier * (1.0 - e1_end)) / (e1_start + multiplier * (1.0 - e1_start));
    out.fraction_uncapped = out.ratio / observed_multiplier;
    out.fraction = std::min(1.0, out.fraction_uncapped);
    return out;
}

GapModel gap_model(const TrendFit& agri_fit, const TrendFit& rest_fit) {
    if (agri_fit.reference_year != rest_fit.reference_year)
        throw Error(errc::usage_error, "sector fits must share the reference year");
    GapModel m;
    m.agri_level = agri_fit.level;
    m.rest_level = rest_fit.level;
    m.agri_rate = agri_fit.rate;
    m.rest_rate = rest_fit.rate;
    m.reference_year = agri_fit.reference_year;
    return m;
}

double productivity_gap(const GapModel& model, double years_from_reference) {
    const double rest = model.rest_level * std::exp(model.rest_rate * years_from_reference);
    const double shrink =
        (model.agri_level / model.rest_level) * std::exp(-model.divergence() * years_from_reference);
    return rest * (1.0 - shrink);
}

}  // namespace sectorshift
