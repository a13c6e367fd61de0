#pragma once

#include <optional>
#include <span>

#include "sectorshift/series.hpp"

namespace sectorshift {

/// One country-year snapshot of the two-sector economy: totals plus the
/// agricultural (sector 1) slice, in absolute units (constant currency,
/// persons). Shares are always derived, never stored.
struct EconomyYear {
    int year = 0;
    double gdp = 0.0;              // real GDP, constant currency
    double employment = 0.0;       // persons
    double agri_gdp = 0.0;
    double agri_employment = 0.0;

    double agri_gdp_share() const { return agri_gdp / gdp; }
    double agri_employment_share() const { return agri_employment / employment; }
    double rest_gdp() const { return gdp - agri_gdp; }
    double rest_employment() const { return employment - agri_employment; }

    /// Requires 0 < agri_gdp < gdp and 0 < agri_employment < employment.
    void validate() const;
};

/// GDP per employee overall and by sector, plus their ratio.
struct ProductivityState {
    double overall = 0.0;     // G / E
    double agri = 0.0;        // sector-1 GDP per employee
    double rest = 0.0;        // sector-2 GDP per employee
    double multiplier = 1.0;  // rest / agri
};

/// Outcome of attributing observed GDP growth to the labor-transfer term.
struct TransferResult {
    int year_from = 0;
    int year_to = 0;
    double share_shift = 0.0;          // change of the non-agricultural employment share
    double transferred_workers = 0.0;  // agri_employment(from) - agri_employment(to)
    double multiplier = 1.0;           // midpoint rest/agri productivity ratio over the window
    double predicted_gdp_change = 0.0;
    double observed_gdp_change = 0.0;
    std::optional<double> attribution_fraction;  // absent when growth is nonpositive
    bool non_positive_growth = false;
};

/// Two exponential sector trends sharing a reference year; the productivity
/// gap they imply widens whenever divergence() is positive.
struct GapModel {
    double agri_level = 0.0;  // fitted sector-1 productivity at the reference year
    double rest_level = 0.0;
    double agri_rate = 0.0;
    double rest_rate = 0.0;
    int reference_year = 0;

    double divergence() const { return rest_rate - agri_rate; }
    bool widening() const { return divergence() > 0.0; }
};

struct CounterfactualBound {
    double ratio = 1.0;              // growth multiple explained by the share shift alone
    double fraction = 0.0;           // ratio / observed multiple, capped at 1
    double fraction_uncapped = 0.0;
};

/// Ratio of sector-2 to sector-1 GDP per employee, computable from the two
/// agricultural shares alone: ((1-g1)/(1-e1)) / (g1/e1). Shares must lie
/// strictly inside (0, 1).
double productivity_multiplier(double agri_gdp_share, double agri_employment_share);

ProductivityState productivity_state(const EconomyYear& snapshot);

/// GDP change caused by shifting a share_shift fraction of an employment-E
/// labor force into the higher-productivity sector, holding productivities
/// fixed: (p2 - p1) * E * share_shift.
double transfer_gdp_change(const ProductivityState& state, double employment, double share_shift);

/// Relative GDP growth per share point transferred, everything in percent:
/// (k - 1) * <g1/e1> * share_shift_percent.
double relative_growth_per_share(double multiplier, double mean_share_ratio,
                                 double share_shift_percent);

/// Compare observed GDP growth between two snapshot years with the growth
/// predicted by the transfer term alone, using midpoint sector
/// productivities. Accepts the years in either order; the fraction is
/// direction-invariant.
TransferResult attribution(std::span<const EconomyYear> rows, int year_from, int year_to);

/// Upper bound on the growth multiple attributable to moving the
/// agricultural employment share from e1_start to e1_end with sector-2
/// productivity capped at multiplier times sector 1. Boundary shares 0 and 1
/// are allowed (the full-transfer thought experiment).
CounterfactualBound counterfactual_share_bound(double e1_start, double e1_end, double multiplier,
                                               double observed_multiplier);

/// Combine two sector trend fits (same reference year) into a gap model.
GapModel gap_model(const TrendFit& agri_fit, const TrendFit& rest_fit);

/// p2(t) - p1(t) in closed form: A2*exp(a2*t) * [1 - (A1/A2)*exp(-d*t)],
/// with t in years from the model's reference year.
double productivity_gap(const GapModel& model, double years_from_reference);

}  // namespace sectorshift
