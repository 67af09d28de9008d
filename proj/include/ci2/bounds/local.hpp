#pragma once

#include <gmpxx.h>

#include <optional>

namespace ci2::bounds {

struct LocalFlags {
    bool nu_gt_n = false;
    bool mu_gt_n = false;
    bool nu_le_3n_2 = false;
    bool nu_R_gt_4n_3 = false;
    bool nu_Z_gt_14n_9 = false;
    bool nu_Z_gt_3n_2 = false;
};

struct LocalBounds {
    mpq_class nu, mu, n;
    mpq_class theorem34_lower;  // (2 mu - nu) / 3
    mpq_class nu_R_lower;       // 2 (nu + mu) / 3
    mpq_class nu_R, mu_R;       // second stage actually used
    mpq_class nu_Z_lower;       // 2 (nu_R + mu_R) / 3
    bool second_stage_induced = true;
    LocalFlags flags;
};

/// Without an explicit second stage, nu_R = nu_R_lower and mu_R = mu.
LocalBounds local_bounds(const mpq_class& nu, const mpq_class& mu, const mpq_class& n,
                         std::optional<mpq_class> nu_R = std::nullopt, std::optional<mpq_class> mu_R = std::nullopt);

}  // namespace ci2::bounds
