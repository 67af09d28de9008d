#include "ci2/bounds/local.hpp"

#include "ci2/error.hpp"

namespace ci2::bounds {

LocalBounds local_bounds(const mpq_class& nu, const mpq_class& mu, const mpq_class& n, std::optional<mpq_class> nu_R,
                         std::optional<mpq_class> mu_R) {
    if (n <= 0) throw InputError("local_bounds: n must be positive");
    if (nu_R.has_value() != mu_R.has_value()) throw InputError("local_bounds: give both nu_R and mu_R or neither");
    LocalBounds b;
    b.nu = nu;
    b.mu = mu;
    b.n = n;
    // mpq arithmetic requires canonical operands
    b.nu.canonicalize();
    b.mu.canonicalize();
    b.n.canonicalize();
    if (nu_R) nu_R->canonicalize();
    if (mu_R) mu_R->canonicalize();
    b.theorem34_lower = (2 * b.mu - b.nu) / 3;
    b.nu_R_lower = 2 * (b.nu + b.mu) / 3;
    b.second_stage_induced = !nu_R;
    b.nu_R = nu_R ? *nu_R : b.nu_R_lower;
    b.mu_R = mu_R ? *mu_R : b.mu;
    b.nu_Z_lower = 2 * (b.nu_R + b.mu_R) / 3;
    b.theorem34_lower.canonicalize();
    b.nu_R_lower.canonicalize();
    b.nu_Z_lower.canonicalize();

    b.flags.nu_gt_n = b.nu > b.n;
    b.flags.mu_gt_n = b.mu > b.n;
    b.flags.nu_le_3n_2 = 2 * b.nu <= 3 * b.n;
    b.flags.nu_R_gt_4n_3 = 3 * b.nu_R_lower > 4 * b.n;
    b.flags.nu_Z_gt_14n_9 = 9 * b.nu_Z_lower > 14 * b.n;
    b.flags.nu_Z_gt_3n_2 = 2 * b.nu_Z_lower > 3 * b.n;
    return b;
}

}  // namespace ci2::bounds
