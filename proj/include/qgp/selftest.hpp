#ifndef QGP_SELFTEST_HPP
#define QGP_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace qgp::selftest {

struct CriterionResult {
    std::string name;
    bool pass;
    std::string detail;
};

// The acceptance battery: every check is property-based with exact expected
// values at desk scale and pinned instance counts. All individual runs are
// deterministic in the seed.

CriterionResult oracle_equivalence(std::uint64_t seed);
CriterionResult latching_theorem(std::uint64_t seed);
CriterionResult trivial_fibration_coincidence(std::uint64_t seed);
CriterionResult replacement_certification(std::uint64_t seed);
CriterionResult lifting_corollary(std::uint64_t seed);
CriterionResult triangulation_checks(std::uint64_t seed);
CriterionResult linear_algebra_ground_truth(std::uint64_t seed);
CriterionResult degree_independence(std::uint64_t seed);
CriterionResult one_gorenstein_witness(std::uint64_t seed);

std::vector<CriterionResult> run_all(std::uint64_t seed);

} // namespace qgp::selftest

#endif
