#include "pbun/toroidal.hpp"

#include <cstdlib>
#include <map>
#include <numeric>

#include "pbun/eigenform.hpp"
#include "pbun/error.hpp"

namespace pbun::toroidal {

ProjectiveType pushforward_line(int m) {
    // p_* O(m) (k) = p_* O(m + k) since p^* O(1) = O(1); its sections are
    // the F_q-points of an F_{q^3}-space of dimension max(0, m + k + 1).
    const auto [k_min, k_max] = bundles::profile_window(std::abs(m));
    bundles::H0Profile profile;
    for (int k = k_min; k <= k_max; ++k) profile[k] = kExtensionDegree * std::max(0, m + k + 1);
    return bundles::canonical_projective(bundles::splitting_from_h0_profile(profile, kExtensionDegree));
}

int pullback_degree(int point_degree) {
    if (point_degree < 1) throw Error("closed points have positive degree");
    const int split = std::gcd(point_degree, kExtensionDegree);
    return split * (point_degree / split);
}

std::size_t picard_coset_count() {
    // Both Picard groups are Z via degree; the image of p^* is generated by
    // the pullback of a degree-one point.
    return static_cast<std::size_t>(pullback_degree(1));
}

std::vector<int> coset_representatives() {
    std::vector<int> reps(picard_coset_count());
    std::iota(reps.begin(), reps.end(), 0);
    return reps;
}

ToroidalReport toroidal_sum(const FormTable& f) {
    ToroidalReport report;
    report.coset_count = picard_coset_count();
    report.representatives = coset_representatives();
    report.sum = 0;
    for (int m : report.representatives) {
        const auto image = pushforward_line(m);
        report.images.push_back(image);
        report.sum += f.at(image);
    }
    return report;
}

IntersectionVerdict toroidal_eigen_intersection(const EigenPair& pair, std::int64_t q0, int bound) {
    IntersectionVerdict verdict;
    const auto table = eigen::solve_eigenform(pair, q0, bound, Rational(1));
    verdict.eigenform_sum = toroidal_sum(table).sum;

    const auto vertices = bundles::enumerate_pbun(3, bound);
    std::map<ProjectiveType, std::size_t> index;
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = i;
    auto rows = eigen::relation_rows(pair, q0, bound);
    qlinalg::Row functional(vertices.size(), Rational(0));
    for (int m : coset_representatives()) functional[index.at(pushforward_line(m))] += 1;
    rows.push_back(std::move(functional));
    verdict.augmented_nullity = qlinalg::nullity(std::move(rows), vertices.size());

    verdict.trivial_intersection = sgn(verdict.eigenform_sum) != 0 && verdict.augmented_nullity == 0;
    return verdict;
}

nlohmann::ordered_json to_json(const ToroidalReport& report) {
    nlohmann::ordered_json j;
    j["coset_count"] = report.coset_count;
    j["representatives"] = report.representatives;
    auto images = nlohmann::ordered_json::array();
    for (const auto& p : report.images) images.push_back(p.gaps());
    j["images"] = std::move(images);
    j["sum"] = to_string(report.sum);
    return j;
}

nlohmann::ordered_json to_json(const IntersectionVerdict& verdict) {
    nlohmann::ordered_json j;
    j["eigenform_sum"] = to_string(verdict.eigenform_sum);
    j["augmented_nullity"] = verdict.augmented_nullity;
    j["verdict"] = verdict.trivial_intersection ? "trivial intersection" : "nontrivial intersection";
    return j;
}

} // namespace pbun::toroidal
