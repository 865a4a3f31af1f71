#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace ransim {

using Point2 = std::array<double, 2>;

struct Standardized {
    std::vector<Point2> points;
    Point2 means;
    Point2 stds; // population convention (divide by n)
};

/// Z-score standardization of 2-d feature vectors. Requires >= 2 points and
/// nonzero variance in each feature; the error names the offending feature.
Standardized zscore_standardize(const std::vector<Point2>& points);

/// A fitted k-means model. Centroids live in standardized feature space;
/// means/stds recover raw units.
struct ClusteringModel {
    int k = 0;
    Point2 feature_means{};
    Point2 feature_stds{};
    std::vector<Point2> centroids;
    std::uint64_t seed = 0;

    Point2 centroid_raw(int cluster) const;
    std::string to_json() const;
    static ClusteringModel from_json(const std::string& text);
};

struct KMeansResult {
    ClusteringModel model;
    std::vector<int> assignment; // one cluster index per input point
    double wcss = 0.0;           // within-cluster sum of squares, standardized space
    int iterations = 0;
};

/// Lloyd's algorithm from k-means++ seeding on internally standardized
/// points. Deterministic for a fixed seed; empty clusters are reseeded to
/// the point farthest from its current centroid. Converged when the
/// assignment vector repeats, or after max_iters.
KMeansResult kmeans_fit(const std::vector<Point2>& points, int k, std::uint64_t seed,
                        int max_iters = 300);

/// WCSS for k = 1..k_max, each the best of `restarts` seeded runs plus a
/// warm start from the previous k's best centroids (which makes the curve
/// non-increasing by construction).
std::vector<std::pair<int, double>> wcss_curve(const std::vector<Point2>& points, int k_max,
                                               std::uint64_t seed, int restarts = 5);

/// Calinski-Harabasz index (SSB/(k-1)) / (SSW/(n-k)). Requires >= 2
/// non-empty clusters and n > k. Returns +infinity when SSW == 0.
double calinski_harabasz(const std::vector<Point2>& points, const std::vector<int>& assignment);

} // namespace ransim
