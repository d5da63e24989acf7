#pragma once

#include <Eigen/Core>
#include <vector>

namespace jetgerm {

using Point2c = Eigen::Vector2cd;

/// Halton radical-inverse in the given base; deterministic low-discrepancy
/// driver for all sampled sup norms.
double halton(unsigned long long index, unsigned base);

/// Quasi-uniform points on the sphere |z1|^2 + |z2|^2 = r^2 in C^2. Under
/// the uniform measure on that 3-sphere, |z1|^2 is uniform on [0,1] and the
/// two phases are independent, so three Halton dimensions suffice.
/// start_index shifts the sequence for independent batches.
std::vector<Point2c> sample_sphere(std::size_t count, double r, unsigned long long start_index = 1);

/// Quasi-uniform points in the closed ball of radius r (volume measure:
/// radius pulled back through u^(1/4) on a fourth Halton dimension).
std::vector<Point2c> sample_ball(std::size_t count, double r, unsigned long long start_index = 1);

} // namespace jetgerm
