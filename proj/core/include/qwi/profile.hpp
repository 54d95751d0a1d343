#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qwi {

/// One constant-potential slab of the cascade.
struct Region {
  double potential = 0.0;
  double width = 0.0;

  friend bool operator==(const Region&, const Region&) = default;
};

/// Ordered cascade of constant potentials between two semi-infinite leads.
///
/// Orientation: regions are indexed j = 1..N starting next to the right
/// lead (the load, impedance z_0) and ending next to the left lead (z_out).
/// The input impedance Z(x_N) is evaluated at the left edge of region N,
/// which is where a wave incident from the left lead is reflected.
class PotentialProfile {
 public:
  PotentialProfile() = default;

  /// `regions_from_load` is ordered j = 1..N. Throws InvalidProfile on a
  /// non-positive or non-finite width, or a non-finite potential.
  PotentialProfile(double left_lead_potential, std::vector<Region> regions_from_load,
                   double right_lead_potential);

  /// Builds a profile from regions listed in physical order, left to right.
  static PotentialProfile from_left_to_right(double left_lead_potential,
                                             std::vector<Region> regions,
                                             double right_lead_potential);

  double left_lead_potential() const { return left_lead_; }
  double right_lead_potential() const { return right_lead_; }

  /// Regions in j order: regions()[0] is j = 1 (load side).
  std::span<const Region> regions() const { return regions_; }
  const Region& region(std::size_t j) const { return regions_.at(j - 1); }
  std::size_t size() const { return regions_.size(); }
  bool empty() const { return regions_.empty(); }

  /// Regions in physical order, left to right.
  std::vector<Region> left_to_right() const;

  /// The same structure reflected left-right (leads swapped).
  PotentialProfile mirrored() const;

  double total_width() const;
  double min_potential() const;
  double max_potential() const;

  friend bool operator==(const PotentialProfile&, const PotentialProfile&) = default;

 private:
  double left_lead_ = 0.0;
  std::vector<Region> regions_;
  double right_lead_ = 0.0;
};

}  // namespace qwi
