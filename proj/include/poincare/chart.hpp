#pragma once

#include <memory>
#include <string>
#include <vector>

#include "poincare/compact.hpp"
#include "poincare/region.hpp"

namespace poincare {

// Coordinate transform between the plane and solver coordinates.
struct ChartMap {
  enum class Kind { identity, inverted } kind = Kind::identity;
  cplx zeta{0.0, 0.0};  // inversion center: w = 1/(z - zeta)

  cplx to_chart(cplx z) const;
  cplx from_chart(cplx w) const;
  // density conversion factor |dw/dz| expressed through w
  double jacobian_at(cplx w) const;
  std::string describe() const;
};

// Geometry of a domain as seen in solver coordinates. signed_clearance is
// positive inside, negative outside, Lipschitz-1, a lower bound on the true
// distance to the curve boundary on the inside. Punctures are isolated
// boundary points, reported separately.
class ChartView {
 public:
  virtual ~ChartView() = default;
  virtual bool in_region(cplx w) const = 0;
  virtual double signed_clearance(cplx w) const = 0;
  virtual double puncture_dist(cplx w) const = 0;
  virtual const std::vector<cplx>& punctures() const = 0;
  // radius that covers every bounded image feature (curves, arc endpoints,
  // punctures); rays and lines may extend beyond it
  virtual double bounded_extent() const = 0;
};

class IdentityView : public ChartView {
 public:
  explicit IdentityView(RegionSpec region);
  bool in_region(cplx w) const override;
  double signed_clearance(cplx w) const override;
  double puncture_dist(cplx w) const override;
  const std::vector<cplx>& punctures() const override { return punctures_; }
  double bounded_extent() const override { return extent_; }

 private:
  RegionSpec region_;
  std::vector<cplx> punctures_;
  double extent_ = 0.0;
};

// The region viewed through w = 1/(z - zeta). Primitive boundaries map to
// circles, lines, rays, segments and arcs; clearance is assembled from exact
// distances to those images.
class InvertedView : public ChartView {
 public:
  InvertedView(RegionSpec region, cplx zeta);
  bool in_region(cplx w) const override;
  double signed_clearance(cplx w) const override;
  double puncture_dist(cplx w) const override;
  const std::vector<cplx>& punctures() const override { return punctures_; }
  double bounded_extent() const override { return extent_; }

 private:
  RegionSpec region_;
  cplx zeta_;
  std::vector<cplx> punctures_;
  double extent_ = 0.0;
};

// Complement of a compact set viewed through w = 1/z. Requires 0 in the set,
// so the solve window is bounded whenever 0 is interior.
class KView : public ChartView {
 public:
  explicit KView(CompactSet k);
  bool in_region(cplx w) const override;
  double signed_clearance(cplx w) const override;
  double puncture_dist(cplx w) const override;
  const std::vector<cplx>& punctures() const override { return punctures_; }
  double bounded_extent() const override { return extent_; }
  const CompactSet& set() const { return k_; }

 private:
  CompactSet k_;
  std::vector<cplx> punctures_;
  double extent_ = 0.0;
};

// Shrinks a view by delta: clearance drops by delta and punctures become
// round holes of radius delta (so they stop being punctures).
class ErodedView : public ChartView {
 public:
  ErodedView(std::shared_ptr<const ChartView> base, double delta);
  bool in_region(cplx w) const override;
  double signed_clearance(cplx w) const override;
  double puncture_dist(cplx w) const override;
  const std::vector<cplx>& punctures() const override { return none_; }
  double bounded_extent() const override;

 private:
  std::shared_ptr<const ChartView> base_;
  double delta_;
  std::vector<cplx> none_;
};

}  // namespace poincare
