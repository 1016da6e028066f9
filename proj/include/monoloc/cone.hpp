#pragma once

#include <optional>

#include "monoloc/rational.hpp"

namespace monoloc {

struct Generators {
  std::vector<IntVector> lineality;  // RREF, primitive
  std::vector<IntVector> rays;       // primitive, orthogonal to lineality, sorted
};

/// Double description: generators of {x in Q^dim : a.x >= 0 for all a}.
Generators enumerate_generators(std::vector<IntVector> inequalities, std::size_t dim);

/// Rational polyhedral cone holding both descriptions.
/// Facets and equations are integer normals: facet.x >= 0, equation.x == 0.
class RationalCone {
 public:
  RationalCone() = default;
  static RationalCone from_generators(const std::vector<IntVector>& gens, std::size_t dim);
  static RationalCone from_generators(const std::vector<RatVector>& gens, std::size_t dim);
  static RationalCone from_inequalities(const std::vector<IntVector>& inequalities,
                                        const std::vector<IntVector>& equations, std::size_t dim);
  static RationalCone whole_space(std::size_t dim);
  static RationalCone zero(std::size_t dim);
  static RationalCone orthant(std::size_t dim);

  std::size_t ambient_dim() const { return dim_; }
  /// Generators as supplied; for H-built cones, rays plus both signs of lineality.
  const std::vector<IntVector>& generators() const { return gens_; }
  const std::vector<IntVector>& extreme_rays() const { return rays_; }
  const std::vector<IntVector>& lineality_basis() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_.empty(); }
  std::size_t dimension() const { return dim_ - equations_.size(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  /// Extreme rays followed by +/- lineality vectors.
  std::vector<IntVector> conic_generators() const;

  bool contains(const RatVector& x) const;
  bool contains_cone(const RationalCone& other) const;
  bool same_set(const RationalCone& other) const;
  /// Sum of the extreme rays: a relative-interior point when pointed.
  RatVector interior_point() const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> gens_;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

/// Output of the spec-named conversion: the cone with both descriptions.
RationalCone dd_convert(const std::vector<IntVector>& rays);

enum class ConeStatus { inside, on_excluded_face, outside };

struct MembershipResult {
  ConeStatus status = ConeStatus::outside;
  std::optional<RatVector> combination;   // over cone.generators(), when inside and requested
  std::optional<IntVector> violated;      // normal with violated.x < 0, when outside
  std::optional<IntVector> excluded_face; // strict normal vanishing on x
};

/// strict_normals: facets whose inequality is strict away from the origin.
MembershipResult cone_member(const RationalCone& cone, const RatVector& x, bool want_certificate = false,
                             const std::vector<IntVector>& strict_normals = {});

const char* to_string(ConeStatus s);

}  // namespace monoloc
