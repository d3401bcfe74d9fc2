#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cluster.hpp"
#include "conic_types.hpp"
#include "nets.hpp"
#include "orders.hpp"

namespace ncplane {

// A curve in the central plane: a line (d = 1) or a smooth conic (d = 2).
struct CentralCurve {
  MPolyQ poly;
  int degree = 1;
};

CentralCurve make_central_curve(const MPolyQ& f);

// One Galois-stable cluster of intersection points with its scheme data.
struct ProfilePoint {
  PointCluster cluster;
  int multiplicity = 1;
  bool on_singular_locus = false;
  bool singular_is_node = false;  // meaningful only when on_singular_locus

  int degree() const { return cluster.degree; }
};

// The scheme-theoretic intersection of a central curve with the discriminant.
struct IntersectionProfile {
  std::vector<ProfilePoint> points;
  bool contained_in_delta = false;
  int delta_degree = 3;
  int curve_degree = 1;
  int ram_index = 2;

  int total_intersection_degree() const {
    int s = 0;
    for (const auto& p : points) s += p.degree() * p.multiplicity;
    return s;
  }
  int geometric_point_count() const {
    int s = 0;
    for (const auto& p : points) s += p.degree();
    return s;
  }
};

// Restriction of delta to the curve: clusters with multiplicities and
// singularity flags; for a contained line the points listed are the residual
// intersections (the nodes of delta on the line).
IntersectionProfile restrict_to_curve(const MPolyQ& delta, const CentralCurve& c, int ram_index);

// The six-type classification of a line-against-cubic profile.
ConicTypeLabel classify_profile(const IntersectionProfile& p);

// Local quaternion exponents at each ramified cluster.
struct LocalModel {
  ProfilePoint point;
  int e1 = 0, e2 = 1;
};
std::vector<LocalModel> local_models(ConicTypeLabel label, const IntersectionProfile& p);

struct DivisorPart {
  PointCluster cluster;
  int multiplicity = 1;
};

// Descriptor of the stacky central curve.
struct StackModel {
  enum class Kind { RootStack, MixedStack, GenericStabilizer };
  Kind kind = Kind::RootStack;
  int index = 2;                      // root index (RootStack, or smooth chart of Mixed)
  std::vector<DivisorPart> divisor;   // RootStack: full divisor; Mixed: smooth-chart part
  std::vector<int> signature;         // weighted projective line signature, when smooth
  std::string etale_cover;            // Mixed: singular chart local model
  std::vector<DivisorPart> singular_points;  // Mixed/Generic: the special points
  int stabilizer_order = 0;           // GenericStabilizer
};

std::string to_string(StackModel::Kind k);

// Stacky descriptor for the six types (label present), or the transverse
// root-stack of the higher-degree workflows (label absent).
StackModel stacky_descriptor(std::optional<ConicTypeLabel> label, const IntersectionProfile& p);

// Per-point order data and the derived table rows for a type.
struct PointRow {
  std::string situation;  // "transverse", "tangent (mult 2)", "node", ...
  QuaternionModel model;
  OrderProps props;
};

struct PropertyRow {
  ConicTypeLabel label;
  bool is_order = true;
  std::vector<PointRow> points;
  // aggregated Table-1 style cells ("yes", "no", or "-" for cells the source
  // table leaves unspecified)
  std::string hereditary, gorenstein, tiled, nodal, residually;
  std::vector<std::string> tiled_note;  // aggregate cells without a stated value
  // Table-2 style stacky cells
  std::string smooth, generically_scheme, root_stack;
  std::string appearance;
};

PropertyRow property_row(ConicTypeLabel label);

// Which types can occur over a discriminant of the given classification.
std::vector<ConicTypeLabel> feasible_types(CubicType ct);

}  // namespace ncplane
