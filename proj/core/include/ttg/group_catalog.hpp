#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttg/finite_group.hpp"

namespace ttg {

enum class GroupKind { Finite, Circle, O2, SO3 };

// Value handle for a catalogue group. Finite handles share ownership of the
// loaded table; two handles denote the same group only if they share it.
struct GroupId {
  GroupKind kind = GroupKind::Circle;
  std::shared_ptr<const FiniteGroupData> finite;

  bool operator==(const GroupId& o) const { return kind == o.kind && finite == o.finite; }
};

GroupId circle_group();
GroupId o2_group();
GroupId so3_group();

// Public loading path: multiplication table with identity 0, order <= 48.
GroupId load_finite_group(const std::vector<std::vector<int>>& table, std::string name = "finite");
GroupId load_finite_group_file(const std::string& path);

std::string group_name(const GroupId& g);

// The constructor order doubles as the canonical listing order:
// C-series, D-series, SO2, O2, Tetra, Octa, Icosa, FullGroup, finite classes.
enum class ClassKind : int { C = 0, D = 1, SO2 = 2, O2 = 3, Tetra = 4, Octa = 5, Icosa = 6, Full = 7, Finite = 8 };

struct SubgroupClass {
  ClassKind kind = ClassKind::Full;
  int n = 0;  // series index (C/D) or finite class index

  auto operator<=>(const SubgroupClass&) const = default;
};

inline SubgroupClass class_C(int n) { return {ClassKind::C, n}; }
inline SubgroupClass class_D(int n) { return {ClassKind::D, n}; }
inline SubgroupClass class_SO2() { return {ClassKind::SO2, 0}; }
inline SubgroupClass class_O2() { return {ClassKind::O2, 0}; }
inline SubgroupClass class_tetra() { return {ClassKind::Tetra, 0}; }
inline SubgroupClass class_octa() { return {ClassKind::Octa, 0}; }
inline SubgroupClass class_icosa() { return {ClassKind::Icosa, 0}; }
inline SubgroupClass class_full() { return {ClassKind::Full, 0}; }
inline SubgroupClass class_finite(int i) { return {ClassKind::Finite, i}; }

bool valid_class(const GroupId& g, SubgroupClass k);
void require_valid_class(const GroupId& g, SubgroupClass k);
std::string class_name(SubgroupClass k);

bool has_series(const GroupId& g, ClassKind series);
int series_start(const GroupId& g, ClassKind series);
// Non-series classes of the group, in canonical order.
std::vector<SubgroupClass> special_classes(const GroupId& g);
// Class whose cotoral cone contains every cyclic class (SO2, or the full
// circle); absent for finite groups.
std::optional<SubgroupClass> circle_like_class(const GroupId& g);
// Limit of the dihedral series in the f-topology (O(2) itself, or the O(2)
// class inside SO(3)); absent otherwise.
std::optional<SubgroupClass> d_series_limit(const GroupId& g);

std::vector<SubgroupClass> classes(const GroupId& g, int bound);

bool is_subconjugate(const GroupId& g, SubgroupClass l, SubgroupClass k);
bool is_cotoral(const GroupId& g, SubgroupClass l, SubgroupClass k);
bool is_in_phi(const GroupId& g, SubgroupClass k);

struct RestrictResult {
  GroupId model;                      // fixed GroupId model of H
  std::vector<SubgroupClass> parts;   // H-conjugacy classes of (K)_G meeting sub(H)
};
RestrictResult restrict_class(const GroupId& g, SubgroupClass h, SubgroupClass k);

// A concrete group model of a subgroup class, with the fusion map from the
// model's classes back to ambient classes (restriction data read in reverse).
struct ClassModel {
  GroupId ambient;
  SubgroupClass k;
  GroupId model;
  SubgroupClass top;                         // class of K inside its own model
  std::vector<SubgroupClass> table_fusion;   // finite models: ambient class per model class

  SubgroupClass fuse(SubgroupClass model_class) const;
};
ClassModel model_of_class(const GroupId& g, SubgroupClass k);

std::vector<int> divisors(int n);

}  // namespace ttg
