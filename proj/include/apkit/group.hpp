#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apkit/element.hpp"

namespace apkit {

enum class GroupKind { cayley, lattice_zd, real_grid, motion_e2 };

std::string to_string(GroupKind kind);
GroupKind group_kind_from_string(const std::string& s);

/// Outcome of validating a would-be Cayley table.
struct CayleyValidation {
  enum class Status { valid, input_error, algebraic_failure };
  Status status = Status::valid;
  std::string message;
  // first associativity violation (a*b)*c != a*(b*c), if any
  std::optional<std::array<std::int64_t, 3>> violating_triple;
  std::int64_t identity = -1;
  bool abelian = true;
  // witness pair with op(a,b) != op(b,a) when non-abelian
  std::optional<std::array<std::int64_t, 2>> noncommuting_pair;

  bool ok() const { return status == Status::valid; }
};

/// Closure / identity / inverses / full O(n^3) associativity check.
/// Malformed input (non-square, out-of-range entries, n > 256) reports
/// input_error, distinct from algebraic_failure.
CayleyValidation validate_cayley_table(
    const std::vector<std::vector<std::int64_t>>& table);

/// A computable group together with its element encoding. Immutable and
/// freely shareable; all operations are pure.
class GroupModel {
 public:
  static GroupModel cayley(std::vector<std::vector<std::int64_t>> table,
                           std::string name = "cayley");
  static GroupModel lattice(int dim);
  /// real grid h*Z^d; elements are integer multiples of `step`
  static GroupModel real_grid(int dim, double step);
  static GroupModel motion_e2(double tolerance = 1e-9);

  GroupKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  int dim() const { return dim_; }
  double step() const { return step_; }
  std::size_t order() const { return table_.size(); }  // cayley only
  const std::vector<std::vector<std::int64_t>>& table() const {
    return table_;
  }

  Element identity() const;
  Element op(const Element& a, const Element& b) const;
  Element inv(const Element& a) const;

  /// element equality at the model's tolerance (exact for the exact kinds)
  bool equal(const Element& a, const Element& b) const;
  double tolerance() const { return tolerance_; }

  bool abelian() const { return abelian_; }

  /// real-coordinate view of a real_grid element (index * step per axis)
  std::vector<double> coords(const Element& e) const;
  /// snap real coordinates onto the grid
  Element from_coords(const std::vector<double>& xs) const;

  std::string describe_element(const Element& e) const;

 private:
  GroupModel() = default;

  GroupKind kind_ = GroupKind::lattice_zd;
  std::string name_;
  int dim_ = 1;
  double step_ = 1.0;
  double tolerance_ = 0.0;
  bool abelian_ = true;
  std::vector<std::vector<std::int64_t>> table_;  // cayley
  std::vector<std::int64_t> inverse_;             // cayley
  std::int64_t identity_index_ = 0;               // cayley
};

using GroupModelPtr = std::shared_ptr<const GroupModel>;

/// n rows of n comma-separated indices
std::vector<std::vector<std::int64_t>> load_cayley_csv(const std::string& path);

/// Z_n addition table.
std::vector<std::vector<std::int64_t>> cyclic_table(int n);
/// S_3 as permutations of {0,1,2}; element 0 is the identity, 1..3 the
/// transpositions, 4..5 the 3-cycles.
std::vector<std::vector<std::int64_t>> s3_table();

}  // namespace apkit
