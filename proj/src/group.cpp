#include "apkit/group.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "apkit/errors.hpp"

namespace apkit {

namespace {

constexpr std::size_t kMaxCayleyOrder = 256;
constexpr double kMotionUnitDrift = 1e-12;

const std::vector<std::int64_t>& lat(const Element& e) {
  return std::get<std::vector<std::int64_t>>(e);
}

}  // namespace

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::cayley: return "cayley";
    case GroupKind::lattice_zd: return "lattice_Zd";
    case GroupKind::real_grid: return "real_grid";
    case GroupKind::motion_e2: return "motion_E2";
  }
  return "?";
}

GroupKind group_kind_from_string(const std::string& s) {
  if (s == "cayley") return GroupKind::cayley;
  if (s == "lattice_Zd" || s == "lattice") return GroupKind::lattice_zd;
  if (s == "real_grid") return GroupKind::real_grid;
  if (s == "motion_E2" || s == "motion") return GroupKind::motion_e2;
  throw InputError("unknown group kind: " + s);
}

CayleyValidation validate_cayley_table(
    const std::vector<std::vector<std::int64_t>>& table) {
  CayleyValidation out;
  const std::int64_t n = static_cast<std::int64_t>(table.size());
  if (n == 0) {
    out.status = CayleyValidation::Status::input_error;
    out.message = "empty table";
    return out;
  }
  if (static_cast<std::size_t>(n) > kMaxCayleyOrder) {
    out.status = CayleyValidation::Status::input_error;
    out.message = "table order exceeds 256";
    return out;
  }
  for (std::int64_t i = 0; i < n; ++i) {
    if (static_cast<std::int64_t>(table[i].size()) != n) {
      out.status = CayleyValidation::Status::input_error;
      out.message = "table is not square at row " + std::to_string(i);
      return out;
    }
    for (std::int64_t j = 0; j < n; ++j) {
      if (table[i][j] < 0 || table[i][j] >= n) {
        out.status = CayleyValidation::Status::input_error;
        out.message = "entry out of range at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")";
        return out;
      }
    }
  }

  // two-sided identity
  std::int64_t id = -1;
  for (std::int64_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::int64_t a = 0; a < n && ok; ++a) {
      ok = table[e][a] == a && table[a][e] == a;
    }
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) {
    out.status = CayleyValidation::Status::algebraic_failure;
    out.message = "no two-sided identity";
    return out;
  }
  out.identity = id;

  // two-sided inverses
  for (std::int64_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::int64_t b = 0; b < n; ++b) {
      if (table[a][b] == id && table[b][a] == id) {
        found = true;
        break;
      }
    }
    if (!found) {
      out.status = CayleyValidation::Status::algebraic_failure;
      out.message = "element " + std::to_string(a) + " has no two-sided inverse";
      return out;
    }
  }

  // full associativity sweep
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      for (std::int64_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          out.status = CayleyValidation::Status::algebraic_failure;
          out.violating_triple = {a, b, c};
          out.message = "associativity fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")";
          return out;
        }
      }
    }
  }

  for (std::int64_t a = 0; a < n && out.abelian; ++a) {
    for (std::int64_t b = a + 1; b < n; ++b) {
      if (table[a][b] != table[b][a]) {
        out.abelian = false;
        out.noncommuting_pair = {a, b};
        break;
      }
    }
  }
  return out;
}

GroupModel GroupModel::cayley(std::vector<std::vector<std::int64_t>> table,
                              std::string name) {
  auto report = validate_cayley_table(table);
  if (!report.ok()) {
    throw InputError("invalid Cayley table (" + name + "): " + report.message);
  }
  GroupModel m;
  m.kind_ = GroupKind::cayley;
  m.name_ = std::move(name);
  m.dim_ = 1;
  m.abelian_ = report.abelian;
  m.identity_index_ = report.identity;
  m.table_ = std::move(table);
  const std::int64_t n = static_cast<std::int64_t>(m.table_.size());
  m.inverse_.assign(n, 0);
  for (std::int64_t a = 0; a < n; ++a) {
    for (std::int64_t b = 0; b < n; ++b) {
      if (m.table_[a][b] == m.identity_index_) {
        m.inverse_[a] = b;
        break;
      }
    }
  }
  return m;
}

GroupModel GroupModel::lattice(int dim) {
  if (dim < 1) throw InputError("lattice dimension must be positive");
  GroupModel m;
  m.kind_ = GroupKind::lattice_zd;
  m.name_ = "Z^" + std::to_string(dim);
  m.dim_ = dim;
  return m;
}

GroupModel GroupModel::real_grid(int dim, double step) {
  if (dim < 1) throw InputError("grid dimension must be positive");
  if (!(step > 0.0)) throw InputError("grid step must be positive");
  GroupModel m;
  m.kind_ = GroupKind::real_grid;
  m.name_ = "R^" + std::to_string(dim) + " grid";
  m.dim_ = dim;
  m.step_ = step;
  return m;
}

GroupModel GroupModel::motion_e2(double tolerance) {
  GroupModel m;
  m.kind_ = GroupKind::motion_e2;
  m.name_ = "E(2)";
  m.dim_ = 3;
  m.tolerance_ = tolerance;
  m.abelian_ = false;
  return m;
}

Element GroupModel::identity() const {
  switch (kind_) {
    case GroupKind::cayley: return identity_index_;
    case GroupKind::lattice_zd:
    case GroupKind::real_grid:
      return std::vector<std::int64_t>(static_cast<std::size_t>(dim_), 0);
    case GroupKind::motion_e2: return MotionElement{};
  }
  return std::int64_t{0};
}

Element GroupModel::op(const Element& a, const Element& b) const {
  switch (kind_) {
    case GroupKind::cayley:
      return table_[static_cast<std::size_t>(std::get<std::int64_t>(a))]
                   [static_cast<std::size_t>(std::get<std::int64_t>(b))];
    case GroupKind::lattice_zd:
    case GroupKind::real_grid: {
      std::vector<std::int64_t> r(lat(a));
      const auto& vb = lat(b);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += vb[i];
      return r;
    }
    case GroupKind::motion_e2: {
      const auto& ma = std::get<MotionElement>(a);
      const auto& mb = std::get<MotionElement>(b);
      MotionElement r;
      r.z = ma.z + ma.w * mb.z;
      r.w = ma.w * mb.w;
      // |w| = 1 is an invariant of the group law that products erode
      double norm = std::abs(r.w);
      if (std::abs(norm - 1.0) > kMotionUnitDrift) r.w /= norm;
      return r;
    }
  }
  return a;
}

Element GroupModel::inv(const Element& a) const {
  switch (kind_) {
    case GroupKind::cayley:
      return inverse_[static_cast<std::size_t>(std::get<std::int64_t>(a))];
    case GroupKind::lattice_zd:
    case GroupKind::real_grid: {
      std::vector<std::int64_t> r(lat(a));
      for (auto& x : r) x = -x;
      return r;
    }
    case GroupKind::motion_e2: {
      const auto& m = std::get<MotionElement>(a);
      std::complex<double> wbar = std::conj(m.w);
      return MotionElement{-(wbar * m.z), wbar};
    }
  }
  return a;
}

bool GroupModel::equal(const Element& a, const Element& b) const {
  return element_equal(a, b, tolerance_);
}

std::vector<double> GroupModel::coords(const Element& e) const {
  if (kind_ != GroupKind::real_grid && kind_ != GroupKind::lattice_zd) {
    throw ContractViolation("coords() requires a grid-like model");
  }
  const auto& v = lat(e);
  std::vector<double> xs(v.size());
  double s = kind_ == GroupKind::real_grid ? step_ : 1.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    xs[i] = static_cast<double>(v[i]) * s;
  return xs;
}

Element GroupModel::from_coords(const std::vector<double>& xs) const {
  if (kind_ != GroupKind::real_grid && kind_ != GroupKind::lattice_zd) {
    throw ContractViolation("from_coords() requires a grid-like model");
  }
  if (static_cast<int>(xs.size()) != dim_) {
    throw InputError("coordinate dimension mismatch");
  }
  double s = kind_ == GroupKind::real_grid ? step_ : 1.0;
  std::vector<std::int64_t> v(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    v[i] = std::llround(xs[i] / s);
  }
  return v;
}

std::string GroupModel::describe_element(const Element& e) const {
  if (kind_ == GroupKind::real_grid) {
    auto xs = coords(e);
    std::ostringstream os;
    os.precision(17);
    os << "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) os << ", ";
      os << xs[i];
    }
    os << ")";
    return os.str();
  }
  return format_element(e);
}

std::vector<std::vector<std::int64_t>> load_cayley_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Cayley CSV: " + path);
  std::vector<std::vector<std::int64_t>> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::int64_t> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stoll(cell));
      } catch (const std::exception&) {
        throw InputError("non-integer cell in Cayley CSV: " + cell);
      }
    }
    table.push_back(std::move(row));
  }
  return table;
}

std::vector<std::vector<std::int64_t>> cyclic_table(int n) {
  std::vector<std::vector<std::int64_t>> t(
      static_cast<std::size_t>(n),
      std::vector<std::int64_t>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

std::vector<std::vector<std::int64_t>> s3_table() {
  // permutations of {0,1,2}: identity, the three transpositions, the two
  // 3-cycles; composition is (p*q)(x) = p(q(x))
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (01)
      {2, 1, 0},  // (02)
      {0, 2, 1},  // (12)
      {1, 2, 0},  // (012)
      {2, 0, 1},  // (021)
  }};
  auto find = [&](const std::array<int, 3>& p) -> std::int64_t {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<std::int64_t>(i);
    return -1;
  };
  std::vector<std::vector<std::int64_t>> t(6, std::vector<std::int64_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = find(c);
    }
  }
  return t;
}

}  // namespace apkit
