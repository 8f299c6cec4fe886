#include "apkit/checkers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "apkit/errors.hpp"

namespace apkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Greedy farthest-point sampling over items 0..n-1 with a bounded-scan
/// distance oracle. Starts at item 0 (callers order items canonically), adds
/// the farthest-from-centers item until the covering radius reaches the
/// smallest target; ties break toward the smaller index. Snapshots record
/// the assignment at each requested target radius.
struct FpsSnapshot {
  double target = 0.0;
  std::vector<std::size_t> centers;      // item indices, insertion order
  std::vector<std::size_t> assignment;   // per item: center position
  std::vector<double> dist;              // per item: distance to its center
  double radius = 0.0;
  std::size_t farthest = 0;
};

template <class DistFn>
std::vector<FpsSnapshot> farthest_point_sampling(std::size_t n, DistFn dist,
                                                 std::vector<double> targets) {
  std::sort(targets.begin(), targets.end(), std::greater<double>());
  std::vector<FpsSnapshot> out;
  if (n == 0) return out;

  std::vector<double> mind(n, kInf);
  std::vector<std::size_t> assign(n, 0);
  std::vector<std::size_t> centers;

  auto add_center = [&](std::size_t c) {
    centers.push_back(c);
    const std::size_t pos = centers.size() - 1;
    for (std::size_t u = 0; u < n; ++u) {
      if (mind[u] == 0.0) continue;
      double d = u == c ? 0.0 : dist(c, u, mind[u]);
      if (d < mind[u]) {
        mind[u] = d;
        assign[u] = pos;
      }
    }
  };

  add_center(0);
  std::size_t next_target = 0;
  while (next_target < targets.size()) {
    // covering radius and the first candidate realizing it
    std::size_t far = 0;
    double radius = -1.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (mind[u] > radius) {
        radius = mind[u];
        far = u;
      }
    }
    while (next_target < targets.size() && radius <= targets[next_target]) {
      FpsSnapshot snap;
      snap.target = targets[next_target];
      snap.centers = centers;
      snap.assignment = assign;
      snap.dist = mind;
      snap.radius = radius;
      snap.farthest = far;
      out.push_back(std::move(snap));
      ++next_target;
    }
    if (next_target >= targets.size()) break;
    if (centers.size() == n) {
      // every item is a center; radius is exactly 0, all remaining targets met
      for (; next_target < targets.size(); ++next_target) {
        FpsSnapshot snap;
        snap.target = targets[next_target];
        snap.centers = centers;
        snap.assignment = assign;
        snap.dist = mind;
        snap.radius = 0.0;
        snap.farthest = 0;
        out.push_back(std::move(snap));
      }
      break;
    }
    add_center(far);
  }
  return out;
}

/// Exact max pairwise distance within a member list, pruned by the triangle
/// inequality: pairs are visited in descending du+dv order and skipped once
/// that upper bound cannot beat the current maximum.
template <class DistFn>
double pruned_diameter(const std::vector<std::size_t>& members,
                       const std::vector<double>& du, DistFn dist,
                       std::pair<std::size_t, std::size_t>* witness) {
  const std::size_t m = members.size();
  if (m < 2) return 0.0;
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (du[a] != du[b]) return du[a] > du[b];
    return members[a] < members[b];
  });
  double best = 0.0;
  std::pair<std::size_t, std::size_t> bw{members[order[0]], members[order[0]]};
  for (std::size_t i = 0; i < m; ++i) {
    if (du[order[i]] * 2.0 <= best) break;
    for (std::size_t j = i + 1; j < m; ++j) {
      if (du[order[i]] + du[order[j]] <= best) break;
      double d = dist(members[order[i]], members[order[j]]);
      if (d > best) {
        best = d;
        bw = {members[order[i]], members[order[j]]};
      }
    }
  }
  if (witness) *witness = bw;
  return best;
}

std::vector<double> default_displacements(const WindowSpec& w) {
  std::vector<double> out;
  const auto kind = w.model->kind();
  if (kind == GroupKind::real_grid || kind == GroupKind::lattice_zd) {
    double h = kind == GroupKind::real_grid ? w.model->step() : 1.0;
    double radius = 0.0;
    for (const auto& e : w.candidates) {
      const auto& v = std::get<std::vector<std::int64_t>>(e);
      for (auto x : v)
        radius = std::max(radius, std::abs(static_cast<double>(x)) * h);
    }
    double diameter = 2.0 * radius;
    // dense multiples of the step first, then geometric out to the diameter
    for (int j = 1; j <= 64; ++j) {
      double d = j * h;
      if (d > diameter) break;
      out.push_back(d);
    }
    double d = out.empty() ? h : out.back();
    while (d * 1.5 < diameter) {
      d *= 1.5;
      out.push_back(std::floor(d / h) * h);
    }
    out.push_back(diameter);
  } else if (kind == GroupKind::motion_e2) {
    // log-spaced component scale down to 1e-4
    for (double d : {1e-4, 3.16e-4, 1e-3, 3.16e-3, 1e-2, 3.16e-2, 1e-1,
                     3.16e-1, 1.0}) {
      out.push_back(d);
    }
  } else {
    out.push_back(0.0);  // discrete group: the identity neighborhood
    out.push_back(1.0);  // everything else
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::string to_string(DensityMode mode) {
  switch (mode) {
    case DensityMode::finite_f: return "finite_F";
    case DensityMode::compact_k: return "compact_K";
    case DensityMode::weak_two_sided: return "weak_two_sided";
  }
  return "?";
}

DensityMode density_mode_from_string(const std::string& s) {
  if (s == "finite_F" || s == "finite_f") return DensityMode::finite_f;
  if (s == "compact_K" || s == "compact_k") return DensityMode::compact_k;
  if (s == "weak_two_sided" || s == "weak") return DensityMode::weak_two_sided;
  throw InputError("unknown density mode: " + s);
}

bool PeriodSet::contains(const GroupModel& model, const Element& tau) const {
  for (const auto& t : taus) {
    if (model.equal(t, tau)) return true;
  }
  return false;
}

bool UcModulus::admissible(double epsilon) const {
  for (const auto& e : entries) {
    if (e.epsilon == epsilon) return e.delta.has_value();
  }
  return false;
}

Verdict<MaakCover> maak_cover_search(const FunctionTable& f, double epsilon,
                                     Side side, const WindowSpec& w) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  TranslateEngine eng(f, side, w);
  eng.add_candidates();
  const std::size_t n = w.candidates.size();

  auto dist = [&](std::size_t a, std::size_t b, double bound) {
    return eng.distance_above(a, b, bound);
  };
  auto snaps = farthest_point_sampling(n, dist, {epsilon / 2.0});
  const FpsSnapshot& snap = snaps.front();

  MaakCover cover;
  cover.epsilon = epsilon;
  cover.side = side;
  cover.radius = epsilon / 2.0;
  cover.sets.resize(snap.centers.size());
  for (std::size_t u = 0; u < n; ++u) {
    cover.sets[snap.assignment[u]].push_back(w.candidates[u]);
  }
  for (std::size_t c : snap.centers) {
    cover.representatives.push_back(w.candidates[c]);
  }

  // defect recomputed from the emitted sets, not assumed from the radius
  double defect = 0.0;
  std::vector<std::size_t> members;
  std::vector<double> du;
  for (std::size_t j = 0; j < cover.sets.size(); ++j) {
    members.clear();
    du.clear();
    for (std::size_t u = 0; u < n; ++u) {
      if (snap.assignment[u] == j) {
        members.push_back(u);
        du.push_back(snap.dist[u]);
      }
    }
    defect = std::max(
        defect, pruned_diameter(
                    members, du,
                    [&](std::size_t a, std::size_t b) {
                      return eng.distance(a, b);
                    },
                    nullptr));
  }
  cover.verified_defect = defect;

  Verdict<MaakCover> v;
  v.certificate = std::move(cover);
  v.epsilon = epsilon;
  v.defect = defect;
  v.window_fingerprint = w.fingerprint();
  return v;
}

CoverReport verify_cover(const FunctionTable& f, const MaakCover& cover,
                         const WindowSpec& w) {
  CoverReport rep;
  TranslateEngine eng(f, cover.side, w);

  // union coverage over the candidates
  std::map<Element, bool, bool (*)(const Element&, const Element&)> in_union(
      element_less);
  for (const auto& set : cover.sets) {
    for (const auto& e : set) in_union[e] = true;
  }
  for (const auto& c : w.candidates) {
    auto it = in_union.find(c);
    bool hit = it != in_union.end();
    if (!hit && w.model->kind() == GroupKind::motion_e2) {
      for (const auto& [e, _] : in_union) {
        if (w.model->equal(e, c)) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) {
      rep.covered = false;
      rep.uncovered = c;
      rep.pass = false;
      return rep;
    }
  }
  rep.covered = true;

  // max intra-set pairwise translate distance, from scratch
  double defect = 0.0;
  for (std::size_t j = 0; j < cover.sets.size(); ++j) {
    const auto& set = cover.sets[j];
    if (set.size() < 2) continue;
    std::vector<std::size_t> slots;
    slots.reserve(set.size());
    for (const auto& e : set) slots.push_back(eng.add_element(e));
    std::size_t rep_slot =
        j < cover.representatives.size()
            ? eng.add_element(cover.representatives[j])
            : slots.front();
    std::vector<double> du(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
      du[i] = eng.distance(slots[i], rep_slot);
    }
    std::pair<std::size_t, std::size_t> witness;
    double d = pruned_diameter(
        slots, du,
        [&](std::size_t a, std::size_t b) { return eng.distance(a, b); },
        &witness);
    if (d > defect) {
      defect = d;
      rep.witness_pair = {eng.element(witness.first),
                          eng.element(witness.second)};
      rep.witness_set = j;
    }
  }
  rep.defect = defect;
  rep.pass = defect <= cover.epsilon;
  return rep;
}

Verdict<EpsilonNet> translate_net(const FunctionTable& f, double epsilon,
                                  Side side, const WindowSpec& w) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  TranslateEngine eng(f, side, w);
  eng.add_candidates();
  auto dist = [&](std::size_t a, std::size_t b, double bound) {
    return eng.distance_above(a, b, bound);
  };
  auto snaps = farthest_point_sampling(w.candidates.size(), dist, {epsilon});
  const FpsSnapshot& snap = snaps.front();

  EpsilonNet net;
  net.epsilon = epsilon;
  net.side = side;
  for (std::size_t c : snap.centers) net.centers.push_back(w.candidates[c]);
  net.covering_radius = snap.radius;
  net.farthest = w.candidates[snap.farthest];

  Verdict<EpsilonNet> v;
  v.certificate = std::move(net);
  v.epsilon = epsilon;
  v.defect = snap.radius;
  v.window_fingerprint = w.fingerprint();
  return v;
}

double net_covering_radius(const FunctionTable& f, const EpsilonNet& net,
                           const WindowSpec& w) {
  if (net.centers.empty()) throw InputError("net has no centers");
  TranslateEngine eng(f, net.side, w);
  eng.add_candidates();
  std::vector<std::size_t> centers;
  for (const auto& c : net.centers) centers.push_back(eng.add_element(c));
  double radius = 0.0;
  for (std::size_t u = 0; u < w.candidates.size(); ++u) {
    double best = kInf;
    for (auto c : centers) {
      best = std::min(best, c == u ? 0.0 : eng.distance_above(u, c, best));
    }
    radius = std::max(radius, best);
  }
  return radius;
}

MaakCover cover_from_net(const FunctionTable& f, const EpsilonNet& net,
                         const WindowSpec& w) {
  // balls of radius 2 * (net radius target) around the centers; passing an
  // eps/2 net therefore induces an eps cover
  TranslateEngine eng(f, net.side, w);
  eng.add_candidates();
  std::vector<std::size_t> centers;
  for (const auto& c : net.centers) centers.push_back(eng.add_element(c));
  const double ball = 2.0 * net.epsilon;

  MaakCover cover;
  cover.epsilon = ball;
  cover.side = net.side;
  cover.radius = net.epsilon;
  cover.sets.resize(centers.size());
  cover.representatives = net.centers;
  for (std::size_t u = 0; u < w.candidates.size(); ++u) {
    for (std::size_t j = 0; j < centers.size(); ++j) {
      double d = centers[j] == u ? 0.0
                                 : eng.distance_above(u, centers[j], net.epsilon);
      if (d <= net.epsilon) cover.sets[j].push_back(w.candidates[u]);
    }
  }
  return cover;
}

double period_defect(const FunctionTable& f, const Element& tau, Side side,
                     const WindowSpec& w) {
  // defect(tau) is the translate distance between tau and the identity
  TranslateEngine eng(f, side, w);
  auto id = eng.add_element(w.model->identity());
  auto t = eng.add_element(tau);
  return eng.distance(t, id);
}

PeriodSet period_scan(const FunctionTable& f, double epsilon, Side side,
                      const WindowSpec& w) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  TranslateEngine eng(f, side, w);
  eng.add_candidates();
  auto id = eng.add_element(w.model->identity());

  PeriodSet p;
  p.epsilon = epsilon;
  p.side = side;
  p.search_domain_size = w.candidates.size();
  bool saw_identity = false;
  for (std::size_t u = 0; u < w.candidates.size(); ++u) {
    double d = u == id ? 0.0 : eng.distance_above(u, id, epsilon);
    if (d <= epsilon) {
      p.taus.push_back(w.candidates[u]);
      p.defects.push_back(d);
      if (w.model->equal(w.candidates[u], w.model->identity()))
        saw_identity = true;
    }
  }
  if (!saw_identity) {
    // the identity is a period of every function even when the window
    // does not list it among the candidates
    p.taus.push_back(w.model->identity());
    p.defects.push_back(0.0);
  }
  return p;
}

namespace {

struct CandidateIndex {
  const WindowSpec& w;
  std::optional<std::size_t> find(const Element& e) const {
    return w.find_candidate(e);
  }
};

}  // namespace

Verdict<DensityWitness> density_check(const PeriodSet& periods,
                                      const WindowSpec& w,
                                      const DensityParams& params) {
  if (periods.taus.empty()) throw InputError("empty period set");
  const auto& model = *w.model;
  DensityWitness wit;
  wit.mode = params.mode;
  wit.side = periods.side;
  wit.budget = params.budget;

  const std::size_t n = w.candidates.size();

  if (params.mode == DensityMode::compact_k) {
    if (model.kind() != GroupKind::real_grid &&
        model.kind() != GroupKind::lattice_zd) {
      throw ContractViolation("compact_K density is defined on R/Z only");
    }
    if (model.dim() != 1) {
      throw ContractViolation("compact_K density needs a 1-d model");
    }
    double h = model.kind() == GroupKind::real_grid ? model.step() : 1.0;
    std::vector<double> taus;
    for (const auto& t : periods.taus) {
      taus.push_back(
          static_cast<double>(std::get<std::vector<std::int64_t>>(t)[0]) * h);
    }
    std::sort(taus.begin(), taus.end());
    double max_gap = 0.0;
    for (std::size_t i = 1; i < taus.size(); ++i) {
      max_gap = std::max(max_gap, taus[i] - taus[i - 1]);
    }
    double lo = static_cast<double>(
                    std::get<std::vector<std::int64_t>>(w.candidates.front())[0]) *
                h;
    double hi = static_cast<double>(
                    std::get<std::vector<std::int64_t>>(w.candidates.back())[0]) *
                h;
    // candidates are sorted center-out; recover the true extremes
    for (const auto& c : w.candidates) {
      double x =
          static_cast<double>(std::get<std::vector<std::int64_t>>(c)[0]) * h;
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    wit.max_gap = max_gap;
    wit.edge_gap = std::max(0.0, std::max(taus.front() - lo, hi - taus.back()));

    // residual: candidates not reached by [tau, tau + budget] (window edges
    // measured as plain distance, since the true period set extends past the
    // clipped window)
    for (const auto& c : w.candidates) {
      double x =
          static_cast<double>(std::get<std::vector<std::int64_t>>(c)[0]) * h;
      auto it = std::upper_bound(taus.begin(), taus.end(), x + 1e-12);
      double reach;
      if (it == taus.begin()) {
        reach = taus.front() - x;
      } else {
        reach = x - *(it - 1);
      }
      if (reach > params.budget) wit.residual.push_back(c);
    }

    Verdict<DensityWitness> v;
    v.epsilon = params.budget;
    v.defect = std::max(wit.max_gap, wit.edge_gap);
    v.certificate = std::move(wit);
    v.window_fingerprint = w.fingerprint();
    return v;
  }

  // finite witness modes: greedy set cover of the candidates
  const std::size_t budget = params.budget > 0
                                 ? static_cast<std::size_t>(params.budget)
                                 : n;
  std::vector<char> covered(n, 0);
  std::size_t uncovered = n;

  auto cover_list = [&](const Element& g1, const Element* g2) {
    std::vector<std::size_t> hits;
    for (const auto& tau : periods.taus) {
      Element e = periods.side == Side::right
                      ? model.op(tau, g1)  // P * F
                      : model.op(g1, tau); // F * P
      if (g2) e = model.op(e, *g2);
      if (auto idx = w.find_candidate(e)) hits.push_back(*idx);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
  };

  if (params.mode == DensityMode::finite_f) {
    std::vector<std::vector<std::size_t>> sets(n);
    for (std::size_t g = 0; g < n; ++g) {
      sets[g] = cover_list(w.candidates[g], nullptr);
    }
    while (uncovered > 0 && wit.f_left.size() < budget) {
      std::size_t best = n;
      std::size_t best_gain = 0;
      for (std::size_t g = 0; g < n; ++g) {
        std::size_t gain = 0;
        for (auto i : sets[g])
          if (!covered[i]) ++gain;
        if (gain > best_gain) {
          best_gain = gain;
          best = g;
        }
      }
      if (best == n || best_gain == 0) break;
      wit.f_left.push_back(w.candidates[best]);
      for (auto i : sets[best]) {
        if (!covered[i]) {
          covered[i] = 1;
          --uncovered;
        }
      }
    }
  } else {  // weak_two_sided: F1 * P * F2
    // grow the pair pool greedily; each pick is the best (g1, g2) pair
    while (uncovered > 0 &&
           wit.f_left.size() + wit.f_right.size() + 2 <= 2 * budget) {
      std::size_t bg1 = n, bg2 = n, best_gain = 0;
      for (std::size_t g1 = 0; g1 < n; ++g1) {
        for (std::size_t g2 = 0; g2 < n; ++g2) {
          std::size_t gain = 0;
          for (const auto& tau : periods.taus) {
            Element e = model.op(model.op(w.candidates[g1], tau),
                                 w.candidates[g2]);
            if (auto idx = w.find_candidate(e)) {
              if (!covered[*idx]) ++gain;
            }
          }
          if (gain > best_gain) {
            best_gain = gain;
            bg1 = g1;
            bg2 = g2;
          }
        }
      }
      if (bg1 == n || best_gain == 0) break;
      wit.f_left.push_back(w.candidates[bg1]);
      wit.f_right.push_back(w.candidates[bg2]);
      for (const auto& tau : periods.taus) {
        Element e =
            model.op(model.op(w.candidates[bg1], tau), w.candidates[bg2]);
        if (auto idx = w.find_candidate(e)) {
          if (!covered[*idx]) {
            covered[*idx] = 1;
            --uncovered;
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!covered[i]) wit.residual.push_back(w.candidates[i]);
  }

  Verdict<DensityWitness> v;
  v.epsilon = 0.0;  // tolerated residual
  v.defect = static_cast<double>(wit.residual.size());
  v.certificate = std::move(wit);
  v.window_fingerprint = w.fingerprint();
  return v;
}

std::vector<Element> density_residual(const DensityWitness& witness,
                                      const PeriodSet& periods,
                                      const WindowSpec& w) {
  const auto& model = *w.model;
  if (witness.mode == DensityMode::compact_k) {
    DensityParams p{DensityMode::compact_k, witness.budget};
    return density_check(periods, w, p).certificate.residual;
  }
  std::vector<char> covered(w.candidates.size(), 0);
  auto mark = [&](const Element& e) {
    if (auto idx = w.find_candidate(e)) covered[*idx] = 1;
  };
  if (witness.mode == DensityMode::finite_f) {
    for (const auto& g : witness.f_left) {
      for (const auto& tau : periods.taus) {
        mark(periods.side == Side::right ? model.op(tau, g) : model.op(g, tau));
      }
    }
  } else {
    for (std::size_t k = 0; k < witness.f_left.size(); ++k) {
      for (const auto& tau : periods.taus) {
        mark(model.op(model.op(witness.f_left[k], tau), witness.f_right[k]));
      }
    }
  }
  std::vector<Element> residual;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) residual.push_back(w.candidates[i]);
  }
  return residual;
}

namespace {

std::vector<Element> displacement_elements(const GroupModel& model,
                                           double level) {
  std::vector<Element> out;
  switch (model.kind()) {
    case GroupKind::real_grid:
    case GroupKind::lattice_zd: {
      double h = model.kind() == GroupKind::real_grid ? model.step() : 1.0;
      auto steps = static_cast<std::int64_t>(std::llround(level / h));
      if (steps == 0) break;
      for (int s : {1, -1}) {
        std::vector<std::int64_t> v(static_cast<std::size_t>(model.dim()), 0);
        v[0] = s * steps;
        out.push_back(v);
      }
      break;
    }
    case GroupKind::motion_e2: {
      std::complex<double> rot(std::cos(level), std::sin(level));
      out.push_back(MotionElement{{level, 0.0}, {1.0, 0.0}});
      out.push_back(MotionElement{{0.0, level}, {1.0, 0.0}});
      out.push_back(MotionElement{{0.0, 0.0}, rot});
      out.push_back(MotionElement{{level, level}, rot});
      break;
    }
    case GroupKind::cayley: {
      if (level == 0.0) break;  // only the identity is "near" e
      auto n = static_cast<std::int64_t>(model.order());
      for (std::int64_t i = 0; i < n; ++i) {
        if (!model.equal(Element{i}, model.identity())) out.push_back(i);
      }
      break;
    }
  }
  return out;
}

}  // namespace

UcModulus uc_modulus_scan(const FunctionTable& f,
                          const std::vector<double>& epsilons, Side side,
                          const WindowSpec& w, const UcScanParams& params) {
  const auto& model = *w.model;
  UcModulus mod;
  mod.side = side;
  mod.displacement_scale =
      params.displacements.empty() ? default_displacements(w)
                                   : params.displacements;

  struct LevelDefect {
    double level;
    double defect = 0.0;
    Element x;
    Element v;
    std::optional<Element> y;
  };
  std::vector<LevelDefect> levels;

  const double two_pi = 8.0 * std::atan(1.0);
  for (double level : mod.displacement_scale) {
    LevelDefect ld;
    ld.level = level;
    auto vs = displacement_elements(model, level);
    for (const auto& v : vs) {
      // x samples: the test set, plus (motion only) an adaptive real-axis
      // grid matched to the rotational part so far-from-identity witnesses
      // are reachable
      std::vector<Element> xs = w.test_set;
      if (model.kind() == GroupKind::motion_e2) {
        const auto& mv = std::get<MotionElement>(v);
        double one_minus_cos = 1.0 - mv.w.real();
        if (one_minus_cos > 1e-300 && params.adaptive_grid_points > 0) {
          double span = std::min(two_pi / one_minus_cos, 1e12);
          for (int j = 1; j <= params.adaptive_grid_points; ++j) {
            double u = span * j / params.adaptive_grid_points;
            xs.push_back(MotionElement{{u, 0.0}, {1.0, 0.0}});
          }
        }
      }
      if (side == Side::two_sided) {
        for (const auto& x : xs) {
          for (const auto& y : w.test_set) {
            Element a = model.op(model.op(x, v), y);
            Element b = model.op(x, y);
            double d = f.distance(f(a), f(b));
            if (d > ld.defect) {
              ld.defect = d;
              ld.x = x;
              ld.v = v;
              ld.y = y;
            }
          }
        }
      } else {
        for (const auto& x : xs) {
          // Luc pairs x = v y (left displacement), Ruc pairs y = x v
          Element a = side == Side::left ? model.op(v, x) : model.op(x, v);
          double d = f.distance(f(a), f(x));
          if (d > ld.defect) {
            ld.defect = d;
            ld.x = x;
            ld.v = v;
          }
        }
      }
    }
    levels.push_back(std::move(ld));
  }

  // cumulative: defect at delta covers all sampled displacements <= delta
  std::vector<double> cumulative(levels.size(), 0.0);
  double running = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    running = std::max(running, levels[i].defect);
    cumulative[i] = running;
  }

  for (double eps : epsilons) {
    UcModulus::Entry entry;
    entry.epsilon = eps;
    for (std::size_t i = levels.size(); i-- > 0;) {
      if (cumulative[i] <= eps) {
        entry.delta = levels[i].level;
        entry.defect_at_delta = cumulative[i];
        break;
      }
    }
    if (!entry.delta && !levels.empty()) {
      // even the smallest sampled displacement fails: keep the witness
      const auto& ld = levels.front();
      UcFailureWitness fw;
      fw.epsilon = eps;
      fw.delta = ld.level;
      fw.x = ld.x;
      fw.displacement = ld.v;
      fw.y = ld.y;
      fw.distance = ld.defect;
      mod.failures.push_back(std::move(fw));
    }
    mod.entries.push_back(std::move(entry));
  }
  return mod;
}

SubsequenceExtraction cauchy_subsequence_extract(
    const FunctionTable& f, const std::vector<Element>& sequence,
    const std::vector<double>& schedule, Side side, const WindowSpec& w) {
  if (schedule.empty()) throw InputError("empty epsilon schedule");
  for (std::size_t i = 1; i < schedule.size(); ++i) {
    if (!(schedule[i] < schedule[i - 1])) {
      throw InputError("epsilon schedule must be strictly decreasing");
    }
  }
  SubsequenceExtraction out;
  out.schedule = schedule;

  TranslateEngine eng(f, side, w);
  std::vector<std::size_t> slot(sequence.size());
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    slot[i] = eng.add_element(sequence[i]);
  }
  std::vector<std::size_t> survivors(sequence.size());
  std::iota(survivors.begin(), survivors.end(), std::size_t{0});

  for (std::size_t stage = 0; stage < schedule.size(); ++stage) {
    const double eps = schedule[stage];
    if (survivors.size() < 2) {
      out.ok = false;
      out.failed_stage = stage;
      out.indices = survivors;
      return out;
    }
    // eps/2-net cells over the surviving translates
    auto dist = [&](std::size_t a, std::size_t b, double bound) {
      std::size_t sa = slot[survivors[a]], sb = slot[survivors[b]];
      return sa == sb ? 0.0 : eng.distance_above(sa, sb, bound);
    };
    auto snaps = farthest_point_sampling(survivors.size(), dist, {eps / 2.0});
    const FpsSnapshot& snap = snaps.front();

    // keep the largest cell (ties toward the earlier center)
    std::vector<std::size_t> cell_size(snap.centers.size(), 0);
    for (auto a : snap.assignment) ++cell_size[a];
    std::size_t best = 0;
    for (std::size_t c = 1; c < cell_size.size(); ++c) {
      if (cell_size[c] > cell_size[best]) best = c;
    }
    std::vector<std::size_t> kept;
    std::vector<double> du;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      if (snap.assignment[i] == best) {
        kept.push_back(survivors[i]);
        du.push_back(snap.dist[i]);
      }
    }
    // verified pairwise bound inside the kept cell
    std::vector<std::size_t> local(kept.size());
    std::iota(local.begin(), local.end(), std::size_t{0});
    double bound = pruned_diameter(
        local, du,
        [&](std::size_t a, std::size_t b) {
          std::size_t sa = slot[kept[a]], sb = slot[kept[b]];
          return sa == sb ? 0.0 : eng.distance(sa, sb);
        },
        nullptr);
    out.stage_bounds.push_back(bound);
    survivors = std::move(kept);
  }
  if (survivors.size() < 2) {
    out.ok = false;
    out.failed_stage = schedule.size();
    out.indices = survivors;
    return out;
  }
  out.ok = true;
  out.indices = std::move(survivors);
  return out;
}

Verdict<RangeNet> range_net(const FunctionTable& f, double epsilon,
                            const WindowSpec& w) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  std::vector<CodomainPoint> values;
  values.reserve(w.candidates.size());
  for (const auto& c : w.candidates) values.push_back(f(c));

  auto dist = [&](std::size_t a, std::size_t b, double) {
    return f.distance(values[a], values[b]);
  };
  auto snaps = farthest_point_sampling(values.size(), dist, {epsilon});
  const FpsSnapshot& snap = snaps.front();

  RangeNet net;
  net.epsilon = epsilon;
  for (std::size_t c : snap.centers) net.centers.push_back(values[c]);
  net.covering_radius = snap.radius;

  Verdict<RangeNet> v;
  v.certificate = std::move(net);
  v.epsilon = epsilon;
  v.defect = snap.radius;
  v.window_fingerprint = w.fingerprint();
  return v;
}

}  // namespace apkit
