#include "apkit/window.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "apkit/errors.hpp"

namespace apkit {

namespace {

void sort_dedupe(std::vector<Element>& v, const GroupModel& model) {
  std::sort(v.begin(), v.end(), element_less);
  v.erase(std::unique(v.begin(), v.end(),
                      [&](const Element& a, const Element& b) {
                        return model.equal(a, b);
                      }),
          v.end());
}

std::vector<Element> grid_box(const GroupModel& model, std::int64_t half) {
  // [-half, half]^d in grid coordinates
  const int d = model.dim();
  std::vector<Element> out;
  std::vector<std::int64_t> idx(static_cast<std::size_t>(d), -half);
  while (true) {
    out.push_back(idx);
    int k = d - 1;
    while (k >= 0) {
      if (++idx[static_cast<std::size_t>(k)] <= half) break;
      idx[static_cast<std::size_t>(k)] = -half;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

void hash_bits(std::uint64_t& h, double x) {
  if (x == 0.0) x = 0.0;
  std::uint64_t b;
  std::memcpy(&b, &x, sizeof(b));
  h = fnv1a(&b, sizeof(b), h);
}

}  // namespace

std::uint64_t WindowSpec::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  auto kind = to_string(model->kind());
  h = fnv1a(kind.data(), kind.size(), h);
  hash_bits(h, model->step());
  hash_bits(h, tolerance);
  std::uint64_t nc = candidates.size(), nt = test_set.size();
  h = fnv1a(&nc, sizeof(nc), h);
  h = fnv1a(&nt, sizeof(nt), h);
  for (const auto& e : candidates) {
    auto eh = element_hash(e);
    h = fnv1a(&eh, sizeof(eh), h);
  }
  for (const auto& e : test_set) {
    auto eh = element_hash(e);
    h = fnv1a(&eh, sizeof(eh), h);
  }
  return h;
}

std::optional<std::size_t> WindowSpec::find_candidate(const Element& e) const {
  // candidates are sorted by element_less; exact kinds admit binary search,
  // motion needs the tolerance-aware linear scan
  if (model->kind() != GroupKind::motion_e2) {
    auto it = std::lower_bound(candidates.begin(), candidates.end(), e,
                               element_less);
    if (it != candidates.end() && model->equal(*it, e)) {
      return static_cast<std::size_t>(it - candidates.begin());
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (model->equal(candidates[i], e)) return i;
  }
  return std::nullopt;
}

WindowSpec build_window(GroupModelPtr model, const WindowParams& params) {
  if (!model) throw InputError("null model");
  WindowSpec w;
  w.model = model;
  w.params = params;
  w.tolerance = model->tolerance();

  switch (model->kind()) {
    case GroupKind::cayley: {
      const auto n = static_cast<std::int64_t>(model->order());
      for (std::int64_t i = 0; i < n; ++i) w.candidates.push_back(i);
      w.test_set = w.candidates;
      break;
    }
    case GroupKind::lattice_zd: {
      if (params.box <= 0) throw InputError("lattice window needs box > 0");
      w.candidates = grid_box(*model, params.box);
      std::int64_t tb = params.test_box > 0 ? params.test_box : params.box;
      w.test_set = grid_box(*model, tb);
      break;
    }
    case GroupKind::real_grid: {
      if (!(params.radius > 0.0))
        throw InputError("real_grid window needs radius > 0");
      auto half = static_cast<std::int64_t>(
          std::floor(params.radius / model->step() + 1e-9));
      if (half <= 0) throw InputError("window radius below one grid step");
      w.candidates = grid_box(*model, half);
      double tr = params.test_radius > 0.0 ? params.test_radius : params.radius;
      auto thalf =
          static_cast<std::int64_t>(std::floor(tr / model->step() + 1e-9));
      w.test_set = grid_box(*model, thalf);
      break;
    }
    case GroupKind::motion_e2: {
      if (params.x_count <= 0 || params.y_count <= 0 || params.theta_count <= 0)
        throw InputError("motion window needs positive x/y/theta counts");
      std::vector<double> xs, ys;
      auto fill = [](std::vector<double>& v, int count, double mx) {
        if (count == 1) {
          v.push_back(0.0);
          return;
        }
        for (int i = 0; i < count; ++i) {
          v.push_back(-mx + 2.0 * mx * i / (count - 1));
        }
      };
      fill(xs, params.x_count, params.x_max);
      fill(ys, params.y_count, params.y_max);
      const double two_pi = 8.0 * std::atan(1.0);
      for (double x : xs) {
        for (double y : ys) {
          for (int k = 0; k < params.theta_count; ++k) {
            double th = two_pi * k / params.theta_count;
            w.candidates.push_back(MotionElement{
                std::complex<double>(x, y),
                std::complex<double>(std::cos(th), std::sin(th))});
          }
        }
      }
      w.test_set = w.candidates;
      break;
    }
  }

  sort_dedupe(w.candidates, *model);
  sort_dedupe(w.test_set, *model);
  if (w.candidates.empty() || w.test_set.empty()) {
    throw InputError("empty window");
  }
  return w;
}

WindowSpec window_from_elements(GroupModelPtr model,
                                std::vector<Element> candidates,
                                std::vector<Element> test_set) {
  if (!model) throw InputError("null model");
  WindowSpec w;
  w.model = model;
  w.tolerance = model->tolerance();
  w.candidates = std::move(candidates);
  w.test_set = test_set.empty() ? w.candidates : std::move(test_set);
  sort_dedupe(w.candidates, *model);
  sort_dedupe(w.test_set, *model);
  if (w.candidates.empty() || w.test_set.empty()) {
    throw InputError("empty window");
  }
  return w;
}

}  // namespace apkit
