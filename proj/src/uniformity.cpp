#include "apkit/uniformity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "apkit/errors.hpp"

namespace apkit {

namespace {

CodomainPoint eval_or_throw(const FunctionTable& f, const Element& x) {
  try {
    return f(x);
  } catch (const TotalityError&) {
    throw;
  } catch (const std::exception& e) {
    throw TotalityError("evaluator not total at " + format_element(x) + ": " +
                        e.what());
  }
}

}  // namespace

std::string to_string(Side side) {
  switch (side) {
    case Side::left: return "left";
    case Side::right: return "right";
    case Side::two_sided: return "two_sided";
  }
  return "?";
}

Side side_from_string(const std::string& s) {
  if (s == "left" || s == "L" || s == "l") return Side::left;
  if (s == "right" || s == "R" || s == "r") return Side::right;
  if (s == "two_sided" || s == "two" || s == "2" || s == "LR")
    return Side::two_sided;
  throw InputError("unknown side: " + s);
}

struct TranslateEngine::Impl {
  const FunctionTable& f;
  Side side;
  const WindowSpec& w;

  enum class Path { grid1d, cayley, generic };
  Path path = Path::generic;
  int dim = 1;

  std::vector<Element> elements;
  std::map<Element, std::size_t, bool (*)(const Element&, const Element&)>
      slot_of{element_less};

  // grid1d: dense per-component values over an index range
  std::vector<std::int64_t> grid_index;          // per slot
  std::vector<std::int64_t> test_index;          // test set as indices
  std::int64_t test_min = 0, test_max = 0;
  std::int64_t lo = 0;                           // table start
  std::vector<std::vector<std::complex<double>>> table;  // [comp][i - lo]

  // cayley: all values precomputed, products via the table
  std::vector<CodomainPoint> cayley_values;
  std::vector<std::int64_t> cayley_slot_elem;  // per slot: element index

  // generic: cached test evaluations are pointless (products vary), keep
  // the test elements only
  const std::vector<Element>* test = nullptr;

  Impl(const FunctionTable& fn, Side s, const WindowSpec& win)
      : f(fn), side(s), w(win) {
    dim = f.dim();
    test = &w.test_set;
    const auto kind = w.model->kind();
    if (!f.has_custom_metric() &&
        (kind == GroupKind::real_grid || kind == GroupKind::lattice_zd) &&
        w.model->dim() == 1) {
      path = Path::grid1d;
      test_index.reserve(w.test_set.size());
      for (const auto& e : w.test_set) {
        test_index.push_back(std::get<std::vector<std::int64_t>>(e)[0]);
      }
      auto [mn, mx] = std::minmax_element(test_index.begin(), test_index.end());
      test_min = *mn;
      test_max = *mx;
    } else if (!f.has_custom_metric() && kind == GroupKind::cayley) {
      path = Path::cayley;
      const auto n = w.model->order();
      cayley_values.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        cayley_values.push_back(
            eval_or_throw(f, Element{static_cast<std::int64_t>(i)}));
      }
    }
  }

  Element make_grid_elem(std::int64_t i) const {
    return std::vector<std::int64_t>{i};
  }

  void ensure_table_covers(std::int64_t a, std::int64_t b) {
    if (!table.empty() && a >= lo &&
        b < lo + static_cast<std::int64_t>(table[0].size())) {
      return;
    }
    std::int64_t nlo = table.empty() ? a : std::min(a, lo);
    std::int64_t nhi =
        table.empty() ? b
                      : std::max(b, lo + static_cast<std::int64_t>(
                                            table[0].size()) - 1);
    // grow geometrically so repeated add_element stays cheap
    std::int64_t span = nhi - nlo + 1;
    std::int64_t slack = span / 4;
    nlo -= slack;
    nhi += slack;
    std::vector<std::vector<std::complex<double>>> nt(
        static_cast<std::size_t>(dim));
    for (auto& c : nt)
      c.resize(static_cast<std::size_t>(nhi - nlo + 1));
    for (std::int64_t i = nlo; i <= nhi; ++i) {
      if (!table.empty() && i >= lo &&
          i < lo + static_cast<std::int64_t>(table[0].size())) {
        for (int c = 0; c < dim; ++c) {
          nt[static_cast<std::size_t>(c)][static_cast<std::size_t>(i - nlo)] =
              table[static_cast<std::size_t>(c)]
                   [static_cast<std::size_t>(i - lo)];
        }
      } else {
        CodomainPoint p = eval_or_throw(f, make_grid_elem(i));
        for (int c = 0; c < dim; ++c) {
          nt[static_cast<std::size_t>(c)][static_cast<std::size_t>(i - nlo)] =
              p[static_cast<std::size_t>(c)];
        }
      }
    }
    lo = nlo;
    table = std::move(nt);
  }

  std::size_t add(const Element& e) {
    auto it = slot_of.find(e);
    if (it != slot_of.end()) return it->second;
    std::size_t slot = elements.size();
    elements.push_back(e);
    slot_of.emplace(e, slot);
    if (path == Path::grid1d) {
      std::int64_t gi = std::get<std::vector<std::int64_t>>(e)[0];
      grid_index.push_back(gi);
      std::int64_t reach = side == Side::two_sided ? 2 : 1;
      ensure_table_covers(gi + reach * test_min, gi + reach * test_max);
    } else if (path == Path::cayley) {
      cayley_slot_elem.push_back(std::get<std::int64_t>(e));
    }
    return slot;
  }

  // squared max over the scan; >= bound2 allows early exit. Returns the
  // exact squared maximum when it stays below bound2. witness_out (optional)
  // receives the first argmax scan position.
  double scan_sq(std::size_t a, std::size_t b, double bound2,
                 std::size_t* witness_s, std::size_t* witness_t) const {
    switch (path) {
      case Path::grid1d: return scan_grid(a, b, bound2, witness_s, witness_t);
      case Path::cayley: return scan_cayley(a, b, bound2, witness_s, witness_t);
      case Path::generic: return scan_generic(a, b, bound2, witness_s, witness_t);
    }
    return 0.0;
  }

  static double norm_sq(const std::complex<double>& d) {
    return d.real() * d.real() + d.imag() * d.imag();
  }

  double scan_grid(std::size_t a, std::size_t b, double bound2,
                   std::size_t* ws, std::size_t* wt) const {
    const std::int64_t ia = grid_index[a], ib = grid_index[b];
    const std::size_t nt = test_index.size();
    const bool bounded = bound2 < std::numeric_limits<double>::infinity();
    double best = 0.0;
    std::size_t bs = 0, bt = 0;

    if (side != Side::two_sided) {
      // left and right coincide on these abelian models: u + t
      // strided probe pass to trip the bound quickly on far pairs
      if (bounded && !ws && !wt && nt > 96) {
        std::size_t stride = (nt * 2) / 5;
        if (stride % 2 == 0) ++stride;
        std::size_t pos = 0;
        for (std::size_t k = 0; k < 64; ++k) {
          double m = pair_sq(ia + test_index[pos], ib + test_index[pos]);
          if (m >= bound2) return m;
          pos += stride;
          if (pos >= nt) pos -= nt;
        }
      }
      for (std::size_t t = 0; t < nt; ++t) {
        double m = pair_sq(ia + test_index[t], ib + test_index[t]);
        if (m > best) {
          best = m;
          bt = t;
          if (bounded && best >= bound2) break;
        }
      }
      if (ws) *ws = bt;  // right side: the translator acts on the left slot
      if (wt) *wt = bt;
      return best;
    }

    for (std::size_t s = 0; s < nt; ++s) {
      const std::int64_t base_a = test_index[s] + ia;
      const std::int64_t base_b = test_index[s] + ib;
      for (std::size_t t = 0; t < nt; ++t) {
        double m = pair_sq(base_a + test_index[t], base_b + test_index[t]);
        if (m > best) {
          best = m;
          bs = s;
          bt = t;
          if (bounded && best >= bound2) {
            if (ws) *ws = bs;
            if (wt) *wt = bt;
            return best;
          }
        }
      }
    }
    if (ws) *ws = bs;
    if (wt) *wt = bt;
    return best;
  }

  double pair_sq(std::int64_t ia, std::int64_t ib) const {
    double m = 0.0;
    const std::size_t xa = static_cast<std::size_t>(ia - lo);
    const std::size_t xb = static_cast<std::size_t>(ib - lo);
    for (int c = 0; c < dim; ++c) {
      const auto& v = table[static_cast<std::size_t>(c)];
      m = std::max(m, norm_sq(v[xa] - v[xb]));
    }
    return m;
  }

  double scan_cayley(std::size_t a, std::size_t b, double bound2,
                     std::size_t* ws, std::size_t* wt) const {
    const auto& tab = w.model->table();
    const auto ea = static_cast<std::size_t>(cayley_slot_elem[a]);
    const auto eb = static_cast<std::size_t>(cayley_slot_elem[b]);
    const auto& ts = *test;
    const bool bounded = bound2 < std::numeric_limits<double>::infinity();
    double best = 0.0;
    std::size_t bs = 0, bt = 0;

    auto value_sq = [&](std::size_t xa, std::size_t xb) {
      double m = 0.0;
      const auto& pa = cayley_values[xa];
      const auto& pb = cayley_values[xb];
      for (int c = 0; c < dim; ++c) {
        m = std::max(m, norm_sq(pa[static_cast<std::size_t>(c)] -
                                pb[static_cast<std::size_t>(c)]));
      }
      return m;
    };

    if (side == Side::left) {
      for (std::size_t t = 0; t < ts.size(); ++t) {
        auto et = static_cast<std::size_t>(std::get<std::int64_t>(ts[t]));
        double m = value_sq(static_cast<std::size_t>(tab[ea][et]),
                            static_cast<std::size_t>(tab[eb][et]));
        if (m > best) {
          best = m;
          bt = t;
          if (bounded && best >= bound2) break;
        }
      }
      if (wt) *wt = bt;
      return best;
    }
    if (side == Side::right) {
      for (std::size_t t = 0; t < ts.size(); ++t) {
        auto et = static_cast<std::size_t>(std::get<std::int64_t>(ts[t]));
        double m = value_sq(static_cast<std::size_t>(tab[et][ea]),
                            static_cast<std::size_t>(tab[et][eb]));
        if (m > best) {
          best = m;
          bt = t;
          if (bounded && best >= bound2) break;
        }
      }
      if (ws) *ws = bt;
      return best;
    }
    for (std::size_t s = 0; s < ts.size(); ++s) {
      auto es = static_cast<std::size_t>(std::get<std::int64_t>(ts[s]));
      auto sa = static_cast<std::size_t>(tab[es][ea]);
      auto sb = static_cast<std::size_t>(tab[es][eb]);
      for (std::size_t t = 0; t < ts.size(); ++t) {
        auto et = static_cast<std::size_t>(std::get<std::int64_t>(ts[t]));
        double m = value_sq(static_cast<std::size_t>(tab[sa][et]),
                            static_cast<std::size_t>(tab[sb][et]));
        if (m > best) {
          best = m;
          bs = s;
          bt = t;
          if (bounded && best >= bound2) {
            if (ws) *ws = bs;
            if (wt) *wt = bt;
            return best;
          }
        }
      }
    }
    if (ws) *ws = bs;
    if (wt) *wt = bt;
    return best;
  }

  double scan_generic(std::size_t a, std::size_t b, double bound2,
                      std::size_t* ws, std::size_t* wt) const {
    const auto& model = *w.model;
    const auto& ts = *test;
    const Element& ea = elements[a];
    const Element& eb = elements[b];
    const bool bounded = bound2 < std::numeric_limits<double>::infinity();
    double best = 0.0;
    std::size_t bs = 0, bt = 0;

    auto dist_sq = [&](const Element& xa, const Element& xb) {
      CodomainPoint pa = eval_or_throw(f, xa);
      CodomainPoint pb = eval_or_throw(f, xb);
      double d = f.distance(pa, pb);
      return d * d;
    };

    if (side == Side::left) {
      for (std::size_t t = 0; t < ts.size(); ++t) {
        double m = dist_sq(model.op(ea, ts[t]), model.op(eb, ts[t]));
        if (m > best) {
          best = m;
          bt = t;
          if (bounded && best >= bound2) break;
        }
      }
      if (wt) *wt = bt;
      return best;
    }
    if (side == Side::right) {
      for (std::size_t t = 0; t < ts.size(); ++t) {
        double m = dist_sq(model.op(ts[t], ea), model.op(ts[t], eb));
        if (m > best) {
          best = m;
          bt = t;
          if (bounded && best >= bound2) break;
        }
      }
      if (ws) *ws = bt;
      return best;
    }
    for (std::size_t s = 0; s < ts.size(); ++s) {
      Element sa = model.op(ts[s], ea);
      Element sb = model.op(ts[s], eb);
      for (std::size_t t = 0; t < ts.size(); ++t) {
        double m = dist_sq(model.op(sa, ts[t]), model.op(sb, ts[t]));
        if (m > best) {
          best = m;
          bs = s;
          bt = t;
          if (bounded && best >= bound2) {
            if (ws) *ws = bs;
            if (wt) *wt = bt;
            return best;
          }
        }
      }
    }
    if (ws) *ws = bs;
    if (wt) *wt = bt;
    return best;
  }
};

TranslateEngine::TranslateEngine(const FunctionTable& f, Side side,
                                 const WindowSpec& w)
    : impl_(std::make_unique<Impl>(f, side, w)) {}

TranslateEngine::~TranslateEngine() = default;

std::size_t TranslateEngine::add_element(const Element& e) {
  return impl_->add(e);
}

void TranslateEngine::add_candidates() {
  for (const auto& e : impl_->w.candidates) impl_->add(e);
}

const Element& TranslateEngine::element(std::size_t slot) const {
  return impl_->elements[slot];
}

std::size_t TranslateEngine::size() const { return impl_->elements.size(); }

double TranslateEngine::distance(std::size_t a, std::size_t b) const {
  if (a == b) return 0.0;
  double sq = impl_->scan_sq(a, b, std::numeric_limits<double>::infinity(),
                             nullptr, nullptr);
  return std::sqrt(sq);
}

double TranslateEngine::distance_above(std::size_t a, std::size_t b,
                                       double bound) const {
  if (a == b) return 0.0;
  double sq = impl_->scan_sq(a, b, bound * bound, nullptr, nullptr);
  return std::sqrt(sq);
}

TranslateDistance TranslateEngine::distance_with_witness(std::size_t a,
                                                         std::size_t b) const {
  TranslateDistance td;
  td.u = impl_->elements[a];
  td.v = impl_->elements[b];
  td.side = impl_->side;
  if (a == b) {
    td.value = 0.0;
    return td;
  }
  std::size_t ws = 0, wt = 0;
  double sq = impl_->scan_sq(a, b, std::numeric_limits<double>::infinity(),
                             &ws, &wt);
  td.value = std::sqrt(sq);
  if (impl_->side != Side::left) td.witness_s = impl_->w.test_set[ws];
  if (impl_->side != Side::right) td.witness_t = impl_->w.test_set[wt];
  return td;
}

Side TranslateEngine::side() const { return impl_->side; }
const WindowSpec& TranslateEngine::window() const { return impl_->w; }
const FunctionTable& TranslateEngine::function() const { return impl_->f; }

TranslateDistance translate_distance(const FunctionTable& f, const Element& u,
                                     const Element& v, Side side,
                                     const WindowSpec& w) {
  TranslateEngine eng(f, side, w);
  auto a = eng.add_element(u);
  auto b = eng.add_element(v);
  return eng.distance_with_witness(a, b);
}

SideCollapseReport abelian_side_collapse_check(const FunctionTable& f,
                                               const Element& u,
                                               const Element& v,
                                               const WindowSpec& w) {
  if (!w.model->abelian()) {
    throw ContractViolation(
        "abelian_side_collapse_check requires an abelian model (got " +
        w.model->name() + ")");
  }
  SideCollapseReport rep;
  auto dl = translate_distance(f, u, v, Side::left, w);
  auto dr = translate_distance(f, u, v, Side::right, w);
  rep.max_lr_discrepancy = std::abs(dl.value - dr.value);
  rep.pairs_checked = 1;

  // two-sided collapses to left exactly when sampled products s*t stay
  // inside the test set
  const std::size_t nt = w.test_set.size();
  if (nt * nt <= 4'000'000) {
    rep.test_set_product_closed = true;
    for (std::size_t i = 0; i < nt && rep.test_set_product_closed; ++i) {
      for (std::size_t j = 0; j < nt; ++j) {
        Element p = w.model->op(w.test_set[i], w.test_set[j]);
        auto it = std::lower_bound(w.test_set.begin(), w.test_set.end(), p,
                                   element_less);
        if (it == w.test_set.end() || !w.model->equal(*it, p)) {
          rep.test_set_product_closed = false;
          break;
        }
      }
    }
    if (rep.test_set_product_closed) {
      auto d2 = translate_distance(f, u, v, Side::two_sided, w);
      rep.max_two_sided_discrepancy = std::abs(d2.value - dl.value);
    }
  }
  return rep;
}

}  // namespace apkit
