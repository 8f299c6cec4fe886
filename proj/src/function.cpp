#include "apkit/function.hpp"

#include <cmath>

#include "apkit/errors.hpp"

namespace apkit {

double codomain_distance(const CodomainPoint& a, const CodomainPoint& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

FunctionTable::FunctionTable(GroupModelPtr model, int dim, Evaluator eval,
                             std::string name)
    : model_(std::move(model)),
      dim_(dim),
      eval_(std::move(eval)),
      name_(std::move(name)) {
  if (!model_) throw InputError("function needs a model");
  if (dim_ < 1) throw InputError("codomain dimension must be positive");
}

FunctionTable FunctionTable::lookup(GroupModelPtr model,
                                    std::vector<CodomainPoint> values,
                                    std::string name) {
  if (!model || model->kind() != GroupKind::cayley) {
    // products of table elements must stay inside the table; only finite
    // Cayley groups guarantee that
    throw InputError("lookup tables are restricted to cayley models");
  }
  if (values.size() != model->order()) {
    throw InputError("lookup table size does not match the group order");
  }
  int dim = values.empty() ? 1 : static_cast<int>(values.front().size());
  auto shared = std::make_shared<std::vector<CodomainPoint>>(std::move(values));
  FunctionTable f(
      model, dim,
      [shared](const Element& e) -> CodomainPoint {
        auto idx = std::get<std::int64_t>(e);
        if (idx < 0 || static_cast<std::size_t>(idx) >= shared->size()) {
          throw TotalityError("lookup index out of range: " +
                              std::to_string(idx));
        }
        return (*shared)[static_cast<std::size_t>(idx)];
      },
      std::move(name));
  f.is_lookup_ = true;
  return f;
}

CodomainPoint FunctionTable::operator()(const Element& e) const {
  CodomainPoint p = eval_(e);
  if (static_cast<int>(p.size()) != dim_) {
    throw TotalityError("evaluator returned wrong dimension for " +
                        format_element(e));
  }
  return p;
}

double FunctionTable::distance(const CodomainPoint& a,
                               const CodomainPoint& b) const {
  return metric_ ? metric_(a, b) : codomain_distance(a, b);
}

FunctionTable translate_left(const FunctionTable& f, const Element& a) {
  auto model = f.model();
  FunctionTable g(
      model, f.dim(),
      [f, a, model](const Element& x) { return f(model->op(a, x)); },
      f.name() + ".ltrans");
  return g;
}

FunctionTable translate_right(const FunctionTable& f, const Element& a) {
  auto model = f.model();
  FunctionTable g(
      model, f.dim(),
      [f, a, model](const Element& x) { return f(model->op(x, a)); },
      f.name() + ".rtrans");
  return g;
}

FunctionTable reflect(const FunctionTable& f) {
  auto model = f.model();
  FunctionTable g(
      model, f.dim(), [f, model](const Element& x) { return f(model->inv(x)); },
      f.name() + ".refl");
  return g;
}

FunctionTable pair(const FunctionTable& f, const FunctionTable& g) {
  if (f.model() != g.model()) {
    throw InputError("paired functions must share a model");
  }
  FunctionTable h(
      f.model(), f.dim() + g.dim(),
      [f, g](const Element& x) {
        CodomainPoint p = f(x);
        CodomainPoint q = g(x);
        p.insert(p.end(), q.begin(), q.end());
        return p;
      },
      "(" + f.name() + "," + g.name() + ")");
  return h;
}

FunctionTable pointwise_add(const FunctionTable& f, const FunctionTable& g) {
  if (f.model() != g.model() || f.dim() != g.dim()) {
    throw InputError("added functions must share model and dimension");
  }
  FunctionTable h(
      f.model(), f.dim(),
      [f, g](const Element& x) {
        CodomainPoint p = f(x);
        CodomainPoint q = g(x);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += q[i];
        return p;
      },
      f.name() + "+" + g.name());
  return h;
}

FunctionTable pointwise_scale(const FunctionTable& phi,
                              const FunctionTable& f) {
  if (phi.model() != f.model() || phi.dim() != 1) {
    throw InputError("scalar factor must be one-dimensional on the same model");
  }
  FunctionTable h(
      f.model(), f.dim(),
      [phi, f](const Element& x) {
        auto s = phi(x)[0];
        CodomainPoint p = f(x);
        for (auto& c : p) c *= s;
        return p;
      },
      phi.name() + "*" + f.name());
  return h;
}

}  // namespace apkit
