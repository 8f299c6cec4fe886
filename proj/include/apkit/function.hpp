#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "apkit/group.hpp"

namespace apkit {

/// Point of the codomain metric space: a tuple of complex coordinates.
/// Scalar functions use one component; products concatenate components.
using CodomainPoint = std::vector<std::complex<double>>;

/// Max-coordinate metric; the default codomain metric throughout.
double codomain_distance(const CodomainPoint& a, const CodomainPoint& b);

/// A function from group elements into a metric space, given by formula or
/// lookup table. Evaluators must be total on every product a checker forms;
/// lookup tables are therefore only allowed on cayley models, where products
/// stay inside the table.
class FunctionTable {
 public:
  using Evaluator = std::function<CodomainPoint(const Element&)>;
  using Metric =
      std::function<double(const CodomainPoint&, const CodomainPoint&)>;

  FunctionTable(GroupModelPtr model, int dim, Evaluator eval,
                std::string name);

  /// cayley lookup table, one codomain point per element index
  static FunctionTable lookup(GroupModelPtr model,
                              std::vector<CodomainPoint> values,
                              std::string name);

  const GroupModelPtr& model() const { return model_; }
  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  bool is_lookup() const { return is_lookup_; }

  CodomainPoint operator()(const Element& e) const;

  /// Uses the custom metric when one was installed, else the max metric.
  double distance(const CodomainPoint& a, const CodomainPoint& b) const;
  bool has_custom_metric() const { return static_cast<bool>(metric_); }
  void set_metric(Metric m) { metric_ = std::move(m); }

 private:
  GroupModelPtr model_;
  int dim_ = 1;
  Evaluator eval_;
  Metric metric_;  // empty -> codomain_distance
  std::string name_;
  bool is_lookup_ = false;
};

// Pointwise constructions used by the closure suite.

/// x -> f(a x)
FunctionTable translate_left(const FunctionTable& f, const Element& a);
/// x -> f(x a)
FunctionTable translate_right(const FunctionTable& f, const Element& a);
/// x -> f(x^{-1})
FunctionTable reflect(const FunctionTable& f);
/// (f, g) into the max-metric product of the codomains
FunctionTable pair(const FunctionTable& f, const FunctionTable& g);
/// f + g componentwise (dimensions must agree)
FunctionTable pointwise_add(const FunctionTable& f, const FunctionTable& g);
/// phi * f with scalar (dim-1) phi
FunctionTable pointwise_scale(const FunctionTable& phi,
                              const FunctionTable& f);

}  // namespace apkit
