#include "klsf/generator.hpp"

#include <random>

namespace klsf {

Instance generate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be at least 1");
  if (spec.ell < 1) throw std::invalid_argument("generator: ell must be at least 1");
  if (spec.k_bar < 1 || spec.k_bar > spec.ell)
    throw std::invalid_argument("generator: k_bar must be in [1, ell]");
  if (!(spec.density > 0.0 && spec.density <= 1.0))
    throw std::invalid_argument("generator: density must be in (0, 1]");

  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> any_label(0, spec.ell - 1);

  const int clusters = (spec.ell + 1) / 2;
  auto cluster_of = [&](int v) {
    return static_cast<int>(static_cast<long long>(v) * clusters / spec.n);
  };

  Instance instance;
  instance.graph.n = spec.n;
  instance.graph.ell = spec.ell;
  instance.k_bar = spec.k_bar;

  for (int u = 0; u < spec.n; ++u) {
    for (int v = u + 1; v < spec.n; ++v) {
      if (coin(rng) >= spec.density) continue;
      int label;
      if (spec.label_model == LabelModel::ClusteredLabels && cluster_of(u) == cluster_of(v) &&
          coin(rng) < 0.8) {
        label = cluster_of(u);  // cluster c owns label c
      } else {
        label = any_label(rng);
      }
      instance.graph.edges.push_back({u, v, label});
    }
  }
  return instance;
}

}  // namespace klsf
