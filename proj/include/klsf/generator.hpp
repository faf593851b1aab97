#ifndef KLSF_GENERATOR_HPP
#define KLSF_GENERATOR_HPP

#include <cstdint>

#include "klsf/instance.hpp"

namespace klsf {

enum class LabelModel { UniformPerEdge, ClusteredLabels };

struct GeneratorSpec {
  int n = 0;
  double density = 0.5;  // edge probability per vertex pair, in (0, 1]
  int ell = 0;
  int k_bar = 0;
  LabelModel label_model = LabelModel::UniformPerEdge;
  std::uint64_t seed = 0;
};

// Erdos-Renyi style sampling, deterministic per seed. ClusteredLabels splits
// the vertices into ceil(ell/2) clusters and biases intra-cluster edges 80/20
// toward a cluster-owned label.
Instance generate(const GeneratorSpec& spec);

}  // namespace klsf

#endif
