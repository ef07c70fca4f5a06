#pragma once

#include <vector>

#include "lrw1/graph.hpp"

namespace lrw1::detail {

struct EmbeddedObstruction {
  int order;
  std::vector<Edge> edges;
  const char* name;
  std::vector<const char*> annotations;
};

const std::vector<EmbeddedObstruction>& embedded_catalog();

}  // namespace lrw1::detail
