// Generated by gen_catalog_data. Do not edit.
#include "catalog_data.hpp"

namespace lrw1::detail {

const std::vector<EmbeddedObstruction>& embedded_catalog() {
  static const std::vector<EmbeddedObstruction> data{
      {5, {{0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}}, "C5", {}},
      {5, {{0, 1}, {0, 2}, {0, 4}, {1, 2}, {1, 3}, {3, 4}}, "house", {}},
      {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 4}, {2, 3}}, "gem", {}},
      {6, {{0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}}, "C6", {}},
      {6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}}, "", {"bridged-path(ends=0;hub-edge=0)"}},
      {6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}}, "", {"bridged-path(ends=2;hub-edge=0)"}},
      {6, {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}, "", {}},
      {6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 5}}, "", {"bridged-path(ends=1;hub-edge=0)"}},
      {6, {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 5}, {3, 4}}, "domino", {}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, "", {}},
      {6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 4}, {2, 3}}, "", {}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 5}, {3, 4}}, "", {"bridged-path(ends=0;hub-edge=1)"}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}}, "", {}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 4}}, "", {"bridged-path(ends=2;hub-edge=1)"}},
      {6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 5}}, "", {"bridged-path(ends=1;hub-edge=1)"}},
      {7, {{0, 5}, {0, 6}, {1, 4}, {1, 6}, {2, 3}, {2, 5}, {3, 4}}, "C7", {}},
      {7, {{0, 1}, {0, 2}, {0, 3}, {1, 6}, {2, 5}, {3, 4}}, "", {"spider(tips=0)"}},
      {7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 6}, {2, 5}, {3, 4}}, "", {"spider(tips=3)"}},
      {7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {2, 3}, {5, 6}}, "", {"spider(tips=2)"}},
      {7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 6}, {4, 5}}, "", {"spider(tips=1)"}},
      {8, {{0, 6}, {0, 7}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {3, 4}, {3, 5}}, "C8", {}},
  };
  return data;
}

}  // namespace lrw1::detail
