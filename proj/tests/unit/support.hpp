#pragma once

#include <set>
#include <vector>

#include "affgr/rootsys.hpp"

namespace affgr::test {

// Coweight from coroot coordinates.
inline Coweight cr(const RootSystem& rs, IntVec x) { return rs.from_coroot_coordinates(x); }

inline std::vector<Coweight> box_points(std::size_t rank, Int box) {
  std::vector<Coweight> out;
  IntVec v(rank, -box);
  while (true) {
    out.emplace_back(v);
    std::size_t i = rank;
    while (i > 0 && v[i - 1] == box) v[--i] = -box;
    if (i == 0) return out;
    ++v[i - 1];
  }
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

}  // namespace affgr::test
