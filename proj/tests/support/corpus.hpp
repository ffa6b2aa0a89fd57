#pragma once

#include <string>
#include <vector>

#include "helpers.hpp"

namespace gcmwb::test {

struct CorpusEntry {
  LocalRing ring;
  std::vector<ParameterSystem> qs;
  bool gcm;  // known from the ring's structure
};

inline std::vector<std::vector<std::string>> regular_sops_2() {
  return {{"x", "y"}, {"x^2", "y"}, {"x+y", "x-y"}, {"x^2+y^3", "y^2"}, {"x+2*y", "x^2-y"}};
}

inline std::vector<std::vector<std::string>> regular_sops_3() {
  return {{"x", "y", "z"}, {"x^2", "y", "z"}, {"x+y", "y+z", "x+z"}, {"x", "y^2", "z+x"}, {"x-z^2", "y+x", "z^2"}};
}

inline std::vector<std::vector<std::string>> two_planes_sops() {
  return {{"x-u", "y-v"}, {"x+u", "y+v"}, {"x+2*u", "y+3*v"}, {"x-u+y", "y-v+u"}, {"(x-u)^2", "y-v"}};
}

inline std::vector<ParameterSystem> sops(const LocalRing& a, const std::vector<std::vector<std::string>>& xs) {
  std::vector<ParameterSystem> out;
  for (const auto& x : xs) out.push_back(sop(a, x));
  return out;
}

/// Every (ring, Q) pair the property suites run over.
inline std::vector<CorpusEntry> corpus() {
  std::vector<CorpusEntry> out;
  for (unsigned r : {1u, 2u, 3u, 4u, 6u}) {
    auto a = example_ring(r);
    out.push_back({a, sops(a, {{"y"}, {"y+x"}, {"y^2"}}), true});
  }
  auto k2 = local("k[x,y]", {"x", "y"}, {});
  out.push_back({k2, sops(k2, regular_sops_2()), true});
  auto k3 = local("k[x,y,z]", {"x", "y", "z"}, {});
  out.push_back({k3, sops(k3, regular_sops_3()), true});
  auto tp = two_planes();
  out.push_back({tp, sops(tp, two_planes_sops()), true});
  auto c = line_and_plane();
  out.push_back({c, sops(c, {{"x-y", "z"}}), false});
  return out;
}

}  // namespace gcmwb::test
