#include "sparsehs/set_system.hpp"

#include <algorithm>
#include <string>

#include "sparsehs/errors.hpp"

namespace sparsehs {

namespace detail {

VertexSet canonical_vertex_set(const VertexSet& raw, int n, const char* what) {
  VertexSet out = raw;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && (out.front() < 0 || out.back() >= n)) {
    throw InputError(std::string(what) + ": vertex id outside [0, " +
                     std::to_string(n) + ")");
  }
  return out;
}

}  // namespace detail

namespace {

std::vector<VertexSet> canonical_family(std::vector<VertexSet> family, int n,
                                        const char* what) {
  for (auto& member : family) {
    member = detail::canonical_vertex_set(member, n, what);
  }
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace

SetSystemInstance make_set_system(int n, std::vector<VertexSet> family_f,
                                  std::vector<VertexSet> family_b) {
  if (n < 0) throw InputError("set system with negative universe size");
  SetSystemInstance instance;
  instance.n = n;
  instance.family_f = canonical_family(std::move(family_f), n, "family_f");
  instance.family_b = canonical_family(std::move(family_b), n, "family_b");
  for (const auto& member : instance.family_f) {
    if (member.empty()) {
      throw InputError("family_f contains an empty member; no set can hit it");
    }
  }
  return instance;
}

int sparseness_of(const SetSystemInstance& instance, const VertexSet& h) {
  VertexSet hs = detail::canonical_vertex_set(h, instance.n, "h");
  int worst = 0;
  VertexSet overlap;
  for (const auto& ball : instance.family_b) {
    overlap.clear();
    std::set_intersection(hs.begin(), hs.end(), ball.begin(), ball.end(),
                          std::back_inserter(overlap));
    worst = std::max(worst, static_cast<int>(overlap.size()));
  }
  return worst;
}

bool is_hitting_set(const SetSystemInstance& instance, const VertexSet& h) {
  VertexSet hs = detail::canonical_vertex_set(h, instance.n, "h");
  for (const auto& required : instance.family_f) {
    bool hit = false;
    for (int v : required) {
      if (std::binary_search(hs.begin(), hs.end(), v)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace sparsehs
