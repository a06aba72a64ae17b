#include "quiverq/path_algebra.hpp"

namespace quiverq {

Path make_path(const Quiver& q, const std::vector<ArrowId>& arrows) {
  if (arrows.empty()) throw Error("make_path: use Path::vertex for trivial paths");
  for (std::size_t k = 0; k + 1 < arrows.size(); ++k) {
    if (q.source(arrows[k]) != q.target(arrows[k + 1])) throw Error("make_path: arrows do not compose");
  }
  return Path{q.target(arrows.front()), q.source(arrows.back()), arrows};
}

std::string path_to_string(const Quiver& q, const Path& p) {
  std::ostringstream os;
  os << "[" << q.vertex_name(p.target);
  if (!p.arrows.empty()) {
    os << ";";
    for (std::size_t k = 0; k < p.arrows.size(); ++k) os << (k ? "," : "") << q.label(p.arrows[k]);
  }
  os << "]";
  return os.str();
}

Path cayley_path(const CayleyQuiver& cq, VertexId target, const std::vector<int>& directions) {
  Path p{target, target, {}};
  for (int dir : directions) {
    const ArrowId a = cq.arrow(p.source, dir);
    p.arrows.push_back(a);
    p.source = cq.quiver().source(a);
  }
  return p;
}

std::vector<int> directions(const CayleyQuiver& cq, const Path& p) {
  std::vector<int> out;
  out.reserve(p.arrows.size());
  for (ArrowId a : p.arrows) out.push_back(cq.direction(a));
  return out;
}

}  // namespace quiverq
