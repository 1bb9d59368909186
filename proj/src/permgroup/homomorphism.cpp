#include "pregal/homomorphism.hpp"

#include <algorithm>

#include "pregal/error.hpp"

namespace pregal {

namespace {
constexpr ElementIndex kUnset = static_cast<ElementIndex>(-1);
}

GroupHom GroupHom::from_generator_images(const PermGroup& source, const PermGroup& target,
                                         std::span<const Perm> images) {
  const auto& gens = source.generators();
  if (images.size() != gens.size())
    fail(ErrorKind::NotAHomomorphism, "expected " + std::to_string(gens.size()) +
                                          " generator images, got " + std::to_string(images.size()));
  std::vector<ElementIndex> gi, ti;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    gi.push_back(source.index_of(gens[i]));
    auto t = target.find(images[i]);
    if (!t) fail(ErrorKind::NotAHomomorphism, "image " + images[i].to_string() + " is not in the target");
    ti.push_back(*t);
  }
  IndexMap map(source.order(), kUnset);
  map[0] = 0;
  std::vector<ElementIndex> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    ElementIndex x = queue[head];
    for (std::size_t j = 0; j < gi.size(); ++j) {
      ElementIndex y = source.multiply(x, gi[j]);
      ElementIndex img = target.multiply(map[x], ti[j]);
      if (map[y] == kUnset) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        fail(ErrorKind::NotAHomomorphism, "generator images violate a relation of the source group");
      }
    }
  }
  return GroupHom(source, target, std::move(map));
}

GroupHom GroupHom::from_generator_images(const PermGroup& source, std::span<const Perm> images) {
  if (images.empty()) return trivial(source, PermGroup());
  std::size_t d = images.front().degree();
  for (const Perm& p : images)
    if (p.degree() != d) fail(ErrorKind::DegreeMismatch, "generator images of different degrees");
  PermGroup target = PermGroup::closure(d, std::vector<Perm>(images.begin(), images.end()));
  return from_generator_images(source, target, images);
}

GroupHom GroupHom::from_map(const PermGroup& source, const PermGroup& target, IndexMap map) {
  if (map.size() != source.order()) fail(ErrorKind::NotAHomomorphism, "map size mismatch");
  for (ElementIndex v : map)
    if (v >= target.order()) fail(ErrorKind::NotAHomomorphism, "map leaves the target");
  for (ElementIndex a = 0; a < source.order(); ++a)
    for (ElementIndex b = 0; b < source.order(); ++b)
      if (map[source.multiply(a, b)] != target.multiply(map[a], map[b]))
        fail(ErrorKind::NotAHomomorphism, "map does not respect multiplication");
  return GroupHom(source, target, std::move(map));
}

GroupHom GroupHom::identity(const PermGroup& g) {
  IndexMap m(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) m[i] = i;
  return GroupHom(g, g, std::move(m));
}

GroupHom GroupHom::trivial(const PermGroup& source, const PermGroup& target) {
  return GroupHom(source, target, IndexMap(source.order(), 0));
}

const Perm& GroupHom::operator()(const Perm& x) const {
  return target_.element(map_[source_.index_of(x)]);
}

Subgroup GroupHom::kernel() const {
  std::vector<ElementIndex> members;
  for (ElementIndex i = 0; i < map_.size(); ++i)
    if (map_[i] == 0) members.push_back(i);
  return Subgroup::from_members(source_, std::move(members));
}

Subgroup GroupHom::image() const {
  std::vector<ElementIndex> members(map_.begin(), map_.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Subgroup::from_members(target_, std::move(members));
}

bool GroupHom::is_surjective() const { return image().order() == target_.order(); }
bool GroupHom::is_injective() const { return kernel().order() == 1; }
bool GroupHom::is_trivial() const {
  return std::all_of(map_.begin(), map_.end(), [](ElementIndex v) { return v == 0; });
}

GroupHom GroupHom::after(const GroupHom& other) const {
  if (!(other.target_ == source_)) fail(ErrorKind::NotAHomomorphism, "composition domain mismatch");
  IndexMap m(other.map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = map_[other.map_[i]];
  return GroupHom(other.source_, target_, std::move(m));
}

}  // namespace pregal
