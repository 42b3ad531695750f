#include <doctest.h>

#include <map>

#include "k2ham/error.hpp"
#include "k2ham/embedding.hpp"
#include "k2ham/engine.hpp"
#include "k2ham/grinberg.hpp"
#include "k2ham/named.hpp"

using namespace k2ham;

namespace {

Embedding dodecahedron_embedding() {
  return Embedding::from_coordinates(named::dodecahedron(), named::dodecahedron_coordinates());
}

Embedding j18_embedding() { return Embedding::from_coordinates(named::j18(), named::j18_coordinates()); }

Embedding k4_embedding() { return Embedding::make(named::complete(4), {{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}}); }

std::map<int, int> size_profile(const FaceSet& fs) {
  std::map<int, int> out;
  for (int f = 0; f < fs.count(); ++f) ++out[fs.size(f)];
  return out;
}

// Every directed edge lies on exactly one face walk.
void check_double_cover(const Embedding& emb, const FaceSet& fs) {
  std::map<std::pair<int, int>, int> darts;
  int total = 0;
  for (const auto& w : fs.walks) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      ++darts[{w[i], w[(i + 1) % w.size()]}];
      ++total;
    }
  }
  CHECK(total == 2 * emb.graph().size());
  for (const Edge& e : emb.graph().edges()) {
    CHECK(darts[{e.u, e.v}] == 1);
    CHECK(darts[{e.v, e.u}] == 1);
  }
}

}  // namespace

TEST_CASE("face profiles") {
  auto dod = dodecahedron_embedding();
  auto fd = faces(dod);
  CHECK(fd.count() == 12);
  CHECK(size_profile(fd) == std::map<int, int>{{5, 12}});
  check_double_cover(dod, fd);

  auto k4 = k4_embedding();
  auto fk = faces(k4);
  CHECK(size_profile(fk) == std::map<int, int>{{3, 4}});
  check_double_cover(k4, fk);

  auto j = j18_embedding();
  auto fj = faces(j);
  CHECK(size_profile(fj) == std::map<int, int>{{5, 8}, {10, 1}});
  CHECK(j.graph().order() - j.graph().size() + fj.count() == 2);
  check_double_cover(j, fj);
  CHECK(fj.size(largest_face(fj)) == 10);
}

TEST_CASE("cyclic shifts of a rotation give the same faces") {
  auto emb = dodecahedron_embedding();
  auto rot = emb.rotation();
  for (auto& r : rot) std::rotate(r.begin(), r.begin() + 1, r.end());
  auto shifted = Embedding::make(emb.graph(), rot);
  CHECK(size_profile(faces(shifted)) == size_profile(faces(emb)));
}

TEST_CASE("non-planar rotation and disconnected graphs are rejected") {
  Graph k4 = named::complete(4);
  // swapping one rotation gives a torus-like system with fewer faces
  CHECK_THROWS_AS(faces(Embedding::make(k4, {{1, 3, 2}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}})), PreconditionError);
  Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_THROWS_AS(faces(Embedding::make(two_triangles, {{1, 2}, {2, 0}, {0, 1}, {4, 5}, {5, 3}, {3, 4}})),
                  PreconditionError);
}

TEST_CASE("Grinberg sum vanishes on every hamiltonian cycle of the dodecahedron") {
  auto emb = dodecahedron_embedding();
  auto fs = faces(emb);
  int cycles = 0;
  for_each_hamiltonian_cycle(emb.graph(), {}, [&](std::span<const int> c) {
    auto r = grinberg_sum(emb, fs, CycleWitness(c.begin(), c.end()));
    CHECK(r.consistent);
    CHECK(r.sigma == 0);
    int inside = 0;
    for (Side s : r.sides) inside += s == Side::inside;
    CHECK(inside == 6);
    ++cycles;
    return false;
  });
  CHECK(cycles == 30);
  CHECK_FALSE(grinbergian_obstruction(fs));
}

TEST_CASE("K4") {
  auto emb = k4_embedding();
  auto fs = faces(emb);
  CHECK(grinberg_sum(emb, fs, {0, 1, 2, 3}).sigma == 0);
  CHECK_FALSE(grinbergian_obstruction(fs));
  CHECK_THROWS_AS(grinberg_sum(emb, fs, {0, 1, 2}), PreconditionError);
}

TEST_CASE("a perturbed side assignment is flagged") {
  auto emb = dodecahedron_embedding();
  auto fs = faces(emb);
  auto cycle = find_hamiltonian_cycle(emb.graph()).witness.value();
  auto sides = grinberg_sum(emb, fs, cycle).sides;
  sides[0] = sides[0] == Side::inside ? Side::outside : Side::inside;
  auto r = grinberg_sum(emb, fs, cycle, sides);
  CHECK_FALSE(r.consistent);
  CHECK(r.sigma != 0);
}

TEST_CASE("J18 plus the edge ad carries the mod-3 obstruction") {
  auto emb = j18_embedding();
  auto fs = faces(emb);
  auto [a, b, c, d] = named::kJ18Outer;
  // J18 itself: the 10-face is the only one with size - 2 not divisible by 3
  CHECK(grinbergian_obstruction(fs));
  CHECK_FALSE(find_hamiltonian_cycle(named::j18()).found());
  int f = largest_face(fs);
  auto with_ad = add_chord_in_face(emb, fs, f, a, d);
  auto fs2 = faces(with_ad);
  CHECK(fs2.count() == fs.count() + 1);
  check_double_cover(with_ad, fs2);
  CHECK(grinbergian_obstruction(fs2));
  CHECK_FALSE(find_hamiltonian_cycle(with_ad.graph()).found());
  CHECK_FALSE(find_hamiltonian_path(named::j18(), a, d).found());
  for (int g = 0; g < fs.count(); ++g) {
    const auto& w = fs.walks[g];
    if (std::find(w.begin(), w.end(), b) == w.end()) {
      CHECK_THROWS_AS(add_chord_in_face(emb, fs, g, a, b), PreconditionError);
    }
  }
}
