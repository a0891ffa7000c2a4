#include <doctest.h>

#include <random>
#include <set>

#include "pictam/fincat.hpp"
#include "pictam/generators.hpp"

using namespace pictam;

namespace {

// Brute-force isomorphism relation straight from the composition table.
std::vector<std::vector<bool>> iso_relation(const FinCategory& c) {
  const Id n = static_cast<Id>(c.num_objects());
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (Id f = 0; f < static_cast<Id>(c.num_morphisms()); ++f)
    for (Id g = 0; g < static_cast<Id>(c.num_morphisms()); ++g) {
      Id a = c.source(f), b = c.target(f);
      if (c.source(g) != b || c.target(g) != a) continue;
      if (c.compose(g, f) == c.identity(a) && c.compose(f, g) == c.identity(b)) rel[a][b] = true;
    }
  return rel;
}

std::size_t count_classes(const FinCategory& c) {
  auto rel = iso_relation(c);
  std::vector<bool> done(c.num_objects(), false);
  std::size_t k = 0;
  for (std::size_t a = 0; a < c.num_objects(); ++a) {
    if (done[a]) continue;
    ++k;
    for (std::size_t b = 0; b < c.num_objects(); ++b)
      if (rel[a][b]) done[b] = true;
  }
  return k;
}

// Fully faithful and essentially surjective, checked by enumeration.
bool brute_equivalence(const FinFunctor& F) {
  const FinCategory& d = *F.dom;
  const FinCategory& c = *F.cod;
  for (Id a = 0; a < static_cast<Id>(d.num_objects()); ++a)
    for (Id b = 0; b < static_cast<Id>(d.num_objects()); ++b) {
      std::set<Id> image;
      std::size_t src = 0;
      for (Id f = 0; f < static_cast<Id>(d.num_morphisms()); ++f)
        if (d.source(f) == a && d.target(f) == b) {
          ++src;
          image.insert(F.mor[f]);
        }
      std::size_t dst = 0;
      for (Id g = 0; g < static_cast<Id>(c.num_morphisms()); ++g)
        if (c.source(g) == F.obj[a] && c.target(g) == F.obj[b]) ++dst;
      if (image.size() != src || src != dst) return false;
    }
  auto rel = iso_relation(c);
  for (Id y = 0; y < static_cast<Id>(c.num_objects()); ++y) {
    bool hit = false;
    for (Id a = 0; a < static_cast<Id>(d.num_objects()); ++a) hit = hit || rel[F.obj[a]][y];
    if (!hit) return false;
  }
  return true;
}

FinFunctor to_terminal(const CatPtr& c) {
  FinFunctor F{c, terminal_category(), std::vector<Id>(c->num_objects(), 0),
               std::vector<Id>(c->num_morphisms(), 0)};
  return F;
}

// objects a, b, c with a pair of inverse isos a <-> b and c isolated.
CatPtr iso_pair_plus_point() {
  FinCategory::Builder b;
  Id a = b.add_object("a"), bb = b.add_object("b"), c = b.add_object("c");
  Id ia = b.add_morphism("1a", a, a), ib = b.add_morphism("1b", bb, bb), ic = b.add_morphism("1c", c, c);
  Id f = b.add_morphism("f", a, bb), g = b.add_morphism("g", bb, a);
  b.set_identity(a, ia);
  b.set_identity(bb, ib);
  b.set_identity(c, ic);
  b.set_compose(g, f, ia);
  b.set_compose(f, g, ib);
  b.compose_with([&](Id x, Id y) { return x == ia || x == ib || x == ic ? y : x; });
  return b.build();
}

}  // namespace

TEST_SUITE("fincat") {
  TEST_CASE("terminal and cyclic categories are valid") {
    CHECK(validate_category(*terminal_category()).ok());
    auto z2 = cyclic_group_category(2);
    CHECK(validate_category(*z2).ok());
    CHECK(z2->is_groupoid());
    CHECK(z2->compose(1, 1) == 0);
  }

  TEST_CASE("missing composite is reported") {
    FinCategory::Builder b;
    Id x = b.add_object("x");
    Id i = b.add_morphism("i", x, x);
    b.add_morphism("e", x, x);
    b.set_identity(x, i);
    b.set_compose(i, i, i);
    auto c = b.build();
    CHECK_FALSE(c->structural().ok());
    CHECK(c->structural().has("compose_missing"));
  }

  TEST_CASE("non-associative table is reported") {
    // a a = b, every other product of non-identities is a.
    FinCategory::Builder b;
    Id x = b.add_object("x");
    Id i = b.add_morphism("i", x, x), a = b.add_morphism("a", x, x), bm = b.add_morphism("b", x, x);
    b.set_identity(x, i);
    b.compose_with([&](Id g, Id f) {
      if (g == i) return f;
      if (f == i) return g;
      if (g == a && f == a) return bm;
      return a;
    });
    auto c = b.build();
    // (b a) a = a a = b, b (a a) = b b = a
    CHECK(validate_category(*c).has("associativity"));
  }

  TEST_CASE("identity functor is an equivalence") {
    auto c = codiscrete_category({"a", "b", "c"});
    CHECK(is_equivalence(identity_functor(c)));
  }

  TEST_CASE("two-object discrete category to terminal is not an equivalence") {
    auto F = to_terminal(discrete_category({"a", "b"}));
    auto v = is_equivalence(F);
    CHECK_FALSE(v);
    CHECK(v.witness == "Hom(a,b) has 0 elements but its image hom-set has 1");
  }

  TEST_CASE("skeleton inclusion of a groupoid is an equivalence") {
    auto g = product(*codiscrete_category({"a", "b"}), *cyclic_group_category(3));
    std::vector<Id> origin;
    auto sk = full_subcategory(*g, {0}, &origin);
    FinFunctor inc{sk, g, {0}, {}};
    for (Id f = 0; f < static_cast<Id>(sk->num_morphisms()); ++f) inc.mor.push_back(origin[f]);
    CHECK(validate_functor(inc).ok());
    CHECK(brute_equivalence(inc));
    CHECK(is_equivalence(inc));
  }

  TEST_CASE("iso classes") {
    CHECK(iso_classes(*terminal_category()).count == 1);
    CHECK(iso_classes(*discrete_category({"a", "b", "c"})).count == 3);
    auto c = iso_pair_plus_point();
    REQUIRE(validate_category(*c).ok());
    auto k = iso_classes(*c);
    CHECK(k.count == count_classes(*c));
    CHECK(k.count == 2);
    CHECK(k.class_of[0] == k.class_of[1]);
    CHECK(k.class_of[0] != k.class_of[2]);
  }

  TEST_CASE("products") {
    auto c = codiscrete_category({"a", "b"});
    auto ct = product(*c, *terminal_category());
    CHECK(ct->num_objects() == 2);
    CHECK(ct->num_morphisms() == c->num_morphisms());
    auto d6 = product(*discrete_category({"a", "b"}), *discrete_category({"x", "y", "z"}));
    CHECK(d6->num_objects() == 6);
    CHECK(d6->is_discrete());
    CHECK(validate_category(*d6).ok());
  }

  TEST_CASE("iso classes of a product multiply") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      auto c = random_category(rng, 4);
      auto d = random_category(rng, 4);
      auto cd = product(*c, *d);
      CHECK(validate_category(*cd).ok());
      CHECK(iso_classes(*cd).count == count_classes(*c) * count_classes(*d));
    }
  }

  TEST_CASE("natural isomorphism checks") {
    auto c = product(*codiscrete_category({"a", "b"}), *cyclic_group_category(2));
    auto id = identity_functor(c);
    std::vector<Id> ids;
    for (Id x = 0; x < static_cast<Id>(c->num_objects()); ++x) ids.push_back(c->identity(x));
    CHECK(verify_nat_iso(id, id, ids));

    // (id, 1) at the first object and identities elsewhere.
    std::vector<Id> bad = ids;
    Id twist = kNone;
    for (Id f : c->hom(0, 0))
      if (f != c->identity(0)) twist = f;
    bad[0] = twist;
    auto v = verify_nat_iso(id, id, bad);
    CHECK_FALSE(v);
    CHECK(v.witness.find("naturality square at") == 0);

    CHECK_THROWS_AS(verify_nat_iso(id, id, std::vector<Id>{ids[0]}), InputError);
  }

  TEST_CASE("equivalences compose and induce bijections on classes") {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int t = 0; t < 30; ++t) {
      auto g = random_groupoid(rng);
      auto k = iso_classes(*g);
      std::vector<Id> origin;
      auto sk = full_subcategory(*g, k.representative, &origin);
      FinFunctor inc{sk, g, k.representative, origin};
      FinFunctor inc_id = compose_functors(identity_functor(g), inc);
      REQUIRE(is_equivalence(inc));
      CHECK(brute_equivalence(inc_id));
      CHECK(is_equivalence(inc_id));
      auto on = induced_on_classes(inc);
      std::set<Id> hit(on.begin(), on.end());
      CHECK(hit.size() == on.size());
      CHECK(on.size() == g->num_iso_classes());
      ++checked;
    }
    CHECK(checked == 30);
  }

  TEST_CASE("groupoid morphisms have exactly one inverse") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
      auto g = random_groupoid(rng);
      REQUIRE(g->is_groupoid());
      for (Id f = 0; f < static_cast<Id>(g->num_morphisms()); ++f) {
        int inverses = 0;
        for (Id h = 0; h < static_cast<Id>(g->num_morphisms()); ++h)
          if (g->source(h) == g->target(f) && g->target(h) == g->source(f) &&
              g->compose(h, f) == g->identity(g->source(f)) && g->compose(f, h) == g->identity(g->target(f)))
            ++inverses;
        CHECK(inverses == 1);
        CHECK(g->inverse(f) != kNone);
      }
    }
  }
}
