#include <doctest.h>

#include <set>

#include "pictam/generators.hpp"
#include "pictam/picard.hpp"

using namespace pictam;

namespace {

// Split model on A with automorphism labels B whose symmetry is read from
// an arbitrary table, bypassing the checks of build_split.
PicPtr with_symmetry(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b, const BilinearForm& beta) {
  auto base = build_split(a, b, zero_form(a));
  auto p = std::make_shared<PicardCategory>(*base);
  p->split.reset();
  const int n = a.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) p->sym[x * n + y] = split_morphism(*base, a.add(x, y), beta[x * n + y]);
  return p;
}

bool admissible(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b, const BilinearForm& beta) {
  const int n = a.size();
  auto bt = [&](int x, int y) { return beta[x * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (b.add(bt(x, y), bt(y, x)) != 0) return false;
      for (int z = 0; z < n; ++z) {
        if (bt(a.add(x, y), z) != b.add(bt(x, z), bt(y, z))) return false;
        if (bt(x, a.add(y, z)) != b.add(bt(x, y), bt(x, z))) return false;
      }
    }
  return true;
}

std::vector<BilinearForm> all_tables(int cells, int values) {
  std::vector<BilinearForm> out(1, BilinearForm(cells, 0));
  for (int c = 0; c < cells; ++c) {
    std::vector<BilinearForm> next;
    for (const auto& t : out)
      for (int v = 0; v < values; ++v) {
        auto u = t;
        u[c] = v;
        next.push_back(u);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_SUITE("picard") {
  TEST_CASE("trivial Picard category") {
    auto p = trivial_picard();
    CHECK(validate_picard(*p).ok());
    auto inv = pi_invariants(*p);
    CHECK(inv.pi0.size() == 1);
    CHECK(inv.pi1.size() == 1);
    CHECK(inv.q == std::vector<int>{0});
    CHECK(inv.checks.ok());
  }

  TEST_CASE("corpus instances are valid") {
    auto names = corpus_names();
    auto ps = corpus();
    REQUIRE(names.size() == 6);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      CAPTURE(names[i]);
      CHECK(ps[i]->label == names[i]);
      CHECK(validate_picard(*ps[i]).ok());
    }
    CHECK_THROWS_AS(corpus_instance("split(Z/5,0,0)"), InputError);
  }

  TEST_CASE("split models") {
    auto z2 = cyclic_group(2);
    auto disc = build_split(z2, trivial_group(), zero_form(z2));
    CHECK(disc->num_objects() == 2);
    CHECK(disc->cat->is_discrete());
    auto one = build_split(trivial_group(), z2, zero_form(trivial_group()));
    CHECK(one->num_objects() == 1);
    CHECK(one->num_morphisms() == 2);
    auto beta = build_split(z2, z2, product_form_z2());
    CHECK(validate_picard(*beta).ok());
    CHECK(beta->gamma(1, 1) == split_morphism(*beta, 0, 1));
    CHECK(beta->gamma(1, 1) != beta->id(0));
    CHECK_THROWS_AS(build_split(z2, cyclic_group(3), BilinearForm{0, 0, 0, 1}), InputError);
  }

  TEST_CASE("symmetry tables: validity agrees with bi-additivity and antisymmetry") {
    struct Shape {
      FiniteAbelianGroup a, b;
    };
    int valid = 0, total = 0;
    for (const auto& s : {Shape{cyclic_group(2), cyclic_group(2)}, Shape{cyclic_group(3), cyclic_group(2)},
                          Shape{cyclic_group(2), cyclic_group(3)}}) {
      for (const auto& beta : all_tables(s.a.size() * s.a.size(), s.b.size())) {
        auto p = with_symmetry(s.a, s.b, beta);
        bool expect = admissible(s.a, s.b, beta);
        CHECK(validate_picard(*p).ok() == expect);
        valid += expect;
        ++total;
      }
    }
    // Z/2 x Z/2 -> Z/2: 0 and xy; the other shapes: only 0.
    CHECK(valid == 4);
    CHECK(total == 16 + 512 + 81);
  }

  TEST_CASE("broken involution is reported") {
    auto a = cyclic_group(2), b = cyclic_group(3);
    auto p = std::make_shared<PicardCategory>(*build_split(a, b, zero_form(a)));
    p->sym[1 * 2 + 1] = split_morphism(*p, 0, 1);
    auto r = validate_picard(*p);
    CHECK_FALSE(r.ok());
    REQUIRE(r.has("symmetry_involution"));
    for (const auto& v : r.violations())
      if (v.condition == "symmetry_involution") CHECK(v.witness == "(1,1)");
  }

  TEST_CASE("nontrivial associator breaks the pentagon") {
    auto z2 = cyclic_group(2);
    auto p = std::make_shared<PicardCategory>(*build_split(trivial_group(), z2, zero_form(trivial_group())));
    p->assoc[0] = split_morphism(*p, 0, 1);
    auto r = validate_picard(*p);
    CHECK(r.has("pentagon"));
    CHECK(r.has("triangle"));
  }

  TEST_CASE("missing component is structural") {
    auto p = std::make_shared<PicardCategory>(*corpus_instance("split(Z/2,0,0)"));
    p->sym[3] = kNone;
    auto r = validate_picard(*p);
    CHECK(r.has("symmetry_missing"));
  }

  TEST_CASE("invariants of split models") {
    auto z2 = cyclic_group(2), z3 = cyclic_group(3);
    auto beta = pi_invariants(*build_split(z2, z2, product_form_z2()));
    CHECK(beta.checks.ok());
    CHECK(beta.pi0.size() == 2);
    CHECK(beta.pi1.size() == 2);
    CHECK(beta.q[0] == 0);
    CHECK(beta.q[1] == 1);

    auto p = build_split(z3, z2, zero_form(z3));
    auto inv = pi_invariants(*p);
    CHECK(inv.pi0.size() == 3);
    CHECK(inv.pi1.size() == 2);
    CHECK(inv.q == std::vector<int>{0, 0, 0});
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(inv.pi0_table[i][j] == (i + j) % 3);
        CHECK(inv.pi0_table[i][j] == inv.pi0_table[j][i]);
      }
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) CHECK(inv.pi1_table[i][j] == (i + j) % 2);
  }

  TEST_CASE("q has order two and pi0 is abelian on the corpus") {
    for (const auto& p : corpus()) {
      auto inv = pi_invariants(*p);
      CHECK(inv.checks.ok());
      for (int qv : inv.q) CHECK(inv.pi1_table[qv][qv] == 0);
      for (std::size_t i = 0; i < inv.pi0.size(); ++i)
        for (std::size_t j = 0; j < inv.pi0.size(); ++j) CHECK(inv.pi0_table[i][j] == inv.pi0_table[j][i]);
    }
  }

  TEST_CASE("monoidal functors") {
    for (const auto& p : corpus()) {
      CAPTURE(p->label);
      CHECK(validate_monoidal_functor(identity_monoidal(p)).ok());
      auto gen = generated_monoidal_functors(p);
      CHECK(gen.size() >= 2);
      for (const auto& g : gen) {
        CAPTURE(g.name);
        CHECK(validate_monoidal_functor(g.functor).ok());
      }
    }
    auto z3 = cyclic_group(3);
    auto p = build_split(z3, trivial_group(), zero_form(z3));
    auto neg = split_functor(p, p, {0, 2, 1}, {0});
    CHECK(validate_monoidal_functor(neg).ok());
    CHECK(is_isomorphism_of_categories(neg.functor));
    CHECK_THROWS_AS(split_functor(p, p, {0, 1, 1}, {0}), InputError);
  }

  TEST_CASE("broken compatibility component is reported") {
    auto z2 = cyclic_group(2);
    auto p = build_split(trivial_group(), z2, zero_form(trivial_group()));
    auto f = identity_monoidal(p);
    f.psi[0] = split_morphism(*p, 0, 1);
    auto r = validate_monoidal_functor(f);
    CHECK_FALSE(r.ok());
    CHECK(r.has("psi_left_unit"));
  }

  TEST_CASE("unit must be preserved strictly") {
    auto z2 = cyclic_group(2);
    auto p = build_split(z2, trivial_group(), zero_form(z2));
    MonoidalFunctor f{p, p, FinFunctor{p->cat, p->cat, {1, 0}, {1, 0}}, {}};
    auto r = validate_monoidal_functor(f);
    CHECK(r.has("unit_strict"));
    CHECK(r.violations().size() == 1);
  }
}
