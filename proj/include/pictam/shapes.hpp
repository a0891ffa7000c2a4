#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pictam {

// Subsets of {1..n} as bitmasks: element i is bit (i-1).
using Subset = std::uint32_t;

Subset subset_of(const std::vector<int>& elements);
std::vector<int> elements_of(Subset s);
std::string subset_name(Subset s);
inline int subset_size(Subset s) { return __builtin_popcount(s); }
inline Subset full_subset(int n) { return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1; }
// Nonempty subsets of {1..n} sorted by (size, lexicographic element list).
std::vector<Subset> ordered_subsets(int n, bool include_empty = false);
// The interval [lo, hi] of {1..n}; empty when lo > hi.
Subset interval(int lo, int hi);
bool is_convex(Subset s);

// Monotone map [m] -> [n], values[i] for i in 0..m.
struct DeltaMap {
  int m = 0, n = 0;
  std::vector<int> values;

  int operator()(int i) const { return values[i]; }
  bool operator==(const DeltaMap& o) const { return m == o.m && n == o.n && values == o.values; }
  bool operator<(const DeltaMap& o) const {
    if (m != o.m) return m < o.m;
    if (n != o.n) return n < o.n;
    return values < o.values;
  }
  bool valid() const;
  std::string name() const;
};

// Pointed map <n> -> <m>, values[j] for j in 0..n with values[0] = 0.
struct GammaMap {
  int n = 0, m = 0;
  std::vector<int> values;

  int operator()(int j) const { return values[j]; }
  bool operator==(const GammaMap& o) const { return n == o.n && m == o.m && values == o.values; }
  bool operator<(const GammaMap& o) const {
    if (n != o.n) return n < o.n;
    if (m != o.m) return m < o.m;
    return values < o.values;
  }
  bool valid() const;
  std::string name() const;
  // {j in 1..n : values[j] in K}
  Subset preimage(Subset K) const;
};

DeltaMap delta_identity(int n);
// d^i : [n-1] -> [n], skipping i.
DeltaMap coface(int n, int i);
// s^i : [n+1] -> [n], hitting i twice.
DeltaMap codegeneracy(int n, int i);
// nu^j : [1] -> [k], 0 -> j-1, 1 -> j.
DeltaMap delta_nu(int k, int j);
// b∘a
DeltaMap compose_delta(const DeltaMap& b, const DeltaMap& a);
std::vector<DeltaMap> all_delta_maps(int m, int n);
// All maps among [0]..[top].
std::vector<DeltaMap> all_delta_maps_upto(int top);

struct NamedDelta {
  std::string name;
  DeltaMap map;
};
std::vector<NamedDelta> delta_generators(int n);

GammaMap gamma_identity(int n);
// nu_I : <n> -> <1> with preimage of 1 equal to I.
GammaMap gamma_nu(int n, Subset I);
inline GammaMap gamma_nu_j(int n, int j) { return gamma_nu(n, Subset{1} << (j - 1)); }
// mu_{I,J} : <n> -> <2>, preimage of 1 is I, of 2 is J.
GammaMap gamma_mu(int n, Subset I, Subset J);
GammaMap gamma_mult();    // m : <2> -> <1>
GammaMap gamma_twist();   // tau : <2> -> <2>
GammaMap gamma_iota(int j);  // iota_j : <1> -> <2>, 1 -> j
GammaMap gamma_unit();    // a : <0> -> <1>
GammaMap compose_gamma(const GammaMap& t, const GammaMap& s);  // t∘s
std::vector<GammaMap> all_gamma_maps(int n, int m);
std::vector<GammaMap> all_gamma_maps_upto(int top);

struct NamedGamma {
  std::string name;
  GammaMap map;
};
std::vector<NamedGamma> gamma_generators(int n);

// alpha : [m] -> [n] gives <n> -> <m>, j -> i when alpha(i-1) < j <= alpha(i).
GammaMap phi(const DeltaMap& alpha);

// Factorization of a Delta-map into generators, listed in the order they act
// contravariantly on a simplicial object: X(alpha) = X(g_last)∘...∘X(g_first)
// with the first entry applied first.
struct DeltaStep {
  bool face;  // true: d_i (face), false: s_i (degeneracy)
  int index;
  int from_rank;  // rank of the level the step is applied to
};
std::vector<DeltaStep> simplicial_word(const DeltaMap& alpha);

}  // namespace pictam
