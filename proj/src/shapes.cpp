#include "pictam/shapes.hpp"

#include <algorithm>
#include <stdexcept>

#include "pictam/common.hpp"

namespace pictam {

Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) {
    if (e < 1 || e > 31) throw InputError("subset element out of range");
    s |= Subset{1} << (e - 1);
  }
  return s;
}

std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  for (int i = 1; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

std::string subset_name(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : elements_of(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::vector<Subset> ordered_subsets(int n, bool include_empty) {
  std::vector<Subset> out;
  for (Subset s = include_empty ? 0 : 1; s <= full_subset(n); ++s) out.push_back(s);
  std::sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    return elements_of(a) < elements_of(b);
  });
  return out;
}

Subset interval(int lo, int hi) {
  Subset s = 0;
  for (int i = lo; i <= hi; ++i) s |= Subset{1} << (i - 1);
  return s;
}

bool is_convex(Subset s) {
  if (!s) return true;
  Subset low = s >> __builtin_ctz(s);
  return (low & (low + 1)) == 0;
}

bool DeltaMap::valid() const {
  if (m < 0 || n < 0 || static_cast<int>(values.size()) != m + 1) return false;
  for (int i = 0; i <= m; ++i) {
    if (values[i] < 0 || values[i] > n) return false;
    if (i && values[i - 1] > values[i]) return false;
  }
  return true;
}

std::string DeltaMap::name() const {
  std::string out = "[" + std::to_string(m) + "]->[" + std::to_string(n) + "](";
  for (int i = 0; i <= m; ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out + ")";
}

bool GammaMap::valid() const {
  if (n < 0 || m < 0 || static_cast<int>(values.size()) != n + 1 || values[0] != 0) return false;
  for (int v : values)
    if (v < 0 || v > m) return false;
  return true;
}

std::string GammaMap::name() const {
  std::string out = "<" + std::to_string(n) + ">-><" + std::to_string(m) + ">(";
  for (int j = 1; j <= n; ++j) out += (j > 1 ? "," : "") + std::to_string(values[j]);
  return out + ")";
}

Subset GammaMap::preimage(Subset K) const {
  Subset out = 0;
  for (int j = 1; j <= n; ++j)
    if (values[j] && (K >> (values[j] - 1) & 1)) out |= Subset{1} << (j - 1);
  return out;
}

DeltaMap delta_identity(int n) {
  DeltaMap d{n, n, std::vector<int>(n + 1)};
  for (int i = 0; i <= n; ++i) d.values[i] = i;
  return d;
}

DeltaMap coface(int n, int i) {
  if (n < 1 || i < 0 || i > n) throw InputError("coface index out of range");
  DeltaMap d{n - 1, n, {}};
  for (int k = 0; k <= n - 1; ++k) d.values.push_back(k < i ? k : k + 1);
  return d;
}

DeltaMap codegeneracy(int n, int i) {
  if (n < 0 || i < 0 || i > n) throw InputError("codegeneracy index out of range");
  DeltaMap d{n + 1, n, {}};
  for (int k = 0; k <= n + 1; ++k) d.values.push_back(k <= i ? k : k - 1);
  return d;
}

DeltaMap delta_nu(int k, int j) {
  if (j < 1 || j > k) throw InputError("nu index out of range");
  return DeltaMap{1, k, {j - 1, j}};
}

DeltaMap compose_delta(const DeltaMap& b, const DeltaMap& a) {
  if (a.n != b.m) throw InputError("compose_delta: rank mismatch");
  DeltaMap c{a.m, b.n, std::vector<int>(a.m + 1)};
  for (int i = 0; i <= a.m; ++i) c.values[i] = b.values[a.values[i]];
  return c;
}

std::vector<DeltaMap> all_delta_maps(int m, int n) {
  std::vector<DeltaMap> out;
  std::vector<int> v(m + 1, 0);
  while (true) {
    out.push_back({m, n, v});
    int i = m;
    while (i >= 0 && v[i] == n) --i;
    if (i < 0) break;
    ++v[i];
    for (int k = i + 1; k <= m; ++k) v[k] = v[i];
  }
  return out;
}

std::vector<DeltaMap> all_delta_maps_upto(int top) {
  std::vector<DeltaMap> out;
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= top; ++n)
      for (auto& d : all_delta_maps(m, n)) out.push_back(std::move(d));
  return out;
}

std::vector<NamedDelta> delta_generators(int n) {
  std::vector<NamedDelta> out;
  if (n >= 1)
    for (int i = 0; i <= n; ++i) out.push_back({"d^" + std::to_string(i), coface(n, i)});
  for (int i = 0; i <= n; ++i) out.push_back({"s^" + std::to_string(i), codegeneracy(n, i)});
  for (int j = 1; j <= n; ++j) out.push_back({"nu^" + std::to_string(j), delta_nu(n, j)});
  return out;
}

GammaMap gamma_identity(int n) {
  GammaMap g{n, n, std::vector<int>(n + 1)};
  for (int j = 0; j <= n; ++j) g.values[j] = j;
  return g;
}

GammaMap gamma_nu(int n, Subset I) {
  if (I & ~full_subset(n)) throw InputError("nu_I: subset not contained in {1..n}");
  GammaMap g{n, 1, std::vector<int>(n + 1, 0)};
  for (int j = 1; j <= n; ++j) g.values[j] = (I >> (j - 1)) & 1;
  return g;
}

GammaMap gamma_mu(int n, Subset I, Subset J) {
  if (I & J) throw InputError("mu_{I,J}: subsets overlap");
  if ((I | J) & ~full_subset(n)) throw InputError("mu_{I,J}: subset not contained in {1..n}");
  GammaMap g{n, 2, std::vector<int>(n + 1, 0)};
  for (int j = 1; j <= n; ++j) {
    if ((I >> (j - 1)) & 1) g.values[j] = 1;
    if ((J >> (j - 1)) & 1) g.values[j] = 2;
  }
  return g;
}

GammaMap gamma_mult() { return {2, 1, {0, 1, 1}}; }
GammaMap gamma_twist() { return {2, 2, {0, 2, 1}}; }
GammaMap gamma_iota(int j) {
  if (j != 1 && j != 2) throw InputError("iota index must be 1 or 2");
  return {1, 2, {0, j}};
}
GammaMap gamma_unit() { return {0, 1, {0}}; }

GammaMap compose_gamma(const GammaMap& t, const GammaMap& s) {
  if (s.m != t.n) throw InputError("compose_gamma: rank mismatch");
  GammaMap c{s.n, t.m, std::vector<int>(s.n + 1)};
  for (int j = 0; j <= s.n; ++j) c.values[j] = t.values[s.values[j]];
  return c;
}

std::vector<GammaMap> all_gamma_maps(int n, int m) {
  std::vector<GammaMap> out;
  std::vector<int> v(n + 1, 0);
  while (true) {
    out.push_back({n, m, v});
    int j = n;
    while (j >= 1 && v[j] == m) v[j--] = 0;
    if (j < 1) break;
    ++v[j];
  }
  return out;
}

std::vector<GammaMap> all_gamma_maps_upto(int top) {
  std::vector<GammaMap> out;
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m)
      for (auto& g : all_gamma_maps(n, m)) out.push_back(std::move(g));
  return out;
}

std::vector<NamedGamma> gamma_generators(int n) {
  std::vector<NamedGamma> out;
  for (int j = 1; j <= n; ++j) out.push_back({"nu_" + std::to_string(j), gamma_nu_j(n, j)});
  for (Subset I : ordered_subsets(n, true)) out.push_back({"nu_" + subset_name(I), gamma_nu(n, I)});
  for (Subset I : ordered_subsets(n, true))
    for (Subset J : ordered_subsets(n, true))
      if (!(I & J))
        out.push_back({"mu_" + subset_name(I) + subset_name(J), gamma_mu(n, I, J)});
  out.push_back({"m", gamma_mult()});
  out.push_back({"tau", gamma_twist()});
  out.push_back({"iota_1", gamma_iota(1)});
  out.push_back({"iota_2", gamma_iota(2)});
  out.push_back({"a", gamma_unit()});
  return out;
}

GammaMap phi(const DeltaMap& alpha) {
  GammaMap g{alpha.n, alpha.m, std::vector<int>(alpha.n + 1, 0)};
  for (int i = 1; i <= alpha.m; ++i)
    for (int j = alpha.values[i - 1] + 1; j <= alpha.values[i]; ++j) g.values[j] = i;
  return g;
}

std::vector<DeltaStep> simplicial_word(const DeltaMap& alpha) {
  const int m = alpha.m, n = alpha.n;
  std::vector<char> hit(n + 1, 0);
  for (int v : alpha.values) hit[v] = 1;
  for (int i = n; i >= 0; --i) {
    if (hit[i]) continue;
    // alpha = d^i ∘ alpha'
    DeltaMap rest{m, n - 1, alpha.values};
    for (int& v : rest.values)
      if (v > i) --v;
    std::vector<DeltaStep> out{{true, i, n}};
    auto tail = simplicial_word(rest);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }
  for (int j = 0; j < m; ++j) {
    if (alpha.values[j] != alpha.values[j + 1]) continue;
    // alpha = alpha'' ∘ s^j with s^j : [m] -> [m-1]
    DeltaMap rest{m - 1, n, {}};
    for (int k = 0; k <= m; ++k)
      if (k != j + 1) rest.values.push_back(alpha.values[k]);
    auto out = simplicial_word(rest);
    out.push_back({false, j, m - 1});
    return out;
  }
  return {};
}

}  // namespace pictam
