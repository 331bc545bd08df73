#include "smashprime/catalog.hpp"

#include <algorithm>
#include <array>

namespace smashprime {

void verify_group_table(const GroupTable& g) {
  const std::size_t n = g.order;
  if (n == 0 || g.table.size() != n) throw_input("group table has wrong shape");
  for (const auto& row : g.table) {
    if (row.size() != n) throw_input("group table has wrong shape");
    for (auto v : row)
      if (v >= n) throw_input("group table entry out of range");
  }
  for (std::size_t i = 0; i < n; ++i)
    if (g.table[g.identity][i] != i || g.table[i][g.identity] != i)
      throw_input("group identity law fails");
  if (g.inverse.size() != n) throw_input("group inverse vector has wrong length");
  for (std::size_t i = 0; i < n; ++i)
    if (g.table[i][g.inverse[i]] != g.identity || g.table[g.inverse[i]][i] != g.identity)
      throw_input("group inverse law fails");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]])
          throw_input("group associativity fails");
}

namespace {

void fill_inverses(GroupTable& g) {
  g.inverse.assign(g.order, 0);
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j)
      if (g.table[i][j] == g.identity) g.inverse[i] = j;
}

}  // namespace

GroupTable GroupTable::cyclic(std::size_t n) {
  GroupTable g;
  g.name = "C" + std::to_string(n);
  g.order = n;
  g.identity = 0;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  for (std::size_t i = 0; i < n; ++i)
    g.labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
  fill_inverses(g);
  verify_group_table(g);
  return g;
}

GroupTable GroupTable::klein_four() {
  GroupTable g;
  g.name = "C2xC2";
  g.order = 4;
  g.identity = 0;
  g.table.assign(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g.table[i][j] = i ^ j;
  g.labels = {"1", "x", "y", "xy"};
  fill_inverses(g);
  verify_group_table(g);
  return g;
}

GroupTable GroupTable::symmetric3() {
  // elements are the permutations of {0,1,2} in lexicographic one-line order
  const std::array<std::array<std::size_t, 3>, 6> perms = {
      {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  auto index_of = [&](const std::array<std::size_t, 3>& p) {
    for (std::size_t i = 0; i < 6; ++i)
      if (perms[i] == p) return i;
    throw_internal("permutation lookup failed");
  };
  GroupTable g;
  g.name = "S3";
  g.order = 6;
  g.identity = 0;
  g.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> comp{};
      for (std::size_t x = 0; x < 3; ++x) comp[x] = perms[i][perms[j][x]];
      g.table[i][j] = index_of(comp);
    }
  g.labels = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
  fill_inverses(g);
  verify_group_table(g);
  return g;
}

HopfAlgebra group_algebra(FieldSpec f, const GroupTable& g) {
  verify_group_table(g);
  const std::size_t n = g.order;
  std::vector<Vec> mult(n * n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i * n + j][g.table[i][j]] = Scalar::one(f);
  Algebra alg(f, n, std::move(mult), unit_vec(f, n, g.identity), g.labels);
  Coalgebra co;
  co.dim = n;
  co.comult.assign(n, zero_vec(f, n * n));
  for (std::size_t i = 0; i < n; ++i) co.comult[i][i * n + i] = Scalar::one(f);
  co.counit = Vec(n, Scalar::one(f));
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) s.at(g.inverse[i], i) = Scalar::one(f);
  return make_hopf(std::move(alg), std::move(co), s);
}

HopfAlgebra dual_group_algebra(FieldSpec f, const GroupTable& g) {
  verify_group_table(g);
  const std::size_t n = g.order;
  std::vector<Vec> mult(n * n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i) mult[i * n + i][i] = Scalar::one(f);
  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("p_" + l);
  Algebra alg(f, n, std::move(mult), Vec(n, Scalar::one(f)), labels);
  Coalgebra co;
  co.dim = n;
  co.comult.assign(n, zero_vec(f, n * n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) co.comult[g.table[x][y]][x * n + y] = Scalar::one(f);
  co.counit = unit_vec(f, n, g.identity);
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) s.at(g.inverse[i], i) = Scalar::one(f);
  return make_hopf(std::move(alg), std::move(co), s);
}

HopfAlgebra sweedler_h4(FieldSpec f) {
  if (f.characteristic() == 2) throw_input("Sweedler H4 requires characteristic != 2");
  const std::size_t n = 4;  // basis {1, g, x, gx}
  std::vector<Vec> mult(n * n, zero_vec(f, n));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long c) {
    mult[i * n + j][k] = Scalar::from_int(f, c);
  };
  for (std::size_t j = 0; j < n; ++j) {
    set(0, j, j, 1);
    if (j != 0) set(j, 0, j, 1);
  }
  set(1, 1, 0, 1);   // g g = 1
  set(1, 2, 3, 1);   // g x = gx
  set(1, 3, 2, 1);   // g gx = x
  set(2, 1, 3, -1);  // x g = -gx
  set(3, 1, 2, -1);  // gx g = -x
  // x x = x gx = gx x = gx gx = 0
  Algebra alg(f, n, std::move(mult), unit_vec(f, n, 0), {"1", "g", "x", "gx"});
  Coalgebra co;
  co.dim = n;
  co.comult.assign(n, zero_vec(f, n * n));
  co.comult[0][0 * n + 0] = Scalar::one(f);
  co.comult[1][1 * n + 1] = Scalar::one(f);
  co.comult[2][2 * n + 0] = Scalar::one(f);  // Delta x = x (x) 1 + g (x) x
  co.comult[2][1 * n + 2] = Scalar::one(f);
  co.comult[3][3 * n + 1] = Scalar::one(f);  // Delta gx = gx (x) g + 1 (x) gx
  co.comult[3][0 * n + 3] = Scalar::one(f);
  co.counit = zero_vec(f, n);
  co.counit[0] = Scalar::one(f);
  co.counit[1] = Scalar::one(f);
  return make_hopf(std::move(alg), std::move(co));
}

namespace {

Algebra product_algebra(FieldSpec f, std::size_t n) {
  std::vector<Vec> mult(n * n, zero_vec(f, n));
  for (std::size_t i = 0; i < n; ++i) mult[i * n + i][i] = Scalar::one(f);
  return Algebra(f, n, std::move(mult), Vec(n, Scalar::one(f)));
}

HModuleAlgebra finish_module_algebra(HopfAlgebra h, Algebra a, std::vector<Matrix> action) {
  HModuleAlgebra ma{std::move(h), std::move(a), std::move(action)};
  CheckReport rep = verify_module_algebra(ma);
  if (!rep.ok()) throw_input("invalid module algebra: " + rep.summary());
  return ma;
}

}  // namespace

HModuleAlgebra permutation_module_algebra(FieldSpec f, const GroupTable& g, std::size_t set_size,
                                          const std::vector<std::vector<std::size_t>>& action) {
  if (action.size() != g.order) throw_input("permutation action has wrong size");
  for (const auto& perm : action) {
    if (perm.size() != set_size) throw_input("permutation has wrong length");
    std::vector<bool> seen(set_size, false);
    for (auto v : perm) {
      if (v >= set_size || seen[v]) throw_input("action map is not a permutation");
      seen[v] = true;
    }
  }
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t j = 0; j < g.order; ++j)
      for (std::size_t x = 0; x < set_size; ++x)
        if (action[g.table[i][j]][x] != action[i][action[j][x]])
          throw_input("action map is not a group homomorphism");
  HopfAlgebra h = group_algebra(f, g);
  Algebra a = product_algebra(f, set_size);
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < g.order; ++i) {
    Matrix p(f, set_size, set_size);
    for (std::size_t x = 0; x < set_size; ++x) p.at(action[i][x], x) = Scalar::one(f);
    rho.push_back(std::move(p));
  }
  return finish_module_algebra(std::move(h), std::move(a), std::move(rho));
}

HModuleAlgebra regular_module_algebra(FieldSpec f, const GroupTable& g) {
  HopfAlgebra h = dual_group_algebra(f, g);
  Algebra a = group_algebra(f, g).algebra;
  std::vector<Matrix> rho;
  for (std::size_t i = 0; i < g.order; ++i) {
    Matrix d(f, g.order, g.order);
    d.at(i, i) = Scalar::one(f);
    rho.push_back(std::move(d));
  }
  return finish_module_algebra(std::move(h), std::move(a), std::move(rho));
}

Algebra dual_numbers(FieldSpec f) {
  std::vector<Vec> mult(4, zero_vec(f, 2));
  mult[0 * 2 + 0][0] = Scalar::one(f);  // 1*1
  mult[0 * 2 + 1][1] = Scalar::one(f);  // 1*x
  mult[1 * 2 + 0][1] = Scalar::one(f);  // x*1
  // x*x = 0
  return Algebra(f, 2, std::move(mult), unit_vec(f, 2, 0), {"1", "x"});
}

Algebra matrix_algebra(FieldSpec f, std::size_t n) {
  const std::size_t d = n * n;  // basis E_{rc} at index r*n + c
  std::vector<Vec> mult(d * d, zero_vec(f, d));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r2 = 0; r2 < n; ++r2)
        for (std::size_t c2 = 0; c2 < n; ++c2)
          if (c == r2) mult[(r * n + c) * d + (r2 * n + c2)][r * n + c2] = Scalar::one(f);
  Vec unit = zero_vec(f, d);
  for (std::size_t r = 0; r < n; ++r) unit[r * n + r] = Scalar::one(f);
  return Algebra(f, d, std::move(mult), std::move(unit));
}

HModuleAlgebra trivial_module_algebra(HopfAlgebra h, Algebra a) {
  std::vector<Matrix> rho;
  const std::size_t n = a.dim();
  for (std::size_t j = 0; j < h.dim(); ++j) {
    Matrix m(a.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = h.coalgebra.counit[j];
    rho.push_back(std::move(m));
  }
  return finish_module_algebra(std::move(h), std::move(a), std::move(rho));
}

HModuleAlgebra sweedler_dual_numbers(FieldSpec f) {
  HopfAlgebra h = sweedler_h4(f);
  Algebra a = dual_numbers(f);
  // rho(g) = diag(1,-1); rho(x): x -> 1, 1 -> 0; rho(gx) = rho(g) rho(x)
  Matrix id = Matrix::identity(f, 2);
  Matrix rg(f, 2, 2);
  rg.at(0, 0) = Scalar::one(f);
  rg.at(1, 1) = Scalar::from_int(f, -1);
  Matrix rx(f, 2, 2);
  rx.at(0, 1) = Scalar::one(f);
  Matrix rgx = rg * rx;
  return finish_module_algebra(std::move(h), std::move(a), {id, rg, rx, rgx});
}

std::vector<NegativeControl> negative_controls() {
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f2 = FieldSpec::prime(2);
  std::vector<NegativeControl> out;
  out.push_back({"nil2", trivial_module_algebra(group_algebra(q, GroupTable::cyclic(2)), dual_numbers(q)),
                 "A_not_semiprime"});
  std::vector<Vec> unit_mult{Vec{Scalar::one(f2)}};
  Algebra f2alg(f2, 1, std::move(unit_mult), Vec{Scalar::one(f2)});
  out.push_back({"f2triv", trivial_module_algebra(group_algebra(f2, GroupTable::cyclic(2)), std::move(f2alg)),
                 "H_not_semisimple"});
  return out;
}

namespace {

std::vector<std::vector<std::size_t>> regular_permutation_action(const GroupTable& g) {
  std::vector<std::vector<std::size_t>> act(g.order, std::vector<std::size_t>(g.order));
  for (std::size_t i = 0; i < g.order; ++i)
    for (std::size_t x = 0; x < g.order; ++x) act[i][x] = g.table[i][x];
  return act;
}

}  // namespace

const std::vector<CatalogHopf>& catalog_hopfs() {
  static const std::vector<CatalogHopf> entries = [] {
    FieldSpec q = FieldSpec::rationals();
    FieldSpec f2 = FieldSpec::prime(2);
    std::vector<CatalogHopf> v;
    v.push_back({"Q[C2]", [q] { return group_algebra(q, GroupTable::cyclic(2)); }});
    v.push_back({"Q[C3]", [q] { return group_algebra(q, GroupTable::cyclic(3)); }});
    v.push_back({"Q[C4]", [q] { return group_algebra(q, GroupTable::cyclic(4)); }});
    v.push_back({"Q[C2xC2]", [q] { return group_algebra(q, GroupTable::klein_four()); }});
    v.push_back({"Q[S3]", [q] { return group_algebra(q, GroupTable::symmetric3()); }});
    v.push_back({"F2[C2]", [f2] { return group_algebra(f2, GroupTable::cyclic(2)); }});
    v.push_back({"Q^C2", [q] { return dual_group_algebra(q, GroupTable::cyclic(2)); }});
    v.push_back({"Q^C3", [q] { return dual_group_algebra(q, GroupTable::cyclic(3)); }});
    v.push_back({"Q^S3", [q] { return dual_group_algebra(q, GroupTable::symmetric3()); }});
    v.push_back({"F2^C2", [f2] { return dual_group_algebra(f2, GroupTable::cyclic(2)); }});
    v.push_back({"sweedler4", [q] { return sweedler_h4(q); }});
    return v;
  }();
  return entries;
}

const std::vector<CatalogMA>& catalog_module_algebras() {
  static const std::vector<CatalogMA> entries = [] {
    FieldSpec q = FieldSpec::rationals();
    std::vector<CatalogMA> v;
    v.push_back({"triv1", [q] {
                   std::vector<Vec> m{Vec{Scalar::one(q)}};
                   Algebra a(q, 1, std::move(m), Vec{Scalar::one(q)});
                   return trivial_module_algebra(group_algebra(q, GroupTable::cyclic(2)), std::move(a));
                 }});
    v.push_back({"swap2", [q] {
                   return permutation_module_algebra(q, GroupTable::cyclic(2), 2, {{0, 1}, {1, 0}});
                 }});
    v.push_back({"swap3", [q] {
                   return permutation_module_algebra(q, GroupTable::cyclic(2), 3, {{0, 1, 2}, {1, 0, 2}});
                 }});
    v.push_back({"s3nat", [q] {
                   GroupTable g = GroupTable::symmetric3();
                   // natural action: g_i moves coordinate x to perm_i(x)
                   const std::array<std::array<std::size_t, 3>, 6> perms = {
                       {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
                   std::vector<std::vector<std::size_t>> act;
                   for (const auto& p : perms) act.push_back({p[0], p[1], p[2]});
                   return permutation_module_algebra(q, g, 3, act);
                 }});
    v.push_back({"c4rot", [q] {
                   GroupTable g = GroupTable::cyclic(4);
                   return permutation_module_algebra(q, g, 4, regular_permutation_action(g));
                 }});
    v.push_back({"v4perm", [q] {
                   GroupTable g = GroupTable::klein_four();
                   return permutation_module_algebra(q, g, 4, regular_permutation_action(g));
                 }});
    v.push_back({"regC2", [q] { return regular_module_algebra(q, GroupTable::cyclic(2)); }});
    v.push_back({"regC3", [q] { return regular_module_algebra(q, GroupTable::cyclic(3)); }});
    v.push_back({"regS3", [q] { return regular_module_algebra(q, GroupTable::symmetric3()); }});
    v.push_back({"mat2triv", [q] {
                   return trivial_module_algebra(group_algebra(q, GroupTable::cyclic(2)), matrix_algebra(q, 2));
                 }});
    v.push_back({"sweedler-x", [q] { return sweedler_dual_numbers(q); }});
    for (auto& nc : negative_controls())
      v.push_back({nc.name, [name = nc.name] {
                     for (auto& c : negative_controls())
                       if (c.name == name) return c.ma;
                     throw_internal("negative control lookup failed");
                   }});
    return v;
  }();
  return entries;
}

HopfAlgebra catalog_hopf(const std::string& name) {
  for (const auto& e : catalog_hopfs())
    if (e.name == name) return e.build();
  throw_input("unknown catalog Hopf algebra '" + name + "'");
}

HModuleAlgebra catalog_ma(const std::string& name) {
  for (const auto& e : catalog_module_algebras())
    if (e.name == name) return e.build();
  throw_input("unknown catalog module algebra '" + name + "'");
}

std::optional<GroupTable> group_table_by_name(const std::string& name) {
  if (name == "C2") return GroupTable::cyclic(2);
  if (name == "C3") return GroupTable::cyclic(3);
  if (name == "C4") return GroupTable::cyclic(4);
  if (name == "C2xC2") return GroupTable::klein_four();
  if (name == "S3") return GroupTable::symmetric3();
  return std::nullopt;
}

}  // namespace smashprime
