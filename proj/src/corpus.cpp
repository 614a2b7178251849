#include "tiverify/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "tiverify/errors.hpp"
#include "tiverify/structure.hpp"

namespace tiv {

namespace {

std::string default_name(const GroupRecipe& r) {
  using Kind = GroupRecipe::Kind;
  switch (r.kind) {
    case Kind::cyclic:
      return "Z" + std::to_string(r.params[0]);
    case Kind::dihedral:
      return "D" + std::to_string(r.params[0]);
    case Kind::dicyclic: {
      int order = 4 * r.params[0];
      if ((order & (order - 1)) == 0) return "Q" + std::to_string(order);
      return "Dic" + std::to_string(r.params[0]);
    }
    case Kind::elementary_abelian:
      return "Z" + std::to_string(r.params[0]) + "^" + std::to_string(r.params[1]);
    case Kind::symmetric:
      return "S" + std::to_string(r.params[0]);
    case Kind::alternating:
      return "A" + std::to_string(r.params[0]);
    case Kind::direct_product:
      return default_name(*r.left) + "x" + default_name(*r.right);
    case Kind::semidirect_product:
      return default_name(*r.left) + ":" + default_name(*r.right);
    case Kind::from_generators:
      return "G";
  }
  return "G";
}

GroupTable build_cyclic(int n, const std::string& name, int max_order) {
  if (n < 1) throw Error("cyclic group order must be >= 1");
  if (n > max_order) throw CapError("group too large");
  if (n == 1) {
    GroupTable g = group_from_generators({}, name);
    return g;
  }
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return group_from_generators({Permutation(std::move(images))}, name, max_order);
}

GroupTable build_dihedral(int ngon, const std::string& name, int max_order) {
  if (ngon < 3) throw Error("dihedral group requires an n-gon with n >= 3");
  std::vector<int> rot(ngon), refl(ngon);
  for (int i = 0; i < ngon; ++i) {
    rot[i] = (i + 1) % ngon;
    refl[i] = (ngon - i) % ngon;
  }
  return group_from_generators({Permutation(rot), Permutation(refl)}, name,
                               max_order);
}

GroupTable build_dicyclic(int n, const std::string& name, int max_order) {
  // <a, b | a^{2n} = 1, b^2 = a^n, b^-1 a b = a^-1>, order 4n.
  if (n < 2) throw Error("dicyclic group requires n >= 2");
  int order = 4 * n;
  if (order > max_order) throw CapError("group too large");
  int two_n = 2 * n;
  auto idx = [&](int i, int j) { return j * two_n + ((i % two_n) + two_n) % two_n; };
  std::vector<int32_t> mul(static_cast<size_t>(order) * order);
  for (int j1 = 0; j1 < 2; ++j1)
    for (int i1 = 0; i1 < two_n; ++i1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int i2 = 0; i2 < two_n; ++i2) {
          int a = idx(i1, j1), b = idx(i2, j2), r;
          if (j1 == 0)
            r = idx(i1 + i2, j2);
          else if (j2 == 0)
            r = idx(i1 - i2, 1);
          else
            r = idx(i1 - i2 + n, 0);
          mul[static_cast<size_t>(a) * order + b] = r;
        }
  return GroupTable::from_mul_table(order, std::move(mul), name,
                                    "dicyclic presentation, order " +
                                        std::to_string(order));
}

GroupTable build_elementary_abelian(int q, int r, const std::string& name,
                                    int max_order) {
  if (r < 1) throw Error("elementary abelian rank must be >= 1");
  long long order = 1;
  for (int t = 0; t < r; ++t) {
    order *= q;
    if (order > max_order) throw CapError("group too large");
  }
  int n = static_cast<int>(order);
  std::vector<int32_t> mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int x = a, y = b, pow = 1, sum = 0;
      for (int t = 0; t < r; ++t) {
        sum += ((x % q + y % q) % q) * pow;
        x /= q;
        y /= q;
        pow *= q;
      }
      mul[static_cast<size_t>(a) * n + b] = sum;
    }
  return GroupTable::from_mul_table(n, std::move(mul), name,
                                    "elementary abelian " + std::to_string(q) +
                                        "^" + std::to_string(r));
}

GroupTable build_symmetric(int n, const std::string& name, int max_order) {
  if (n < 1) throw Error("symmetric group requires n >= 1");
  if (n == 1) return group_from_generators({}, name);
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles("(0 1)", n));
  if (n > 2) {
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    gens.push_back(Permutation(std::move(cyc)));
  }
  return group_from_generators(std::move(gens), name, max_order);
}

GroupTable build_alternating(int n, const std::string& name, int max_order) {
  if (n < 3) throw Error("alternating group requires n >= 3");
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles("(0 1 2)", n));
  if (n > 3) {
    std::vector<int> images(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) images[i] = (i + 1) % n;
    } else {
      images[0] = 0;
      for (int i = 1; i < n; ++i) images[i] = i % (n - 1) + 1;
    }
    gens.push_back(Permutation(std::move(images)));
  }
  return group_from_generators(std::move(gens), name, max_order);
}

using AutoMap = std::vector<int>;  // image of every kernel element

AutoMap compose(const AutoMap& f, const AutoMap& g) {
  AutoMap out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

/// Extends generator images to a full endomorphism of N and validates that
/// it is an automorphism.
AutoMap extend_to_automorphism(const GroupTable& n,
                               const std::vector<int>& kernel_gens,
                               const std::vector<int>& gen_images) {
  AutoMap map(n.order(), -1);
  map[GroupTable::kIdentity] = GroupTable::kIdentity;
  std::vector<int> list{GroupTable::kIdentity};
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < kernel_gens.size(); ++j) {
      int e = n.mul(list[i], kernel_gens[j]);
      int img = n.mul(map[list[i]], gen_images[j]);
      if (map[e] == -1) {
        map[e] = img;
        list.push_back(e);
      } else if (map[e] != img) {
        throw Error("semidirect action: generator images are inconsistent");
      }
    }
  }
  if (static_cast<int>(list.size()) != n.order())
    throw Error("semidirect action: kernel generators do not generate the kernel");

  std::vector<bool> hit(n.order(), false);
  for (int x = 0; x < n.order(); ++x) {
    if (hit[map[x]]) throw Error("semidirect action: image is not an automorphism (not injective)");
    hit[map[x]] = true;
  }
  for (int x = 0; x < n.order(); ++x)
    for (int y = 0; y < n.order(); ++y)
      if (map[n.mul(x, y)] != n.mul(map[x], map[y]))
        throw Error("semidirect action: image is not an automorphism (not multiplicative)");
  return map;
}

}  // namespace

GroupTable semidirect_product_table(const GroupTable& n, const GroupTable& m,
                                    const SemidirectAction& action,
                                    std::string name, int max_order) {
  long long order = static_cast<long long>(n.order()) * m.order();
  if (order > max_order) throw CapError("group too large");
  if (action.acting_generators.size() != action.images.size())
    throw Error("semidirect action: one image list per acting generator required");

  // Automorphism per acting generator, then extension to all of M.
  std::vector<AutoMap> gen_auto;
  for (const auto& images : action.images)
    gen_auto.push_back(extend_to_automorphism(n, action.kernel_generators, images));

  std::vector<AutoMap> alpha(m.order());
  std::vector<bool> known(m.order(), false);
  AutoMap identity_map(n.order());
  for (int i = 0; i < n.order(); ++i) identity_map[i] = i;
  alpha[GroupTable::kIdentity] = identity_map;
  known[GroupTable::kIdentity] = true;
  std::vector<int> list{GroupTable::kIdentity};
  for (size_t i = 0; i < list.size(); ++i) {
    for (size_t j = 0; j < action.acting_generators.size(); ++j) {
      int e = m.mul(list[i], action.acting_generators[j]);
      AutoMap comp = compose(alpha[list[i]], gen_auto[j]);
      if (!known[e]) {
        alpha[e] = std::move(comp);
        known[e] = true;
        list.push_back(e);
      }
    }
  }
  if (static_cast<int>(list.size()) != m.order())
    throw Error("semidirect action: acting generators do not generate the complement");
  for (int m1 = 0; m1 < m.order(); ++m1)
    for (int m2 = 0; m2 < m.order(); ++m2)
      if (alpha[m.mul(m1, m2)] != compose(alpha[m1], alpha[m2]))
        throw Error("semidirect action: not a homomorphism into the automorphism group");

  int o = static_cast<int>(order);
  auto idx = [&](int ni, int mi) { return ni * m.order() + mi; };
  std::vector<int32_t> mul(static_cast<size_t>(o) * o);
  for (int n1 = 0; n1 < n.order(); ++n1)
    for (int m1 = 0; m1 < m.order(); ++m1)
      for (int n2 = 0; n2 < n.order(); ++n2)
        for (int m2 = 0; m2 < m.order(); ++m2)
          mul[static_cast<size_t>(idx(n1, m1)) * o + idx(n2, m2)] =
              idx(n.mul(n1, alpha[m1][n2]), m.mul(m1, m2));
  return GroupTable::from_mul_table(
      o, std::move(mul), std::move(name),
      "semidirect product " + n.name() + " : " + m.name());
}

GroupTable direct_product_table(const GroupTable& a, const GroupTable& b,
                                std::string name, int max_order) {
  long long order = static_cast<long long>(a.order()) * b.order();
  if (order > max_order) throw CapError("group too large");
  int o = static_cast<int>(order);
  std::vector<int32_t> mul(static_cast<size_t>(o) * o);
  auto idx = [&](int x, int y) { return x * b.order() + y; };
  for (int a1 = 0; a1 < a.order(); ++a1)
    for (int b1 = 0; b1 < b.order(); ++b1)
      for (int a2 = 0; a2 < a.order(); ++a2)
        for (int b2 = 0; b2 < b.order(); ++b2)
          mul[static_cast<size_t>(idx(a1, b1)) * o + idx(a2, b2)] =
              idx(a.mul(a1, a2), b.mul(b1, b2));
  return GroupTable::from_mul_table(
      o, std::move(mul), std::move(name),
      "direct product " + a.name() + " x " + b.name());
}

GroupRecipe GroupRecipe::make_cyclic(int n, std::string name) {
  GroupRecipe r{Kind::cyclic, {n}, nullptr, nullptr, std::nullopt, {}, std::move(name)};
  return r;
}
GroupRecipe GroupRecipe::make_dihedral(int ngon, std::string name) {
  return GroupRecipe{Kind::dihedral, {ngon}, nullptr, nullptr, std::nullopt, {}, std::move(name)};
}
GroupRecipe GroupRecipe::make_dicyclic(int n, std::string name) {
  return GroupRecipe{Kind::dicyclic, {n}, nullptr, nullptr, std::nullopt, {}, std::move(name)};
}
GroupRecipe GroupRecipe::make_elementary_abelian(int q, int r, std::string name) {
  return GroupRecipe{Kind::elementary_abelian, {q, r}, nullptr, nullptr, std::nullopt, {}, std::move(name)};
}
GroupRecipe GroupRecipe::make_symmetric(int n, std::string name) {
  return GroupRecipe{Kind::symmetric, {n}, nullptr, nullptr, std::nullopt, {}, std::move(name)};
}
GroupRecipe GroupRecipe::make_alternating(int n, std::string name) {
  return GroupRecipe{Kind::alternating, {n}, nullptr, nullptr, std::nullopt, {}, std::move(name)};
}
GroupRecipe GroupRecipe::make_direct_product(GroupRecipe a, GroupRecipe b,
                                             std::string name) {
  GroupRecipe r{Kind::direct_product, {}, nullptr, nullptr, std::nullopt, {}, std::move(name)};
  r.left = std::make_shared<GroupRecipe>(std::move(a));
  r.right = std::make_shared<GroupRecipe>(std::move(b));
  return r;
}
GroupRecipe GroupRecipe::make_semidirect(GroupRecipe n, GroupRecipe m,
                                         SemidirectAction action, std::string name) {
  GroupRecipe r{Kind::semidirect_product, {}, nullptr, nullptr, std::move(action), {}, std::move(name)};
  r.left = std::make_shared<GroupRecipe>(std::move(n));
  r.right = std::make_shared<GroupRecipe>(std::move(m));
  return r;
}
GroupRecipe GroupRecipe::make_from_generators(std::vector<std::string> cycles,
                                              std::string name) {
  return GroupRecipe{Kind::from_generators, {}, nullptr, nullptr, std::nullopt,
                     std::move(cycles), std::move(name)};
}

GroupTable build(const GroupRecipe& recipe, int max_order) {
  using Kind = GroupRecipe::Kind;
  std::string name = recipe.name.empty() ? default_name(recipe) : recipe.name;
  switch (recipe.kind) {
    case Kind::cyclic:
      return build_cyclic(recipe.params[0], name, max_order);
    case Kind::dihedral:
      return build_dihedral(recipe.params[0], name, max_order);
    case Kind::dicyclic:
      return build_dicyclic(recipe.params[0], name, max_order);
    case Kind::elementary_abelian:
      return build_elementary_abelian(recipe.params[0], recipe.params[1], name,
                                      max_order);
    case Kind::symmetric:
      return build_symmetric(recipe.params[0], name, max_order);
    case Kind::alternating:
      return build_alternating(recipe.params[0], name, max_order);
    case Kind::direct_product: {
      GroupTable a = build(*recipe.left, max_order);
      GroupTable b = build(*recipe.right, max_order);
      return direct_product_table(a, b, name, max_order);
    }
    case Kind::semidirect_product: {
      GroupTable n = build(*recipe.left, max_order);
      GroupTable m = build(*recipe.right, max_order);
      return semidirect_product_table(n, m, *recipe.action, name, max_order);
    }
    case Kind::from_generators: {
      std::vector<Permutation> gens;
      for (const auto& c : recipe.generator_cycles)
        gens.push_back(Permutation::from_cycles(c));
      return group_from_generators(std::move(gens), name, max_order);
    }
  }
  throw Error("unknown recipe kind");
}

SemidirectAction power_action(int q, int k) {
  return SemidirectAction{{1}, {1}, {{((k % q) + q) % q}}};
}

SemidirectAction matrix_action(int q, int r, const std::vector<int>& acting_gens,
                               const std::vector<std::vector<int>>& matrices) {
  SemidirectAction action;
  for (int t = 0; t < r; ++t) {
    int pow = 1;
    for (int s = 0; s < t; ++s) pow *= q;
    action.kernel_generators.push_back(pow);  // basis vector e_t
  }
  action.acting_generators = acting_gens;
  for (const auto& mat : matrices) {
    std::vector<int> images;
    for (int t = 0; t < r; ++t) {
      int idx = 0, pow = 1;
      for (int s = 0; s < r; ++s) {
        idx += (((mat[s * r + t] % q) + q) % q) * pow;
        pow *= q;
      }
      images.push_back(idx);
    }
    action.images.push_back(std::move(images));
  }
  return action;
}

std::vector<GroupTable> default_corpus(const CorpusConfig& config) {
  std::vector<GroupTable> corpus;
  auto add = [&](GroupTable g) {
    if (g.order() > config.max_order) return;
    corpus.push_back(std::move(g));
  };
  auto add_recipe = [&](const GroupRecipe& r) {
    GroupTable g = build(r);
    add(std::move(g));
  };

  // Everything of order <= 12, one representative per isomorphism class.
  for (int n = 1; n <= 12 && n <= config.max_order; ++n)
    for (GroupTable& g : enumerate_all_of_order(n)) add(std::move(g));

  // Cyclic groups and a few larger abelians.
  for (int n = 2; n <= 12; ++n) add_recipe(GroupRecipe::make_cyclic(n));
  add_recipe(GroupRecipe::make_cyclic(15));
  add_recipe(GroupRecipe::make_cyclic(30));

  // Symmetric / alternating families.
  add_recipe(GroupRecipe::make_symmetric(3));
  add_recipe(GroupRecipe::make_symmetric(4));
  add_recipe(GroupRecipe::make_symmetric(5));
  add_recipe(GroupRecipe::make_alternating(4));
  add_recipe(GroupRecipe::make_alternating(5));

  // Dihedral groups of the n-gon, n <= 12.
  for (int n = 3; n <= 12; ++n) add_recipe(GroupRecipe::make_dihedral(n));

  // Generalized quaternion 8, 16, 32 plus the dicyclic group of order 12.
  add_recipe(GroupRecipe::make_dicyclic(2));
  add_recipe(GroupRecipe::make_dicyclic(3));
  add_recipe(GroupRecipe::make_dicyclic(4));
  add_recipe(GroupRecipe::make_dicyclic(8));

  // Frobenius groups Z_q : Z_2 (inversion), q odd prime.
  for (int q : {3, 5, 7, 11})
    add_recipe(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(q),
                                            GroupRecipe::make_cyclic(2),
                                            power_action(q, q - 1),
                                            "Z" + std::to_string(q) + ":Z2"));

  // Frobenius groups with larger cyclic complements. The acting generator
  // multiplies by a primitive root, so the action is faithful.
  add_recipe(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(5),
                                          GroupRecipe::make_cyclic(4),
                                          power_action(5, 2), "Z5:Z4"));
  add_recipe(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(7),
                                          GroupRecipe::make_cyclic(3),
                                          power_action(7, 2), "Z7:Z3"));
  add_recipe(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(7),
                                          GroupRecipe::make_cyclic(6),
                                          power_action(7, 3), "Z7:Z6"));
  add_recipe(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(13),
                                          GroupRecipe::make_cyclic(12),
                                          power_action(13, 2), "Z13:Z12"));

  // Non-faithful contrast: Z4 acting on Z5 through inversion only. Not a
  // Frobenius group (the square of the generator acts trivially).
  add_recipe(GroupRecipe::make_semidirect(GroupRecipe::make_cyclic(5),
                                          GroupRecipe::make_cyclic(4),
                                          power_action(5, 4), "Z5:Z4-inv"));

  // Frobenius groups with elementary abelian kernels.
  add_recipe(GroupRecipe::make_semidirect(
      GroupRecipe::make_elementary_abelian(2, 2), GroupRecipe::make_cyclic(3),
      matrix_action(2, 2, {1}, {{0, 1, 1, 1}}), "V4:Z3"));
  add_recipe(GroupRecipe::make_semidirect(
      GroupRecipe::make_elementary_abelian(3, 2), GroupRecipe::make_cyclic(4),
      matrix_action(3, 2, {1}, {{0, 1, 2, 0}}), "Z3^2:Z4"));
  add_recipe(GroupRecipe::make_semidirect(
      GroupRecipe::make_elementary_abelian(3, 2), GroupRecipe::make_cyclic(8),
      matrix_action(3, 2, {1}, {{0, 1, 1, 1}}), "Z3^2:Z8"));
  add_recipe(GroupRecipe::make_semidirect(
      GroupRecipe::make_elementary_abelian(3, 2), GroupRecipe::make_dicyclic(2),
      matrix_action(3, 2, {1, 4}, {{0, 1, 2, 0}, {1, 1, 1, 2}}), "Z3^2:Q8"));
  add_recipe(GroupRecipe::make_semidirect(
      GroupRecipe::make_elementary_abelian(2, 3), GroupRecipe::make_cyclic(7),
      matrix_action(2, 3, {1}, {{0, 0, 1, 1, 0, 1, 0, 1, 0}}), "Z2^3:Z7"));

  // Frobenius group with a non-nilpotent complement: Dic3 inside SL(2, 5)
  // acting freely on Z5^2. Realizes the Z_q^r : (Z_p : H) shape with r > 1.
  add_recipe(GroupRecipe::make_semidirect(
      GroupRecipe::make_elementary_abelian(5, 2), GroupRecipe::make_dicyclic(3),
      matrix_action(5, 2, {1, 6}, {{0, 1, 4, 1}, {0, 2, 2, 0}}), "Z5^2:Dic3"));

  // Q8 x Z_m for odd m.
  for (int m : {3, 5, 7, 9})
    add_recipe(GroupRecipe::make_direct_product(
        GroupRecipe::make_dicyclic(2), GroupRecipe::make_cyclic(m),
        "Q8xZ" + std::to_string(m)));

  for (const auto& path : config.corpus_files)
    for (GroupTable& g : load_groups_file(path)) add(std::move(g));

  std::set<std::string> names;
  for (const auto& g : corpus)
    if (!names.insert(g.name()).second)
      throw Error("duplicate corpus group name: " + g.name());
  return corpus;
}

std::vector<GroupTable> load_groups(std::istream& in, int max_order) {
  std::vector<GroupTable> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    auto pos = trimmed.find('#');
    if (pos != std::string::npos) trimmed.erase(pos);
    while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
      trimmed.pop_back();
    size_t start = 0;
    while (start < trimmed.size() &&
           std::isspace(static_cast<unsigned char>(trimmed[start])))
      ++start;
    trimmed.erase(0, start);
    if (trimmed.empty()) continue;

    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(trimmed);
    while (std::getline(ss, field, ';')) fields.push_back(field);
    if (fields.size() < 2) throw ParseError("expected 'name; degree; cycles...'", lineno);

    auto strip = [](std::string s) {
      size_t a = 0, b = s.size();
      while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
      while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
      return s.substr(a, b - a);
    };
    std::string name = strip(fields[0]);
    int degree = 0;
    try {
      degree = std::stoi(strip(fields[1]));
    } catch (const std::exception&) {
      throw ParseError("invalid degree", lineno);
    }
    if (degree < 1) throw ParseError("degree must be >= 1", lineno);

    std::vector<Permutation> gens;
    for (size_t i = 2; i < fields.size(); ++i) {
      std::string text = strip(fields[i]);
      if (text.empty()) continue;
      try {
        Permutation p = Permutation::from_cycles(text, degree);
        if (p.degree() > degree)
          throw Error("cycle mentions a point beyond the declared degree");
        gens.push_back(std::move(p));
      } catch (const Error& e) {
        throw ParseError(e.what(), lineno);
      }
    }
    try {
      out.push_back(group_from_generators(std::move(gens), name, max_order));
    } catch (const CapError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

std::vector<GroupTable> load_groups_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus file: " + path);
  return load_groups(in, max_order);
}

GroupFingerprint fingerprint(const GroupTable& g) {
  GroupFingerprint fp;
  fp.order = g.order();
  for (int x = 0; x < g.order(); ++x) fp.element_orders.push_back(g.element_order(x));
  std::sort(fp.element_orders.begin(), fp.element_orders.end());
  fp.abelian = true;
  for (int a = 0; a < g.order() && fp.abelian; ++a)
    for (int b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) {
        fp.abelian = false;
        break;
      }
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        central = false;
        break;
      }
    if (central) ++fp.center_size;
  }
  return fp;
}

}  // namespace tiv
