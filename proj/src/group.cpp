#include "faithrep/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

int oracle_cap() {
  if (const char* env = std::getenv("FAITHREP_ORACLE_CAP")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0) return std::min(cap, kHardOrderLimit);
    } catch (const std::exception&) {
    }
  }
  return kDefaultOracleCap;
}

void FiniteGroup::check_order(int order) {
  if (order < 1 || order > kHardOrderLimit) {
    throw Error(ErrorCode::cap_exceeded, "group order " + std::to_string(order) + " outside table range");
  }
}

FiniteGroup::FiniteGroup(std::string name, Table table, int order)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  check_order(order);
  if (table_.size() != static_cast<std::size_t>(order) * order) {
    throw Error(ErrorCode::invalid_parameters, "multiplication table has wrong size");
  }
  for (auto v : table_) {
    if (v >= order) throw Error(ErrorCode::invalid_parameters, "table entry out of range");
  }
  // Identity: the element e with e*0 == 0 must then act trivially everywhere.
  identity_ = -1;
  for (int e = 0; e < order; ++e) {
    bool ok = true;
    for (int a = 0; a < order && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) throw Error(ErrorCode::invalid_parameters, name_ + ": no identity element");

  // Latin square rows; every row a permutation implies unique right inverses.
  inverse_.assign(order, -1);
  std::vector<int> seen(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const int c = mul(a, b);
      if (seen[c] == a) throw Error(ErrorCode::invalid_parameters, name_ + ": table is not a Latin square");
      seen[c] = a;
      if (c == identity_) inverse_[a] = b;
    }
  }
  for (int a = 0; a < order; ++a) {
    if (inverse_[a] < 0 || mul(inverse_[a], a) != identity_) {
      throw Error(ErrorCode::invalid_parameters, name_ + ": missing two-sided inverse");
    }
  }

  // Light's associativity test: (x g) y == x (g y) for g in a generating set.
  generators_ = compute_generators();
  for (int g : generators_) {
    for (int x = 0; x < order; ++x) {
      const int xg = mul(x, g);
      for (int y = 0; y < order; ++y) {
        if (mul(xg, y) != mul(x, mul(g, y))) {
          throw Error(ErrorCode::invalid_parameters, name_ + ": multiplication is not associative");
        }
      }
    }
  }

  element_order_.assign(order, 0);
  exponent_ = 1;
  for (int a = 0; a < order; ++a) {
    int k = 1;
    int x = a;
    while (x != identity_) {
      x = mul(x, a);
      ++k;
    }
    element_order_[a] = k;
    exponent_ = static_cast<int>(lcm64(exponent_, k));
  }
}

int FiniteGroup::power(int a, std::int64_t k) const {
  k = floor_mod(k, element_order_.empty() ? order_ : element_order_[a]);
  int out = identity_;
  int base = a;
  while (k > 0) {
    if (k & 1) out = mul(out, base);
    base = mul(base, base);
    k >>= 1;
  }
  return out;
}

std::vector<int> FiniteGroup::generate(const std::vector<int>& gens) const {
  std::vector<bool> in(order_, false);
  std::vector<int> elems{identity_};
  in[identity_] = true;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const int x = elems[head];
    for (int g : gens) {
      const int y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteGroup::compute_generators() const {
  std::vector<int> gens;
  std::vector<bool> covered(order_, false);
  covered[identity_] = true;
  int covered_count = 1;
  for (int a = 0; a < order_ && covered_count < order_; ++a) {
    if (covered[a]) continue;
    gens.push_back(a);
    // Closure by right multiplication from the identity: a finite monoid closure is the subgroup.
    std::vector<int> elems{identity_};
    std::vector<bool> in(order_, false);
    in[identity_] = true;
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (int g : gens) {
        const int y = mul(elems[head], g);
        if (!in[y]) {
          in[y] = true;
          elems.push_back(y);
        }
      }
    }
    covered = in;
    covered_count = static_cast<int>(elems.size());
  }
  return gens;
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  if (elems.empty()) return false;
  std::vector<bool> in(order_, false);
  for (int e : elems) {
    if (e < 0 || e >= order_) return false;
    in[e] = true;
  }
  if (!in[identity_]) return false;
  for (int a : elems) {
    if (!in[inv(a)]) return false;
    for (int b : elems) {
      if (!in[mul(a, b)]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& elems) const {
  std::vector<bool> in(order_, false);
  for (int e : elems) in[e] = true;
  for (int x : generators()) {
    for (int e : elems) {
      if (!in[conj(e, x)]) return false;
    }
  }
  return true;
}

nlohmann::json FiniteGroup::to_json() const {
  nlohmann::json j;
  j["name"] = name_;
  j["order"] = order_;
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  }
  j["table"] = rows;
  return j;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j) {
  try {
    const auto rows = j.at("table").get<std::vector<std::vector<int>>>();
    const int order = static_cast<int>(rows.size());
    check_order(order);
    if (j.contains("order") && j.at("order").get<int>() != order) {
      throw Error(ErrorCode::parse_error, "declared order does not match table");
    }
    Table table(static_cast<std::size_t>(order) * order);
    for (int a = 0; a < order; ++a) {
      if (static_cast<int>(rows[a].size()) != order) throw Error(ErrorCode::parse_error, "table row length mismatch");
      for (int b = 0; b < order; ++b) {
        const int v = rows[a][b];
        if (v < 0 || v >= order) throw Error(ErrorCode::parse_error, "table entry out of range");
        table[static_cast<std::size_t>(a) * order + b] = static_cast<std::uint16_t>(v);
      }
    }
    return FiniteGroup(j.value("name", std::string("table")), std::move(table), order);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::parse_error, std::string("group table: ") + ex.what());
  }
}

SubgroupHandle SubgroupHandle::make(SubgroupLabel label, std::vector<int> elements, int group_order) {
  SubgroupHandle h;
  h.label = label;
  std::sort(elements.begin(), elements.end());
  h.member.assign(group_order, false);
  for (int e : elements) h.member[e] = true;
  h.elements = std::move(elements);
  return h;
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjugacyClasses out;
  out.class_of.assign(n, -1);
  const auto gens = g.generators();
  // Orbit of each unassigned element under conjugation by generators; elements
  // are visited in increasing order so each class is found from its least member.
  for (int a = 0; a < n; ++a) {
    if (out.class_of[a] >= 0) continue;
    const int id = static_cast<int>(out.classes.size());
    std::vector<int> cls{a};
    out.class_of[a] = id;
    for (std::size_t head = 0; head < cls.size(); ++head) {
      for (int x : gens) {
        const int y = g.conj(cls[head], x);
        if (out.class_of[y] < 0) {
          out.class_of[y] = id;
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
    out.representative.push_back(a);
  }
  // Move the identity class to the front.
  const int id_class = out.class_of[g.identity()];
  if (id_class != 0) {
    std::rotate(out.classes.begin(), out.classes.begin() + id_class, out.classes.begin() + id_class + 1);
    std::rotate(out.representative.begin(), out.representative.begin() + id_class,
                out.representative.begin() + id_class + 1);
    for (int c = 0; c < out.count(); ++c) {
      for (int e : out.classes[c]) out.class_of[e] = c;
    }
  }
  return out;
}

std::vector<int> centralizer(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int e : elems) {
      if (g.mul(x, e) != g.mul(e, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> maximal_abelian_containing(const FiniteGroup& g, const std::vector<int>& seed) {
  std::vector<int> current = g.generate(seed);
  while (true) {
    const auto cent = centralizer(g, current);
    std::vector<bool> in(g.order(), false);
    for (int e : current) in[e] = true;
    int extra = -1;
    for (int x : cent) {
      if (!in[x]) {
        extra = x;
        break;
      }
    }
    if (extra < 0) return current;
    auto gens = current;
    gens.push_back(extra);
    current = g.generate(gens);
  }
}

int abelian_rank(const FiniteGroup& g, const std::vector<int>& subgroup) {
  const auto n = static_cast<std::int64_t>(subgroup.size());
  int best = 0;
  std::int64_t rest = n;
  for (std::int64_t ell = 2; ell <= rest; ++ell) {
    if (rest % ell != 0) continue;
    while (rest % ell == 0) rest /= ell;
    std::int64_t count = 0;
    for (int x : subgroup) {
      if (g.power(x, ell) == g.identity()) ++count;
    }
    int r = 0;
    while (count > 1) {
      count /= ell;
      ++r;
    }
    best = std::max(best, r);
  }
  return best;
}

bool is_cyclic(const FiniteGroup& g, const std::vector<int>& subgroup) {
  const auto n = static_cast<int>(subgroup.size());
  return std::any_of(subgroup.begin(), subgroup.end(), [&](int x) { return g.element_order(x) == n; });
}

Quotient quotient_group(const FiniteGroup& g, const std::vector<int>& normal) {
  if (!g.is_normal(normal)) throw Error(ErrorCode::not_subgroup, "quotient by a non-normal subgroup");
  std::vector<int> proj(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (proj[x] >= 0) continue;
    for (int s : normal) proj[g.mul(x, s)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  auto q = FiniteGroup::from_operation(g.name() + "/N", static_cast<int>(reps.size()),
                                       [&](int a, int b) { return proj[g.mul(reps[a], reps[b])]; });
  return Quotient{std::move(q), std::move(proj)};
}

StructureInfo structure_scan(const FiniteGroup& g) {
  if (g.order() > oracle_cap()) {
    throw Error(ErrorCode::cap_exceeded,
                g.name() + " has order " + std::to_string(g.order()) + " above cap " + std::to_string(oracle_cap()));
  }
  StructureInfo info;
  const int n = g.order();
  const auto gens = g.generators();
  info.center = SubgroupHandle::make(SubgroupLabel::center, centralizer(g, gens), n);
  info.is_abelian = info.center.size() == n;

  // [G,G] is the normal closure of commutators of generators.
  std::vector<int> comms;
  for (int a : gens) {
    for (int b : gens) comms.push_back(g.commutator(a, b));
  }
  std::vector<int> closure_gens = comms;
  std::vector<int> derived = g.generate(closure_gens);
  while (!g.is_normal(derived)) {
    for (int x : gens) {
      for (int d : derived) closure_gens.push_back(g.conj(d, x));
    }
    derived = g.generate(closure_gens);
  }
  info.commutator_subgroup = SubgroupHandle::make(SubgroupLabel::commutator, derived, n);

  int k = 0;
  const std::int64_t prime = prime_power_base(n, &k);
  info.is_p_group = prime != 0;
  info.prime = static_cast<int>(prime);

  if (info.is_p_group) {
    std::vector<int> omega;
    for (int z : info.center.elements) {
      if (g.power(z, prime) == g.identity()) omega.push_back(z);
    }
    info.omega1_center = SubgroupHandle::make(SubgroupLabel::custom, omega, n);
    int r = 0;
    for (auto c = static_cast<std::int64_t>(omega.size()); c > 1; c /= prime) ++r;
    info.center_rank = r;
  } else {
    info.omega1_center = SubgroupHandle::make(SubgroupLabel::custom, {g.identity()}, n);
    info.center_rank = abelian_rank(g, info.center.elements);
  }

  info.is_two_step = std::all_of(derived.begin(), derived.end(), [&](int d) { return info.center.contains(d); });
  info.commutator_cyclic = is_cyclic(g, derived);
  info.classes = conjugacy_classes(g);
  info.maximal_abelian =
      SubgroupHandle::make(SubgroupLabel::maximal_abelian, maximal_abelian_containing(g, info.center.elements), n);
  return info;
}

}  // namespace faithrep
