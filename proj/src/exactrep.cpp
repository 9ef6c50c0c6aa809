#include "faithrep/exactrep.hpp"

#include <algorithm>
#include <numeric>

#include "faithrep/arith.hpp"
#include "faithrep/error.hpp"

namespace faithrep {

std::int64_t LinearCharacter::exponent_of(int g) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || *it != g) throw Error(ErrorCode::invalid_parameters, "element outside character domain");
  return exponents[static_cast<std::size_t>(it - elements.begin())];
}

bool LinearCharacter::contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }

void check_linear_character(const FiniteGroup& g, const LinearCharacter& chi) {
  if (chi.modulus < 1 || chi.elements.size() != chi.exponents.size()) {
    throw Error(ErrorCode::invalid_parameters, "malformed linear character");
  }
  if (!std::is_sorted(chi.elements.begin(), chi.elements.end()) || !g.is_subgroup(chi.elements)) {
    throw Error(ErrorCode::not_subgroup, "character domain is not a subgroup");
  }
  const std::size_t n = chi.elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = chi.exponent_of(g.mul(chi.elements[i], chi.elements[j]));
      if (floor_mod(lhs - chi.exponents[i] - chi.exponents[j], chi.modulus) != 0) {
        throw Error(ErrorCode::chi_not_homomorphism, "chi(ab) != chi(a) chi(b)");
      }
    }
  }
}

MonomialRep::MonomialRep(int group_order, int degree, int modulus, std::vector<int> images,
                         std::vector<std::int64_t> scalars)
    : group_order_(group_order),
      degree_(degree),
      modulus_(modulus),
      images_(std::move(images)),
      scalars_(std::move(scalars)) {
  const auto cells = static_cast<std::size_t>(group_order) * degree;
  if (images_.size() != cells || scalars_.size() != cells || modulus < 1) {
    throw Error(ErrorCode::invalid_parameters, "monomial data has the wrong shape");
  }
}

Cyclotomic MonomialRep::trace(int g) const {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(modulus_), 0);
  for (int i = 0; i < degree_; ++i) {
    if (image(g, i) == i) ++counts[static_cast<std::size_t>(floor_mod(scalar(g, i), modulus_))];
  }
  return Cyclotomic::from_coefficients(modulus_, std::move(counts));
}

std::vector<Cyclotomic> MonomialRep::character() const {
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(group_order_));
  for (int g = 0; g < group_order_; ++g) out.push_back(trace(g));
  return out;
}

bool MonomialRep::multiplies_correctly(const FiniteGroup& g, int a, int b) const {
  const int ab = g.mul(a, b);
  for (int i = 0; i < degree_; ++i) {
    const int mid = image(b, i);
    if (image(a, mid) != image(ab, i)) return false;
    if (floor_mod(scalar(b, i) + scalar(a, mid) - scalar(ab, i), modulus_) != 0) return false;
  }
  return true;
}

nlohmann::json MonomialRep::to_json() const {
  nlohmann::json perms = nlohmann::json::array();
  nlohmann::json exps = nlohmann::json::array();
  for (int g = 0; g < group_order_; ++g) {
    const auto off = static_cast<std::ptrdiff_t>(g) * degree_;
    perms.push_back(std::vector<int>(images_.begin() + off, images_.begin() + off + degree_));
    exps.push_back(std::vector<std::int64_t>(scalars_.begin() + off, scalars_.begin() + off + degree_));
  }
  return {{"degree", degree_}, {"modulus", modulus_}, {"permutations", perms}, {"scalar_exponents", exps}};
}

namespace {

struct Cosets {
  std::vector<int> reps;      // least element of each left coset rA
  std::vector<int> coset_of;  // element -> coset index
};

Cosets left_cosets(const FiniteGroup& g, const std::vector<int>& sub) {
  Cosets c;
  c.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  for (int x = 0; x < g.order(); ++x) {
    if (c.coset_of[x] >= 0) continue;
    const int idx = static_cast<int>(c.reps.size());
    c.reps.push_back(x);
    for (int a : sub) c.coset_of[g.mul(x, a)] = idx;
  }
  return c;
}

}  // namespace

MonomialRep induce_character(const FiniteGroup& g, const LinearCharacter& chi) {
  check_linear_character(g, chi);
  const auto cosets = left_cosets(g, chi.elements);
  const int d = static_cast<int>(cosets.reps.size());
  const auto cells = static_cast<std::size_t>(g.order()) * d;
  std::vector<int> images(cells);
  std::vector<std::int64_t> scalars(cells);
  for (int x = 0; x < g.order(); ++x) {
    for (int i = 0; i < d; ++i) {
      const int xr = g.mul(x, cosets.reps[i]);
      const int j = cosets.coset_of[xr];
      const int a = g.mul(g.inv(cosets.reps[j]), xr);
      const auto cell = static_cast<std::size_t>(x) * d + i;
      images[cell] = j;
      scalars[cell] = floor_mod(chi.exponent_of(a), chi.modulus);
    }
  }
  return MonomialRep(g.order(), d, chi.modulus, std::move(images), std::move(scalars));
}

std::vector<Cyclotomic> induced_character_formula(const FiniteGroup& g, const LinearCharacter& chi) {
  check_linear_character(g, chi);
  const auto cosets = left_cosets(g, chi.elements);
  std::vector<Cyclotomic> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    std::vector<std::int64_t> counts(static_cast<std::size_t>(chi.modulus), 0);
    for (int r : cosets.reps) {
      const int c = g.mul(g.mul(g.inv(r), x), r);
      if (chi.contains(c)) ++counts[static_cast<std::size_t>(floor_mod(chi.exponent_of(c), chi.modulus))];
    }
    out.push_back(Cyclotomic::from_coefficients(chi.modulus, std::move(counts)));
  }
  return out;
}

std::vector<int> kernel_of(const FiniteGroup& g, const std::vector<Cyclotomic>& character) {
  if (static_cast<int>(character.size()) != g.order()) {
    throw Error(ErrorCode::invalid_parameters, "character length differs from group order");
  }
  const auto& one = character[static_cast<std::size_t>(g.identity())];
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    if (character[x] == one) out.push_back(x);
  }
  return out;
}

void RepSum::add(std::vector<Cyclotomic> character) {
  // chi(1) is the largest integer value of a character
  int deg = 0;
  for (const auto& v : character) {
    if (auto n = v.as_integer(); n && *n > deg) deg = static_cast<int>(*n);
  }
  degrees.push_back(deg);
  summands.push_back(std::move(character));
}

int RepSum::total_degree() const { return std::accumulate(degrees.begin(), degrees.end(), 0); }

std::vector<int> kernel_of(const FiniteGroup& g, const RepSum& sum) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  std::iota(out.begin(), out.end(), 0);
  for (const auto& chi : sum.summands) {
    const auto k = kernel_of(g, chi);
    std::vector<int> both;
    std::set_intersection(out.begin(), out.end(), k.begin(), k.end(), std::back_inserter(both));
    out = std::move(both);
  }
  return out;
}

bool is_faithful(const FiniteGroup& g, const RepSum& sum) { return kernel_of(g, sum).size() == 1; }

std::vector<Cyclotomic> linear_character_values(const FiniteGroup& g, const LinearCharacter& chi) {
  if (static_cast<int>(chi.elements.size()) != g.order()) {
    throw Error(ErrorCode::invalid_parameters, "character is not defined on the whole group");
  }
  std::vector<Cyclotomic> out;
  out.reserve(chi.elements.size());
  for (int x = 0; x < g.order(); ++x) out.push_back(Cyclotomic::root_of_unity(chi.modulus, chi.exponent_of(x)));
  return out;
}

LinearCharacter extend_linear_character(const FiniteGroup& g, const LinearCharacter& chi,
                                        const std::vector<int>& target) {
  std::vector<bool> in_target(static_cast<std::size_t>(g.order()), false);
  for (int x : target) in_target[x] = true;
  for (int s : chi.elements) {
    if (!in_target[s]) throw Error(ErrorCode::not_subgroup, "target does not contain the character domain");
  }
  for (int a : target) {
    for (int b : target) {
      if (g.mul(a, b) != g.mul(b, a)) throw Error(ErrorCode::invalid_parameters, "extension target is not abelian");
    }
  }

  // exponent per element, -1 outside the current domain
  std::vector<std::int64_t> ex(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < chi.elements.size(); ++i) ex[chi.elements[i]] = floor_mod(chi.exponents[i], chi.modulus);
  std::vector<int> domain = chi.elements;
  std::int64_t modulus = chi.modulus;

  for (int h : target) {
    if (ex[h] >= 0) continue;
    int m = 1;
    int hm = h;
    while (ex[hm] < 0) {
      hm = g.mul(hm, h);
      ++m;
    }
    // chi(h) = e(ex[h^m] / (modulus m)); old values rescale by m
    const std::int64_t new_mod = checked_mul(modulus, m);
    for (int s : domain) ex[s] *= m;
    const std::int64_t step = ex[hm] / m;
    std::vector<int> grown;
    grown.reserve(domain.size() * static_cast<std::size_t>(m));
    int hj = g.identity();
    for (int j = 0; j < m; ++j) {
      for (int s : domain) {
        const int x = g.mul(s, hj);
        if (j > 0) ex[x] = floor_mod(ex[s] + j * step, new_mod);
        grown.push_back(x);
      }
      hj = g.mul(hj, h);
    }
    std::sort(grown.begin(), grown.end());
    domain = std::move(grown);
    modulus = new_mod;
  }
  if (static_cast<std::size_t>(domain.size()) != target.size()) {
    throw Error(ErrorCode::not_subgroup, "extension target is not a subgroup");
  }

  std::int64_t common = modulus;
  for (int x : domain) common = gcd64(common, ex[x]);
  LinearCharacter out;
  out.elements = domain;
  out.modulus = static_cast<int>(modulus / common);
  for (int x : domain) out.exponents.push_back(ex[x] / common);
  return out;
}

}  // namespace faithrep
