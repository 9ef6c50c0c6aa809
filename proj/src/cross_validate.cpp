#include <sstream>

#include "faithrep/arith.hpp"
#include "faithrep/default_suite.hpp"
#include "faithrep/error.hpp"
#include "faithrep/families.hpp"
#include "faithrep/oracle.hpp"

namespace faithrep {

bool CrossReport::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const CrossRow& r) { return r.ok(); });
}

nlohmann::json CrossReport::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"name", r.name},       {"group", r.group},     {"order", r.order}, {"values", r.values},
                     {"skipped", r.skipped}, {"problems", r.problems}, {"status", r.ok() ? "match" : "mismatch"}};
    if (r.expected) j["expected"] = *r.expected;
    items.push_back(std::move(j));
  }
  return {{"instances", items}, {"all_match", all_match()}};
}

namespace {

std::string join_values(const std::map<std::string, std::int64_t>& values) {
  std::string out;
  for (const auto& [k, v] : values) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(v);
  return out;
}

}  // namespace

std::string CrossReport::to_csv() const {
  std::ostringstream os;
  os << "name,group,order,values,status\n";
  for (const auto& r : rows) {
    os << r.name << ",\"" << r.group << "\"," << r.order << "," << join_values(r.values) << ","
       << (r.ok() ? "match" : "mismatch") << "\n";
  }
  return os.str();
}

std::string CrossReport::to_human() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    os << (r.ok() ? "ok       " : "MISMATCH ") << r.name << " (order " << r.order << "): " << join_values(r.values);
    for (const auto& p : r.problems) os << "\n         " << p;
    os << "\n";
  }
  os << (all_match() ? "all instances match" : "mismatches found") << "\n";
  return os.str();
}

namespace {

// Records a method's value, or the reason it does not apply.
template <typename F>
void attempt(CrossRow& row, const std::string& method, F&& compute) {
  try {
    row.values[method] = compute();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::not_two_step:
      case ErrorCode::commutator_not_cyclic:
      case ErrorCode::char2_unsupported:
      case ErrorCode::cap_exceeded:
        row.skipped[method] = e.what();
        break;
      default:
        row.problems.push_back(method + " failed: " + e.what());
    }
  }
}

std::int64_t checked_construction(CrossRow& row, const std::string& method, const FaithfulSolution& s) {
  if (s.kernel_checked && s.kernel_size != 1) {
    row.problems.push_back(method + " kernel has " + std::to_string(s.kernel_size) + " elements");
  }
  return s.total_dim;
}

CrossRow run_instance(const nlohmann::json& item) {
  CrossRow row;
  row.name = item.at("name").get<std::string>();
  row.group = item.at("group").get<std::string>();
  if (item.contains("expect")) row.expected = item.at("expect").get<std::int64_t>();
  const bool use_oracle = item.value("oracle", true);

  const auto spec = parse_group_spec(row.group);
  const auto& fam = spec.family;
  const auto g = build_group(spec);
  row.order = g.order();
  int k_pow = 0;
  const bool p_group = g.order() > 1 && prime_power_base(g.order(), &k_pow) != 0;

  std::optional<OrbitBound> bound;
  if (fam == "heis") {
    const HeisenbergGroup h(ChainRing::make(spec.ring_params()), spec.int_arg("k", 1));
    attempt(row, "formula", [&] { return formula_heisenberg(spec.ring_params(), h.k()); });
    attempt(row, "solver", [&] { return solve_heisenberg(h).total_dim; });
    attempt(row, "construct", [&] { return checked_construction(row, "construct", construct_faithful_heisenberg(h)); });
  } else if (fam == "unitri") {
    attempt(row, "formula", [&] { return formula_unitriangular(spec.ring_params(), spec.int_arg("size", 3)); });
  } else if (fam == "aff") {
    const AffineGroup aff(ChainRing::make(spec.ring_params()));
    const auto ring = ChainRing::make(spec.ring_params());
    attempt(row, "formula", [&] { return formula_affine(ring.q(), ring.n()); });
    attempt(row, "construct", [&] { return checked_construction(row, "construct", construct_faithful_affine(aff)); });
  } else if (fam == "sdp") {
    const CyclicAction action{spec.int_arg("N", 1), spec.list_arg("h"), spec.list_arg("mult")};
    bound = orbit_lower_bound(action);
    if (bound->equality) {
      row.values["orbit_bound"] = bound->bound;
    } else {
      row.skipped["orbit_bound"] = "action not faithful; bound " + std::to_string(bound->bound) + " is only a lower bound";
    }
  }

  if (p_group) {
    attempt(row, "two_step", [&] { return formula_two_step(g).value; });
    attempt(row, "two_step_construct",
            [&] { return checked_construction(row, "two_step_construct", construct_faithful_two_step(g)); });
  }

  if (!use_oracle) {
    row.skipped["oracle"] = "disabled for this instance";
  } else if (g.order() > oracle_cap()) {
    row.skipped["oracle"] = "order above cap";
  } else {
    const auto table = character_table(g);
    attempt(row, "oracle", [&] { return min_faithful_exhaustive(g, table).min_dim; });
    if (p_group) {
      attempt(row, "table_solver", [&] {
        int dim = 0;
        auto pool = candidates_from_table(g, table, &dim);
        return solve_pgroup(pool, dim).total_dim;
      });
    }
    if (bound && !bound->equality && row.values.count("oracle") && row.values["oracle"] < bound->bound) {
      row.problems.push_back("oracle below the orbit bound");
    }
  }

  // every computed value must agree, and with the expectation when given
  std::optional<std::int64_t> first = row.expected;
  for (const auto& [method, v] : row.values) {
    if (!first) first = v;
    if (v != *first) {
      row.problems.push_back(method + " = " + std::to_string(v) + " disagrees with " + std::to_string(*first));
    }
  }
  if (row.values.empty()) row.problems.push_back("no method applied");
  return row;
}

}  // namespace

CrossReport cross_validate(const nlohmann::json& suite) {
  if (!suite.is_array()) throw Error(ErrorCode::parse_error, "suite must be a JSON array");
  CrossReport report;
  for (const auto& item : suite) {
    try {
      report.rows.push_back(run_instance(item));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse_error, std::string("suite entry: ") + e.what());
    }
  }
  return report;
}

nlohmann::json default_suite() { return nlohmann::json::parse(detail::kDefaultSuiteJson); }

}  // namespace faithrep
