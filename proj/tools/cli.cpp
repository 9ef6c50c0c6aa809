#include "faithrep/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "faithrep/arith.hpp"
#include "faithrep/chain_ring.hpp"
#include "faithrep/error.hpp"
#include "faithrep/families.hpp"
#include "faithrep/mackey_irreps.hpp"
#include "faithrep/minfaith_solver.hpp"
#include "faithrep/oracle.hpp"

namespace faithrep::cli {

namespace {

struct RingOpts {
  int p = 2;
  int f = 1;
  std::string e = "1";
  int n = 1;

  RingParams params() const { return RingParams{p, f, parse_ramification(e), n}; }
  void attach(CLI::App* app) {
    app->add_option("--p", p, "residue characteristic")->required();
    app->add_option("--f", f, "inertia degree")->capture_default_str();
    app->add_option("--e", e, "ramification index, or inf")->capture_default_str();
    app->add_option("--n", n, "nilpotency length")->capture_default_str();
  }
};

const std::vector<std::string> kFormats{"human", "csv", "json"};

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// ------------------------------------------------------------ ring

int cmd_ring(const RingOpts& opts, const std::string& format, std::ostream& out) {
  const auto ring = ChainRing::make(opts.params());
  std::vector<std::int64_t> ideal_sizes;
  for (int j = 0; j <= ring.n(); ++j) ideal_sizes.push_back(ipow(ring.q(), ring.n() - j));
  if (format == "json") {
    out << nlohmann::json{{"ring", to_json(ring.params())}, {"description", ring.describe()}, {"size", ring.size()},
                          {"q", ring.q()}, {"xi", ring.xi()}, {"ideal_sizes", ideal_sizes},
                          {"unramified_poly", ring.unramified_poly()}}
               .dump(2)
        << "\n";
  } else if (format == "csv") {
    out << "description,size,q,xi\n" << csv_quote(ring.describe()) << "," << ring.size() << "," << ring.q() << "," << ring.xi() << "\n";
  } else {
    out << ring.describe() << "\n"
        << "size " << ring.size() << ", residue field F_" << ring.q() << ", xi " << ring.xi() << "\n"
        << "ideal sizes:";
    for (auto s : ideal_sizes) out << " " << s;
    out << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ irreps

int cmd_irreps(const RingOpts& opts, int k, const std::string& format, std::ostream& out) {
  const HeisenbergGroup h(ChainRing::make(opts.params()), k);
  MackeyCatalog catalog(h);
  const auto& ring = h.ring();
  if (!catalog.explicit_mode()) {
    if (format == "json") {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& s : catalog.summary()) {
        rows.push_back({{"level", s.level}, {"dim", s.dim}, {"central_values", s.central_values}, {"irreps", s.irreps()}});
      }
      out << nlohmann::json{{"group", h.name()}, {"mode", "symbolic"}, {"levels", rows}}.dump(2) << "\n";
    } else {
      out << "level,dim,central_values,irreps\n";
      for (const auto& s : catalog.summary()) {
        out << s.level << "," << s.dim << "," << s.central_values << "," << s.irreps() << "\n";
      }
    }
    return 0;
  }
  const auto orbits = catalog.orbit_representatives();
  auto orbit_text = [&](const OrbitRep& o) {
    std::string s = "b_vec=[";
    for (std::size_t j = 0; j < o.b_vec.size(); ++j) s += (j ? " " : "") + ring.to_json(ring.element(o.b_vec[j])).dump();
    return s + "];b=" + ring.to_json(ring.element(o.b)).dump();
  };
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& o : orbits) {
      rows.push_back({{"orbit_rep", orbit_text(o)}, {"level", o.level}, {"dim", o.orbit_size},
                      {"multiplicity", o.stabilizer_size}});
    }
    out << nlohmann::json{{"group", h.name()}, {"mode", "explicit"}, {"orbits", rows}}.dump(2) << "\n";
    return 0;
  }
  // one row per orbit; multiplicity counts the stabilizer characters lambda
  out << "orbit_rep,level,dim,multiplicity\n";
  for (const auto& o : orbits) out << csv_quote(orbit_text(o)) << "," << o.level << "," << o.orbit_size << "," << o.stabilizer_size << "\n";
  return 0;
}

// ------------------------------------------------------------ minfaith

struct MinfaithResult {
  nlohmann::json params;
  std::map<std::string, std::int64_t> values;
  nlohmann::json details = nlohmann::json::object();
  std::vector<std::string> problems;
};

void add_solution(MinfaithResult& r, const std::string& key, const FaithfulSolution& s) {
  r.values[key] = s.total_dim;
  r.details[key] = s.to_json();
  if (s.kernel_checked && s.kernel_size != 1) r.problems.push_back(key + " is not faithful");
}

void add_oracle(MinfaithResult& r, const FiniteGroup& g) {
  const auto table = character_table(g);
  const auto res = min_faithful_exhaustive(g, table);
  r.values["oracle"] = res.min_dim;
  nlohmann::json dims = nlohmann::json::array();
  for (int i : res.selection) dims.push_back(table.dims[i]);
  r.details["oracle"] = {{"min_dim", res.min_dim}, {"selection", res.selection}, {"selection_dims", dims}};
}

bool wants(const std::string& mode, const std::string& what) { return mode == "all" || mode == what; }

int emit_minfaith(const std::string& family, const std::string& mode, const std::string& format, MinfaithResult& r,
                  std::ostream& out) {
  std::optional<std::int64_t> first;
  for (const auto& [k, v] : r.values) {
    if (!first) first = v;
    if (v != *first) r.problems.push_back(k + " = " + std::to_string(v) + " differs from " + std::to_string(*first));
  }
  const bool agree = r.problems.empty();
  if (format == "json") {
    nlohmann::json j{{"family", family}, {"params", r.params}, {"mode", mode}, {"values", r.values},
                     {"details", r.details}, {"agree", agree}, {"problems", r.problems}};
    if (first) j["m_faithful"] = *first;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "method,value\n";
    for (const auto& [k, v] : r.values) out << k << "," << v << "\n";
  } else if (r.values.size() == 1) {
    out << r.values.begin()->second << "\n";
  } else {
    for (const auto& [k, v] : r.values) out << k << ": " << v << "\n";
    for (const auto& p : r.problems) out << "mismatch: " << p << "\n";
  }
  return agree ? 0 : 1;
}

// ------------------------------------------------------------ oracle

int cmd_oracle_table(const std::string& group, const std::string& format, std::ostream& out) {
  const auto g = build_group(parse_group_spec(group));
  const auto t = character_table(g);
  if (format == "json") {
    out << t.to_json().dump(2) << "\n";
  } else {
    out << t.to_csv();
  }
  return check_orthogonality(t) ? 0 : 1;
}

int cmd_oracle_minfaith(const std::string& group, const std::string& format, std::ostream& out) {
  const auto g = build_group(parse_group_spec(group));
  const auto t = character_table(g);
  const auto r = min_faithful_exhaustive(g, t);
  std::vector<int> dims;
  for (int i : r.selection) dims.push_back(t.dims[i]);
  if (format == "json") {
    out << nlohmann::json{{"group", group}, {"order", g.order()}, {"min_dim", r.min_dim}, {"selection", r.selection},
                          {"selection_dims", dims}}
               .dump(2)
        << "\n";
  } else if (format == "csv") {
    out << "group,order,min_dim,selection\n" << csv_quote(group) << "," << g.order() << "," << r.min_dim << ",\"";
    for (std::size_t i = 0; i < r.selection.size(); ++i) out << (i ? " " : "") << r.selection[i];
    out << "\"\n";
  } else {
    out << r.min_dim << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ verify

int cmd_verify(const std::string& suite, const std::string& format, std::ostream& out) {
  nlohmann::json j;
  if (suite == "default") {
    j = default_suite();
  } else {
    std::ifstream in(suite);
    if (!in) throw Error(ErrorCode::parse_error, "cannot open suite " + suite);
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::parse_error, e.what());
    }
  }
  const auto report = cross_validate(j);
  if (format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else if (format == "csv") {
    out << report.to_csv();
  } else {
    out << report.to_human();
  }
  return report.all_match() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal faithful representation dimensions over finite chain rings", "faithrep"};
  app.require_subcommand(1);
  std::string format = "human";
  app.add_option("--format", format, "output format")->check(CLI::IsMember(kFormats))->capture_default_str();

  RingOpts ring_opts;
  auto* ring_cmd = app.add_subcommand("ring", "describe a chain ring O/p^n");
  ring_opts.attach(ring_cmd);

  auto* irreps_cmd = app.add_subcommand("irreps", "irreducible representations of Heisenberg groups");
  irreps_cmd->require_subcommand(1);
  auto* irreps_list = irreps_cmd->add_subcommand("list", "Mackey catalog, one row per orbit");
  RingOpts irreps_ring;
  int irreps_k = 1;
  irreps_ring.attach(irreps_list);
  irreps_list->add_option("--k", irreps_k, "Heisenberg rank")->capture_default_str();

  auto* minfaith_cmd = app.add_subcommand("minfaith", "minimal faithful dimension");
  minfaith_cmd->require_subcommand(1);
  std::string mode = "formula";
  RingOpts mf_ring;
  int mf_k = 1;
  std::string table_path;
  std::string group_spec;
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "formula|construct|oracle|all")
        ->check(CLI::IsMember({"formula", "construct", "oracle", "all"}))
        ->capture_default_str();
  };
  auto* mf_heis = minfaith_cmd->add_subcommand("heisenberg", "Hei_(2k+1)(O/p^n)");
  auto* mf_unitri = minfaith_cmd->add_subcommand("unitriangular", "U_(k+2)(O/p^n)");
  auto* mf_aff = minfaith_cmd->add_subcommand("affine", "Aff(O/p^n)");
  for (auto* sub : {mf_heis, mf_unitri, mf_aff}) {
    mf_ring.attach(sub);
    add_mode(sub);
  }
  for (auto* sub : {mf_heis, mf_unitri}) sub->add_option("--k", mf_k, "Heisenberg rank")->capture_default_str();
  auto* mf_two = minfaith_cmd->add_subcommand("two-step", "two-step nilpotent p-group given by a table");
  auto* table_opt = mf_two->add_option("--table", table_path, "JSON multiplication table")->check(CLI::ExistingFile);
  mf_two->add_option("--group", group_spec, "group spec instead of a table")->excludes(table_opt);
  add_mode(mf_two);
  for (auto* sub : {mf_heis, mf_unitri, mf_aff, mf_two}) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(kFormats));
  }

  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force character tables and minima");
  oracle_cmd->require_subcommand(1);
  std::string oracle_group;
  auto* oracle_table = oracle_cmd->add_subcommand("table", "character table");
  auto* oracle_min = oracle_cmd->add_subcommand("minfaith", "exact minimal faithful dimension");
  for (auto* sub : {oracle_table, oracle_min}) {
    sub->add_option("--group", oracle_group, "group spec, e.g. heis:p=2,n=2")->required();
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(kFormats));
  }

  auto* verify_cmd = app.add_subcommand("verify", "cross-validate a suite");
  std::string suite = "default";
  verify_cmd->add_option("--suite", suite, "default or a JSON file")->capture_default_str();
  for (auto* sub : {ring_cmd, irreps_list, verify_cmd}) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(kFormats));
  }

  std::vector<const char*> argv{"faithrep"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*ring_cmd) return cmd_ring(ring_opts, format, out);
    if (*irreps_list) return cmd_irreps(irreps_ring, irreps_k, format, out);
    if (*oracle_table) return cmd_oracle_table(oracle_group, format, out);
    if (*oracle_min) return cmd_oracle_minfaith(oracle_group, format, out);
    if (*verify_cmd) return cmd_verify(suite, format, out);

    MinfaithResult r;
    if (*mf_two) {
      const auto g = table_path.empty() ? build_group(parse_group_spec(group_spec.empty() ? "" : group_spec))
                                        : build_group(parse_group_spec("table:path=" + table_path));
      r.params = {{"group", g.name()}, {"order", g.order()}};
      if (wants(mode, "formula")) r.values["formula"] = formula_two_step(g).value;
      if (wants(mode, "construct")) add_solution(r, "construct", construct_faithful_two_step(g));
      if (wants(mode, "oracle")) add_oracle(r, g);
      return emit_minfaith("two-step", mode, format, r, out);
    }
    const auto params = mf_ring.params();
    r.params = to_json(params);
    if (*mf_heis) {
      r.params["k"] = mf_k;
      const HeisenbergGroup h(ChainRing::make(params), mf_k);
      if (wants(mode, "formula")) r.values["formula"] = formula_heisenberg(params, mf_k);
      if (wants(mode, "construct")) {
        add_solution(r, "solver", solve_heisenberg(h));
        add_solution(r, "construct", construct_faithful_heisenberg(h));
      }
      if (wants(mode, "oracle")) add_oracle(r, h.materialize());
      return emit_minfaith("heisenberg", mode, format, r, out);
    }
    if (*mf_unitri) {
      r.params["size"] = mf_k + 2;
      if (wants(mode, "formula")) r.values["formula"] = formula_unitriangular(params, mf_k + 2);
      if (mode == "construct") throw Error(ErrorCode::invalid_parameters, "no explicit construction for unitriangular groups");
      if (wants(mode, "oracle")) add_oracle(r, UnitriangularGroup(ChainRing::make(params), mf_k + 2).materialize());
      return emit_minfaith("unitriangular", mode, format, r, out);
    }
    const AffineGroup aff(ChainRing::make(params));
    const auto ring = ChainRing::make(params);
    if (wants(mode, "formula")) r.values["formula"] = formula_affine(ring.q(), ring.n());
    if (wants(mode, "construct")) add_solution(r, "construct", construct_faithful_affine(aff));
    if (wants(mode, "oracle")) add_oracle(r, aff.materialize());
    return emit_minfaith("affine", mode, format, r, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::parse_error || e.code() == ErrorCode::invalid_parameters ? 2 : 1;
  }
}

}  // namespace faithrep::cli
