// Command-line front end: greedy truncation of a coefficient file, democracy
// sweeps, Lebesgue-constant bounds, and the registered verification cases.

#include <future>
#include <iostream>

#include "CLI11.hpp"
#include "gab/constants.hpp"
#include "gab/harness.hpp"
#include "gab/parse.hpp"
#include "json.hpp"

namespace {

// blank-line-separated blocks of index:value lines
std::vector<gab::CoefVec> load_coef_blocks(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<gab::CoefVec> out;
  std::stringstream block;
  std::string line;
  auto flush = [&] {
    std::stringstream s(block.str());
    auto v = gab::parse_coef_text(s);
    if (v.support_size() > 0) out.push_back(std::move(v));
    block.str("");
  };
  while (std::getline(in, line)) {
    if (line.empty())
      flush();
    else
      block << line << '\n';
  }
  flush();
  return out;
}

nlohmann::json coef_json(const gab::CoefVec& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [n, v] : x.entries()) {
    if (v.imag() == 0.0)
      arr.push_back({{"index", n}, {"value", v.real()}});
    else
      arr.push_back({{"index", n}, {"re", v.real()}, {"im", v.imag()}});
  }
  return arr;
}

void emit_bound_csv(const std::vector<gab::BoundRecord>& records, std::ostream& os) {
  os << "quantity,N,lower,upper,upper_source,window,witness\n";
  for (auto& r : records) {
    std::string witness = r.lower_witness;
    for (auto& c : witness)
      if (c == ',') c = ';';
    os << r.quantity << ',' << r.N << ',' << gab::fmt12(r.lower) << ','
       << (r.upper ? gab::fmt12(*r.upper) : "") << ','
       << (r.conditional ? r.upper_source + "(conditional)" : r.upper_source) << ',' << r.window
       << ',' << witness << '\n';
  }
}

struct Envelopes {
  gab::WeightSeq D, Dstar;
};

// democracy envelopes for the theorem bounds: registered closed forms when
// available, window records otherwise
Envelopes build_envelopes(const gab::SpaceModel& space, int N_max, int window,
                          std::uint64_t seed) {
  std::vector<gab::BoundRecord> dem, dual;
  bool need_dem = !space.closed_forms.count("D") && !space.closed_forms.count("D_up");
  bool need_dual = !space.closed_forms.count("Dstar") && !space.closed_forms.count("Dstar_up");
  if (need_dem) dem = gab::democracy(space, std::max(window, N_max), N_max);
  if (need_dual) dual = gab::dual_democracy(space, std::max(window, N_max), N_max, seed);
  std::string dk = space.closed_forms.count("D") ? "D" : "D_up";
  std::string sk = space.closed_forms.count("Dstar") ? "Dstar" : "Dstar_up";
  return {gab::envelope_weight(space, dem, "D", N_max, dk),
          gab::envelope_weight(space, dual, "Dstar", N_max, sk)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy-approximation bounds toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "flat key=value config file");

  std::string space_desc, x_path, competitors_path, out_path, format = "csv";
  int N = 8, window = 12, jobs = 1;
  std::uint64_t seed = 1;
  bool ties_all = false;

  auto* greedy = app.add_subcommand("greedy", "greedy truncation and residual");
  greedy->add_option("--space", space_desc)->required();
  greedy->add_option("--x", x_path, "coefficient file (index:value lines)")->required();
  greedy->add_option("--N", N)->required();
  greedy->add_flag("--ties", ties_all, "enumerate all greedy sets at ties");
  greedy->add_option("--competitors", competitors_path,
                     "blank-line-separated competitor vectors for a sigma upper bound");

  auto* democracy = app.add_subcommand("democracy", "window democracy sweep");
  democracy->add_option("--space", space_desc)->required();
  democracy->add_option("--window", window);
  democracy->add_option("--N", N)->required();
  democracy->add_option("--seed", seed);

  auto* lebesgue = app.add_subcommand("lebesgue", "two-sided Lebesgue-constant bounds");
  lebesgue->add_option("--space", space_desc)->required();
  lebesgue->add_option("--N", N)->required();
  lebesgue->add_option("--window", window);
  lebesgue->add_option("--seed", seed);

  std::string case_id;
  auto* verify = app.add_subcommand("verify", "run a registered verification case");
  verify->add_option("case", case_id, "case id, or 'all'")->required();
  verify->add_option("--N", N);
  verify->add_option("--window", window);
  verify->add_option("--seed", seed);
  verify->add_option("--jobs", jobs);
  verify->add_option("--out", out_path);
  verify->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot read config " + config_path);
      auto cfg = gab::parse_config(in);
      // CLI flags override config values
      if (cfg.count("window") && window == 12) window = std::stoi(cfg["window"]);
      if (cfg.count("seed") && seed == 1) seed = std::stoull(cfg["seed"]);
      if (cfg.count("N") && N == 8) N = std::stoi(cfg["N"]);
      if (cfg.count("format") && format == "csv") format = cfg["format"];
    }

    if (greedy->parsed()) {
      auto space = gab::make_space(space_desc);
      auto x = gab::load_coef_file(x_path);
      auto outcome = gab::greedy_residual(
          space, x, N, ties_all ? gab::TiePolicy::kEnumerateAll : gab::TiePolicy::kLowestIndex);
      nlohmann::json o;
      o["space"] = space.name;
      o["N"] = N;
      o["ordering"] = outcome.ordering;
      o["set"] = std::vector<int>(outcome.set.begin(), outcome.set.end());
      o["all_sets_count"] = outcome.all_sets_count;
      o["approximant"] = coef_json(outcome.approximant);
      o["residual"] = coef_json(outcome.residual);
      o["residual_norm"] = outcome.residual_norm;
      if (!competitors_path.empty()) {
        auto comps = load_coef_blocks(competitors_path);
        o["sigma_upper"] = gab::sigma_upper(space, x, N, comps);
      }
      std::cout << o.dump(2) << '\n';
      return 0;
    }

    if (democracy->parsed()) {
      auto space = gab::make_space(space_desc);
      auto records = gab::democracy(space, window, N);
      for (auto& r : gab::dual_democracy(space, window, N, seed)) records.push_back(std::move(r));
      emit_bound_csv(records, std::cout);
      return 0;
    }

    if (lebesgue->parsed()) {
      auto space = gab::make_space(space_desc);
      auto env = build_envelopes(space, N, window, seed);
      std::vector<gab::BoundRecord> records;
      for (auto& r : gab::k_constant(space, {}, env.D, env.Dstar, N, window, 100, seed))
        records.push_back(std::move(r));
      for (auto& r : gab::lebesgue_bounds(space, env.D, env.Dstar, N))
        records.push_back(std::move(r));
      emit_bound_csv(records, std::cout);
      return 0;
    }

    // verify
    std::vector<std::string> ids;
    if (case_id == "all")
      ids = gab::registered_cases();
    else
      ids.push_back(case_id);
    std::vector<std::future<std::vector<gab::ReportRow>>> futs;
    for (auto& id : ids) {
      gab::CaseSpec spec;
      spec.id = id;
      spec.N_max = verify->count("--N") ? N : 0;
      spec.window = window;
      spec.seed = seed;
      futs.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                [spec] { return gab::run_case(spec); }));
    }
    std::vector<gab::ReportRow> rows;  // merged in registry order
    for (auto& f : futs)
      for (auto& r : f.get()) rows.push_back(std::move(r));
    if (!out_path.empty())
      gab::emit_file(rows, format, out_path);
    else
      gab::emit(rows, format, std::cout);
    std::size_t fails = 0;
    for (auto& r : rows)
      if (r.status == "fail") ++fails;
    if (fails) {
      std::cerr << fails << " failing row(s)\n";
      return 1;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
