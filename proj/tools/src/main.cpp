// ietk command line: experiment runner plus a few direct inspection
// subcommands.  Exit codes: 0 ok, 1 usage, 2 embedded check failed,
// 3 runtime error.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>

#include "ietk/experiment.hpp"
#include "ietk/rauzy.hpp"
#include "ietk/rigidity.hpp"
#include "ietk/rotations.hpp"
#include "ietk/sampling.hpp"

using namespace ietk;

namespace {

std::vector<ExactNumber> parse_lengths(const std::string& csv) {
  std::vector<ExactNumber> out;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(ExactNumber::parse(item));
  if (out.empty()) throw ParseError("empty length list");
  return out;
}

Permutation parse_perm(const std::string& csv) {
  std::vector<int> img;
  std::istringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) img.push_back(std::stoi(item));
  return Permutation(std::move(img));
}

std::vector<RvStep> parse_loop(const std::string& s) {
  std::vector<RvStep> out;
  for (char ch : s) {
    if (ch == 'a') out.push_back(RvStep::A);
    else if (ch == 'b') out.push_back(RvStep::B);
    else throw ParseError("loop letters must be 'a' or 'b'");
  }
  return out;
}

struct Shared {
  std::string config_path, out_dir, metric = "interval";
  std::uint64_t seed = 0;
};

int finish(const ExperimentOutcome& o, const Shared& sh) {
  if (!sh.out_dir.empty()) {
    write_outcome(o, sh.out_dir);
  } else {
    std::cout << o.csv;
  }
  return o.checks_passed ? 0 : 2;
}

// Builds the config either from --config or from the given inline fields.
ExperimentConfig make_config(const Shared& sh, const std::string& kind,
                             const Json& inline_cfg) {
  if (!sh.config_path.empty()) {
    ExperimentConfig c = ExperimentConfig::from_file(sh.config_path);
    if (c.kind != kind)
      throw InvalidParamsError("config kind '" + c.kind +
                               "' does not match subcommand '" + kind + "'");
    return c;
  }
  Json j = inline_cfg;
  j["kind"] = kind;
  if (!j.contains("metric")) j["metric"] = sh.metric;
  return ExperimentConfig::from_json(j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact interval exchange toolkit"};
  app.require_subcommand(1);

  Shared sh;
  app.add_option("--config", sh.config_path, "JSON experiment config");
  app.add_option("--out", sh.out_dir, "output directory for results.csv/summary.json");
  app.add_option("--seed", sh.seed, "PRNG seed");
  app.add_option("--metric", sh.metric, "interval|circle")
      ->check(CLI::IsMember({"interval", "circle"}));

  std::string lengths, perm, loop, alpha, x = "0", y, sequence, schedule, u, v;
  long n = 10, cap = 1000000, n_search = 64;
  int d = 2, count = 1, j_max = 6, k_min = 4, k_max = 16, bits = 24,
      instances = 500;
  long q = 2;
  std::string variant = "both";
  std::string big_n_str = "100";

  auto* rv = app.add_subcommand("rv-path", "induction path of an IET");
  rv->add_option("--lengths", lengths, "comma-separated exact lengths");
  rv->add_option("--perm", perm, "comma-separated images");
  rv->add_option("-n,--steps", n, "number of induction steps");

  auto* rc = app.add_subcommand("rauzy-class", "closure under both moves");
  rc->add_option("--perm", perm, "comma-separated images");

  auto* pe = app.add_subcommand("perron", "self-similar IET of a loop");
  pe->add_option("--perm", perm, "comma-separated images")->required();
  pe->add_option("--loop", loop, "step letters, e.g. ba")->required();

  auto* in = app.add_subcommand("induce", "first-return map to [u,v)");
  in->add_option("--lengths", lengths)->required();
  in->add_option("--perm", perm)->required();
  in->add_option("--u", u)->required();
  in->add_option("--v", v)->required();
  in->add_option("--cap", cap, "return-time cap");

  auto* tm = app.add_subcommand("target-measure", "orbit-ball union measures");
  tm->add_option("--lengths", lengths);
  tm->add_option("--perm", perm);
  tm->add_option("--x", x, "orbit start");
  tm->add_option("--sequence", sequence, "target sequence JSON");
  tm->add_option("--schedule", schedule, "checkpoints N:M,N:M,...");

  auto* ht = app.add_subcommand("hitting-time", "first entry times to shrinking balls");
  ht->add_option("--lengths", lengths);
  ht->add_option("--perm", perm);
  ht->add_option("--x", x);
  ht->add_option("--y", y, "target center");
  ht->add_option("--k-min", k_min);
  ht->add_option("--k-max", k_max);
  ht->add_option("--cap", cap);

  auto* ss = app.add_subcommand("separation-stats", "random separation-bound instances");
  ss->add_option("--instances", instances);
  ss->add_option("--variant", variant)->check(CLI::IsMember({"line", "preimage", "both"}));

  auto* rs = app.add_subcommand("rigidity-search", "staged rigidity towers and block measures");
  rs->add_option("--lengths", lengths);
  rs->add_option("--perm", perm);
  rs->add_option("--x", x);
  rs->add_option("--j-max", j_max);
  rs->add_option("--n-search", n_search, "max induction depth per stage");

  auto* cf = app.add_subcommand("cf", "continued fraction and growth exponent");
  cf->add_option("--alpha", alpha);
  cf->add_option("-n,--terms", n);
  cf->add_option("--bits", bits);

  auto* tg = app.add_subcommand("three-gap", "circle gap multiset of {j*alpha}");
  tg->add_option("--alpha", alpha)->required();
  tg->add_option("-n,--points", big_n_str, "orbit length (may be huge)");

  auto* sm = app.add_subcommand("sample", "random rational IETs");
  sm->add_option("--d", d, "number of intervals");
  sm->add_option("--Q", q, "common denominator");
  sm->add_option("--count", count);

  // Let global flags appear after the subcommand name too.
  for (CLI::App* sub : {rv, rc, pe, in, tm, ht, ss, rs, cf, tg, sm})
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    auto iet_json = [&]() {
      Json j;
      if (!lengths.empty()) {
        Json larr = Json::array();
        for (const auto& l : parse_lengths(lengths)) larr.push_back(l.str());
        j["iet"] = {{"perm", parse_perm(perm).images()}, {"lengths", larr}};
      }
      return j;
    };

    if (rv->parsed()) {
      Json j = iet_json();
      j["params"] = {{"n", n}};
      return finish(run_experiment(make_config(sh, "rv-path", j)), sh);
    }
    if (rc->parsed()) {
      Json j;
      if (!perm.empty()) j["params"] = {{"perm", parse_perm(perm).images()}};
      return finish(run_experiment(make_config(sh, "rauzy-class", j)), sh);
    }
    if (pe->parsed()) {
      Iet t = perron_iet(parse_perm(perm), parse_loop(loop));
      std::cout << iet_to_json(t).dump(2) << '\n';
      return 0;
    }
    if (in->parsed()) {
      Iet t(parse_lengths(lengths), parse_perm(perm));
      auto [ind, map] = t.induce(ExactNumber::parse(u), ExactNumber::parse(v), cap);
      Json out = {{"induced", iet_to_json(ind)}, {"pieces", Json::array()}};
      for (std::size_t i = 0; i < map.pieces.size(); ++i)
        out["pieces"].push_back({{"lo", map.pieces[i].lo.str()},
                                 {"hi", map.pieces[i].hi.str()},
                                 {"return_time", map.return_times[i]}});
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (tm->parsed()) {
      Json j = iet_json();
      j["x"] = x;
      if (!sequence.empty()) j["sequence"] = Json::parse(sequence);
      if (!schedule.empty()) {
        Json sch = Json::array();
        std::istringstream ss2(schedule);
        std::string item;
        while (std::getline(ss2, item, ',')) {
          auto colon = item.find(':');
          if (colon == std::string::npos)
            throw ParseError("schedule entries look like N:M");
          sch.push_back({std::stol(item.substr(0, colon)),
                         std::stol(item.substr(colon + 1))});
        }
        j["schedule"] = sch;
      }
      return finish(run_experiment(make_config(sh, "target-measure", j)), sh);
    }
    if (ht->parsed()) {
      Json j = iet_json();
      j["x"] = x;
      j["params"] = {{"y", y}, {"k_min", k_min}, {"k_max", k_max}, {"cap", cap}};
      return finish(run_experiment(make_config(sh, "hitting-time", j)), sh);
    }
    if (ss->parsed()) {
      Json j;
      j["params"] = {{"instances", instances}, {"variant", variant}, {"seed", sh.seed}};
      return finish(run_experiment(make_config(sh, "separation-stats", j)), sh);
    }
    if (rs->parsed()) {
      Json j = iet_json();
      j["x"] = x;
      j["params"] = {{"j_max", j_max}, {"n_search", n_search}};
      return finish(run_experiment(make_config(sh, "rigidity-search", j)), sh);
    }
    if (cf->parsed()) {
      Json j;
      if (!alpha.empty())
        j["params"] = {{"alpha", alpha}, {"n", n}, {"bits", bits}};
      return finish(run_experiment(make_config(sh, "cf", j)), sh);
    }
    if (tg->parsed()) {
      GapMultiset gm = three_gaps(ExactNumber::parse(alpha), Int(big_n_str));
      std::cout << "gap_num,gap_den,count\n";
      for (const auto& [gap, cnt] : gm.gaps)
        std::cout << csv_num(gap) << ',' << csv_den(gap) << ',' << cnt.str()
                  << '\n';
      return 0;
    }
    if (sm->parsed()) {
      SplitMix64 rng(sh.seed);
      Json out = Json::array();
      for (int i = 0; i < count; ++i)
        out.push_back(iet_to_json(sample_random_iet(d, q, rng)));
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const InvalidParamsError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
