#include "symwalk_cli.hpp"

#include "time_expr.hpp"

#include "symwalk/bounds.hpp"
#include "symwalk/checks.hpp"
#include "symwalk/distances.hpp"
#include "symwalk/montecarlo.hpp"
#include "symwalk/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace symwalk::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct Common {
  unsigned threads = 0;
  unsigned precision_bits = 128;
  std::string out_path;
};

int digits_for(unsigned bits) {
  const int d = static_cast<int>(std::ceil(bits * 0.30102999566398120));
  return std::clamp(d, 1, 33);
}

std::string format_real(const Real& x, int digits) {
  if (isnan(x)) return "nan";
  if (isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0) return "0";
  if (abs(x) < Real(1e-4)) return x.str(digits, std::ios_base::scientific);
  return x.str(digits);
}

double to_json_number(const Real& x) { return static_cast<double>(x); }

void apply_threads(const Common& c) {
  if (std::getenv("SYMWALK_THREADS")) return;  // the environment wins
  if (c.threads > 0) set_thread_count(c.threads);
}

// Writes to --out when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

ordered_json manifest(const std::string& command, const ordered_json& params,
                      std::optional<std::uint64_t> seed) {
  ordered_json m;
  m["schema_version"] = kSchemaVersion;
  m["command"] = command;
  m["version"] = kVersion;
  m["parameters"] = params;
  m["seed"] = seed ? ordered_json(*seed) : ordered_json(nullptr);
  return m;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- profile -----------------------------------------------------------------

struct ProfileArgs {
  std::string walk = "rt";
  int n = 0;
  std::string group = "sn";
  std::string mode = "discrete";
  std::string grid = "auto";
  std::string format = "csv";
};

// Auto grid: 41 evenly spaced times on [0, 2 T], with T the walk's
// characteristic time.
std::vector<Real> auto_grid(const std::string& walk, int n, TimeMode mode,
                            const std::optional<ClassMeasure>& q) {
  const Real rn = n, logn = log(rn);
  Real center = rn / 2 * logn;
  if (walk == "ttr-bound") {
    center = rn * logn;
  } else if (q && walk != "rt" && mode == TimeMode::discrete) {
    int supp = 0;
    for (const auto& [cls, w] : q->atoms) supp = std::max(supp, cls.support());
    center = rn / Real(supp) * logn;
  }
  std::vector<Real> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(2 * center * Real(i) / 40);
  return grid;
}

int cmd_profile(const ProfileArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  if (a.n < 1) throw std::invalid_argument("--n must be positive");
  if (a.group != "sn" && a.group != "an") throw std::invalid_argument("--group must be sn or an");
  if (a.mode != "discrete" && a.mode != "continuous")
    throw std::invalid_argument("--mode must be discrete or continuous");
  if (a.format != "csv" && a.format != "json") throw std::invalid_argument("--format must be csv or json");
  const TimeMode mode = a.mode == "discrete" ? TimeMode::discrete : TimeMode::continuous;
  if (a.n > kMaxSpectrumDegree)
    throw ResourceLimitError("profiles are limited to n <= " + std::to_string(kMaxSpectrumDegree));

  std::optional<ClassMeasure> q;
  if (a.walk != "ttr-bound") q = class_measure_from_name(a.walk, a.n);
  else if (a.group == "an") throw std::invalid_argument("ttr-bound is only defined on sn");

  const std::vector<Real> times =
      a.grid == "auto" ? auto_grid(a.walk, a.n, mode, q) : eval_time_list(a.grid, a.n);
  for (const Real& t : times)
    if (t < 0) throw std::invalid_argument("time grid contains a negative time");

  Group reported = a.group == "an" ? Group::An : Group::Sn;
  std::vector<DistancePoint> points;
  if (!q) {
    points = build_profile(transpose_top_bound_spectrum(a.n), a.walk, times, mode).points;
  } else if (reported == Group::An && !q->even()) {
    if (mode == TimeMode::continuous) {
      err << "note: " << a.walk << " is not supported on A_n; reporting the S_n curve\n";
      reported = Group::Sn;
      points = build_profile(spectrum(*q, Group::Sn), a.walk, times, mode).points;
    } else {
      // Even step counts only: q^(2s) restricted to A_n has the squared spectrum.
      err << "note: odd class on A_n; reporting q^(2s) at even step counts\n";
      const Spectrum sq = squared_walk_spectrum_on_an(*q);
      for (const Real& raw : times) {
        const Real half = ceil(ceil(raw) / 2);
        const auto pt = build_profile(sq, a.walk, {half}, TimeMode::discrete).points.front();
        points.push_back({2 * half, pt.d2, pt.log10_d2_sq});
      }
    }
  } else {
    points = build_profile(spectrum(*q, reported), a.walk, times, mode).points;
  }

  ordered_json params{{"walk", a.walk}, {"n", a.n}, {"group", a.group}, {"mode", a.mode},
                      {"t_grid", a.grid}, {"format", a.format},
                      {"precision_bits", c.precision_bits}};
  const ordered_json m = manifest("profile", params, std::nullopt);
  const int digits = digits_for(c.precision_bits);
  Sink sink(c.out_path, out);
  std::ostream& os = sink.get();
  if (a.format == "csv") {
    os << "# " << m.dump() << '\n';
    os << "walk,group,n,t,d2,log10_d2_sq\n";
    for (const auto& p : points)
      os << a.walk << ',' << to_string(reported) << ',' << a.n << ',' << format_real(p.t, digits)
         << ',' << format_real(p.d2, digits) << ',' << format_real(p.log10_d2_sq, digits) << '\n';
    err << "wall time: " << seconds_since(start) << " s\n";
  } else {
    ordered_json doc;
    doc["manifest"] = m;
    doc["manifest"]["wall_time_s"] = seconds_since(start);
    doc["results"] = ordered_json::array();
    for (const auto& p : points)
      doc["results"].push_back({{"walk", a.walk}, {"group", to_string(reported)}, {"n", a.n},
                                {"t", to_json_number(p.t)}, {"d2", to_json_number(p.d2)},
                                {"log10_d2_sq", to_json_number(p.log10_d2_sq)}});
    os << doc.dump(2) << '\n';
  }
  return kSuccess;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string n_range;
  std::string c_list;
};

std::pair<int, int> parse_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --n range: " + text);
    }
    if (used != s.size()) throw std::invalid_argument("bad --n range: " + text);
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
  if (lo > hi) throw std::invalid_argument("empty --n range: " + text);
  return {lo, hi};
}

std::vector<Real> parse_c_list(const std::string& text) {
  std::vector<Real> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_real(parse_rational(item)));
  if (out.empty()) throw std::invalid_argument("empty --c list");
  return out;
}

ordered_json report_json(const BoundReport& r) {
  ordered_json j;
  j["name"] = r.name;
  j["n"] = r.n;
  j["c"] = r.c ? ordered_json(to_json_number(*r.c)) : ordered_json(nullptr);
  j["t"] = r.t ? ordered_json(to_json_number(*r.t)) : ordered_json(nullptr);
  j["guaranteed"] = to_json_number(r.guaranteed);
  j["computed"] = to_json_number(r.computed);
  j["pass"] = r.pass;
  ordered_json terms = ordered_json::object();
  for (const auto& [k, v] : r.terms) terms[k] = to_json_number(v);
  j["terms"] = terms;
  return j;
}

const std::vector<std::string>& oracle_walks() {
  static const std::vector<std::string> walks{"rt", "ttr", "ri", "class:3", "class:4", "lazy:3:1/2"};
  return walks;
}

BoundReport oracle_report(const std::string& walk, int n) {
  const std::vector<Real> times{0, 0.25, 0.5, 1, 2, 4, 8, 16};
  const OracleAgreement a = oracle_agreement(walk, n, 20, times);
  BoundReport r;
  r.name = "oracle:" + walk;
  r.n = n;
  r.computed = std::max(a.max_discrete_error, a.max_continuous_error);
  r.guaranteed = Real(1e-8);
  r.pass = r.computed <= r.guaranteed && a.min_tv_margin >= 0;
  r.terms = {{"discrete_error", a.max_discrete_error},
             {"continuous_error", a.max_continuous_error},
             {"min_chi_minus_2tv", a.min_tv_margin},
             {"exact_mode", a.exact_mode ? Real(1) : Real(0)}};
  return r;
}

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  static const std::map<std::string, std::pair<std::string, std::string>> defaults{
      // suite -> (default n range, default c list)
      {"rt-discrete", {"15..40", "0,1,2,4"}}, {"rt-continuous", {"10..40", "2,3,4"}},
      {"ttr", {"5..60", "0,1,2"}},            {"four-cycle", {"11..25", "2,3"}},
      {"lemmas", {"9..200", ""}},              {"oracle", {"4..6", ""}},
      {"random-insertion", {"10..40", "2,3"}}};
  const auto it = defaults.find(a.suite);
  if (it == defaults.end()) throw std::invalid_argument("unknown suite: " + a.suite);
  const std::string n_text = a.n_range.empty() ? it->second.first : a.n_range;
  const std::string c_text = a.c_list.empty() ? it->second.second : a.c_list;
  const auto [lo, hi] = parse_range(n_text);

  std::vector<BoundReport> reports;
  if (a.suite == "lemmas") {
    for (int n = lo; n <= hi; ++n)
      for (auto& r : lemma_reports(n)) reports.push_back(std::move(r));
  } else if (a.suite == "oracle") {
    if (hi > kMaxDenseDegree)
      throw ResourceLimitError("oracle suite is limited to n <= " + std::to_string(kMaxDenseDegree));
    if (lo < 3) throw std::invalid_argument("oracle suite needs n >= 3");
    for (int n = lo; n <= hi; ++n)
      for (const auto& w : oracle_walks()) {
        if (w == "class:4" && n < 4) continue;
        reports.push_back(oracle_report(w, n));
      }
  } else {
    const TheoremWalk walk = a.suite == "rt-discrete"     ? TheoremWalk::rt_discrete
                             : a.suite == "rt-continuous" ? TheoremWalk::rt_continuous
                             : a.suite == "ttr"           ? TheoremWalk::ttr
                             : a.suite == "four-cycle"    ? TheoremWalk::four_cycle
                                                          : TheoremWalk::random_insertion;
    if (hi > kMaxSpectrumDegree && walk != TheoremWalk::ttr)
      throw ResourceLimitError("spectral suites are limited to n <= " +
                               std::to_string(kMaxSpectrumDegree));
    const auto cs = parse_c_list(c_text);
    for (int n = lo; n <= hi; ++n)
      for (const Real& cv : cs) reports.push_back(theorem_bound(walk, n, cv));
  }

  bool all = true;
  ordered_json doc;
  ordered_json params{{"suite", a.suite}, {"n", n_text}, {"c", c_text}};
  doc["manifest"] = manifest("verify", params, std::nullopt);
  doc["manifest"]["wall_time_s"] = seconds_since(start);
  doc["results"] = ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    doc["results"].push_back(report_json(r));
  }
  doc["all_pass"] = all;
  Sink sink(c.out_path, out);
  sink.get() << doc.dump(2) << '\n';
  if (!all) {
    int failed = 0;
    for (const auto& r : reports) failed += r.pass ? 0 : 1;
    err << failed << " of " << reports.size() << " checks failed\n";
  }
  return all ? kSuccess : kVerificationFailed;
}

// --- simulate ----------------------------------------------------------------

struct SimulateArgs {
  std::string walk = "ttr";
  int n = 0;
  std::string t = "0";
  int j = 2;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
};

int cmd_simulate(const SimulateArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  if (a.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (a.samples < 1000) throw std::invalid_argument("--N must be at least 1000");
  const Real t_real = eval_time_expr(a.t, a.n);
  if (t_real < 0) throw std::invalid_argument("--t must be non-negative");
  const auto steps = static_cast<std::uint64_t>(ceil(t_real));
  const auto est = fixed_point_tv_lower(a.n, steps, a.j, a.samples, a.seed, a.walk,
                                        [&](std::uint64_t done) {
                                          err << "progress: " << done << " trajectories\n";
                                        });
  const int digits = digits_for(c.precision_bits);
  ordered_json params{{"walk", a.walk}, {"n", a.n}, {"t", a.t}, {"steps", steps},
                      {"j", a.j},       {"N", a.samples}};
  Sink sink(c.out_path, out);
  std::ostream& os = sink.get();
  os << "# " << manifest("simulate", params, a.seed).dump() << '\n';
  os << "walk,n,t,j,N,seed,estimate,std_error,empirical,u_Aj\n";
  os << a.walk << ',' << a.n << ',' << steps << ',' << a.j << ',' << a.samples << ',' << a.seed
     << ',' << format_real(Real(est.estimate), 17) << ',' << format_real(Real(est.standard_error), 17)
     << ',' << format_real(Real(est.empirical), 17) << ',' << format_real(est.uniform_mass, digits)
     << '\n';
  err << "wall time: " << seconds_since(start) << " s\n";
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral and brute-force analysis of random walks on S_n and A_n", "symwalk"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--threads", common.threads, "worker threads (0 = all cores; SYMWALK_THREADS overrides)");
    sub->add_option("--precision", common.precision_bits,
                    "significant bits of emitted numbers (computation is always binary128)")
        ->check(CLI::Range(8u, 4096u));
    sub->add_option("--out", common.out_path, "write output to this file instead of stdout");
  };

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "d2 distance profile over a time grid");
  profile->add_option("--walk", pa.walk, "rt | ttr-bound | class:<ct> | lazy:<ct>:<eps>");
  profile->add_option("--n", pa.n, "degree")->required();
  profile->add_option("--group", pa.group, "sn | an");
  profile->add_option("--mode", pa.mode, "discrete | continuous");
  profile->add_option("--t-grid", pa.grid, "auto or a comma list of expressions (nlogn, n, logn)");
  profile->add_option("--format", pa.format, "csv | json");
  add_common(profile);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "check a family of bounds; exit 1 on any failure");
  verify->add_option("--suite", va.suite,
                     "rt-discrete | rt-continuous | ttr | four-cycle | lemmas | oracle | random-insertion")
      ->required();
  verify->add_option("--n", va.n_range, "degree or range a..b");
  verify->add_option("--c", va.c_list, "comma list of c values");
  add_common(verify);

  SimulateArgs sa;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo fixed-point TV lower bound");
  simulate->add_option("--walk", sa.walk, "rt | ttr | ri | class:<ct> | lazy:<ct>:<eps>");
  simulate->add_option("--n", sa.n, "degree")->required();
  simulate->add_option("--t", sa.t, "steps; an expression, rounded up");
  simulate->add_option("--j", sa.j, "fixed-point threshold");
  simulate->add_option("--N", sa.samples, "trajectories (>= 1000)");
  simulate->add_option("--seed", sa.seed, "random seed");
  add_common(simulate);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }

  try {
    apply_threads(common);
    if (*profile) return cmd_profile(pa, common, out, err);
    if (*verify) return cmd_verify(va, common, out, err);
    return cmd_simulate(sa, common, out, err);
  } catch (const ResourceLimitError& e) {
    err << "resource guard: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidArguments;
  }
}

}  // namespace symwalk::cli
