#include "nfcurve/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "nfcurve/io.hpp"
#include "nfcurve/parallel.hpp"

#ifndef NFCURVE_VERSION
#define NFCURVE_VERSION "0.0.0"
#endif

namespace nfcurve::cli {

namespace fs = std::filesystem;
using io::ordered_json;

namespace {

struct Shared {
  std::string out_dir;
  std::uint64_t seed = 42;
  std::string grid = "0:4:0.01";
  unsigned threads = 0;
};

struct CurveArgs {
  i64 q = 0;
  i64 h = 1;
  std::string mode = "centered";
};

struct GapsArgs {
  i64 q = 0;
  i64 h = 1;
  std::string t;
};

struct LimitArgs {
  double t = 0;
  std::string t_grid;
};

struct OmegaArgs {
  double t = 0;
  std::vector<double> lambdas;
  std::uint64_t samples = 1000000;
  bool quadrature = false;
};

struct ExpsumArgs {
  i64 p = 0;
  i64 h = 1;
  int D = 1;
  std::string mode = "sums";
  int count = 100;
};

struct ScanArgs {
  std::string kind;
  std::string t = "2.76";
  std::vector<std::string> t_list;
  std::vector<i64> h = {1};
  std::vector<i64> q;
  std::string q_range;
};

class Session {
 public:
  Session(std::string command, const Shared& shared, std::ostream& out)
      : command_(std::move(command)), shared_(shared), out_(out) {
    fs::create_directories(shared_.out_dir);
  }

  std::ofstream open(const std::string& name) {
    auto path = fs::path(shared_.out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    artifacts_.push_back(path.string());
    return f;
  }

  void write_json(const std::string& name, const ordered_json& j) {
    auto f = open(name);
    f << j.dump(2) << '\n';
  }

  void finish(const ordered_json& flags, const std::string& started) {
    ordered_json manifest = {{"command", command_},
                             {"flags", flags},
                             {"seed", shared_.seed},
                             {"version", NFCURVE_VERSION},
                             {"started", started},
                             {"artifacts", artifacts_}};
    std::ofstream f(fs::path(shared_.out_dir) / "manifest.json", std::ios::binary);
    f << manifest.dump(2) << '\n';
    for (const auto& a : artifacts_) out_ << a << '\n';
  }

 private:
  std::string command_;
  const Shared& shared_;
  std::ostream& out_;
  std::vector<std::string> artifacts_;
};

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

ordered_json shared_flags(const Shared& s) {
  return {{"out", s.out_dir}, {"seed", s.seed}, {"grid", s.grid}, {"threads", s.threads}};
}

std::vector<i64> parse_range(const std::string& text) {
  auto colon = text.find(':');
  require(colon != std::string::npos, "q range format lo:hi");
  i64 lo = std::stoll(text.substr(0, colon));
  i64 hi = std::stoll(text.substr(colon + 1));
  require(lo <= hi, "q range lo <= hi");
  std::vector<i64> out;
  for (i64 q = lo; q <= hi; ++q) out.push_back(q);
  return out;
}

void cmd_curve(const CurveArgs& a, Session& s) {
  if (a.mode == "union") {
    auto all = nf_union(a.q);
    auto f = s.open("nf_union_q" + std::to_string(a.q) + ".csv");
    f << "h,x,y\n";
    std::size_t total = 0;
    for (const auto& [h, set] : all) {
      for (const auto& p : set.points) f << h << ',' << p.x << ',' << p.y << '\n';
      total += set.size();
    }
    s.write_json("nf_union_q" + std::to_string(a.q) + ".json",
                 {{"q", a.q}, {"curves", all.size()}, {"count", total}, {"centered", false}});
    return;
  }
  require(a.mode == "centered" || a.mode == "nf", "mode in {centered, nf, union}");
  auto set = a.mode == "nf" ? build_nf_curve(a.q, a.h) : build_curve(a.q, a.h);
  std::string stem = (a.mode == "nf" ? "nf_q" : "curve_q") + std::to_string(a.q) + "_h" + std::to_string(set.h);
  auto f = s.open(stem + ".csv");
  io::write_points_csv(f, set);
  auto meta = io::points_metadata(set);
  if (set.diagonal) meta["diagonal"] = true;
  s.write_json(stem + ".json", meta);
}

void cmd_gaps(const GapsArgs& a, const Shared& sh, Session& s) {
  auto t = Rational::parse(a.t);
  auto grid = LambdaGrid::parse(sh.grid);
  auto set = build_curve(a.q, a.h);
  auto seq = angle_sequence(set, t);
  auto gaps = normalized_gaps(seq);
  auto lambdas = grid.values();
  {
    auto f = s.open("gaps_G.csv");
    io::write_gap_grid_csv(f, lambdas, empirical_G(gaps, lambdas));
  }
  {
    auto f = s.open("gaps_points.csv");
    io::write_point_gaps_csv(f, gap_per_point(set, t));
  }
  s.write_json("gaps_header.json", io::run_header(set, t, seq));
}

void cmd_limit(const LimitArgs& a, const Shared& sh, Session& s) {
  auto grid = LambdaGrid::parse(sh.grid);
  auto lambdas = grid.values();
  {
    require(a.t >= 1.0, "t >= 1 (no closed form below; use the omega module)");
    auto f = s.open("limit.csv");
    io::write_limit_csv(f, a.t, lambdas);
  }
  if (!a.t_grid.empty()) {
    auto tg = LambdaGrid::parse(a.t_grid);
    require(tg.lo >= 1.0, "t grid within t >= 1");
    auto ts = tg.values();
    auto f = s.open("tiles.csv");
    io::write_tiles_csv(f, tile_map(ts, lambdas));
  }
}

void cmd_omega(const OmegaArgs& a, const Shared& sh, Session& s) {
  require(!a.lambdas.empty(), "at least one lambda");
  auto f = s.open("omega.csv");
  io::write_omega_header(f);
  for (double l : a.lambdas) {
    OmegaSpec spec(a.t, l);
    io::write_omega_row(f, a.t, l, spec.D, omega_volume(a.t, l, a.samples, sh.seed, sh.threads));
  }
  if (a.quadrature) {
    auto q = s.open("omega_quadrature.csv");
    q << "t,lambda,D,quadrature\n";
    for (double l : a.lambdas) {
      q << io::fmt_double(a.t) << ',' << io::fmt_double(l) << ",1," << io::fmt_double(omega_volume_quadrature(a.t, l))
        << '\n';
    }
  }
}

void cmd_expsum(const ExpsumArgs& a, const Shared& sh, Session& s) {
  require(a.count >= 1, "count >= 1");
  auto tuple = neighbor_flip_tuple(a.p, a.h, a.D);
  const std::uint64_t key = sh.seed;
  std::uint64_t counter = 0;
  auto draw = [&](i64 lo, i64 hi) {
    return lo + static_cast<i64>(counter_uniform(key, counter++) * static_cast<double>(hi - lo + 1));
  };
  if (a.mode == "sums") {
    std::vector<io::SumRow> rows;
    for (int k = 0; k < a.count; ++k) {
      io::SumRow row{a.p, draw(0, a.p - 1), {}, {}};
      bool nonzero = false;
      for (std::size_t j = 0; j < tuple.d(); ++j) {
        row.b.push_back(draw(0, a.p - 1));
        nonzero = nonzero || row.b.back() != 0;
      }
      if (!nonzero) row.b.back() = 1;
      row.value = complete_sum(tuple, row.a, row.b);
      rows.push_back(std::move(row));
    }
    auto f = s.open("sums.csv");
    io::write_sums_csv(f, rows);
    return;
  }
  require(a.mode == "boxes", "mode in {sums, boxes}");
  std::vector<io::BoxRow> rows;
  for (int k = 0; k < a.count; ++k) {
    auto interval = [&] {
      i64 x = draw(0, a.p - 1), y = draw(0, a.p - 1);
      return Interval{std::min(x, y), std::max(x, y)};
    };
    BoxSpec box{interval(), {}};
    for (std::size_t j = 0; j < tuple.d(); ++j) box.ranges.push_back(interval());
    rows.push_back({a.p, tuple.d(), box_count(tuple, box)});
  }
  auto f = s.open("boxes.csv");
  io::write_boxes_csv(f, rows);
}

void write_curves_csv(std::ofstream& f, const LambdaGrid& grid, const std::vector<std::string>& names,
                      const std::vector<std::vector<double>>& curves) {
  f << "lambda";
  for (const auto& n : names) f << ',' << n;
  f << '\n';
  auto lambdas = grid.values();
  for (std::size_t k = 0; k < lambdas.size(); ++k) {
    f << io::fmt_double(lambdas[k]);
    for (const auto& c : curves) f << ',' << io::fmt_double(c[k]);
    f << '\n';
  }
}

void cmd_scan(const ScanArgs& a, const Shared& sh, Session& s) {
  auto grid = LambdaGrid::parse(sh.grid);
  auto t = Rational::parse(a.t);
  std::vector<i64> qs = a.q;
  if (!a.q_range.empty()) {
    auto r = parse_range(a.q_range);
    qs.insert(qs.end(), r.begin(), r.end());
  }
  ordered_json report = {{"kind", a.kind},
                         {"config", {{"t", t.str()}, {"h", a.h}, {"q", qs}, {"grid", sh.grid}}},
                         {"cells", ordered_json::array()}};
  std::vector<std::string> names;
  std::vector<std::vector<double>> curves;
  auto cells = [&](const std::vector<DistanceReport>& rs) {
    for (const auto& r : rs) report["cells"].push_back(io::to_json(r));
  };
  require(!a.h.empty(), "h list nonempty");

  if (a.kind == "convergence") {
    require(!qs.empty(), "q list nonempty");
    cells(convergence_scan(t, a.h.front(), qs, grid, sh.threads));
    for (i64 q : qs) {
      names.push_back("q" + std::to_string(q));
      curves.push_back(empirical_curve(q, a.h.front(), t, grid));
    }
    names.push_back("limit");
    curves.push_back(limit_curve(t.to_double(), grid));
  } else if (a.kind == "h-independence") {
    require(qs.size() == 1, "exactly one prime q");
    cells(h_independence(t, qs.front(), a.h, grid, sh.threads));
    for (i64 h : a.h) {
      names.push_back("h" + std::to_string(h));
      curves.push_back(empirical_curve(qs.front(), h, t, grid));
    }
  } else if (a.kind == "composite") {
    require(!qs.empty(), "q list nonempty");
    auto c = composite_contrast(qs, t, a.h.front(), grid, sh.threads);
    cells(c.to_limit);
    cells(c.prime_pairs);
    report["skipped_even"] = c.skipped_even;
    for (const auto& r : c.to_limit) {
      names.push_back("q" + std::to_string(r.q));
      curves.push_back(empirical_curve(r.q, a.h.front(), t, grid));
    }
  } else if (a.kind == "equidistribution") {
    require(!qs.empty(), "q list nonempty");
    for (i64 q : qs) {
      report["cells"].push_back(
          {{"q", q}, {"h", a.h.front()}, {"t", t.str()}, {"ks", equidistribution_check(q, a.h.front(), t)}});
    }
  } else if (a.kind == "exp-limit") {
    require(qs.size() == 1, "exactly one prime q");
    std::vector<Rational> ts;
    for (const auto& txt : a.t_list) ts.push_back(Rational::parse(txt));
    require(!ts.empty(), "t list nonempty");
    report["config"]["t_list"] = a.t_list;
    report["threshold_note"] = "0.05 closeness to exp(-lambda) is a harness choice";
    for (const auto& r : exponential_limit_scan(qs.front(), a.h.front(), ts, grid, sh.threads)) {
      report["cells"].push_back(io::to_json(r.to_exp));
      if (r.to_limit) report["cells"].push_back(io::to_json(*r.to_limit));
    }
    for (const auto& tt : ts) {
      names.push_back("t" + tt.str());
      curves.push_back(empirical_curve(qs.front(), a.h.front(), tt, grid));
    }
  } else {
    throw PreconditionError("kind in {convergence, h-independence, composite, equidistribution, exp-limit}");
  }
  s.write_json("scan_" + a.kind + ".json", report);
  if (!curves.empty()) {
    auto f = s.open("scan_" + a.kind + "_curves.csv");
    write_curves_csv(f, grid, names, curves);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Neighbor-flips modular curves: angular gap statistics"};
  app.require_subcommand(1);
  // --h is the shift, so help keeps only its long form.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", NFCURVE_VERSION);

  Shared shared;
  const char* env_out = std::getenv("NFCURVE_OUT");
  shared.out_dir = env_out && *env_out ? env_out : "nfcurve_out";

  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--out", shared.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--seed", shared.seed, "Seed for sampling")->capture_default_str();
    sub->add_option("--grid", shared.grid, "Lambda grid lo:hi:step")->capture_default_str();
    sub->add_option("--threads", shared.threads, "Worker threads (0 = all cores)")->capture_default_str();
  };

  CurveArgs curve;
  auto* c_curve = app.add_subcommand("curve", "Export A(q,h), NF(q,h) or the union NF(q)");
  c_curve->add_option("--q", curve.q, "Odd modulus >= 3")->required();
  c_curve->add_option("--h", curve.h, "Shift")->capture_default_str();
  c_curve->add_option("--mode", curve.mode, "centered | nf | union")->capture_default_str();
  add_shared(c_curve);

  GapsArgs gaps;
  auto* c_gaps = app.add_subcommand("gaps", "Empirical gap distribution of A(q,h)");
  c_gaps->add_option("--q", gaps.q, "Odd modulus >= 3")->required();
  c_gaps->add_option("--h", gaps.h, "Shift")->capture_default_str();
  c_gaps->add_option("--t", gaps.t, "Observer distance, exact decimal or p/q")->required();
  add_shared(c_gaps);

  LimitArgs limit;
  auto* c_limit = app.add_subcommand("limit", "Closed-form G and g for t >= 1");
  c_limit->add_option("--t", limit.t, "t >= 1")->required();
  c_limit->add_option("--t-grid", limit.t_grid, "Also emit a tile map over lo:hi:step in t");
  add_shared(c_limit);

  OmegaArgs omega;
  auto* c_omega = app.add_subcommand("omega", "Monte Carlo volume of Omega(t, lambda)");
  c_omega->add_option("--t", omega.t, "t > 0")->required();
  c_omega->add_option("--lambda", omega.lambdas, "One or more lambda values")->required()->delimiter(',');
  c_omega->add_option("--samples", omega.samples, "Samples >= 10^4")->capture_default_str();
  c_omega->add_flag("--quadrature", omega.quadrature, "Also run the D = 1 quadrature (t > 2)");
  add_shared(c_omega);

  ExpsumArgs expsum;
  auto* c_expsum = app.add_subcommand("expsum", "Exponential sums and box counts for neighbor-flip tuples");
  c_expsum->add_option("--p", expsum.p, "Prime")->required();
  c_expsum->add_option("--h", expsum.h, "Shift")->capture_default_str();
  c_expsum->add_option("--D", expsum.D, "Interference order")->capture_default_str();
  c_expsum->add_option("--mode", expsum.mode, "sums | boxes")->capture_default_str();
  c_expsum->add_option("--count", expsum.count, "Random draws")->capture_default_str();
  add_shared(c_expsum);

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("scan", "Experiments across moduli, shifts and distances");
  c_scan->add_option("--kind", scan.kind, "convergence | h-independence | composite | equidistribution | exp-limit")
      ->required();
  c_scan->add_option("--t", scan.t, "Observer distance")->capture_default_str();
  c_scan->add_option("--t-list", scan.t_list, "Distances for exp-limit")->delimiter(',');
  c_scan->add_option("--h", scan.h, "Shift(s)")->delimiter(',');
  c_scan->add_option("--q", scan.q, "Moduli")->delimiter(',');
  c_scan->add_option("--q-range", scan.q_range, "Consecutive moduli lo:hi");
  add_shared(c_scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kValidationError;
  }

  const std::string started = now_iso8601();
  try {
    ordered_json flags = shared_flags(shared);
    if (c_curve->parsed()) {
      Session s("curve", shared, out);
      cmd_curve(curve, s);
      flags.update({{"q", curve.q}, {"h", curve.h}, {"mode", curve.mode}});
      s.finish(flags, started);
    } else if (c_gaps->parsed()) {
      Session s("gaps", shared, out);
      cmd_gaps(gaps, shared, s);
      flags.update({{"q", gaps.q}, {"h", gaps.h}, {"t", gaps.t}});
      s.finish(flags, started);
    } else if (c_limit->parsed()) {
      Session s("limit", shared, out);
      cmd_limit(limit, shared, s);
      flags.update({{"t", limit.t}, {"t_grid", limit.t_grid}});
      s.finish(flags, started);
    } else if (c_omega->parsed()) {
      Session s("omega", shared, out);
      cmd_omega(omega, shared, s);
      flags.update({{"t", omega.t}, {"lambda", omega.lambdas}, {"samples", omega.samples}, {"quadrature", omega.quadrature}});
      s.finish(flags, started);
    } else if (c_expsum->parsed()) {
      Session s("expsum", shared, out);
      cmd_expsum(expsum, shared, s);
      flags.update({{"p", expsum.p}, {"h", expsum.h}, {"D", expsum.D}, {"mode", expsum.mode}, {"count", expsum.count}});
      s.finish(flags, started);
    } else if (c_scan->parsed()) {
      Session s("scan", shared, out);
      cmd_scan(scan, shared, s);
      flags.update({{"kind", scan.kind}, {"t", scan.t}, {"t_list", scan.t_list}, {"h", scan.h}, {"q", scan.q},
                    {"q_range", scan.q_range}});
      s.finish(flags, started);
    }
  } catch (const PreconditionError& e) {
    err << "error: precondition violated: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kOk;
}

}  // namespace nfcurve::cli
