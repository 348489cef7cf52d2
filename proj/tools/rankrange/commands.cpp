// Copyright 2026 The rankrange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "io.hpp"
#include "rankrange/geometry.hpp"
#include "rankrange/membership.hpp"
#include "rankrange/qec.hpp"
#include "rankrange/random.hpp"
#include "rankrange/rank_range.hpp"
#include "rankrange/star.hpp"
#include "rankrange/tverberg.hpp"

#ifndef RANKRANGE_VERSION
#define RANKRANGE_VERSION "unknown"
#endif

namespace rankrange::cli {
namespace {

struct Report {
  Json result;
  int code = kExitOk;
};

struct Session {
  std::string command;
  Json inputs = Json::object();
  Json config = Json::object();
  unsigned workers = 1;

  Json load(const std::string& role, const std::string& path) {
    InputFile f = read_input(path);
    inputs[role] = Json{{"path", path}, {"digest", f.digest}};
    return std::move(f.json);
  }
};

unsigned resolve_workers(std::optional<unsigned> flag) {
  if (flag) return std::max(1u, *flag);
  const char* env = std::getenv("RANKRANGE_WORKERS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024) {
    throw DomainError(std::string("RANKRANGE_WORKERS must be an integer in [1, 1024], got '") + env +
                      "'");
  }
  return static_cast<unsigned>(v);
}

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<RealVector>& rows) {
  std::ofstream os(path);
  if (!os) throw MalformedInput("cannot write '" + path + "'");
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n' << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
    os << '\n';
  }
}

std::vector<std::string> coordinate_header(std::size_t m, std::initializer_list<std::string> extra) {
  std::vector<std::string> h;
  for (std::size_t j = 0; j < m; ++j) h.push_back("a" + std::to_string(j + 1));
  h.insert(h.end(), extra);
  return h;
}

struct ChannelSource {
  std::string path;
  std::string builtin;
  double parameter = 0.1;

  void bind(CLI::App* app) {
    auto* file = app->add_option("--channel", path, "Channel JSON file {\"n\", \"kraus\"}");
    auto* named = app->add_option("--builtin", builtin,
                                  "Built-in channel: bit_flip_3q, phase_flip_3q, "
                                  "single_qubit_bitflip, depolarizing_1q, amplitude_damping. "
                                  "Qubit 1 is the most significant tensor factor.");
    file->excludes(named);
    app->add_option("--p", parameter, "Built-in channel parameter in [0, 1]")->capture_default_str();
  }

  KrausChannel load(Session& s) const {
    if (!path.empty()) {
      s.config["channel"] = path;
      return channel_from_json(s.load("channel", path));
    }
    if (builtin.empty()) throw MalformedInput("one of --channel or --builtin is required");
    s.config["builtin"] = builtin;
    s.config["p"] = parameter;
    return builtin_channel(builtin, parameter).channel;
  }
};

// range ----------------------------------------------------------------------

struct RangeArgs {
  std::string tuple;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t directions = 512;
  int restarts = 4;
  double accept = 1e-8;
  double tol = 1e-8;
  std::string check;
  std::string csv;
};

Report range_check(Session& s, const RangeArgs& args, const HermitianTuple& a) {
  s.config["check"] = args.check;
  s.config["tol"] = args.tol;
  const RangeCertificate claimed = certificate_from_json(s.load("certificate", args.check));
  if (claimed.point.size() != a.size()) {
    throw DimensionError("range --check: certificate point has " +
                         std::to_string(claimed.point.size()) + " coordinates, tuple has " +
                         std::to_string(a.size()));
  }
  const Verification v = verify_point(a, claimed.witness, args.tol);
  const double at_claim = residual_at(a, claimed.witness, claimed.point);
  const bool ok = v.accepted && at_claim <= args.tol;
  return {Json{{"accepted", ok},
               {"k", claimed.k()},
               {"point", claimed.point},
               {"residual", at_claim},
               {"trace_point", v.certificate.point},
               {"trace_residual", v.certificate.residual}},
          ok ? kExitOk : kExitFailedCheck};
}

Report range_cmd(Session& s, const RangeArgs& args) {
  s.config["tuple"] = args.tuple;
  s.config["k"] = args.k;
  const HermitianTuple a = tuple_from_json(s.load("tuple", args.tuple));
  if (!args.check.empty()) return range_check(s, args, a);

  s.config["seed"] = args.seed;
  s.config["samples"] = args.samples;
  s.config["directions"] = args.directions;
  s.config["restarts"] = args.restarts;
  s.config["accept"] = args.accept;
  const HalfspaceSet h = outer_halfspaces(a, args.k, args.directions, derive_seed(args.seed, 0),
                                          s.workers);
  const SampleOptions opts{args.restarts, args.accept, s.workers};
  const auto certs = sample_inner(a, args.k, args.samples, derive_seed(args.seed, 1), opts);

  Json samples = Json::array();
  double min_slack = std::numeric_limits<double>::infinity();
  std::vector<RealVector> rows;
  for (const auto& c : certs) {
    min_slack = std::min(min_slack, check_against_halfspaces(h, c.point).min_slack);
    samples.push_back(to_json(c));
    RealVector row = c.point;
    row.push_back(c.residual);
    rows.push_back(std::move(row));
  }
  if (!args.csv.empty()) {
    s.config["csv"] = args.csv;
    write_csv(args.csv, coordinate_header(a.size(), {"residual"}), rows);
  }
  const bool consistent = certs.empty() || min_slack >= -args.tol;
  Json result{{"k", args.k},
              {"requested", args.samples},
              {"accepted", certs.size()},
              {"consistent", consistent},
              {"min_slack", certs.empty() ? Json(nullptr) : Json(min_slack)},
              {"halfspaces", to_json(h)},
              {"samples", std::move(samples)}};
  return {std::move(result), consistent ? kExitOk : kExitFailedCheck};
}

// construct ------------------------------------------------------------------

struct ConstructArgs {
  std::string tuple;
  std::size_t k = 1;
  double tol = 1e-8;
};

Report construct_cmd(Session& s, const ConstructArgs& args) {
  s.config["tuple"] = args.tuple;
  s.config["k"] = args.k;
  s.config["tol"] = args.tol;
  const HermitianTuple a = tuple_from_json(s.load("tuple", args.tuple));
  const RangeCertificate c = construct_point(a, args.k);
  const bool ok = c.residual <= args.tol;
  return {Json{{"m", a.size()},
               {"n", a.dim()},
               {"required_dimension", existence_dimension(a.size(), args.k)},
               {"partition_points", tverberg_point_count(a.size(), args.k)},
               {"certificate", to_json(c)}},
          ok ? kExitOk : kExitFailedCheck};
}

// find-code / verify-code ----------------------------------------------------

struct FindCodeArgs {
  ChannelSource channel;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  int restarts = 50;
  double accept = 1e-6;
  double opt_tol = 1e-10;
  bool no_constructive = false;
};

Report find_code_cmd(Session& s, const FindCodeArgs& args) {
  const KrausChannel ch = args.channel.load(s);
  s.config["k"] = args.k;
  s.config["seed"] = args.seed;
  s.config["restarts"] = args.restarts;
  s.config["accept"] = args.accept;
  s.config["opt_tol"] = args.opt_tol;
  s.config["constructive"] = !args.no_constructive;
  FindCodeOptions opts;
  opts.membership.seed = args.seed;
  opts.membership.restarts = args.restarts;
  opts.membership.tol = args.opt_tol;
  opts.membership.workers = s.workers;
  opts.accept = args.accept;
  opts.allow_constructive = !args.no_constructive;
  const FindCodeResult f = find_code(ch, args.k, opts);
  return {Json{{"found", f.found},
               {"route", to_string(f.route)},
               {"kept_operators", f.kept_operators},
               {"reduced_size", f.reduced_size},
               {"code", to_json(f.best)}},
          f.found ? kExitOk : kExitFailedCheck};
}

struct VerifyCodeArgs {
  ChannelSource channel;
  std::string code;
  double tol = 1e-8;
};

Report verify_code_cmd(Session& s, const VerifyCodeArgs& args) {
  const KrausChannel ch = args.channel.load(s);
  s.config["code"] = args.code;
  s.config["tol"] = args.tol;
  const CodeCertificate claimed = code_from_json(s.load("code", args.code));
  const CodeVerification v = verify_code(ch, claimed.basis, args.tol);
  return {Json{{"accepted", v.accepted}, {"code", to_json(v.certificate)}},
          v.accepted ? kExitOk : kExitFailedCheck};
}

// starshape ------------------------------------------------------------------

struct StarArgs {
  std::string tuple;
  std::size_t center_k = 2;
  std::size_t k = 1;
  std::size_t points = 11;
  std::uint64_t seed = 0;
  std::string csv;
};

Report starshape_cmd(Session& s, const StarArgs& args) {
  s.config["tuple"] = args.tuple;
  s.config["center_k"] = args.center_k;
  s.config["k"] = args.k;
  s.config["points"] = args.points;
  s.config["seed"] = args.seed;
  const HermitianTuple a = tuple_from_json(s.load("tuple", args.tuple));
  const RangeCertificate center = construct_point(a, args.center_k);
  const std::vector<double> ts = equally_spaced(args.points);
  StarSegment seg;
  if (args.k == 1) {
    Rng rng(args.seed);
    const ComplexVector x = random_unit_vector(a.dim(), rng);
    seg = star_segment_rank_1(a, center, x, ts);
  } else {
    const SampleOptions opts{8, 1e-10, s.workers};
    const auto tips = sample_inner(a, args.k, 1, args.seed, opts);
    if (tips.empty()) {
      throw NumericalFailure("starshape: no rank-" + std::to_string(args.k) +
                                 " tip point found for this seed",
                             std::numeric_limits<double>::infinity());
    }
    seg = star_segment_rank_k(a, center, tips.front(), ts);
  }

  Json samples = Json::array();
  double worst = 0.0;
  std::vector<RealVector> rows;
  for (const auto& p : seg.samples) {
    RealVector target(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) {
      target[j] = seg.center.point[j] + p.t * (seg.tip.point[j] - seg.center.point[j]);
    }
    const double r = residual_at(a, p.cert.witness, target);
    worst = std::max(worst, r);
    samples.push_back(Json{{"t", p.t}, {"segment_residual", r}, {"certificate", to_json(p.cert)}});
    RealVector row = p.cert.point;
    row.push_back(p.t);
    row.push_back(r);
    rows.push_back(std::move(row));
  }
  if (!args.csv.empty()) {
    s.config["csv"] = args.csv;
    write_csv(args.csv, coordinate_header(a.size(), {"t", "residual"}), rows);
  }
  return {Json{{"case", to_string(seg.star_case)},
               {"first_row_rank", seg.first_row_rank},
               {"max_segment_residual", worst},
               {"center", to_json(seg.center)},
               {"tip", to_json(seg.tip)},
               {"samples", std::move(samples)}},
          kExitOk};
}

// sphere-demo ----------------------------------------------------------------

struct SphereArgs {
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t interior = 0;
  int restarts = 50;
  double tol = 1e-8;
};

Report sphere_demo_cmd(Session& s, const SphereArgs& args) {
  s.config["k"] = args.k;
  s.config["seed"] = args.seed;
  s.config["count"] = args.count;
  s.config["interior"] = args.interior;
  s.config["restarts"] = args.restarts;
  s.config["tol"] = args.tol;
  const SphereFamily fam = sphere_family(args.k);
  Rng rng(args.seed);
  std::size_t verified = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < args.count; ++i) {
    const RealVector a = random_direction(3, rng);
    const double r = residual_at(fam.tuple, fam.witness(a), a);
    worst = std::max(worst, r);
    if (r <= args.tol) ++verified;
  }

  std::size_t rejected = 0;
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < args.interior; ++i) {
    RealVector a = random_direction(3, rng);
    const double radius = 0.9 * std::cbrt(rng.uniform());
    for (auto& v : a) v *= radius;
    MembershipOptions opts;
    opts.restarts = args.restarts;
    opts.seed = rng.next_seed();
    opts.workers = s.workers;
    const MembershipResult m = membership_solve(fam.tuple, a, args.k, opts);
    lowest = std::min(lowest, m.best.residual);
    if (m.best.residual > args.tol) ++rejected;
  }

  Json result{{"k", args.k},
              {"n", fam.tuple.dim()},
              {"witnesses", Json{{"tested", args.count},
                                 {"verified", verified},
                                 {"max_residual", worst}}}};
  if (args.interior > 0) {
    result["interior"] = Json{{"tested", args.interior},
                              {"rejected", rejected},
                              {"min_residual", lowest}};
  }
  const bool ok = verified == args.count && rejected == args.interior;
  return {std::move(result), ok ? kExitOk : kExitFailedCheck};
}

// oracle-interval ------------------------------------------------------------

struct IntervalArgs {
  std::string matrix;
  std::string tuple;
  std::size_t k = 1;
};

Report oracle_interval_cmd(Session& s, const IntervalArgs& args) {
  s.config["k"] = args.k;
  HermitianMatrix a;
  if (!args.matrix.empty()) {
    s.config["matrix"] = args.matrix;
    a = HermitianMatrix(matrix_from_json(s.load("matrix", args.matrix)));
  } else if (!args.tuple.empty()) {
    s.config["tuple"] = args.tuple;
    const HermitianTuple t = tuple_from_json(s.load("tuple", args.tuple));
    if (t.size() != 1) throw DimensionError("oracle-interval: tuple must hold exactly one matrix");
    a = t[0];
  } else {
    throw MalformedInput("one of --matrix or --tuple is required");
  }
  const auto iv = single_matrix_interval(a, args.k);
  if (!iv) return {Json{{"k", args.k}, {"interval", nullptr}, {"empty", true}}, kExitOk};
  return {Json{{"k", args.k},
               {"interval", {iv->lower, iv->upper}},
               {"empty", false},
               {"lower_witness", to_json(iv->lower_witness.matrix())},
               {"upper_witness", to_json(iv->upper_witness.matrix())}},
          kExitOk};
}

Json error_object(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Joint rank-k numerical ranges and quantum error-correcting codes"};
  app.name("rankrange");
  app.set_version_flag("--version", RANKRANGE_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<unsigned> workers;
  std::string output;
  app.add_option("--workers", workers, "Worker threads (default: RANKRANGE_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--output,-o", output, "Write the JSON report here instead of stdout");

  std::function<Report(Session&)> handler;
  const auto positive = CLI::PositiveNumber;

  RangeArgs range;
  auto* r = app.add_subcommand("range", "Outer half-spaces and sampled inner points of the rank-k range");
  r->add_option("--tuple", range.tuple, "Tuple JSON file {\"matrices\"}")->required();
  r->add_option("--k", range.k, "Rank")->check(positive)->capture_default_str();
  r->add_option("--seed", range.seed, "Random seed");
  r->add_option("--samples", range.samples, "Inner samples")->capture_default_str();
  r->add_option("--directions", range.directions, "Outer half-space directions")
      ->check(positive)->capture_default_str();
  r->add_option("--restarts", range.restarts, "Optimizer restarts per sample")
      ->check(positive)->capture_default_str();
  r->add_option("--accept", range.accept, "Residual accepted for a sample")
      ->check(positive)->capture_default_str();
  r->add_option("--tol", range.tol, "Verification tolerance")->check(positive)->capture_default_str();
  r->add_option("--check", range.check, "Verify a certificate JSON file against the tuple");
  r->add_option("--csv", range.csv, "Write sampled points as CSV");
  r->callback([&] {
    if (range.check.empty() && r->count("--seed") == 0) {
      throw CLI::RequiredError("--seed is required when sampling");
    }
    handler = [&](Session& s) { return range_cmd(s, range); };
  });

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Certified point of the rank-k range by construction");
  c->add_option("--tuple", construct.tuple, "Tuple JSON file")->required();
  c->add_option("--k", construct.k, "Rank")->check(positive)->required();
  c->add_option("--tol", construct.tol, "Residual tolerance")->check(positive)->capture_default_str();
  c->callback([&] { handler = [&](Session& s) { return construct_cmd(s, construct); }; });

  FindCodeArgs find;
  auto* f = app.add_subcommand("find-code", "Search for a k-dimensional error-correcting code");
  find.channel.bind(f);
  f->add_option("--k", find.k, "Code dimension")->check(positive)->required();
  f->add_option("--seed", find.seed, "Random seed")->required();
  f->add_option("--restarts", find.restarts, "Optimizer restarts")->check(positive)->capture_default_str();
  f->add_option("--accept", find.accept, "Knill-Laflamme residual accepted")
      ->check(positive)->capture_default_str();
  f->add_option("--opt-tol", find.opt_tol, "Optimizer tolerance")->check(positive)->capture_default_str();
  f->add_flag("--no-constructive", find.no_constructive, "Always use the optimizer");
  f->callback([&] { handler = [&](Session& s) { return find_code_cmd(s, find); }; });

  VerifyCodeArgs verify;
  auto* v = app.add_subcommand("verify-code", "Check the Knill-Laflamme conditions for a code");
  verify.channel.bind(v);
  v->add_option("--code", verify.code, "Code JSON file {\"k\", \"basis\", ...}")->required();
  v->add_option("--tol", verify.tol, "Residual tolerance")->check(positive)->capture_default_str();
  v->callback([&] { handler = [&](Session& s) { return verify_code_cmd(s, verify); }; });

  StarArgs star;
  auto* st = app.add_subcommand("starshape", "Certified segment from a constructed center to a tip");
  st->add_option("--tuple", star.tuple, "Tuple JSON file")->required();
  st->add_option("--center-k", star.center_k, "Rank of the constructed center")
      ->check(positive)->required();
  st->add_option("--k", star.k, "Rank of the segment")->check(positive)->capture_default_str();
  st->add_option("--points", star.points, "Equally spaced parameters in [0, 1]")
      ->check(positive)->capture_default_str();
  st->add_option("--seed", star.seed, "Random seed for the tip")->required();
  st->add_option("--csv", star.csv, "Write segment samples as CSV");
  st->callback([&] { handler = [&](Session& s) { return starshape_cmd(s, star); }; });

  SphereArgs sphere;
  auto* sp = app.add_subcommand("sphere-demo", "Witnesses for the unit sphere as a rank-k range");
  sp->add_option("--k", sphere.k, "Rank")->check(positive)->required();
  sp->add_option("--seed", sphere.seed, "Random seed")->required();
  sp->add_option("--count", sphere.count, "Sphere points to witness")->capture_default_str();
  sp->add_option("--interior", sphere.interior, "Interior points to test for non-membership")
      ->capture_default_str();
  sp->add_option("--restarts", sphere.restarts, "Optimizer restarts per interior point")
      ->check(positive)->capture_default_str();
  sp->add_option("--tol", sphere.tol, "Verification tolerance")->check(positive)->capture_default_str();
  sp->callback([&] { handler = [&](Session& s) { return sphere_demo_cmd(s, sphere); }; });

  IntervalArgs interval;
  auto* oi = app.add_subcommand("oracle-interval", "Exact rank-k range of a single Hermitian matrix");
  auto* om = oi->add_option("--matrix", interval.matrix, "Matrix JSON file {\"n\", \"re\", \"im\"}");
  auto* ot = oi->add_option("--tuple", interval.tuple, "Tuple JSON file with one matrix");
  om->excludes(ot);
  oi->add_option("--k", interval.k, "Rank")->check(positive)->required();
  oi->callback([&] { handler = [&](Session& s) { return oracle_interval_cmd(s, interval); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_object("usage", e.what()).dump() << '\n';
    return kExitError;
  }

  try {
    Session session;
    session.command = app.get_subcommands().front()->get_name();
    session.workers = resolve_workers(workers);
    session.config["workers"] = session.workers;
    Report report = handler(session);
    Json doc{{"version", RANKRANGE_VERSION},
             {"command", session.command},
             {"inputs", session.inputs},
             {"config", session.config},
             {"result", std::move(report.result)}};
    const std::string text = doc.dump(2) + "\n";
    if (output.empty()) {
      out << text;
    } else {
      std::ofstream os(output);
      if (!os) throw MalformedInput("cannot write '" + output + "'");
      os << text;
    }
    return report.code;
  } catch (const Error& e) {
    err << error_object(e.kind(), e.what()).dump() << '\n';
  } catch (const Json::exception& e) {
    err << error_object("malformed_input", e.what()).dump() << '\n';
  } catch (const std::exception& e) {
    err << error_object("internal", e.what()).dump() << '\n';
  }
  return kExitError;
}

}  // namespace rankrange::cli
