#include "lieper/cochain.hpp"
#include "lieper/connection.hpp"
#include "lieper/errors.hpp"
#include "lieper/io.hpp"
#include "lieper/lattice.hpp"
#include "lieper/lie.hpp"
#include "lieper/loop.hpp"
#include "lieper/parallel.hpp"
#include "lieper/periods.hpp"
#include "lieper/reproduce.hpp"
#include "lieper/vform.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

using namespace lieper;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Ctx {
  bool json = false;
  std::uint64_t digest = kFnvOffset;
  Json output;
  std::vector<std::string> text; // human-readable lines
};

void feed_file(Ctx& c, const std::string& path) { c.digest = fnv1a(c.digest, read_file(path)); }
void feed_flag(Ctx& c, const std::string& kv) { c.digest = fnv1a(c.digest, kv); }

LieAlgebra load_algebra(Ctx& c, const std::string& arg) {
  std::ifstream probe(arg);
  if (probe.good()) {
    feed_file(c, arg);
    return algebra_from_json(load_json_file(arg));
  }
  feed_flag(c, "algebra=" + arg);
  return algebra_by_name(arg);
}

Json cochain_to_json(const Cochain& c) {
  Json entries = Json::array();
  for (const auto& t : Cochain::tuples(c.n(), c.degree())) {
    const RatVec& v = c.at_sorted(t);
    if (rv_is_zero(v)) continue;
    entries.push_back(Json::array({Json(t), ratvec_to_json(v)}));
  }
  return Json{{"degree", c.degree()}, {"value_dim", c.value_dim()}, {"entries", entries}};
}

Json doubles_json(const std::vector<double>& v) { return Json(v); }

int emit(const Ctx& c, const std::string& sub, double ms) {
  if (c.json) {
    Json env{{"subcommand", sub},
             {"version", kVersion},
             {"input_digest", hex64(c.digest)},
             {"timing_ms", ms},
             {"output", c.output}};
    std::cout << env.dump(2) << "\n";
  } else {
    for (const auto& line : c.text) std::cout << line << "\n";
  }
  return 0;
}

std::string fmtd(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// ---- subcommand bodies ----

void cmd_vform(Ctx& c, const std::string& algebra) {
  LieAlgebra g = load_algebra(c, algebra);
  UniversalForm u(g);
  Json table = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(ratvec_to_json(u.kappa_u().at(i, j)));
    table.push_back(row);
  }
  c.output = Json{{"quotient_dim", u.dim()},
                  {"relation_rank", u.quotient().relation_rank()},
                  {"kappa_u", table}};
  c.text.push_back("quotient dim = " + std::to_string(u.dim()));
  c.text.push_back("relation rank = " + std::to_string(u.quotient().relation_rank()));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      std::string coords;
      for (const auto& x : u.kappa_u().at(i, j)) coords += (coords.empty() ? "" : ", ") + rat_str(x);
      c.text.push_back("kappa_u(" + g.basis_names()[i] + ", " + g.basis_names()[j] + ") = [" +
                       coords + "]");
    }
}

void cmd_centroid(Ctx& c, const std::string& algebra) {
  LieAlgebra g = load_algebra(c, algebra);
  auto basis = centroid(g);
  Json arr = Json::array();
  for (const auto& m : basis) arr.push_back(matrix_to_json(m));
  c.output = Json{{"dim", basis.size()}, {"basis", arr}};
  c.text.push_back("centroid dim = " + std::to_string(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    c.text.push_back("basis[" + std::to_string(k) + "] = " + matrix_to_json(basis[k]).dump());
}

SymBilinearForm pick_kappa(Ctx& c, const LieAlgebra& g, const std::string& spec) {
  if (spec == "killing") return killing_form(g);
  if (spec == "normalized") return killing_form(g).scaled(Rat(-1, 4));
  if (spec == "universal") return UniversalForm(g).kappa_u();
  feed_file(c, spec);
  MatQ m = matrix_from_json(load_json_file(spec));
  if (m.rows() != g.dim() || m.cols() != g.dim())
    throw DomainError("bad_input", "form matrix must be dim x dim");
  SymBilinearForm k(g.dim(), 1);
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      if (m.at(i, j) != m.at(j, i)) throw DomainError("bad_input", "form matrix must be symmetric");
      k.set(i, j, RatVec{m.at(i, j)});
    }
  return k;
}

void cmd_cocycle_check(Ctx& c, const std::string& algebra, const std::string& kappa) {
  LieAlgebra g = load_algebra(c, algebra);
  feed_flag(c, "kappa=" + kappa);
  SymBilinearForm k = pick_kappa(c, g, kappa);
  Cochain cart = cartan_map(g, k); // closedness enforced inside
  auto verdict = solve_exactness(g, cart);
  c.output["closed"] = true;
  if (std::holds_alternative<Cochain>(verdict)) {
    c.output["exact"] = true;
    c.output["primitive"] = cochain_to_json(std::get<Cochain>(verdict));
    c.text.push_back("closed: yes");
    c.text.push_back("exact: yes (primitive 2-cochain found)");
  } else {
    const auto& w = std::get<NotExactWitness>(verdict);
    c.output["exact"] = false;
    c.output["witness"] = Json{{"functional", ratvec_to_json(w.functional)},
                               {"column", w.column}};
    c.text.push_back("closed: yes");
    c.text.push_back("exact: no (left-kernel functional with nonzero pairing, column " +
                     std::to_string(w.column) + ")");
  }
}

void cmd_period_s3(Ctx& c, const std::string& kappa, const std::string& map, std::size_t res,
                   double tol, bool has_tol, bool parallel) {
  feed_flag(c, "kappa=" + kappa + "|map=" + map + "|res=" + std::to_string(res) +
                   "|tol=" + (has_tol ? fmtd(tol) : "none"));
  double scale;
  if (kappa == "normalized")
    scale = 4.0;
  else if (kappa == "killing")
    scale = -16.0;
  else
    throw DomainError("bad_input", "kappa must be normalized or killing here");
  MapFn fn;
  if (map == "identity")
    fn = s3_identity();
  else if (map == "square")
    fn = s3_power(2);
  else if (map == "constant")
    fn = s3_constant();
  else
    throw DomainError("bad_input", "map must be identity, square or constant");
  std::optional<double> t;
  if (has_tol) t = tol;
  PeriodResult r = period_3form(fn, s3_grid(res), det_form(scale), t, parallel);
  c.output = Json{{"value", r.value},
                  {"estimated_error", r.estimated_error},
                  {"coarse_value", r.coarse_value},
                  {"resolution", r.resolution}};
  c.text.push_back("value = " + fmtd(r.value) + "  (coarse " + fmtd(r.coarse_value) +
                   ", est err " + fmtd(r.estimated_error) + ", fine grid " +
                   std::to_string(r.resolution) + "^3)");
}

void cmd_period_loop(Ctx& c, std::size_t res, bool parallel) {
  feed_flag(c, "res=" + std::to_string(res));
  LoopPeriodResult r = loop_period(suspension_generator(), res, res / 2, res / 2, parallel);
  double mismatch = std::fabs(r.loop_side - r.volume_side) / std::fabs(r.volume_side);
  c.output = Json{{"loop_side", r.loop_side},
                  {"volume_side", r.volume_side},
                  {"relative_mismatch", mismatch}};
  c.text.push_back("loop side   = " + fmtd(r.loop_side));
  c.text.push_back("volume side = " + fmtd(r.volume_side));
  c.text.push_back("relative mismatch = " + fmtd(mismatch));
}

void cmd_coker(Ctx& c, const std::string& phi_path) {
  feed_file(c, phi_path);
  MatQ phi = matrix_from_json(load_json_file(phi_path));
  if (phi.rows() != phi.cols()) throw DomainError("bad_input", "twist matrix must be square");
  c.output["ambient_dim"] = phi.rows();
  try {
    CokerFixedReport r = coker_equals_fixed(phi);
    c.output["order"] = r.order;
    c.output["dim_coker"] = r.dim_coker;
    c.output["dim_fixed"] = r.dim_fixed;
    c.output["averaging_iso_ok"] = r.ok;
    c.text.push_back("order = " + std::to_string(r.order) + ", dim coker = " +
                     std::to_string(r.dim_coker) + ", dim fixed = " + std::to_string(r.dim_fixed) +
                     ", averaging iso " + (r.ok ? "ok" : "FAILED"));
  } catch (const DomainError& e) {
    if (std::string(e.code()) != "order_bound_exceeded") throw;
    MatQ delta = phi - MatQ::identity(phi.rows());
    std::vector<RatVec> rel;
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      RatVec col(phi.rows());
      for (std::size_t i = 0; i < phi.rows(); ++i) col[i] = delta.at(i, j);
      rel.push_back(col);
    }
    QuotientSpace q(phi.rows(), rel);
    c.output["order"] = nullptr;
    c.output["dim_coker"] = q.dim();
    c.text.push_back("order exceeds bound; dim coker = " + std::to_string(q.dim()));
  }
}

void cmd_loop_cocycle(Ctx& c, const std::string& algebra, const std::string& twist_path,
                      const std::vector<std::string>& section_paths) {
  LieAlgebra g = load_algebra(c, algebra);
  feed_file(c, twist_path);
  MatQ phi = matrix_from_json(load_json_file(twist_path));
  if (section_paths.size() < 2 || section_paths.size() > 3)
    throw DomainError("bad_input", "pass two or three --sections files");
  std::vector<SampledTwistedSection> secs;
  for (const auto& p : section_paths) {
    feed_file(c, p);
    secs.push_back(section_from_json(load_json_file(p)));
  }
  TwistedLoopCocycle tlc(g, phi);
  for (const auto& s : secs) check_twist(s, phi);
  auto om = tlc.omega(secs[0], secs[1]);
  c.output["coker_dim"] = tlc.coker().dim();
  c.output["omega"] = doubles_json(om);
  std::string s;
  for (double x : om) s += (s.empty() ? "" : ", ") + fmtd(x);
  c.text.push_back("coker dim = " + std::to_string(tlc.coker().dim()));
  c.text.push_back("omega(f,g) = [" + s + "]");
  if (secs.size() == 3) {
    double res = tlc.cocycle_residual(secs[0], secs[1], secs[2]);
    c.output["cyclic_residual"] = res;
    c.text.push_back("cyclic residual = " + fmtd(res));
  }
}

Json symbolic_vector_json(const SymbolicVector& v) { return matrix_to_json(v.coeffs); }

void report_discreteness(Ctx& c, const DiscretenessResult& r) {
  c.output["verdict"] = verdict_str(r.verdict);
  c.output["z_rank"] = r.z_rank;
  c.output["span_rank"] = r.span_rank;
  c.text.push_back("verdict = " + verdict_str(r.verdict) + "  (coefficient rank " +
                   std::to_string(r.z_rank) + ", real span rank " + std::to_string(r.span_rank) +
                   ")");
  if (!r.lattice_basis.empty()) {
    Json lb = Json::array();
    for (const auto& v : r.lattice_basis) lb.push_back(symbolic_vector_json(v));
    c.output["lattice_basis"] = lb;
    Json gc = Json::array();
    for (const auto& row : r.generator_coords) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(x.str());
      gc.push_back(jr);
    }
    c.output["generator_coords"] = gc;
    c.text.push_back("lattice basis vectors: " + std::to_string(r.lattice_basis.size()));
  }
  if (!r.witness_indices.empty()) {
    c.output["witness_indices"] = Json(r.witness_indices);
    std::string w;
    for (auto i : r.witness_indices) w += (w.empty() ? "" : ", ") + std::to_string(i);
    c.text.push_back("independent generator witness = {" + w + "}");
  }
  if (!r.accumulation_points.empty()) {
    Json ap = Json::array();
    for (const auto& p : r.accumulation_points) ap.push_back(Json(p));
    c.output["accumulation_points"] = ap;
    c.text.push_back("nonzero elements accumulating near 0: " +
                     std::to_string(r.accumulation_points.size()));
  }
}

void cmd_discrete(Ctx& c, const std::string& gen_path, const std::string& constants,
                  bool numeric) {
  feed_file(c, gen_path);
  feed_flag(c, std::string("numeric=") + (numeric ? "1" : "0") + "|constants=" + constants);
  GeneratedSubgroup g = generators_from_json(load_json_file(gen_path));
  if (!constants.empty()) {
    std::vector<double> vals(g.n_constants(), 0.0);
    vals[0] = 1.0;
    std::vector<bool> seen(g.n_constants(), false);
    seen[0] = true;
    std::istringstream ss(constants);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw DomainError("bad_input", "--constants entries look like name=value");
      std::string name = item.substr(0, eq);
      double value = std::stod(item.substr(eq + 1));
      bool found = false;
      for (std::size_t i = 1; i < g.n_constants(); ++i)
        if (g.constants()[i] == name) {
          vals[i] = value;
          seen[i] = true;
          found = true;
        }
      if (!found) throw DomainError("bad_input", "unknown constant " + name);
    }
    for (std::size_t i = 0; i < g.n_constants(); ++i)
      if (!seen[i]) throw DomainError("bad_input", "missing value for " + g.constants()[i]);
    g.set_values(vals);
  }
  report_discreteness(c, is_discrete(g, numeric));
}

void cmd_holonomy(Ctx& c, const std::string& group, const std::string& a_spec, double t) {
  feed_flag(c, "group=" + group + "|A=" + a_spec + "|t=" + fmtd(t));
  auto px = [](double, double) { return Vec2{1, 0}; };
  auto py = [](double, double) { return Vec2{0, 1}; };
  if (group == "u1") {
    if (a_spec != "xdy") throw DomainError("bad_input", "u1 presets: xdy");
    auto patch = u1_xdy_patch();
    auto beta = commutator_holonomy(patch, px, py, t);
    auto rep = holonomy_curvature(patch, px, py);
    c.output["beta"] = Json::array({beta.real(), beta.imag()});
    c.output["report"] = Json{{"log_second_derivative_abs", rep.beta_dd_abs},
                              {"log_first_derivative_abs", rep.beta_d_abs},
                              {"two_curvature_abs", rep.two_f_abs},
                              {"relative_gap", rep.rel_gap},
                              {"sign", rep.sign}};
    c.text.push_back("beta(t) = " + fmtd(beta.real()) + " + " + fmtd(beta.imag()) + " i");
    c.text.push_back("|log''(0)| = " + fmtd(rep.beta_dd_abs) + " vs |2F| = " + fmtd(rep.two_f_abs) +
                     " (rel gap " + fmtd(rep.rel_gap) + ", sign " + std::to_string(rep.sign) + ")");
  } else if (group == "su2") {
    if (a_spec != "xy") throw DomainError("bad_input", "su2 presets: xy");
    auto patch = su2_xy_patch();
    auto beta = commutator_holonomy(patch, px, py, t);
    auto rep = holonomy_curvature(patch, px, py);
    c.output["beta"] = Json::array({beta.w, beta.x, beta.y, beta.z});
    c.output["report"] = Json{{"log_second_derivative_abs", rep.beta_dd_abs},
                              {"log_first_derivative_abs", rep.beta_d_abs},
                              {"two_curvature_abs", rep.two_f_abs},
                              {"relative_gap", rep.rel_gap},
                              {"sign", rep.sign}};
    c.text.push_back("beta(t) = (" + fmtd(beta.w) + ", " + fmtd(beta.x) + ", " + fmtd(beta.y) +
                     ", " + fmtd(beta.z) + ")");
    c.text.push_back("|log''(0)| = " + fmtd(rep.beta_dd_abs) + " vs |2F| = " + fmtd(rep.two_f_abs) +
                     " (rel gap " + fmtd(rep.rel_gap) + ", sign " + std::to_string(rep.sign) + ")");
  } else {
    throw DomainError("bad_input", "group must be u1 or su2");
  }
}

void cmd_torus(Ctx& c, const std::string& h, const std::string& h_symbolic,
               const std::string& h_samples) {
  int given = (!h.empty()) + (!h_symbolic.empty()) + (!h_samples.empty());
  if (given != 1)
    throw DomainError("bad_input", "pass exactly one of --h, --h-symbolic, --h-samples");
  if (!h.empty()) {
    feed_flag(c, "h=" + h);
    Rat r = parse_rat(h);
    c.output["h"] = rat_str(r);
    report_discreteness(c, is_discrete(torus_period_group(r)));
  } else if (!h_symbolic.empty()) {
    feed_flag(c, "h-symbolic=" + h_symbolic);
    c.output["h"] = h_symbolic;
    report_discreteness(c, is_discrete(torus_period_group_symbolic(h_symbolic)));
  } else {
    feed_file(c, h_samples);
    Json j = load_json_file(h_samples);
    std::vector<double> samples;
    const Json& arr = j.is_object() && j.contains("samples") ? j["samples"] : j;
    for (const auto& v : arr) samples.push_back(v.get<double>());
    double mean = simpson_mean(samples);
    c.output["h"] = mean;
    c.text.push_back("sampled mean h = " + fmtd(mean));
    GeneratedSubgroup g = torus_period_group_symbolic("h");
    g.set_values({1.0, mean});
    report_discreteness(c, is_discrete(g, true));
  }
}

int cmd_reproduce(Ctx& c, const std::vector<std::string>& only, bool parallel) {
  ReproduceOptions opt;
  opt.only = only;
  opt.parallel = parallel;
  auto results = run_acceptance(opt);
  Json arr = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    arr.push_back(Json{{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"seconds", r.seconds},
                       {"detail", r.detail}});
    char line[512];
    std::snprintf(line, sizeof line, "%s %-4s %-26s (%6.2fs)  %s", r.pass ? "PASS" : "FAIL",
                  r.id.c_str(), r.name.c_str(), r.seconds, r.detail.c_str());
    c.text.push_back(line);
  }
  c.output = Json{{"criteria", arr}, {"all_pass", all}};
  c.text.push_back(all ? "all criteria passed" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  apply_thread_env();

  CLI::App app{"invariant forms, cocycles, periods and discreteness for Lie algebra sections"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // shared state
  bool json = false;
  bool no_parallel = false;
  std::string algebra, kappa = "normalized", map = "identity";
  std::string phi_path, gen_path, constants, group = "u1", a_spec = "xdy";
  std::string h, h_symbolic, h_samples, twist_path;
  std::vector<std::string> sections, only;
  std::size_t res = 48;
  double tol = 0.0, tparam = 0.1;

  app.set_help_flag("--help", "print help and exit");

  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print help and exit");
    sub->add_flag("--json", json, "emit a JSON run report");
    sub->add_flag("--serial", no_parallel, "disable OpenMP parallel kernels");
  };

  auto* sv = app.add_subcommand("vform", "universal invariant form of an algebra");
  sv->add_option("algebra", algebra, "algebra JSON file or builtin name")->required();
  add_common(sv);

  auto* sc = app.add_subcommand("centroid", "centroid basis of an algebra");
  sc->add_option("algebra", algebra, "algebra JSON file or builtin name")->required();
  add_common(sc);

  auto* sk = app.add_subcommand("cocycle-check", "closedness and exactness of the Cartan 3-form");
  sk->add_option("algebra", algebra, "algebra JSON file or builtin name")->required();
  sk->add_option("--kappa", kappa, "killing | normalized | universal | form-matrix file");
  add_common(sk);

  auto* sp = app.add_subcommand("period-s3", "volume integral of a sphere map");
  sp->add_option("--kappa", kappa, "normalized | killing");
  sp->add_option("--map", map, "identity | square | constant");
  auto* res_opt = sp->add_option("--res", res, "base cells per axis (default 48)");
  auto* tol_opt = sp->add_option("--tol", tol, "error tolerance; overrun raises a domain error");
  add_common(sp);

  auto* sl = app.add_subcommand("period-loop", "loop-family pairing vs volume integral");
  sl->add_option("--res", res, "loop-direction cells (default 64; sphere axes use half");
  add_common(sl);

  auto* sq = app.add_subcommand("coker", "cokernel data of a twist matrix");
  sq->add_option("--phi", phi_path, "matrix JSON file")->required();
  add_common(sq);

  auto* sw = app.add_subcommand("loop-cocycle", "twisted-loop 2-cocycle on sampled sections");
  sw->add_option("algebra", algebra, "algebra JSON file or builtin name")->required();
  sw->add_option("--twist", twist_path, "twist matrix JSON file")->required();
  sw->add_option("--sections", sections, "section sample files (two or three)")
      ->required()
      ->expected(2, 3);
  add_common(sw);

  auto* sd = app.add_subcommand("discrete", "discreteness of a finitely generated subgroup");
  sd->add_option("--generators", gen_path, "generator JSON file")->required();
  sd->add_option("--constants", constants, "numeric values, e.g. alpha=1.414,beta=2.72");
  bool numeric = false;
  sd->add_flag("--numeric", numeric, "floating-point mode with likely_* verdicts");
  add_common(sd);

  auto* sh = app.add_subcommand("holonomy", "commutator-loop holonomy vs curvature");
  sh->add_option("--group", group, "u1 | su2");
  sh->add_option("--A", a_spec, "connection preset (u1: xdy, su2: xy)");
  sh->add_option("--t", tparam, "loop scale for the printed holonomy (default 0.1)");
  add_common(sh);

  auto* st = app.add_subcommand("torus-example", "period subgroup of the 2-torus line field");
  st->add_option("--h", h, "rational slope p/q");
  st->add_option("--h-symbolic", h_symbolic, "treat the slope as a free symbol");
  st->add_option("--h-samples", h_samples, "JSON file of slope samples (Simpson-averaged)");
  add_common(st);

  auto* sr = app.add_subcommand("reproduce", "run the acceptance criteria");
  sr->add_option("--only", only, "filter by criterion id or name");
  add_common(sr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    std::cerr << "run with --help for usage\n";
    return 2;
  }

  Ctx ctx;
  ctx.json = json;
  std::string subname;
  int code = 0;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (sv->parsed()) {
      subname = "vform";
      cmd_vform(ctx, algebra);
    } else if (sc->parsed()) {
      subname = "centroid";
      cmd_centroid(ctx, algebra);
    } else if (sk->parsed()) {
      subname = "cocycle-check";
      cmd_cocycle_check(ctx, algebra, kappa);
    } else if (sp->parsed()) {
      subname = "period-s3";
      if (!*res_opt) res = 48;
      cmd_period_s3(ctx, kappa, map, res, tol, static_cast<bool>(*tol_opt), !no_parallel);
    } else if (sl->parsed()) {
      subname = "period-loop";
      if (!*sl->get_option("--res")) res = 64;
      cmd_period_loop(ctx, res, !no_parallel);
    } else if (sq->parsed()) {
      subname = "coker";
      cmd_coker(ctx, phi_path);
    } else if (sw->parsed()) {
      subname = "loop-cocycle";
      cmd_loop_cocycle(ctx, algebra, twist_path, sections);
    } else if (sd->parsed()) {
      subname = "discrete";
      cmd_discrete(ctx, gen_path, constants, numeric);
    } else if (sh->parsed()) {
      subname = "holonomy";
      cmd_holonomy(ctx, group, a_spec, tparam);
    } else if (st->parsed()) {
      subname = "torus-example";
      cmd_torus(ctx, h, h_symbolic, h_samples);
    } else if (sr->parsed()) {
      subname = "reproduce";
      feed_flag(ctx, "reproduce");
      code = cmd_reproduce(ctx, only, !no_parallel);
    }
  } catch (const DomainError& e) {
    if (std::string(e.code()) == "bad_input") {
      std::cerr << "input error: " << e.what() << "\n";
      std::cerr << "run with --help for usage and file formats\n";
      return 2;
    }
    Json err{{"error", {{"code", e.code()}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
    std::cout << err.dump(2) << "\n";
    return 1;
  }

  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  int rc = emit(ctx, subname, ms);
  return code ? code : rc;
}
