#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "isonet/errors.hpp"
#include "isonet/generators.hpp"
#include "isonet/koenigs.hpp"
#include "isonet/netio.hpp"
#include "isonet/quadnet.hpp"
#include "isonet/spaceform.hpp"

namespace isonet::cli {

using nlohmann::json;

namespace {

struct Tolerances {
  double check = kCheckTol;
  double assert_ = kAssertTol;
};

// Failures of a geometric verdict exit with 2; everything else is an input error.
int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotIsothermic:
    case ErrorKind::NotKoenigs:
    case ErrorKind::NonClosed:
    case ErrorKind::NotInConcentricFamily:
    case ErrorKind::SelfDual:
    case ErrorKind::NonConstantPairing:
    case ErrorKind::NonConstantH:
    case ErrorKind::NoDualInSpaceForm:
      return kExitCheckFailed;
    default:
      return kExitInputError;
  }
}

std::string fmt(double x) { return json(x).dump(); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream ss(text);
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || !std::isfinite(x)) {
    throw GeometryError(ErrorKind::InvalidInput,
                        what + ": \"" + text + "\" is not a finite number");
  }
  return x;
}

std::vector<double> parse_reals(const std::string& text, const std::string& what) {
  std::vector<double> out;
  for (const std::string& s : split(text, ',')) out.push_back(parse_real(s, what));
  return out;
}

std::vector<Vec3> parse_points(const std::string& text, const std::string& what) {
  std::vector<Vec3> out;
  for (const std::string& p : split(text, ';')) {
    const auto c = parse_reals(p, what);
    if (c.size() != 3) {
      throw GeometryError(ErrorKind::InvalidInput,
                          what + ": each point needs 3 coordinates, got \"" + p + "\"");
    }
    out.push_back({c[0], c[1], c[2]});
  }
  return out;
}

json tolerances_json(const Tolerances& tol) {
  return {{"tol_check", tol.check}, {"tol_assert", tol.assert_}};
}

json report_json(const CheckReport& r) {
  json j;
  j["check"] = r.check;
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["max_residual"] = r.max_residual;
  j["worst_location"] = r.worst_location;
  j["locations"] = r.locations;
  j["residuals"] = r.residuals;
  return j;
}

json grid_json(const Grid<double>& g) {
  json rows = json::array();
  for (int m = 0; m < g.rows(); ++m) {
    json row = json::array();
    for (int n = 0; n < g.cols(); ++n) row.push_back(g(m, n));
    rows.push_back(std::move(row));
  }
  return rows;
}

json histogram_json(const Grid<double>& values, int bins) {
  const auto& v = values.flat();
  const auto [lo_it, hi_it] = std::minmax_element(v.begin(), v.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  std::vector<int> counts(static_cast<std::size_t>(hi > lo ? bins : 1), 0);
  for (double x : v) {
    std::size_t b = 0;
    if (hi > lo) {
      b = static_cast<std::size_t>((x - lo) / (hi - lo) * bins);
      b = std::min(b, counts.size() - 1);
    }
    ++counts[b];
  }
  return {{"min", lo}, {"max", hi}, {"counts", counts}};
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

QuadNet require_dims(const NetFile& a, const NetFile& b) {
  require_same_dims(a.net, b.net);
  return b.net;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args);

 private:
  void setup_generate(CLI::App& app);
  void setup_check(CLI::App& app);
  void setup_moutard(CLI::App& app);
  void setup_dualize(CLI::App& app);
  void setup_curvature(CLI::App& app);
  void setup_sphere(CLI::App& app);
  void setup_place(CLI::App& app);
  void setup_classify(CLI::App& app);
  void setup_export(CLI::App& app);

  std::ostream& out_;
  std::ostream& err_;
  Tolerances tol_;
  std::function<int()> action_;

  // Shared argument storage.
  std::string input_, input2_, output_, report_path_;
  std::string gauss_out_, dual_out_, nu_path_, base_, dual_path_, gauss_path_;
  std::string steps_ = "uniform", order_ = "row", branch_ = "closest", chart_;
  std::string check_kind_;
  std::string f_list_, g_list_, angle_list_, height_list_;
  double alpha_ = 0.0, radius_ = 1.0, height_ = 1.0;
  std::optional<double> lambda_, mu_, h_;
  double kappa_ = 0.0, classify_h_ = 0.0;
  int m0_ = 0, n0_ = 0, m_ = 8, n_ = 4, sign_ = 1, bins_ = 10;
  std::uint64_t seed_ = 0;
  bool json_ = false, allow_singular_ = false;
};

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Discrete isothermic and CMC nets in R^{4,1}", "isonet"};
  app.option_defaults()->always_capture_default();
  app.add_option("--tol-check", tol_.check, "tolerance for validator verdicts");
  app.add_option("--tol-assert", tol_.assert_, "tolerance for exactness assertions");
  app.require_subcommand(1);
  setup_generate(app);
  setup_check(app);
  setup_moutard(app);
  setup_dualize(app);
  setup_curvature(app);
  setup_sphere(app);
  setup_place(app);
  setup_classify(app);
  setup_export(app);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n";
    err_ << "run with --help for usage\n";
    return kExitInputError;
  }
  if (!(tol_.check > 0.0) || !(tol_.assert_ > 0.0)) {
    err_ << "error: tolerances must be positive\n";
    return kExitInputError;
  }
  try {
    return action_();
  } catch (const GeometryError& e) {
    err_ << "error: " << e.what();
    if (e.residual()) err_ << " (residual " << fmt(*e.residual()) << ")";
    err_ << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

void Runner::setup_generate(CLI::App& app) {
  auto* gen = app.add_subcommand("generate", "write a closed-form example net");
  gen->require_subcommand(1);

  auto* cl = gen->add_subcommand("clifford", "Clifford torus in the 3-sphere");
  cl->add_option("--alpha", alpha_, "torus parameter in (0, pi/2)")->required();
  cl->add_option("--m0", m0_, "faces per phi period")->required();
  cl->add_option("--n0", n0_, "faces per psi period")->required();
  cl->add_option("--steps", steps_, "angle steps")
      ->check(CLI::IsMember({"uniform", "random", "half"}));
  cl->add_option("--seed", seed_, "seed for random or half steps");
  cl->add_option("-o,--output", output_, "net file")->required();
  cl->add_option("--gauss-out", gauss_out_, "Gauss map file");
  cl->add_option("--dual-out", dual_out_, "closed-form dual file");
  cl->add_option("--sign", sign_, "sign of the closed-form dual")
      ->check(CLI::IsMember({1, -1}));
  cl->callback([this] {
    action_ = [this] {
      TorusSpec spec;
      if (steps_ == "uniform") spec = TorusSpec::uniform(alpha_, m0_, n0_);
      if (steps_ == "random") spec = TorusSpec::random_steps(alpha_, m0_, n0_, seed_);
      if (steps_ == "half") spec = TorusSpec::half_period(alpha_, m0_, n0_, seed_);
      const SpaceFormNet torus = clifford_torus(spec);
      std::map<std::string, std::string> meta{{"generator", "clifford"},
                                              {"alpha", fmt(alpha_)},
                                              {"steps", steps_},
                                              {"kappa", fmt(torus.sf.kappa())}};
      write_net(output_, make_net_file(torus.s, torus.sf, meta));
      json report{{"command", "generate clifford"},
                  {"dims", {torus.s.m_faces(), torus.s.n_faces()}},
                  {"net", output_}};
      if (!gauss_out_.empty()) {
        meta["role"] = "gauss";
        write_net(gauss_out_, make_net_file(torus.normals, torus.sf, meta));
        report["gauss"] = gauss_out_;
      }
      if (!dual_out_.empty()) {
        meta["role"] = "dual";
        meta["sign"] = std::to_string(sign_);
        write_net(dual_out_, make_net_file(clifford_dual(spec, sign_), torus.sf, meta));
        report["dual"] = dual_out_;
      }
      emit(report, "", out_);
      return kExitPass;
    };
  });

  auto* cy = gen->add_subcommand("cylinder", "circular cylinder in Euclidean space");
  cy->add_option("--radius", radius_, "cylinder radius")->required();
  cy->add_option("--m", m_, "angular faces, uniform over one turn");
  cy->add_option("--n", n_, "height faces, uniform over --height");
  cy->add_option("--height", height_, "total height");
  cy->add_option("--angles", angle_list_, "explicit comma-separated angles");
  cy->add_option("--heights", height_list_, "explicit comma-separated heights");
  cy->add_option("-o,--output", output_, "net file")->required();
  cy->add_option("--gauss-out", gauss_out_, "Gauss map file");
  cy->callback([this] {
    action_ = [this] {
      std::vector<double> angles, heights;
      if (!angle_list_.empty()) {
        angles = parse_reals(angle_list_, "--angles");
      } else {
        if (m_ < 1) throw GeometryError(ErrorKind::InvalidSpec, "--m must be positive");
        for (int i = 0; i <= m_; ++i) angles.push_back(2.0 * std::numbers::pi * i / m_);
      }
      if (!height_list_.empty()) {
        heights = parse_reals(height_list_, "--heights");
      } else {
        if (n_ < 1) throw GeometryError(ErrorKind::InvalidSpec, "--n must be positive");
        for (int i = 0; i <= n_; ++i) heights.push_back(height_ * i / n_);
      }
      const SpaceFormNet cyl = euclidean_cylinder(radius_, angles, heights);
      std::map<std::string, std::string> meta{
          {"generator", "cylinder"}, {"radius", fmt(radius_)}, {"kappa", fmt(0.0)}};
      write_net(output_, make_net_file(cyl.s, cyl.sf, meta));
      json report{{"command", "generate cylinder"},
                  {"dims", {cyl.s.m_faces(), cyl.s.n_faces()}},
                  {"net", output_}};
      if (!gauss_out_.empty()) {
        meta["role"] = "gauss";
        write_net(gauss_out_, make_net_file(cyl.normals, cyl.sf, meta));
        report["gauss"] = gauss_out_;
      }
      emit(report, "", out_);
      return kExitPass;
    };
  });

  auto* tr = gen->add_subcommand("translational", "translational net f(m) + g(n)");
  tr->add_option("--f", f_list_, "points x,y,z;x,y,z;... of the m-curve")->required();
  tr->add_option("--g", g_list_, "points of the n-curve")->required();
  tr->add_option("-o,--output", output_, "net file")->required();
  tr->callback([this] {
    action_ = [this] {
      const QuadNet net =
          translational_net(parse_points(f_list_, "--f"), parse_points(g_list_, "--g"));
      write_net(output_, make_net_file(net, SpaceForm::euclidean(),
                                       {{"generator", "translational"}}));
      emit({{"command", "generate translational"},
            {"dims", {net.m_faces(), net.n_faces()}},
            {"net", output_}},
           "", out_);
      return kExitPass;
    };
  });
}

void Runner::setup_check(CLI::App& app) {
  auto* chk = app.add_subcommand("check", "run a validator on a net");
  chk->add_option("kind", check_kind_, "validator")
      ->required()
      ->check(CLI::IsMember({"planar", "circular", "koenigs", "factorization", "dualpair"}));
  chk->add_option("net", input_, "net file")->required();
  chk->add_option("net2", input2_, "second net (dualpair)");
  chk->add_option("-o,--output", report_path_, "report file (default stdout)");
  chk->callback([this] {
    action_ = [this] {
      const NetFile a = read_net(input_);
      json report;
      bool passed = false;
      if (check_kind_ == "planar") {
        const CheckReport r = check_planar(a.net, tol_.check);
        report = report_json(r);
        passed = r.passed;
      } else if (check_kind_ == "circular") {
        const CheckReport r = check_circular(a.net, tol_.check);
        report = report_json(r);
        passed = r.passed;
      } else if (check_kind_ == "koenigs") {
        const CheckReport r = koenigs_test(a.net, tol_.check);
        report = report_json(r);
        passed = r.passed;
      } else if (check_kind_ == "factorization") {
        const FactorizationResult r = check_factorization(a.net, tol_.check);
        report = report_json(r.report);
        report["u_labels"] = grid_json(r.labels.u_values());
        report["v_labels"] = grid_json(r.labels.v_values());
        passed = r.report.passed;
      } else {
        if (input2_.empty()) {
          throw GeometryError(ErrorKind::InvalidInput, "check dualpair needs a second net");
        }
        const NetFile b = read_net(input2_);
        const DualPairReport r = check_dual_pair(a.net, require_dims(a, b), tol_.check);
        report["check"] = "dualpair";
        report["tolerance"] = r.tolerance;
        report["passed"] = r.passed;
        report["edge_parallel"] = report_json(r.edge_parallel);
        report["mixed_area"] = report_json(r.mixed_area);
        report["diagonal_parallel"] = report_json(r.diagonal_parallel);
        report["pairing_min"] = r.pairing_min;
        report["pairing_max"] = r.pairing_max;
        report["criteria_agree"] = r.criteria_agree;
        passed = r.passed;
      }
      report["tolerances"] = tolerances_json(tol_);
      emit(report, report_path_, out_);
      return passed ? kExitPass : kExitCheckFailed;
    };
  });
}

void Runner::setup_moutard(CLI::App& app) {
  auto* mo = app.add_subcommand("moutard", "Christoffel symbol nu of a Koenigs net");
  mo->add_option("net", input_, "net file")->required();
  mo->add_option("-o,--output", output_, "nu file")->required();
  mo->add_option("--order", order_, "spanning tree order")
      ->check(CLI::IsMember({"row", "column"}));
  mo->callback([this] {
    action_ = [this] {
      const NetFile a = read_net(input_);
      const NuField nu = moutard_lift(
          a.net, tol_.check, order_ == "row" ? TreeOrder::RowMajor : TreeOrder::ColumnMajor);
      write_nu(output_, nu);
      emit({{"check", "moutard"},
            {"tolerance", tol_.check},
            {"passed", true},
            {"residual", nu.residual},
            {"nu", output_},
            {"tolerances", tolerances_json(tol_)}},
           "", out_);
      return kExitPass;
    };
  });
}

void Runner::setup_dualize(CLI::App& app) {
  auto* du = app.add_subcommand("dualize", "Christoffel dual of a Koenigs net");
  du->add_option("net", input_, "net file")->required();
  du->add_option("-o,--output", output_, "dual net file")->required();
  du->add_option("--nu", nu_path_, "nu file (default: computed)");
  du->add_option("--base", base_, "position x1,x2,x3,x4,x5 of the dual vertex (0,0)");
  du->callback([this] {
    action_ = [this] {
      const NetFile a = read_net(input_);
      const NuField nu = nu_path_.empty() ? moutard_lift(a.net, tol_.check) : read_nu(nu_path_);
      if (nu.values.rows() != a.net.m_faces() + 1 || nu.values.cols() != a.net.n_faces() + 1) {
        throw GeometryError(ErrorKind::DimensionMismatch, "nu file does not match the net");
      }
      std::optional<MVec> base;
      if (!base_.empty()) {
        const auto c = parse_reals(base_, "--base");
        if (c.size() != kAmbientDim) {
          throw GeometryError(ErrorKind::InvalidInput, "--base needs 5 coordinates");
        }
        base = MVec(c[0], c[1], c[2], c[3], c[4]);
      }
      json report{{"check", "dualize"}, {"tolerance", tol_.check}};
      int code = kExitPass;
      DualResult result{QuadNet(1, 1), MVec(), 0.0};
      try {
        result = christoffel_dual(a.net, nu, base, tol_.check);
      } catch (const NonClosedError& e) {
        result = e.result();
        report["worst_location"] = e.location();
        err_ << "error: " << e.what() << "\n";
        code = kExitCheckFailed;
      }
      auto meta = a.metadata;
      meta["role"] = "dual";
      write_net(output_, NetFile{result.dual, a.q, a.origin, meta});
      report["passed"] = code == kExitPass;
      report["closure_residual"] = result.closure_residual;
      report["dual"] = output_;
      report["tolerances"] = tolerances_json(tol_);
      emit(report, "", out_);
      return code;
    };
  });
}

void Runner::setup_curvature(CLI::App& app) {
  auto* cu = app.add_subcommand("curvature", "mixed-area curvatures of a space-form net");
  cu->add_option("net", input_, "net file")->required();
  auto* d = cu->add_option("--dual", dual_path_, "Koenigs dual in a concentric quadric");
  auto* g = cu->add_option("--gauss", gauss_path_, "Gauss map file");
  d->excludes(g);
  cu->add_option("--bins", bins_, "histogram bins")->check(CLI::PositiveNumber);
  cu->add_option("-o,--output", report_path_, "report file (default stdout)");
  cu->callback([this] {
    action_ = [this] {
      if (dual_path_.empty() && gauss_path_.empty()) {
        throw GeometryError(ErrorKind::InvalidInput, "curvature needs --dual or --gauss");
      }
      const NetFile a = read_net(input_);
      const SpaceForm sf = a.space_form();
      json report{{"check", "curvature"}};
      QuadNet normals(1, 1);
      if (!dual_path_.empty()) {
        const NetFile b = read_net(dual_path_);
        const TangentCongruence t = gauss_from_dual(a.net, require_dims(a, b), sf, tol_.check);
        normals = t.gauss.normals;
        report["orientation"] = "tangent congruence of the dual";
        report["dual_H"] = t.H;
        report["pairing"] = t.pairing;
        report["pairing_spread"] = t.pairing_spread;
        report["tangent_norm_sq"] = t.tangent_norm_sq;
        report["dual_quadric"] = {{"r", t.dual_quadric.r}, {"t", t.dual_quadric.t}};
      } else {
        const NetFile b = read_net(gauss_path_);
        normals = make_gauss_map(a.net, require_dims(a, b), sf, tol_.check).normals;
        report["orientation"] = "Gauss map file " + gauss_path_;
      }
      const CurvatureReport c = face_curvatures(a.net, normals, sf);
      const bool constant = c.h_spread() <= tol_.check * std::max(1.0, std::abs(c.h_mean));
      const bool proportional =
          c.max_h_residual <= tol_.check && c.max_k_residual <= tol_.check;
      report["tolerance"] = tol_.check;
      report["kappa"] = c.kappa;
      report["H"] = grid_json(c.H);
      report["K"] = grid_json(c.K);
      report["h_residual"] = grid_json(c.h_residual);
      report["k_residual"] = grid_json(c.k_residual);
      report["lawson"] = grid_json(c.lawson);
      report["H_mean"] = c.h_mean;
      report["H_min"] = c.h_min;
      report["H_max"] = c.h_max;
      report["K_mean"] = c.k_mean;
      report["H_histogram"] = histogram_json(c.H, bins_);
      report["constant_H"] = constant;
      report["regime"] = constant ? classify_regime(c.h_mean, c.kappa).label() : "";
      report["passed"] = proportional;
      report["tolerances"] = tolerances_json(tol_);
      emit(report, report_path_, out_);
      return proportional ? kExitPass : kExitCheckFailed;
    };
  });
}

void Runner::setup_sphere(CLI::App& app) {
  auto* sc = app.add_subcommand("sphere-congruence", "mean-curvature sphere z = n + H s");
  sc->add_option("net", input_, "net file")->required();
  sc->add_option("gauss", input2_, "Gauss map file")->required();
  sc->add_option("-o,--output", output_, "z file")->required();
  sc->callback([this] {
    action_ = [this] {
      const NetFile a = read_net(input_);
      const NetFile b = read_net(input2_);
      const SpaceForm sf = a.space_form();
      const QuadNet normals = make_gauss_map(a.net, require_dims(a, b), sf, tol_.check).normals;
      const CurvatureReport c = face_curvatures(a.net, normals, sf);
      const SphereCongruence z = mean_curvature_sphere(a.net, normals, c, sf, tol_.check);
      auto meta = a.metadata;
      meta["role"] = "sphere-congruence";
      meta["H"] = fmt(z.H);
      write_net(output_, NetFile{z.z, a.q, a.origin, meta});
      emit({{"check", "sphere-congruence"},
            {"tolerance", tol_.check},
            {"passed", true},
            {"H", z.H},
            {"norm_residual", z.norm_residual},
            {"q_residual", z.q_residual},
            {"mixed_area_residual", z.mixed_area_residual},
            {"z", output_},
            {"tolerances", tolerances_json(tol_)}},
           "", out_);
      return kExitPass;
    };
  });
}

void Runner::setup_place(CLI::App& app) {
  auto* pd = app.add_subcommand("place-dual", "dual s* = lambda z + mu q");
  pd->add_option("z", input_, "sphere congruence file")->required();
  pd->add_option("-o,--output", output_, "dual net file")->required();
  auto* l = pd->add_option("--lambda", lambda_, "lambda");
  auto* m = pd->add_option("--mu", mu_, "mu");
  l->needs(m);
  m->needs(l);
  auto* b = pd->add_option("--branch", branch_, "placement into Q when lambda, mu are omitted")
                ->check(CLI::IsMember({"closest", "plus", "minus"}));
  b->excludes(l);
  pd->add_option("--H", h_, "mean curvature (default: (z,q))");
  pd->add_flag("--allow-singular", allow_singular_, "accept r^2 + t kappa = 0");
  pd->callback([this] {
    action_ = [this] {
      const NetFile a = read_net(input_);
      const SpaceForm sf = a.space_form();
      double H = 0.0;
      if (h_) {
        H = *h_;
      } else {
        for (const MVec& v : a.net.vertices().flat()) H += inner(v, sf.q());
        H /= static_cast<double>(a.net.vertex_count());
      }
      json report{{"check", "place-dual"}, {"tolerance", tol_.assert_}, {"H", H}};
      DualPlacement p{QuadNet(1, 1), 0.0, 0.0, {}, {}, {}};
      if (lambda_) {
        p = dual_family(a.net, sf, *lambda_, *mu_, H, tol_.assert_, allow_singular_);
      } else {
        const Branch br = branch_ == "plus"    ? Branch::Plus
                          : branch_ == "minus" ? Branch::Minus
                                               : Branch::Closest;
        const SpaceFormDual d = place_in_space_form(a.net, sf, H, br, tol_.assert_);
        p = d.placement;
        report["sign"] = d.sign;
        report["predicted_distance_sq"] = d.predicted_distance_sq;
      }
      auto meta = a.metadata;
      meta["role"] = "dual";
      write_net(output_, NetFile{p.dual, a.q, a.origin, meta});
      const double gap = p.predicted.r * p.predicted.r + p.predicted.t * sf.kappa();
      report["lambda"] = p.lambda;
      report["mu"] = p.mu;
      report["predicted"] = {{"r", p.predicted.r}, {"t", p.predicted.t}};
      report["measured"] = {{"r", p.measured.r}, {"t", p.measured.t}};
      report["r2_plus_t_kappa"] = gap;
      report["regime"] = classify_regime(H, sf.kappa()).label();
      if (!p.sheets.empty()) report["sheets"] = p.sheets;
      report["passed"] = true;
      report["dual"] = output_;
      report["tolerances"] = tolerances_json(tol_);
      emit(report, "", out_);
      return kExitPass;
    };
  });
}

void Runner::setup_classify(CLI::App& app) {
  auto* cl = app.add_subcommand("classify", "regime of a CMC net from H and kappa");
  cl->add_option("--H", classify_h_, "mean curvature")->required();
  cl->add_option("--kappa", kappa_, "curvature of the space form")->required();
  cl->add_flag("--json", json_, "print a JSON report");
  cl->callback([this] {
    action_ = [this] {
      const RegimeInfo info = classify_regime(classify_h_, kappa_);
      if (json_) {
        emit({{"check", "classify"},
              {"H", classify_h_},
              {"kappa", kappa_},
              {"lawson", classify_h_ * classify_h_ + kappa_},
              {"regime", std::string(info.name)},
              {"case", std::string(info.case_label)},
              {"target_quadric", std::string(info.target_quadric)}},
             "", out_);
      } else {
        out_ << info.label() << "\n";
      }
      return kExitPass;
    };
  });
}

void Runner::setup_export(CLI::App& app) {
  auto* ex = app.add_subcommand("export-obj", "quad-mesh OBJ export");
  ex->add_option("net", input_, "net file")->required();
  ex->add_option("-o,--output", output_, "OBJ file")->required();
  ex->add_option("--chart", chart_, "projection")
      ->required()
      ->check(CLI::IsMember({"euclidean", "orthographic4"}));
  ex->callback([this] {
    action_ = [this] {
      const NetFile a = read_net(input_);
      const ObjChart chart = chart_ == "euclidean" ? ObjChart::Euclidean : ObjChart::Orthographic4;
      write_text(output_, export_obj(a.net, a.space_form(), chart));
      emit({{"command", "export-obj"},
            {"chart", chart_},
            {"vertices", a.net.vertex_count()},
            {"faces", a.net.m_faces() * a.net.n_faces()},
            {"obj", output_}},
           "", out_);
      return kExitPass;
    };
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace isonet::cli
