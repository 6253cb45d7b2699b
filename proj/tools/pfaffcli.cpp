// pfaffcli: command-line front end for the pfaffrep library.
//
// Exit codes: 0 success, 2 parse or input error, 3 verification failure,
// 4 budget exhausted. Errors print one line "error: <Code>: <detail>".

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/cubic.hpp"
#include "pfaff/curve_reps.hpp"
#include "pfaff/errors.hpp"
#include "pfaff/io.hpp"
#include "pfaff/quartic.hpp"

namespace {

using namespace pfaff;

struct Globals {
  std::string field = "QQ";
  std::uint64_t seed = 1;
  std::uint64_t budget = 1'000'000;
  std::vector<std::uint64_t> primes;
  std::string out;
};

class Report {
 public:
  template <class T>
  void add(const std::string& key, const T& value) {
    std::ostringstream os;
    os << value;
    lines_.emplace_back(key, os.str());
  }
  std::string str() const {
    std::string s;
    for (const auto& [k, v] : lines_) s += k + " = " + v + "\n";
    return s;
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

// Objects go to --out when given, otherwise after the report.
void emit(const Globals& g, const Report& r, const std::string& object = "") {
  std::cout << r.str();
  if (object.empty()) return;
  if (g.out.empty()) {
    std::cout << object;
  } else {
    io::write_file(g.out, object);
  }
}

int exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::Parse:
    case ErrorCode::InvalidInput:
    case ErrorCode::FieldMismatch:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::MissingParameter:
    case ErrorCode::InvalidGroupElement:
    case ErrorCode::SizeLimit:
      return 2;
    case ErrorCode::BudgetExceeded:
    case ErrorCode::NoSolutionFound:
    case ErrorCode::InsufficientSamples:
      return 4;
    default:
      return 3;
  }
}

SkewPolyMatrix load_skew(const std::string& path) {
  const std::string text = io::read_file(path);
  if (io::file_kind(text) == "pfaffrep") {
    const auto r = io::parse_pfaffrep(text);
    return SkewPolyMatrix::linear_pencil(r.blocks[0], r.blocks[1], r.blocks[2]);
  }
  return io::parse_skew(text);
}

std::string pair_text(const Scalar& a, const Scalar& b) { return "(" + a.to_string() + ", " + b.to_string() + ")"; }

WeierstrassCurve make_curve(const Field& f, const std::string& alpha, const std::string& beta) {
  return {f.parse_scalar(alpha), f.parse_scalar(beta)};
}

std::string params_line(const quartic::QuarticParams& q) {
  std::string s;
  for (const auto& [ij, v] : q.values()) {
    if (!s.empty()) s += ' ';
    s += quartic::param_name(ij) + "=" + v.to_string();
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pfaffian and determinantal representations of plane curves"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--field", g.field, "QQ or Fp:<prime>");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--budget", g.budget, "evaluation budget");
  app.add_option("--primes", g.primes, "comma-separated primes")->delimiter(',');
  app.add_option("--out", g.out, "write the produced object here");

  std::string file, curve_text, alpha = "0", beta = "1", s_text, l_text, action_text;
  long bound = 10;
  std::uint64_t prime = 11;
  std::size_t samples = 8, want = 0;
  bool exhaustive = false, serial = false;

  auto* pf = app.add_subcommand("pf", "Pfaffians of skew matrices")->require_subcommand(1);
  auto* pf_compute = pf->add_subcommand("compute", "Pfaffian of a skew or pfaffrep file");
  auto* pf_adjoint = pf->add_subcommand("adjoint", "pfaffian adjoint");
  auto* pf_verify = pf->add_subcommand("verify", "verify a pfaffrep file");
  for (auto* c : {pf_compute, pf_adjoint, pf_verify}) c->add_option("file", file)->required();

  auto* det = app.add_subcommand("det", "determinantal representations")->require_subcommand(1);
  auto* det_verify = det->add_subcommand("verify", "verify a detrep file");
  auto* det_adjugate = det->add_subcommand("adjugate", "classical adjugate");
  auto* det_lift = det->add_subcommand("lift", "decomposable pfaffian representation");
  for (auto* c : {det_verify, det_adjugate, det_lift}) c->add_option("file", file)->required();

  auto* construct = app.add_subcommand("construct", "constructions")->require_subcommand(1);
  auto* from_b = construct->add_subcommand("from-B", "A = adj(B) / F^(d-2) from a skew or detrep file");
  from_b->add_option("file", file)->required();
  from_b->add_option("--curve", curve_text, "curve polynomial (skew input)");

  auto* cubic = app.add_subcommand("cubic", "Weierstrass cubic family")->require_subcommand(1);
  auto* cubic_family = cubic->add_subcommand("family", "representations at every listed point");
  auto* cubic_point = cubic->add_subcommand("point", "representation at one point");
  auto* cubic_enum = cubic->add_subcommand("enumerate", "affine F_p points");
  for (auto* c : {cubic_family, cubic_point, cubic_enum}) {
    c->add_option("--alpha", alpha);
    c->add_option("--beta", beta);
  }
  cubic_family->add_option("--bound", bound, "|s| bound for rational points");
  cubic_point->add_option("--s", s_text)->required();
  cubic_point->add_option("--l", l_text)->required();

  auto* quartic = app.add_subcommand("quartic", "the quartic x^4 - y z^3 - y^4")->require_subcommand(1);
  auto* q_rel = quartic->add_subcommand("relations", "derive the linear relations");
  auto* q_res = quartic->add_subcommand("residuals", "the residual equations");
  auto* q_act = quartic->add_subcommand("act", "apply a group element to a parameter file");
  auto* q_inv = quartic->add_subcommand("invariants", "the two invariants of a parameter file");
  auto* q_solve = quartic->add_subcommand("solve", "sample solutions over F_p");
  auto* q_dim = quartic->add_subcommand("dimension", "estimate the moduli dimension");
  q_act->add_option("file", file)->required();
  q_act->add_option("--action", action_text, "a,e,p (overrides the file)");
  q_inv->add_option("file", file)->required();
  for (auto* c : {q_solve, q_dim}) {
    c->add_option("--prime", prime);
    c->add_flag("--serial", serial, "use the serial kernels");
  }
  q_solve->add_option("--want", want, "number of solutions")->default_val(8);
  q_dim->add_option("--samples", samples, "number of solutions to sample");

  auto* curve = app.add_subcommand("curve", "curve utilities")->require_subcommand(1);
  auto* smooth = curve->add_subcommand("smooth", "search for F_p-rational singular points");
  smooth->add_option("poly", curve_text)->required();
  smooth->add_flag("--exhaustive", exhaustive, "scan all of P^2(F_p)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: Parse: " << e.what() << "\n";
    return 2;
  }

  try {
    const Field field = Field::parse(g.field);
    Report r;

    if (*pf_compute) {
      const SkewPolyMatrix s = load_skew(file);
      r.add("size", s.size());
      r.add("pfaffian", pfaffian(s).to_string());
      emit(g, r);
    } else if (*pf_adjoint) {
      const SkewPolyMatrix s = load_skew(file);
      const SkewPolyMatrix adj = pfaffian_adjoint(s);
      r.add("size", s.size());
      r.add("pfaffian", pfaffian(s).to_string());
      emit(g, r, io::format_skew(adj));
    } else if (*pf_verify) {
      const auto rf = io::parse_pfaffrep(io::read_file(file));
      const PfaffianRep rep = make_pfaffian_rep(rf.blocks, rf.curve);
      r.add("size", rep.size());
      r.add("curve", rep.curve.to_string());
      r.add("c", rep.scale);
      r.add("gradient_identity", gradient_identity_symbolic(rep) ? "true" : "false");
      emit(g, r);
    } else if (*det_verify || *det_adjugate || *det_lift) {
      const auto rf = io::parse_detrep(io::read_file(file));
      const DeterminantalRep rep = make_determinantal_rep(rf.blocks, rf.curve);
      r.add("size", rep.size());
      r.add("curve", rep.curve.to_string());
      r.add("c", rep.scale);
      if (*det_verify) {
        emit(g, r);
      } else if (*det_adjugate) {
        const PolyMatrix adj = matrix_adjugate(rep);
        for (std::size_t i = 0; i < adj.rows(); ++i)
          for (std::size_t j = 0; j < adj.cols(); ++j)
            r.add("adj(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", adj(i, j).to_string());
        emit(g, r);
      } else {
        const PfaffianRep lifted = decomposable_pfaffian(rep);
        r.add("sign", decomposable_sign(rep.size()));
        r.add("c_pf", lifted.scale);
        emit(g, r, io::format_pfaffrep(lifted.blocks, lifted.curve));
      }
    } else if (*from_b) {
      const std::string text = io::read_file(file);
      SectionMatrix sm;
      if (io::file_kind(text) == "detrep") {
        const auto rf = io::parse_detrep(text);
        const DeterminantalRep rep = make_determinantal_rep(rf.blocks, rf.curve);
        sm = section_matrix_from_determinantal(rep);
        r.add("round_trip_factor", section_round_trip_factor(rep));
      } else {
        if (curve_text.empty()) throw Error(ErrorCode::MissingParameter, "--curve is required for a skew input");
        const SkewPolyMatrix b = io::parse_skew(text);
        sm = SectionMatrix{b, Poly::parse(curve_text, b.field())};
      }
      const PfaffianRep a = representation_from_B(sm);
      r.add("size", a.size());
      r.add("curve", a.curve.to_string());
      r.add("c", a.scale);
      emit(g, r, io::format_pfaffrep(a.blocks, a.curve));
    } else if (*cubic_point) {
      const WeierstrassCurve c = make_curve(field, alpha, beta);
      const AffineCurvePoint pt{field.parse_scalar(s_text), field.parse_scalar(l_text)};
      const DeterminantalRep m = cubic_determinantal(c, pt);
      const PfaffianRep a = cubic_pfaffian(c, pt);
      r.add("curve", c.poly().to_string());
      r.add("smooth", c.smooth_flag() ? "true" : "false");
      r.add("point", pair_text(pt.s, pt.l));
      r.add("c_det", m.scale);
      r.add("c", a.scale);
      emit(g, r, io::format_pfaffrep(a.blocks, a.curve));
    } else if (*cubic_family || *cubic_enum) {
      const WeierstrassCurve c = make_curve(field, alpha, beta);
      std::vector<AffineCurvePoint> pts;
      if (field.is_prime()) {
        pts = enumerate_affine_points(c, field.characteristic());
      } else if (*cubic_family) {
        pts = small_rational_points(c, bound);
      } else {
        throw Error(ErrorCode::InvalidInput, "enumerate needs --field Fp:<p>");
      }
      r.add("curve", c.poly().to_string());
      r.add("smooth", c.smooth_flag() ? "true" : "false");
      r.add("points", pts.size());
      for (std::size_t k = 0; k < pts.size(); ++k) {
        std::string line = pair_text(pts[k].s, pts[k].l);
        if (*cubic_family) {
          const DeterminantalRep m = cubic_determinantal(c, pts[k]);
          const PfaffianRep a = cubic_pfaffian(c, pts[k]);
          line += " c_det=" + m.scale.to_string() + " c=" + a.scale.to_string();
        }
        r.add("point[" + std::to_string(k + 1) + "]", line);
      }
      emit(g, r);
    } else if (*q_rel) {
      for (const auto& rel : quartic::derive_linear_relations())
        r.add(quartic::param_name(rel.target), rel.value.to_string());
      emit(g, r);
    } else if (*q_res) {
      const auto& res = quartic::residual_system();
      r.add("count", res.size());
      for (std::size_t k = 0; k < res.size(); ++k) {
        const auto& m = res[k].monomial;
        r.add("monomial[" + std::to_string(k + 1) + "]",
              "x^" + std::to_string(m[0]) + "*y^" + std::to_string(m[1]) + "*z^" + std::to_string(m[2]));
        r.add("residual[" + std::to_string(k + 1) + "]", res[k].equation.to_string());
      }
      emit(g, r);
    } else if (*q_act || *q_inv) {
      const io::ParamFile pf_in = io::parse_params(io::read_file(file));
      const auto [i1, i2] = quartic::invariant_pair(pf_in.params);
      if (*q_inv) {
        r.add("I1", i1);
        r.add("I2", i2);
        emit(g, r);
      } else {
        std::optional<quartic::GroupElement> ge = pf_in.action;
        if (!action_text.empty()) {
          std::vector<std::string> parts;
          std::stringstream ss(action_text);
          for (std::string w; std::getline(ss, w, ',');) parts.push_back(w);
          if (parts.size() != 3) throw Error(ErrorCode::Parse, "--action expects a,e,p");
          const Field& f = pf_in.params.field();
          ge = quartic::GroupElement{f.parse_scalar(parts[0]), f.parse_scalar(parts[1]), f.parse_scalar(parts[2])};
        }
        if (!ge) throw Error(ErrorCode::MissingParameter, "no group element (file 'action' line or --action)");
        const quartic::QuarticParams moved = quartic::apply_group_action(pf_in.params, *ge);
        const auto [j1, j2] = quartic::invariant_pair(moved);
        r.add("I1_before", i1);
        r.add("I2_before", i2);
        r.add("I1_after", j1);
        r.add("I2_after", j2);
        emit(g, r, io::format_params(moved));
      }
    } else if (*q_solve || *q_dim) {
      quartic::SolveOptions o;
      o.prime = prime;
      o.budget = g.budget;
      o.seed = g.seed;
      o.want = *q_dim ? samples : want;
      o.parallel = !serial;
      const quartic::SolveResult res = quartic::solve_over_prime_field(o);
      r.add("prime", prime);
      r.add("attempts", res.attempts);
      r.add("evaluations", res.evaluations);
      r.add("solutions", res.solutions.size());
      if (*q_solve) {
        for (std::size_t k = 0; k < res.solutions.size(); ++k)
          r.add("solution[" + std::to_string(k + 1) + "]", params_line(res.solutions[k]));
      } else {
        const auto d = quartic::moduli_dimension_estimate(res.solutions, prime);
        std::string ranks;
        for (auto k : d.jacobian_ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(k);
        r.add("jacobian_ranks", ranks);
        r.add("dimension", d.dimension);
      }
      emit(g, r);
    } else if (*smooth) {
      const Poly f = Poly::parse(curve_text, field);
      std::vector<std::uint64_t> primes = g.primes;
      if (primes.empty()) primes = {5, 11, 101};
      for (const auto& res : smoothness_probe(f, primes, exhaustive, g.budget, g.seed)) {
        const std::string key = "p" + std::to_string(res.prime);
        r.add(key + ".scanned", res.points_scanned);
        r.add(key + ".singular", res.witness ? res.witness->to_string() : std::string("none"));
      }
      emit(g, r);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << code_name(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  }
}
