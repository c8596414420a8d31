// Command-line front end: loads algebras and companions from JSON files and
// runs the library's checks.  Exit codes: 0 = success / positive verdict,
// 1 = a check came back negative, 2 = bad input (parse errors, dimension
// mismatches, unmet preconditions, bad flags).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hjj/algebra.hpp"
#include "hjj/cohomology.hpp"
#include "hjj/deformation.hpp"
#include "hjj/derivation.hpp"
#include "hjj/errors.hpp"
#include "hjj/io.hpp"
#include "hjj/matrix.hpp"
#include "hjj/rational.hpp"
#include "hjj/representation.hpp"
#include "hjj/rota_baxter.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hjj;

// ---------------------------------------------------------------- rendering

std::string show_vec(const Vec& v, const std::vector<std::string>& labels) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Rational c = v[i];
    if (first) {
      if (c == Rational(-1)) {
        out << '-';
      } else if (c != Rational(1)) {
        out << c.str() << '*';
      }
    } else {
      if (c.sign() < 0) {
        out << " - ";
        c = -c;
      } else {
        out << " + ";
      }
      if (c != Rational(1)) out << c.str() << '*';
    }
    out << labels[i];
    first = false;
  }
  if (first) return "0";
  return out.str();
}

std::string show_coords(const Vec& v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ", ";
    out << v[i].str();
  }
  out << ')';
  return out.str();
}

json json_vec(const Vec& v) {
  json arr = json::array();
  for (const Rational& c : v) arr.push_back(c.str());
  return arr;
}

json json_matrix(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(json_vec(m.row(r)));
  return rows;
}

json json_subspace(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) rows.push_back(json_vec(s.basis_row(r)));
  return rows;
}

// Pretty form of one degree-n cochain given by its flat coordinates: one line
// per basis tuple with a nonzero value.
std::vector<std::string> describe_cochain(const Vec& coords, std::size_t degree,
                                          std::size_t dim_a, std::size_t dim_v,
                                          const std::vector<std::string>& labels) {
  std::vector<std::string> lines;
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < degree; ++i) tuples *= dim_a;
  for (std::size_t t = 0; t < tuples; ++t) {
    Vec value(dim_v, Rational(0));
    for (std::size_t out = 0; out < dim_v; ++out) value[out] = coords[out * tuples + t];
    if (is_zero(value)) continue;
    std::ostringstream line;
    if (degree == 0) {
      line << "v = " << show_coords(value);
    } else {
      std::size_t rest = t;
      line << "f(";
      for (std::size_t pos = 0; pos < degree; ++pos) {
        if (pos) line << ", ";
        line << labels[rest % dim_a];
        rest /= dim_a;
      }
      line << ") = " << show_coords(value);
    }
    lines.push_back(line.str());
  }
  if (lines.empty()) lines.push_back(degree == 0 ? "v = 0" : "f = 0");
  return lines;
}

// ------------------------------------------------------------ shared options

// Module selector shared by the verbs that act on a representation.  Exactly
// one of --adjoint/--trivial/--rep may be given; `fallback_adjoint` lets the
// verbs that have a natural default fall back to the adjoint with shift 0.
struct RepChoice {
  CLI::Option* adjoint_opt = nullptr;
  long adjoint_shift = 0;
  bool trivial = false;
  std::string rep_path;

  void attach(CLI::App* cmd) {
    adjoint_opt = cmd->add_option("--adjoint", adjoint_shift,
                                  "use the adjoint module twisted by this power of alpha");
    cmd->add_flag("--trivial", trivial, "use the one-dimensional trivial module");
    cmd->add_option("--rep", rep_path, "load the module from this JSON file");
  }

  std::size_t count() const {
    std::size_t n = 0;
    if (adjoint_opt != nullptr && adjoint_opt->count() > 0) ++n;
    if (trivial) ++n;
    if (!rep_path.empty()) ++n;
    return n;
  }

  Representation resolve(const HomAlgebra& a, bool fallback_adjoint) const {
    const std::size_t picked = count();
    if (picked > 1) throw Error("pick at most one of --adjoint, --trivial, --rep");
    if (picked == 0) {
      if (!fallback_adjoint) throw Error("pick one of --adjoint, --trivial, --rep");
      return adjoint_rep(a, 0);
    }
    if (adjoint_opt != nullptr && adjoint_opt->count() > 0) return adjoint_rep(a, adjoint_shift);
    if (trivial) return trivial_rep(a);
    return parse_representation(rep_path, a);
  }
};

std::size_t resolve_cap(const CLI::Option* flag, std::size_t flag_value) {
  if (flag != nullptr && flag->count() > 0) return flag_value;
  return degree_cap_from_env();
}

// ------------------------------------------------------------------- verbs

int run_verify(const std::string& algebra_path, const RepChoice& rep_choice, bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);
  AxiomReport ar = verify_algebra(a);

  json out;
  out["commutative"] = ar.commutative;
  out["multiplicative"] = ar.multiplicative;
  out["hom_jacobi"] = ar.hom_jacobi;
  if (ar.multiplicativity_witness) {
    out["multiplicativity_witness"] = {a.label(ar.multiplicativity_witness->first),
                                       a.label(ar.multiplicativity_witness->second)};
  }
  if (ar.jacobi_witness) {
    const auto& w = *ar.jacobi_witness;
    out["jacobi_witness"] = {a.label(w[0]), a.label(w[1]), a.label(w[2])};
    out["jacobi_residual"] = json_vec(ar.jacobi_residual);
  }

  bool module_ok = true;
  if (rep_choice.count() > 0) {
    Representation r = rep_choice.resolve(a, false);
    RepReport rr = verify_representation(r);
    module_ok = rr.all();
    json mod;
    mod["twist_compatible"] = rr.twist_compatible;
    mod["action_identity"] = rr.action_identity;
    if (rr.twist_witness) mod["twist_witness"] = a.label(*rr.twist_witness);
    if (rr.action_witness)
      mod["action_witness"] = {a.label(rr.action_witness->first), a.label(rr.action_witness->second)};
    out["module"] = mod;
  }

  if (as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "commutative:    " << (ar.commutative ? "yes" : "no") << '\n';
    std::cout << "multiplicative: " << (ar.multiplicative ? "yes" : "no");
    if (ar.multiplicativity_witness) {
      std::cout << "  (fails at " << a.label(ar.multiplicativity_witness->first) << ", "
                << a.label(ar.multiplicativity_witness->second) << ')';
    }
    std::cout << '\n';
    std::cout << "hom-jacobi:     " << (ar.hom_jacobi ? "yes" : "no");
    if (ar.jacobi_witness) {
      const auto& w = *ar.jacobi_witness;
      std::cout << "  (fails at " << a.label(w[0]) << ", " << a.label(w[1]) << ", " << a.label(w[2])
                << "; residual " << show_vec(ar.jacobi_residual, a.labels()) << ')';
    }
    std::cout << '\n';
    if (rep_choice.count() > 0 && out.contains("module")) {
      std::cout << "module twist:   " << (out["module"]["twist_compatible"].get<bool>() ? "yes" : "no")
                << '\n';
      std::cout << "module action:  " << (out["module"]["action_identity"].get<bool>() ? "yes" : "no")
                << '\n';
    }
  }
  return (ar.all() && module_ok) ? 0 : 1;
}

int run_annihilator(const std::string& algebra_path, bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);
  Subspace ann = hom_annihilator(a);

  if (as_json) {
    json out;
    out["dim"] = ann.dim();
    out["basis"] = json_subspace(ann);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "hom-annihilator: dim " << ann.dim() << '\n';
    for (std::size_t i = 0; i < ann.dim(); ++i)
      std::cout << "  " << show_vec(ann.basis_row(i), a.labels()) << '\n';
  }
  return 0;
}

int run_derivations(const std::string& algebra_path, const RepChoice& rep_choice, long weight,
                    bool anti, bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);
  Representation r = rep_choice.resolve(a, true);
  DerivationQuery q{a, r, weight, anti};
  Subspace space = derivation_space(q);

  if (as_json) {
    json out;
    out["weight"] = weight;
    out["anti"] = anti;
    out["dim"] = space.dim();
    out["basis"] = json_subspace(space);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << (anti ? "antiderivations" : "derivations") << " of weight " << weight << ": dim "
              << space.dim() << '\n';
    for (std::size_t i = 0; i < space.dim(); ++i) {
      std::cout << "  basis " << (i + 1) << ":\n";
      for (const std::string& line :
           describe_cochain(space.basis_row(i), 1, a.dim(), r.dim_v(), a.labels()))
        std::cout << "    " << line << '\n';
    }
  }
  return 0;
}

json cohomology_json(const CohomologyReport& rep) {
  json out;
  out["degree"] = rep.degree;
  out["inputs_verified"] = rep.inputs_verified;
  out["dimC"] = rep.dim_cochain;
  out["dimA"] = rep.dim_skew;
  out["dimZ"] = rep.dim_z();
  out["dimB"] = rep.dim_b();
  if (rep.dim_h) out["dimH"] = *rep.dim_h;
  out["cocycles"] = json_subspace(rep.cocycles);
  out["coboundaries"] = json_subspace(rep.coboundaries);
  json reps = json::array();
  for (const Vec& v : rep.representatives) reps.push_back(json_vec(v));
  out["representatives"] = reps;
  out["warnings"] = rep.warnings;
  return out;
}

void print_cohomology(const CohomologyReport& rep, const HomAlgebra& a, std::size_t dim_v) {
  std::cout << "degree " << rep.degree << " cohomology\n";
  std::cout << "  dim C = " << rep.dim_cochain << ", dim A = " << rep.dim_skew << '\n';
  std::cout << "  dim Z = " << rep.dim_z() << ", dim B = " << rep.dim_b();
  if (rep.dim_h) std::cout << ", dim H = " << *rep.dim_h;
  std::cout << '\n';
  for (std::size_t i = 0; i < rep.representatives.size(); ++i) {
    std::cout << "  representative " << (i + 1) << ":\n";
    for (const std::string& line :
         describe_cochain(rep.representatives[i], rep.degree, a.dim(), dim_v, a.labels()))
      std::cout << "    " << line << '\n';
  }
  for (const std::string& w : rep.warnings) std::cout << "  warning: " << w << '\n';
}

int run_cohomology(const std::string& algebra_path, const RepChoice& rep_choice, std::size_t degree,
                   std::size_t cap, bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);
  Representation r = rep_choice.resolve(a, false);
  CohomologyReport rep = cohomology(r, degree, cap);
  if (as_json) {
    std::cout << cohomology_json(rep).dump(2) << '\n';
  } else {
    print_cohomology(rep, a, r.dim_v());
  }
  return 0;
}

int run_rb(const std::string& algebra_path, const RepChoice& rep_choice,
           const std::string& op_path, std::optional<std::size_t> degree, std::size_t cap,
           bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);
  Representation r = rep_choice.resolve(a, true);
  RBOperator op(r, parse_operator_matrix(op_path));
  RBReport rb = verify_rb(op);

  json out;
  out["twist_compatible"] = rb.twist_compatible;
  out["identity"] = rb.identity;
  if (rb.twist_witness) out["twist_witness"] = *rb.twist_witness;
  if (rb.identity_witness)
    out["identity_witness"] = {rb.identity_witness->first, rb.identity_witness->second};

  std::optional<CohomologyReport> coh;
  if (rb.all() && degree) coh = rb_cohomology(op, *degree, cap);
  if (coh) out["cohomology"] = cohomology_json(*coh);

  if (as_json) {
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "twist compatible: " << (rb.twist_compatible ? "yes" : "no") << '\n';
    std::cout << "operator identity: " << (rb.identity ? "yes" : "no");
    if (rb.identity_witness) {
      std::cout << "  (fails at module pair " << rb.identity_witness->first << ", "
                << rb.identity_witness->second << ')';
    }
    std::cout << '\n';
    if (coh) {
      HomAlgebra induced = induced_algebra(op);
      print_cohomology(*coh, induced, induced.dim());
    }
  }
  return rb.all() ? 0 : 1;
}

int run_nijenhuis(const std::string& algebra_path, const std::string& op_path, bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);
  NijenhuisReport rep = nijenhuis_check(a, parse_operator_matrix(op_path));

  if (as_json) {
    json out;
    out["twist_compatible"] = rep.twist_compatible;
    out["identity"] = rep.identity;
    if (rep.identity_witness)
      out["identity_witness"] = {a.label(rep.identity_witness->first),
                                 a.label(rep.identity_witness->second)};
    out["deformed_product"] = json_vec(rep.deformed.cochain_coords());
    out["delta_route_checked"] = rep.delta_route_checked;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "twist compatible: " << (rep.twist_compatible ? "yes" : "no") << '\n';
    std::cout << "nijenhuis identity: " << (rep.identity ? "yes" : "no");
    if (rep.identity_witness) {
      std::cout << "  (fails at " << a.label(rep.identity_witness->first) << ", "
                << a.label(rep.identity_witness->second) << ')';
    }
    std::cout << '\n';
    std::cout << "deformed product:\n";
    for (const std::string& line :
         describe_cochain(rep.deformed.cochain_coords(), 2, a.dim(), a.dim(), a.labels()))
      std::cout << "  " << line << '\n';
  }
  return rep.is_nijenhuis() ? 0 : 1;
}

json order_json(const OrderCheck& oc, const HomAlgebra& a) {
  json entry;
  entry["order"] = oc.order;
  entry["ok"] = oc.ok;
  if (!oc.witness.empty()) {
    json w = json::array();
    for (std::size_t idx : oc.witness) w.push_back(a.label(idx));
    entry["witness"] = w;
    entry["residual"] = json_vec(oc.residual);
  }
  return entry;
}

int run_deform(const std::string& algebra_path, const std::string& series_path, std::size_t cap,
               bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);

  if (series_path.empty()) {
    RigidityReport rep = rigidity_probe(a, cap);
    if (as_json) {
      json out;
      out["h2"] = cohomology_json(rep.h2);
      out["rigid_sufficient"] = rep.rigid_sufficient;
      std::cout << out.dump(2) << '\n';
    } else {
      print_cohomology(rep.h2, a, a.dim());
      std::cout << "rigidity criterion met: " << (rep.rigid_sufficient ? "yes" : "no") << '\n';
    }
    return 0;
  }

  FormalProductSeries s = parse_product_series(series_path, a);
  DeformationReport rep = formal_deformation_check(s);
  if (as_json) {
    json out;
    json orders = json::array();
    for (const OrderCheck& oc : rep.orders) orders.push_back(order_json(oc, a));
    out["orders"] = orders;
    if (rep.first_failure) out["first_failure"] = *rep.first_failure;
    out["cocycle_checked"] = rep.cocycle_checked;
    out["ok"] = rep.ok();
    std::cout << out.dump(2) << '\n';
  } else {
    for (const OrderCheck& oc : rep.orders) {
      std::cout << "order " << oc.order << ": " << (oc.ok ? "holds" : "fails");
      if (!oc.witness.empty()) {
        std::cout << " at (" << a.label(oc.witness[0]) << ", " << a.label(oc.witness[1]) << ", "
                  << a.label(oc.witness[2]) << "); residual "
                  << show_vec(oc.residual, a.labels());
      }
      std::cout << '\n';
    }
  }
  return rep.ok() ? 0 : 1;
}

int run_extend(const std::string& algebra_path, const std::string& theta_path,
               const std::string& op_path, bool as_json) {
  HomAlgebra a = parse_algebra(algebra_path);
  if (theta_path.empty() == op_path.empty())
    throw Error("pick exactly one of --theta, --op");

  ExtensionResult res = theta_path.empty()
                            ? d_extension(a, parse_operator_matrix(op_path))
                            : central_extension(a, parse_form(theta_path, a));

  if (as_json) {
    json out;
    out["valid"] = res.valid;
    if (!res.detail.empty()) out["detail"] = res.detail;
    out["algebra"] = json::parse(serialize_algebra(res.algebra));
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "extension valid: " << (res.valid ? "yes" : "no") << '\n';
    if (!res.detail.empty()) std::cout << "  " << res.detail << '\n';
    std::cout << serialize_algebra(res.algebra);
  }
  return res.valid ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for twisted commutative algebras"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");

  std::size_t cap_value = kDefaultDegreeCap;
  CLI::Option* cap_opt =
      app.add_option("--max-degree", cap_value, "largest cochain degree the tool will assemble");

  // Let flags of the top-level app (--json, --max-degree) appear after the
  // subcommand name as well.
  auto add_verb = [&app](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->fallthrough();
    return cmd;
  };

  std::string algebra_path;
  std::string op_path;
  std::string series_path;
  std::string theta_path;
  long weight = 0;
  bool anti = false;
  std::size_t degree = 0;

  CLI::App* verify = add_verb("verify", "check the algebra axioms");
  verify->add_option("algebra", algebra_path, "algebra JSON file")->required();
  RepChoice verify_rep_choice;
  verify_rep_choice.attach(verify);

  CLI::App* annihilator = add_verb("annihilator", "compute the hom-annihilator");
  annihilator->add_option("algebra", algebra_path, "algebra JSON file")->required();

  CLI::App* derivations =
      add_verb("derivations", "compute a (anti)derivation space");
  derivations->add_option("algebra", algebra_path, "algebra JSON file")->required();
  derivations->add_option("--k", weight, "twist power applied inside the defining identity");
  derivations->add_flag("--anti", anti, "compute antiderivations instead of derivations");
  RepChoice der_rep_choice;
  der_rep_choice.attach(derivations);

  CLI::App* cohomology_cmd = add_verb("cohomology", "compute one cohomology degree");
  cohomology_cmd->add_option("algebra", algebra_path, "algebra JSON file")->required();
  CLI::Option* degree_opt =
      cohomology_cmd->add_option("--n", degree, "cochain degree")->required();
  RepChoice coh_rep_choice;
  coh_rep_choice.attach(cohomology_cmd);

  CLI::App* rb = add_verb("rb", "check an operator and optionally its cohomology");
  rb->add_option("algebra", algebra_path, "algebra JSON file")->required();
  rb->add_option("--op", op_path, "operator matrix JSON file")->required();
  CLI::Option* rb_degree_opt = rb->add_option("--n", degree, "cohomology degree to compute");
  RepChoice rb_rep_choice;
  rb_rep_choice.attach(rb);

  CLI::App* nijenhuis = add_verb("nijenhuis", "check the square-operator identity");
  nijenhuis->add_option("algebra", algebra_path, "algebra JSON file")->required();
  nijenhuis->add_option("--op", op_path, "operator matrix JSON file")->required();

  CLI::App* deform =
      add_verb("deform", "check a product series, or probe rigidity without one");
  deform->add_option("algebra", algebra_path, "algebra JSON file")->required();
  deform->add_option("--series", series_path, "product series JSON file");

  CLI::App* extend = add_verb("extend", "build a one-dimensional extension");
  extend->add_option("algebra", algebra_path, "algebra JSON file")->required();
  extend->add_option("--theta", theta_path, "symmetric form JSON file (central extension)");
  extend->add_option("--op", op_path, "square matrix JSON file (adjoined-map extension)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const std::size_t cap = resolve_cap(cap_opt, cap_value);
    if (verify->parsed()) return run_verify(algebra_path, verify_rep_choice, as_json);
    if (annihilator->parsed()) return run_annihilator(algebra_path, as_json);
    if (derivations->parsed())
      return run_derivations(algebra_path, der_rep_choice, weight, anti, as_json);
    if (cohomology_cmd->parsed()) {
      (void)degree_opt;
      return run_cohomology(algebra_path, coh_rep_choice, degree, cap, as_json);
    }
    if (rb->parsed()) {
      std::optional<std::size_t> n;
      if (rb_degree_opt->count() > 0) n = degree;
      return run_rb(algebra_path, rb_rep_choice, op_path, n, cap, as_json);
    }
    if (nijenhuis->parsed()) return run_nijenhuis(algebra_path, op_path, as_json);
    if (deform->parsed()) return run_deform(algebra_path, series_path, cap, as_json);
    if (extend->parsed()) return run_extend(algebra_path, theta_path, op_path, as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
