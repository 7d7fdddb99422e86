// semiconj: batch front end for the polynomial semiconjugacy engine.
//
// Every subcommand prints human-readable text by default and a JSON object
// with --json. Exit status: 0 when the query ran (including "absent" and
// "false" answers), 1 on an engine error, 2 on a usage or parse error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semiconj/decompose.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/invariant_curves.hpp"
#include "semiconj/julia_numeric.hpp"
#include "semiconj/poly_io.hpp"
#include "semiconj/polynomial.hpp"
#include "semiconj/semiconj_engine.hpp"
#include "semiconj/special_forms.hpp"

namespace {

using nlohmann::json;
using namespace semiconj;

struct Output {
  json data = json::object();
  std::vector<std::string> lines;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

json poly_json(const Polynomial& p) {
  json j = to_json(p);
  j["text"] = p.to_string();
  return j;
}

json affine_json(const AffineMap& m) {
  return {{"a", m.a().to_string()}, {"b", m.b().to_string()}, {"text", m.as_polynomial().to_string()}};
}

json witness_json(const SemiconjugacyWitness& w) {
  return {{"A", poly_json(w.A)}, {"X", poly_json(w.X)}, {"B", poly_json(w.B)}};
}

std::string affine_text(const AffineMap& m) { return m.as_polynomial().to_string(); }

Polynomial parse_arg(const std::string& text) { return parse_polynomial(text); }

AffineMap parse_affine(const std::string& text) {
  const Polynomial p = parse_polynomial(text);
  if (p.degree() != 1) raise(ErrorKind::ParseError, "affine map expected, got '" + text + "'");
  return AffineMap::from_polynomial(p);
}

long degree_cap_from_env() {
  const char* env = std::getenv("SEMICONJ_DEGREE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultDegreeCap;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) raise(ErrorKind::ParseError, "SEMICONJ_DEGREE_CAP must be a positive integer");
  return v;
}

SearchBudget budget_for(const Polynomial& b, long cap) { return SearchBudget::for_degree(b.degree(), cap); }

const char* status_text(QuotientStatus s) {
  switch (s) {
    case QuotientStatus::Found: return "found";
    case QuotientStatus::Absent: return "absent";
    case QuotientStatus::FieldObstruction: return "field-obstruction";
  }
  return "absent";
}

std::string scalar_list(const std::vector<ExactScalar>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x.to_string();
  return "{" + out + "}";
}

json scalar_list_json(const std::vector<ExactScalar>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

void emit(const Output& out, bool as_json) {
  if (as_json) {
    std::cout << out.data.dump(2) << "\n";
  } else {
    for (const auto& l : out.lines) std::cout << l << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact composition, decomposition and semiconjugacy of polynomials over Q(i)"};
  app.require_subcommand(1);
  bool as_json = false;
  long cap_opt = 0;
  app.add_flag("--json", as_json, "Print a JSON object instead of text");
  app.add_option("--degree-cap", cap_opt, "Degree cap for composition (default: $SEMICONJ_DEGREE_CAP or 100000)")
      ->check(CLI::PositiveNumber);

  std::function<Output(long)> action;
  auto bind = [&](CLI::App* sub, std::function<Output(long)> fn) {
    sub->callback([&action, fn = std::move(fn)] { action = fn; });
  };

  // Arguments shared by several subcommands are owned here; each subcommand
  // only binds the ones it uses.
  std::string a_s, b_s, c_s, d_s, x_s, y_s, p_s, q_s, g_s, h_s, f_s, pi_s, rho_s, r_s, curve_s, target_s, out_s;
  std::string x1_s, x2_s, family_s = "power", sigma1_s = "z", sigma2_s = "z", mu_s = "z", nu_s = "z";
  std::vector<std::string> xs;
  int k = 1, deg = 0, s = 1, n = 2, m = 1, samples = 10000, margin = kDefaultMargin, iter_cap = kDefaultIterationCap;
  unsigned seed = 0;
  long max_degree = 64;
  GridSpec grid;

  // --- poly_core ---
  auto* compose_cmd = app.add_subcommand("compose", "Print P o Q");
  compose_cmd->add_option("p", p_s, "Outer polynomial")->required();
  compose_cmd->add_option("q", q_s, "Inner polynomial")->required();
  bind(compose_cmd, [&](long cap) {
    Output o;
    const Polynomial r = compose(parse_arg(p_s), parse_arg(q_s), cap);
    o.data["result"] = poly_json(r);
    o.line(r.to_string());
    return o;
  });

  auto* iterate_cmd = app.add_subcommand("iterate", "Print the k-th iterate of P");
  iterate_cmd->add_option("p", p_s)->required();
  iterate_cmd->add_option("-k,--times", k, "Number of iterations")->required()->check(CLI::NonNegativeNumber);
  bind(iterate_cmd, [&](long cap) {
    Output o;
    const Polynomial r = iterate(parse_arg(p_s), static_cast<unsigned>(k), cap);
    o.data["result"] = poly_json(r);
    o.line(r.to_string());
    return o;
  });

  auto* gcd_cmd = app.add_subcommand("gcd", "Monic gcd of P and Q");
  gcd_cmd->add_option("p", p_s)->required();
  gcd_cmd->add_option("q", q_s)->required();
  bind(gcd_cmd, [&](long) {
    Output o;
    const Polynomial r = gcd(parse_arg(p_s), parse_arg(q_s));
    o.data["result"] = poly_json(r);
    o.line(r.to_string());
    return o;
  });

  auto* sqf_cmd = app.add_subcommand("squarefree", "Squarefree decomposition P = c * prod f_i^i");
  sqf_cmd->add_option("p", p_s)->required();
  bind(sqf_cmd, [&](long) {
    Output o;
    o.data["factors"] = json::array();
    const auto parts = squarefree_decomposition(parse_arg(p_s));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      o.data["factors"].push_back(poly_json(parts[i]));
      o.line("f" + std::to_string(i + 1) + " = " + parts[i].to_string());
    }
    return o;
  });

  auto* odd_cmd = app.add_subcommand("odd-part", "Product of (z - r) over roots of odd multiplicity");
  odd_cmd->add_option("p", p_s)->required();
  bind(odd_cmd, [&](long) {
    Output o;
    const Polynomial r = odd_part(parse_arg(p_s));
    o.data["result"] = poly_json(r);
    o.line(r.to_string());
    return o;
  });

  auto* adic_cmd = app.add_subcommand("adic", "Base-H digit expansion of P");
  adic_cmd->add_option("p", p_s)->required();
  adic_cmd->add_option("--base", h_s, "Base polynomial H")->required();
  bind(adic_cmd, [&](long) {
    Output o;
    const AdicExpansion e = adic_expansion(parse_arg(p_s), parse_arg(h_s));
    o.data["digits"] = json::array();
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
      o.data["digits"].push_back(poly_json(e.digits[i]));
      o.line("a" + std::to_string(i) + " = " + e.digits[i].to_string());
    }
    return o;
  });

  auto* crit_cmd = app.add_subcommand("critical", "Derivative, critical points and critical values in Q(i)");
  crit_cmd->add_option("p", p_s)->required();
  bind(crit_cmd, [&](long) {
    Output o;
    const CriticalData cd = derivative_and_critical_data(parse_arg(p_s));
    o.data = {{"derivative", poly_json(cd.derivative)},
              {"points", scalar_list_json(cd.points)},
              {"values", scalar_list_json(cd.values)},
              {"split", cd.split}};
    o.line("derivative: " + cd.derivative.to_string());
    o.line("critical points: " + scalar_list(cd.points));
    o.line("critical values: " + scalar_list(cd.values));
    o.line(std::string("split over Q(i): ") + (cd.split ? "yes" : "no"));
    return o;
  });

  // --- decompose ---
  auto* dec_cmd = app.add_subcommand("decompose", "Right factor of P of the given degree");
  dec_cmd->add_option("p", p_s)->required();
  dec_cmd->add_option("-d,--degree", deg, "Degree of the right factor (default: every divisor)");
  bind(dec_cmd, [&](long) {
    Output o;
    const Polynomial p = parse_arg(p_s);
    std::vector<int> degrees;
    if (deg > 0) {
      degrees.push_back(deg);
    } else {
      for (int d = 2; d < p.degree(); ++d) {
        if (p.degree() % d == 0) degrees.push_back(d);
      }
    }
    o.data["factors"] = json::array();
    for (int d : degrees) {
      auto split = right_factor_of_degree(p, d);
      if (split) {
        o.data["factors"].push_back({{"degree", d}, {"left", poly_json(split->left)}, {"right", poly_json(split->right)}});
        o.line("degree " + std::to_string(d) + ": (" + split->left.to_string() + ") o (" + split->right.to_string() + ")");
      } else {
        o.data["factors"].push_back({{"degree", d}, {"absent", true}});
        o.line("degree " + std::to_string(d) + ": absent");
      }
    }
    if (degrees.empty()) o.line("indecomposable by degree");
    return o;
  });

  auto* lq_cmd = app.add_subcommand("left-quotient", "G with G o H = P");
  lq_cmd->add_option("p", p_s)->required();
  lq_cmd->add_option("--right,-H", h_s, "Right factor H")->required();
  bind(lq_cmd, [&](long) {
    Output o;
    auto g = left_quotient(parse_arg(p_s), parse_arg(h_s));
    o.data["status"] = g ? "found" : "absent";
    if (g) o.data["result"] = poly_json(*g);
    o.line(g ? g->to_string() : "absent");
    return o;
  });

  auto* rq_cmd = app.add_subcommand("right-quotient", "H with G o H = P");
  rq_cmd->add_option("p", p_s)->required();
  rq_cmd->add_option("--left,-G", g_s, "Left factor G")->required();
  bind(rq_cmd, [&](long) {
    Output o;
    const RightQuotient rq = try_right_quotient(parse_arg(p_s), parse_arg(g_s));
    o.data["status"] = status_text(rq.status);
    if (rq.status == QuotientStatus::Found) o.data["result"] = poly_json(rq.value);
    o.line(rq.status == QuotientStatus::Found ? rq.value.to_string() : status_text(rq.status));
    return o;
  });

  auto* eng_cmd = app.add_subcommand("engstrom", "Reduce A o C = D o B by the gcd right and left factors");
  eng_cmd->add_option("--a", a_s)->required();
  eng_cmd->add_option("--c", c_s)->required();
  eng_cmd->add_option("--d", d_s)->required();
  eng_cmd->add_option("--b", b_s)->required();
  bind(eng_cmd, [&](long) {
    Output o;
    const EngstromReduction r = engstrom_reduce(parse_arg(a_s), parse_arg(c_s), parse_arg(d_s), parse_arg(b_s));
    const std::pair<const char*, const Polynomial*> parts[] = {{"U", &r.U},           {"A_tilde", &r.A_tilde},
                                                              {"C_tilde", &r.C_tilde}, {"D_tilde", &r.D_tilde},
                                                              {"B_tilde", &r.B_tilde}, {"V", &r.V}};
    for (const auto& [name, poly] : parts) {
      o.data[name] = poly_json(*poly);
      o.line(std::string(name) + " = " + poly->to_string());
    }
    return o;
  });

  auto* ritt_cmd = app.add_subcommand("ritt-move", "Both sides of a Ritt move");
  ritt_cmd->add_option("--family", family_s, "power or chebyshev")->check(CLI::IsMember({"power", "chebyshev"}));
  ritt_cmd->add_option("--s", s, "Exponent s (power family)");
  ritt_cmd->add_option("--n", n, "Exponent n")->required();
  ritt_cmd->add_option("--r", r_s, "R(z) (power family)");
  ritt_cmd->add_option("--m", m, "Chebyshev index m");
  ritt_cmd->add_option("--sigma1", sigma1_s);
  ritt_cmd->add_option("--sigma2", sigma2_s);
  ritt_cmd->add_option("--mu", mu_s);
  ritt_cmd->add_option("--nu", nu_s);
  bind(ritt_cmd, [&](long) {
    Output o;
    RittMoveForm form;
    form.family = family_s == "power" ? RittFamily::Power : RittFamily::Chebyshev;
    form.s = s;
    form.n = n;
    form.m = m;
    form.R = r_s.empty() ? Polynomial(1) : parse_arg(r_s);
    form.sigma1 = parse_affine(sigma1_s);
    form.sigma2 = parse_affine(sigma2_s);
    form.mu = parse_affine(mu_s);
    form.nu = parse_affine(nu_s);
    const RittMove mv = ritt_move(form);
    o.data = {{"family", mv.form.family == RittFamily::Power ? "power" : "chebyshev"},
              {"A", poly_json(mv.first.left)},
              {"C", poly_json(mv.first.right)},
              {"D", poly_json(mv.second.left)},
              {"B", poly_json(mv.second.right)},
              {"composite", poly_json(mv.composite)}};
    o.line("A o C = (" + mv.first.left.to_string() + ") o (" + mv.first.right.to_string() + ")");
    o.line("D o B = (" + mv.second.left.to_string() + ") o (" + mv.second.right.to_string() + ")");
    o.line("composite = " + mv.composite.to_string());
    return o;
  });

  auto* join_cmd = app.add_subcommand("join", "u, v with u o pi = v o rho of least degree");
  join_cmd->add_option("--pi", pi_s)->required();
  join_cmd->add_option("--rho", rho_s)->required();
  bind(join_cmd, [&](long) {
    Output o;
    auto uv = join_pair(parse_arg(pi_s), parse_arg(rho_s));
    o.data["status"] = uv ? "found" : "absent";
    if (uv) {
      o.data["u"] = poly_json(uv->first);
      o.data["v"] = poly_json(uv->second);
      o.line("u = " + uv->first.to_string());
      o.line("v = " + uv->second.to_string());
    } else {
      o.line("absent");
    }
    return o;
  });

  auto* jm_cmd = app.add_subcommand("join-meet", "Join and meet of two elements of E(B)");
  jm_cmd->add_option("--x1", x1_s)->required();
  jm_cmd->add_option("--x2", x2_s)->required();
  jm_cmd->add_option("--b", b_s)->required();
  bind(jm_cmd, [&](long) {
    Output o;
    const JoinMeet r = join_meet(parse_arg(x1_s), parse_arg(x2_s), parse_arg(b_s));
    const std::pair<const char*, const Polynomial*> parts[] = {{"X", &r.X},   {"U1", &r.U1}, {"U2", &r.U2},
                                                              {"W", &r.W},   {"V1", &r.V1}, {"V2", &r.V2}};
    for (const auto& [name, poly] : parts) {
      o.data[name] = poly_json(*poly);
      o.line(std::string(name) + " = " + poly->to_string());
    }
    return o;
  });

  // --- special_forms ---
  auto* cheb_cmd = app.add_subcommand("cheb", "Chebyshev polynomial T_n");
  cheb_cmd->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  bind(cheb_cmd, [&](long) {
    Output o;
    const Polynomial t = chebyshev(n);
    o.data["result"] = poly_json(t);
    o.line(t.to_string());
    return o;
  });

  auto* cls_cmd = app.add_subcommand("classify", "Decide whether P is conjugate to z^n or +-T_n");
  cls_cmd->add_option("p", p_s)->required();
  bind(cls_cmd, [&](long) {
    Output o;
    const SpecialClassification c = classify_special(parse_arg(p_s));
    o.data["kind"] = to_string(c.kind);
    o.line(to_string(c.kind));
    if (c.witness) {
      o.data["witness"] = affine_json(*c.witness);
      o.line("witness: " + affine_text(*c.witness));
    }
    if (c.K) {
      o.data["K"] = {c.K->first.to_string(), c.K->second.to_string()};
      o.line("K = {" + c.K->first.to_string() + ", " + c.K->second.to_string() + "}");
    }
    return o;
  });

  auto* sym_cmd = app.add_subcommand("symmetry", "Rotational symmetry order of the centered form");
  sym_cmd->add_option("p", p_s)->required();
  bind(sym_cmd, [&](long) {
    Output o;
    const SymmetryProfile sp = symmetry_order(parse_arg(p_s));
    o.data = {{"ell", sp.ell}, {"center", sp.center.to_string()}, {"field_units", scalar_list_json(sp.field_units)}};
    o.line("ell = " + std::to_string(sp.ell));
    o.line("center = " + sp.center.to_string());
    o.line("units in Q(i): " + scalar_list(sp.field_units));
    return o;
  });

  auto* conj_cmd = app.add_subcommand("conjugate", "Affine maps mu with mu o P o mu^-1 = Q");
  conj_cmd->add_option("p", p_s)->required();
  conj_cmd->add_option("q", q_s)->required();
  bind(conj_cmd, [&](long) {
    Output o;
    const Polynomial p = parse_arg(p_s), q = parse_arg(q_s);
    const auto mus = affine_conjugacies(p, q);
    o.data["field_maps"] = json::array();
    for (const auto& mu : mus) {
      o.data["field_maps"].push_back(affine_json(mu));
      o.line("mu = " + affine_text(mu));
    }
    const bool over_c = !mus.empty() || conjugate_over_c(p, q);
    o.data["conjugate_over_C"] = over_c;
    o.line(std::string("conjugate over C: ") + (over_c ? "yes" : "no"));
    return o;
  });

  // --- semiconj_engine ---
  auto* sa_cmd = app.add_subcommand("solve-a", "A with A o X = X o B");
  sa_cmd->add_option("--x", x_s)->required();
  sa_cmd->add_option("--b", b_s)->required();
  bind(sa_cmd, [&](long) {
    Output o;
    auto w = solve_A(parse_arg(x_s), parse_arg(b_s));
    o.data["status"] = w ? "found" : "absent";
    if (w) o.data["A"] = poly_json(w->A);
    o.line(w ? w->A.to_string() : "absent");
    return o;
  });

  auto* sb_cmd = app.add_subcommand("solve-b", "B with A o X = X o B");
  sb_cmd->add_option("--a", a_s)->required();
  sb_cmd->add_option("--x", x_s)->required();
  bind(sb_cmd, [&](long) {
    Output o;
    auto w = solve_B(parse_arg(a_s), parse_arg(x_s));
    o.data["status"] = w ? "found" : "absent";
    if (w) o.data["B"] = poly_json(w->B);
    o.line(w ? w->B.to_string() : "absent");
    return o;
  });

  auto* isc_cmd = app.add_subcommand("is-semiconj", "Check A o X = X o B");
  isc_cmd->add_option("--a", a_s)->required();
  isc_cmd->add_option("--x", x_s)->required();
  isc_cmd->add_option("--b", b_s)->required();
  bind(isc_cmd, [&](long) {
    Output o;
    const bool ok = is_semiconjugacy(parse_arg(a_s), parse_arg(x_s), parse_arg(b_s));
    o.data["result"] = ok;
    o.line(ok ? "true" : "false");
    return o;
  });

  auto* ee_cmd = app.add_subcommand("enumerate-e", "Representatives of E(B), or of E(A, B) with --target");
  ee_cmd->add_option("--b", b_s)->required();
  ee_cmd->add_option("--target", target_s, "Restrict to semiconjugacies onto this A");
  bind(ee_cmd, [&](long cap) {
    Output o;
    const Polynomial b = parse_arg(b_s);
    std::vector<SemiconjugacyWitness> ws;
    if (target_s.empty()) {
      ws = enumerate_E(b, budget_for(b, cap));
    } else {
      const TargetedSearch t = enumerate_EAB(parse_arg(target_s), b, budget_for(b, cap));
      ws = t.witnesses;
      o.data["complex_only"] = t.complex_only;
    }
    o.data["witnesses"] = json::array();
    for (const auto& w : ws) {
      o.data["witnesses"].push_back(witness_json(w));
      o.line("X = " + w.X.to_string() + "    A = " + w.A.to_string());
    }
    return o;
  });

  auto* fm_cmd = app.add_subcommand("factor-minimal", "Factor elements of E(A, B) through the one of least degree");
  fm_cmd->add_option("--a", a_s)->required();
  fm_cmd->add_option("--b", b_s)->required();
  fm_cmd->add_option("--x", xs, "Elements of E(A, B)")->required();
  bind(fm_cmd, [&](long) {
    Output o;
    std::vector<Polynomial> ws;
    for (const auto& t : xs) ws.push_back(parse_arg(t));
    const MinimalFactorization mf = factor_through_minimal(parse_arg(a_s), parse_arg(b_s), ws);
    o.data["X0"] = poly_json(mf.X0);
    o.data["factors"] = json::array();
    o.line("X0 = " + mf.X0.to_string());
    for (std::size_t i = 0; i < mf.factors.size(); ++i) {
      o.data["factors"].push_back(poly_json(mf.factors[i]));
      o.line(ws[i].to_string() + " = (" + mf.factors[i].to_string() + ") o X0");
    }
    return o;
  });

  auto* com_cmd = app.add_subcommand("commutant", "Polynomials commuting with B");
  com_cmd->add_option("--b", b_s)->required();
  com_cmd->add_option("--max-degree", max_degree, "Largest degree listed")->check(CLI::PositiveNumber);
  bind(com_cmd, [&](long cap) {
    Output o;
    const Polynomial b = parse_arg(b_s);
    const CommutantStructure cs = commutant(b, max_degree, budget_for(b, cap));
    o.data["R"] = poly_json(cs.R);
    o.data["ell"] = cs.symmetry.ell;
    o.data["symmetries"] = json::array();
    for (const auto& sg : cs.symmetries) o.data["symmetries"].push_back(affine_json(sg));
    o.data["B"] = {{"sigma", affine_json(cs.b_sigma)}, {"power", cs.b_power}};
    o.data["elements"] = json::array();
    o.line("R = " + cs.R.to_string());
    o.line("B = (" + affine_text(cs.b_sigma) + ") o R^" + std::to_string(cs.b_power));
    for (const auto& e : cs.elements) {
      o.data["elements"].push_back({{"Y", poly_json(e.Y)}, {"sigma", affine_json(e.sigma)}, {"power", e.power}});
      o.line(e.Y.to_string() + "    = (" + affine_text(e.sigma) + ") o R^" + std::to_string(e.power));
    }
    return o;
  });

  auto* eq_cmd = app.add_subcommand("equiv", "Decide whether A <= B and B <= A");
  eq_cmd->add_option("--a", a_s)->required();
  eq_cmd->add_option("--b", b_s)->required();
  bind(eq_cmd, [&](long cap) {
    Output o;
    const Polynomial a = parse_arg(a_s), b = parse_arg(b_s);
    const Equivalence e = are_equivalent(a, b, SearchBudget::for_degree(std::max(2, b.degree()), cap));
    o.data["verdict"] = to_string(e.verdict);
    o.data["reason"] = e.reason;
    o.line(to_string(e.verdict));
    if (!e.reason.empty()) o.line("reason: " + e.reason);
    if (e.conjugacy) {
      o.data["conjugacy"] = affine_json(*e.conjugacy);
      o.line("conjugacy: " + affine_text(*e.conjugacy));
    }
    if (e.certificate) {
      o.data["certificate"] = {{"X", poly_json(e.certificate->X)}, {"Y", poly_json(e.certificate->Y)}, {"d", e.certificate->d}};
      o.line("X = " + e.certificate->X.to_string());
      o.line("Y = " + e.certificate->Y.to_string());
      o.line("Y o X = B^" + std::to_string(e.certificate->d));
    }
    return o;
  });

  auto* si_cmd = app.add_subcommand("strip-iterate", "Strip factors B from a split Y o X = B^s");
  si_cmd->add_option("--y", y_s)->required();
  si_cmd->add_option("--x", x_s)->required();
  si_cmd->add_option("--b", b_s)->required();
  si_cmd->add_option("--s", s)->required()->check(CLI::NonNegativeNumber);
  bind(si_cmd, [&](long cap) {
    Output o;
    const Polynomial b = parse_arg(b_s);
    const StripResult r = strip_iterate(parse_arg(y_s), parse_arg(x_s), b, s, budget_for(b, cap));
    o.data = {{"Y", poly_json(r.Y)}, {"X", poly_json(r.X)}, {"i", r.i}, {"j", r.j}, {"s", r.s}};
    o.line("Y = " + r.Y.to_string());
    o.line("X = " + r.X.to_string());
    o.line("i = " + std::to_string(r.i) + ", j = " + std::to_string(r.j) + ", s = " + std::to_string(r.s));
    return o;
  });

  auto* up_cmd = app.add_subcommand("universal-pair", "Universal semiconjugacy X with A o X = X o B");
  up_cmd->add_option("--b", b_s)->required();
  bind(up_cmd, [&](long cap) {
    Output o;
    const Polynomial b = parse_arg(b_s);
    const UniversalPair u = universal_pair(b, budget_for(b, cap));
    o.data["A"] = poly_json(u.A);
    o.data["X"] = poly_json(u.X);
    o.data["bound"] = static_cast<double>(u.bound);
    o.data["registry"] = json::array();
    o.line("A = " + u.A.to_string());
    o.line("X = " + u.X.to_string());
    std::ostringstream bound;
    bound << static_cast<double>(u.bound);
    o.line("degree bound = " + bound.str());
    for (const auto& e : u.registry) {
      o.data["registry"].push_back({{"C", poly_json(e.C)}, {"X_C", poly_json(e.X_C)}, {"U_C", poly_json(e.U_C)}});
      o.line("C = " + e.C.to_string() + "    X_C = " + e.X_C.to_string() + "    U_C = " + e.U_C.to_string());
    }
    return o;
  });

  // --- invariant_curves ---
  auto* curve_cmd = app.add_subcommand("curve", "Invariant curves u(x) = v(y)");
  curve_cmd->require_subcommand(1);

  auto* cb_cmd = curve_cmd->add_subcommand("build", "Curve parametrized by (pi, rho) with f o pi = pi o h, g o rho = rho o h");
  cb_cmd->add_option("--pi", pi_s)->required();
  cb_cmd->add_option("--rho", rho_s)->required();
  cb_cmd->add_option("--hmap", h_s, "The map h on the parameter line")->required();
  cb_cmd->add_option("--f", f_s)->required();
  cb_cmd->add_option("--g", g_s)->required();
  bind(cb_cmd, [&](long) {
    Output o;
    const CurveSystem c =
        build_curve({parse_arg(pi_s), parse_arg(rho_s), parse_arg(h_s)}, parse_arg(f_s), parse_arg(g_s));
    o.data = {{"u", poly_json(c.u)}, {"v", poly_json(c.v)}, {"t", poly_json(c.t)}, {"curve", curve_to_string(c.u, c.v)}};
    o.line(curve_to_string(c.u, c.v));
    o.line("t = " + c.t.to_string());
    return o;
  });

  auto* cv_cmd = curve_cmd->add_subcommand("verify", "Check that (f, g) maps the curve into itself");
  cv_cmd->add_option("--curve", curve_s, "Separated curve such as 'x - y^2'")->required();
  cv_cmd->add_option("--f", f_s)->required();
  cv_cmd->add_option("--g", g_s)->required();
  bind(cv_cmd, [&](long) {
    Output o;
    const bool ok = verify_invariant(parse_curve(curve_s), parse_arg(f_s), parse_arg(g_s));
    o.data["result"] = ok;
    o.line(ok ? "true" : "false");
    return o;
  });

  auto* cl_cmd = curve_cmd->add_subcommand("lines", "Invariant lines x = xi and y = eta over Q(i)");
  cl_cmd->add_option("--f", f_s)->required();
  cl_cmd->add_option("--g", g_s)->required();
  bind(cl_cmd, [&](long) {
    Output o;
    const LineCurves lc = line_curves(parse_arg(f_s), parse_arg(g_s));
    o.data["lines"] = json::array();
    for (const auto& c : lc.lines) {
      o.data["lines"].push_back(curve_to_string(c.u, c.v));
      o.line(curve_to_string(c.u, c.v));
    }
    o.data["complete"] = lc.complete;
    if (!lc.complete) o.line("(some fixed points lie outside Q(i))");
    return o;
  });

  auto* cg_cmd = curve_cmd->add_subcommand("graph", "Rewrite an (f, f)-invariant curve as a graph");
  cg_cmd->add_option("--curve", curve_s)->required();
  cg_cmd->add_option("--f", f_s)->required();
  bind(cg_cmd, [&](long) {
    Output o;
    const Polynomial f = parse_arg(f_s);
    auto [u, v] = parse_curve(curve_s).separate();
    CurveSystem c;
    c.u = u;
    c.v = v;
    c.f = c.g = f;
    const GraphForm gf = medvedev_scanlon_form(f, c);
    const bool first = gf.orientation == GraphOrientation::FirstOfSecond;
    o.data = {{"p", poly_json(gf.p)}, {"orientation", first ? "x = p(y)" : "y = p(x)"}};
    o.line(std::string(first ? "x = " : "y = ") + gf.p.to_string(first ? 'y' : 'x'));
    return o;
  });

  // --- julia_numeric ---
  auto* julia_cmd = app.add_subcommand("julia", "Escape-time computations on filled Julia sets");
  julia_cmd->require_subcommand(1);

  auto* jr_cmd = julia_cmd->add_subcommand("render", "Write a PGM image of K(P)");
  jr_cmd->add_option("--p", p_s)->required();
  jr_cmd->add_option("--out,-o", out_s, "Output .pgm path")->required();
  jr_cmd->add_option("--width", grid.width)->check(CLI::PositiveNumber);
  jr_cmd->add_option("--height", grid.height)->check(CLI::PositiveNumber);
  jr_cmd->add_option("--xmin", grid.xmin);
  jr_cmd->add_option("--xmax", grid.xmax);
  jr_cmd->add_option("--ymin", grid.ymin);
  jr_cmd->add_option("--ymax", grid.ymax);
  jr_cmd->add_option("--cap", grid.cap, "Iteration cap")->check(CLI::PositiveNumber);
  bind(jr_cmd, [&](long) {
    Output o;
    render(grid, parse_arg(p_s), out_s);
    o.data = {{"path", out_s}, {"width", grid.width}, {"height", grid.height}};
    o.line("wrote " + out_s);
    return o;
  });

  auto* jc_cmd = julia_cmd->add_subcommand("check", "Sample K(B) against X^-1(K(A))");
  jc_cmd->add_option("--a", a_s)->required();
  jc_cmd->add_option("--x", x_s)->required();
  jc_cmd->add_option("--b", b_s)->required();
  jc_cmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  jc_cmd->add_option("--seed", seed);
  jc_cmd->add_option("--margin", margin)->check(CLI::NonNegativeNumber);
  jc_cmd->add_option("--cap", iter_cap)->check(CLI::PositiveNumber);
  bind(jc_cmd, [&](long) {
    Output o;
    const PreimageReport r =
        check_preimage_identity(parse_arg(a_s), parse_arg(x_s), parse_arg(b_s), samples, seed, margin, iter_cap);
    o.data = r.to_json();
    std::ostringstream agreement;
    agreement << r.agreement;
    o.line("samples = " + std::to_string(r.samples) + ", retained = " + std::to_string(r.retained));
    o.line("agreement = " + agreement.str());
    return o;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const long cap = cap_opt > 0 ? cap_opt : degree_cap_from_env();
    emit(action(cap), as_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
