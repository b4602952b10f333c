#include <algorithm>
#include <set>

#include "zstab/cli.hpp"
#include "zstab/errors.hpp"

namespace zstab::cli {

namespace {

using io::Json;

Json check(const std::string& what, const Json& expected, const Json& computed) {
  return Json{{"check", what}, {"expected", expected}, {"computed", computed}, {"ok", expected == computed}};
}

ReproResult finish(std::string name, Json checks) {
  ReproResult r;
  r.pass = std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c["ok"].get<bool>(); });
  r.report["name"] = std::move(name);
  r.report["result"] = r.pass ? "PASS" : "FAIL";
  r.report["checks"] = std::move(checks);
  return r;
}

RPoly binomial_poly(int n, int shift) {
  // C(k + n + shift, n) = prod_{m=1..n} (k + shift + m) / n!
  RPoly p{Rational(1)};
  for (int m = 1; m <= n; ++m) p = p * RPoly{Rational(shift + m), Rational(1)};
  return p * Rational(1 / factorial(static_cast<unsigned>(n)));
}

SubobjectLattice split_lattice_p2(const RingPtr& p2) {
  LatticeSpec s;
  s.ring = p2;
  const SheafClass o(projective_line_bundle_ch(p2, 0), 0, "O");
  const SheafClass o1(projective_line_bundle_ch(p2, 1), 0, "O(1)");
  s.nodes = {{"0", std::nullopt}, {"O(1)", o1}, {"O", o}, {"O+O(1)", SheafClass(o.chern() + o1.chern(), 0, "O+O(1)")}};
  s.leq = {{"0", "O(1)"}, {"0", "O"}, {"O(1)", "O+O(1)"}, {"O", "O+O(1)"}};
  s.top = "O+O(1)";
  s.bottom = "0";
  return SubobjectLattice(s);
}

}  // namespace

ReproResult repro_dhym_counterexample(int n) {
  if (n < 3) throw PreconditionError("dhym-counterexample needs dimension >= 3");
  const RingPtr ring = projective_space_ring(n);
  const ChargeData cd(GradedClass::basis(ring, 1, 0), trivial_twist(ring), dhym_vector(n));
  const SheafClass e(GradedClass::unit(ring), 0, "O_X");
  const SheafClass v(projective_linear_subspace_ch(ring, 3), 3, "O_V");
  const SheafClass f(e.chern() - v.chern(), 0, "I_V");
  const SignVerdict sv = destabilizes_sign(cd, e, f);
  const Rational expected = 1 / (factorial(static_cast<unsigned>(n)) * factorial(static_cast<unsigned>(n - 3)));
  Json checks = Json::array();
  checks.push_back(check("verdict", "strict", to_string(sv.verdict)));
  checks.push_back(check("deciding order", 3, sv.order ? Json(*sv.order) : Json(nullptr)));
  checks.push_back(check("leading coefficient", io::to_json(expected), io::to_json(sv.leading)));
  checks.push_back(check("leading coefficient positive", true, sgn(sv.leading) > 0));
  ReproResult r = finish("dhym-counterexample", std::move(checks));
  r.report["dim"] = n;
  r.report["pairing"] = io::to_json(sv.pairing);
  return r;
}

ReproResult repro_gieseker_p2() {
  Json checks = Json::array();
  for (int n : {1, 2}) {
    const RingPtr ring = projective_space_ring(n);
    const ChargeData cd(GradedClass::basis(ring, 1, 0), twist_from_total(projective_todd(ring)), gieseker_vector(n));
    const SheafClass o(GradedClass::unit(ring), 0, "O");
    checks.push_back(check("chi(O_P" + std::to_string(n) + "(k))", io::to_json(binomial_poly(n, 0)),
                           io::to_json(hilbert_polynomial(cd, o))));
  }
  const RingPtr p2 = projective_space_ring(2);
  const ChargeData cd(GradedClass::basis(p2, 1, 0), twist_from_total(projective_todd(p2)), gieseker_vector(2));
  const SheafClass o1(projective_line_bundle_ch(p2, 1), 0, "O(1)");
  checks.push_back(
      check("chi(O_P2(1+k))", io::to_json(binomial_poly(2, 1)), io::to_json(hilbert_polynomial(cd, o1))));
  const SubobjectLattice l = split_lattice_p2(p2);
  const MuCondition gieseker = GiesekerReduced{cd};
  const MuCondition slope = SlopeLex{cd};
  const Json expected_chain = {"0", "O(1)", "O+O(1)"};
  checks.push_back(check("gieseker semistable", false, is_semistable(gieseker, l)));
  checks.push_back(check("gieseker max destabiliser", "O(1)", l.id(max_destabilizer(gieseker, l))));
  checks.push_back(check("gieseker HN chain", expected_chain, chain_ids(l, hn_filtration(gieseker, l))));
  checks.push_back(check("slope HN chain", expected_chain, chain_ids(l, hn_filtration(slope, l))));
  return finish("gieseker-p2", std::move(checks));
}

ReproResult repro_leung_vector(int n) {
  if (n < 2) throw PreconditionError("leung-vector needs dimension >= 2");
  const StabilityVector rho = leung_vector(n);
  Json checks = Json::array();
  checks.push_back(check("adapted(" + std::to_string(n) + ")", true, is_adapted(rho.entries(), n)));
  checks.push_back(check("bayer", false, is_bayer(rho.entries())));
  checks.push_back(check("adapted to coherent sheaves", false, is_adapted_coherent(rho.entries())));
  ReproResult r = finish("leung-vector", std::move(checks));
  r.report["dim"] = n;
  r.report["rho"] = io::rho_to_json(rho);
  return r;
}

ReproResult repro_bayer_lemma_grid(int bound, int max_dim) {
  if (bound < 1 || max_dim < 1) throw PreconditionError("bayer-lemma-grid needs bound >= 1 and dimension >= 1");
  std::set<Rational> values;
  for (int p = -bound; p <= bound; ++p)
    for (int q = 1; q <= bound; ++q) values.insert(Rational(p) / q);
  std::vector<GaussianRational> grid;
  for (const auto& re : values)
    for (const auto& im : values) grid.emplace_back(re, im);

  Json per_dim = Json::array();
  long total = 0, exceptions = 0;
  Json first_exception;
  for (int n = 1; n <= max_dim; ++n) {
    const std::size_t len = static_cast<std::size_t>(n + 1);
    std::vector<std::size_t> idx(len, 0);
    std::vector<GaussianRational> rho(len, grid[0]);
    long enumerated = 0, tested = 0;
    while (true) {
      ++enumerated;
      if (is_stability_vector(rho)) {
        ++tested;
        const bool lhs = is_adapted_coherent(rho);
        const bool rhs = is_bayer(rho) && is_adapted(rho, n);
        if (lhs != rhs) {
          if (exceptions++ == 0) {
            first_exception = Json::array();
            for (const auto& z : rho) first_exception.push_back(io::to_json(z));
          }
        }
      }
      std::size_t k = 0;
      while (k < len && ++idx[k] == grid.size()) {
        idx[k] = 0;
        rho[k] = grid[0];
        ++k;
      }
      if (k == len) break;
      rho[k] = grid[idx[k]];
    }
    total += tested;
    per_dim.push_back(Json{{"dim", n}, {"enumerated", enumerated}, {"stability_vectors", tested}});
  }
  Json checks = Json::array();
  checks.push_back(check("exceptions", 0, exceptions));
  checks.push_back(check("vectors tested", true, total > 0));
  ReproResult r = finish("bayer-lemma-grid", std::move(checks));
  r.report["bound"] = bound;
  r.report["grid_values"] = static_cast<long>(values.size());
  r.report["per_dim"] = std::move(per_dim);
  r.report["tested"] = total;
  if (exceptions) r.report["first_exception"] = first_exception;
  return r;
}

}  // namespace zstab::cli
