#include "zstab/io.hpp"

#include "zstab/errors.hpp"

namespace zstab::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object with key '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key '") + key + "'");
  return *it;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string("expected an integer for ") + what);
  return j.get<int>();
}

std::string string_from_json(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string("expected a string for ") + what);
  return j.get<std::string>();
}

const Json& array_from_json(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string("expected an array for ") + what);
  return j;
}

bool is_projective(const GradedRing& ring) {
  for (int b : ring.basis_sizes())
    if (b != 1) return false;
  return true;
}

}  // namespace

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail("expected a rational string, got " + j.dump());
}

Json to_json(const GaussianRational& z) { return Json::array({to_json(z.re), to_json(z.im)}); }

GaussianRational gaussian_from_json(const Json& j) {
  if (j.is_array() && j.size() == 2) return {rational_from_json(j[0]), rational_from_json(j[1])};
  if (j.is_string() || j.is_number_integer()) return {rational_from_json(j)};
  fail("expected [re, im], got " + j.dump());
}

Json to_json(const RPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const CPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

RPoly rpoly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : array_from_json(j, "polynomial")) c.push_back(rational_from_json(x));
  return RPoly(std::move(c));
}

CPoly cpoly_from_json(const Json& j) {
  std::vector<GaussianRational> c;
  for (const auto& x : array_from_json(j, "polynomial")) c.push_back(gaussian_from_json(x));
  return CPoly(std::move(c));
}

Json to_json(const ExtReal& x) { return to_string(x); }

ExtReal extreal_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "+inf") return ExtReal::infinity();
  return ExtReal(rational_from_json(j));
}

RingPtr ring_from_json(const Json& j) {
  if (j.is_object() && j.contains("projective_space")) {
    const int n = int_from_json(j["projective_space"], "projective_space");
    if (n < 1) fail("projective_space dimension must be >= 1");
    return projective_space_ring(n);
  }
  const int n = int_from_json(field(j, "dim"), "dim");
  std::vector<int> sizes;
  for (const auto& b : array_from_json(field(j, "basis"), "basis")) sizes.push_back(int_from_json(b, "basis size"));
  try {
    GradedRing::Builder builder(n, sizes);
    if (j.contains("names")) {
      std::vector<std::vector<std::string>> names;
      for (const auto& deg : array_from_json(j["names"], "names")) {
        names.emplace_back();
        for (const auto& s : array_from_json(deg, "names")) names.back().push_back(string_from_json(s, "name"));
      }
      builder.set_names(std::move(names));
    }
    if (j.contains("cup")) {
      for (const auto& e : array_from_json(j["cup"], "cup")) {
        std::vector<Rational> result;
        for (const auto& r : array_from_json(field(e, "result"), "result")) result.push_back(rational_from_json(r));
        builder.set_cup(int_from_json(field(e, "p"), "p"), int_from_json(field(e, "i"), "i"),
                        int_from_json(field(e, "q"), "q"), int_from_json(field(e, "j"), "j"), std::move(result));
      }
    }
    std::vector<Rational> integ;
    for (const auto& r : array_from_json(field(j, "integrate"), "integrate")) integ.push_back(rational_from_json(r));
    builder.set_integration(std::move(integ));
    return std::move(builder).build();
  } catch (const PreconditionError& e) {
    fail(std::string("invalid ring table: ") + e.what());
  }
}

Json ring_to_json(const GradedRing& ring) {
  Json out;
  const int n = ring.dim();
  out["dim"] = n;
  out["basis"] = ring.basis_sizes();
  out["names"] = ring.basis_names();
  Json cups = Json::array();
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q)
      for (int i = 0; i < ring.basis_size(p); ++i)
        for (int jj = 0; jj < ring.basis_size(q); ++jj) {
          const auto& r = ring.cup_basis(p, i, q, jj);
          if (std::all_of(r.begin(), r.end(), [](const Rational& x) { return is_zero(x); })) continue;
          Json e;
          e["p"] = p;
          e["i"] = i;
          e["q"] = q;
          e["j"] = jj;
          e["result"] = Json::array();
          for (const auto& x : r) e["result"].push_back(to_json(x));
          cups.push_back(std::move(e));
        }
  out["cup"] = std::move(cups);
  out["integrate"] = Json::array();
  for (const auto& x : ring.integration()) out["integrate"].push_back(to_json(x));
  return out;
}

GradedClass class_from_json(const RingPtr& ring, const Json& j) {
  const int n = ring->dim();
  std::vector<std::vector<Rational>> comps(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p) comps[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(ring->basis_size(p)), 0);
  auto fill = [&](int p, const Json& v) {
    if (p < 0 || p > n) fail("class degree " + std::to_string(p) + " out of range");
    auto& slot = comps[static_cast<std::size_t>(p)];
    if (!v.is_array()) {
      if (slot.size() != 1) fail("degree " + std::to_string(p) + " needs a list of coordinates");
      slot[0] = rational_from_json(v);
      return;
    }
    if (v.size() != slot.size()) fail("degree " + std::to_string(p) + " has the wrong number of coordinates");
    for (std::size_t i = 0; i < slot.size(); ++i) slot[i] = rational_from_json(v[i]);
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      int p = 0;
      try {
        std::size_t used = 0;
        p = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("class degree key '" + key + "' is not an integer");
      }
      fill(p, v);
    }
  } else if (j.is_array()) {
    if (j.size() > static_cast<std::size_t>(n + 1)) fail("class has too many degrees");
    for (std::size_t p = 0; p < j.size(); ++p) fill(static_cast<int>(p), j[p]);
  } else {
    fail("expected class components, got " + j.dump());
  }
  return GradedClass(ring, std::move(comps));
}

Json class_to_json(const GradedClass& x) {
  Json out = Json::object();
  for (int p = 0; p <= x.dim(); ++p) {
    Json v = Json::array();
    for (const auto& c : x.component(p)) v.push_back(to_json(c));
    out[std::to_string(p)] = std::move(v);
  }
  return out;
}

SheafClass sheaf_from_json(const RingPtr& ring, const Json& j) {
  if (!j.is_object()) fail("expected a class object, got " + j.dump());
  const std::string label = j.contains("label") ? string_from_json(j["label"], "label") : std::string();
  GradedClass chern(ring);
  if (j.contains("components")) {
    chern = class_from_json(ring, j["components"]);
  } else if (j.contains("line_bundle")) {
    if (!is_projective(*ring)) fail("line_bundle needs a projective-space ring");
    chern = projective_line_bundle_ch(ring, rational_from_json(j["line_bundle"]));
  } else if (j.contains("linear_subspace")) {
    if (!is_projective(*ring)) fail("linear_subspace needs a projective-space ring");
    chern = projective_linear_subspace_ch(ring, int_from_json(j["linear_subspace"], "linear_subspace"));
  } else {
    fail("class needs 'components', 'line_bundle' or 'linear_subspace'");
  }
  if (j.contains("codim")) return SheafClass(std::move(chern), int_from_json(j["codim"], "codim"), label);
  return SheafClass::from_chern(std::move(chern), label);
}

Json sheaf_to_json(const SheafClass& s) {
  Json out;
  out["components"] = class_to_json(s.chern());
  out["codim"] = s.codim();
  if (!s.label().empty()) out["label"] = s.label();
  return out;
}

StabilityVector rho_from_json(const Json& j, int n) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "leung") return leung_vector(n);
    if (name == "dhym") return dhym_vector(n);
    if (name == "gieseker") return gieseker_vector(n);
    fail("unknown stability vector preset '" + name + "'");
  }
  std::vector<GaussianRational> rho;
  for (const auto& z : array_from_json(j, "rho")) rho.push_back(gaussian_from_json(z));
  if (rho.size() != static_cast<std::size_t>(n + 1)) fail("rho needs " + std::to_string(n + 1) + " entries");
  return StabilityVector(std::move(rho));
}

Json rho_to_json(const StabilityVector& rho) {
  Json out = Json::array();
  for (const auto& z : rho.entries()) out.push_back(to_json(z));
  return out;
}

ChargeData charge_from_json(const RingPtr& ring, const Json& j) {
  if (!j.is_object()) fail("expected a charge object");
  const GradedClass omega = j.contains("omega") ? class_from_json(ring, j["omega"]) : GradedClass::basis(ring, 1, 0);
  std::vector<GradedClass> twist = trivial_twist(ring);
  if (j.contains("twist")) {
    const Json& t = j["twist"];
    if (t.is_string() && t.get<std::string>() == "todd") {
      if (!is_projective(*ring)) fail("twist 'todd' needs a projective-space ring");
      twist = twist_from_total(projective_todd(ring));
    } else if (t.is_string() && t.get<std::string>() == "trivial") {
    } else if (t.is_string()) {
      fail("unknown twist '" + t.get<std::string>() + "'");
    } else {
      twist = twist_from_total(class_from_json(ring, t));
    }
  }
  return ChargeData(omega, std::move(twist), rho_from_json(field(j, "rho"), ring->dim()));
}

Json charge_to_json(const ChargeData& cd) {
  Json out;
  out["omega"] = class_to_json(cd.omega());
  out["rho"] = rho_to_json(cd.rho());
  GradedClass total(cd.ring());
  for (const auto& u : cd.twist()) total += u;
  out["twist"] = class_to_json(total);
  return out;
}

GammaSpec gamma_from_json(const RingPtr& ring, const Json& j) {
  GammaSpec spec{j.contains("omega") ? class_from_json(ring, j["omega"]) : GradedClass::basis(ring, 1, 0), {}, {}};
  for (const auto& block : array_from_json(field(j, "blocks"), "blocks")) {
    spec.gamma.emplace_back();
    for (const auto& g : array_from_json(block, "block")) spec.gamma.back().push_back(class_from_json(ring, g));
    spec.block_degrees.push_back(static_cast<int>(spec.gamma.back().size()));
  }
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    fail(std::string("invalid gamma spec: ") + e.what());
  }
  return spec;
}

LatticeSpec lattice_from_json(const RingPtr& ring, const Json& j,
                              const std::function<SheafClass(const std::string&)>& resolve) {
  LatticeSpec spec;
  spec.ring = ring;
  spec.top = string_from_json(field(j, "top"), "top");
  spec.bottom = string_from_json(field(j, "bottom"), "bottom");
  if (j.contains("strict")) {
    if (!j["strict"].is_boolean()) fail("'strict' must be a boolean");
    spec.strict = j["strict"].get<bool>();
  }
  for (const auto& node : array_from_json(field(j, "nodes"), "nodes")) {
    LatticeSpec::Node out{string_from_json(field(node, "id"), "node id"), std::nullopt};
    if (node.contains("class")) {
      const Json& c = node["class"];
      if (c.is_string()) {
        if (!resolve) fail("node '" + out.id + "' references a class but no workspace is available");
        SheafClass s = resolve(c.get<std::string>());
        if (node.contains("codim"))
          s = SheafClass(s.chern(), int_from_json(node["codim"], "codim"), s.label());
        out.cls = std::move(s);
      } else {
        Json inline_class = c.contains("components") || c.contains("line_bundle") || c.contains("linear_subspace")
                                ? c
                                : Json{{"components", c}};
        if (node.contains("codim")) inline_class["codim"] = node["codim"];
        if (!inline_class.contains("label")) inline_class["label"] = out.id;
        out.cls = sheaf_from_json(ring, inline_class);
      }
    }
    spec.nodes.push_back(std::move(out));
  }
  auto ids = [](const Json& e, std::size_t k, const char* what) {
    if (!e.is_array() || e.size() != k) fail(std::string("malformed ") + what + " entry " + e.dump());
    std::vector<std::string> v;
    for (const auto& s : e) v.push_back(string_from_json(s, what));
    return v;
  };
  if (j.contains("leq"))
    for (const auto& e : array_from_json(j["leq"], "leq")) {
      const auto v = ids(e, 2, "leq");
      spec.leq.emplace_back(v[0], v[1]);
    }
  for (const char* key : {"join", "meet"}) {
    if (!j.contains(key)) continue;
    for (const auto& e : array_from_json(j[key], key)) {
      const auto v = ids(e, 3, key);
      (std::string(key) == "join" ? spec.join : spec.meet).push_back({v[0], v[1], v[2]});
    }
  }
  return spec;
}

Json lattice_to_json(const SubobjectLattice& l) {
  const LatticeSpec s = l.spec();
  Json out;
  out["nodes"] = Json::array();
  for (const auto& node : s.nodes) {
    Json n;
    n["id"] = node.id;
    if (node.cls) {
      n["class"] = class_to_json(node.cls->chern());
      n["codim"] = node.cls->codim();
    }
    out["nodes"].push_back(std::move(n));
  }
  out["leq"] = Json::array();
  for (const auto& [a, b] : s.leq) out["leq"].push_back({a, b});
  out["join"] = Json::array();
  for (const auto& t : s.join) out["join"].push_back({t[0], t[1], t[2]});
  out["meet"] = Json::array();
  for (const auto& t : s.meet) out["meet"].push_back({t[0], t[1], t[2]});
  out["top"] = s.top;
  out["bottom"] = s.bottom;
  out["strict"] = s.strict;
  return out;
}

Json mu_to_json(const MuValue& v) {
  Json out;
  switch (v.order) {
    case MuValue::Order::Lex:
      out["order"] = "lex";
      out["value"] = Json::array();
      for (const auto& x : v.tuple) out["value"].push_back(to_json(x));
      break;
    case MuValue::Order::AtInfinity:
      out["order"] = "infinity";
      out["value"] = to_json(v.poly);
      break;
    case MuValue::Order::AtZeroPlus:
      out["order"] = "zero+";
      out["value"] = to_json(v.poly);
      break;
  }
  return out;
}

MuValue mu_from_json(const Json& j) {
  const std::string order = string_from_json(field(j, "order"), "order");
  MuValue v;
  if (order == "lex") {
    v.order = MuValue::Order::Lex;
    for (const auto& x : array_from_json(field(j, "value"), "value")) v.tuple.push_back(extreal_from_json(x));
  } else if (order == "infinity" || order == "zero+") {
    v.order = order == "infinity" ? MuValue::Order::AtInfinity : MuValue::Order::AtZeroPlus;
    v.poly = rpoly_from_json(field(j, "value"));
  } else {
    fail("unknown mu order '" + order + "'");
  }
  return v;
}

Json verdict_to_json(const SignVerdict& v) {
  Json out;
  out["verdict"] = to_string(v.verdict);
  out["order"] = v.order ? Json(*v.order) : Json(nullptr);
  out["leading_coefficient"] = to_json(v.leading);
  out["polynomial"] = to_json(v.pairing);
  return out;
}

SignVerdict verdict_from_json(const Json& j) {
  SignVerdict v;
  const std::string s = string_from_json(field(j, "verdict"), "verdict");
  if (s == "strict")
    v.verdict = Destab::Strict;
  else if (s == "weak")
    v.verdict = Destab::Weak;
  else if (s == "no")
    v.verdict = Destab::No;
  else
    fail("unknown verdict '" + s + "'");
  const Json& o = field(j, "order");
  if (!o.is_null()) v.order = int_from_json(o, "order");
  v.leading = rational_from_json(field(j, "leading_coefficient"));
  v.pairing = rpoly_from_json(field(j, "polynomial"));
  return v;
}

Json filtration_to_json(const SubobjectLattice& l, const Filtration& f) {
  Json out;
  out["mode"] = to_string(f.mode);
  out["chain"] = chain_ids(l, f);
  out["graded"] = Json::array();
  for (const auto& p : f.graded) {
    Json g;
    g["class"] = class_to_json(p.cls.chern());
    g["codim"] = p.cls.codim();
    g["mu"] = mu_to_json(p.mu);
    out["graded"].push_back(std::move(g));
  }
  return out;
}

FiltrationRecord filtration_from_json(const RingPtr& ring, const Json& j) {
  FiltrationRecord r;
  r.mode = string_from_json(field(j, "mode"), "mode");
  for (const auto& s : array_from_json(field(j, "chain"), "chain")) r.chain.push_back(string_from_json(s, "chain"));
  for (const auto& g : array_from_json(field(j, "graded"), "graded")) {
    r.graded.push_back(class_from_json(ring, field(g, "class")));
    r.mu.push_back(mu_from_json(field(g, "mu")));
  }
  return r;
}

}  // namespace zstab::io
