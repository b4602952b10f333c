#include <ostream>
#include <regex>
#include <set>

#include "zstab/cli.hpp"

namespace zstab::cli {

namespace {

using io::Json;

bool is_rational_string(const Json& j) {
  static const std::regex re(R"(-?\d+(/\d+)?)");
  return j.is_string() && std::regex_match(j.get_ref<const std::string&>(), re);
}

// Numeric mirror of a value whose leaves are all rational strings.
std::optional<Json> approx(const Json& j) {
  if (is_rational_string(j)) return Json(Rational(j.get<std::string>()).get_d());
  if (!j.is_array() || j.empty()) return std::nullopt;
  Json out = Json::array();
  for (const auto& x : j) {
    auto a = approx(x);
    if (!a) return std::nullopt;
    out.push_back(std::move(*a));
  }
  return out;
}

bool is_scalar_list(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& x : j)
    if (x.is_object() || (x.is_array() && !is_scalar_list(x))) return false;
  return true;
}

std::string inline_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(std::ostream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !is_scalar_list(v))) {
        out << pad << k << ":\n";
        render(out, v, indent + 2);
      } else {
        out << pad << k << ": " << inline_text(v) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || (v.is_array() && !is_scalar_list(v))) {
        out << pad << "-\n";
        render(out, v, indent + 2);
      } else {
        out << pad << "- " << inline_text(v) << '\n';
      }
    }
  } else {
    out << pad << inline_text(j) << '\n';
  }
}

}  // namespace

Json with_approximations(const Json& report) {
  static const std::set<std::string> kSkip = {"id", "chain", "top", "bottom", "ring", "pair", "E", "F", "index", "name"};
  if (report.is_array()) {
    Json out = Json::array();
    for (const auto& x : report) out.push_back(with_approximations(x));
    return out;
  }
  if (!report.is_object()) return report;
  Json out = Json::object();
  for (const auto& [k, v] : report.items()) {
    out[k] = with_approximations(v);
    if (kSkip.count(k)) continue;
    if (auto a = approx(v)) out[k + "_approx"] = std::move(*a);
  }
  return out;
}

void emit(std::ostream& out, const Json& report, const OutputOptions& opt) {
  const Json r = opt.approx ? with_approximations(report) : report;
  if (opt.json)
    out << r.dump(2) << '\n';
  else
    render(out, r, 0);
}

}  // namespace zstab::cli
