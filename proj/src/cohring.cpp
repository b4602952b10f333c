#include "zstab/cohring.hpp"

#include <sstream>

#include "zstab/errors.hpp"

namespace zstab {

std::size_t GradedRing::table_index(int p, int q) const {
  return static_cast<std::size_t>(p) * static_cast<std::size_t>(dim_ + 1) + static_cast<std::size_t>(q);
}

const std::vector<Rational>& GradedRing::cup_basis(int p, int i, int q, int j) const {
  if (p < 0 || q < 0 || p + q > dim_) throw std::out_of_range("cup_basis: degree out of range");
  const auto& table = tables_[table_index(p, q)];
  return table.at(static_cast<std::size_t>(i) * static_cast<std::size_t>(sizes_[q]) + static_cast<std::size_t>(j));
}

GradedRing::Builder::Builder(int n, std::vector<int> sizes) {
  if (n < 1) throw PreconditionError("ring dimension must be >= 1");
  if (sizes.size() != static_cast<std::size_t>(n + 1)) throw PreconditionError("need n+1 basis sizes");
  for (int b : sizes)
    if (b < 1) throw PreconditionError("basis sizes must be positive");
  if (sizes[0] != 1) throw PreconditionError("degree 0 must have a single generator");
  ring_.dim_ = n;
  ring_.sizes_ = std::move(sizes);
  ring_.tables_.resize(static_cast<std::size_t>((n + 1) * (n + 1)));
  explicit_.resize(ring_.tables_.size());
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q) {
      const auto cells = static_cast<std::size_t>(ring_.sizes_[p] * ring_.sizes_[q]);
      ring_.tables_[ring_.table_index(p, q)].assign(
          cells, std::vector<Rational>(static_cast<std::size_t>(ring_.sizes_[p + q])));
      explicit_[ring_.table_index(p, q)].assign(cells, false);
    }
  ring_.integration_.assign(static_cast<std::size_t>(ring_.sizes_[n]), Rational(0));
  ring_.names_.resize(static_cast<std::size_t>(n + 1));
  for (int p = 0; p <= n; ++p)
    for (int i = 0; i < ring_.sizes_[p]; ++i) ring_.names_[p].push_back("e" + std::to_string(p) + "_" + std::to_string(i));
}

GradedRing::Builder& GradedRing::Builder::set_cup(int p, int i, int q, int j, std::vector<Rational> result) {
  const int n = ring_.dim_;
  if (p < 0 || q < 0 || p + q > n) throw PreconditionError("set_cup: degrees out of range");
  if (i < 0 || i >= ring_.sizes_[p] || j < 0 || j >= ring_.sizes_[q])
    throw PreconditionError("set_cup: basis index out of range");
  if (result.size() != static_cast<std::size_t>(ring_.sizes_[p + q]))
    throw PreconditionError("set_cup: result has wrong length");
  const auto cell = static_cast<std::size_t>(i * ring_.sizes_[q] + j);
  ring_.tables_[ring_.table_index(p, q)][cell] = std::move(result);
  explicit_[ring_.table_index(p, q)][cell] = true;
  return *this;
}

GradedRing::Builder& GradedRing::Builder::set_integration(std::vector<Rational> values) {
  if (values.size() != ring_.integration_.size()) throw PreconditionError("integration functional has wrong length");
  ring_.integration_ = std::move(values);
  return *this;
}

GradedRing::Builder& GradedRing::Builder::set_names(std::vector<std::vector<std::string>> names) {
  if (names.size() != ring_.sizes_.size()) throw PreconditionError("basis names: need one list per degree");
  for (std::size_t p = 0; p < names.size(); ++p)
    if (names[p].size() != static_cast<std::size_t>(ring_.sizes_[p]))
      throw PreconditionError("basis names: wrong count in degree " + std::to_string(p));
  ring_.names_ = std::move(names);
  return *this;
}

RingPtr GradedRing::Builder::build() && {
  const int n = ring_.dim_;
  auto is_set = [&](int p, int i, int q, int j) {
    return explicit_[ring_.table_index(p, q)][static_cast<std::size_t>(i * ring_.sizes_[q] + j)];
  };
  auto cell = [&](int p, int i, int q, int j) -> std::vector<Rational>& {
    return ring_.tables_[ring_.table_index(p, q)][static_cast<std::size_t>(i * ring_.sizes_[q] + j)];
  };
  for (int p = 0; p <= n; ++p)
    for (int q = 0; p + q <= n; ++q)
      for (int i = 0; i < ring_.sizes_[p]; ++i)
        for (int j = 0; j < ring_.sizes_[q]; ++j) {
          if (is_set(p, i, q, j)) continue;
          auto& out = cell(p, i, q, j);
          if (p == 0) {
            out[static_cast<std::size_t>(j)] = 1;
          } else if (q == 0) {
            out[static_cast<std::size_t>(i)] = 1;
          } else if (is_set(q, j, p, i)) {
            out = cell(q, j, p, i);
          }
        }
  return RingPtr(new GradedRing(std::move(ring_)));
}

RingPtr projective_space_ring(int n) {
  if (n < 1) throw PreconditionError("projective_space_ring: n must be >= 1");
  GradedRing::Builder b(n, std::vector<int>(static_cast<std::size_t>(n + 1), 1));
  for (int p = 1; p <= n; ++p)
    for (int q = 1; p + q <= n; ++q) b.set_cup(p, 0, q, 0, {Rational(1)});
  b.set_integration({Rational(1)});
  std::vector<std::vector<std::string>> names;
  for (int p = 0; p <= n; ++p) names.push_back({p == 0 ? std::string("1") : p == 1 ? std::string("H") : "H^" + std::to_string(p)});
  b.set_names(std::move(names));
  return std::move(b).build();
}

std::string RingViolation::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Unit: os << "unit law fails for "; break;
    case Kind::Commutativity: os << "commutativity fails for "; break;
    case Kind::Associativity: os << "associativity fails for "; break;
  }
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k) os << ", ";
    os << "e" << basis[k].first << "_" << basis[k].second;
  }
  return os.str();
}

namespace {

GradedClass basis_class(const RingPtr& r, int p, int i) { return GradedClass::basis(r, p, i); }

}  // namespace

std::vector<RingViolation> validate_ring(const GradedRing& ring) {
  // A non-owning handle so basis classes can be formed against this ring.
  RingPtr r(&ring, [](const GradedRing*) {});
  std::vector<RingViolation> out;
  const int n = ring.dim();
  const auto& b = ring.basis_sizes();
  for (int q = 0; q <= n; ++q)
    for (int j = 0; j < b[q]; ++j) {
      std::vector<Rational> e(static_cast<std::size_t>(b[q]));
      e[static_cast<std::size_t>(j)] = 1;
      if (ring.cup_basis(0, 0, q, j) != e || ring.cup_basis(q, j, 0, 0) != e)
        out.push_back({RingViolation::Kind::Unit, {{q, j}}});
    }
  for (int p = 1; p <= n; ++p)
    for (int q = p; p + q <= n; ++q)
      for (int i = 0; i < b[p]; ++i)
        for (int j = 0; j < b[q]; ++j) {
          if (p == q && j <= i) continue;
          if (ring.cup_basis(p, i, q, j) != ring.cup_basis(q, j, p, i))
            out.push_back({RingViolation::Kind::Commutativity, {{p, i}, {q, j}}});
        }
  for (int p = 1; p <= n; ++p)
    for (int q = 1; p + q <= n; ++q)
      for (int s = 1; p + q + s <= n; ++s)
        for (int i = 0; i < b[p]; ++i)
          for (int j = 0; j < b[q]; ++j)
            for (int k = 0; k < b[s]; ++k) {
              const auto x = basis_class(r, p, i);
              const auto y = basis_class(r, q, j);
              const auto z = basis_class(r, s, k);
              if (cup(cup(x, y), z) != cup(x, cup(y, z)))
                out.push_back({RingViolation::Kind::Associativity, {{p, i}, {q, j}, {s, k}}});
            }
  return out;
}

GradedClass::GradedClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw PreconditionError("null ring");
  for (int b : ring_->basis_sizes()) comps_.emplace_back(static_cast<std::size_t>(b));
}

GradedClass::GradedClass(RingPtr ring, std::vector<std::vector<Rational>> components)
    : ring_(std::move(ring)), comps_(std::move(components)) {
  if (!ring_) throw PreconditionError("null ring");
  const auto& b = ring_->basis_sizes();
  if (comps_.size() != b.size()) throw PreconditionError("class needs one component per degree");
  for (std::size_t p = 0; p < b.size(); ++p)
    if (comps_[p].size() != static_cast<std::size_t>(b[p]))
      throw PreconditionError("component " + std::to_string(p) + " has wrong length");
}

GradedClass GradedClass::unit(RingPtr ring) { return basis(std::move(ring), 0, 0); }

GradedClass GradedClass::basis(RingPtr ring, int degree, int index, Rational coeff) {
  GradedClass x(std::move(ring));
  x.comps_.at(static_cast<std::size_t>(degree)).at(static_cast<std::size_t>(index)) = std::move(coeff);
  return x;
}

int GradedClass::dim() const noexcept { return ring_->dim(); }

GradedClass GradedClass::degree_part(int p) const {
  GradedClass x(ring_);
  x.comps_.at(static_cast<std::size_t>(p)) = comps_.at(static_cast<std::size_t>(p));
  return x;
}

GradedClass GradedClass::truncated(int p) const {
  GradedClass x(ring_);
  for (int d = 0; d <= p && d <= dim(); ++d) x.comps_[static_cast<std::size_t>(d)] = comps_[static_cast<std::size_t>(d)];
  return x;
}

bool GradedClass::is_zero_in_degree(int p) const {
  for (const auto& c : comps_.at(static_cast<std::size_t>(p)))
    if (!zstab::is_zero(c)) return false;
  return true;
}

bool GradedClass::is_zero() const {
  for (int p = 0; p <= dim(); ++p)
    if (!is_zero_in_degree(p)) return false;
  return true;
}

bool GradedClass::is_pure(int p) const {
  for (int d = 0; d <= dim(); ++d)
    if (d != p && !is_zero_in_degree(d)) return false;
  return true;
}

std::optional<int> GradedClass::lowest_degree() const {
  for (int p = 0; p <= dim(); ++p)
    if (!is_zero_in_degree(p)) return p;
  return std::nullopt;
}

void GradedClass::require_same_ring(const GradedClass& o) const {
  if (ring_.get() != o.ring_.get()) throw RingMismatch();
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  require_same_ring(o);
  for (std::size_t p = 0; p < comps_.size(); ++p)
    for (std::size_t i = 0; i < comps_[p].size(); ++i) comps_[p][i] += o.comps_[p][i];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  require_same_ring(o);
  for (std::size_t p = 0; p < comps_.size(); ++p)
    for (std::size_t i = 0; i < comps_[p].size(); ++i) comps_[p][i] -= o.comps_[p][i];
  return *this;
}

GradedClass& GradedClass::operator*=(const Rational& s) {
  for (auto& comp : comps_)
    for (auto& c : comp) c *= s;
  return *this;
}

bool operator==(const GradedClass& a, const GradedClass& b) {
  return a.ring_.get() == b.ring_.get() && a.comps_ == b.comps_;
}

std::string to_string(const GradedClass& x) {
  std::ostringstream os;
  bool first = true;
  const auto& names = x.ring()->basis_names();
  for (int p = 0; p <= x.dim(); ++p)
    for (std::size_t i = 0; i < x.component(p).size(); ++i) {
      const auto& c = x.component(p)[i];
      if (is_zero(c)) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << "(" << to_string(c) << ")";
      os << names[static_cast<std::size_t>(p)][i];
    }
  return first ? "0" : os.str();
}

GradedClass cup(const GradedClass& x, const GradedClass& y) {
  if (x.ring().get() != y.ring().get()) throw RingMismatch();
  const auto& ring = *x.ring();
  const int n = ring.dim();
  std::vector<std::vector<Rational>> out;
  for (int b : ring.basis_sizes()) out.emplace_back(static_cast<std::size_t>(b));
  for (int p = 0; p <= n; ++p) {
    const auto& xp = x.component(p);
    for (int q = 0; p + q <= n; ++q) {
      const auto& yq = y.component(q);
      for (std::size_t i = 0; i < xp.size(); ++i) {
        if (is_zero(xp[i])) continue;
        for (std::size_t j = 0; j < yq.size(); ++j) {
          if (is_zero(yq[j])) continue;
          const Rational w = xp[i] * yq[j];
          const auto& e = ring.cup_basis(p, static_cast<int>(i), q, static_cast<int>(j));
          auto& dst = out[static_cast<std::size_t>(p + q)];
          for (std::size_t k = 0; k < e.size(); ++k)
            if (!is_zero(e[k])) dst[k] += w * e[k];
        }
      }
    }
  }
  return GradedClass(x.ring(), std::move(out));
}

Rational integrate(const GradedClass& x) {
  const auto& top = x.component(x.dim());
  const auto& f = x.ring()->integration();
  Rational s;
  for (std::size_t i = 0; i < top.size(); ++i) s += top[i] * f[i];
  return s;
}

GradedClass omega_power(const GradedClass& omega, int i) {
  if (!omega.is_pure(1)) throw PreconditionError("omega must be a pure degree-1 class");
  if (i < 0 || i > omega.dim()) throw PreconditionError("omega_power: exponent out of range");
  GradedClass acc = GradedClass::unit(omega.ring());
  for (int k = 0; k < i; ++k) acc = cup(acc, omega);
  return acc;
}

GradedClass exp_class(const GradedClass& x) {
  if (!x.is_zero_in_degree(0)) throw PreconditionError("exp_class: class must have no degree-0 part");
  GradedClass result = GradedClass::unit(x.ring());
  GradedClass term = GradedClass::unit(x.ring());
  for (int k = 1; k <= x.dim(); ++k) {
    term = cup(term, x) * Rational(1, k);
    result += term;
  }
  return result;
}

GradedClass todd_class(const RingPtr& ring, const std::vector<GradedClass>& chern) {
  const int n = ring->dim();
  if (n > 4) throw PreconditionError("todd_class: hardcoded only through dimension 4; supply Td(X) directly");
  auto c = [&](int i) {
    if (i >= 1 && static_cast<std::size_t>(i) <= chern.size()) return chern[static_cast<std::size_t>(i - 1)];
    return GradedClass(ring);
  };
  const GradedClass c1 = c(1), c2 = c(2), c3 = c(3), c4 = c(4);
  GradedClass td = GradedClass::unit(ring);
  td += c1 * Rational(1, 2);
  const GradedClass c1sq = cup(c1, c1);
  td += (c1sq + c2) * Rational(1, 12);
  td += cup(c1, c2) * Rational(1, 24);
  td += (-cup(c1sq, c1sq) + cup(c1sq, c2) * Rational(4) + cup(c2, c2) * Rational(3) + cup(c1, c3) - c4) *
        Rational(1, 720);
  return td;
}

GradedClass projective_todd(const RingPtr& ring) {
  const int n = ring->dim();
  std::vector<GradedClass> chern;
  mpz_class binom;
  for (int i = 1; i <= n; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(i));
    chern.push_back(GradedClass::basis(ring, i, 0, Rational(binom)));
  }
  return todd_class(ring, chern);
}

GradedClass projective_line_bundle_ch(const RingPtr& ring, const Rational& a) {
  return exp_class(GradedClass::basis(ring, 1, 0, a));
}

GradedClass projective_linear_subspace_ch(const RingPtr& ring, int codim) {
  if (codim < 0 || codim > ring->dim()) throw PreconditionError("linear subspace codimension out of range");
  const GradedClass factor = GradedClass::unit(ring) - projective_line_bundle_ch(ring, Rational(-1));
  GradedClass acc = GradedClass::unit(ring);
  for (int k = 0; k < codim; ++k) acc = cup(acc, factor);
  return acc;
}

SheafClass::SheafClass(GradedClass chern, int codim, std::string label)
    : chern_(std::move(chern)), codim_(codim), label_(std::move(label)) {
  if (codim_ < 0 || codim_ > chern_.dim())
    throw NonEffective("declared codimension " + std::to_string(codim_) + " out of range");
  for (int i = 0; i < codim_; ++i)
    if (!chern_.is_zero_in_degree(i))
      throw NonEffective("class '" + label_ + "': ch_" + std::to_string(i) + " must vanish below codimension " +
                         std::to_string(codim_));
}

SheafClass SheafClass::from_chern(GradedClass chern, std::string label) {
  const auto c = chern.lowest_degree();
  if (!c) throw NonEffective("class '" + label + "' is zero");
  return SheafClass(std::move(chern), *c, std::move(label));
}

}  // namespace zstab
