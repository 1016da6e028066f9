#include "monoloc/monoid.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "monoloc/combination.hpp"
#include "monoloc/errors.hpp"

namespace monoloc {

LatticeMonoid::LatticeMonoid(std::size_t dim, std::vector<IntVector> generators)
    : dim_(dim), gens_(std::move(generators)) {
  require_input(dim >= 1, "lattice monoid needs ambient dimension >= 1");
  for (const auto& g : gens_) require_input(g.size() == dim, "generator dimension mismatch");
  cone_ = RationalCone::from_generators(gens_, dim);
  lattice_ = IntegerLattice::from_generators(gens_, dim);
  if (cone_.is_pointed() && !cone_.facets().empty()) {
    IntVector f(dim, Integer(0));
    for (const auto& n : cone_.facets()) f = add(f, n);
    positive_functional_ = f;
  }
}

Integer LatticeMonoid::search_bound(const IntVector& x) const {
  std::vector<IntVector> nonzero;
  for (const auto& g : gens_)
    if (!is_zero(g)) nonzero.push_back(g);
  if (positive_functional_.empty()) return default_combination_bound(nonzero, x);
  const Integer fx = dot(positive_functional_, x);
  Integer best = 0;
  for (const auto& g : nonzero) {
    const Integer fg = dot(positive_functional_, g);
    require_internal(fg > 0, "positive functional vanishes on a generator");
    const Integer b = fx / fg;
    if (b > best) best = b;
  }
  return best;
}

std::optional<IntVector> LatticeMonoid::decompose(const RatVector& x) const {
  require_input(x.size() == dim_, "element dimension mismatch");
  if (!is_integral(x) || !cone_.contains(x) || !lattice_.contains(x)) return std::nullopt;
  const IntVector xi = to_integer(x);
  std::vector<IntVector> nonzero;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (!is_zero(gens_[i])) {
      nonzero.push_back(gens_[i]);
      where.push_back(i);
    }
  auto c = bounded_nonneg_combination(nonzero, xi, search_bound(xi));
  if (!c) return std::nullopt;
  IntVector out(gens_.size(), Integer(0));
  for (std::size_t i = 0; i < where.size(); ++i) out[where[i]] = (*c)[i];
  return out;
}

OpenConeMonoid::OpenConeMonoid(RationalCone closed_cone, std::vector<IntVector> open_normals)
    : closed_(std::move(closed_cone)) {
  for (auto& o : open_normals) {
    require_input(o.size() == closed_.ambient_dim(), "open normal dimension mismatch");
    IntVector p = primitive(o);
    const auto& f = closed_.facets();
    require_input(std::find(f.begin(), f.end(), p) != f.end(),
                  "open normal " + to_string(o) + " is not a facet normal of the closed cone");
    if (std::find(open_.begin(), open_.end(), p) == open_.end()) open_.push_back(p);
  }
  std::sort(open_.begin(), open_.end());
}

MembershipResult OpenConeMonoid::member(const RatVector& x) const { return cone_member(closed_, x, false, open_); }

bool OpenConeMonoid::contains(const RatVector& x) const { return member(x).status == ConeStatus::inside; }

const char* to_string(MonoidKind k) {
  switch (k) {
    case MonoidKind::finite: return "finite";
    case MonoidKind::lattice: return "lattice";
    case MonoidKind::open_cone: return "open-cone";
  }
  return "?";
}

std::size_t MonoidInstance::dim() const {
  switch (kind()) {
    case MonoidKind::finite: return 0;
    case MonoidKind::lattice: return lattice().dim();
    case MonoidKind::open_cone: return open_cone().dim();
  }
  return 0;
}

const RationalCone& MonoidInstance::closed_cone() const {
  require_input(kind() != MonoidKind::finite, "finite carriers have no cone");
  return kind() == MonoidKind::lattice ? lattice().cone() : open_cone().closed_cone();
}

bool MonoidInstance::contains(const MonoidElement& a) const {
  if (kind() == MonoidKind::finite) return a.is_index() && a.idx() < finite().size();
  if (a.is_index() || a.vec().size() != dim()) return false;
  return kind() == MonoidKind::lattice ? lattice().contains(a.vec()) : open_cone().contains(a.vec());
}

void MonoidInstance::require_member(const MonoidElement& a, const std::string& what) const {
  if (kind() == MonoidKind::finite) {
    require_input(a.is_index() && a.idx() < finite().size(), what + " is not an element of the finite monoid");
    return;
  }
  require_input(!a.is_index() && a.vec().size() == dim(),
                what + " has the wrong dimension (expected " + std::to_string(dim()) + ")");
  require_input(contains(a), what + " " + format(a) + " is not in the monoid");
}

MonoidElement MonoidInstance::zero() const {
  return kind() == MonoidKind::finite ? MonoidElement::index(0) : MonoidElement::vector(zero_vector(dim()));
}

MonoidElement MonoidInstance::add(const MonoidElement& a, const MonoidElement& b) const {
  if (kind() == MonoidKind::finite) return MonoidElement::index(finite().add(a.idx(), b.idx()));
  return MonoidElement::vector(monoloc::add(a.vec(), b.vec()));
}

MonoidElement MonoidInstance::multiple(std::size_t k, const MonoidElement& a) const {
  if (kind() == MonoidKind::finite) return MonoidElement::index(finite().multiple(k, a.idx()));
  return MonoidElement::vector(scale(Rational(static_cast<unsigned long>(k)), a.vec()));
}

bool MonoidInstance::leq(const MonoidElement& a, const MonoidElement& b) const {
  switch (kind()) {
    case MonoidKind::finite: return finite().leq(a.idx(), b.idx());
    case MonoidKind::lattice: return lattice().cone().contains(sub(b.vec(), a.vec()));
    case MonoidKind::open_cone: return open_cone().contains(sub(b.vec(), a.vec()));
  }
  return false;
}

bool MonoidInstance::approx(const MonoidElement& a, const MonoidElement& b) const {
  if (kind() == MonoidKind::finite) return finite().approx(a.idx(), b.idx());
  const RatVector d = sub(b.vec(), a.vec());
  const RationalCone& c = closed_cone();
  return c.contains(d) && c.contains(negate(d));
}

std::vector<MonoidElement> MonoidInstance::generators() const {
  std::vector<MonoidElement> out;
  switch (kind()) {
    case MonoidKind::finite:
      for (auto g : finite().generating_set()) out.push_back(MonoidElement::index(g));
      break;
    case MonoidKind::lattice:
      for (const auto& g : lattice().generators())
        if (!is_zero(g)) out.push_back(MonoidElement::vector(to_rational(g)));
      break;
    case MonoidKind::open_cone:
      for (const auto& g : open_cone().closed_cone().conic_generators())
        out.push_back(MonoidElement::vector(to_rational(g)));
      break;
  }
  return out;
}

std::vector<MonoidElement> MonoidInstance::sample_elements(unsigned max_sum) const {
  std::vector<MonoidElement> out;
  if (kind() == MonoidKind::finite) {
    for (std::size_t i = 0; i < finite().size(); ++i) out.push_back(MonoidElement::index(i));
    return out;
  }
  const auto gens = generators();
  std::set<RatVector> seen;
  RatVector cur = zero_vector(dim());
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t start, unsigned left) {
    if (left == 0) {
      if (!seen.count(cur) && contains(MonoidElement::vector(cur))) {
        seen.insert(cur);
        out.push_back(MonoidElement::vector(cur));
      }
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      cur = monoloc::add(cur, gens[i].vec());
      rec(i, left - 1);
      cur = sub(cur, gens[i].vec());
    }
  };
  for (unsigned s = 0; s <= max_sum; ++s) rec(0, s);
  return out;
}

std::string MonoidInstance::format(const MonoidElement& a) const {
  if (a.is_index()) return kind() == MonoidKind::finite && a.idx() < finite().size() ? finite().name(a.idx())
                                                                                    : std::to_string(a.idx());
  return to_string(a.vec());
}

MonoidElement MonoidInstance::parse(const std::string& text) const {
  if (kind() == MonoidKind::finite) {
    std::string t = text;
    t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
    if (auto i = finite().find(t)) return MonoidElement::index(*i);
    if (!t.empty() && std::all_of(t.begin(), t.end(), ::isdigit)) {
      const std::size_t i = std::stoul(t);
      require_input(i < finite().size(), "element index " + t + " out of range");
      return MonoidElement::index(i);
    }
    throw InputError("unknown element '" + text + "'");
  }
  std::string t;
  for (char ch : text) t += (ch == '(' || ch == ')' || ch == ',' || ch == '[' || ch == ']') ? ' ' : ch;
  std::istringstream in(t);
  RatVector v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  require_input(v.size() == dim(), "element '" + text + "' must have " + std::to_string(dim()) + " coordinates");
  MonoidElement e = MonoidElement::vector(std::move(v));
  require_member(e, "element");
  return e;
}

Tensor::Tensor(std::size_t dim) : dim_(dim), data_(dim * dim * dim, Integer(0)) {}

RatVector Tensor::apply(const RatVector& a, const RatVector& b) const {
  RatVector out = zero_vector(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j] == 0) continue;
      const Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (at(i, j, k) != 0) out[k] += ab * at(i, j, k);
    }
  }
  return out;
}

RatMatrix Tensor::left_matrix(const RatVector& s) const {
  RatMatrix m(dim_, zero_vector(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m[k][j] += s[i] * at(i, j, k);
  return m;
}

RatMatrix Tensor::right_matrix(const RatVector& s) const { return transposed().left_matrix(s); }

Tensor Tensor::transposed() const {
  Tensor t(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) t.at(j, i, k) = at(i, j, k);
  return t;
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool Tensor::is_symmetric() const { return *this == transposed(); }

Tensor Tensor::elementwise(std::size_t dim) {
  Tensor t(dim);
  for (std::size_t i = 0; i < dim; ++i) t.at(i, i, i) = 1;
  return t;
}

Tensor Tensor::matrix2() {
  Tensor t(4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t m = 0; m < 2; ++m)
      for (std::size_t c = 0; c < 2; ++c) t.at(2 * r + m, 2 * m + c, 2 * r + c) = 1;
  return t;
}

BiadditiveOp BiadditiveOp::from_table(std::shared_ptr<const MonoidInstance> carrier, Table mu) {
  require_input(carrier && carrier->kind() == MonoidKind::finite, "operation tables need a finite carrier");
  const std::size_t n = carrier->finite().size();
  require_input(mu.size() == n, "operation table must be n x n");
  for (const auto& row : mu) {
    require_input(row.size() == n, "operation table must be n x n");
    for (auto v : row) require_input(v < n, "operation table entry out of range");
  }
  BiadditiveOp op;
  op.carrier_ = std::move(carrier);
  op.body_ = std::move(mu);
  return op;
}

BiadditiveOp BiadditiveOp::from_tensor(std::shared_ptr<const MonoidInstance> carrier, Tensor mu) {
  require_input(carrier && carrier->kind() != MonoidKind::finite, "tensors need a lattice or cone carrier");
  require_input(mu.dim() == carrier->dim(), "tensor dimension does not match the carrier");
  BiadditiveOp op;
  op.carrier_ = std::move(carrier);
  op.body_ = std::move(mu);
  return op;
}

MonoidElement BiadditiveOp::apply(const MonoidElement& a, const MonoidElement& b) const {
  if (is_table()) return MonoidElement::index(table()[a.idx()][b.idx()]);
  return MonoidElement::vector(tensor().apply(a.vec(), b.vec()));
}

BiadditiveOp BiadditiveOp::opposite() const {
  BiadditiveOp op;
  op.carrier_ = carrier_;
  if (is_table()) {
    const Table& t = table();
    Table u(t.size(), std::vector<std::size_t>(t.size()));
    for (std::size_t a = 0; a < t.size(); ++a)
      for (std::size_t b = 0; b < t.size(); ++b) u[a][b] = t[b][a];
    op.body_ = std::move(u);
  } else {
    op.body_ = tensor().transposed();
  }
  return op;
}

bool BiadditiveOp::is_commutative_exactly() const {
  if (!is_table()) return tensor().is_symmetric();
  const Table& t = table();
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

namespace {

void validate_table(const BiadditiveOp& op, ValidationReport& r) {
  const FiniteMonoid& m = op.carrier().finite();
  const Table& mu = op.table();
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n && r.valid; ++a)
    for (std::size_t b = 0; b < n && r.valid; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const bool left = mu[m.add(a, b)][c] == m.add(mu[a][c], mu[b][c]);
        const bool right = mu[c][m.add(a, b)] == m.add(mu[c][a], mu[c][b]);
        if (!left || !right) {
          r.valid = false;
          r.offending_triple = std::array<std::size_t, 3>{a, b, c};
          r.issues.push_back(std::string(left ? "mu(c,a+b) != mu(c,a)+mu(c,b)" : "mu(a+b,c) != mu(a,c)+mu(b,c)") +
                             " at a=" + m.name(a) + ", b=" + m.name(b) + ", c=" + m.name(c));
          break;
        }
      }
  r.pairs_checked = n * n;
  for (std::size_t c = 0; c < n; ++c) {
    if (m.add(mu[0][c], mu[0][c]) != mu[0][c] || m.add(mu[c][0], mu[c][0]) != mu[c][0]) r.zero_idempotent = false;
  }
}

void record_closure_failure(ValidationReport& r, const MonoidInstance& m, const MonoidElement& a,
                            const MonoidElement& b, const std::string& why) {
  r.valid = false;
  r.closure = "violated";
  r.offending_pair = std::make_pair(a, b);
  r.issues.push_back(why + " for generators " + m.format(a) + ", " + m.format(b));
}

void validate_tensor(const BiadditiveOp& op, ValidationReport& r) {
  const MonoidInstance& m = op.carrier();
  const Tensor& t = op.tensor();
  if (m.kind() == MonoidKind::lattice) {
    const auto gens = m.generators();
    for (const auto& a : gens)
      for (const auto& b : gens) {
        ++r.pairs_checked;
        if (!m.contains(op.apply(a, b))) {
          record_closure_failure(r, m, a, b, "mu(g_i, g_j) = " + m.format(op.apply(a, b)) + " is not in the monoid");
          return;
        }
      }
    return;
  }
  const OpenConeMonoid& oc = m.open_cone();
  const auto gens = oc.closed_cone().conic_generators();
  for (const auto& a : gens)
    for (const auto& b : gens) {
      ++r.pairs_checked;
      const RatVector v = t.apply(to_rational(a), to_rational(b));
      if (!oc.closed_cone().contains(v)) {
        record_closure_failure(r, m, MonoidElement::vector(to_rational(a)), MonoidElement::vector(to_rational(b)),
                               "mu leaves the closed cone");
        return;
      }
    }
  if (oc.open_normals().empty() || t.is_zero()) return;
  // Strict faces: o.mu(x,y) >= eps (oa.x)(ob.y) on generator pairs gives o.mu(x,y) > 0 on M\{0}.
  for (const auto& o : oc.open_normals()) {
    bool certified = false;
    for (const auto& oa : oc.open_normals())
      for (const auto& ob : oc.open_normals()) {
        if (certified) break;
        bool ok = true;
        for (const auto& a : gens)
          for (const auto& b : gens) {
            if (!ok) break;
            if (dot(oa, a) > 0 && dot(ob, b) > 0 && dot(o, t.apply(to_rational(a), to_rational(b))) <= 0) ok = false;
          }
        certified = ok;
      }
    if (!certified) {
      r.valid = false;
      r.closure = "unverified";
      r.issues.push_back("no certificate that mu keeps the open face " + to_string(o) + " strict");
      return;
    }
  }
  r.closure = "certified-open";
}

}  // namespace

ValidationReport validate_biadditive(const BiadditiveOp& op) {
  ValidationReport r;
  if (op.is_table())
    validate_table(op, r);
  else
    validate_tensor(op, r);
  return r;
}

MonotoneReport mu_monotone_check(const BiadditiveOp& op, const std::vector<MonoidElement>& samples) {
  const MonoidInstance& m = op.carrier();
  MonotoneReport r;
  for (const auto& a : samples)
    for (const auto& a2 : samples) {
      if (!m.leq(a, a2)) {
        r.triples += samples.size();
        continue;
      }
      for (const auto& b : samples) {
        ++r.triples;
        ++r.comparable;
        if (!m.leq(op.apply(a, b), op.apply(a2, b)) || !m.leq(op.apply(b, a), op.apply(b, a2)))
          r.violations.push_back("a=" + m.format(a) + ", a'=" + m.format(a2) + ", b=" + m.format(b));
      }
    }
  return r;
}

}  // namespace monoloc
