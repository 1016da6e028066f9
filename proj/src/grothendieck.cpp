#include "monoloc/grothendieck.hpp"

#include <algorithm>
#include <numeric>

#include "monoloc/errors.hpp"

namespace monoloc {

namespace {

RatMatrix rational_rows(const std::vector<IntVector>& rows) {
  RatMatrix out;
  for (const auto& r : rows) out.push_back(to_rational(r));
  return out;
}

RatVector row_times(const RatVector& coeffs, const RatMatrix& rows, std::size_t dim) {
  RatVector out = zero_vector(dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0)
      for (std::size_t j = 0; j < dim; ++j) out[j] += coeffs[i] * rows[i][j];
  return out;
}

SubmonoidClosure finite_closure(ClosureKind kind, std::vector<bool> base, std::vector<bool> result) {
  SubmonoidClosure c;
  c.kind = kind;
  c.base = std::move(base);
  c.result = std::move(result);
  return c;
}

SubmonoidClosure linear_closure(ClosureKind kind, LinearSet base, LinearSet result) {
  SubmonoidClosure c;
  c.kind = kind;
  c.base = std::move(base);
  c.result = std::move(result);
  return c;
}

bool contains_in(const std::variant<std::vector<bool>, LinearSet>& set, const GroupElement& x) {
  if (const auto* flags = std::get_if<std::vector<bool>>(&set)) {
    require_input(x.is_index() && x.idx() < flags->size(), "group element out of range");
    return (*flags)[x.idx()];
  }
  require_input(!x.is_index(), "expected a vector group element");
  return std::get<LinearSet>(set).contains(x.vec());
}

FiniteGroup coset_group(const FiniteGroup& g, const std::vector<bool>& subgroup, std::vector<std::size_t>& class_of,
                        std::vector<std::size_t>& reps) {
  const std::size_t n = g.size();
  const std::size_t none = n;
  class_of.assign(n, none);
  reps.clear();
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of[x] != none) continue;
    const std::size_t c = reps.size();
    reps.push_back(x);
    for (std::size_t h = 0; h < n; ++h)
      if (subgroup[h]) class_of[g.add[x][h]] = c;
  }
  FiniteGroup q;
  q.add.assign(reps.size(), std::vector<std::size_t>(reps.size()));
  q.neg.resize(reps.size());
  for (std::size_t a = 0; a < reps.size(); ++a) {
    for (std::size_t b = 0; b < reps.size(); ++b) q.add[a][b] = class_of[g.add[reps[a]][reps[b]]];
    q.neg[a] = class_of[g.neg[reps[a]]];
  }
  return q;
}

}  // namespace

std::size_t FiniteGroup::multiple(std::size_t k, std::size_t x) const {
  std::size_t acc = 0;
  for (std::size_t i = 0; i < k; ++i) acc = add[acc][x];
  return acc;
}

std::size_t FiniteGroup::exponent() const {
  std::size_t e = 1;
  for (std::size_t x = 0; x < size(); ++x) {
    std::size_t order = 1;
    for (std::size_t acc = x; acc != 0; acc = add[acc][x]) ++order;
    e = std::lcm(e, order);
  }
  return e;
}

IntVector FiniteGroup::invariant_factors() const {
  const std::size_t n = size();
  if (n <= 1) return {};
  IntMatrix rel;
  IntVector zero_row(n, 0);
  zero_row[0] = 1;
  rel.push_back(zero_row);
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      IntVector r(n, 0);
      r[a] += 1;
      r[b] += 1;
      r[add[a][b]] -= 1;
      rel.push_back(std::move(r));
    }
  const SmithForm s = smith_normal_form(rel, n);
  IntVector out;
  for (const auto& d : s.diagonal())
    if (d > 1) out.push_back(d);
  require_internal(s.rank == n, "finite group relations have a free part");
  return out;
}

bool LinearSet::contains(const RatVector& x) const {
  if (lattice && !lattice->contains(x)) return false;
  return cone_member(cone, x, false, strict).status == ConeStatus::inside;
}

const char* to_string(ClosureKind k) {
  switch (k) {
    case ClosureKind::up: return "up";
    case ClosureKind::ddagger: return "ddagger";
    case ClosureKind::up_ddagger: return "up-ddagger";
  }
  return "?";
}

bool SubmonoidClosure::contains(const GroupElement& x) const { return contains_in(result, x); }
bool SubmonoidClosure::base_contains(const GroupElement& x) const { return contains_in(base, x); }

SubmonoidClosure up_closure(const FiniteGroup& g, const std::vector<bool>& s) {
  require_input(s.size() == g.size() && s[0], "submonoid must contain 0");
  const std::size_t bound = g.exponent();
  std::vector<bool> out(g.size(), false);
  for (std::size_t a = 0; a < g.size(); ++a) {
    std::size_t acc = a;
    for (std::size_t k = 1; k <= bound && !out[a]; ++k, acc = g.add[acc][a])
      if (s[acc]) out[a] = true;
  }
  return finite_closure(ClosureKind::up, s, out);
}

SubmonoidClosure ddagger_closure(const FiniteGroup& g, const std::vector<bool>& s) {
  require_input(s.size() == g.size() && s[0], "submonoid must contain 0");
  const std::size_t e = g.exponent();
  const std::size_t bound = e * e + e;
  std::vector<bool> out(g.size(), false);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t shift = 0; shift < g.size() && !out[a]; ++shift) {
      if (!s[shift]) continue;
      bool all = true;
      std::size_t acc = shift;
      for (std::size_t l = 0; l <= bound && all; ++l, acc = g.add[acc][a]) all = s[acc];
      out[a] = all;
    }
  return finite_closure(ClosureKind::ddagger, s, out);
}

SubmonoidClosure up_closure(const IntegerLattice& g, const std::vector<IntVector>& s_gens) {
  LinearSet base{IntegerLattice::from_generators(s_gens, g.ambient_dim()),
                 RationalCone::from_generators(s_gens, g.ambient_dim()), {}};
  LinearSet result{g, base.cone, {}};
  return linear_closure(ClosureKind::up, std::move(base), std::move(result));
}

SubmonoidClosure ddagger_closure(const IntegerLattice& g, const std::vector<IntVector>& s_gens) {
  LinearSet base{g, RationalCone::from_generators(s_gens, g.ambient_dim()), {}};
  LinearSet result{IntegerLattice::from_generators(s_gens, g.ambient_dim()), base.cone, {}};
  return linear_closure(ClosureKind::ddagger, std::move(base), std::move(result));
}

SubmonoidClosure up_closure(const LinearSet& s) {
  require_input(!s.lattice, "rational up closure expects a rational cone set");
  return linear_closure(ClosureKind::up, s, s);
}

SubmonoidClosure ddagger_closure(const LinearSet& s) {
  require_input(!s.lattice, "rational ddagger closure expects a rational cone set");
  LinearSet result = s;
  result.strict.clear();
  return linear_closure(ClosureKind::ddagger, s, std::move(result));
}

LinearQuotient LinearQuotient::of_lattice(const IntegerLattice& l, const Subspace& w) {
  LinearQuotient q;
  q.dim_ = l.ambient_dim();
  q.integral_ = true;
  const std::size_t r = l.rank();
  const RatMatrix b = to_rational(l.basis());
  q.source_ = b;
  if (r == 0) return q;
  q.basis_t_ = transpose(b, q.dim_);
  RatMatrix a;
  for (const auto& n : w.annihilator()) {
    RatVector row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = dot(b[i], n);
    a.push_back(std::move(row));
  }
  const RatMatrix kernel_coords = nullspace(a, r);
  IntMatrix vinv;
  if (kernel_coords.empty()) {
    q.v_ = identity_matrix(r);
    vinv = q.v_;
    q.k_ = 0;
  } else {
    IntMatrix rows;
    for (const auto& v : kernel_coords) rows.push_back(primitive_direction(v));
    const SmithForm s = smith_normal_form(rows, r);
    q.v_ = s.v;
    q.k_ = s.rank;
    require_internal(q.k_ == kernel_coords.size(), "kernel rank mismatch");
    vinv = unimodular_inverse(q.v_);
  }
  for (std::size_t i = 0; i < r; ++i) {
    RatVector amb = row_times(to_rational(vinv[i]), b, q.dim_);
    (i < q.k_ ? q.kernel_ : q.reps_).push_back(std::move(amb));
  }
  return q;
}

LinearQuotient LinearQuotient::of_space(const Subspace& v, const Subspace& w) {
  LinearQuotient q;
  q.dim_ = v.ambient_dim();
  q.w_ = w;
  RatMatrix reduced;
  for (const auto& b : v.basis()) reduced.push_back(w.reduce(b));
  for (const auto& k : w.basis()) require_input(v.contains(k), "kernel must lie in the space");
  q.vred_ = Subspace(q.dim_, reduced);
  q.source_ = v.basis();
  q.kernel_ = w.basis();
  q.reps_ = q.vred_.basis();
  return q;
}

RatVector LinearQuotient::coordinates(const RatVector& x) const {
  require_input(x.size() == dim_, "quotient coordinates: dimension mismatch");
  if (!integral_) {
    const RatVector red = w_.reduce(x);
    require_input(vred_.contains(red), "vector outside the group");
    return vred_.coordinates(red);
  }
  const std::size_t r = source_.size();
  if (r == 0) {
    require_input(is_zero(x), "vector outside the group");
    return {};
  }
  const auto z = solve_linear(basis_t_, x, r);
  require_input(z.has_value(), "vector outside the group");
  RatVector y(r - k_);
  for (std::size_t j = k_; j < r; ++j) {
    Rational acc = 0;
    for (std::size_t i = 0; i < r; ++i) acc += (*z)[i] * v_[i][j];
    y[j - k_] = acc;
  }
  return y;
}

std::shared_ptr<const GrothGroup> GrothGroup::build(std::shared_ptr<const MonoidInstance> m) {
  require_input(m != nullptr, "missing carrier");
  auto g = std::make_shared<GrothGroup>();
  g->carrier_ = m;
  switch (m->kind()) {
    case MonoidKind::finite: {
      const FiniteMonoid& f = m->finite();
      const std::size_t n = f.size();
      std::vector<std::vector<bool>> cancel(n, std::vector<bool>(n, false));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t t = 0; t < n && !cancel[x][y]; ++t) cancel[x][y] = f.add(x, t) == f.add(y, t);
      const std::size_t none = n * n;
      g->pair_class_.assign(n * n, none);
      std::vector<std::size_t> reps;
      for (std::size_t p = 0; p < n * n; ++p) {
        if (g->pair_class_[p] != none) continue;
        const std::size_t a = p / n, b = p % n;
        g->pair_class_[p] = reps.size();
        for (std::size_t q = p + 1; q < n * n; ++q)
          if (g->pair_class_[q] == none && cancel[f.add(a, q % n)][f.add(q / n, b)]) g->pair_class_[q] = reps.size();
        reps.push_back(p);
      }
      const std::size_t c = reps.size();
      g->group_.add.assign(c, std::vector<std::size_t>(c));
      g->group_.neg.resize(c);
      for (std::size_t i = 0; i < c; ++i) {
        const std::size_t a = reps[i] / n, b = reps[i] % n;
        g->group_.neg[i] = g->pair_class_[b * n + a];
        for (std::size_t j = 0; j < c; ++j) {
          const std::size_t a2 = reps[j] / n, b2 = reps[j] % n;
          g->group_.add[i][j] = g->pair_class_[f.add(a, a2) * n + f.add(b, b2)];
        }
      }
      std::vector<bool> image(c, false);
      for (std::size_t a = 0; a < n; ++a) image[g->pair_class_[a * n]] = true;
      g->up_ = up_closure(g->group_, image);
      g->up_ddagger_ = ddagger_closure(g->group_, std::get<std::vector<bool>>(g->up_.result));
      g->up_ddagger_.kind = ClosureKind::up_ddagger;
      break;
    }
    case MonoidKind::lattice: {
      const LatticeMonoid& l = m->lattice();
      g->lattice_ = l.lattice();
      g->span_ = Subspace(l.dim(), rational_rows(l.generators()));
      g->up_ = up_closure(g->lattice_, l.generators());
      g->up_ddagger_ = ddagger_closure(g->lattice_, l.generators());
      g->up_ddagger_.base = g->up_.result;
      g->up_ddagger_.kind = ClosureKind::up_ddagger;
      break;
    }
    case MonoidKind::open_cone: {
      const OpenConeMonoid& o = m->open_cone();
      g->span_ = Subspace(o.dim(), rational_rows(o.closed_cone().conic_generators()));
      const LinearSet s{std::nullopt, o.closed_cone(), o.open_normals()};
      g->up_ = up_closure(s);
      g->up_ddagger_ = ddagger_closure(s);
      g->up_ddagger_.kind = ClosureKind::up_ddagger;
      break;
    }
  }
  return g;
}

GroupElement GrothGroup::iota(const MonoidElement& a) const {
  carrier_->require_member(a);
  if (kind() == MonoidKind::finite) return GroupElement::index(pair_class(a.idx(), 0));
  return a;
}

GroupElement GrothGroup::difference(const MonoidElement& a, const MonoidElement& b) const {
  carrier_->require_member(a);
  carrier_->require_member(b);
  if (kind() == MonoidKind::finite) return GroupElement::index(pair_class(a.idx(), b.idx()));
  return GroupElement::vector(sub(a.vec(), b.vec()));
}

GroupElement GrothGroup::add(const GroupElement& x, const GroupElement& y) const {
  if (kind() == MonoidKind::finite) return GroupElement::index(group_.add[x.idx()][y.idx()]);
  return GroupElement::vector(monoloc::add(x.vec(), y.vec()));
}

GroupElement GrothGroup::negate(const GroupElement& x) const {
  if (kind() == MonoidKind::finite) return GroupElement::index(group_.neg[x.idx()]);
  return GroupElement::vector(monoloc::negate(x.vec()));
}

bool GrothGroup::contains(const GroupElement& x) const {
  switch (kind()) {
    case MonoidKind::finite: return x.is_index() && x.idx() < group_.size();
    case MonoidKind::lattice: return !x.is_index() && x.vec().size() == span_.ambient_dim() && lattice_.contains(x.vec());
    case MonoidKind::open_cone: return !x.is_index() && x.vec().size() == span_.ambient_dim() && span_.contains(x.vec());
  }
  return false;
}

std::shared_ptr<const ReducedGroup> ReducedGroup::build(std::shared_ptr<const MonoidInstance> m, int level) {
  return build(GrothGroup::build(std::move(m)), level);
}

std::shared_ptr<const ReducedGroup> ReducedGroup::build(std::shared_ptr<const GrothGroup> g, int level) {
  require_input(level == 1 || level == 2, "level must be 1 or 2");
  auto r = std::make_shared<ReducedGroup>();
  r->groth_ = g;
  r->level_ = level;
  const SubmonoidClosure& s = level == 1 ? g->up() : g->up_ddagger();
  switch (g->kind()) {
    case MonoidKind::finite: {
      const auto& flags = std::get<std::vector<bool>>(s.result);
      const FiniteGroup& grp = g->group();
      std::vector<bool> kernel(grp.size(), false);
      for (std::size_t x = 0; x < grp.size(); ++x) kernel[x] = flags[x] && flags[grp.neg[x]];
      std::vector<std::size_t> reps;
      r->group_ = coset_group(grp, kernel, r->class_of_, reps);
      r->positive_.resize(reps.size());
      for (std::size_t c = 0; c < reps.size(); ++c) r->positive_[c] = flags[reps[c]];
      break;
    }
    case MonoidKind::lattice: {
      const RationalCone& cone = g->carrier().lattice().cone();
      const Subspace w(cone.ambient_dim(), rational_rows(cone.lineality_basis()));
      r->quotient_ = LinearQuotient::of_lattice(g->lattice(), w);
      if (r->rank() > 0) {
        std::vector<IntVector> gens;
        for (const auto& x : g->carrier().lattice().generators())
          gens.push_back(to_integer(r->quotient_.coordinates(to_rational(x))));
        r->cone_ = RationalCone::from_generators(gens, r->rank());
      }
      break;
    }
    case MonoidKind::open_cone: {
      const OpenConeMonoid& o = g->carrier().open_cone();
      const RationalCone& closed = o.closed_cone();
      const bool strict = level == 1 && !o.open_normals().empty();
      const Subspace w = strict ? Subspace(closed.ambient_dim(), {})
                                : Subspace(closed.ambient_dim(), rational_rows(closed.lineality_basis()));
      r->quotient_ = LinearQuotient::of_space(g->span(), w);
      if (r->rank() > 0) {
        std::vector<RatVector> gens;
        for (const auto& x : closed.conic_generators()) gens.push_back(r->quotient_.coordinates(to_rational(x)));
        r->cone_ = RationalCone::from_generators(gens, r->rank());
        if (strict)
          for (const auto& n : o.open_normals()) {
            RatVector img(r->rank());
            for (std::size_t j = 0; j < r->rank(); ++j) img[j] = dot(n, r->quotient_.representatives()[j]);
            r->strict_.push_back(primitive_direction(img));
          }
      }
      break;
    }
  }
  return r;
}

GroupElement ReducedGroup::project(const GroupElement& x) const {
  if (kind() == MonoidKind::finite) {
    require_input(x.is_index() && x.idx() < class_of_.size(), "group element out of range");
    return GroupElement::index(class_of_[x.idx()]);
  }
  require_input(!x.is_index(), "expected a vector group element");
  return GroupElement::vector(quotient_.coordinates(x.vec()));
}

GroupElement ReducedGroup::iota(const MonoidElement& a) const { return project(groth_->iota(a)); }

GroupElement ReducedGroup::add(const GroupElement& x, const GroupElement& y) const {
  if (kind() == MonoidKind::finite) return GroupElement::index(group_.add[x.idx()][y.idx()]);
  return GroupElement::vector(monoloc::add(x.vec(), y.vec()));
}

GroupElement ReducedGroup::sub(const GroupElement& x, const GroupElement& y) const {
  if (kind() == MonoidKind::finite) return GroupElement::index(group_.add[x.idx()][group_.neg[y.idx()]]);
  return GroupElement::vector(monoloc::sub(x.vec(), y.vec()));
}

bool ReducedGroup::is_positive(const GroupElement& x) const {
  if (kind() == MonoidKind::finite) return positive_[x.idx()];
  require_input(x.vec().size() == rank(), "reduced group element has the wrong rank");
  if (rank() == 0) return true;
  return cone_member(cone_, x.vec(), false, strict_).status == ConeStatus::inside;
}

std::string ReducedGroup::format(const GroupElement& x) const {
  if (x.is_index()) return "[" + std::to_string(x.idx()) + "]";
  return to_string(x.vec());
}

GroupElement LiftedOp::apply(const GroupElement& x, const GroupElement& y) const {
  if (group_->kind() == MonoidKind::finite) return GroupElement::index(table_[x.idx()][y.idx()]);
  const std::size_t q = group_->rank();
  require_input(x.vec().size() == q && y.vec().size() == q, "lifted operation: rank mismatch");
  RatVector out = zero_vector(q);
  for (std::size_t i = 0; i < q; ++i) {
    if (x.vec()[i] == 0) continue;
    for (std::size_t j = 0; j < q; ++j) {
      if (y.vec()[j] == 0) continue;
      const Rational c = x.vec()[i] * y.vec()[j];
      for (std::size_t k = 0; k < q; ++k) out[k] += c * structure_[i * q + j][k];
    }
  }
  return GroupElement::vector(std::move(out));
}

LiftedOp lift_mu(const BiadditiveOp& op, std::shared_ptr<const ReducedGroup> g,
                 const std::vector<MonoidElement>& samples) {
  require_input(g != nullptr, "missing reduced group");
  require_input(&op.carrier() == &g->carrier(), "operation and group use different carriers");
  LiftedOp lifted;
  lifted.group_ = g;
  const ReducedGroup& red = *g;
  if (red.kind() == MonoidKind::finite) {
    const FiniteMonoid& f = red.carrier().finite();
    const GrothGroup& gr = red.groth();
    const std::size_t n = f.size();
    const Table& mu = op.table();
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> reps(red.size());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) reps[red.class_of(gr.pair_class(a, b))].emplace_back(a, b);
    std::size_t per_class = n * n;
    while (per_class > 1 && per_class * per_class * red.size() * red.size() > 4'000'000) per_class /= 2;
    const std::size_t none = red.size();
    lifted.table_.assign(red.size(), std::vector<std::size_t>(red.size(), none));
    for (std::size_t x = 0; x < red.size(); ++x)
      for (std::size_t y = 0; y < red.size(); ++y)
        for (std::size_t i = 0; i < std::min(per_class, reps[x].size()); ++i)
          for (std::size_t j = 0; j < std::min(per_class, reps[y].size()); ++j) {
            const auto [a, b] = reps[x][i];
            const auto [c, d] = reps[y][j];
            const std::size_t pos = f.add(mu[a][c], mu[b][d]);
            const std::size_t neg = f.add(mu[a][d], mu[b][c]);
            const std::size_t img = red.class_of(gr.pair_class(pos, neg));
            require_internal(lifted.table_[x][y] == none || lifted.table_[x][y] == img,
                             "lifted operation is not well defined");
            lifted.table_[x][y] = img;
            ++lifted.checks_;
          }
  } else {
    const Tensor& t = op.tensor();
    const LinearQuotient& q = red.quotient();
    const std::size_t r = q.rank();
    for (const auto& k : q.kernel_basis())
      for (const auto& b : q.source_basis()) {
        require_internal(is_zero(q.coordinates(t.apply(k, b))) && is_zero(q.coordinates(t.apply(b, k))),
                         "lifted operation is not well defined on the kernel");
        ++lifted.checks_;
      }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        lifted.structure_.push_back(q.coordinates(t.apply(q.representatives()[i], q.representatives()[j])));
  }
  for (const auto& a : samples)
    for (const auto& b : samples) {
      const GroupElement lhs = lifted.apply(red.iota(a), red.iota(b));
      require_internal(lhs == red.iota(op.apply(a, b)), "lifted operation disagrees with mu on a sample");
      ++lifted.checks_;
    }
  return lifted;
}

GroupElement Pi12::apply(const GroupElement& x) const {
  if (x.is_index()) return GroupElement::index(class_map[x.idx()]);
  return GroupElement::vector(mat_vec(matrix, x.vec()));
}

Pi12 pi12(std::shared_ptr<const ReducedGroup> first, std::shared_ptr<const ReducedGroup> second) {
  require_input(first && second && first->level() == 1 && second->level() == 2, "pi12 needs levels 1 and 2");
  require_input(&first->carrier() == &second->carrier(), "pi12 needs groups of the same carrier");
  Pi12 p;
  p.from = first;
  p.to = second;
  const MonoidInstance& m = first->carrier();
  if (m.kind() == MonoidKind::finite) {
    const std::size_t none = second->size();
    p.class_map.assign(first->size(), none);
    for (std::size_t g = 0; g < first->groth().group().size(); ++g) {
      const std::size_t a = first->class_of(g), b = second->class_of(g);
      if (p.class_map[a] == none) p.class_map[a] = b;
      else if (p.class_map[a] != b) p.triangle = false;
    }
    std::vector<bool> hit(second->size(), false);
    for (auto c : p.class_map) hit[c] = true;
    p.surjective = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
    p.injective = first->size() == second->size() && p.surjective;
  } else {
    const std::size_t q1 = first->rank(), q2 = second->rank();
    p.matrix.assign(q2, RatVector(q1));
    for (std::size_t j = 0; j < q1; ++j) {
      const RatVector col = second->quotient().coordinates(first->quotient().representatives()[j]);
      for (std::size_t i = 0; i < q2; ++i) p.matrix[i][j] = col[i];
    }
    const std::size_t rk = rank(p.matrix, q1);
    p.injective = rk == q1;
    p.surjective = rk == q2;
    if (p.surjective && first->quotient().integral() && q2 > 0) {
      std::vector<IntVector> cols;
      for (std::size_t j = 0; j < q1; ++j) {
        RatVector c(q2);
        for (std::size_t i = 0; i < q2; ++i) c[i] = p.matrix[i][j];
        require_internal(is_integral(c), "pi12 is not integral");
        cols.push_back(to_integer(c));
      }
      const IntegerLattice img = IntegerLattice::from_generators(cols, q2);
      for (std::size_t i = 0; i < q2; ++i) p.surjective = p.surjective && img.contains(unit_vector(q2, i));
    }
  }
  for (const auto& g : m.generators()) {
    const GroupElement x = g.is_index() ? first->groth().iota(g) : g;
    if (!(p.apply(first->project(x)) == second->project(x))) p.triangle = false;
  }
  return p;
}

LemmaReport check_lemma_canleq(const ReducedGroup& first,
                               const std::vector<std::pair<MonoidElement, MonoidElement>>& pairs) {
  require_input(first.level() == 1, "canonical order lemma uses the first reduced group");
  LemmaReport rep;
  for (const auto& [a, b] : pairs) {
    const bool lhs = first.carrier().leq(a, b);
    const bool rhs = first.leq(first.iota(a), first.iota(b));
    ++rep.pairs;
    if (lhs != rhs)
      rep.discrepancies.push_back(first.carrier().format(a) + " <= " + first.carrier().format(b) + ": monoid " +
                                  (lhs ? "yes" : "no") + ", group " + (rhs ? "yes" : "no"));
  }
  return rep;
}

LemmaReport check_lemma_canequiv(const ReducedGroup& second,
                                 const std::vector<std::pair<MonoidElement, MonoidElement>>& pairs) {
  require_input(second.level() == 2, "equivalence lemma uses the second reduced group");
  LemmaReport rep;
  for (const auto& [a, b] : pairs) {
    const bool lhs = second.carrier().approx(a, b);
    const bool rhs = second.equal(second.iota(a), second.iota(b));
    ++rep.pairs;
    if (lhs != rhs)
      rep.discrepancies.push_back(second.carrier().format(a) + " ~ " + second.carrier().format(b) + ": monoid " +
                                  (lhs ? "yes" : "no") + ", group " + (rhs ? "yes" : "no"));
  }
  return rep;
}

}  // namespace monoloc
