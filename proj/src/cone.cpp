#include "monoloc/cone.hpp"

#include <algorithm>

#include "monoloc/errors.hpp"
#include "monoloc/linalg.hpp"
#include "monoloc/lp.hpp"

namespace monoloc {

namespace {

struct Ray {
  IntVector v;
  std::vector<bool> tight;  // one flag per processed inequality
};

// Orthogonal projection onto the complement of span(basis), scaled to a primitive integer vector.
IntVector project_off(const IntVector& r, const std::vector<IntVector>& basis) {
  if (basis.empty()) return primitive(r);
  const std::size_t k = basis.size();
  RatMatrix gram(k, zero_vector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rational(dot(basis[i], basis[j]));
    rhs[i] = Rational(dot(basis[i], r));
  }
  const auto c = solve_linear(gram, rhs, k);
  require_internal(c.has_value(), "degenerate lineality basis");
  RatVector out = to_rational(r);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= (*c)[i] * basis[i][j];
  return primitive_direction(out);
}

std::vector<IntVector> canonical_basis(const std::vector<IntVector>& vecs, std::size_t dim) {
  RatMatrix rows;
  for (const auto& v : vecs) rows.push_back(to_rational(v));
  const EchelonForm e = reduced_row_echelon(std::move(rows), dim);
  std::vector<IntVector> out;
  for (const auto& r : e.rows) out.push_back(primitive_direction(r));
  return out;
}

void check_dims(const std::vector<IntVector>& vs, std::size_t dim, const char* what) {
  for (const auto& v : vs)
    require_input(v.size() == dim, std::string("dimension mismatch in ") + what);
}

}  // namespace

Generators enumerate_generators(std::vector<IntVector> inequalities, std::size_t dim) {
  check_dims(inequalities, dim, "inequality list");
  for (auto& a : inequalities) a = primitive(std::move(a));
  std::erase_if(inequalities, [](const IntVector& a) { return is_zero(a); });
  std::sort(inequalities.begin(), inequalities.end());
  inequalities.erase(std::unique(inequalities.begin(), inequalities.end()), inequalities.end());

  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  std::vector<IntVector> processed;

  for (const auto& a : inequalities) {
    std::size_t li = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        li = i;
        break;
      }
    if (li < lin.size()) {
      IntVector l = lin[li];
      Integer al = dot(a, l);
      if (al < 0) {
        l = negate(l);
        al = -al;
      }
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(li));
      for (auto& other : lin) other = primitive(sub(scale(al, other), scale(dot(a, other), l)));
      for (auto& r : rays) {
        r.v = primitive(sub(scale(al, r.v), scale(dot(a, r.v), l)));
        r.tight.push_back(true);
      }
      Ray nr{l, std::vector<bool>(processed.size(), true)};
      nr.tight.push_back(false);
      rays.push_back(std::move(nr));
      processed.push_back(a);
      continue;
    }

    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) val[i] = dot(a, rays[i].v);
    const long target = static_cast<long>(dim) - static_cast<long>(lin.size()) - 2;
    std::vector<Ray> next;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (val[n] >= 0 || target < 0) continue;
        std::vector<bool> common(processed.size());
        long count = 0;
        for (std::size_t k = 0; k < processed.size(); ++k) {
          common[k] = rays[p].tight[k] && rays[n].tight[k];
          count += common[k];
        }
        if (count < target) continue;
        RatMatrix rows;
        for (std::size_t k = 0; k < processed.size(); ++k)
          if (common[k]) rows.push_back(to_rational(processed[k]));
        if (static_cast<long>(rank(rows, dim)) != target) continue;
        Ray nr{primitive(sub(scale(val[p], rays[n].v), scale(val[n], rays[p].v))), std::move(common)};
        nr.tight.push_back(true);
        next.push_back(std::move(nr));
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      Ray r = rays[i];
      r.tight.push_back(val[i] == 0);
      next.push_back(std::move(r));
    }
    rays = std::move(next);
    processed.push_back(a);
  }

  Generators out;
  out.lineality = canonical_basis(lin, dim);
  for (const auto& r : rays) {
    IntVector v = project_off(r.v, out.lineality);
    if (!is_zero(v)) out.rays.push_back(std::move(v));
  }
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

RationalCone RationalCone::from_generators(const std::vector<IntVector>& gens, std::size_t dim) {
  require_input(dim >= 1, "cone ambient dimension must be positive");
  check_dims(gens, dim, "generator list");
  RationalCone c;
  c.dim_ = dim;
  c.gens_ = gens;
  const Generators dual = enumerate_generators(gens, dim);
  c.equations_ = dual.lineality;
  c.facets_ = dual.rays;
  std::vector<IntVector> h = c.facets_;
  for (const auto& e : c.equations_) {
    h.push_back(e);
    h.push_back(negate(e));
  }
  const Generators own = enumerate_generators(h, dim);
  c.lineality_ = own.lineality;
  c.rays_ = own.rays;
  return c;
}

RationalCone RationalCone::from_generators(const std::vector<RatVector>& gens, std::size_t dim) {
  std::vector<IntVector> ints;
  for (const auto& g : gens) {
    require_input(g.size() == dim, "dimension mismatch in generator list");
    ints.push_back(primitive_direction(g));
  }
  return from_generators(ints, dim);
}

RationalCone RationalCone::from_inequalities(const std::vector<IntVector>& inequalities,
                                             const std::vector<IntVector>& equations, std::size_t dim) {
  check_dims(equations, dim, "equation list");
  std::vector<IntVector> h = inequalities;
  for (const auto& e : equations) {
    h.push_back(e);
    h.push_back(negate(e));
  }
  const Generators g = enumerate_generators(h, dim);
  std::vector<IntVector> gens = g.rays;
  for (const auto& l : g.lineality) {
    gens.push_back(l);
    gens.push_back(negate(l));
  }
  return from_generators(gens, dim);
}

RationalCone RationalCone::whole_space(std::size_t dim) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    gens.push_back(e);
    gens.push_back(negate(e));
  }
  return from_generators(gens, dim);
}

RationalCone RationalCone::zero(std::size_t dim) { return from_generators(std::vector<IntVector>{}, dim); }

RationalCone RationalCone::orthant(std::size_t dim) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, Integer(0));
    e[i] = 1;
    gens.push_back(e);
  }
  return from_generators(gens, dim);
}

std::vector<IntVector> RationalCone::conic_generators() const {
  std::vector<IntVector> out = rays_;
  for (const auto& l : lineality_) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  return out;
}

bool RationalCone::contains(const RatVector& x) const {
  require_input(x.size() == dim_, "cone membership dimension mismatch");
  for (const auto& e : equations_)
    if (dot(e, x) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, x) < 0) return false;
  return true;
}

bool RationalCone::contains_cone(const RationalCone& other) const {
  for (const auto& g : other.conic_generators())
    if (!contains(to_rational(g))) return false;
  return true;
}

bool RationalCone::same_set(const RationalCone& other) const {
  return dim_ == other.dim_ && contains_cone(other) && other.contains_cone(*this);
}

RatVector RationalCone::interior_point() const {
  RatVector s = zero_vector(dim_);
  for (const auto& r : rays_) s = add(s, to_rational(r));
  return s;
}

RationalCone dd_convert(const std::vector<IntVector>& rays) {
  require_input(!rays.empty(), "dd_convert needs at least one ray");
  return RationalCone::from_generators(rays, rays.front().size());
}

MembershipResult cone_member(const RationalCone& cone, const RatVector& x, bool want_certificate,
                             const std::vector<IntVector>& strict_normals) {
  require_input(x.size() == cone.ambient_dim(), "cone membership dimension mismatch");
  MembershipResult res;
  for (const auto& e : cone.equations()) {
    const Rational v = dot(e, x);
    if (v != 0) {
      res.violated = v < 0 ? e : negate(e);
      return res;
    }
  }
  for (const auto& f : cone.facets())
    if (dot(f, x) < 0) {
      res.violated = f;
      return res;
    }
  res.status = ConeStatus::inside;
  if (!is_zero(x))
    for (const auto& s : strict_normals)
      if (dot(s, x) == 0) {
        res.status = ConeStatus::on_excluded_face;
        res.excluded_face = s;
        break;
      }
  if (want_certificate) {
    std::vector<RatVector> cols;
    for (const auto& g : cone.generators()) cols.push_back(to_rational(g));
    res.combination = nonneg_combination(cols, x);
    require_internal(res.combination.has_value(), "H-description and V-description disagree");
  }
  return res;
}

const char* to_string(ConeStatus s) {
  switch (s) {
    case ConeStatus::inside: return "inside";
    case ConeStatus::on_excluded_face: return "on_excluded_face";
    case ConeStatus::outside: return "outside";
  }
  return "?";
}

}  // namespace monoloc
