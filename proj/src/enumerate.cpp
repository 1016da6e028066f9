#include "monoloc/enumerate.hpp"

#include <algorithm>

#include "monoloc/errors.hpp"

namespace monoloc {

namespace {

using Map = std::vector<std::size_t>;

void charge(std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget)
    throw ResourceError("biadditive enumeration exceeded its budget of " + std::to_string(budget) + " nodes");
}

// Extends values on 0 and the generators along the Cayley graph; combine(x, y) adds two values.
template <class V, class Combine>
bool extend(const FiniteMonoid& m, const std::vector<std::size_t>& gens, const V& at_zero,
            const std::vector<V>& at_gens, Combine combine, std::vector<V>& out) {
  const std::size_t n = m.size();
  std::vector<bool> set(n, false);
  out.assign(n, at_zero);
  set[0] = true;
  std::vector<std::size_t> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const std::size_t x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::size_t y = m.add(x, gens[i]);
      V v = combine(out[x], at_gens[i]);
      if (set[y]) {
        if (out[y] != v) return false;
      } else {
        out[y] = std::move(v);
        set[y] = true;
        queue.push_back(y);
      }
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (out[gens[i]] != at_gens[i]) return false;
  return true;
}

bool is_additive(const FiniteMonoid& m, const Map& f) {
  for (std::size_t a = 0; a < m.size(); ++a)
    for (std::size_t b = a; b < m.size(); ++b)
      if (f[m.add(a, b)] != m.add(f[a], f[b])) return false;
  return true;
}

}  // namespace

std::vector<Map> additive_endomorphisms(const FiniteMonoid& m, std::uint64_t budget, std::uint64_t* nodes_out) {
  const std::size_t n = m.size();
  const auto gens = m.generating_set();
  const auto idem = m.idempotents();
  std::uint64_t nodes = nodes_out ? *nodes_out : 0;
  std::vector<Map> homs;
  std::vector<std::size_t> vals(gens.size(), 0);
  auto plus = [&](std::size_t x, std::size_t y) { return m.add(x, y); };
  while (true) {
    for (auto z : idem) {
      charge(nodes, budget);
      Map f;
      if (extend(m, gens, z, vals, plus, f) && is_additive(m, f)) homs.push_back(std::move(f));
    }
    std::size_t k = 0;
    while (k < vals.size() && vals[k] == n - 1) vals[k++] = 0;
    if (k == vals.size()) break;
    ++vals[k];
  }
  if (nodes_out) *nodes_out = nodes;
  return homs;
}

std::vector<Table> enumerate_biadditive_tables(const FiniteMonoid& m, const EnumerationOptions& opts,
                                               EnumerationStats* stats) {
  const std::size_t n = m.size();
  if (opts.unit) require_input(*opts.unit < n, "unit index out of range");
  const auto gens = m.generating_set();
  std::uint64_t nodes = 0;
  const auto homs = additive_endomorphisms(m, opts.budget, &nodes);

  // Candidates for mu(g, .) and mu(0, .).
  auto pointwise = [&](const Map& f, const Map& g) {
    Map h(n);
    for (std::size_t x = 0; x < n; ++x) h[x] = m.add(f[x], g[x]);
    return h;
  };
  std::vector<std::vector<const Map*>> choices(gens.size());
  std::vector<const Map*> zero_choices;
  for (const auto& f : homs) {
    if (pointwise(f, f) == f && (!opts.unit || f[*opts.unit] == 0)) zero_choices.push_back(&f);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (!opts.unit || f[*opts.unit] == gens[i]) choices[i].push_back(&f);
  }

  std::vector<Table> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  for (const auto& c : choices)
    if (c.empty()) goto finished;
  while (true) {
    for (const Map* z : zero_choices) {
      charge(nodes, opts.budget);
      std::vector<Map> at_gens;
      for (std::size_t i = 0; i < gens.size(); ++i) at_gens.push_back(*choices[i][pick[i]]);
      std::vector<Map> lambda;
      if (!extend(m, gens, *z, at_gens, pointwise, lambda)) continue;
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t b = a; b < n && ok; ++b) ok = lambda[m.add(a, b)] == pointwise(lambda[a], lambda[b]);
      if (!ok) continue;
      if (opts.unit) {
        const std::size_t u = *opts.unit;
        for (std::size_t x = 0; x < n && ok; ++x) ok = lambda[u][x] == x && lambda[x][u] == x;
        if (!ok) continue;
      }
      out.push_back(std::move(lambda));
    }
    std::size_t k = 0;
    while (k < pick.size() && pick[k] + 1 == choices[k].size()) pick[k++] = 0;
    if (k == pick.size()) break;
    ++pick[k];
  }
finished:
  std::sort(out.begin(), out.end());
  if (stats) *stats = EnumerationStats{gens.size(), homs.size(), nodes};
  return out;
}

std::vector<BiadditiveOp> enumerate_biadditive_ops(const std::shared_ptr<const MonoidInstance>& carrier,
                                                   const EnumerationOptions& opts, EnumerationStats* stats) {
  require_input(carrier && carrier->kind() == MonoidKind::finite, "enumeration needs a finite carrier");
  std::vector<BiadditiveOp> ops;
  for (auto& t : enumerate_biadditive_tables(carrier->finite(), opts, stats))
    ops.push_back(BiadditiveOp::from_table(carrier, std::move(t)));
  return ops;
}

}  // namespace monoloc
