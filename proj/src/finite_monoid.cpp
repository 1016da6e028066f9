#include "monoloc/finite_monoid.hpp"

#include <algorithm>
#include <numeric>

#include "monoloc/errors.hpp"

namespace monoloc {

FiniteMonoid::FiniteMonoid(Table add_table, std::vector<std::string> names)
    : table_(std::move(add_table)), names_(std::move(names)) {
  const std::size_t n = table_.size();
  require_input(n >= 1, "finite monoid needs at least the neutral element");
  for (const auto& row : table_) {
    require_input(row.size() == n, "addition table must be square");
    for (auto v : row) require_input(v < n, "addition table entry out of range");
  }
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back(std::to_string(i));
  require_input(names_.size() == n, "one name per element required");
  for (std::size_t a = 0; a < n; ++a) {
    require_input(table_[0][a] == a, "0 is not neutral at element " + names_[a]);
    for (std::size_t b = 0; b < n; ++b) {
      require_input(table_[a][b] == table_[b][a],
                    "addition not commutative at (" + names_[a] + ", " + names_[b] + ")");
      for (std::size_t c = 0; c < n; ++c)
        require_input(table_[table_[a][b]][c] == table_[a][table_[b][c]],
                      "addition not associative at (" + names_[a] + ", " + names_[b] + ", " + names_[c] + ")");
    }
  }

  // divides[u][v]: v = u + c for some c.
  std::vector<std::vector<bool>> divides(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t c = 0; c < n; ++c) divides[u][table_[u][c]] = true;
  shifted_.assign(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t t = 0; t < n && !shifted_[x][y]; ++t)
        if (divides[table_[x][t]][table_[y][t]]) shifted_[x][y] = true;
  leq_.assign(n, std::vector<bool>(n, false));
  const std::size_t k = default_bound();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq_[a][b] = leq(a, b, k);
}

std::size_t FiniteMonoid::multiple(std::size_t k, std::size_t a) const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < k; ++i) r = table_[r][a];
  return r;
}

std::optional<std::size_t> FiniteMonoid::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool FiniteMonoid::leq(std::size_t a, std::size_t b, std::size_t k_bound) const {
  std::size_t ka = 0, kb = 0;
  for (std::size_t k = 1; k <= k_bound; ++k) {
    ka = table_[ka][a];
    kb = table_[kb][b];
    if (shifted_[ka][kb]) return true;
  }
  return false;
}

bool FiniteMonoid::approx(std::size_t a, std::size_t b, std::size_t l_bound) const {
  const std::size_t n = size();
  const std::size_t k = default_bound();
  const bool tabled = l_bound <= k;
  auto le = [&](std::size_t x, std::size_t y) { return tabled ? leq_[x][y] : leq(x, y, l_bound); };
  for (std::size_t d = 0; d < n; ++d) {
    bool ok = true;
    std::size_t la = 0, lb = 0;
    for (std::size_t l = 1; l <= l_bound && ok; ++l) {
      la = table_[la][a];
      lb = table_[lb][b];
      ok = le(la, table_[lb][d]) && le(lb, table_[la][d]);
    }
    if (ok) return true;
  }
  return false;
}

bool FiniteMonoid::is_group() const {
  for (std::size_t a = 0; a < size(); ++a) {
    bool inv = false;
    for (std::size_t b = 0; b < size() && !inv; ++b) inv = table_[a][b] == 0;
    if (!inv) return false;
  }
  return true;
}

std::vector<std::size_t> FiniteMonoid::idempotents() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size(); ++a)
    if (table_[a][a] == a) out.push_back(a);
  return out;
}

std::vector<std::size_t> FiniteMonoid::generating_set() const {
  const std::size_t n = size();
  std::vector<bool> reached(n, false);
  reached[0] = true;
  std::vector<std::size_t> gens;
  for (std::size_t a = 1; a < n; ++a) {
    if (reached[a]) continue;
    gens.push_back(a);
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (!reached[x]) continue;
        for (auto g : gens)
          if (!reached[table_[x][g]]) {
            reached[table_[x][g]] = true;
            grew = true;
          }
      }
    }
  }
  return gens;
}

std::size_t TruncatedFree::index_of(const std::vector<unsigned>& p) const {
  const auto it = std::find(points.begin(), points.end(), p);
  require_input(it != points.end(), "point outside the truncated monoid");
  return static_cast<std::size_t>(it - points.begin());
}

std::size_t TruncatedFree::all_ones() const {
  return index_of(std::vector<unsigned>(points.front().size(), 1u));
}

TruncatedFree truncated_free_monoid(std::size_t n, unsigned cap) {
  require_input(n >= 1 && cap >= 1, "truncated monoid needs n >= 1 and cap >= 1");
  std::vector<std::vector<unsigned>> pts{std::vector<unsigned>(n, 0u)};
  while (true) {
    std::vector<unsigned> p = pts.back();
    std::size_t i = 0;
    while (i < n && p[i] == cap) p[i++] = 0;
    if (i == n) break;
    ++p[i];
    pts.push_back(p);
  }
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    const unsigned sa = std::accumulate(a.begin(), a.end(), 0u), sb = std::accumulate(b.begin(), b.end(), 0u);
    return sa != sb ? sa < sb : a < b;
  });
  const std::size_t m = pts.size();
  Table t(m, std::vector<std::size_t>(m));
  std::vector<std::string> names;
  auto index = [&](const std::vector<unsigned>& p) {
    return static_cast<std::size_t>(std::find(pts.begin(), pts.end(), p) - pts.begin());
  };
  for (std::size_t a = 0; a < m; ++a) {
    std::string s = "(";
    for (std::size_t i = 0; i < n; ++i) {
      if (i) s += ",";
      s += pts[a][i] == cap ? std::to_string(cap) + "+" : std::to_string(pts[a][i]);
    }
    names.push_back(s + ")");
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<unsigned> q(n);
      for (std::size_t i = 0; i < n; ++i) q[i] = std::min(cap, pts[a][i] + pts[b][i]);
      t[a][b] = index(q);
    }
  }
  return TruncatedFree{FiniteMonoid(std::move(t), std::move(names)), std::move(pts)};
}

FiniteMonoid cyclic_group(std::size_t n) { return cyclic_monoid(0, n); }

FiniteMonoid cyclic_monoid(std::size_t index, std::size_t period) {
  require_input(period >= 1, "period must be positive");
  const std::size_t n = index + period;
  auto reduce = [&](std::size_t k) { return k < n ? k : index + (k - index) % period; };
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = reduce(a + b);
  return FiniteMonoid(std::move(t));
}

FiniteMonoid max_chain(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = std::max(a, b);
  return FiniteMonoid(std::move(t));
}

FiniteMonoid product(const FiniteMonoid& a, const FiniteMonoid& b) {
  const std::size_t na = a.size(), nb = b.size();
  Table t(na * nb, std::vector<std::size_t>(na * nb));
  std::vector<std::string> names;
  for (std::size_t x = 0; x < na * nb; ++x) {
    names.push_back("(" + a.name(x / nb) + "," + b.name(x % nb) + ")");
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb);
  }
  return FiniteMonoid(std::move(t), std::move(names));
}

FiniteMonoid relabel(const FiniteMonoid& m, const std::vector<std::size_t>& perm) {
  const std::size_t n = m.size();
  require_input(perm.size() == n && perm[0] == 0, "relabeling must fix 0");
  Table t(n, std::vector<std::size_t>(n));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[perm[a]] = m.name(a);
    for (std::size_t b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[m.add(a, b)];
  }
  return FiniteMonoid(std::move(t), std::move(names));
}

}  // namespace monoloc
