#include "algdeg/spinmx.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace algdeg {

GeneratorSet<FiniteField> standard_generators(const FiniteField& f, std::size_t n) {
  if (n < 1) throw Error("generator set needs n >= 1");
  GeneratorSet<FiniteField> gs;
  gs.provenance = Provenance::StandardFinite;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto m = elementary(f, n, i, j, f.one());
      auto inv = elementary(f, n, i, j, f.neg(f.one()));
      gs.elements.emplace_back(std::move(m), std::move(inv));
    }
  if (f.order() > 2) {
    const auto z = primitive_element(f);
    gs.elements.emplace_back(diagonal_first(f, n, z), diagonal_first(f, n, f.inv(z)));
  }
  return gs;
}

GeneratorSet<RationalField> rational_generators(const RationalField& q, std::size_t n) {
  GeneratorSet<RationalField> gs;
  gs.provenance = Provenance::RationalSubgroup;
  const auto one = q.one(), mone = q.neg(q.one());
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j) continue;
      gs.elements.emplace_back(elementary(q, n, i, j, one), elementary(q, n, i, j, mone));
      gs.elements.emplace_back(elementary(q, n, i, j, mone), elementary(q, n, i, j, one));
    }
  const auto two = q.from_int(2), half = q.inv(q.from_int(2));
  gs.elements.emplace_back(diagonal_first(q, n, two), diagonal_first(q, n, half));
  gs.elements.emplace_back(diagonal_first(q, n, half), diagonal_first(q, n, two));
  return gs;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Irreducible: return "irreducible";
    case Verdict::Reducible: return "reducible";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::uint64_t vector_count(int q, std::size_t m) {
  const std::uint64_t cap = std::uint64_t{1} << 62;
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < m; ++i) {
    if (v > cap / static_cast<std::uint64_t>(q)) return cap;
    v *= static_cast<std::uint64_t>(q);
  }
  return v;
}

std::uint64_t line_count(int q, std::size_t m) {
  const std::uint64_t v = vector_count(q, m);
  return (v - 1) / static_cast<std::uint64_t>(q - 1);
}

Row<FiniteField> line_vector(const FiniteField& f, std::size_t m, std::uint64_t idx) {
  const auto q = static_cast<std::uint64_t>(f.order());
  Row<FiniteField> v(m, 0);
  for (std::size_t p = 0; p < m; ++p) {
    const std::uint64_t block = vector_count(f.order(), m - 1 - p);
    if (idx >= block) {
      idx -= block;
      continue;
    }
    v[p] = 1;
    for (std::size_t t = m; t-- > p + 1;) {
      v[t] = static_cast<FiniteField::Elem>(idx % q);
      idx /= q;
    }
    return v;
  }
  throw Error("line index out of range");
}

namespace {

using FF = FiniteField;
using Key = std::vector<FF::Elem>;

Key key_of(const Subspace<FF>& s) {
  Key k;
  k.reserve(1 + s.dim() * s.ambient());
  k.push_back(static_cast<FF::Elem>(s.dim()));
  for (std::size_t r = 0; r < s.dim(); ++r) {
    auto row = s.basis().row_span(r);
    k.insert(k.end(), row.begin(), row.end());
  }
  return k;
}

Subspace<FF> from_key(const FF& f, std::size_t m, const Key& k) {
  const std::size_t d = k[0];
  std::vector<Row<FF>> rows;
  for (std::size_t r = 0; r < d; ++r)
    rows.emplace_back(k.begin() + 1 + static_cast<std::ptrdiff_t>(r * m),
                      k.begin() + 1 + static_cast<std::ptrdiff_t>((r + 1) * m));
  return Subspace<FF>::span(f, m, rows);
}

FF::Elem random_elem(const FF& f, std::mt19937_64& rng) {
  return static_cast<FF::Elem>(rng() % static_cast<std::uint64_t>(f.order()));
}

Matrix<FF> random_algebra_element(const LinearModule<FF>& m, std::mt19937_64& rng) {
  const auto& f = m.field;
  Matrix<FF> theta = Matrix<FF>::identity(f, m.dim).scaled(random_elem(f, rng));
  for (const auto& a : m.actions) theta = theta + a.scaled(random_elem(f, rng));
  const std::size_t k = m.actions.size();
  for (int w = 0; w < 3 && k > 0; ++w) {
    Matrix<FF> word = m.actions[rng() % k];
    const int len = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < len; ++t) word = word * m.actions[rng() % k];
    theta = theta + word.scaled(random_elem(f, rng));
  }
  return theta;
}

std::optional<Subspace<FF>> exhaustive_proper(const LinearModule<FF>& m) {
  const std::uint64_t lines = line_count(m.field.order(), m.dim);
  for (std::uint64_t i = 0; i < lines; ++i) {
    auto s = m.spin({line_vector(m.field, m.dim, i)});
    if (s.dim() < m.dim) return s;
  }
  return std::nullopt;
}

}  // namespace

NortonResult norton_irreducible(const LinearModule<FiniteField>& m, std::uint64_t seed, std::uint64_t budget) {
  if (m.dim == 0) throw Error("irreducibility test needs a nonzero module");
  NortonResult res;
  if (m.dim == 1) {
    res.verdict = Verdict::Irreducible;
    res.method = "trivial";
    return res;
  }
  const auto& f = m.field;
  const auto els = enumerate(f);
  const auto dual = m.dual();
  std::mt19937_64 rng(seed);
  constexpr std::size_t kAttempts = 64;
  constexpr std::uint64_t kKernelLines = 1024;
  for (std::size_t attempt = 1; attempt <= kAttempts; ++attempt) {
    res.attempts = attempt;
    const auto theta = random_algebra_element(m, rng);
    // Shift by an eigenvalue in F to force a small nonzero kernel.
    std::optional<Matrix<FF>> best;
    std::size_t best_dim = 0;
    for (auto mu : els) {
      auto shifted = theta - Matrix<FF>::identity(f, m.dim).scaled(mu);
      const auto left = null_space(shifted.transpose());
      if (left.dim() == 0) continue;
      if (!best || left.dim() < best_dim) {
        best = shifted;
        best_dim = left.dim();
      }
    }
    if (!best || line_count(f.order(), best_dim) > kKernelLines) continue;
    const auto left = null_space(best->transpose());
    // Every kernel line must spin to the whole module.
    const std::uint64_t lines = line_count(f.order(), left.dim());
    for (std::uint64_t i = 0; i < lines; ++i) {
      const auto v = left.combination(line_vector(f, left.dim(), i));
      auto s = m.spin({v});
      if (s.dim() < m.dim) {
        res.verdict = Verdict::Reducible;
        res.witness = std::move(s);
        res.method = "norton";
        return res;
      }
    }
    // One functional killed by θ must spin to the whole dual.
    const auto right = null_space(*best);
    auto d = dual.spin({right.basis().row(0)});
    res.method = "norton";
    if (d.dim() < m.dim) {
      res.verdict = Verdict::Reducible;
      res.witness = null_space(d.basis());
      return res;
    }
    res.verdict = Verdict::Irreducible;
    return res;
  }
  if (vector_count(f.order(), m.dim) <= budget) {
    res.method = "exhaustive";
    if (auto s = exhaustive_proper(m)) {
      res.verdict = Verdict::Reducible;
      res.witness = std::move(*s);
    } else {
      res.verdict = Verdict::Irreducible;
    }
    return res;
  }
  res.verdict = Verdict::Inconclusive;
  res.method = "bounds";
  return res;
}

SurveyResult survey_submodules(const LinearModule<FiniteField>& m, std::uint64_t budget, int workers) {
  const auto& f = m.field;
  if (m.dim == 0) throw Error("survey needs a nonzero module");
  if (vector_count(f.order(), m.dim) > budget)
    throw Error("survey budget exceeded: " + std::to_string(f.order()) + "^" + std::to_string(m.dim) + " > " +
                std::to_string(budget));
  SurveyResult res;
  res.lines = line_count(f.order(), m.dim);
  std::set<Key> found;
  const auto total = static_cast<std::int64_t>(res.lines);
  if (workers <= 0) {
    for (std::int64_t i = 0; i < total; ++i) found.insert(key_of(m.spin({line_vector(f, m.dim, static_cast<std::uint64_t>(i))})));
  } else {
#pragma omp parallel num_threads(workers)
    {
      std::set<Key> local;
#pragma omp for schedule(static)
      for (std::int64_t i = 0; i < total; ++i)
        local.insert(key_of(m.spin({line_vector(f, m.dim, static_cast<std::uint64_t>(i))})));
#pragma omp critical
      found.insert(local.begin(), local.end());
    }
  }
  res.cyclic = found.size();
  found.insert(key_of(Subspace<FF>::zero(f, m.dim)));

  constexpr std::size_t kLatticeCap = 20000;
  std::vector<Key> members(found.begin(), found.end());
  std::size_t checked = 0;  // pairs (i, j) with j < checked are done
  while (checked < members.size()) {
    const std::size_t upto = members.size();
    for (std::size_t j = checked; j < upto; ++j) {
      const auto sj = from_key(f, m.dim, members[j]);
      for (std::size_t i = 0; i < j; ++i) {
        const auto si = from_key(f, m.dim, members[i]);
        for (auto cand : {subspace_sum(si, sj), subspace_intersect(si, sj)}) {
          auto k = key_of(cand);
          if (found.insert(k).second) members.push_back(std::move(k));
        }
      }
      if (members.size() > kLatticeCap) throw Error("submodule lattice exceeds the survey cap");
    }
    checked = upto;
  }
  for (const auto& k : found) res.lattice.push_back(from_key(f, m.dim, k));
  return res;
}

SeriesReport composition_series(const std::vector<std::pair<std::string, Subspace<FiniteField>>>& chain,
                                std::size_t n, const GeneratorSet<FiniteField>& gens, std::uint64_t seed) {
  if (chain.size() < 2) throw Error("a chain needs at least two terms");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const auto& lo = chain[i].second;
    const auto& hi = chain[i + 1].second;
    if (!hi.contains(lo) || hi.dim() <= lo.dim())
      throw Error("chain is not strictly increasing at " + chain[i].first + " ⊂ " + chain[i + 1].first);
  }
  for (const auto& [name, s] : chain)
    if (!is_stable(s, n, gens)) throw Error("chain term " + name + " is not G-stable");
  SeriesReport rep;
  rep.certified = true;
  rep.conclusive = true;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    FactorReport fr;
    fr.lower = chain[i].first;
    fr.upper = chain[i + 1].first;
    const auto h = lambda_module(n, gens, chain[i + 1].second, chain[i].second);
    fr.dim = h.dim();
    fr.verdict = norton_irreducible(h.module(), derive_seed(seed, "factor:" + fr.lower + "/" + fr.upper));
    if (fr.verdict.verdict == Verdict::Reducible && fr.verdict.witness)
      fr.verdict.witness = h.pullback(*fr.verdict.witness);
    if (fr.verdict.verdict != Verdict::Irreducible) rep.certified = false;
    if (fr.verdict.verdict == Verdict::Inconclusive) rep.conclusive = false;
    rep.factors.push_back(std::move(fr));
  }
  return rep;
}

}  // namespace algdeg
