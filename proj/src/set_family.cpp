#include "sigcolor/set_family.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <string>

#include "sigcolor/detail/grower.hpp"
#include "sigcolor/error.hpp"

namespace sigcolor {

const char* to_string(SetProperty p) {
  return p == SetProperty::kBalanced ? "balanced" : "acyclic";
}

bool satisfies(const SignedGraph& g, SetProperty property, const VertexSet& s) {
  return property == SetProperty::kBalanced ? is_balanced(g, s) : is_acyclic(g, s);
}

namespace {

using detail::Grower;

struct Search {
  const SignedGraph& g;
  SetProperty property;
  bool maximal_only;
  std::uint64_t fixed_in;    // must_contain
  std::uint64_t forbidden;
  std::vector<std::uint64_t> avoid;  // never contain one of these whole
  std::size_t n;

  bool admissible(std::uint64_t current, VertexId v) const {
    const std::uint64_t next = current | (std::uint64_t{1} << v);
    for (std::uint64_t a : avoid) {
      if ((next & a) == a) return false;
    }
    return true;
  }

  bool free(VertexId v) const {
    return (((fixed_in | forbidden) >> v) & 1U) == 0;
  }

  bool is_maximal(Grower& grower) const {
    for (VertexId v = 0; v < n; ++v) {
      if (((forbidden >> v) & 1U) != 0) continue;
      if (admissible(grower.mask(), v) && grower.can_add(v)) return false;
    }
    return true;
  }

  void dfs(Grower& grower, VertexId i, std::vector<std::uint64_t>& out) const {
    while (i < n && !free(i)) ++i;
    if (i == n) {
      if (!maximal_only || is_maximal(grower)) out.push_back(grower.mask());
      return;
    }
    if (admissible(grower.mask(), i) && grower.try_add(i)) {
      dfs(grower, i + 1, out);
      grower.remove_last();
    }
    dfs(grower, i + 1, out);
  }

  // Collects subtree roots after `depth` free decisions, in DFS order.
  void split(Grower& grower, VertexId i, int depth,
             std::vector<std::pair<std::uint64_t, VertexId>>& roots) const {
    while (i < n && !free(i)) ++i;
    if (depth == 0 || i == n) {
      roots.emplace_back(grower.mask(), i);
      return;
    }
    if (admissible(grower.mask(), i) && grower.try_add(i)) {
      split(grower, i + 1, depth - 1, roots);
      grower.remove_last();
    }
    split(grower, i + 1, depth - 1, roots);
  }

  std::vector<std::uint64_t> run_subtree(std::uint64_t start, VertexId i) const {
    Grower grower(g, property);
    for (VertexId v = 0; v < n; ++v) {
      if ((start >> v) & 1U) grower.try_add(v);
    }
    std::vector<std::uint64_t> out;
    dfs(grower, i, out);
    return out;
  }
};

}  // namespace

SetFamily enumerate_sets(const SignedGraph& g, SetProperty property,
                         const EnumerateOptions& options) {
  const std::size_t guard =
      options.size_guard.value_or(options.maximal_only ? kMaximalSizeGuard : kFullSizeGuard);
  const std::size_t n = g.vertex_count();
  if (n > guard || n > 64) {
    throw GuardExceeded("enumeration: " + std::to_string(n) + " vertices exceed guard " +
                        std::to_string(guard) + "; use column generation instead");
  }
  for (const VertexSet* s : {&options.must_contain, &options.forbid}) {
    if (!s->empty() && s->members().back() >= n) {
      throw PreconditionError("enumeration: constraint vertex is not in the graph");
    }
  }

  SetFamily family{g, property, {}, options.maximal_only};
  const std::uint64_t fixed_in = options.must_contain.mask();
  const std::uint64_t forbidden = options.forbid.mask();
  if ((fixed_in & forbidden) != 0) return family;

  Search search{g, property, options.maximal_only, fixed_in, forbidden, {}, n};
  for (const auto& a : options.avoid_whole) {
    if (a.empty()) return family;
    if (a.members().back() >= n) {
      throw PreconditionError("enumeration: constraint vertex is not in the graph");
    }
    search.avoid.push_back(a.mask());
  }
  Grower grower(g, property);
  for (VertexId v : options.must_contain) {
    if (!search.admissible(grower.mask(), v) || !grower.try_add(v)) return family;
  }

  std::vector<std::uint64_t> masks;
  if (options.threads <= 1) {
    search.dfs(grower, 0, masks);
  } else {
    std::vector<std::pair<std::uint64_t, VertexId>> roots;
    const int depth = std::min<int>(static_cast<int>(n), std::bit_width(options.threads) + 3);
    search.split(grower, 0, depth, roots);
    std::vector<std::vector<std::uint64_t>> parts(roots.size());
    std::size_t next = 0;
    while (next < roots.size()) {
      std::vector<std::future<std::vector<std::uint64_t>>> batch;
      const std::size_t first = next;
      for (; next < roots.size() && next - first < options.threads; ++next) {
        batch.push_back(std::async(std::launch::async, [&search, root = roots[next]] {
          return search.run_subtree(root.first, root.second);
        }));
      }
      for (std::size_t k = 0; k < batch.size(); ++k) parts[first + k] = batch[k].get();
    }
    for (auto& p : parts) masks.insert(masks.end(), p.begin(), p.end());
  }

  family.sets.reserve(masks.size());
  for (std::uint64_t m : masks) family.sets.push_back(VertexSet::from_mask(m));
  std::sort(family.sets.begin(), family.sets.end());
  return family;
}

std::vector<std::size_t> triangles_missed(const VertexSet& s,
                                          std::span<const VertexSet> marked) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < marked.size(); ++i) {
    if (!s.intersects(marked[i])) out.push_back(i);
  }
  return out;
}

MissingTriangleCheck check_missing_triangle_lemma(const GadgetGraph& g) {
  EnumerateOptions opts;
  opts.maximal_only = true;
  opts.must_contain = VertexSet{g.terminal("u"), g.terminal("v")};
  const SetFamily family = enumerate_sets(g.graph, SetProperty::kBalanced, opts);

  MissingTriangleCheck result;
  result.maximal_sets_checked = family.sets.size();
  for (const auto& s : family.sets) {
    if (triangles_missed(s, g.marked_triangles).empty()) {
      result.holds = false;
      result.counterexample = s;
      break;
    }
  }
  return result;
}

std::vector<VertexSet> uv_block_family(const GadgetGraph& g) {
  const VertexSet uv{g.terminal("u"), g.terminal("v")};
  std::vector<VertexSet> positive;
  for (const auto& t : all_triangles(g.graph)) {
    if (t.sign == kPositive) positive.push_back(t.vertices);
  }

  EnumerateOptions opts;
  opts.maximal_only = true;
  opts.must_contain = uv;
  std::vector<VertexSet> out;
  for (const auto& s : enumerate_sets(g.graph, SetProperty::kBalanced, opts).sets) {
    const bool holds_positive = std::any_of(positive.begin(), positive.end(),
                                            [&](const VertexSet& t) { return t.is_subset_of(s); });
    if (holds_positive) out.push_back(s);
  }
  opts.avoid_whole = positive;
  for (auto& s : enumerate_sets(g.graph, SetProperty::kBalanced, opts).sets) {
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ForestLemmaReport check_forest_lemmas(const GadgetGraph& w) {
  const SignedGraph& g = w.graph;
  if (g.vertex_count() != 10) throw PreconditionError("forest lemmas need the 10-vertex W");
  const VertexId u = g.id("u");
  const VertexId v = g.id("v");
  const std::uint64_t ztx1 =
      (std::uint64_t{1} << g.id("z")) | (std::uint64_t{1} << g.id("t")) |
      (std::uint64_t{1} << g.id("x1"));
  const std::uint64_t uv = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);

  ForestLemmaReport report;
  std::vector<std::uint64_t> acyclic;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << 10); ++m) {
    if (!is_acyclic(g, VertexSet::from_mask(m))) continue;
    acyclic.push_back(m);
    const auto order = static_cast<std::size_t>(std::popcount(m));
    report.max_acyclic_order = std::max(report.max_acyclic_order, order);
    if ((m & uv) == uv) {
      report.max_acyclic_order_with_uv = std::max(report.max_acyclic_order_with_uv, order);
    }
  }
  for (std::uint64_t m : acyclic) {
    if (std::popcount(m) != 5 || ((m >> u) & 1U) == 0) continue;
    ++report.order5_sets_with_u;
    if (std::popcount(m & ztx1) < 2) report.order5_with_u_hits_two = false;
  }
  return report;
}

}  // namespace sigcolor
