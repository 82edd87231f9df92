#include "maxarc/canonical.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <map>
#include <numeric>
#include <sstream>

namespace maxarc {

void ColoredIncidenceGraph::validate() const {
  if (n_left < 0 || n_right < 0) throw std::invalid_argument("negative side size");
  if (static_cast<int>(colors.size()) != n_vertices())
    throw std::invalid_argument("need one color per vertex");
  for (const auto& [l, r] : edges)
    if (l < 0 || l >= n_left || r < 0 || r >= n_right)
      throw std::invalid_argument("edge endpoint out of range");
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  // splitmix64 finalizer over the running value
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

/// Ordered partition of the vertex set. Cells are identified by the position
/// of their first element.
struct Partition {
  std::vector<int> lab;       // position -> vertex
  std::vector<int> pos;       // vertex -> position
  std::vector<int> cell_of;   // position -> start of its cell
  std::vector<int> cell_len;  // start -> length (valid at cell starts)
  int n_cells = 0;

  bool discrete() const { return n_cells == static_cast<int>(lab.size()); }
};

class Canonizer {
 public:
  explicit Canonizer(const ColoredIncidenceGraph& g) : n_(g.n_vertices()), adj_(n_) {
    for (const auto& [l, r] : g.edges) {
      adj_[l].push_back(g.n_left + r);
      adj_[g.n_left + r].push_back(l);
    }
    colors_ = g.colors;
    count_.assign(n_, 0);
  }

  CanonicalForm run() {
    CanonicalForm form;
    if (n_ == 0) return form;

    Partition root = initial_partition();
    std::vector<int> splitters;
    for (int s = 0; s < n_; s += root.cell_len[s]) splitters.push_back(s);
    const std::uint64_t t0 = refine(root, splitters);
    path_traces_.push_back(t0);
    search(root, 0);

    form.labeling = best_.labeling;
    form.edges = best_.image;
    form.colors.resize(n_);
    for (int v = 0; v < n_; ++v) form.colors[best_.labeling[v]] = colors_[v];
    form.automorphism_group_order = group_order_;
    form.generators = generators_;
    return form;
  }

 private:
  struct Leaf {
    std::vector<int> labeling;
    std::vector<std::pair<int, int>> image;
    std::vector<std::uint64_t> traces;
    std::vector<int> path;
    bool set = false;
  };

  Partition initial_partition() const {
    Partition p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(),
                     [&](int a, int b) { return colors_[a] < colors_[b]; });
    p.pos.resize(n_);
    p.cell_of.resize(n_);
    p.cell_len.assign(n_, 0);
    for (int i = 0; i < n_; ++i) p.pos[p.lab[i]] = i;
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && colors_[p.lab[j]] == colors_[p.lab[i]]) ++j;
      for (int x = i; x < j; ++x) p.cell_of[x] = i;
      p.cell_len[i] = j - i;
      ++p.n_cells;
      i = j;
    }
    return p;
  }

  /// Refines to the coarsest equitable partition finer than p, splitting
  /// cells by neighbour counts into the splitter cells. Returns a hash of
  /// the refinement history, which is an isomorphism invariant.
  std::uint64_t refine(Partition& p, std::vector<int> queue) {
    std::uint64_t trace = 0;
    std::vector<char> queued(n_, 0);
    for (int s : queue) queued[s] = 1;
    std::vector<int> touched_vertices;
    std::vector<int> touched_cells;
    std::vector<std::pair<int, int>> members;  // (count, vertex)

    for (std::size_t head = 0; head < queue.size() && !p.discrete(); ++head) {
      const int w = queue[head];
      queued[w] = 0;
      const int w_len = p.cell_len[w];
      touched_vertices.clear();
      for (int i = w; i < w + w_len; ++i)
        for (int u : adj_[p.lab[i]]) {
          if (count_[u]++ == 0) touched_vertices.push_back(u);
        }
      touched_cells.clear();
      for (int u : touched_vertices) {
        const int c = p.cell_of[p.pos[u]];
        if (p.cell_len[c] > 1) touched_cells.push_back(c);
      }
      std::sort(touched_cells.begin(), touched_cells.end());
      touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()),
                          touched_cells.end());

      for (int c : touched_cells) {
        const int len = p.cell_len[c];
        members.clear();
        for (int i = c; i < c + len; ++i) members.emplace_back(count_[p.lab[i]], p.lab[i]);
        std::stable_sort(members.begin(), members.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        if (members.front().first == members.back().first) continue;
        trace = mix(trace, (static_cast<std::uint64_t>(w) << 32) | static_cast<unsigned>(c));
        int start = c;
        for (int i = 0; i < len;) {
          int j = i;
          while (j < len && members[j].first == members[i].first) ++j;
          for (int x = i; x < j; ++x) {
            p.lab[c + x] = members[x].second;
            p.pos[members[x].second] = c + x;
            p.cell_of[c + x] = start;
          }
          p.cell_len[start] = j - i;
          trace = mix(trace, (static_cast<std::uint64_t>(members[i].first) << 32) |
                                 static_cast<unsigned>(j - i));
          if (start != c) ++p.n_cells;
          if (!queued[start]) {
            queued[start] = 1;
            queue.push_back(start);
          }
          start = c + j;
          i = j;
        }
      }
      for (int u : touched_vertices) count_[u] = 0;
    }
    return mix(trace, static_cast<std::uint64_t>(p.n_cells));
  }

  /// Individualizes v (moved to the front of its cell) and refines.
  std::uint64_t individualize(Partition& p, int v) {
    const int c = p.cell_of[p.pos[v]];
    const int len = p.cell_len[c];
    const int at = p.pos[v];
    const int other = p.lab[c];
    std::swap(p.lab[c], p.lab[at]);
    p.pos[v] = c;
    p.pos[other] = at;
    p.cell_len[c] = 1;
    p.cell_len[c + 1] = len - 1;
    for (int i = c + 1; i < c + len; ++i) p.cell_of[i] = c + 1;
    ++p.n_cells;
    return refine(p, {c});
  }

  int target_cell(const Partition& p) const {
    int best = -1;
    for (int s = 0; s < n_; s += p.cell_len[s])
      if (p.cell_len[s] > 1 && (best < 0 || p.cell_len[s] < p.cell_len[best])) best = s;
    return best;
  }

  std::vector<std::pair<int, int>> image_of(const std::vector<int>& labeling) const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
      for (int b : adj_[a])
        if (a < b) {
          const int x = labeling[a], y = labeling[b];
          out.emplace_back(std::min(x, y), std::max(x, y));
        }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Lexicographic comparison of the current path's traces with a leaf's.
  static int compare_prefix(const std::vector<std::uint64_t>& path,
                            const std::vector<std::uint64_t>& other) {
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i >= other.size()) return 1;
      if (path[i] != other[i]) return path[i] < other[i] ? -1 : 1;
    }
    return 0;
  }

  void add_generator(const std::vector<int>& from, const std::vector<int>& to) {
    // from and to are labelings with equal images; gamma = from^-1 . to.
    std::vector<int> inv(n_);
    for (int v = 0; v < n_; ++v) inv[from[v]] = v;
    std::vector<int> gamma(n_);
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inv[to[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) generators_.push_back(std::move(gamma));
  }

  /// Orbits of the group generated by the known generators that fix every
  /// vertex of the prefix.
  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int v) { return g[v] == v; })) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(g[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  int common_prefix_level(const std::vector<int>& a, const std::vector<int>& b) const {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  /// Explores the subtree below p at the given depth. Returns the depth to
  /// resume at after an automorphism back to the first leaf, or INT_MAX.
  int search(const Partition& p, int level) {
    const bool first_equal = !first_.set || compare_prefix(path_traces_, first_.traces) == 0;
    const int best_cmp = best_.set ? compare_prefix(path_traces_, best_.traces) : 1;
    if (!first_equal && best_cmp < 0) return INT_MAX;

    if (p.discrete()) return at_leaf(p, first_equal, best_cmp);

    const int cell = target_cell(p);
    const bool on_first_path = !first_.set;
    std::vector<int> children(p.lab.begin() + cell, p.lab.begin() + cell + p.cell_len[cell]);
    std::vector<int> explored;
    std::vector<int> orbit;
    std::size_t gens_seen = SIZE_MAX;

    for (int child : children) {
      if (!explored.empty()) {
        if (gens_seen != generators_.size()) {
          orbit = orbits_fixing(path_);
          gens_seen = generators_.size();
        }
        if (std::any_of(explored.begin(), explored.end(),
                        [&](int e) { return orbit[e] == orbit[child]; }))
          continue;
      }
      explored.push_back(child);
      Partition q = p;
      path_.push_back(child);
      path_traces_.push_back(individualize(q, child));
      const int jump = search(q, level + 1);
      path_.pop_back();
      path_traces_.pop_back();
      if (jump < level) return jump;
    }

    if (on_first_path) {
      // Orbit of the first-path vertex under the stabilizer of the prefix.
      orbit = orbits_fixing(path_);
      const int root = orbit[children.front()];
      group_order_ *= static_cast<unsigned>(
          std::count_if(children.begin(), children.end(), [&](int v) { return orbit[v] == root; }));
    }
    return INT_MAX;
  }

  int at_leaf(const Partition& p, bool first_equal, int best_cmp) {
    std::vector<int> labeling = p.pos;
    auto image = image_of(labeling);
    if (!first_.set) {
      first_ = {labeling, image, path_traces_, path_, true};
      best_ = first_;
      return INT_MAX;
    }
    int jump = INT_MAX;
    if (first_equal && image == first_.image) {
      add_generator(first_.labeling, labeling);
      jump = common_prefix_level(first_.path, path_);
    }
    if (best_cmp > 0 || (best_cmp == 0 && image > best_.image)) {
      best_ = {std::move(labeling), std::move(image), path_traces_, path_, true};
    } else if (best_cmp == 0 && image == best_.image && jump == INT_MAX) {
      add_generator(best_.labeling, labeling);
    }
    return jump;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> colors_;
  std::vector<int> count_;
  std::vector<int> path_;
  std::vector<std::uint64_t> path_traces_;
  Leaf first_;
  Leaf best_;
  std::vector<std::vector<int>> generators_;
  BigInt group_order_ = 1;
};

}  // namespace

CanonicalForm canonize(const ColoredIncidenceGraph& g) {
  g.validate();
  return Canonizer(g).run();
}

std::vector<std::pair<int, int>> relabeled_edges(const ColoredIncidenceGraph& g,
                                                 const std::vector<int>& labeling) {
  std::vector<std::pair<int, int>> out;
  out.reserve(g.edges.size());
  for (const auto& [l, r] : g.edges) {
    const int x = labeling[l], y = labeling[g.n_left + r];
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ColoredIncidenceGraph design_graph(const Design& d) {
  ColoredIncidenceGraph g;
  g.n_left = d.v();
  g.n_right = d.b();
  g.colors.assign(d.v(), 0);
  g.colors.resize(d.v() + d.b(), 1);
  for (int b = 0; b < d.b(); ++b)
    for (PointId p : d.blocks()[b]) g.edges.emplace_back(p - 1, b);
  return g;
}

ColoredIncidenceGraph code_graph(const gf2::BinaryCode& c, int cap) {
  const bool use_dual = c.dimension() > c.length() - c.dimension();
  const gf2::BinaryCode side = use_dual ? gf2::dual_code(c) : c;
  const auto words = gf2::enumerate_codewords(side, cap);
  ColoredIncidenceGraph g;
  g.n_left = c.length();
  g.colors.assign(c.length(), 0);
  for (const auto& w : words) {
    if (w.is_zero()) continue;
    const int r = g.n_right++;
    g.colors.push_back(1 + w.weight());
    for (int j : w.support()) g.edges.emplace_back(j, r);
  }
  return g;
}

BigInt design_automorphism_group_order(const Design& d) {
  return canonize(design_graph(d)).automorphism_group_order;
}

BigInt code_automorphism_group_order(const gf2::BinaryCode& c, int cap) {
  return canonize(code_graph(c, cap)).automorphism_group_order;
}

namespace {

// Maps the first graph's left vertices to the second's through the
// canonical labelings.
std::vector<int> left_witness(const CanonicalForm& f1, const CanonicalForm& f2, int n_left) {
  std::vector<int> inv2(f2.labeling.size());
  for (std::size_t v = 0; v < f2.labeling.size(); ++v) inv2[f2.labeling[v]] = static_cast<int>(v);
  std::vector<int> w(n_left);
  for (int v = 0; v < n_left; ++v) w[v] = inv2[f1.labeling[v]];
  return w;
}

bool design_maps_onto(const Design& from, const Design& to, const std::vector<int>& witness) {
  std::vector<std::vector<PointId>> target = to.blocks();
  std::sort(target.begin(), target.end());
  for (const auto& blk : from.blocks()) {
    std::vector<PointId> img;
    for (PointId p : blk) img.push_back(witness[p - 1] + 1);
    std::sort(img.begin(), img.end());
    if (!std::binary_search(target.begin(), target.end(), img)) return false;
  }
  return true;
}

}  // namespace

IsomorphismResult designs_isomorphic(const Design& d1, const Design& d2) {
  if (d1.v() != d2.v() || d1.k() != d2.k() || d1.b() != d2.b()) return {};
  const auto f1 = canonize(design_graph(d1));
  const auto f2 = canonize(design_graph(d2));
  if (!f1.same_graph(f2)) return {};
  IsomorphismResult res{true, left_witness(f1, f2, d1.v())};
  if (!design_maps_onto(d1, d2, res.witness))
    throw std::logic_error("design isomorphism witness failed verification");
  return res;
}

IsomorphismResult codes_equivalent(const gf2::BinaryCode& c1, const gf2::BinaryCode& c2, int cap) {
  if (c1.length() != c2.length() || c1.dimension() != c2.dimension()) return {};
  if (weight_distribution(c1, cap) != weight_distribution(c2, cap)) return {};
  const auto f1 = canonize(code_graph(c1, cap));
  const auto f2 = canonize(code_graph(c2, cap));
  if (!f1.same_graph(f2)) return {};
  IsomorphismResult res{true, left_witness(f1, f2, c1.length())};
  if (!verify_permutation(res.witness, c1, c2))
    throw std::logic_error("code equivalence witness failed verification");
  return res;
}

namespace {

template <class Verify>
std::vector<EquivalenceClass> group_by_form(const std::vector<CanonicalForm>& forms,
                                            const std::vector<int>& n_left, Verify verify) {
  std::vector<EquivalenceClass> classes;
  std::map<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>, int> index;
  for (int i = 0; i < static_cast<int>(forms.size()); ++i) {
    auto key = std::make_pair(forms[i].colors, forms[i].edges);
    auto [it, fresh] = index.emplace(std::move(key), static_cast<int>(classes.size()));
    if (fresh) {
      std::vector<int> id(n_left[i]);
      std::iota(id.begin(), id.end(), 0);
      classes.push_back({{i}, {id}});
      continue;
    }
    EquivalenceClass& cls = classes[it->second];
    const int first = cls.members.front();
    auto w = left_witness(forms[first], forms[i], n_left[first]);
    if (!verify(first, i, w)) throw std::logic_error("isomorphism witness failed verification");
    cls.members.push_back(i);
    cls.witnesses.push_back(std::move(w));
  }
  return classes;
}

}  // namespace

std::vector<EquivalenceClass> classify_designs(const std::vector<Design>& designs) {
  std::vector<CanonicalForm> forms;
  std::vector<int> n_left;
  for (const auto& d : designs) {
    forms.push_back(canonize(design_graph(d)));
    n_left.push_back(d.v());
  }
  return group_by_form(forms, n_left, [&](int a, int b, const std::vector<int>& w) {
    return design_maps_onto(designs[a], designs[b], w);
  });
}

std::vector<EquivalenceClass> classify_codes(const std::vector<gf2::BinaryCode>& codes, int cap) {
  std::vector<CanonicalForm> forms;
  std::vector<int> n_left;
  for (const auto& c : codes) {
    forms.push_back(canonize(code_graph(c, cap)));
    n_left.push_back(c.length());
  }
  return group_by_form(forms, n_left, [&](int a, int b, const std::vector<int>& w) {
    return verify_permutation(w, codes[a], codes[b]);
  });
}

gf2::BinaryCode permute_code(const gf2::BinaryCode& c, const Permutation& perm) {
  if (static_cast<int>(perm.size()) != c.length())
    throw std::invalid_argument("permutation length differs from code length");
  gf2::BitMatrix m(0, c.length());
  for (const auto& row : c.generator().rows()) {
    gf2::BitVector moved(c.length());
    for (int j : row.support()) moved.set(perm[j]);
    m.append_row(std::move(moved));
  }
  return gf2::row_space(m);
}

bool verify_permutation(const Permutation& perm, const gf2::BinaryCode& c_from,
                        const gf2::BinaryCode& c_to) {
  if (c_from.length() != c_to.length() || static_cast<int>(perm.size()) != c_from.length())
    return false;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    if (sorted[i] != i) throw std::invalid_argument("not a permutation");
  return permute_code(c_from, perm) == c_to;
}

Permutation parse_cycles(const std::string& text, int n) {
  Permutation perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> seen(n, 0);
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch != '(') throw std::invalid_argument("expected '(' in cycle notation");
    const std::size_t close = text.find(')', i);
    if (close == std::string::npos) throw std::invalid_argument("unterminated cycle");
    std::string body = text.substr(i + 1, close - i - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream ss(body);
    std::vector<int> cycle;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad cycle entry '" + tok + "'");
      }
      if (used != tok.size() || x < 1 || x > n)
        throw std::invalid_argument("bad cycle entry '" + tok + "'");
      if (seen[x - 1]++) throw std::invalid_argument("point repeated in cycle notation");
      cycle.push_back(x - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) perm[cycle[k]] = cycle[(k + 1) % cycle.size()];
    i = close + 1;
  }
  return perm;
}

std::string format_cycles(const Permutation& perm) {
  std::string out;
  std::vector<char> done(perm.size(), 0);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) continue;
    out += "(";
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      out += (first ? "" : ", ") + std::to_string(x + 1);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace maxarc
