#include "hyperdox/search/enumerate.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "hyperdox/error.hpp"

namespace hyperdox {

std::string_view to_string(ModelClass c) {
  switch (c) {
    case ModelClass::h_su: return "H_su";
    case ModelClass::h_sut: return "H_sut";
    case ModelClass::all: return "all";
  }
  return "?";
}

std::optional<ModelClass> parse_model_class(std::string_view name) {
  for (auto c : {ModelClass::h_su, ModelClass::h_sut, ModelClass::all})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

Workspace search_workspace(const SearchBounds& b) { return Workspace::standard(b.n_agents, b.vars_per_agent); }

namespace {

struct Slot {
  bool present = false;
  std::size_t vertex = 0;
  bool tail = false;
};

std::size_t alphabet(std::size_t vertices, bool partial) { return 2 * vertices + (partial ? 1 : 0); }

Slot decode_slot(std::size_t s, bool partial) {
  if (partial) {
    if (s == 0) return {};
    --s;
  }
  return {true, s / 2, s % 2 == 0};
}

std::size_t encode_slot(const Slot& slot, bool partial) {
  if (!slot.present) return 0;
  return slot.vertex * 2 + (slot.tail ? 0 : 1) + (partial ? 1 : 0);
}

// Non-decreasing mask sequences of length k over [0, 2^vars).
void sorted_sequences(std::size_t k, std::uint32_t limit, std::vector<std::uint32_t>& cur,
                      std::vector<std::vector<std::uint32_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  std::uint32_t from = cur.empty() ? 0 : cur.back();
  for (std::uint32_t m = from; m < limit; ++m) {
    cur.push_back(m);
    sorted_sequences(k, limit, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::uint32_t>> atom_options(const SearchBounds& b, std::size_t agent, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> out;
  if (b.vars_per_agent <= b.exhaustive_vars) {
    std::vector<std::uint32_t> cur;
    sorted_sequences(k, std::uint32_t{1} << b.vars_per_agent, cur, out);
    return out;
  }
  std::mt19937_64 rng(b.seed ^ (0x9e3779b97f4a7c15ULL * (agent + 1)) ^ (k << 32));
  std::uniform_int_distribution<std::uint32_t> dist(0, (std::uint32_t{1} << b.vars_per_agent) - 1);
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t i = 0; i < b.atom_samples; ++i) {
    std::vector<std::uint32_t> seq(k);
    for (auto& m : seq) m = dist(rng);
    std::sort(seq.begin(), seq.end());
    if (seen.insert(seq).second) out.push_back(std::move(seq));
  }
  return out;
}

// Permutations of one agent's vertices that fix every atom mask.
std::vector<std::vector<std::size_t>> mask_preserving_perms(const std::vector<std::uint32_t>& masks) {
  std::vector<std::size_t> perm(masks.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::vector<std::vector<std::size_t>> out;
  // Runs of equal masks are contiguous, so permuting within runs is
  // next_permutation restricted to order-preserving-by-mask arrangements.
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) ok = masks[perm[i]] == masks[i];
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

class Enumerator {
 public:
  Enumerator(ModelClass cls, const SearchBounds& b, const std::function<bool(const ModelSpec&)>& visit)
      : cls_(cls), b_(b), visit_(visit), n_(b.n_agents), partial_(cls == ModelClass::all) {}

  void run() {
    if (n_ == 0) throw Error(ErrorKind::input, "search needs at least one agent");
    if (b_.vars_per_agent > 16) throw Error(ErrorKind::limit, "at most 16 variables per agent are supported");
    const auto kmax = b_.max_vertices_per_agent ? std::min(b_.max_vertices_per_agent, b_.max_edges) : b_.max_edges;
    if (kmax * n_ > 64) throw Error(ErrorKind::limit, "search bounds allow more than 64 vertices");
    const std::size_t lo = partial_ ? 0 : 1;
    if (kmax < lo) return;
    std::vector<std::size_t> counts(n_, lo);
    while (true) {
      bool any = std::any_of(counts.begin(), counts.end(), [](std::size_t k) { return k > 0; });
      if (any && !for_counts(counts)) return;
      std::size_t i = n_;
      while (i > 0 && counts[i - 1] == kmax) counts[--i] = lo;
      if (i == 0) return;
      ++counts[i - 1];
    }
  }

 private:
  bool for_counts(const std::vector<std::size_t>& counts) {
    std::vector<std::vector<std::vector<std::uint32_t>>> options(n_);
    for (std::size_t a = 0; a < n_; ++a) {
      options[a] = atom_options(b_, a, counts[a]);
      if (options[a].empty()) return true;
    }
    std::vector<std::size_t> pick(n_, 0);
    while (true) {
      std::vector<std::vector<std::uint32_t>> masks(n_);
      for (std::size_t a = 0; a < n_; ++a) masks[a] = options[a][pick[a]];
      if (!for_masks(counts, masks)) return false;
      std::size_t i = n_;
      while (i > 0 && pick[i - 1] + 1 == options[i - 1].size()) pick[--i] = 0;
      if (i == 0) return true;
      ++pick[i - 1];
    }
  }

  bool for_masks(const std::vector<std::size_t>& counts, const std::vector<std::vector<std::uint32_t>>& masks) {
    spec_.vertices_per_agent = counts;
    spec_.atom_masks = masks;
    spec_.partial_edges = partial_;

    std::vector<std::size_t> offset(n_), radix(n_);
    std::size_t total_vertices = 0, codes = 1;
    for (std::size_t a = 0; a < n_; ++a) {
      offset[a] = total_vertices;
      total_vertices += counts[a];
      radix[a] = alphabet(counts[a], partial_);
      codes *= radix[a];
    }
    all_vertices_ = total_vertices == 64 ? ~0ULL : ((1ULL << total_vertices) - 1);

    // Per code: slots, vertex-set and tail-set bitmasks.
    slots_.assign(codes, std::vector<Slot>(n_));
    undirected_.assign(codes, 0);
    tails_.assign(codes, 0);
    usable_.clear();
    for (std::size_t c = 0; c < codes; ++c) {
      std::size_t rest = c;
      bool ok = true;
      for (std::size_t a = 0; a < n_; ++a) {
        auto s = decode_slot(rest % radix[a], partial_);
        rest /= radix[a];
        if (s.present && s.vertex >= counts[a]) ok = false;
        slots_[c][a] = s;
        if (s.present) {
          undirected_[c] |= 1ULL << (offset[a] + s.vertex);
          if (s.tail) tails_[c] |= 1ULL << (offset[a] + s.vertex);
        }
      }
      if (ok) usable_.push_back(static_cast<std::uint32_t>(c));
    }
    radix_ = radix;

    // Combined symmetry group, identity excluded.
    std::vector<std::vector<std::vector<std::size_t>>> per_agent(n_);
    for (std::size_t a = 0; a < n_; ++a) per_agent[a] = mask_preserving_perms(masks[a]);
    perms_.clear();
    std::vector<std::size_t> pick(n_, 0);
    while (true) {
      bool identity = std::all_of(pick.begin(), pick.end(), [](std::size_t i) { return i == 0; });
      if (!identity) {
        std::vector<std::vector<std::size_t>> g(n_);
        for (std::size_t a = 0; a < n_; ++a) g[a] = per_agent[a][pick[a]];
        perms_.push_back(std::move(g));
      }
      std::size_t i = n_;
      while (i > 0 && pick[i - 1] + 1 == per_agent[i - 1].size()) pick[--i] = 0;
      if (i == 0) break;
      ++pick[i - 1];
    }

    chosen_.clear();
    return choose(0);
  }

  bool choose(std::size_t from) {
    if (!chosen_.empty() && !emit()) return false;
    if (chosen_.size() == b_.max_edges) return true;
    for (std::size_t i = from; i < usable_.size(); ++i) {
      chosen_.push_back(usable_[i]);
      bool go = choose(i + 1);
      chosen_.pop_back();
      if (!go) return false;
    }
    return true;
  }

  bool emit() {
    std::uint64_t used = 0, tails = 0;
    for (auto c : chosen_) {
      used |= undirected_[c];
      tails |= tails_[c];
    }
    if (used != all_vertices_) return true;
    if (cls_ != ModelClass::all) {
      for (std::size_t x = 0; x < chosen_.size(); ++x)
        for (std::size_t y = 0; y < chosen_.size(); ++y)
          if (x != y && (undirected_[chosen_[x]] & ~undirected_[chosen_[y]]) == 0) return true;
      if (cls_ == ModelClass::h_sut && tails != all_vertices_) return true;
    }
    if (!canonical()) return true;
    spec_.edge_codes = chosen_;
    return visit_(spec_);
  }

  std::uint32_t apply(const std::vector<std::vector<std::size_t>>& g, std::uint32_t code) const {
    std::uint32_t out = 0, scale = 1;
    for (std::size_t a = 0; a < n_; ++a) {
      auto s = slots_[code][a];
      if (s.present) s.vertex = g[a][s.vertex];
      out += static_cast<std::uint32_t>(encode_slot(s, partial_) * scale);
      scale *= static_cast<std::uint32_t>(radix_[a]);
    }
    return out;
  }

  bool canonical() {
    image_.resize(chosen_.size());
    for (const auto& g : perms_) {
      for (std::size_t i = 0; i < chosen_.size(); ++i) image_[i] = apply(g, chosen_[i]);
      std::sort(image_.begin(), image_.end());
      if (image_ < chosen_) return false;
    }
    return true;
  }

  ModelClass cls_;
  const SearchBounds& b_;
  const std::function<bool(const ModelSpec&)>& visit_;
  std::size_t n_;
  bool partial_;
  ModelSpec spec_;
  std::uint64_t all_vertices_ = 0;
  std::vector<std::size_t> radix_;
  std::vector<std::vector<Slot>> slots_;
  std::vector<std::uint64_t> undirected_, tails_;
  std::vector<std::uint32_t> usable_;
  std::vector<std::vector<std::vector<std::size_t>>> perms_;
  std::vector<std::uint32_t> chosen_, image_;
};

}  // namespace

HypergraphModel build_model(const Workspace& ws, const ModelSpec& spec) {
  const auto n = spec.vertices_per_agent.size();
  std::vector<Vertex> vertices;
  std::vector<std::size_t> offset(n), radix(n);
  for (std::size_t a = 0; a < n; ++a) {
    AgentId agent{a};
    offset[a] = vertices.size();
    radix[a] = alphabet(spec.vertices_per_agent[a], spec.partial_edges);
    auto vars = ws.vars_of(agent);
    for (std::size_t i = 0; i < spec.vertices_per_agent[a]; ++i) {
      Vertex v{ws.agent_name(agent) + std::to_string(i + 1), agent, {}};
      for (std::size_t j = 0; j < vars.size(); ++j)
        if ((spec.atom_masks[a][i] >> j) & 1) v.atoms.push_back(vars[j]);
      vertices.push_back(std::move(v));
    }
  }
  std::vector<DirectedEdge> edges;
  for (auto code : spec.edge_codes) {
    DirectedEdge e;
    e.name = "e" + std::to_string(edges.size() + 1);
    std::size_t rest = code;
    for (std::size_t a = 0; a < n; ++a) {
      auto s = decode_slot(rest % radix[a], spec.partial_edges);
      rest /= radix[a];
      if (s.present) (s.tail ? e.tail : e.head).push_back(offset[a] + s.vertex);
    }
    edges.push_back(std::move(e));
  }
  return HypergraphModel(ws, std::move(vertices), std::move(edges));
}

void for_each_model_spec(ModelClass cls, const SearchBounds& b, const std::function<bool(const ModelSpec&)>& visit) {
  Enumerator(cls, b, visit).run();
}

void for_each_model(ModelClass cls, const SearchBounds& b, const std::function<bool(const HypergraphModel&)>& visit) {
  const auto ws = search_workspace(b);
  for_each_model_spec(cls, b, [&](const ModelSpec& spec) { return visit(build_model(ws, spec)); });
}

std::vector<HypergraphModel> enumerate_models(ModelClass cls, const SearchBounds& b) {
  std::vector<HypergraphModel> out;
  for_each_model(cls, b, [&](const HypergraphModel& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace hyperdox
