#include "matchstick/canonical.hpp"

#include <vector>

#include "matchstick/error.hpp"

namespace matchstick {

namespace {

struct Start {
  int dart = 0;
  int dir = 1;
};

class CodeBuilder {
 public:
  explicit CodeBuilder(const EmbeddedGraph& g)
      : g_(g), number_(g.vertex_count()), first_(g.vertex_count()), order_(g.vertex_count()) {}

  // Writes the code for `s` into `code`. Returns false as soon as the code
  // exceeds `bound` (when bound is non-empty), leaving `code` partial.
  bool build(Start s, std::string& code, const std::string& bound) {
    const int n = g_.vertex_count();
    std::fill(number_.begin(), number_.end(), 0);
    code.clear();
    bool tied = !bound.empty();
    auto emit = [&](int value) {
      const char c = static_cast<char>(value);
      if (tied) {
        const char b = bound[code.size()];
        if (static_cast<unsigned char>(c) > static_cast<unsigned char>(b)) return false;
        if (c != b) tied = false;
      }
      code.push_back(c);
      return true;
    };
    const VertexId root = g_.dart_tail(s.dart);
    int next_number = 1;
    number_[root] = next_number++;
    first_[root] = s.dart - g_.first_dart(root);
    int head = 0, tail = 0;
    order_[tail++] = root;
    while (head < tail) {
      const VertexId x = order_[head++];
      const int deg = g_.degree(x);
      const auto rot = g_.rotation(x);
      for (int j = 0; j < deg; ++j) {
        const int pos = ((first_[x] + s.dir * j) % deg + deg) % deg;
        const VertexId y = rot[pos];
        if (number_[y] == 0) {
          number_[y] = next_number++;
          const int back = g_.reverse_dart(g_.first_dart(x) + pos);
          first_[y] = back - g_.first_dart(y);
          order_[tail++] = y;
        }
        if (!emit(number_[y])) return false;
      }
      if (!emit(0)) return false;
    }
    (void)n;
    return true;
  }

  const std::vector<int>& numbers() const { return number_; }
  const std::vector<int>& first_positions() const { return first_; }

 private:
  const EmbeddedGraph& g_;
  std::vector<int> number_;
  std::vector<int> first_;
  std::vector<VertexId> order_;
};

std::vector<Start> admissible_starts(const EmbeddedGraph& g) {
  std::vector<Start> starts;
  if (g.outer_face()) {
    for (int d : g.face_darts(*g.outer_face())) {
      starts.push_back({d, 1});
      starts.push_back({g.reverse_dart(d), -1});
    }
  } else {
    for (int d = 0; d < g.dart_count(); ++d) {
      starts.push_back({d, 1});
      starts.push_back({d, -1});
    }
  }
  return starts;
}

Start best_start(const EmbeddedGraph& g, std::string& best) {
  CodeBuilder builder(g);
  std::string code;
  Start chosen{};
  best.clear();
  for (Start s : admissible_starts(g)) {
    if (builder.build(s, code, best) && (best.empty() || code < best)) {
      best = code;
      chosen = s;
    }
  }
  return chosen;
}

}  // namespace

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

CanonicalKey canonical_key(const EmbeddedGraph& g) {
  if (g.vertex_count() > 254) throw Error("canonical_key supports at most 254 vertices");
  CanonicalKey key;
  key.bytes.push_back(g.outer_face() ? 'O' : 'U');
  if (g.edge_count() == 0) {
    key.bytes.push_back(1);
    return key;
  }
  std::string best;
  best_start(g, best);
  key.bytes += best;
  return key;
}

EmbeddedGraph canonical_form(const EmbeddedGraph& g) {
  if (g.edge_count() == 0) return g;
  std::string best;
  const Start s = best_start(g, best);
  CodeBuilder builder(g);
  std::string code;
  builder.build(s, code, {});
  const auto& number = builder.numbers();
  const auto& first = builder.first_positions();
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> rot(n);
  for (VertexId v = 0; v < n; ++v) {
    const int deg = g.degree(v);
    auto& r = rot[number[v] - 1];
    for (int j = 0; j < deg; ++j) {
      const int pos = ((first[v] + s.dir * j) % deg + deg) % deg;
      r.push_back(number[g.rotation(v)[pos]] - 1);
    }
  }
  std::optional<DirectedEdge> hint;
  if (g.outer_face()) hint = DirectedEdge{0, rot[0][0]};
  return EmbeddedGraph::build(std::move(rot), hint);
}

}  // namespace matchstick
