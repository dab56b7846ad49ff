#include "liftdiam/groups.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <queue>

#include "liftdiam/metric_graph.hpp"

namespace liftdiam {

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word parse_word(const std::string& text, int generator_count) {
  Word w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      throw InvalidInput(std::string("invalid letter '") + ch + "' in word \"" + text + "\"");
    int idx = std::tolower(static_cast<unsigned char>(ch)) - 'a';
    if (idx >= generator_count)
      throw InvalidInput(std::string("letter '") + ch + "' exceeds the generator count in \"" + text + "\"");
    w.push_back(std::islower(static_cast<unsigned char>(ch)) ? idx + 1 : -(idx + 1));
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (int x : w) {
    int idx = std::abs(x) - 1;
    if (idx >= 26) throw InvalidInput("word uses more than 26 generators");
    s.push_back(static_cast<char>(x > 0 ? 'a' + idx : 'A' + idx));
  }
  return s;
}

Presentation make_presentation(int generator_count, std::vector<Word> relators) {
  if (generator_count < 0) throw InvalidInput("negative generator count");
  Presentation p;
  p.generator_count = generator_count;
  for (auto& r : relators) {
    for (int x : r)
      if (x == 0 || std::abs(x) > generator_count)
        throw InvalidInput("relator letter " + std::to_string(x) + " out of range");
    Word red = free_reduce(r);
    if (!red.empty()) p.relators.push_back(std::move(red));
  }
  return p;
}

Presentation make_presentation(int generator_count, std::initializer_list<std::string> relators) {
  std::vector<Word> ws;
  for (const auto& r : relators) ws.push_back(parse_word(r, generator_count));
  return make_presentation(generator_count, std::move(ws));
}

// ---------------------------------------------------------------------------
// Coset enumeration

namespace {

int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_live)
      : cols_(2 * p.generator_count), max_live_(max_live),
        max_total_(std::max<std::size_t>(max_live * 64, 1u << 16)) {
    for (const Word& r : p.relators) {
      std::vector<int> cs;
      for (int x : r) cs.push_back(column(x));
      rels_.push_back(std::move(cs));
    }
    new_row();
  }

  void run() {
    for (int c = 0; c < total(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : rels_) {
        scan_and_fill(c, r);
        if (!live(c)) break;
      }
      if (!live(c)) continue;
      for (int x = 0; x < cols_; ++x)
        if (at(c, x) < 0) define(c, x);
    }
  }

  CosetTable result(int generator_count) const {
    std::vector<int> number(static_cast<std::size_t>(total()), -1);
    int n = 0;
    for (int c = 0; c < total(); ++c)
      if (live(c)) number[static_cast<std::size_t>(c)] = n++;
    CosetTable t;
    t.coset_count = n;
    t.generator_count = generator_count;
    t.action.assign(static_cast<std::size_t>(generator_count), std::vector<int>(static_cast<std::size_t>(n)));
    t.inverse_action = t.action;
    t.complete = true;
    for (int c = 0; c < total(); ++c) {
      if (!live(c)) continue;
      int k = number[static_cast<std::size_t>(c)];
      for (int g = 0; g < generator_count; ++g) {
        int f = at(c, 2 * g);
        int b = at(c, 2 * g + 1);
        if (f < 0 || b < 0 || !live(f) || !live(b)) {
          t.complete = false;
          continue;
        }
        t.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] = number[static_cast<std::size_t>(f)];
        t.inverse_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] = number[static_cast<std::size_t>(b)];
      }
    }
    return t;
  }

 private:
  int total() const { return static_cast<int>(forward_.size()); }
  bool live(int c) const { return forward_[static_cast<std::size_t>(c)] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  int at(int c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  int new_row() {
    int c = total();
    forward_.push_back(c);
    table_.resize(table_.size() + static_cast<std::size_t>(cols_), -1);
    ++live_count_;
    return c;
  }

  void define(int c, int x) {
    if (live_count_ >= max_live_ || forward_.size() >= max_total_) throw EnumerationOverflow(max_live_);
    int d = new_row();
    at(c, x) = d;
    at(d, x ^ 1) = c;
  }

  int rep(int c) {
    int r = c;
    while (forward_[static_cast<std::size_t>(r)] != r) r = forward_[static_cast<std::size_t>(r)];
    while (forward_[static_cast<std::size_t>(c)] != r) {
      int next = forward_[static_cast<std::size_t>(c)];
      forward_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[static_cast<std::size_t>(b)] = a;
    --live_count_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int dead = queue.front();
      queue.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int d = at(dead, x);
        if (d < 0) continue;
        if (at(d, x ^ 1) == dead) at(d, x ^ 1) = -1;
        int mu = rep(dead);
        int nu = rep(d);
        if (at(mu, x) >= 0)
          merge(nu, at(mu, x), queue);
        else if (at(nu, x ^ 1) >= 0)
          merge(mu, at(nu, x ^ 1), queue);
        else {
          at(mu, x) = nu;
          at(nu, x ^ 1) = mu;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[static_cast<std::size_t>(j)] ^ 1) >= 0) b = at(b, w[static_cast<std::size_t>(j--)] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, w[static_cast<std::size_t>(i)] ^ 1) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  int cols_;
  std::size_t max_live_;
  std::size_t max_total_;
  std::size_t live_count_ = 0;
  std::vector<std::vector<int>> rels_;
  std::vector<int> table_;
  std::vector<int> forward_;
};

}  // namespace

int CosetTable::apply(int coset, const Word& w) const {
  for (int x : w) {
    const auto& act = x > 0 ? action[static_cast<std::size_t>(x - 1)] : inverse_action[static_cast<std::size_t>(-x - 1)];
    coset = act[static_cast<std::size_t>(coset)];
  }
  return coset;
}

bool CosetTable::satisfies(const Presentation& p) const {
  for (const Word& r : p.relators)
    for (int c = 0; c < coset_count; ++c)
      if (apply(c, r) != c) return false;
  return true;
}

CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets == 0) throw InvalidInput("coset budget must be positive");
  Enumerator e(p, max_cosets);
  e.run();
  CosetTable t = e.result(p.generator_count);
  if (!t.complete) throw std::logic_error("coset enumeration finished with an incomplete table");
  return t;
}

// ---------------------------------------------------------------------------
// Cayley graphs

CayleyGraph::CayleyGraph(std::shared_ptr<const CosetTable> table, std::vector<int> generator_elements)
    : table_(std::move(table)) {
  const CosetTable& t = *table_;
  const int n = t.coset_count;

  // Shortest words for every element, by BFS over all presentation generators.
  words_.assign(static_cast<std::size_t>(n), Word{});
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int c = q.front();
    q.pop();
    for (int g = 0; g < t.generator_count; ++g)
      for (int sign : {1, -1}) {
        int d = sign > 0 ? t.action[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)]
                         : t.inverse_action[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)];
        if (seen[static_cast<std::size_t>(d)]) continue;
        seen[static_cast<std::size_t>(d)] = 1;
        words_[static_cast<std::size_t>(d)] = words_[static_cast<std::size_t>(c)];
        words_[static_cast<std::size_t>(d)].push_back(sign * (g + 1));
        q.push(d);
      }
  }

  std::vector<int> gens;
  for (int s : generator_elements) {
    if (s < 0 || s >= n) throw InvalidInput("generator element " + std::to_string(s) + " out of range");
    if (s == 0) continue;
    gens.push_back(s);
    gens.push_back(inverse(s));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  generators_ = std::move(gens);

  for (int s : generators_) {
    std::vector<int> row(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) row[static_cast<std::size_t>(g)] = multiply(g, s);
    right_mult_.push_back(std::move(row));
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (int g = 0; g < n; ++g)
    for (const auto& row : right_mult_) adjacency_[static_cast<std::size_t>(g)].push_back(row[static_cast<std::size_t>(g)]);
}

int CayleyGraph::multiply(int a, int b) const { return table_->apply(a, words_[static_cast<std::size_t>(b)]); }

int CayleyGraph::inverse(int a) const { return table_->apply(0, inverse_word(words_[static_cast<std::size_t>(a)])); }

CayleyGraph cayley_graph_from_elements(std::shared_ptr<const CosetTable> t, std::span<const int> elements) {
  CayleyGraph c(std::move(t), std::vector<int>(elements.begin(), elements.end()));
  auto dist = kernels::bfs_distances(c.adjacency(), 0);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; }))
    throw NotGenerating("chosen generators reach only part of the group");
  return c;
}

CayleyGraph cayley_graph(std::shared_ptr<const CosetTable> t, std::span<const int> generator_subset) {
  if (!t->complete) throw InvalidInput("coset table is incomplete");
  std::vector<int> elements;
  for (int g : generator_subset) {
    if (g < 0 || g >= t->generator_count)
      throw InvalidInput("generator index " + std::to_string(g) + " out of range");
    elements.push_back(t->action[static_cast<std::size_t>(g)][0]);
  }
  return cayley_graph_from_elements(std::move(t), elements);
}

CayleyGraph cayley_graph(const CosetTable& t, std::span<const int> generator_subset) {
  return cayley_graph(std::make_shared<const CosetTable>(t), generator_subset);
}

WordMetricDiameter word_metric_diameter(const CayleyGraph& c) {
  WordMetricDiameter r;
  r.distance = kernels::bfs_distances(c.adjacency(), c.identity());
  for (std::size_t g = 0; g < r.distance.size(); ++g) {
    int d = r.distance[g];
    if (d < 0) throw NotGenerating("Cayley graph is disconnected");
    if (d > r.diameter) {
      r.diameter = d;
      r.farthest = static_cast<int>(g);
    }
  }
  r.layer_sizes.assign(static_cast<std::size_t>(r.diameter) + 1, 0);
  for (int d : r.distance) ++r.layer_sizes[static_cast<std::size_t>(d)];
  return r;
}

// ---------------------------------------------------------------------------
// Triviality

std::optional<int> exponent_sum_rank(const Presentation& p) {
  using Row = std::vector<__int128>;
  const int n = p.generator_count;
  std::vector<Row> rows;
  for (const Word& w : p.relators) {
    Row r(static_cast<std::size_t>(n), 0);
    for (int x : w) r[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    rows.push_back(std::move(r));
  }
  const __int128 limit = static_cast<__int128>(1) << 62;
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
    const Row& pr = rows[static_cast<std::size_t>(rank)];
    for (int i = rank + 1; i < static_cast<int>(rows.size()); ++i) {
      Row& r = rows[static_cast<std::size_t>(i)];
      __int128 a = pr[static_cast<std::size_t>(col)];
      __int128 b = r[static_cast<std::size_t>(col)];
      if (b == 0) continue;
      long long content = 0;
      for (int k = 0; k < n; ++k) {
        __int128 v = r[static_cast<std::size_t>(k)] * a - pr[static_cast<std::size_t>(k)] * b;
        if (v > limit || v < -limit) return std::nullopt;
        r[static_cast<std::size_t>(k)] = v;
        content = std::gcd(content, static_cast<long long>(v < 0 ? -v : v));
      }
      if (content > 1)
        for (auto& v : r) v /= content;
    }
    ++rank;
  }
  return rank;
}

std::string to_string(Triviality t) {
  switch (t) {
    case Triviality::yes:
      return "yes";
    case Triviality::no:
      return "no";
    case Triviality::unknown:
      return "unknown";
  }
  return "unknown";
}

TrivialityResult is_trivial(const Presentation& p, std::size_t max_cosets) {
  TrivialityResult r;
  auto rank = exponent_sum_rank(p);
  if (rank && *rank < p.generator_count) {
    r.status = Triviality::no;
    r.certificate = "abelianization infinite (exponent-sum rank " + std::to_string(*rank) + " < " +
                    std::to_string(p.generator_count) + " generators)";
    return r;
  }
  try {
    CosetTable t = todd_coxeter(p, max_cosets);
    r.order = t.coset_count;
    if (t.coset_count == 1) {
      r.status = Triviality::yes;
      r.certificate = "enumeration completed with 1 coset";
    } else {
      r.status = Triviality::no;
      r.certificate = "enumeration completed, order " + std::to_string(t.coset_count);
    }
  } catch (const EnumerationOverflow& e) {
    r.status = Triviality::unknown;
    r.certificate = e.what();
  }
  return r;
}

}  // namespace liftdiam
