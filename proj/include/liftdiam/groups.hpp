#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "liftdiam/kernels.hpp"

namespace liftdiam {

/// Signed, 1-based generator indices: +k is generator k-1, -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);

/// Letters a..z are generators 0..25, upper case their inverses ("ABab").
Word parse_word(const std::string& text, int generator_count);
std::string format_word(const Word& w);

struct Presentation {
  int generator_count = 0;
  std::vector<Word> relators;
};

/// Validates indices and freely reduces every relator; empty relators are
/// dropped.
Presentation make_presentation(int generator_count, std::vector<Word> relators);
Presentation make_presentation(int generator_count, std::initializer_list<std::string> relators);

class EnumerationOverflow : public std::runtime_error {
 public:
  explicit EnumerationOverflow(std::size_t budget)
      : std::runtime_error("coset enumeration exceeded the budget of " + std::to_string(budget) +
                           " live cosets"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

class NotGenerating : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Action of the presented group on the cosets of the trivial subgroup, so
/// cosets are group elements and coset 0 is the identity. action[g][c] is
/// c * g.
struct CosetTable {
  int coset_count = 0;
  int generator_count = 0;
  std::vector<std::vector<int>> action;
  std::vector<std::vector<int>> inverse_action;
  bool complete = false;

  int apply(int coset, const Word& w) const;
  /// True when every relator acts as the identity permutation.
  bool satisfies(const Presentation& p) const;
};

/// HLT coset enumeration with cosets defined in first-free order. Throws
/// EnumerationOverflow once the number of live cosets would exceed
/// `max_cosets`.
CosetTable todd_coxeter(const Presentation& p, std::size_t max_cosets);

/// The realised group together with a chosen symmetric generating set.
/// Vertices are group elements (coset indices); the edge labelled s runs
/// from g to g * s.
class CayleyGraph {
 public:
  CayleyGraph(std::shared_ptr<const CosetTable> table, std::vector<int> generator_elements);

  int order() const { return table_->coset_count; }
  int identity() const { return 0; }
  /// Symmetric generator set: sorted element indices, identity excluded.
  const std::vector<int>& generators() const { return generators_; }
  /// right_mult()[k][g] = g * generators()[k].
  const std::vector<std::vector<int>>& right_mult() const { return right_mult_; }
  const kernels::Adjacency& adjacency() const { return adjacency_; }
  int degree() const { return static_cast<int>(generators_.size()); }

  int multiply(int a, int b) const;
  int inverse(int a) const;
  /// Word in the presentation generators representing element g.
  const Word& element_word(int g) const { return words_[static_cast<std::size_t>(g)]; }
  const CosetTable& table() const { return *table_; }

 private:
  std::shared_ptr<const CosetTable> table_;
  std::vector<Word> words_;
  std::vector<int> generators_;
  std::vector<std::vector<int>> right_mult_;
  kernels::Adjacency adjacency_;
};

/// Cayley graph on the symmetric closure of the chosen presentation
/// generators. Throws NotGenerating if they do not generate the group.
CayleyGraph cayley_graph(const CosetTable& t, std::span<const int> generator_subset);
CayleyGraph cayley_graph(std::shared_ptr<const CosetTable> t, std::span<const int> generator_subset);

/// Same, with generators given directly as group elements.
CayleyGraph cayley_graph_from_elements(std::shared_ptr<const CosetTable> t,
                                       std::span<const int> elements);

struct WordMetricDiameter {
  int diameter = 0;
  int farthest = 0;
  std::vector<int> layer_sizes;
  std::vector<int> distance;
};

/// Eccentricity of the identity; equals the diameter by vertex-transitivity.
WordMetricDiameter word_metric_diameter(const CayleyGraph& c);

/// Rank over the rationals of the relator exponent-sum matrix, or nullopt if
/// the fraction-free elimination would overflow 64-bit integers.
std::optional<int> exponent_sum_rank(const Presentation& p);

enum class Triviality { yes, no, unknown };

struct TrivialityResult {
  Triviality status = Triviality::unknown;
  std::string certificate;
  std::optional<int> order;
};

std::string to_string(Triviality t);

TrivialityResult is_trivial(const Presentation& p, std::size_t max_cosets);

}  // namespace liftdiam
