#pragma once

// Model arithmetic for each construction, independent of the built automata,
// and the reduced-word read-off for finite free products.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "autsg/constructions.hpp"

namespace autsg {

/// A factor semigroup: words over a finite semigroup's elements, or over an
/// automaton's states.
using Factor = std::variant<FiniteSemigroup, MealyAutomaton>;

bool factor_equal(const Factor& f, const Word& u, const Word& v);

struct Block {
  int side;  // 0 for the first factor, 1 for the second
  Word word;
  friend bool operator==(const Block&, const Block&) = default;
};

struct FreeProductElement {
  std::vector<Block> blocks;
};

struct WreathElement {
  std::vector<Word> coords;  // one per element of T, in T's order
  Element top;
};

struct ReesElement {
  std::size_t i;
  Word x;
  std::size_t lambda;
};

struct SemilatticeElement {
  std::optional<std::size_t> part;  // empty for the bottom T
  std::optional<Word> word;         // set iff part is set
  Element t = 0;                    // used iff part is empty
};

struct IdealExtElement {
  std::optional<Word> word;  // element of S1, or empty for S2
  Element y = 0;
};

struct ActExtElement {
  std::optional<Word> word;  // element of S, or empty for a point
  std::uint32_t point = 0;
};

using ModelElement = std::variant<FreeProductElement, WreathElement, ReesElement,
                                  SemilatticeElement, IdealExtElement, ActExtElement>;

/// Ground-truth arithmetic of one construction instance. Generators are
/// indexed by the state ids of the corresponding built automaton.
class Model {
 public:
  virtual ~Model() = default;
  virtual std::string name() const = 0;
  virtual std::size_t num_generators() const = 0;
  virtual ModelElement generator(StateId q) const = 0;
  /// Throws InputError on elements of another construction.
  virtual ModelElement multiply(const ModelElement& x, const ModelElement& y) const = 0;
  virtual bool same(const ModelElement& x, const ModelElement& y) const = 0;
  virtual std::string format(const ModelElement& x) const = 0;
};

ModelElement model_multiply(const Model& model, const ModelElement& x, const ModelElement& y);
/// Product of the generators along w.
ModelElement evaluate(const Model& model, const Word& w);

class FreeProductModel : public Model {
 public:
  FreeProductModel(Factor s, Factor t);
  explicit FreeProductModel(const FreeProductFiniteSpec& spec);
  explicit FreeProductModel(const FreeProductGeneralSpec& spec);

  std::string name() const override { return "free product"; }
  std::size_t num_generators() const override;
  ModelElement generator(StateId q) const override;
  ModelElement multiply(const ModelElement& x, const ModelElement& y) const override;
  bool same(const ModelElement& x, const ModelElement& y) const override;
  std::string format(const ModelElement& x) const override;

  /// Merges adjacent blocks of the same side; blocks over a finite factor
  /// collapse to their product. Throws InputError on an empty list.
  FreeProductElement free_reduce(std::vector<Block> blocks) const;
  const Factor& factor(int side) const { return side == 0 ? s_ : t_; }

 private:
  Factor s_, t_;
};

class WreathModel : public Model {
 public:
  explicit WreathModel(const WreathSpec& spec);

  std::string name() const override { return "wreath product"; }
  std::size_t num_generators() const override;
  ModelElement generator(StateId q) const override;
  ModelElement multiply(const ModelElement& x, const ModelElement& y) const override;
  bool same(const ModelElement& x, const ModelElement& y) const override;
  std::string format(const ModelElement& x) const override;

 private:
  MealyAutomaton a_;  // base automaton with its identity state
  FiniteSemigroup t_;
};

class ReesModel : public Model {
 public:
  explicit ReesModel(const ReesSpec& spec);

  std::string name() const override { return "Rees matrix"; }
  std::size_t num_generators() const override;
  ModelElement generator(StateId q) const override;
  ModelElement multiply(const ModelElement& x, const ModelElement& y) const override;
  bool same(const ModelElement& x, const ModelElement& y) const override;
  std::string format(const ModelElement& x) const override;

 private:
  ReesSpec spec_;
};

class SemilatticeModel : public Model {
 public:
  explicit SemilatticeModel(const SemilatticeSpec& spec);

  std::string name() const override { return "strong semilattice"; }
  std::size_t num_generators() const override;
  ModelElement generator(StateId q) const override;
  ModelElement multiply(const ModelElement& x, const ModelElement& y) const override;
  bool same(const ModelElement& x, const ModelElement& y) const override;
  std::string format(const ModelElement& x) const override;

 private:
  Element down(const SemilatticeElement& x) const;
  SemilatticeSpec spec_;
};

class IdealExtModel : public Model {
 public:
  explicit IdealExtModel(const IdealExtensionSpec& spec);

  std::string name() const override { return "ideal extension"; }
  std::size_t num_generators() const override;
  ModelElement generator(StateId q) const override;
  ModelElement multiply(const ModelElement& x, const ModelElement& y) const override;
  bool same(const ModelElement& x, const ModelElement& y) const override;
  std::string format(const ModelElement& x) const override;

 private:
  IdealExtensionSpec spec_;
};

class ActExtModel : public Model {
 public:
  explicit ActExtModel(const ActExtensionSpec& spec);

  std::string name() const override { return "S[X]"; }
  std::size_t num_generators() const override;
  ModelElement generator(StateId q) const override;
  ModelElement multiply(const ModelElement& x, const ModelElement& y) const override;
  bool same(const ModelElement& x, const ModelElement& y) const override;
  std::string format(const ModelElement& x) const override;

 private:
  ActExtensionSpec spec_;
};

struct OracleReport {
  std::size_t pairs_checked = 0;
  /// Words on which equal() and the model disagree.
  std::optional<std::pair<Word, Word>> disagreement;
  bool automaton_says_equal = false;
};

/// Compares equal() on the built automaton with the model on every pair of
/// generator words of length <= max_length.
OracleReport check_oracle_agreement(const MealyAutomaton& built, const Model& model,
                                    std::size_t max_length);

/// Compares the pairs (u, v) given explicitly.
OracleReport check_oracle_pairs(const MealyAutomaton& built, const Model& model,
                                const std::vector<std::pair<Word, Word>>& pairs);

/// Reads the reduced form of w off the action of the built automaton on
/// D[-|-]^ω (w starting in the first factor) or T[-|-]^ω, and cross-checks it
/// against the other string. Blocks hold single elements.
FreeProductElement recover_reduced_word(const FreeProductFiniteSpec& spec,
                                        const MealyAutomaton& built, const Word& w);

}  // namespace autsg
