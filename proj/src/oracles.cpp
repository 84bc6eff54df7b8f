#include "autsg/oracles.hpp"

#include <stdexcept>

#include "autsg/word_problem.hpp"

namespace autsg {

namespace {

template <typename T>
const T& as(const ModelElement& x, const char* model) {
  if (const T* p = std::get_if<T>(&x)) return *p;
  throw InputError(std::string("element does not belong to the ") + model + " model");
}

std::size_t factor_size(const Factor& f) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, FiniteSemigroup>) {
          return x.size();
        } else {
          return x.num_states();
        }
      },
      f);
}

std::string factor_word(const Factor& f, const Word& w) {
  if (const auto* s = std::get_if<FiniteSemigroup>(&f)) {
    std::string out;
    for (StateId x : w) out += (out.empty() ? "" : " ") + s->name(x);
    return out;
  }
  return format_word(std::get<MealyAutomaton>(f), w);
}

std::string bracket(const std::string& s) { return "[" + s + "]"; }

}  // namespace

bool factor_equal(const Factor& f, const Word& u, const Word& v) {
  if (const auto* s = std::get_if<FiniteSemigroup>(&f)) {
    return s->product(u.letters()) == s->product(v.letters());
  }
  return equal(std::get<MealyAutomaton>(f), u, v).equal;
}

ModelElement model_multiply(const Model& model, const ModelElement& x, const ModelElement& y) {
  if (x.index() != y.index()) throw InputError("cannot multiply elements of different models");
  return model.multiply(x, y);
}

ModelElement evaluate(const Model& model, const Word& w) {
  ModelElement acc = model.generator(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i) acc = model.multiply(acc, model.generator(w[i]));
  return acc;
}

// ---------------------------------------------------------------------------
// Free products

FreeProductModel::FreeProductModel(Factor s, Factor t) : s_(std::move(s)), t_(std::move(t)) {}

FreeProductModel::FreeProductModel(const FreeProductFiniteSpec& spec)
    : FreeProductModel(Factor{spec.s}, Factor{spec.t}) {}

FreeProductModel::FreeProductModel(const FreeProductGeneralSpec& spec)
    : FreeProductModel(Factor{spec.a1}, Factor{spec.a2}) {}

std::size_t FreeProductModel::num_generators() const {
  return factor_size(s_) + factor_size(t_);
}

ModelElement FreeProductModel::generator(StateId q) const {
  const auto ns = static_cast<StateId>(factor_size(s_));
  if (q >= num_generators()) throw InputError("generator out of range");
  if (q < ns) return FreeProductElement{{Block{0, Word{q}}}};
  return FreeProductElement{{Block{1, Word{q - ns}}}};
}

FreeProductElement FreeProductModel::free_reduce(std::vector<Block> blocks) const {
  if (blocks.empty()) throw InputError("a free product element needs at least one block");
  std::vector<Block> out;
  for (auto& b : blocks) {
    if (!out.empty() && out.back().side == b.side) {
      out.back().word = out.back().word + b.word;
    } else {
      out.push_back(std::move(b));
    }
  }
  for (auto& b : out) {
    if (const auto* s = std::get_if<FiniteSemigroup>(&factor(b.side))) {
      b.word = Word{s->product(b.word.letters())};
    }
  }
  return FreeProductElement{std::move(out)};
}

ModelElement FreeProductModel::multiply(const ModelElement& x, const ModelElement& y) const {
  std::vector<Block> blocks = as<FreeProductElement>(x, "free product").blocks;
  const auto& right = as<FreeProductElement>(y, "free product").blocks;
  blocks.insert(blocks.end(), right.begin(), right.end());
  return free_reduce(std::move(blocks));
}

bool FreeProductModel::same(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<FreeProductElement>(x, "free product").blocks;
  const auto& b = as<FreeProductElement>(y, "free product").blocks;
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].side != b[i].side || !factor_equal(factor(a[i].side), a[i].word, b[i].word)) return false;
  }
  return true;
}

std::string FreeProductModel::format(const ModelElement& x) const {
  std::string out;
  for (const auto& b : as<FreeProductElement>(x, "free product").blocks) {
    out += bracket(factor_word(factor(b.side), b.word));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Wreath products

WreathModel::WreathModel(const WreathSpec& spec)
    : a_(ensure_identity(spec.a, spec.identity).automaton), t_(spec.t) {
  if (!right_zeros_and_identity(t_).identity) throw InputError("the top semigroup must be a monoid");
}

std::size_t WreathModel::num_generators() const {
  std::size_t count = t_.size();
  for (std::size_t i = 0; i < t_.size(); ++i) count *= a_.num_states();
  return count;
}

ModelElement WreathModel::generator(StateId q) const {
  if (q >= num_generators()) throw InputError("generator out of range");
  const std::size_t n = t_.size();
  WreathElement x;
  x.top = static_cast<Element>(q % n);
  std::size_t index = q / n;
  std::vector<Word> coords;
  for (std::size_t i = 0; i < n; ++i) {
    coords.push_back(Word{static_cast<StateId>(index % a_.num_states())});
    index /= a_.num_states();
  }
  x.coords.assign(coords.rbegin(), coords.rend());
  return x;
}

ModelElement WreathModel::multiply(const ModelElement& x, const ModelElement& y) const {
  const auto& f = as<WreathElement>(x, "wreath");
  const auto& g = as<WreathElement>(y, "wreath");
  // (f, t)(g, u) = (f · g^t, tu) with (g^t)_i = g_{t_i t}.
  WreathElement r;
  for (Element i = 0; i < t_.size(); ++i) {
    r.coords.push_back(f.coords[i] + g.coords[t_.multiply(i, f.top)]);
  }
  r.top = t_.multiply(f.top, g.top);
  return r;
}

bool WreathModel::same(const ModelElement& x, const ModelElement& y) const {
  const auto& f = as<WreathElement>(x, "wreath");
  const auto& g = as<WreathElement>(y, "wreath");
  if (f.top != g.top) return false;
  for (std::size_t i = 0; i < f.coords.size(); ++i) {
    if (!equal(a_, f.coords[i], g.coords[i]).equal) return false;
  }
  return true;
}

std::string WreathModel::format(const ModelElement& x) const {
  const auto& f = as<WreathElement>(x, "wreath");
  std::string out = "(";
  for (std::size_t i = 0; i < f.coords.size(); ++i) {
    out += (i ? "," : "") + bracket(format_word(a_, f.coords[i]));
  }
  return out + ";" + t_.name(f.top) + ")";
}

// ---------------------------------------------------------------------------
// Rees matrix semigroups

ReesModel::ReesModel(const ReesSpec& spec) : spec_(spec) {}

std::size_t ReesModel::num_generators() const {
  return spec_.i_names.size() * spec_.a.num_states() * spec_.lambda_names.size();
}

ModelElement ReesModel::generator(StateId q) const {
  if (q >= num_generators()) throw InputError("generator out of range");
  const std::size_t nl = spec_.lambda_names.size();
  const std::size_t nq = spec_.a.num_states();
  return ReesElement{q / nl / nq, Word{static_cast<StateId>((q / nl) % nq)}, q % nl};
}

ModelElement ReesModel::multiply(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<ReesElement>(x, "Rees");
  const auto& b = as<ReesElement>(y, "Rees");
  return ReesElement{a.i, a.x + Word{spec_.p[a.lambda][b.i]} + b.x, b.lambda};
}

bool ReesModel::same(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<ReesElement>(x, "Rees");
  const auto& b = as<ReesElement>(y, "Rees");
  return a.i == b.i && a.lambda == b.lambda && equal(spec_.a, a.x, b.x).equal;
}

std::string ReesModel::format(const ModelElement& x) const {
  const auto& a = as<ReesElement>(x, "Rees");
  return "(" + spec_.i_names[a.i] + "," + bracket(format_word(spec_.a, a.x)) + "," +
         spec_.lambda_names[a.lambda] + ")";
}

// ---------------------------------------------------------------------------
// Strong semilattices

SemilatticeModel::SemilatticeModel(const SemilatticeSpec& spec) : spec_(spec) {}

std::size_t SemilatticeModel::num_generators() const {
  std::size_t n = spec_.t.size();
  for (const auto& p : spec_.parts) n += p.num_states();
  return n;
}

ModelElement SemilatticeModel::generator(StateId q) const {
  if (q >= num_generators()) throw InputError("generator out of range");
  for (std::size_t i = 0; i < spec_.parts.size(); ++i) {
    if (q < spec_.parts[i].num_states()) return SemilatticeElement{i, Word{q}, 0};
    q -= static_cast<StateId>(spec_.parts[i].num_states());
  }
  return SemilatticeElement{std::nullopt, std::nullopt, q};
}

Element SemilatticeModel::down(const SemilatticeElement& x) const {
  if (!x.part) return x.t;
  std::vector<Element> images;
  for (StateId q : *x.word) images.push_back(spec_.homs[*x.part][q]);
  return spec_.t.product(images);
}

ModelElement SemilatticeModel::multiply(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<SemilatticeElement>(x, "semilattice");
  const auto& b = as<SemilatticeElement>(y, "semilattice");
  if (a.part && b.part && *a.part == *b.part) {
    return SemilatticeElement{a.part, *a.word + *b.word, 0};
  }
  return SemilatticeElement{std::nullopt, std::nullopt, spec_.t.multiply(down(a), down(b))};
}

bool SemilatticeModel::same(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<SemilatticeElement>(x, "semilattice");
  const auto& b = as<SemilatticeElement>(y, "semilattice");
  if (a.part != b.part) return false;
  if (!a.part) return a.t == b.t;
  return equal(spec_.parts[*a.part], *a.word, *b.word).equal;
}

std::string SemilatticeModel::format(const ModelElement& x) const {
  const auto& a = as<SemilatticeElement>(x, "semilattice");
  if (!a.part) return spec_.t.name(a.t);
  return "S" + std::to_string(*a.part + 1) + bracket(format_word(spec_.parts[*a.part], *a.word));
}

// ---------------------------------------------------------------------------
// Ideal extensions

IdealExtModel::IdealExtModel(const IdealExtensionSpec& spec) : spec_(spec) {}

std::size_t IdealExtModel::num_generators() const {
  return spec_.a1.num_states() + spec_.s2.size();
}

ModelElement IdealExtModel::generator(StateId q) const {
  if (q >= num_generators()) throw InputError("generator out of range");
  if (q < spec_.a1.num_states()) return IdealExtElement{Word{q}, 0};
  return IdealExtElement{std::nullopt, static_cast<Element>(q - spec_.a1.num_states())};
}

ModelElement IdealExtModel::multiply(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<IdealExtElement>(x, "ideal extension");
  const auto& b = as<IdealExtElement>(y, "ideal extension");
  if (a.word && b.word) return IdealExtElement{*a.word + *b.word, 0};
  if (a.word) {
    Element y2 = b.y;
    for (std::size_t i = a.word->size(); i-- > 0;) y2 = spec_.left[(*a.word)[i]][y2];
    return IdealExtElement{std::nullopt, y2};
  }
  if (b.word) {
    Element y2 = a.y;
    for (StateId q : *b.word) y2 = spec_.right[y2][q];
    return IdealExtElement{std::nullopt, y2};
  }
  return IdealExtElement{std::nullopt, spec_.s2.multiply(a.y, b.y)};
}

bool IdealExtModel::same(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<IdealExtElement>(x, "ideal extension");
  const auto& b = as<IdealExtElement>(y, "ideal extension");
  if (a.word.has_value() != b.word.has_value()) return false;
  if (!a.word) return a.y == b.y;
  return equal(spec_.a1, *a.word, *b.word).equal;
}

std::string IdealExtModel::format(const ModelElement& x) const {
  const auto& a = as<IdealExtElement>(x, "ideal extension");
  return a.word ? bracket(format_word(spec_.a1, *a.word)) : spec_.s2.name(a.y);
}

// ---------------------------------------------------------------------------
// S[X]

ActExtModel::ActExtModel(const ActExtensionSpec& spec) : spec_(spec) {}

std::size_t ActExtModel::num_generators() const {
  return spec_.a.num_states() + spec_.points.size();
}

ModelElement ActExtModel::generator(StateId q) const {
  if (q >= num_generators()) throw InputError("generator out of range");
  if (q < spec_.a.num_states()) return ActExtElement{Word{q}, 0};
  return ActExtElement{std::nullopt, static_cast<std::uint32_t>(q - spec_.a.num_states())};
}

ModelElement ActExtModel::multiply(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<ActExtElement>(x, "S[X]");
  const auto& b = as<ActExtElement>(y, "S[X]");
  if (a.word && b.word) return ActExtElement{*a.word + *b.word, 0};
  if (!b.word) return b;  // sx = x, xy = y
  std::uint32_t p = a.point;
  for (StateId q : *b.word) p = spec_.action[q][p];
  return ActExtElement{std::nullopt, p};
}

bool ActExtModel::same(const ModelElement& x, const ModelElement& y) const {
  const auto& a = as<ActExtElement>(x, "S[X]");
  const auto& b = as<ActExtElement>(y, "S[X]");
  if (a.word.has_value() != b.word.has_value()) return false;
  if (!a.word) return a.point == b.point;
  return equal(spec_.a, *a.word, *b.word).equal;
}

std::string ActExtModel::format(const ModelElement& x) const {
  const auto& a = as<ActExtElement>(x, "S[X]");
  return a.word ? bracket(format_word(spec_.a, *a.word)) : spec_.points[a.point];
}

// ---------------------------------------------------------------------------

OracleReport check_oracle_pairs(const MealyAutomaton& built, const Model& model,
                                const std::vector<std::pair<Word, Word>>& pairs) {
  if (built.num_states() != model.num_generators()) {
    throw InputError("model and automaton have different generator counts");
  }
  OracleReport report;
  for (const auto& [u, v] : pairs) {
    const bool by_automaton = equal(built, u, v).equal;
    const bool by_model = model.same(evaluate(model, u), evaluate(model, v));
    ++report.pairs_checked;
    if (by_automaton != by_model) {
      report.disagreement.emplace(u, v);
      report.automaton_says_equal = by_automaton;
      return report;
    }
  }
  return report;
}

OracleReport check_oracle_agreement(const MealyAutomaton& built, const Model& model,
                                    std::size_t max_length) {
  if (built.num_states() != model.num_generators()) {
    throw InputError("model and automaton have different generator counts");
  }
  const std::vector<Word> words = all_words(built.num_states(), max_length);
  std::vector<ModelElement> values;
  for (const Word& w : words) values.push_back(evaluate(model, w));
  OracleReport report;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      const bool by_automaton = equal(built, words[i], words[j]).equal;
      const bool by_model = model.same(values[i], values[j]);
      ++report.pairs_checked;
      if (by_automaton != by_model) {
        report.disagreement.emplace(words[i], words[j]);
        report.automaton_says_equal = by_automaton;
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

using Kind = FreeProductSymbol::Kind;

// Reads blocks from D[s1|t1]o D[s2|t2]o ... D[sk|tk] (or D[sk|-]), and the
// tablet dual with the T part first.
std::vector<Block> read_blocks(const std::vector<FreeProductSymbol>& symbols, const String& s,
                               Kind kind) {
  std::vector<Block> blocks;
  auto push = [&](int side, const std::optional<Element>& x) {
    if (x) blocks.push_back(Block{side, Word{*x}});
  };
  for (SymbolId c : s) {
    const FreeProductSymbol& x = symbols.at(c);
    if (x.kind != kind) throw std::logic_error("free product read-off met a symbol of the wrong kind");
    const bool last = !x.circled;
    if (kind == Kind::Domino) {
      push(0, x.s);
      push(1, x.t);
    } else {
      push(1, x.t);
      push(0, x.s);
    }
    if (last) break;
  }
  return blocks;
}

}  // namespace

FreeProductElement recover_reduced_word(const FreeProductFiniteSpec& spec,
                                        const MealyAutomaton& built, const Word& w) {
  const std::vector<FreeProductSymbol> symbols = free_product_finite_symbols(spec);
  if (built.num_symbols() != symbols.size() ||
      built.num_states() != spec.s.size() + spec.t.size()) {
    throw InputError("automaton does not match the free product data");
  }
  for (StateId q : w) {
    if (q >= built.num_states()) throw InputError("state out of range");
  }
  const SymbolId domino_blank = 0;
  const auto tablet_blank = static_cast<SymbolId>(1 + spec.s.size() + 2 * spec.s.size() * spec.t.size());
  const std::size_t length = 2 * w.size() + 2;
  auto image = [&](SymbolId blank) {
    return act_eventually_periodic(built, w, EventuallyPeriodicString{{}, {blank}}).unroll(length);
  };

  const bool starts_in_s = w[0] < spec.s.size();
  const String main = image(starts_in_s ? domino_blank : tablet_blank);
  const String other = image(starts_in_s ? tablet_blank : domino_blank);
  const Kind main_kind = starts_in_s ? Kind::Domino : Kind::Tablet;
  const Kind other_kind = starts_in_s ? Kind::Tablet : Kind::Domino;

  std::vector<Block> blocks = read_blocks(symbols, main, main_kind);
  const std::vector<Block> rest = read_blocks(symbols, other, other_kind);
  if (blocks.empty() || !std::equal(rest.begin(), rest.end(), blocks.begin() + 1, blocks.end())) {
    throw std::logic_error("free product read-off is inconsistent between the two strings");
  }
  return FreeProductElement{std::move(blocks)};
}

}  // namespace autsg
