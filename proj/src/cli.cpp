#include "autsg/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "autsg/constructions.hpp"
#include "autsg/io.hpp"
#include "autsg/oracles.hpp"
#include "autsg/word_problem.hpp"
#include "text.hpp"

namespace autsg {

namespace {

MealyAutomaton load_automaton(const std::string& path) {
  try {
    return parse_automaton(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

FiniteSemigroup load_semigroup(const std::string& path) {
  try {
    return parse_semigroup(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// Map file with single-token values, keyed by joined key tokens.
class KeyedMap {
 public:
  explicit KeyedMap(const std::string& path) : path_(path) {
    try {
      for (auto& e : parse_map(read_file(path))) {
        std::string key;
        for (const auto& k : e.key) key += (key.empty() ? "" : " ") + k;
        if (e.value.size() != 1) throw ParseError(e.line, "expected a single value");
        entries_[key] = {e.value[0], e.line};
      }
    } catch (const ParseError& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  const std::string& at(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) throw InputError(path_ + ": no entry for '" + key + "'");
    used_.insert(key);
    return it->second.first;
  }

  /// Rejects entries never looked up.
  void check_all_used() const {
    for (const auto& [key, value] : entries_) {
      if (!used_.count(key)) {
        throw InputError(path_ + ": line " + std::to_string(value.second) + ": unknown key '" + key + "'");
      }
    }
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::map<std::string, std::pair<std::string, std::size_t>> entries_;
  mutable std::set<std::string> used_;
};

template <typename Lookup>
auto resolve(const KeyedMap& m, const std::string& key, Lookup lookup) {
  const std::string& value = m.at(key);
  try {
    return lookup(value);
  } catch (const InputError& e) {
    throw InputError(m.path() + ": entry '" + key + "': " + e.what());
  }
}

std::vector<std::string> names_of(const std::string& text) {
  auto t = detail::tokenize(text);
  if (t.empty()) throw InputError("empty name list");
  return t;
}

// ---------------------------------------------------------------------------
// Constructions shared by build and oracle-check

struct Built {
  BuiltAutomaton built;
  std::unique_ptr<Model> model;  // null when the construction has no oracle
  std::vector<std::string> provenance;
};

struct ConstructionArgs {
  std::vector<std::string> files;
  std::string e, f, identity, zero, i_names, lambda_names, matrix, left_mult, left, right, points,
      action;
  std::vector<std::string> parts, homs;
  bool asserted = false;
  std::size_t n = 2;
  std::string output;
  std::size_t length = 2;
};

struct Construction {
  std::string name;
  std::string help;
  std::size_t files;
  std::function<void(CLI::App*, ConstructionArgs&)> options;
  std::function<Built(const ConstructionArgs&)> build;
};

std::vector<std::string> describe(const std::string& name, const ConstructionArgs& a) {
  std::vector<std::string> p{"construction: " + name};
  std::string inputs;
  for (const auto& f : a.files) inputs += " " + f;
  if (!inputs.empty()) p.push_back("inputs:" + inputs);
  auto add = [&](const std::string& k, const std::string& v) {
    if (!v.empty()) p.push_back(k + ": " + v);
  };
  add("e", a.e);
  add("f", a.f);
  add("identity", a.identity);
  add("zero", a.zero);
  add("I", a.i_names);
  add("Lambda", a.lambda_names);
  add("matrix", a.matrix);
  add("left-mult", a.left_mult);
  add("left", a.left);
  add("right", a.right);
  add("points", a.points);
  add("action", a.action);
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    p.push_back("part: " + a.parts[i] + (i < a.homs.size() ? " hom " + a.homs[i] : ""));
  }
  if (a.asserted) p.push_back("hypothesis: asserted");
  return p;
}

Built plain(MealyAutomaton a) { return Built{BuiltAutomaton{std::move(a), true, {}}, nullptr, {}}; }

std::vector<Construction> constructions() {
  std::vector<Construction> c;

  c.push_back({"free-product-finite", "Free product of two finite semigroups", 2,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--e", a.e, "idempotent of S")->required();
                 app->add_option("--f", a.f, "idempotent of T")->required();
               },
               [](const ConstructionArgs& a) {
                 FreeProductFiniteSpec spec{load_semigroup(a.files[0]), load_semigroup(a.files[1]), 0, 0};
                 spec.e = spec.s.element(a.e);
                 spec.f = spec.t.element(a.f);
                 Built b = plain(free_product_finite(spec));
                 b.model = std::make_unique<FreeProductModel>(spec);
                 return b;
               }});

  c.push_back({"free-product", "Free product of two automaton semigroups", 2,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--e", a.e, "state of A1")->required();
                 app->add_option("--f", a.f, "state of A2")->required();
                 app->add_flag("--asserted", a.asserted, "assert the hypothesis on e and f without checking");
               },
               [](const ConstructionArgs& a) {
                 FreeProductGeneralSpec spec{load_automaton(a.files[0]), load_automaton(a.files[1]), 0, 0,
                                             a.asserted ? HypothesisMode::Asserted
                                                        : HypothesisMode::IdempotentVerified};
                 spec.e = spec.a1.state(a.e);
                 spec.f = spec.a2.state(a.f);
                 Built b{free_product_general(spec), std::make_unique<FreeProductModel>(spec), {}};
                 return b;
               }});

  c.push_back({"wreath", "Wreath product of an automaton monoid and a finite monoid", 2,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--identity", a.identity, "identity state of A");
               },
               [](const ConstructionArgs& a) {
                 WreathSpec spec{load_automaton(a.files[0]), std::nullopt, load_semigroup(a.files[1])};
                 if (!a.identity.empty()) spec.identity = spec.a.state(a.identity);
                 return Built{wreath_product(spec), std::make_unique<WreathModel>(spec), {}};
               }});

  c.push_back({"rees", "Rees matrix semigroup over an automaton monoid", 1,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--identity", a.identity, "identity state of A")->required();
                 app->add_option("--I", a.i_names, "index names, space separated")->required();
                 app->add_option("--Lambda", a.lambda_names, "index names, space separated")->required();
                 app->add_option("--matrix", a.matrix, "map file 'lambda i -> state'")->required();
                 app->add_option("--left-mult", a.left_mult, "map file 'entry x -> y'");
               },
               [](const ConstructionArgs& a) {
                 ReesSpec spec{load_automaton(a.files[0]), 0, {}, {}, {}, {}};
                 spec.identity = spec.a.state(a.identity);
                 spec.i_names = names_of(a.i_names);
                 spec.lambda_names = names_of(a.lambda_names);
                 auto state = [&](const std::string& n) { return spec.a.state(n); };
                 const KeyedMap matrix(a.matrix);
                 for (const auto& l : spec.lambda_names) {
                   std::vector<StateId> row;
                   for (const auto& i : spec.i_names) row.push_back(resolve(matrix, l + " " + i, state));
                   spec.p.push_back(std::move(row));
                 }
                 matrix.check_all_used();
                 if (!a.left_mult.empty()) {
                   for (const auto& e : parse_map(read_file(a.left_mult))) {
                     if (e.key.size() != 2 || e.value.size() != 1) {
                       throw ParseError(e.line, a.left_mult + ": expected 'entry x -> y'");
                     }
                     spec.left_mult[{state(e.key[0]), state(e.key[1])}] = state(e.value[0]);
                   }
                 }
                 Built b = plain(rees_matrix(spec));
                 b.model = std::make_unique<ReesModel>(spec);
                 return b;
               }});

  c.push_back({"semilattice", "Strong semilattice of automaton semigroups over a finite T", 1,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--zero", a.zero, "right zero of T")->required();
                 app->add_option("--part", a.parts, "automaton file of a part (repeatable)")->required();
                 app->add_option("--hom", a.homs, "map file 'state -> element' (one per part)")->required();
               },
               [](const ConstructionArgs& a) {
                 if (a.parts.size() != a.homs.size()) throw InputError("each --part needs one --hom");
                 SemilatticeSpec spec{{}, load_semigroup(a.files[0]), 0, {}};
                 spec.z = spec.t.element(a.zero);
                 for (std::size_t i = 0; i < a.parts.size(); ++i) {
                   spec.parts.push_back(load_automaton(a.parts[i]));
                   const KeyedMap hom(a.homs[i]);
                   std::vector<Element> image;
                   for (const auto& q : spec.parts.back().state_names()) {
                     image.push_back(resolve(hom, q, [&](const std::string& n) { return spec.t.element(n); }));
                   }
                   hom.check_all_used();
                   spec.homs.push_back(std::move(image));
                 }
                 Built b = plain(strong_semilattice(spec));
                 b.model = std::make_unique<SemilatticeModel>(spec);
                 return b;
               }});

  c.push_back({"ideal-ext", "Ideal extension of a finite semigroup by an automaton semigroup", 2,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--zero", a.zero, "right zero of S2")->required();
                 app->add_option("--left", a.left, "map file 'q y -> qy'")->required();
                 app->add_option("--right", a.right, "map file 'y q -> yq'")->required();
               },
               [](const ConstructionArgs& a) {
                 IdealExtensionSpec spec{load_automaton(a.files[0]), load_semigroup(a.files[1]), 0, {}, {}};
                 spec.z = spec.s2.element(a.zero);
                 auto element = [&](const std::string& n) { return spec.s2.element(n); };
                 const KeyedMap left(a.left), right(a.right);
                 for (const auto& q : spec.a1.state_names()) {
                   std::vector<Element> row;
                   for (const auto& y : spec.s2.names()) row.push_back(resolve(left, q + " " + y, element));
                   spec.left.push_back(std::move(row));
                 }
                 for (const auto& y : spec.s2.names()) {
                   std::vector<Element> row;
                   for (const auto& q : spec.a1.state_names()) row.push_back(resolve(right, y + " " + q, element));
                   spec.right.push_back(std::move(row));
                 }
                 left.check_all_used();
                 right.check_all_used();
                 Built b = plain(ideal_extension(spec));
                 b.model = std::make_unique<IdealExtModel>(spec);
                 return b;
               }});

  c.push_back({"sx", "Adjoin a right act X of an automaton semigroup", 1,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--points", a.points, "point names, space separated")->required();
                 app->add_option("--action", a.action, "map file 'q x -> x^q'")->required();
               },
               [](const ConstructionArgs& a) {
                 ActExtensionSpec spec{load_automaton(a.files[0]), names_of(a.points), {}};
                 const KeyedMap action(a.action);
                 auto point = [&](const std::string& n) {
                   auto it = std::find(spec.points.begin(), spec.points.end(), n);
                   if (it == spec.points.end()) throw InputError("unknown point '" + n + "'");
                   return static_cast<std::uint32_t>(it - spec.points.begin());
                 };
                 for (const auto& q : spec.a.state_names()) {
                   std::vector<std::uint32_t> row;
                   for (const auto& x : spec.points) row.push_back(resolve(action, q + " " + x, point));
                   spec.action.push_back(std::move(row));
                 }
                 action.check_all_used();
                 Built b = plain(act_extension(spec));
                 b.model = std::make_unique<ActExtModel>(spec);
                 return b;
               }});

  c.push_back({"adjoin-zero", "Adjoin a zero state", 1, [](CLI::App*, ConstructionArgs&) {},
               [](const ConstructionArgs& a) { return plain(adjoin_zero(load_automaton(a.files[0]))); }});
  c.push_back({"adjoin-identity", "Adjoin an identity state", 1, [](CLI::App*, ConstructionArgs&) {},
               [](const ConstructionArgs& a) { return plain(adjoin_identity(load_automaton(a.files[0]))); }});
  c.push_back({"product", "Direct product of two automata", 2, [](CLI::App*, ConstructionArgs&) {},
               [](const ConstructionArgs& a) {
                 return plain(direct_product(load_automaton(a.files[0]), load_automaton(a.files[1])));
               }});
  c.push_back({"power", "Direct power of an automaton", 1,
               [](CLI::App* app, ConstructionArgs& a) {
                 app->add_option("--n", a.n, "exponent")->required()->check(CLI::PositiveNumber);
               },
               [](const ConstructionArgs& a) { return plain(direct_power(load_automaton(a.files[0]), a.n)); }});
  return c;
}

struct Registered {
  const Construction* construction;
  CLI::App* app;
  std::unique_ptr<ConstructionArgs> args;
};

std::vector<Registered> register_constructions(CLI::App* parent, const std::vector<Construction>& list,
                                               bool with_output) {
  std::vector<Registered> out;
  for (const auto& c : list) {
    auto args = std::make_unique<ConstructionArgs>();
    CLI::App* sub = parent->add_subcommand(c.name, c.help);
    sub->add_option("inputs", args->files, "input files")->required()->expected(static_cast<int>(c.files));
    c.options(sub, *args);
    if (with_output) {
      sub->add_option("-o,--output", args->output, "output file (default stdout)");
    } else {
      sub->add_option("--length", args->length, "maximum word length")->check(CLI::PositiveNumber);
    }
    out.push_back({&c, sub, std::move(args)});
  }
  return out;
}

Built run_construction(const Registered& r) {
  Built b = r.construction->build(*r.args);
  b.provenance = describe(r.construction->name, *r.args);
  for (const auto& n : b.built.notes) b.provenance.push_back("note: " + n);
  return b;
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

EventuallyPeriodicString parse_periodic(const MealyAutomaton& a, const std::string& text) {
  const auto tokens = detail::tokenize(text);
  auto colon = std::find(tokens.begin(), tokens.end(), ":");
  EventuallyPeriodicString s;
  if (colon == tokens.end()) {
    // prefix:period written without spaces around a single colon
    const auto pos = text.find(':');
    if (pos == std::string::npos) throw InputError("periodic string needs 'prefix : period'");
    s.prefix = parse_string(a, text.substr(0, pos));
    s.period = parse_string(a, text.substr(pos + 1));
  } else {
    for (auto it = tokens.begin(); it != colon; ++it) s.prefix.push_back(a.symbol(*it));
    for (auto it = colon + 1; it != tokens.end(); ++it) s.period.push_back(a.symbol(*it));
  }
  if (s.period.empty()) throw InputError("period must be nonempty");
  return s;
}

Valuation load_valuation(const MealyAutomaton& a, const std::string& path) {
  const KeyedMap map(path);
  Valuation nu;
  for (const auto& q : a.state_names()) {
    nu.push_back(resolve(map, q, [](const std::string& v) -> std::optional<std::uint64_t> {
      if (v == "z!") return std::nullopt;
      std::size_t used = 0;
      unsigned long long x = 0;
      try {
        x = std::stoull(v, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != v.size() || v.empty() || v[0] == '-') throw InputError("expected a natural number or z!");
      return x;
    }));
  }
  map.check_all_used();
  return nu;
}

std::string join_sizes(const std::vector<std::size_t>& xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  // oracle-check --construction NAME ...  ==  oracle-check NAME ...
  std::vector<std::string> args = raw_args;
  if (!args.empty() && args[0] == "oracle-check") {
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--construction" && i + 1 < args.size()) {
        const std::string name = args[i + 1];
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        args.insert(args.begin() + 1, name);
        break;
      }
      if (args[i].rfind("--construction=", 0) == 0) {
        const std::string name = args[i].substr(15);
        args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
        args.insert(args.begin() + 1, name);
        break;
      }
    }
  }

  CLI::App app{"Automaton semigroup toolkit", "autsg"};
  app.require_subcommand(1);
  const std::vector<Construction> list = constructions();

  std::string file, file2, u, v, string_arg, periodic_arg, output, state, zero, valuation;
  std::size_t radius = 0, depth = 0;
  bool growth = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check an automaton, semigroup or map file");
  validate_cmd->add_option("file", file)->required();

  auto* build_cmd = app.add_subcommand("build", "Build a construction");
  build_cmd->require_subcommand(1);
  build_cmd->add_option("-o,--output", output, "output file (default stdout)");
  auto builders = register_constructions(build_cmd, list, true);

  auto* eq_cmd = app.add_subcommand("eq", "Decide whether two words are equal");
  eq_cmd->add_option("automaton", file)->required();
  eq_cmd->add_option("u", u)->required();
  eq_cmd->add_option("v", v)->required();

  auto* act_cmd = app.add_subcommand("act", "Image of a string under a word");
  act_cmd->add_option("automaton", file)->required();
  act_cmd->add_option("word", u)->required();
  auto* string_opt = act_cmd->add_option("--string", string_arg, "finite string");
  auto* periodic_opt = act_cmd->add_option("--periodic", periodic_arg, "'prefix : period'");
  string_opt->excludes(periodic_opt);
  act_cmd->add_option("--depth", depth, "also print the first N symbols of a periodic image");

  auto* ball_cmd = app.add_subcommand("ball", "Elements of length at most the radius");
  ball_cmd->add_option("automaton", file)->required();
  ball_cmd->add_option("--radius", radius)->required();
  ball_cmd->add_flag("--growth", growth, "print only the growth counts");

  auto* minimize_cmd = app.add_subcommand("minimize", "Quotient by behavioural equivalence");
  minimize_cmd->add_option("automaton", file)->required();
  minimize_cmd->add_option("-o,--output", output);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  dot_cmd->add_option("automaton", file)->required();
  dot_cmd->add_option("-o,--output", output);

  auto* periodic_cmd = app.add_subcommand("periodic", "Exponents m < n with q^m = q^n");
  periodic_cmd->add_option("automaton", file)->required();
  periodic_cmd->add_option("--state", state)->required();
  periodic_cmd->add_option("--zero", zero)->required();

  auto* refute_cmd = app.add_subcommand("refute", "Refute a claimed embedding into N^0");
  refute_cmd->add_option("automaton", file)->required();
  refute_cmd->add_option("--valuation", valuation, "map file 'state -> n' or 'state -> z!'")->required();

  auto* oracle_cmd = app.add_subcommand("oracle-check", "Compare eq against the construction's model");
  oracle_cmd->require_subcommand(1);
  auto oracles = register_constructions(oracle_cmd, list, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (validate_cmd->parsed()) {
      const std::string text = read_file(file);
      const auto first = text.find_first_not_of(" \t\r\n");
      const std::string head = first == std::string::npos ? "" : text.substr(first, text.find('\n', first) - first);
      if (head.rfind("mealy", 0) == 0) {
        const auto a = parse_automaton(text);
        out << "valid automaton: " << a.num_states() << " states, " << a.num_symbols() << " symbols\n";
      } else if (head.rfind("semigroup", 0) == 0) {
        const auto s = parse_semigroup(text);
        out << "valid semigroup: " << s.size() << " elements\n";
      } else if (head.rfind("map", 0) == 0) {
        out << "valid map: " << parse_map(text).size() << " entries\n";
      } else {
        throw ParseError(1, "unknown file header");
      }
      return 0;
    }
    if (build_cmd->parsed()) {
      for (const auto& r : builders) {
        if (!r.app->parsed()) continue;
        const Built b = run_construction(r);
        emit(out, r.args->output.empty() ? output : r.args->output,
             serialize_automaton(b.built.automaton, b.provenance));
        for (const auto& n : b.built.notes) err << "note: " << n << "\n";
      }
      return 0;
    }
    if (eq_cmd->parsed()) {
      const auto a = load_automaton(file);
      require_valid(a);
      const Word wu = parse_word(a, u), wv = parse_word(a, v);
      const Equality r = equal(a, wu, wv);
      if (r.equal) {
        out << "equal\n";
        return 0;
      }
      out << "not equal\n";
      out << "witness: " << format_string(a, *r.witness) << "\n";
      out << "u: " << format_string(a, act(a, wu, *r.witness)) << "\n";
      out << "v: " << format_string(a, act(a, wv, *r.witness)) << "\n";
      return 1;
    }
    if (act_cmd->parsed()) {
      const auto a = load_automaton(file);
      require_valid(a);
      const Word w = parse_word(a, u);
      if (string_opt->count()) {
        if (depth) throw InputError("--depth applies to --periodic only");
        out << format_string(a, act(a, w, parse_string(a, string_arg))) << "\n";
        return 0;
      }
      if (!periodic_opt->count()) throw InputError("act needs --string or --periodic");
      const auto image = act_eventually_periodic(a, w, parse_periodic(a, periodic_arg));
      out << format_string(a, image.prefix) << (image.prefix.empty() ? ": " : " : ")
          << format_string(a, image.period) << "\n";
      if (depth) out << format_string(a, image.unroll(depth)) << "\n";
      return 0;
    }
    if (ball_cmd->parsed()) {
      const auto a = load_automaton(file);
      require_valid(a);
      const Ball b = ball(a, radius);
      if (growth) {
        out << join_sizes(b.growth) << "\n";
        return 0;
      }
      out << b.representatives.size() << " elements; growth " << join_sizes(b.growth) << "\n";
      for (const auto& w : b.representatives) out << format_word(a, w) << "\n";
      return 0;
    }
    if (minimize_cmd->parsed()) {
      const auto a = load_automaton(file);
      require_valid(a);
      const Minimization m = minimize(a);
      emit(out, output, serialize_automaton(m.automaton, {"minimized from " + file}));
      return 0;
    }
    if (dot_cmd->parsed()) {
      const auto a = load_automaton(file);
      require_valid(a);
      emit(out, output, export_dot(a));
      return 0;
    }
    if (periodic_cmd->parsed()) {
      const auto a = load_automaton(file);
      require_valid(a);
      const auto r = periodic_by_recursion(a, a.state(state), a.state(zero));
      if (!r) {
        out << "not verified\n";
        return 1;
      }
      out << "m " << r->first << " n " << r->second << "\n";
      return 0;
    }
    if (refute_cmd->parsed()) {
      const auto a = load_automaton(file);
      require_valid(a);
      const RefutationWitness w = refute_n0_valuation(a, load_valuation(a, valuation));
      out << to_string(w.kind) << "\n";
      auto sum = [](const std::optional<std::uint64_t>& s) { return s ? std::to_string(*s) : std::string("z!"); };
      if (w.kind == RefutationKind::NotHom) {
        out << "u: " << format_word(a, w.words[0]) << " (value " << sum(w.sum_u) << ")\n";
        out << "v: " << format_word(a, w.words[1]) << " (value " << sum(w.sum_v) << ")\n";
        out << (w.words_equal ? "u = v" : "u != v") << "\n";
      } else if (w.kind == RefutationKind::Periodic) {
        out << "w: " << format_word(a, w.words[0]) << "\n";
        out << "m " << w.m << " n " << w.n << "\n";
      }
      if (!w.diagnostic.empty()) out << w.diagnostic << "\n";
      return w.kind == RefutationKind::Inconclusive ? 1 : 0;
    }
    if (oracle_cmd->parsed()) {
      for (const auto& r : oracles) {
        if (!r.app->parsed()) continue;
        const Built b = run_construction(r);
        if (!b.model) throw InputError("no model for construction '" + r.construction->name + "'");
        const OracleReport rep = check_oracle_agreement(b.built.automaton, *b.model, r.args->length);
        out << "pairs checked: " << rep.pairs_checked << "\n";
        if (!rep.disagreement) {
          out << "agree\n";
          return 0;
        }
        const auto& [x, y] = *rep.disagreement;
        const MealyAutomaton& a = b.built.automaton;
        out << "disagree: " << format_word(a, x) << " vs " << format_word(a, y) << "\n";
        out << "automaton: " << (rep.automaton_says_equal ? "equal" : "not equal") << "\n";
        out << "model: " << b.model->format(evaluate(*b.model, x)) << " vs "
            << b.model->format(evaluate(*b.model, y)) << "\n";
        return 1;
      }
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace autsg
