// taulam: command-line front end.
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "taulam/json_io.hpp"
#include "taulam/laminations.hpp"
#include "taulam/suites.hpp"

using namespace taulam;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

// Exit status carriers.
struct ValidationFailure : std::runtime_error {
  explicit ValidationFailure(const std::string& msg, std::vector<std::string> ps = {})
      : std::runtime_error(msg), problems(std::move(ps)) {}
  std::vector<std::string> problems;
};
struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string triangulation, quiver, lamination, seed_file, format = "json";
  std::vector<std::string> words;
  std::string flips, path;
  std::string suite;
  int max_len = 7;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
};

bool color() {
  const char* c = std::getenv("TAULAM_COLOR");
  return c != nullptr && std::string(c) == "1";
}

// The fixture named on the command line, with everything derived from it.
struct Input {
  std::optional<LaminationBase> base;
  std::optional<Fringing> fringing;
  PolarizedQuiver quiver;

  const FringedQuiver& fq() const {
    if (base) return base->fq;
    if (!fq_) throw ValidationFailure("quiver file has no fringe block");
    return *fq_;
  }
  std::optional<FringedQuiver> fq_;
};

Input load(const Config& c, bool need_input = true) {
  Input in;
  if (!c.triangulation.empty()) {
    Triangulation t = triangulation_from_json(read_json_file(c.triangulation));
    auto rep = validate_triangulation(t);
    if (!rep.ok()) {
      std::ostringstream os;
      os << "invalid triangulation:";
      for (const auto& p : rep.problems) os << "\n  " << p;
      throw ValidationFailure(os.str(), rep.problems);
    }
    in.base.emplace(t);
    in.fringing = in.base->surface_quiver.fringing;
    in.quiver = in.fringing->base;
  } else if (!c.quiver.empty()) {
    QuiverFile qf = quiver_from_json(read_json_file(c.quiver));
    auto rep = qf.fringing ? validate_fringing(*qf.fringing) : qf.base.validate();
    if (!rep.ok()) {
      std::ostringstream os;
      os << "invalid quiver:";
      for (const auto& p : rep.problems) os << "\n  " << p;
      throw ValidationFailure(os.str(), rep.problems);
    }
    in.quiver = qf.base;
    in.fringing = qf.fringing;
    if (qf.fringing) in.fq_.emplace(*qf.fringing);
  } else if (need_input) {
    throw InputFailure("one of --triangulation or --quiver is required");
  }
  return in;
}

std::vector<int> parse_path(const std::string& text, size_t n) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int k = 0;
    try {
      k = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw InputFailure("bad index '" + item + "' in path");
    if (k < 1 || static_cast<size_t>(k) > n)
      throw ValidationFailure("path index " + std::to_string(k) + " out of range 1.." + std::to_string(n));
    out.push_back(k - 1);
  }
  return out;
}

// A decorated word; without " | " the first admissible decoration is used.
DecoratedWord read_word(const SkewedQuiver& sq, const std::string& text) {
  DecoratedWord d;
  if (text.find(" | ") != std::string::npos) {
    d = parse_decorated(sq, text);
  } else {
    d.x = parse_word(sq.hat, text);
    d.s = decorations_for(type_of(sq, d.x)).front();
  }
  if (!is_valid_decorated(sq, d)) throw ValidationFailure("not a decorated admissible word: " + text);
  return d;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

int cmd_validate(const Config& c) {
  Json out;
  try {
    Input in = load(c);
    out["valid"] = true;
    out["problems"] = Json::array();
    if (in.fringing) out["quiver"] = fringing_to_json(*in.fringing);
    else out["quiver"] = quiver_to_json(in.quiver);
    if (in.base) out["arcs"] = in.base->arcs;
  } catch (const ValidationFailure& e) {
    out["valid"] = false;
    out["problems"] = e.problems.empty() ? Json::array({e.what()}) : Json(e.problems);
    emit(out);
    return 1;
  }
  emit(out);
  return 0;
}

int cmd_enum(const Config& c) {
  Input in = load(c);
  const FringedQuiver& fq = in.fq();
  auto adm = enumerate_admissible(fq.base, c.max_len);
  auto classes = enumerate_decorated_classes(fq.base, c.max_len);
  Json rows = Json::array();
  for (const auto& d : classes) {
    if (!is_tau_generic(fq, d)) continue;
    rows.push_back({{"class", format_decorated(fq.base, d)},
                    {"g", g_Q(fq, d)},
                    {"dim", dim_vector(fq.base, d)}});
  }
  if (c.format == "tsv") {
    std::cout << "class\tg\tdim\n";
    for (const auto& r : rows)
      std::cout << r["class"].get<std::string>() << "\t" << join(r["g"].get<std::vector<int>>())
                << "\t" << join(r["dim"].get<std::vector<int>>()) << "\n";
    return 0;
  }
  Json out;
  out["max_len"] = c.max_len;
  out["admissible_strings"] = adm.strings.size();
  out["admissible_bands"] = adm.bands.size();
  out["decorated_classes"] = classes.size();
  out["tau_generic_classes"] = rows.size();
  out["classes"] = rows;
  emit(out);
  return 0;
}

int cmd_einv(const Config& c) {
  Input in = load(c);
  const FringedQuiver& fq = in.fq();
  if (c.words.size() > 2) throw InputFailure("einv takes at most two --word values");
  if (!c.words.empty()) {
    DecoratedWord a = read_word(fq.base, c.words[0]);
    DecoratedWord b = c.words.size() == 2 ? read_word(fq.base, c.words[1]) : a;
    emit({{"a", format_decorated(fq.base, a)},
          {"b", format_decorated(fq.base, b)},
          {"e", e_Q(fq, a, b)}});
    return 0;
  }
  auto classes = enumerate_decorated_classes(fq.base, c.max_len);
  size_t n = classes.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  // Rows are independent; each thread takes every jobs-th row.
  int jobs = std::max(1, c.jobs);
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < n; i += jobs)
        for (size_t j = 0; j < n; ++j) table[i][j] = e_Q(fq, classes[i], classes[j]);
    });
  for (auto& th : pool) th.join();
  std::vector<std::string> keys;
  for (const auto& d : classes) keys.push_back(format_decorated(fq.base, d));
  if (c.format == "tsv") {
    for (size_t i = 0; i < n; ++i) std::cout << keys[i] << "\t" << join(table[i]) << "\n";
    return 0;
  }
  emit({{"classes", keys}, {"e", table}});
  return 0;
}

int cmd_gvec(const Config& c) {
  Input in = load(c);
  const FringedQuiver& fq = in.fq();
  std::vector<DecoratedWord> ds;
  if (!c.words.empty()) {
    for (const auto& w : c.words) ds.push_back(read_word(fq.base, w));
  } else {
    ds = enumerate_decorated_classes(fq.base, c.max_len);
  }
  Json rows = Json::array();
  for (const auto& d : ds)
    rows.push_back({{"class", format_decorated(fq.base, d)},
                    {"g", g_Q(fq, d)},
                    {"dim", dim_vector(fq.base, d)},
                    {"tau_generic", is_tau_generic(fq, d)}});
  if (c.format == "tsv") {
    std::cout << "class\tg\tdim\ttau_generic\n";
    for (const auto& r : rows)
      std::cout << r["class"].get<std::string>() << "\t" << join(r["g"].get<std::vector<int>>()) << "\t" << join(r["dim"].get<std::vector<int>>())
                << "\t" << (r["tau_generic"].get<bool>() ? 1 : 0) << "\n";
    return 0;
  }
  std::vector<std::string> index;
  for (const auto& g : gabriel_vertices(fq.base.base)) index.push_back(format_gabriel(fq.base.base, g));
  emit({{"index", index}, {"classes", rows}});
  return 0;
}

int cmd_shear(const Config& c) {
  if (c.triangulation.empty()) throw InputFailure("shear needs --triangulation");
  if (c.lamination.empty()) throw InputFailure("shear needs --lamination");
  Input in = load(c);
  auto mults = lamination_from_json(read_json_file(c.lamination));
  int len = c.max_len;
  for (const auto& [k, m] : mults) len = std::max(len, static_cast<int>(std::count(k.begin(), k.end(), ' ')) + 2);
  LaminationSpace sp(*in.base, len);
  Lamination l;
  try {
    l = sp.from_multiplicities(mults);
  } catch (const LaminationError& e) {
    throw ValidationFailure(e.what());
  }
  auto path = parse_path(c.flips, in.base->arcs.size());
  IntVector v = sp.shear_at(l, path);
  if (c.format == "tsv") {
    for (size_t i = 0; i < v.size(); ++i) std::cout << in.base->arcs[i] << "\t" << v[i] << "\n";
    return 0;
  }
  std::vector<int> shown;
  for (int k : path) shown.push_back(k + 1);
  emit({{"index", in.base->arcs}, {"flips", shown}, {"shear", v}});
  return 0;
}

int cmd_mutate(const Config& c) {
  if (c.seed_file.empty()) throw InputFailure("mutate needs --seed <seed.json>");
  Seed s = seed_from_json(read_json_file(c.seed_file));
  Seed t = transport(s, parse_path(c.path, s.index.size()));
  if (c.format == "tsv") {
    for (size_t i = 0; i < t.beta.size(); ++i) std::cout << t.index[i] << "\t" << join(t.beta[i]) << "\n";
    for (const auto& [k, r] : t.rows) std::cout << k << "\t" << join(r) << "\n";
    return 0;
  }
  emit(seed_to_json(t));
  return 0;
}

int cmd_check(const Config& c) {
  SuiteReport r;
  if (c.suite == "krs") {
    r = krs_suite(c.seed);
  } else if (c.suite == "mutation") {
    r = mutation_suite();
  } else if (c.suite == "hansper") {
    Input in = load(c);
    r = hansper_suite(SkewedQuiver(in.quiver), c.max_len);
  } else {
    if (c.triangulation.empty()) throw InputFailure("suite shear needs --triangulation");
    Input in = load(c);
    r = shear_suite(*in.base, c.max_len);
  }
  if (c.format == "tsv") {
    bool col = color();
    for (const auto& ch : r.checks) {
      std::string tag = ch.passed ? "PASS" : "FAIL";
      if (col) tag = (ch.passed ? "\033[32m" : "\033[31m") + tag + "\033[0m";
      std::cout << tag << "\t" << ch.name << "\t" << ch.checked << "\n";
      for (const auto& f : ch.failures) std::cout << "\t" << f << "\n";
    }
  } else {
    emit(report_to_json(r));
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word combinatorics, invariants and shear coordinates for skewed-gentle algebras"};
  app.require_subcommand(1);
  Config c;

  auto add_input = [&](CLI::App* s) {
    s->add_option("--triangulation", c.triangulation, "triangulation JSON");
    s->add_option("--quiver", c.quiver, "quiver JSON, optionally with a fringe block");
  };
  auto add_common = [&](CLI::App* s) {
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
    s->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  };
  auto add_len = [&](CLI::App* s) {
    s->add_option("--max-len", c.max_len, "word length bound")->check(CLI::Range(2, 64));
  };

  auto* validate = app.add_subcommand("validate", "validate a triangulation or quiver");
  add_input(validate);
  add_common(validate);

  auto* en = app.add_subcommand("enum", "list tau-generic decorated classes");
  add_input(en);
  add_common(en);
  add_len(en);

  auto* einv = app.add_subcommand("einv", "E-invariant of two words, or the full table");
  add_input(einv);
  add_common(einv);
  add_len(einv);
  einv->add_option("--word", c.words, "decorated word 'x | s' (repeatable)");

  auto* gvec = app.add_subcommand("gvec", "g-vectors and dimension vectors");
  add_input(gvec);
  add_common(gvec);
  add_len(gvec);
  gvec->add_option("--word", c.words, "decorated word 'x | s' (repeatable)");

  auto* shear = app.add_subcommand("shear", "shear coordinates of a lamination");
  add_input(shear);
  add_common(shear);
  add_len(shear);
  shear->add_option("--lamination", c.lamination, "lamination JSON");
  shear->add_option("--flips", c.flips, "comma-separated 1-based flip sequence");

  auto* mutate = app.add_subcommand("mutate", "transport a seed along a mutation path");
  add_common(mutate);
  mutate->add_option("--seed", c.seed_file, "seed JSON")->required();
  mutate->add_option("--path", c.path, "comma-separated 1-based indices");

  auto* check = app.add_subcommand("check", "run a verification suite");
  add_input(check);
  add_common(check);
  add_len(check);
  check->add_option("--suite", c.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"krs", "hansper", "mutation", "shear"}));
  check->add_option("--seed", c.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*validate) return cmd_validate(c);
    if (*en) return cmd_enum(c);
    if (*einv) return cmd_einv(c);
    if (*gvec) return cmd_gvec(c);
    if (*shear) return cmd_shear(c);
    if (*mutate) return cmd_mutate(c);
    if (*check) return cmd_check(c);
  } catch (const ValidationFailure& e) {
    std::cerr << "taulam: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "taulam: word: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "taulam: " << e.what() << "\n";
    return 2;
  } catch (const InputFailure& e) {
    std::cerr << "taulam: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "taulam: json: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    // Semantic errors from the library: invalid words, bad indices, unknown ids.
    std::cerr << "taulam: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
