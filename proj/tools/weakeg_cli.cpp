// weakeg: reduced words, Coxeter-Knuth classes, drop/lift, insertion,
// Schubert and Stanley expansions, and the exhaustive verifier.

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "weakeg/coxeter_knuth.hpp"
#include "weakeg/drop_lift.hpp"
#include "weakeg/expansions.hpp"
#include "weakeg/insertion.hpp"
#include "weakeg/io.hpp"
#include "weakeg/verify.hpp"

using namespace weakeg;

namespace {

enum class Format { text, json, latex };

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Permutation parse_permutation(const std::string& s) {
  try {
    return Permutation::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad permutation: ") + e.what());
  }
}

// "3,6,4,7", "(3,6,4,7)" or, for single-digit letters, "3647".
ReducedWord parse_word(const std::string& s) {
  try {
    const bool digits = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    if (digits && s.size() > 1) {
      std::vector<Letter> w;
      for (char c : s) w.push_back(c - '0');
      return ReducedWord(w);
    }
    return ReducedWord::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad word: ") + e.what());
  }
}

ReducedWord parse_reduced_word(const std::string& s) {
  auto rho = parse_word(s);
  for (Letter x : rho.letters())
    if (x < 1) throw UsageError("letters must be positive: " + rho.str());
  if (!is_reduced(rho)) throw UsageError("not a reduced word: " + rho.str());
  return rho;
}

// Rows bottom to top, indexed from 1, so empty rows keep their place.
Tableau rows_tableau(const IncreasingRows& t) {
  std::map<int, Tableau::Row> rows;
  for (std::size_t i = 0; i < t.rows.size(); ++i) rows[static_cast<int>(i) + 1] = t.rows[i];
  return Tableau::key(rows);
}

std::string render(const Tableau& t, Format f) {
  if (f == Format::latex) return to_latex(t);
  if (f == Format::json) return to_json(t).dump() + "\n";
  return t.str();
}

std::string weak_str(const MaybeVirtual& a) { return to_string(a); }

int cmd_words(const std::string& arg, Format f) {
  auto words = reduced_words(parse_permutation(arg));
  std::sort(words.begin(), words.end(), LengthLex{});
  if (f == Format::json) {
    Json out = Json::array();
    for (const auto& rho : words) out.push_back(to_json(rho));
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& rho : words) std::cout << rho.str() << "\n";
  }
  return kOk;
}

int cmd_classes(const std::string& arg, Format f) {
  const auto w = parse_permutation(arg);
  const int n = schubert_variables(w);
  Json out = Json::array();
  for (const auto& cls : ck_classes(w)) {
    const auto& rep = cls.front();
    const auto shape = eg_correspondence(rep).insertion.row_lengths();
    const auto yam = lift_canonical(drop_full(rep));
    const auto key = weak_descent_composition(yam, n);
    if (f == Format::json) {
      Json words = Json::array();
      for (const auto& rho : cls) words.push_back(to_json(rho));
      out.push_back(Json{{"words", words}, {"schur", shape}, {"demazure", to_json(key)}});
    } else {
      std::cout << "class size " << cls.size() << "  schur " << Partition(shape).str() << "  demazure "
                << weak_str(key) << "\n";
      for (const auto& rho : cls) std::cout << "  " << rho.str() << "\n";
    }
  }
  if (f == Format::json) std::cout << out.dump() << "\n";
  return kOk;
}

struct ChainStep {
  std::string label;
  IncreasingRows rows;
};

int print_chain(const std::vector<ChainStep>& chain, Format f) {
  if (f == Format::json) {
    Json out = Json::array();
    for (const auto& s : chain) out.push_back(Json{{"step", s.label}, {"rows", to_json(s.rows)}});
    std::cout << out.dump() << "\n";
    return kOk;
  }
  for (const auto& s : chain) {
    if (f == Format::latex) {
      std::cout << "% " << s.label << "\n" << to_latex(rows_tableau(s.rows));
    } else {
      std::cout << s.label << "  " << s.rows.word().str() << "\n" << rows_tableau(s.rows).str();
    }
  }
  return kOk;
}

// Applies the lowest effective drop_i until none moves.
int cmd_drop(const std::string& arg, Format f) {
  auto t = IncreasingRows::from_word(parse_reduced_word(arg));
  std::vector<ChainStep> chain{{"start", t}};
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 1; i < t.count() && !moved; ++i) {
      auto next = drop_i(t, i);
      if (next != t) {
        t = std::move(next);
        chain.push_back({"drop_" + std::to_string(i), t});
        moved = true;
      }
    }
  }
  return print_chain(chain, f);
}

int cmd_lift(const std::string& arg, Format f) {
  auto t = IncreasingRows::from_word(parse_reduced_word(arg));
  if (!t.is_increasing_young()) throw UsageError("lift needs the reading word of an increasing Young tableau");
  std::vector<ChainStep> chain{{"start", t}};
  for (int i : lift_canonical(t).steps) {
    t = lift_i(t, i);
    chain.push_back({"lift_" + std::to_string(i), t});
  }
  return print_chain(chain, f);
}

int cmd_insert(const std::string& arg, bool weak, bool trace_on, Format f) {
  const auto rho = parse_reduced_word(arg);
  CorrespondenceTrace trace;
  const auto pair = weak ? weak_correspondence(rho, &trace) : eg_correspondence(rho, &trace);
  if (f == Format::json) {
    Json out{{"insertion", to_json(pair.insertion)}, {"recording", to_json(pair.recording)}};
    if (trace_on) {
      Json steps = Json::array();
      for (std::size_t k = 0; k < trace.letters.size(); ++k)
        steps.push_back(Json{{"letter", trace.letters[k]},
                             {"insertion", to_json(trace.insertion[k])},
                             {"recording", to_json(trace.recording[k])}});
      out["trace"] = steps;
    }
    std::cout << out.dump() << "\n";
    return kOk;
  }
  if (trace_on)
    for (std::size_t k = 0; k < trace.letters.size(); ++k)
      std::cout << "insert " << trace.letters[k] << "\n"
                << render(trace.insertion[k], f) << "recording\n"
                << render(trace.recording[k], f) << "\n";
  std::cout << "P\n" << render(pair.insertion, f) << "Q\n" << render(pair.recording, f);
  return kOk;
}

int cmd_schubert(const std::string& arg, const std::string& basis, Format f) {
  const auto w = parse_permutation(arg);
  if (basis == "monomial") {
    const auto p = schubert(w);
    if (f == Format::json) std::cout << to_json(p).dump() << "\n";
    else std::cout << (f == Format::latex ? to_latex(p) : p.str()) << "\n";
  } else if (basis == "slide") {
    const auto terms = schubert_slide_expansion(w);
    if (f == Format::json) {
      Json out = Json::array();
      for (const auto& [a, k] : terms) out.push_back(Json{{"weight", a.parts}, {"coeff", k}});
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& [a, k] : terms) std::cout << k << " " << a.str() << "\n";
    }
  } else {
    const auto keys = demazure_expansion(w);
    if (f == Format::json) {
      Json out = Json::array();
      for (const auto& a : keys) out.push_back(a.parts);
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& a : keys) std::cout << a.str() << "\n";
    }
  }
  return kOk;
}

int cmd_stanley(const std::string& arg, const std::string& basis, int vars, Format f) {
  const auto w = parse_permutation(arg);
  const int m = vars > 0 ? vars : w.length() + 1;
  const auto p = stanley_function(w, m);
  Json terms = Json::array();
  std::ostringstream text;
  if (basis == "fundamental") {
    for (const auto& [alpha, k] : stanley_fundamental_expansion(w)) {
      terms.push_back(Json{{"composition", alpha.parts}, {"coeff", k}});
      text << k << " " << alpha.str() << "\n";
    }
  } else {
    for (const auto& lambda : schur_expansion(w)) {
      terms.push_back(lambda.parts);
      text << lambda.str() << "\n";
    }
  }
  if (f == Format::json) {
    std::cout << Json{{"basis", basis}, {"vars", m}, {"terms", terms}, {"polynomial", to_json(p)}}.dump() << "\n";
  } else {
    std::cout << text.str() << "= " << (f == Format::latex ? to_latex(p) : p.str()) << "\n";
  }
  return kOk;
}

int cmd_demazure(const std::string& arg, Format f) {
  const auto w = parse_permutation(arg);
  const int n = schubert_variables(w);
  auto words = yamanouchi_words(w);
  std::vector<std::pair<WeakComposition, ReducedWord>> rows;
  for (const auto& rho : words) rows.emplace_back(*weak_descent_composition(rho, n), rho);
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (f == Format::json) {
    Json out = Json::array();
    for (const auto& [a, rho] : rows) out.push_back(Json{{"weight", a.parts}, {"yamanouchi", to_json(rho)}});
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& [a, rho] : rows) std::cout << a.str() << "  " << rho.str() << "\n";
  }
  return kOk;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ',');)
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int cmd_verify(int max_rank, const std::string& identities, int jobs, Format f) {
  std::vector<VerifyRecord> records;
  try {
    records = verify(max_rank, split_names(identities), jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::size_t failed = 0;
  for (const auto& r : records) failed += !r.passed;
  if (f == Format::json) {
    Json out = Json::array();
    for (const auto& r : records) out.push_back(to_json(r));
    std::cout << out.dump(1) << "\n";
  } else {
    for (const auto& r : records)
      if (!r.passed) std::cout << "FAIL " << r.identity << " " << r.permutation.str() << " " << *r.witness << "\n";
    std::cout << records.size() - failed << "/" << records.size() << " checks passed\n";
  }
  return failed ? kVerifyFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words, Schubert polynomials and weak Edelman-Greene insertion"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

  std::string arg;
  auto* words = app.add_subcommand("words", "Reduced words of a permutation");
  words->add_option("permutation", arg)->required();
  auto* classes = app.add_subcommand("classes", "Coxeter-Knuth classes with Schur and Demazure labels");
  classes->add_option("permutation", arg)->required();
  auto* drop = app.add_subcommand("drop", "Drop chain from a reduced word to an increasing tableau");
  drop->add_option("word", arg)->required();
  auto* lift = app.add_subcommand("lift", "Canonical lift chain from an increasing tableau word");
  lift->add_option("word", arg)->required();

  bool weak = false, trace = false, json_flag = false;
  auto* insert = app.add_subcommand("insert", "EG or weak insertion of a reduced word");
  insert->add_option("word", arg)->required();
  insert->add_flag("--weak", weak, "Weak insertion");
  insert->add_flag("--trace", trace, "Print every intermediate pair");
  insert->add_flag("--json", json_flag, "Same as --format json");

  std::string basis;
  auto* schub = app.add_subcommand("schubert", "Schubert polynomial");
  schub->add_option("permutation", arg)->required();
  schub->add_option("--basis", basis, "slide, demazure or monomial")
      ->default_val("slide")
      ->check(CLI::IsMember({"slide", "demazure", "monomial"}));

  int vars = 0;
  auto* stan = app.add_subcommand("stanley", "Stanley symmetric function");
  stan->add_option("permutation", arg)->required();
  stan->add_option("--basis", basis, "fundamental or schur")
      ->default_val("schur")
      ->check(CLI::IsMember({"fundamental", "schur"}));
  stan->add_option("--vars", vars, "Number of variables (default length + 1)")->check(CLI::PositiveNumber);

  auto* dem = app.add_subcommand("demazure", "Demazure expansion with Yamanouchi words");
  dem->add_option("permutation", arg)->required();

  int max_rank = 5, jobs = 1;
  std::string identities;
  auto* ver = app.add_subcommand("verify", "Check every identity over all permutations up to a rank");
  ver->add_option("--max-rank", max_rank, "Largest rank")->check(CLI::Range(1, 9));
  ver->add_option("--identities", identities, "Comma-separated subset of A,B,C,fibers,nil-hecke,yamanouchi,phi");
  ver->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  Format f = format == "json" ? Format::json : format == "latex" ? Format::latex : Format::text;
  if (json_flag) f = Format::json;
  try {
    if (*words) return cmd_words(arg, f);
    if (*classes) return cmd_classes(arg, f);
    if (*drop) return cmd_drop(arg, f);
    if (*lift) return cmd_lift(arg, f);
    if (*insert) return cmd_insert(arg, weak, trace, f);
    if (*schub) return cmd_schubert(arg, basis, f);
    if (*stan) return cmd_stanley(arg, basis, vars, f);
    if (*dem) return cmd_demazure(arg, f);
    if (*ver) return cmd_verify(max_rank, identities, jobs, f);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
