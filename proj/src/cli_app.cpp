#include "demazure/cli_app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "demazure/cartan.hpp"
#include "demazure/crystal.hpp"
#include "demazure/quiver.hpp"
#include "demazure/sl2.hpp"
#include "demazure/verify.hpp"
#include "demazure/weyl.hpp"

namespace demazure {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitAssert = 3;

// accepts "0,1,0" as well as the JSON array form "[0,1,0]"
WeylWord parse_word_list(std::string text) {
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') {
      throw Error(ErrorCode::bad_input, "unterminated word array: " + text);
    }
    text = text.substr(1, text.size() - 2);
  }
  WeylWord w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      w.letters.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::bad_input, "bad word letter: " + item);
    }
  }
  return w;
}

// "+2" / "-3" / "2" (sign defaults to +)
std::pair<int, char> parse_wn_flag(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::bad_input, "empty --wn value");
  char sign = '+';
  std::string digits = text;
  if (text[0] == '+' || text[0] == '-') {
    sign = text[0];
    digits = text.substr(1);
  }
  try {
    int n = std::stoi(digits);
    if (n < 0) throw std::invalid_argument("negative");
    return {n, sign};
  } catch (const std::exception&) {
    throw Error(ErrorCode::bad_input, "bad --wn value: " + text);
  }
}

DimVector parse_dim_list(const std::string& text) {
  DimVector d;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      d.push_back(std::stoll(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::bad_input, "bad dimension entry: " + item);
    }
  }
  return d;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::bad_input, "cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string word_display(const WeylWord& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < w.letters.size(); ++k) {
    out += (k ? " r_" : "r_") + std::to_string(w.letters[k]);
  }
  return out;
}

std::string join(const DimVector& v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    out += (k ? "," : "") + std::to_string(v[k]);
  }
  return out;
}

void print_character(std::ostream& out, const Character& ch) {
  for (const auto& [v, mult] : ch.mult) {
    out << join(ch.d) << " | " << join(v) << " | " << mult << "\n";
  }
}

struct DemazureReport {
  WeylWord word;
  long long size = 0;
  std::optional<long long> formula;
  bool agree = true;
  Character character;
};

DemazureReport make_demazure_report(long long s, long long t,
                                    const std::string& wn_flag,
                                    const std::string& word_flag) {
  CartanMatrix C(sl2_affine_graph());
  WeylWord word;
  if (!wn_flag.empty()) {
    auto [n, sign] = parse_wn_flag(wn_flag);
    word = wn(n, sign);
  } else {
    word = parse_word_list(word_flag);
  }
  DemazureReport rep;
  rep.word = word;
  auto set = demazure_subset(C, sl2::ground_state(s, t), word);
  rep.size = set.size();
  rep.character = character(set);
  // every nonempty reduced word here is alternating, hence some w_n^{sign}
  WeylWord red = reduce(C, word);
  if (!red.letters.empty()) {
    char sign = (red.letters.back() == 1) ? '-' : '+';
    rep.formula = sl2::demazure_dimension(s, t, red.size(), sign);
    rep.agree = (*rep.formula == rep.size);
  }
  return rep;
}

int cmd_demazure(std::ostream& out, long long s, long long t,
                 const std::string& wn_flag, const std::string& word_flag,
                 const std::string& render) {
  DemazureReport rep = make_demazure_report(s, t, wn_flag, word_flag);
  out << "lambda: s=" << s << " t=" << t << "\n";
  out << "word: " << word_display(rep.word) << "\n";
  out << "size: " << rep.size << "\n";
  if (rep.formula) {
    out << "formula: " << *rep.formula << "\n";
    out << "agreement: " << (rep.agree ? "PASS" : "FAIL") << "\n";
  } else {
    out << "formula: n/a\n";
  }
  out << "character (d | v | mult):\n";
  print_character(out, rep.character);
  if (!render.empty()) {
    CartanMatrix C(sl2_affine_graph());
    auto set = demazure_subset(C, sl2::ground_state(s, t), rep.word);
    DimVector target = extremal_dim_vector(C, {s, t}, rep.word);
    for (const auto& [key, p] : set.elements) {
      if (p.weight().v != target) continue;
      out << "extremal element (weight w lambda):\n";
      if (render == "json") {
        out << sl2::pyramid_to_json_text(p) << "\n";
      } else {
        out << sl2::render_ascii(p);
      }
      break;
    }
  }
  return rep.agree ? kExitOk : kExitAssert;
}

int cmd_character(std::ostream& out, long long s, long long t,
                  const std::string& wn_flag, const std::string& word_flag) {
  DemazureReport rep = make_demazure_report(s, t, wn_flag, word_flag);
  print_character(out, rep.character);
  return kExitOk;
}

int cmd_graph(std::ostream& out, long long s, long long t, int depth,
              const std::string& format, bool swapped) {
  CrystalGraph g = generate(sl2::ground_state(s, t, swapped), depth);
  if (format == "dot") {
    out << export_graph_dot(g);
  } else {
    out << export_graph_json(g) << "\n";
  }
  return kExitOk;
}

int cmd_extremal(std::ostream& out, const std::string& graph_file,
                 const std::string& d_flag, int maxlen) {
  DynkinGraph g = graph_file.empty()
                      ? sl2_affine_graph()
                      : DynkinGraph::from_json_text(read_file(graph_file));
  CartanMatrix C(g);
  DimVector d = parse_dim_list(d_flag);
  if (static_cast<int>(d.size()) != C.rank()) {
    throw Error(ErrorCode::bad_input, "--d length must match the vertex count");
  }
  out << "w | v_w | dim\n";
  bool all_zero = true;
  for (const WeylWord& w : elements_up_to_length(C, maxlen)) {
    DimVector v = extremal_dim_vector(C, d, w);
    Rat dim = nakajima_dim(C, v, d);
    out << word_display(w) << " | " << join(v) << " | " << dim.get_str()
        << "\n";
    if (dim != 0) all_zero = false;
  }
  return all_zero ? kExitOk : kExitAssert;
}

int cmd_quiver_check(std::ostream& out, const std::string& rep_file,
                     const std::string& wn_flag, long long s_flag,
                     long long t_flag, bool st_given) {
  auto [q, rep] = rep_from_json_text(read_file(rep_file));
  if (st_given && (rep.d.size() != 2 || rep.d[0] != s_flag || rep.d[1] != t_flag)) {
    throw Error(ErrorCode::bad_input, "--s/--t disagree with the rep's d");
  }
  auto psi = moment_residual(q, rep);
  bool psi_zero = true;
  out << "moment residual zero:";
  for (size_t i = 0; i < psi.size(); ++i) {
    bool z = psi[i].is_zero();
    psi_zero = psi_zero && z;
    out << " v" << i << "=" << (z ? "yes" : "no");
  }
  out << "\n";
  auto order = nilpotency_order(q, rep);
  out << "nilpotency order: ";
  if (order) {
    out << *order << "\n";
  } else {
    out << "none\n";
  }
  out << "stable: " << (is_stable(q, rep) ? "yes" : "no") << "\n";
  if (!wn_flag.empty()) {
    auto [n, sign] = parse_wn_flag(wn_flag);
    WeylWord w = wn(n, sign);
    bool member = check_sl2_demazure_membership(q, rep, w);
    out << "demazure member (w = " << word_display(w)
        << "): " << (member ? "true" : "false") << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Demazure crystals for affine sl2 and quiver representation checks"};
  app.require_subcommand(1);

  long long s = 0, t = 0;
  std::string wn_flag, word_flag, format = "dot", graph_file, d_flag, rep_file;
  int depth = 0, maxlen = 0;
  bool swapped = false;

  std::string render;
  auto add_word_flags = [&](CLI::App* cmd) {
    cmd->add_option("--s", s, "coefficient of omega_0")->required();
    cmd->add_option("--t", t, "coefficient of omega_1")->required();
    auto* a = cmd->add_option("--wn", wn_flag, "alternating word, e.g. -2 or +3");
    auto* b = cmd->add_option("--word", word_flag,
                              "letters as 0,1,0 or [0,1,0], leftmost factor first");
    a->excludes(b);
  };

  CLI::App* dem = app.add_subcommand("demazure", "size, closed form and character");
  add_word_flags(dem);
  dem->add_option("--render", render, "draw the extremal element")
      ->check(CLI::IsMember({"ascii", "json"}));
  CLI::App* chr = app.add_subcommand("character", "character table only");
  add_word_flags(chr);

  CLI::App* gph = app.add_subcommand("graph", "crystal graph to a block bound");
  gph->add_option("--s", s)->required();
  gph->add_option("--t", t)->required();
  gph->add_option("--depth", depth, "number of f-applications")->required();
  gph->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  gph->add_flag("--swapped", swapped, "use the color-swapped picture");

  CLI::App* ext = app.add_subcommand("extremal", "extremal dimension vectors");
  ext->add_option("--graph", graph_file, "Dynkin graph JSON file");
  ext->add_option("--d", d_flag, "comma-separated d vector")->required();
  ext->add_option("--maxlen", maxlen)->required();

  CLI::App* qch = app.add_subcommand("quiver-check", "inspect a representation");
  qch->add_option("--rep", rep_file, "representation JSON file")->required();
  qch->add_option("--wn", wn_flag, "check Demazure membership for w_n^{sign}");
  CLI::Option* opt_s = qch->add_option("--s", s);
  CLI::Option* opt_t = qch->add_option("--t", t);
  opt_s->needs(opt_t);
  opt_t->needs(opt_s);

  CLI::App* ver = app.add_subcommand("verify", "run the acceptance suite");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (dem->parsed()) {
      if (wn_flag.empty() && word_flag.empty()) {
        throw Error(ErrorCode::bad_input, "need --wn or --word");
      }
      return cmd_demazure(out, s, t, wn_flag, word_flag, render);
    }
    if (chr->parsed()) {
      if (wn_flag.empty() && word_flag.empty()) {
        throw Error(ErrorCode::bad_input, "need --wn or --word");
      }
      return cmd_character(out, s, t, wn_flag, word_flag);
    }
    if (gph->parsed()) return cmd_graph(out, s, t, depth, format, swapped);
    if (ext->parsed()) return cmd_extremal(out, graph_file, d_flag, maxlen);
    if (qch->parsed()) {
      return cmd_quiver_check(out, rep_file, wn_flag, s, t,
                              opt_s->count() > 0);
    }
    if (ver->parsed()) {
      return all_passed(run_acceptance(out)) ? kExitOk : kExitAssert;
    }
  } catch (const Error& e) {
    err << error_name(e.code()) << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace demazure
