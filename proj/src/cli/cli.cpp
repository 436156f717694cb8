#include "christoffel/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "christoffel/balance.hpp"
#include "christoffel/christoffel.hpp"
#include "christoffel/counting.hpp"
#include "christoffel/errors.hpp"
#include "christoffel/farey.hpp"
#include "christoffel/forbidden.hpp"
#include "christoffel/render.hpp"

namespace christoffel::cli {

namespace {

using Json = nlohmann::ordered_json;

// Cap or argument-shape violations detected by the command layer itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  bool json = false;
  std::string output_path;
};

struct GenArgs {
  std::string kind;
  std::int64_t a = 0;
  std::int64_t b = 0;
};

struct CheckArgs {
  std::string property;
  std::string word;
};

struct CountArgs {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool audit = false;
  bool oracle = false;
};

struct EnumArgs {
  std::string kind;
  std::vector<std::int64_t> sizes;
  bool allow_large = false;
};

struct RenderArgs {
  std::string word;
  bool bar = false;
  bool segment = false;
  std::string format = "ascii";
  std::int64_t cell_size = 20;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require_pair(std::int64_t a, std::int64_t b, std::int64_t cap) {
  if (a < 0 || b < 0) throw PreconditionError("a and b must be nonnegative");
  if (a + b > cap) {
    throw UsageError("a + b = " + std::to_string(a + b) + " exceeds the limit of " +
                     std::to_string(cap));
  }
}

// ---------------------------------------------------------------- gen

int cmd_gen(const GlobalOptions& opts, const GenArgs& args, std::ostream& out) {
  require_pair(args.a, args.b, kMaxGenLength);
  if (args.kind == "matrix") {
    if (args.a + args.b > kMaxMatrixOrder) {
      throw UsageError("matrix order is limited to " + std::to_string(kMaxMatrixOrder));
    }
    const ChristoffelMatrix m = christoffel_matrix(args.a, args.b);
    if (opts.json) {
      Json rows = Json::array();
      for (const BinaryWord& r : m.rows()) rows.push_back(r.str());
      emit(out, Json{{"a", args.a}, {"b", args.b}, {"rows", rows}});
    } else {
      out << m.str();
    }
    return kExitOk;
  }

  BinaryWord w;
  if (args.kind == "lower") {
    w = lower_christoffel(args.a, args.b);
  } else if (args.kind == "upper") {
    w = upper_christoffel(args.a, args.b);
  } else {
    w = central_word(args.a, args.b);
  }
  if (opts.json) {
    emit(out, Json{{"a", args.a}, {"b", args.b}, {"kind", args.kind}, {"word", w.str()}});
  } else {
    out << w << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckResult {
  bool holds = false;
  std::vector<std::string> notes;  // text mode lines
  Json extra = Json::object();     // JSON mode fields
};

CheckResult check_property(const std::string& property, const BinaryWord& w) {
  CheckResult r;
  if (property == "balanced") {
    const auto witness = unbalance_witness(w);
    r.holds = !witness;
    if (witness) {
      std::ostringstream line;
      line << "witness v=\"" << witness->v << "\" (0v0 at " << witness->pos0 << ", 1v1 at "
           << witness->pos1 << ")";
      r.notes.push_back(line.str());
      r.extra["witness"] = {{"v", witness->v.str()}, {"pos0", witness->pos0}, {"pos1", witness->pos1}};
    }
  } else if (property == "circular") {
    if (w.empty()) throw PreconditionError("circular balance needs a nonempty word");
    r.holds = is_circularly_balanced(w);
    if (!r.holds) {
      for (std::size_t k = 0; k < w.size(); ++k) {
        const BinaryWord rot = rotate(w, k);
        if (!is_balanced(rot)) {
          r.notes.push_back("unbalanced conjugate " + rot.str());
          r.extra["unbalanced_conjugate"] = rot.str();
          break;
        }
      }
    }
  } else if (property == "prefix-normal") {
    r.holds = is_prefix_normal(w);
  } else if (property == "plc") {
    r.holds = is_plc(w);
    if (r.holds) {
      const BinaryWord root = plc_root(w);
      r.notes.push_back("root " + root.str());
      r.extra["root"] = root.str();
    }
  } else if (property == "central") {
    r.holds = is_central(w);
    if (r.holds) {
      const auto parts = central_decompose(w);
      if (const auto* power = std::get_if<PowerOfLetter>(&parts)) {
        r.notes.push_back("power of letter " + std::to_string(power->letter) + "^" +
                          std::to_string(power->count));
        r.extra["power"] = {{"letter", power->letter}, {"count", power->count}};
      } else {
        const auto& pq = std::get<PalindromePair>(parts);
        r.notes.push_back("P=\"" + pq.p.str() + "\" Q=\"" + pq.q.str() + "\"");
        r.extra["P"] = pq.p.str();
        r.extra["Q"] = pq.q.str();
      }
    }
  } else if (property == "lyndon") {
    r.holds = is_lyndon(w);
  } else if (property == "mf") {
    r.holds = is_minimal_forbidden(w);
  } else {
    r.holds = in_digital_bar(w);
  }
  return r;
}

int cmd_check(const GlobalOptions& opts, const CheckArgs& args, std::ostream& out) {
  const BinaryWord w = BinaryWord::parse(args.word);
  const CheckResult r = check_property(args.property, w);
  if (opts.json) {
    Json j{{"property", args.property}, {"word", w.str()}, {"holds", r.holds}};
    for (const auto& [key, value] : r.extra.items()) j[key] = value;
    emit(out, j);
  } else {
    out << args.property << ": " << (r.holds ? "yes" : "no") << '\n';
    for (const std::string& line : r.notes) out << line << '\n';
  }
  return r.holds ? kExitOk : kExitFails;
}

// ---------------------------------------------------------------- count

Json report_json(const CountReport& report) {
  Json terms = Json::array();
  for (const CountTerm& t : report.terms) {
    terms.push_back(Json{{"alpha", t.alpha},
                         {"beta", t.beta},
                         {"kind", t.kind == TermKind::kHeavy ? "heavy" : "light"},
                         {"N", t.n_value},
                         {"H", t.h_value},
                         {"contribution", t.contribution}});
  }
  return Json{{"a", report.target.zeros},
              {"b", report.target.ones},
              {"terms", terms},
              {"total", report.total}};
}

int cmd_count(const GlobalOptions& opts, const CountArgs& args, std::ostream& out) {
  require_pair(args.a, args.b, kMaxGenLength);
  std::optional<std::int64_t> oracle;
  if (args.oracle) {
    if (args.a + args.b > kOracleCap) {
      throw UsageError("--oracle is limited to a + b <= " + std::to_string(kOracleCap));
    }
    oracle = brute_count_balanced(args.a, args.b, kOracleCap);
  }
  const CountReport report = count_balanced_report(args.a, args.b);
  if (opts.json || args.audit) {
    Json j = report_json(report);
    if (oracle) j["oracle"] = *oracle;
    emit(out, j);
  } else {
    out << report.total << '\n';
    if (oracle) {
      out << "oracle " << *oracle << (*oracle == report.total ? " (match)" : " (MISMATCH)")
          << '\n';
    }
  }
  return oracle && *oracle != report.total ? kExitFails : kExitOk;
}

// ---------------------------------------------------------------- enum

Json plc_json(const PlcEntry& e) {
  return Json{{"word", e.word.str()}, {"root", e.root.str()}, {"fraction", e.fraction.str()}};
}

int cmd_enum(const GlobalOptions& opts, const EnumArgs& args, std::ostream& out) {
  const std::size_t expected = args.kind == "balanced" ? 2 : 1;
  if (args.sizes.size() != expected) {
    throw UsageError("enum " + args.kind + " takes " + std::to_string(expected) +
                     (expected == 1 ? " size argument" : " size arguments"));
  }
  for (std::int64_t s : args.sizes) {
    if (s < 0) throw PreconditionError("sizes must be nonnegative");
  }
  std::int64_t total = 0;
  for (std::int64_t s : args.sizes) total += s;
  if (total > kEnumCap && !args.allow_large) {
    throw UsageError("size " + std::to_string(total) + " exceeds the enumeration cap of " +
                     std::to_string(kEnumCap) + "; pass --allow-large to proceed");
  }

  if (args.kind == "balanced") {
    const std::vector<BinaryWord> words = enumerate_balanced(args.sizes[0], args.sizes[1]);
    if (opts.json) {
      Json j = Json::array();
      for (const BinaryWord& w : words) j.push_back(w.str());
      emit(out, j);
    } else {
      for (const BinaryWord& w : words) out << w << '\n';
    }
    return kExitOk;
  }

  const auto n = static_cast<std::size_t>(args.sizes[0]);
  if (args.kind == "plc") {
    const std::vector<PlcEntry> entries = enumerate_plc(n);
    if (opts.json) {
      Json j = Json::array();
      for (const PlcEntry& e : entries) j.push_back(plc_json(e));
      emit(out, j);
    } else {
      for (const PlcEntry& e : entries) out << e.word << '\n';
    }
  } else if (args.kind == "farey") {
    const auto pairs = plc_farey_bijection(n);
    if (opts.json) {
      Json j = Json::array();
      for (const auto& [entry, fraction] : pairs) j.push_back(plc_json(entry));
      emit(out, j);
    } else {
      for (const auto& [entry, fraction] : pairs) {
        out << std::left << std::setw(static_cast<int>(n) + 2) << entry.word.str()
            << fraction.str() << '\n';
      }
    }
  } else if (args.kind == "mf") {
    const std::vector<MFWord> words = enumerate_mf(n);
    if (opts.json) {
      Json j = Json::array();
      for (const MFWord& mf : words) j.push_back(Json{{"word", mf.word.str()}, {"source", mf.source.str()}});
      emit(out, j);
    } else {
      for (const MFWord& mf : words) out << mf.word << '\n';
    }
  } else {
    const std::vector<BinaryWord> words = enumerate_mab(n);
    if (opts.json) {
      Json j = Json::array();
      for (const BinaryWord& w : words) j.push_back(w.str());
      emit(out, j);
    } else {
      for (const BinaryWord& w : words) out << w << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------- render

int cmd_render(const GlobalOptions& opts, const RenderArgs& args, std::ostream& out) {
  RenderSpec spec;
  spec.word = BinaryWord::parse(args.word);
  spec.show_bar = args.bar;
  spec.show_segment = args.segment;
  spec.format = args.format == "svg" ? RenderFormat::kSvg : RenderFormat::kAscii;
  spec.cell_size = args.cell_size;
  const std::string document = render(spec);
  if (opts.json) {
    emit(out, Json{{"word", spec.word.str()}, {"format", args.format}, {"document", document}});
  } else {
    out << document;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Christoffel words, balanced words and their digital geometry", "christoffel"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_flag("--json", opts.json, "Emit JSON instead of text");
  app.add_option("--output", opts.output_path, "Write the result to this file");

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a Christoffel object for (a,b)");
  gen_cmd->add_option("kind", gen.kind, "lower | upper | central | matrix")
      ->required()
      ->check(CLI::IsMember({"lower", "upper", "central", "matrix"}));
  gen_cmd->add_option("a", gen.a, "number of zeros")->required();
  gen_cmd->add_option("b", gen.b, "number of ones")->required();

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "Test a property of a word (exit 0 yes, 1 no)");
  check_cmd->add_option("property", check.property)
      ->required()
      ->check(CLI::IsMember(
          {"balanced", "circular", "prefix-normal", "plc", "central", "lyndon", "mf", "in-bar"}));
  check_cmd->add_option("word", check.word, "word over {0,1}; \"\" is the empty word")->required();

  CountArgs count;
  CLI::App* count_cmd = app.add_subcommand("count", "Count balanced words with Parikh vector (a,b)");
  count_cmd->add_option("a", count.a)->required();
  count_cmd->add_option("b", count.b)->required();
  count_cmd->add_flag("--audit", count.audit, "Print the per-(alpha,beta) term breakdown as JSON");
  count_cmd->add_flag("--oracle", count.oracle,
                      "Also count by enumeration and compare (a + b <= 20)");

  EnumArgs enumeration;
  CLI::App* enum_cmd = app.add_subcommand("enum", "Enumerate words in lexicographic order");
  enum_cmd->add_option("kind", enumeration.kind, "balanced A B | plc N | mf N | mab N | farey N")
      ->required()
      ->check(CLI::IsMember({"balanced", "plc", "mf", "mab", "farey"}));
  enum_cmd->add_option("sizes", enumeration.sizes)->required()->expected(1, 2);
  enum_cmd->add_flag("--allow-large", enumeration.allow_large,
                     "Acknowledge sizes above the default cap of 26");

  RenderArgs rendering;
  CLI::App* render_cmd = app.add_subcommand("render", "Draw the lattice path of a word");
  render_cmd->add_option("word", rendering.word)->required();
  render_cmd->add_flag("--bar", rendering.bar, "Draw the lower and upper Christoffel boundaries");
  render_cmd->add_flag("--segment", rendering.segment, "Draw the Euclidean segment");
  render_cmd->add_option("--format", rendering.format)
      ->check(CLI::IsMember({"ascii", "svg"}));
  render_cmd->add_option("--cell-size", rendering.cell_size, "SVG pixels per lattice unit")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*gen_cmd) {
      code = cmd_gen(opts, gen, buffer);
    } else if (*check_cmd) {
      code = cmd_check(opts, check, buffer);
    } else if (*count_cmd) {
      code = cmd_count(opts, count, buffer);
    } else if (*enum_cmd) {
      code = cmd_enum(opts, enumeration, buffer);
    } else {
      code = cmd_render(opts, rendering, buffer);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BoundsError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  if (opts.output_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(opts.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << opts.output_path << " for writing\n";
      return kExitInvalid;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace christoffel::cli
