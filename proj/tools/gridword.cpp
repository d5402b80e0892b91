// Command-line front end: max, construct, verify, sweep, gamma, unique.
//
// Exit codes: 0 success, 1 verify found a degree violation, 2 usage or
// parse error, 3 a construction missed its target, 4 capacity exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gridword/gridword.hpp"

namespace {

using namespace gridword;

constexpr int kExitUsage = 2;
constexpr int kExitConsistency = 3;
constexpr int kExitCapacity = 4;

int default_profile_limit() {
  if (const char* env = std::getenv("GRIDWORD_PROFILE_LIMIT")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed GRIDWORD_PROFILE_LIMIT=" << env << "\n";
    }
  }
  return DominationOptions{}.profile_limit;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Accepts the text format or the JSON rendering.
Word2D parse_grid(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    ordered_json j;
    try {
      j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw parse_error(e.what(), 1, e.byte);
    }
    return word_from_json(j);
  }
  return parse_text(text);
}

bool valid_d(int d) { return d >= 0 && d <= 4; }

int usage_error(const CLI::App& sub, const std::string& msg) {
  std::cerr << "error: " << msg << "\n\n" << sub.help();
  return kExitUsage;
}

void emit_word(const Word2D& w, const std::string& format) {
  if (format == "json")
    std::cout << to_json(w).dump() << "\n";
  else if (format == "svg")
    std::cout << render_svg(w);
  else if (format == "tikz")
    std::cout << render_tikz(w);
  else
    std::cout << render_text(w);
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum bounded-degree binary words on rectangles"};
  // -h is the height everywhere.
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);

  int d = -1, h = 0, w = 0;
  int h_max = 0, w_max = 0, both_max = 0;
  int profile_limit = default_profile_limit();
  int width_limit = OracleOptions{}.width_limit;
  bool json = false, odd_only = false, show_witness = false;
  std::string format = "text", path;
  std::vector<int> d_list;
  std::uint64_t cap = OracleOptions{}.enumeration_cap;

  auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->add_option("--profile-limit", profile_limit,
                    "Largest domination profile width")
        ->check(CLI::PositiveNumber);
  };
  auto add_dims = [&](CLI::App* sub) {
    sub->add_option("-h,--height", h, "Height")->required()->check(
        CLI::PositiveNumber);
    sub->add_option("-w,--width", w, "Width")->required()->check(
        CLI::PositiveNumber);
  };

  auto* max = app.add_subcommand("max", "Print m_d(h, w)");
  add_common(max);
  max->add_option("-d", d, "Degree bound in [0,4]")->required();
  add_dims(max);
  max->add_flag("--json", json, "JSON output");

  auto* cons = app.add_subcommand("construct", "Print a d-full word");
  add_common(cons);
  cons->add_option("-d", d, "Degree bound in [0,4]")->required();
  add_dims(cons);
  cons->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "svg", "tikz"}));
  cons->add_flag("--json", json, "Same as --format json");

  auto* ver = app.add_subcommand("verify", "Check a grid against a bound");
  add_common(ver);
  ver->add_option("path", path, "Grid file, or - for standard input")
      ->required();
  ver->add_option("-d", d, "Degree bound in [0,4]")->required();
  ver->add_flag("--json", json, "JSON output");

  auto* sweep = app.add_subcommand("sweep", "Compare formula and oracle");
  add_common(sweep);
  sweep->add_option("-d", d_list, "Degree bounds, comma separated")
      ->delimiter(',')
      ->required();
  sweep->add_option("--max", both_max, "Bound for both h and w")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--h-max", h_max, "Largest height")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--w-max", w_max, "Largest width")
      ->check(CLI::PositiveNumber);
  sweep->add_option("-w,--width", w, "Only this width")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--odd-only", odd_only, "Only odd h and odd w");
  sweep->add_option("--width-limit", width_limit, "Largest oracle width")
      ->check(CLI::PositiveNumber);

  auto* gam = app.add_subcommand("gamma", "Domination number of a grid");
  add_common(gam);
  add_dims(gam);
  gam->add_flag("--witness", show_witness, "Also print a minimum set");
  gam->add_flag("--json", json, "JSON output");

  auto* uniq = app.add_subcommand("unique", "Count d-full words up to symmetry");
  add_common(uniq);
  uniq->add_option("-d", d, "Degree bound in [0,4]")->required();
  add_dims(uniq);
  uniq->add_option("--width-limit", width_limit, "Largest oracle width")
      ->check(CLI::PositiveNumber);
  uniq->add_option("--cap", cap, "Largest number of words to enumerate");
  uniq->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  DominationOptions dom;
  dom.profile_limit = profile_limit;
  OracleOptions orc;
  orc.width_limit = width_limit;
  orc.enumeration_cap = cap;

  try {
    if (*max) {
      if (!valid_d(d)) return usage_error(*max, "-d must lie in [0,4]");
      const auto m = max_filled(d, h, w, dom);
      if (json) {
        ordered_json j;
        j["d"] = d;
        j["h"] = h;
        j["w"] = w;
        j["max"] = m;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << m << "\n";
      }
      return 0;
    }

    if (*cons) {
      if (!valid_d(d)) return usage_error(*cons, "-d must lie in [0,4]");
      ConstructOptions opt{dom, orc};
      try {
        emit_word(construct(d, h, w, opt), json ? "json" : format);
      } catch (const consistency_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConsistency;
      }
      return 0;
    }

    if (*ver) {
      if (!valid_d(d)) return usage_error(*ver, "-d must lie in [0,4]");
      std::optional<Word2D> word;
      try {
        word = parse_grid(read_input(path));
      } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
      } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
      }
      const bool bounded = is_degree_bounded(*word, d);
      const auto count = filled_count(*word);
      std::optional<std::int64_t> target;
      std::string target_note;
      try {
        target = max_filled(d, word->height(), word->width(), dom);
      } catch (const capacity_error& e) {
        target_note = e.what();
      }
      const bool full = bounded && target && count == *target;
      if (json) {
        ordered_json j;
        j["h"] = word->height();
        j["w"] = word->width();
        j["d"] = d;
        j["filled"] = count;
        j["max_degree"] = max_degree(*word);
        j["bounded"] = bounded;
        j["excess"] = excess(*word).str();
        j["row_distribution"] = row_distribution(*word);
        if (target)
          j["max"] = *target;
        else
          j["max"] = nullptr;
        j["full"] = full;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "size: " << word->height() << "x" << word->width() << "\n"
                  << "filled: " << count << "\n"
                  << "max degree: " << max_degree(*word) << "\n"
                  << "degree <= " << d << ": " << (bounded ? "yes" : "no")
                  << "\n"
                  << "excess: " << excess(*word).str() << "\n"
                  << "row distribution: " << join(row_distribution(*word))
                  << "\n";
        if (target)
          std::cout << "m_" << d << ": " << *target << "\n"
                    << d << "-full: " << (full ? "yes" : "no") << "\n";
        else
          std::cout << "m_" << d << ": unavailable (" << target_note << ")\n";
      }
      return bounded ? 0 : 1;
    }

    if (*sweep) {
      for (int x : d_list)
        if (!valid_d(x)) return usage_error(*sweep, "-d must lie in [0,4]");
      SweepOptions opt;
      opt.odd_only = odd_only;
      opt.oracle = orc;
      opt.domination = dom;
      int hm = h_max ? h_max : both_max;
      int wm = w_max ? w_max : both_max;
      if (w) {
        opt.w_min = w;
        wm = w;
      }
      if (!hm || !wm)
        return usage_error(*sweep, "give --max, or --h-max with --w-max or -w");
      const auto reports = verify_theorem(d_list, hm, wm, opt);
      std::vector<const MaxReport*> bad, skipped;
      for (const auto& r : reports) {
        std::cout << to_json(r).dump() << "\n";
        if (r.skipped)
          skipped.push_back(&r);
        else if (!r.agrees)
          bad.push_back(&r);
      }
      std::cerr << "summary: " << reports.size() << " cells, "
                << reports.size() - bad.size() - skipped.size() << " agree, "
                << bad.size() << " disagree, " << skipped.size()
                << " skipped\n";
      for (const auto* r : bad)
        std::cerr << "  disagree d=" << r->d << " h=" << r->h << " w=" << r->w
                  << " formula=" << r->formula << " oracle=" << r->oracle
                  << "\n";
      for (const auto* r : skipped)
        std::cerr << "  skipped d=" << r->d << " h=" << r->h << " w=" << r->w
                  << ": " << r->note << "\n";
      return bad.empty() ? 0 : 1;
    }

    if (*gam) {
      if (json || show_witness) {
        const auto wit = min_dominating_set(h, w, dom);
        if (json) {
          ordered_json j = to_json(wit);
          if (!show_witness) j.erase("chosen");
          std::cout << j.dump() << "\n";
        } else {
          std::cout << wit.gamma << "\n";
          for (const Pos& p : wit.chosen)
            std::cout << p.i << " " << p.j << "\n";
        }
      } else {
        std::cout << gamma(h, w, dom) << "\n";
      }
      return 0;
    }

    if (*uniq) {
      if (!valid_d(d)) return usage_error(*uniq, "-d must lie in [0,4]");
      try {
        const auto n = count_maximal(d, h, w, true, orc);
        // The conjecture covers d = 2 with h > w >= 5 and h = w (mod 3).
        const int hi = std::max(h, w), lo = std::min(h, w);
        const bool in_scope = d == 2 && hi > lo && lo >= 5 && (hi - lo) % 3 == 0;
        const std::string verdict =
            n == 1      ? "consistent"
            : in_scope  ? "counterexample at (" + std::to_string(h) + "," +
                             std::to_string(w) + ")"
                        : "not unique, outside the conjectured range";
        if (json) {
          ordered_json j;
          j["d"] = d;
          j["h"] = h;
          j["w"] = w;
          j["count"] = n;
          j["verdict"] = verdict;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << n << "\n" << "uniqueness: " << verdict << "\n";
        }
      } catch (const partial_result_error& e) {
        std::cerr << e.what() << "; at least " << e.lower_bound()
                  << " orbits\n";
        return kExitCapacity;
      }
      return 0;
    }
  } catch (const capacity_error& e) {
    std::cerr << "capacity exceeded: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
